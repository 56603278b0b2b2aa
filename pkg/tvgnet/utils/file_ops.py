"""
File operations utilities for tvgnet.
"""
import logging
import os
import tempfile
from pathlib import Path
from typing import Union

logger = logging.getLogger(__name__)


def ensure_directory(directory: Union[str, Path]) -> Path:
    """
    Ensure a directory exists, creating it if necessary.

    Args:
        directory: Path to directory

    Returns:
        The directory path

    Raises:
        OSError: If the directory cannot be created
    """
    path = Path(directory)
    path.mkdir(parents=True, exist_ok=True)
    return path


def write_text_atomic(filepath: Union[str, Path], content: str, encoding: str = 'utf-8') -> Path:
    """
    Write a text file through a temporary file and an atomic rename.

    Readers never observe a half-written output.

    Args:
        filepath: Destination path
        content: Content to write
        encoding: File encoding

    Returns:
        The destination path
    """
    path = Path(filepath)
    ensure_directory(path.parent)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, 'w', encoding=encoding, newline='\n') as f:
            f.write(content)
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    logger.debug(f"Wrote {path}")
    return path


def write_bytes_atomic(filepath: Union[str, Path], content: bytes) -> Path:
    """Binary counterpart of ``write_text_atomic``."""
    path = Path(filepath)
    ensure_directory(path.parent)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, 'wb') as f:
            f.write(content)
        os.replace(tmp_name, path)
    except BaseException:
        Path(tmp_name).unlink(missing_ok=True)
        raise
    logger.debug(f"Wrote {path}")
    return path
