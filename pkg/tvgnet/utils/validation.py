"""
Validation utilities for tvgnet command inputs.
"""
import os
from pathlib import Path
from typing import Iterable, List, Union

from ..core.errors import InputError


def validate_input_path(input_path: Union[str, Path]) -> Path:
    """
    Validate that an input file exists and is readable.

    Args:
        input_path: Path to input file

    Returns:
        Resolved path

    Raises:
        InputError: If the path is missing, not a file or not readable
    """
    if not input_path or not isinstance(input_path, (str, Path)):
        raise InputError("input path must be a non-empty string")

    path = Path(input_path)
    if not path.exists():
        raise InputError(f"input file does not exist: {input_path}", source=str(input_path))
    if not path.is_file():
        raise InputError(f"input path is not a file: {input_path}", source=str(input_path))
    if not os.access(path, os.R_OK):
        raise InputError(f"input file is not readable: {input_path}", source=str(input_path))
    return path.resolve()


def validate_input_paths(input_paths: Iterable[Union[str, Path]]) -> List[Path]:
    """Validate several input files; at least one is required."""
    paths = [validate_input_path(p) for p in input_paths]
    if not paths:
        raise InputError("no input file given")
    return paths


def validate_output_dir(directory: Union[str, Path]) -> Path:
    """
    Validate that an output directory can be used.

    The directory may not exist yet, but the path must not be a file.

    Raises:
        InputError: If the path exists and is not a directory
    """
    path = Path(directory)
    if path.exists() and not path.is_dir():
        raise InputError(f"output path is not a directory: {directory}", source=str(directory))
    return path
