"""
Utility modules for tvgnet.
"""
from .file_ops import ensure_directory, write_bytes_atomic, write_text_atomic
from .logging import LogContext, PerformanceLogger, get_logger, setup_logging
from .validation import validate_input_path, validate_input_paths, validate_output_dir

__all__ = [
    "LogContext",
    "PerformanceLogger",
    "ensure_directory",
    "get_logger",
    "setup_logging",
    "validate_input_path",
    "validate_input_paths",
    "validate_output_dir",
    "write_bytes_atomic",
    "write_text_atomic",
]
