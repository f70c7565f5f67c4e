"""Provide centralized logging for rational-tiles.

Every module logs through the single loguru ``logger`` re-exported here.
``init_logger`` is called once by the CLI (tests may call it too); library
code never configures sinks itself.

Module Information:
    - Filename: logger.py
    - Module: logger
    - Location: src/rational_tiles/utils/

Key Concepts:
    - One configuration per process
    - Console sink on stderr, file sink in the project root
    - DEBUG traces every resultant branch and dismissed candidate
"""

import pathlib
import sys

from loguru import logger

_is_configured: bool = False
_log_file_path: pathlib.Path | None = None

DEFAULT_LOG_FILE_NAME = "rational_tiles.log"
LOG_FORMAT = "{time:YYYY-MM-DD HH:mm}:{level:<7} AT {file}:{line}: {message}"


def _project_root(start: pathlib.Path | None = None) -> pathlib.Path:
    """Find the project root by walking up until we see a pyproject.toml or .git.

    Falls back to the directory containing this file.
    """
    here = (start or pathlib.Path(__file__)).resolve()
    for p in [here, *here.parents]:
        if (p / "pyproject.toml").exists() or (p / ".git").exists():
            return p
    return here.parent


project_root = _project_root()


def get_log_file_path() -> pathlib.Path:
    """Return the path to the active log file, or the default path if not initialized."""
    if _log_file_path is not None:
        return _log_file_path
    return project_root / DEFAULT_LOG_FILE_NAME


def init_logger(
    level: str = "INFO",
    *,
    log_dir: str | pathlib.Path | None = None,
    log_file_name: str = DEFAULT_LOG_FILE_NAME,
) -> pathlib.Path:
    """Initialize the logger and return the log file path.

    Args:
        level (str): Logging level (e.g., "INFO", "DEBUG").
        log_dir: Directory where the log file will be written (default: project root).
        log_file_name: File name for the log file.

    Returns:
        pathlib.Path: The resolved path to the log file.
    """
    global _is_configured, _log_file_path
    log_folder = pathlib.Path(log_dir or project_root).expanduser().resolve()
    if _is_configured:
        return _log_file_path or log_folder / log_file_name

    log_folder.mkdir(parents=True, exist_ok=True)
    log_file = log_folder / log_file_name

    try:
        logger.remove()
        logger.add(sys.stderr, level=level, format=LOG_FORMAT)
        logger.add(
            log_file,
            level=level,
            enqueue=True,
            backtrace=True,
            diagnose=False,
            encoding="utf-8",
            format=LOG_FORMAT,
            mode="w",
        )
        logger.info(f"Logging to file: {log_file}")
        _is_configured = True
        _log_file_path = log_file
    except OSError as e:
        logger.error(f"Error configuring logger to write to file: {e}")

    return log_file


__all__ = ["get_log_file_path", "init_logger", "logger", "project_root"]
