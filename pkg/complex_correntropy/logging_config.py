"""Logging configuration for complex correntropy.

Library modules only create loggers; the `mccc` callback calls `setup_logging`
once per invocation. Python warnings are routed into logging, so numpy
RuntimeWarnings raised while a solver runs (overflow in exp, invalid value in
a division) land in the log file next to the sweep and trial records that
produced them.
"""

import logging
import sys
from pathlib import Path

from complex_correntropy import __version__

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logging(level: str = "INFO", log_file: Path | None = None, verbose: bool = False) -> None:
    """Configure logging for the application.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional path to log file; always receives DEBUG records
        verbose: If True, set level to DEBUG and show DEBUG on stderr
    """
    if verbose:
        level = "DEBUG"

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, level.upper()))
    root_logger.handlers.clear()

    # stdout carries results only
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.WARNING if not verbose else logging.DEBUG)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    if log_file:
        try:
            log_file.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_file, encoding="utf-8")
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            root_logger.addHandler(file_handler)
            # The file always receives DEBUG
            root_logger.setLevel(logging.DEBUG)
        except OSError as e:
            logging.warning(f"Failed to create log file handler: {e}")

    logging.captureWarnings(True)

    # Worker pools are chatty at DEBUG
    logging.getLogger("joblib").setLevel(logging.WARNING)

    logging.getLogger(__name__).debug(
        f"complex-correntropy {__version__} logging at {level.upper()}"
        + (f", file {log_file}" if log_file else "")
    )


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance.

    Args:
        name: Logger name (typically __name__)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)
