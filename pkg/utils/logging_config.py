import logging
import os
from typing import Optional

from config.settings import LOG_LEVEL, LOG_FORMAT, LOG_FILE, LOG_TO_FILE


def setup_logging(level: Optional[str] = None, to_file: bool = LOG_TO_FILE):
    """Configure application-wide logging with file and console handlers.

    Console output goes to stderr so command results on stdout stay clean.
    """
    handlers = []

    if to_file:
        # Create logs directory if it doesn't exist
        log_dir = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "logs")
        try:
            os.makedirs(log_dir, exist_ok=True)
            file_handler = logging.FileHandler(os.path.join(log_dir, LOG_FILE), encoding='utf-8')
            file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
            handlers.append(file_handler)
        except OSError:
            # Read-only checkouts still get console logging
            pass

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handlers.append(console_handler)

    # Configure root logger
    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper(), logging.INFO),
        handlers=handlers,
        force=True,
    )

    logging.debug("Logging initialized")
    return logging.getLogger(__name__)
