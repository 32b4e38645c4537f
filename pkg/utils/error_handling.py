"""
Standardized error handling utilities for the library and the CLI.
Provides consistent patterns for error handling across the application.
"""

import functools
import logging
from enum import Enum, auto
from typing import Any, Callable, Optional

from components.errors import (
    LopspError,
    OperationError,
    MapError,
    BarycentricError,
    RotsysSyntaxError,
    VerificationError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class ErrorAction(Enum):
    """Define how errors should be handled after logging."""
    LOG_ONLY = auto()      # Just log the error
    RERAISE = auto()       # Log and re-raise the exception
    RETURN_NONE = auto()   # Log and return None
    RETURN_FALSE = auto()  # Log and return False


def handle_errors(action: ErrorAction = ErrorAction.RERAISE,
                  reporter: Optional[Callable[[str], Any]] = None):
    """
    Decorator that wraps a function with standardized error handling.

    Args:
        action: What to do after logging the error
        reporter: Optional callable receiving a one-line message (the CLI passes a stderr writer)
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            try:
                return func(*args, **kwargs)
            except Exception as e:
                # Library errors are expected outcomes; only log tracebacks for the rest
                logger.error(
                    f"Error in {func.__name__}: {str(e)}",
                    exc_info=not isinstance(e, LopspError)
                )

                if reporter:
                    reporter(f"error: {str(e)}")

                if action == ErrorAction.RERAISE:
                    raise
                elif action == ErrorAction.RETURN_NONE:
                    return None
                elif action == ErrorAction.RETURN_FALSE:
                    return False
                # LOG_ONLY just continues
        return wrapper

    return decorator


def exit_code_for(exc: BaseException) -> int:
    """Map an exception to the CLI exit code convention.

    Parse, validation and usage errors give 2; failed checks give 1.
    """
    if isinstance(exc, VerificationError):
        return EXIT_CHECK_FAILED
    if isinstance(exc, (RotsysSyntaxError, MapError, BarycentricError, OperationError, OSError, ValueError)):
        return EXIT_USAGE
    return EXIT_CHECK_FAILED
