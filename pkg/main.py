import sys
import logging

from components.io_cli.commands import build_parser, dispatch
from config.settings import validate_settings
from utils.error_handling import EXIT_USAGE
from utils.logging_config import setup_logging

logger = logging.getLogger(__name__)


def exception_handler(exc_type, exc_value, exc_traceback):
    """Global exception handler to log uncaught exceptions"""
    logger.critical("Uncaught exception",
                    exc_info=(exc_type, exc_value, exc_traceback))
    sys.__excepthook__(exc_type, exc_value, exc_traceback)


def main(argv=None):
    """
    Command line entry point: parse arguments, configure logging, run one subcommand.
    """
    sys.excepthook = exception_handler

    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)
    logger.debug(f"Command: {args.command}")

    setting_errors = validate_settings()
    if setting_errors:
        print("Configuration errors detected:\n• " + "\n• ".join(setting_errors), file=sys.stderr)
        return EXIT_USAGE

    return dispatch(args)


if __name__ == "__main__":
    sys.exit(main())
