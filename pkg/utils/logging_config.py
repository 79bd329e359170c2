import logging
import sys
from typing import Any

import structlog
from structlog.types import Processor

from src.core.settings import settings

# --- Structlog Configuration ---


# Processor to add the log level to the event dictionary
def add_log_level(
    logger: logging.Logger, method_name: str, event_dict: dict[str, Any]
) -> dict[str, Any]:
    event_dict["level"] = method_name.upper()
    return event_dict


# Processor to add a timestamp in ISO format
def add_timestamp(
    logger: logging.Logger, method_name: str, event_dict: dict[str, Any]
) -> dict[str, Any]:
    event_dict["timestamp"] = structlog.processors.TimeStamper(fmt="iso")(
        logger, method_name, event_dict
    )["timestamp"]
    return event_dict


def resolve_log_level(verbose: bool = False, quiet: bool = False) -> int:
    if verbose or settings.logging.debug:
        return logging.DEBUG
    if quiet:
        return logging.WARNING
    return logging.getLevelName(settings.logging.log_level)


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    """
    Configures logging for the CLI using structlog.

    - In 'development' (default), logs are human-readable and colorized.
    - In 'production', logs are JSON-formatted for machine readability.
    - DEBUG=true or --verbose lowers the level to DEBUG.

    Logs go to stderr; stdout is reserved for reports.
    """
    env = settings.logging.env.lower()
    log_level = resolve_log_level(verbose, quiet)

    shared_processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_logger_name,
        add_log_level,
        add_timestamp,
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.StackInfoRenderer(),
    ]

    if env == "production":
        renderer: list[Processor] = [
            structlog.processors.format_exc_info,
            structlog.processors.JSONRenderer(),
        ]
    else:
        renderer = [structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())]
    processors = shared_processors + renderer

    formatter = structlog.stdlib.ProcessorFormatter(
        processors=processors,
        foreign_pre_chain=[structlog.stdlib.ExtraAdder()],
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(formatter)
    root_logger = logging.getLogger()
    for existing in list(root_logger.handlers):
        root_logger.removeHandler(existing)
    root_logger.addHandler(handler)
    root_logger.setLevel(log_level)

    structlog.configure(
        processors=processors,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    logger = structlog.get_logger("logging_config")
    logger.debug("Logging configured", env=env, level=logging.getLevelName(log_level))
