# Logging setup shared by the CLI and the HTTP app
import logging.config
from typing import Optional

from app.core.config import LOG_LEVEL

LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """Route the `app` logger tree to stderr with the generic formatter."""
    level = level or LOG_LEVEL
    logging.config.dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {"generic": {"format": LOG_FORMAT, "datefmt": "%H:%M:%S"}},
            "handlers": {
                "console": {
                    "class": "logging.StreamHandler",
                    "stream": "ext://sys.stderr",
                    "formatter": "generic",
                    "level": "NOTSET",
                }
            },
            "loggers": {
                "app": {"handlers": ["console"], "level": level.upper(), "propagate": False},
            },
            "root": {"level": "WARNING", "handlers": []},
        }
    )
