"""
Logging setup for the command line.

Log records go to stderr so files written with --out stay clean.
"""
import logging
import sys

from domain.exceptions import ConfigError

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def configure_logging(level: str = "WARNING") -> None:
    """
    Configure the root logger once per process.

    Raises:
        ConfigError: If the level name is unknown
    """
    name = str(level).upper()
    if name not in LEVELS:
        raise ConfigError(f"log level must be one of {', '.join(LEVELS)}, got {level!r}")
    logging.basicConfig(level=name, format=LOG_FORMAT, stream=sys.stderr, force=True)
