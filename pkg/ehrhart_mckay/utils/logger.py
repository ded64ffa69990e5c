import logging
import os
import sys

# LOG_LEVEL picks the threshold; log lines go to stderr so stdout stays machine-readable.
LOG_LEVEL = os.environ.get("LOG_LEVEL", "WARNING").upper()
LEVELS = {"DEBUG": logging.DEBUG, "INFO": logging.INFO, "WARNING": logging.WARNING, "ERROR": logging.ERROR}
CURRENT_LEVEL = LEVELS.get(LOG_LEVEL, logging.WARNING)

_root = logging.getLogger("ehrhart_mckay")


class _SenderFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        timestamp = self.formatTime(record, "%Y-%m-%d %H:%M:%S") + f".{int(record.msecs):03d}"
        sender = record.name.rsplit(".", 1)[-1]
        return f"[{timestamp}] [{record.levelname:<7}] [{sender}]: {record.getMessage()}"


if not _root.handlers:
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(_SenderFormatter())
    _root.addHandler(_handler)
    _root.setLevel(CURRENT_LEVEL)
    _root.propagate = False


def log(sender, message, level="INFO"):
    """Logs a message with timestamp and sender name."""
    level_num = LEVELS.get(level.upper(), logging.INFO)
    _root.getChild(sender).log(level_num, message)


def set_level(level: str):
    """Changes the threshold at runtime (used by the CLI --verbose flag)."""
    _root.setLevel(LEVELS.get(level.upper(), logging.WARNING))
