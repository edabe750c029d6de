import logging
import sys
from typing import Optional

from girthroot.core.config import settings

LOG_FORMAT = "%(levelname)-5.5s [%(name)s] %(message)s"

def configure_logging(level: Optional[str] = None) -> None:
    """Send library diagnostics to stderr; stdout is reserved for results."""
    root = logging.getLogger("girthroot")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel((level or settings.LOG).upper())
    root.propagate = False
    root.debug(f"logging configured at {logging.getLevelName(root.level)}")
