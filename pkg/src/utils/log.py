"""
Logging setup shared by the command-line entry points
"""

import logging
import sys
import os

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import LOG_FORMAT, LOG_LEVEL


def setup_logging(level: str = None) -> None:
    """
    Configure root logging once

    Args:
        level: level name; defaults to LOG_LEVEL from config
    """
    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper(), logging.INFO),
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
