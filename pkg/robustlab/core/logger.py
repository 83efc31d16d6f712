"""Logging configuration"""

import logging
import sys
from typing import TextIO


def setup_logging(level: str = "INFO", stream: TextIO = sys.stderr):
    """Configure basic logging for the library and the CLI

    Logs go to stderr so that command results on stdout stay machine-readable.
    """
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(stream)
        ],
        force=True,
    )


logger = logging.getLogger("robustlab")
