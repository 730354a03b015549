"""
Command-line frontend for tdagof.
"""

from .main import cli

__version__ = "0.1.0"
__all__ = [
    "cli",
]
