"""
Core package for tdagof.

Persistent homology of planar point patterns, point process samplers and
the Monte-Carlo goodness-of-fit tests built on them.
"""

__version__ = "0.1.0"
