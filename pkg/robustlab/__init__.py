"""Quantitative semantics for signal temporal logic with pluggable conjunction metrics"""

__version__ = "1.0.0"
