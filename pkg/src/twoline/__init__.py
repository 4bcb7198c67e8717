"""Exact enumeration toolkit for noncrossing matchings of points on two
parallel lines, the staircase/fence/lacing families that share their
counting sequence, and the generating-function machinery behind them."""

from . import bijections, counting, objects, series, verify
from .partsets import AT_LEAST_TWO, ODD, ONE_TWO, PartSet

__version__ = "0.1.0"

__all__ = [
    "AT_LEAST_TWO",
    "ODD",
    "ONE_TWO",
    "PartSet",
    "bijections",
    "counting",
    "objects",
    "series",
    "verify",
]
