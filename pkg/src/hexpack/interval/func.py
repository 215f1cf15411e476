"""Elementary functions that dispatch on floats, intervals and jets.

Formulas written with these helpers can be evaluated pointwise (floats), as
range enclosures (Interval) or with derivatives (Jet) without change.
"""

from __future__ import annotations

import math

from .core import Interval


def _is_real(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def sqrt(x):
    return math.sqrt(x) if _is_real(x) else x.sqrt()


def acos(x):
    return math.acos(x) if _is_real(x) else x.acos()


def asin(x):
    return math.asin(x) if _is_real(x) else x.asin()


def atan(x):
    return math.atan(x) if _is_real(x) else x.atan()


def sq(x):
    return x * x if _is_real(x) else x.sq()


def const(value: float, enclosure: Interval, like):
    """``value`` when evaluating on floats, ``enclosure`` otherwise."""
    return value if _is_real(like) else enclosure
