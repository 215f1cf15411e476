"""Conservative interval arithmetic and branch-and-bound inequality certificates."""

from .bnb import (
    FALSIFIED,
    INCONCLUSIVE,
    VERIFIED,
    Certificate,
    Options,
    certify_tight_region,
    replay,
    verify_nonneg,
    verify_nonneg_tight,
)
from .core import (
    HALF_PI,
    PI,
    SQRT2,
    SQRT3,
    TWO_PI,
    Box,
    Interval,
    IntervalDomainError,
    IntervalError,
    InvalidIntervalError,
    collect_clamps,
    make_interval,
)
from .expr import ExprFn, evaluate
from .jet import Jet, NonSmoothError

__all__ = [
    "Box", "Certificate", "ExprFn", "FALSIFIED", "HALF_PI", "INCONCLUSIVE", "Interval",
    "IntervalDomainError", "IntervalError", "InvalidIntervalError", "Jet", "NonSmoothError",
    "Options", "PI", "SQRT2", "SQRT3", "TWO_PI", "VERIFIED", "certify_tight_region",
    "collect_clamps", "evaluate", "make_interval", "replay", "verify_nonneg", "verify_nonneg_tight",
]
