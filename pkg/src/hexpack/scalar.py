"""Scalar functions, constants and inequality left-hand sides.

Every function accepts floats, :class:`~hexpack.interval.Interval` or
:class:`~hexpack.interval.Jet` arguments.  Domain checks are applied only to
float arguments; interval callers are expected to pass boxes inside the
domain (or to handle :class:`IntervalDomainError` themselves).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .interval import HALF_PI, PI, SQRT2, SQRT3, Interval, Jet
from .interval import func as F


class ScalarDomainError(ValueError):
    """A real argument lies outside the domain of a scalar function."""


_H0_I = Interval.from_decimal("1.26")
_B_I = Interval.point(4.0) / 3
_C_I = SQRT3 / 3 - 2 * PI / 9
_CALPHA_I = Interval.from_decimal("0.16")
_COFF_I = Interval.from_decimal("0.32")
_SQRT8_I = Interval.point(8.0).sqrt()
_SLOPE_I = -(_H0_I - 1).recip()
_PI6_I = PI / 6


@dataclass(frozen=True)
class Constants:
    h0: float = 1.26
    b: float = 4.0 / 3.0
    c: float = math.sqrt(3) / 3 - 2 * math.pi / 9
    k2d: int = 6
    k3d: int = 12
    c_alpha: float = 0.16
    c_off: float = 0.32
    trunc: float = math.sqrt(2)
    r_outer_ft: float = math.sqrt(8)

    @property
    def annulus_outer(self) -> float:
        return 2 * self.h0

    def interval(self, name: str) -> Interval:
        """Width-minimal enclosure of a named constant."""
        table = {
            "h0": _H0_I, "b": _B_I, "c": _C_I, "c_alpha": _CALPHA_I, "c_off": _COFF_I,
            "trunc": SQRT2, "r_outer_ft": _SQRT8_I, "annulus_outer": 2 * _H0_I,
            "k2d": Interval.point(self.k2d), "k3d": Interval.point(self.k3d),
        }
        return table[name]


CONSTANTS = Constants()
H0 = CONSTANTS.h0
B = CONSTANTS.b
C = CONSTANTS.c
SQRT2_F = math.sqrt(2.0)


def _real(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool)


def _k(value: float, enclosure: Interval, like):
    return F.const(value, enclosure, like)


# --- L -----------------------------------------------------------------------

def _L_interval(h: Interval) -> Interval:
    if h.lo < 0.0:
        raise ScalarDomainError(f"L is defined for h >= 0, got {h!r}")
    hi = max(0.0, ((_H0_I - h.lo) / (_H0_I - 1)).hi)
    lo = max(0.0, ((_H0_I - h.hi) / (_H0_I - 1)).lo)
    return Interval(lo, hi)


def L(h):
    """Piecewise-linear weight: (h0 - h)/(h0 - 1) below h0, zero above."""
    if _real(h):
        if h < 0:
            raise ScalarDomainError(f"L is defined for h >= 0, got {h}")
        return (H0 - h) / (H0 - 1) if h <= H0 else 0.0
    if isinstance(h, Interval):
        return _L_interval(h)
    if isinstance(h, Jet):
        v = _L_interval(h.val)
        if h.val.hi < _H0_I.lo:
            return h.chain(v, _SLOPE_I, Interval(0.0, 0.0))
        if h.val.lo > _H0_I.hi:
            return h.chain(v, Interval(0.0, 0.0), Interval(0.0, 0.0))
        # kink inside: Clarke hull for the slope, no curvature
        return h.chain(v, Interval(_SLOPE_I.lo, 0.0), None)
    raise TypeError(f"unsupported argument {type(h).__name__}")


# --- angles ------------------------------------------------------------------

def alpha(norm):
    """arccos(|v|/4) - pi/6."""
    if _real(norm) and not (0.0 <= norm <= 4.0):
        raise ScalarDomainError(f"alpha needs 0 <= norm <= 4, got {norm}")
    return F.acos(norm / 4) - _k(math.pi / 6, _PI6_I, norm)


def angle_at_origin(n1, n2, t):
    """Angle at 0 of the triangle with |u1| = n1, |u2| = n2, |u1 - u2| = t."""
    return F.acos((F.sq(n1) + F.sq(n2) - F.sq(t)) / (2 * n1 * n2))


def _check_triangle(a: float, b: float, c: float, tol: float = 0.0) -> None:
    if not (a + b > c + tol and a + c > b + tol and b + c > a + tol):
        raise ScalarDomainError(f"degenerate or impossible triangle with sides {a}, {b}, {c}")


def circumradius_sides(a, b, c):
    """Circumradius of the triangle with side lengths a, b, c."""
    d = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
    return a * b * c / F.sqrt(d)


def circumradius_margin(h1, h2, t):
    """2*16K^2 - (abc)^2 for sides 2h1, 2h2, t; nonnegative iff circumradius <= sqrt 2."""
    a, b = 2 * h1, 2 * h2
    d = (a + b + t) * (-a + b + t) * (a - b + t) * (a + b - t)
    return 2 * d - F.sq(a * b * t)


# --- inequality left-hand sides ------------------------------------------------

def theta_pair(h1, h2, t):
    """Angle at 0 between u1, u2 with |u_i| = 2 h_i and |u1 - u2| = t."""
    return F.acos((4 * F.sq(h1) + 4 * F.sq(h2) - F.sq(t)) / (8 * h1 * h2))


def ell_pair(h1, h2, t):
    """Boundary length inside conv{0, u1, u2}: (h1 + h2) tan(theta/2)."""
    s = h1 + h2
    return s * F.sqrt((F.sq(t) - 4 * F.sq(h1 - h2)) / (4 * F.sq(s) - F.sq(t)))


def ell_pair_circumradius(h1: float, h2: float, t: float) -> float:
    """Same length as :func:`ell_pair`, as sqrt(R^2 - h1^2) + sqrt(R^2 - h2^2)."""
    r = circumradius_sides(2 * h1, 2 * h2, t)
    return math.sqrt(r * r - h1 * h1) + math.sqrt(r * r - h2 * h2)


def _check_pair(h1: float, h2: float, t: float) -> None:
    eps = 1e-12
    for h in (h1, h2):
        if not (1.0 - eps <= h <= SQRT2_F + eps):
            raise ScalarDomainError(f"h must lie in [1, sqrt 2], got {h}")
    if t < 2.0 - eps:
        raise ScalarDomainError(f"t must be at least 2, got {t}")
    _check_triangle(2 * h1, 2 * h2, t)
    if circumradius_margin(h1, h2, t) <= 0.0:
        raise ScalarDomainError(f"circumradius of ({2 * h1}, {2 * h2}, {t}) is not below sqrt 2")


def lhs_ineq2(h1, h2, t):
    """ell - b theta - c L(h1) - c L(h2) for a type (a) boundary piece."""
    if _real(h1) and _real(h2) and _real(t):
        _check_pair(h1, h2, t)
    b = _k(B, _B_I, h1)
    c = _k(C, _C_I, h1)
    return ell_pair(h1, h2, t) - b * theta_pair(h1, h2, t) - c * L(h1) - c * L(h2)


def lhs_ineq3(theta):
    """(sqrt 2 - b) theta: an arc of the sqrt 2 circle against its angle."""
    if _real(theta) and not (0.0 <= theta <= 2 * math.pi):
        raise ScalarDomainError(f"theta must lie in [0, 2 pi], got {theta}")
    k = _k(SQRT2_F - B, SQRT2 - _B_I, theta)
    return k * theta


def lhs_ineq4(h):
    """Segment from v/2 to the sqrt 2 circle, h = |v|/2."""
    if _real(h):
        if not (1.0 - 1e-12 <= h <= SQRT2_F + 1e-12):
            raise ScalarDomainError(f"h must lie in [1, sqrt 2], got {h}")
        ell = math.sqrt(max(0.0, 2.0 - h * h))
        return ell - B * math.atan(ell / h) - C * L(h)
    ell = F.sqrt(2 - F.sq(h))
    return ell - _B_I * F.atan(ell / h) - _C_I * L(h)


def lhs_ineq4_by_length(s):
    """:func:`lhs_ineq4` in terms of the segment length s = sqrt(2 - h^2), s in [0, 1]."""
    if _real(s):
        if not (0.0 <= s <= 1.0):
            raise ScalarDomainError(f"s must lie in [0, 1], got {s}")
        h = math.sqrt(2.0 - s * s)
        return s - B * math.atan(s / h) - C * L(h)
    h = F.sqrt(2 - F.sq(s))
    return s - _B_I * F.atan(s / h) - _C_I * L(h)


def lhs_ineq6(n1, n2, t):
    """theta(n1, n2, t) - alpha(n1) - alpha(n2)."""
    if _real(n1) and _real(n2) and _real(t):
        _check_triangle(n1, n2, t, tol=-1e-12)
    return angle_at_origin(n1, n2, t) - alpha(n1) - alpha(n2)


def lhs_ineq7(n):
    """alpha(n) - 0.16 L(n/2) - 0.32."""
    if _real(n):
        if not (2.0 - 1e-12 <= n <= 2.52 + 1e-12):
            raise ScalarDomainError(f"n must lie in [2, 2.52], got {n}")
        return alpha(n) - 0.16 * L(n / 2) - 0.32
    return alpha(n) - _CALPHA_I * L(n / 2) - _COFF_I


def hexagon_identity_gap() -> float:
    """2 pi b + 12 c - 4 sqrt 3 (zero up to rounding)."""
    return 2 * math.pi * B + 12 * C - 4 * math.sqrt(3)


__all__ = [
    "B", "C", "CONSTANTS", "Constants", "H0", "L", "ScalarDomainError", "alpha", "angle_at_origin",
    "circumradius_margin", "circumradius_sides", "ell_pair", "ell_pair_circumradius",
    "hexagon_identity_gap", "lhs_ineq2", "lhs_ineq3", "lhs_ineq4", "lhs_ineq4_by_length",
    "lhs_ineq6", "lhs_ineq7", "theta_pair", "HALF_PI",
]
