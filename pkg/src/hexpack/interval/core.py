"""Interval arithmetic over binary64 endpoints with emulated directed rounding.

The basic operations (+, -, *, /, sqrt) are rounded outward only when the
floating-point result is inexact; exactness is decided with error-free
transformations (TwoSum, Dekker's TwoProduct), so point computations that are
exact in binary64 stay point intervals.  The inverse trigonometric functions
come from libm, which is not correctly rounded; their endpoints are widened by
``TRANSCENDENTAL_ULPS`` units in the last place.
"""

from __future__ import annotations

import contextlib
import contextvars
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

INF = math.inf
TRANSCENDENTAL_ULPS = 2
ROUNDING_MODE = "directed"

_SPLITTER = 134217729.0  # 2**27 + 1
_SPLIT_LIMIT = 1e290
_TINY = 1e-280


class IntervalError(ValueError):
    """Base class for interval arithmetic failures."""


class InvalidIntervalError(IntervalError):
    """Raised when an interval would have lo > hi or NaN endpoints."""


class IntervalDomainError(IntervalError):
    """Raised when an operation is undefined on (part of) its argument."""


# Records clamp events (D1) while a collector is active.
_clamp_log: contextvars.ContextVar[list | None] = contextvars.ContextVar("clamp_log", default=None)


@contextlib.contextmanager
def collect_clamps() -> Iterator[list]:
    """Collect the names of operations whose argument had to be clamped."""
    log: list = []
    token = _clamp_log.set(log)
    try:
        yield log
    finally:
        _clamp_log.reset(token)


def _note_clamp(op: str) -> None:
    log = _clamp_log.get()
    if log is not None:
        log.append(op)


def _down(x: float) -> float:
    return math.nextafter(x, -INF)


def _up(x: float) -> float:
    return math.nextafter(x, INF)


def _ulps(x: float, n: int, direction: float) -> float:
    for _ in range(n):
        x = math.nextafter(x, direction)
    return x


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    if not (_TINY < abs(p) < _SPLIT_LIMIT) or abs(a) > _SPLIT_LIMIT or abs(b) > _SPLIT_LIMIT:
        # error term unreliable; signal "unknown" with NaN
        return p, (0.0 if (a == 0.0 or b == 0.0) else math.nan)
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _round_pair(value: float, err: float) -> tuple[float, float]:
    """Lower/upper binary64 bounds of value + err (err is the exact residual)."""
    if err != err or math.isinf(value):  # unknown residual
        return _down(value), _up(value)
    if err > 0:
        return value, _up(value)
    if err < 0:
        return _down(value), value
    return value, value


def add_rd(a: float, b: float) -> float:
    return _round_pair(*_two_sum(a, b))[0]


def add_ru(a: float, b: float) -> float:
    return _round_pair(*_two_sum(a, b))[1]


def mul_rd(a: float, b: float) -> float:
    return _round_pair(*_two_prod(a, b))[0]


def mul_ru(a: float, b: float) -> float:
    return _round_pair(*_two_prod(a, b))[1]


def _div_pair(x: float, y: float) -> tuple[float, float]:
    q = x / y
    if x == 0.0:
        return 0.0, 0.0
    p, e = _two_prod(q, y)
    if e != e or math.isinf(q):
        return _down(q), _up(q)
    r = (x - p) - e  # sign of x - q*y, exact by Sterbenz
    if y < 0:
        r = -r
    if r > 0:
        return q, _up(q)
    if r < 0:
        return _down(q), q
    return q, q


def _sqrt_pair(x: float) -> tuple[float, float]:
    s = math.sqrt(x)
    if x == 0.0:
        return 0.0, 0.0
    p, e = _two_prod(s, s)
    if e != e:
        return max(0.0, _down(s)), _up(s)
    r = (x - p) - e
    if r > 0:
        return s, _up(s)
    if r < 0:
        return _down(s), s
    return s, s


Number = Union[int, float]


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval [lo, hi] of reals with binary64 endpoints."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = self.lo, self.hi
        if lo != lo or hi != hi or lo > hi:
            raise InvalidIntervalError(f"invalid interval [{lo!r}, {hi!r}]")

    @classmethod
    def point(cls, x: Number) -> "Interval":
        x = float(x)
        return cls(x, x)

    @classmethod
    def from_decimal(cls, text: str | Fraction | int) -> "Interval":
        """Tightest enclosure of an exact decimal or rational value."""
        exact = Fraction(text)
        f = float(exact)
        approx = Fraction(f)
        if approx == exact:
            return cls(f, f)
        if approx < exact:
            return cls(f, _up(f))
        return cls(_down(f), f)

    @classmethod
    def hull_of(cls, values: Sequence["Interval"]) -> "Interval":
        return cls(min(v.lo for v in values), max(v.hi for v in values))

    # --- queries -----------------------------------------------------------
    @property
    def width(self) -> float:
        return add_ru(self.hi, -self.lo)

    @property
    def mid(self) -> float:
        if self.lo == -self.hi:
            return 0.0
        m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Union[Number, "Interval"]) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other: "Interval") -> "Interval | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    # --- arithmetic --------------------------------------------------------
    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __pos__(self) -> "Interval":
        return self

    def __add__(self, other) -> "Interval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Interval(add_rd(self.lo, o.lo), add_ru(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other) -> "Interval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Interval(add_rd(self.lo, -o.hi), add_ru(self.hi, -o.lo))

    def __rsub__(self, other) -> "Interval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "Interval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        if a >= 0.0 and c >= 0.0:
            return Interval(mul_rd(a, c), mul_ru(b, d))
        if b <= 0.0 and d <= 0.0:
            return Interval(mul_rd(b, d), mul_ru(a, c))
        pairs = ((a, c), (a, d), (b, c), (b, d))
        return Interval(min(mul_rd(x, y) for x, y in pairs), max(mul_ru(x, y) for x, y in pairs))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Interval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            raise IntervalDomainError(f"division by interval containing zero: {o!r}")
        return self * o.recip()

    def __rtruediv__(self, other) -> "Interval":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "Interval":
        if n == 2:
            return self.sq()
        if not isinstance(n, int) or n < 0:
            raise TypeError("only non-negative integer powers are supported")
        result = Interval(1.0, 1.0)
        for _ in range(n):
            result = result * self
        return result

    def recip(self) -> "Interval":
        if self.lo <= 0.0 <= self.hi:
            raise IntervalDomainError(f"reciprocal of interval containing zero: {self!r}")
        return Interval(_div_pair(1.0, self.hi)[0], _div_pair(1.0, self.lo)[1])

    def sq(self) -> "Interval":
        a, b = self.lo, self.hi
        if a >= 0.0:
            return Interval(mul_rd(a, a), mul_ru(b, b))
        if b <= 0.0:
            return Interval(mul_rd(b, b), mul_ru(a, a))
        m = max(-a, b)
        return Interval(0.0, mul_ru(m, m))

    def sqrt(self) -> "Interval":
        a, b = self.lo, self.hi
        if b < 0.0:
            raise IntervalDomainError(f"sqrt of negative interval {self!r}")
        if a < 0.0:
            _note_clamp("sqrt")
            a = 0.0
        return Interval(_sqrt_pair(a)[0], _sqrt_pair(b)[1])

    def _clamp_unit(self, op: str) -> tuple[float, float]:
        a, b = self.lo, self.hi
        if b < -1.0 or a > 1.0:
            raise IntervalDomainError(f"{op} argument {self!r} outside [-1, 1]")
        if a < -1.0 or b > 1.0:
            _note_clamp(op)
            a, b = max(a, -1.0), min(b, 1.0)
        return a, b

    def acos(self) -> "Interval":
        a, b = self._clamp_unit("acos")
        lo = 0.0 if b == 1.0 else max(0.0, _ulps(math.acos(b), TRANSCENDENTAL_ULPS, -INF))
        hi = PI.hi if a == -1.0 else min(PI.hi, _ulps(math.acos(a), TRANSCENDENTAL_ULPS, INF))
        return Interval(lo, hi)

    def asin(self) -> "Interval":
        a, b = self._clamp_unit("asin")
        return Interval(
            _exact_zero_or(a, lambda x: max(-HALF_PI.hi, _ulps(math.asin(x), TRANSCENDENTAL_ULPS, -INF))),
            _exact_zero_or(b, lambda x: min(HALF_PI.hi, _ulps(math.asin(x), TRANSCENDENTAL_ULPS, INF))),
        )

    def atan(self) -> "Interval":
        a, b = self.lo, self.hi
        return Interval(
            _exact_zero_or(a, lambda x: max(-HALF_PI.hi, _ulps(math.atan(x), TRANSCENDENTAL_ULPS, -INF))),
            _exact_zero_or(b, lambda x: min(HALF_PI.hi, _ulps(math.atan(x), TRANSCENDENTAL_ULPS, INF))),
        )


def _exact_zero_or(x: float, f) -> float:
    return 0.0 if x == 0.0 else f(x)


def _coerce(x) -> Interval | None:
    if isinstance(x, Interval):
        return x
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        if isinstance(x, int) and float(x) != x:
            return Interval.from_decimal(x)
        return Interval.point(x)
    return None


def make_interval(lo: Number, hi: Number) -> Interval:
    """Enclosure [lo, hi]; raises InvalidIntervalError when lo > hi."""
    return Interval(float(lo), float(hi))


# float(pi) lies below pi
PI = Interval(math.pi, _up(math.pi))
HALF_PI = Interval(math.pi / 2, _up(math.pi / 2))
TWO_PI = Interval(2 * math.pi, _up(2 * math.pi))
SQRT2 = Interval.point(2.0).sqrt()
SQRT3 = Interval.point(3.0).sqrt()


@dataclass(frozen=True)
class Box:
    """Axis-aligned box: one interval per labelled variable."""

    dims: tuple[Interval, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if not self.dims:
            raise ValueError("box must have at least one dimension")
        if len(self.labels) != len(self.dims):
            raise ValueError("labels and dims differ in length")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate labels {self.labels}")

    @classmethod
    def from_bounds(cls, bounds: Sequence[tuple[float, float] | Interval], labels: Sequence[str] | None = None) -> "Box":
        dims = tuple(b if isinstance(b, Interval) else make_interval(*b) for b in bounds)
        if labels is None:
            labels = tuple(f"x{i}" for i in range(len(dims)))
        return cls(dims, tuple(labels))

    @classmethod
    def point(cls, x: Sequence[float], labels: Sequence[str] | None = None) -> "Box":
        return cls.from_bounds([(v, v) for v in x], labels)

    def __len__(self) -> int:
        return len(self.dims)

    def __getitem__(self, i: int) -> Interval:
        return self.dims[i]

    @property
    def widths(self) -> tuple[float, ...]:
        return tuple(d.width for d in self.dims)

    def midpoint(self) -> tuple[float, ...]:
        return tuple(d.mid for d in self.dims)

    def midpoint_box(self) -> "Box":
        return Box.point(self.midpoint(), self.labels)

    def contains(self, other: "Box | Sequence[float]") -> bool:
        if isinstance(other, Box):
            return all(a.contains(b) for a, b in zip(self.dims, other.dims))
        return all(a.contains(float(x)) for a, x in zip(self.dims, other))

    def replace(self, i: int, value: Interval) -> "Box":
        dims = list(self.dims)
        dims[i] = value
        return Box(tuple(dims), self.labels)

    def bisect(self, i: int) -> tuple["Box", "Box"]:
        d = self.dims[i]
        m = d.mid
        if not (d.lo < m < d.hi):
            raise ValueError(f"dimension {i} of width {d.width} cannot be bisected")
        return self.replace(i, Interval(d.lo, m)), self.replace(i, Interval(m, d.hi))

    def facet(self, i: int, upper: bool) -> "Box":
        d = self.dims[i]
        v = d.hi if upper else d.lo
        return self.replace(i, Interval(v, v))

    def intersect(self, other: "Box") -> "Box | None":
        dims = []
        for a, b in zip(self.dims, other.dims):
            c = a.intersect(b)
            if c is None:
                return None
            dims.append(c)
        return Box(tuple(dims), self.labels)
