"""Second-order forward-mode differentiation over intervals.

A :class:`Jet` carries an interval value, an interval gradient and (optionally)
an interval Hessian stored as a flat upper triangle.  Evaluating a function
written against :mod:`hexpack.interval.func` on jets seeded from a box yields
enclosures of f, grad f and Hess f over that box.
"""

from __future__ import annotations

from typing import Sequence

from .core import Interval, IntervalDomainError

_ZERO = Interval(0.0, 0.0)
_ONE = Interval(1.0, 1.0)


def _tri_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i, n)]


class NonSmoothError(IntervalDomainError):
    """Second derivatives requested across a kink."""


class Jet:
    __slots__ = ("val", "grad", "hess")

    def __init__(self, val: Interval, grad: tuple, hess: tuple | None):
        self.val = val
        self.grad = grad
        self.hess = hess

    @classmethod
    def variables(cls, dims: Sequence[Interval], order: int = 2) -> list["Jet"]:
        n = len(dims)
        ntri = n * (n + 1) // 2
        out = []
        for i, d in enumerate(dims):
            grad = tuple(_ONE if j == i else _ZERO for j in range(n))
            hess = (_ZERO,) * ntri if order >= 2 else None
            out.append(cls(d, grad, hess))
        return out

    @property
    def order(self) -> int:
        return 2 if self.hess is not None else 1

    def _const(self, c: Interval) -> "Jet":
        n = len(self.grad)
        return Jet(c, (_ZERO,) * n, (_ZERO,) * len(self.hess) if self.hess is not None else None)

    def _lift(self, other) -> "Jet | None":
        if isinstance(other, Jet):
            return other
        if isinstance(other, Interval):
            return self._const(other)
        if isinstance(other, (int, float)) and not isinstance(other, bool):
            return self._const(Interval.point(other) if float(other) == other else Interval.from_decimal(other))
        return None

    def hessian_matrix(self) -> list[list[Interval]]:
        n = len(self.grad)
        if self.hess is None:
            raise ValueError("jet carries no second-order part")
        m = [[_ZERO] * n for _ in range(n)]
        for k, (i, j) in enumerate(_tri_index(n)):
            m[i][j] = m[j][i] = self.hess[k]
        return m

    # --- arithmetic --------------------------------------------------------
    def __neg__(self) -> "Jet":
        return Jet(-self.val, tuple(-g for g in self.grad),
                   tuple(-h for h in self.hess) if self.hess is not None else None)

    def __add__(self, other) -> "Jet":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        hess = None
        if self.hess is not None and o.hess is not None:
            hess = tuple(a + b for a, b in zip(self.hess, o.hess))
        return Jet(self.val + o.val, tuple(a + b for a, b in zip(self.grad, o.grad)), hess)

    __radd__ = __add__

    def __sub__(self, other) -> "Jet":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Jet":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "Jet":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        u, v = self, o
        grad = tuple(gu * v.val + u.val * gv for gu, gv in zip(u.grad, v.grad))
        hess = None
        if u.hess is not None and v.hess is not None:
            n = len(u.grad)
            hess = tuple(
                u.hess[k] * v.val + u.val * v.hess[k] + u.grad[i] * v.grad[j] + u.grad[j] * v.grad[i]
                for k, (i, j) in enumerate(_tri_index(n))
            )
        return Jet(u.val * v.val, grad, hess)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Jet":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.recip()

    def __rtruediv__(self, other) -> "Jet":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.recip()

    def __pow__(self, n: int) -> "Jet":
        if n == 2:
            return self.sq()
        raise TypeError("jets support only squaring")

    def chain(self, f0: Interval, f1: Interval, f2: Interval | None) -> "Jet":
        """Compose a scalar function with value f0, f' = f1, f'' = f2 at self.val."""
        grad = tuple(f1 * g for g in self.grad)
        hess = None
        if self.hess is not None:
            if f2 is None:
                raise NonSmoothError("second derivative unavailable")
            n = len(self.grad)
            hess = tuple(
                f1 * self.hess[k] + f2 * (self.grad[i] * self.grad[j])
                for k, (i, j) in enumerate(_tri_index(n))
            )
        return Jet(f0, grad, hess)

    def recip(self) -> "Jet":
        r = self.val.recip()
        r2 = r.sq()
        return self.chain(r, -r2, 2 * r2 * r if self.hess is not None else None)

    def sq(self) -> "Jet":
        x = self.val
        return self.chain(x.sq(), 2 * x, Interval(2.0, 2.0))

    def sqrt(self) -> "Jet":
        s = self.val.sqrt()
        d1 = 0.5 / s
        d2 = -0.5 * d1 / self.val if self.hess is not None else None
        return self.chain(s, d1, d2)

    def _one_minus_sq(self) -> Interval:
        x = self.val
        return 1 - x.sq()

    def acos(self) -> "Jet":
        w = self._one_minus_sq()
        r = w.sqrt().recip()
        d2 = -(self.val * r * r.sq()) if self.hess is not None else None
        return self.chain(self.val.acos(), -r, d2)

    def asin(self) -> "Jet":
        w = self._one_minus_sq()
        r = w.sqrt().recip()
        d2 = self.val * r * r.sq() if self.hess is not None else None
        return self.chain(self.val.asin(), r, d2)

    def atan(self) -> "Jet":
        q = (1 + self.val.sq()).recip()
        d2 = -2 * self.val * q.sq() if self.hess is not None else None
        return self.chain(self.val.atan(), q, d2)

    def __repr__(self) -> str:
        return f"Jet(val={self.val!r}, grad={self.grad!r})"
