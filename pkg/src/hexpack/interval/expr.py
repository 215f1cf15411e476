from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .core import Box, Interval
from .jet import Jet


def _as_interval(v) -> Interval:
    if isinstance(v, Interval):
        return v
    return Interval.point(v)


@dataclass(frozen=True)
class ExprFn:
    """A real function of ``arity`` variables with conservative enclosures.

    ``evaluator(box)`` must enclose the range of f over the box; the optional
    ``gradient`` and ``hessian`` evaluators enclose the partial derivatives.
    ``point`` evaluates f on floats (no rounding control) for diagnostics.
    """

    arity: int
    evaluator: Callable[[Box], Interval]
    gradient: Callable[[Box], tuple[Interval, ...]] | None = None
    hessian: Callable[[Box], list[list[Interval]]] | None = None
    point: Callable[..., float] | None = None
    name: str = ""

    @classmethod
    def from_function(cls, fn: Callable, arity: int, name: str = "") -> "ExprFn":
        """Build all evaluators from ``fn`` written with :mod:`hexpack.interval.func`."""

        def evaluator(box: Box) -> Interval:
            _check(box, arity)
            return _as_interval(fn(*box.dims))

        def gradient(box: Box) -> tuple[Interval, ...]:
            _check(box, arity)
            out = fn(*Jet.variables(box.dims, order=1))
            return tuple(out.grad) if isinstance(out, Jet) else (Interval(0.0, 0.0),) * arity

        def hessian(box: Box) -> list[list[Interval]]:
            _check(box, arity)
            out = fn(*Jet.variables(box.dims, order=2))
            if not isinstance(out, Jet):
                return [[Interval(0.0, 0.0)] * arity for _ in range(arity)]
            return out.hessian_matrix()

        return cls(arity, evaluator, gradient, hessian, fn, name or getattr(fn, "__name__", ""))

    def __call__(self, box: Box) -> Interval:
        return self.evaluator(box)


def _check(box: Box, arity: int) -> None:
    if len(box) != arity:
        raise ValueError(f"box has {len(box)} dimensions, expression expects {arity}")


def evaluate(expr: ExprFn, box: Box | Sequence[Interval]) -> Interval:
    """Conservative enclosure of the range of ``expr`` over ``box``."""
    if not isinstance(box, Box):
        box = Box(tuple(box), tuple(f"x{i}" for i in range(len(box))))
    return expr.evaluator(box)
