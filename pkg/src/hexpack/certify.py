"""Registry of the inequalities certified by interval branch and bound.

Most inequalities are settled by a single search (:func:`verify_nonneg` or
:func:`verify_nonneg_tight`).  The angle inequality between consecutive
annulus points vanishes on two whole edges of its domain, so it is proved by
a short chain of sub-certificates instead (see :func:`_run_ineq6`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import dodec3d, scalar
from .interval import (
    FALSIFIED, INCONCLUSIVE, SQRT2, TWO_PI, VERIFIED, Box, Certificate, ExprFn, Interval, Options,
    replay, verify_nonneg, verify_nonneg_tight,
)


@dataclass(frozen=True)
class Problem:
    id: str
    expr: ExprFn
    domain: Box
    constraint: ExprFn | None = None
    tight_point: tuple | None = None
    note: str = ""
    composite: Callable[["Problem", Options], Certificate] | None = None

    def run(self, opts: Options | None = None, delta: float = 0.05) -> Certificate:
        opts = opts or Options()
        if self.composite is not None:
            return self.composite(self, opts)
        if self.tight_point is None:
            return verify_nonneg(self.expr, self.domain, opts, inequality_id=self.id,
                                 constraint=self.constraint)
        return verify_nonneg_tight(self.expr, self.domain, self.tight_point, delta, opts,
                                   inequality_id=self.id, constraint=self.constraint)

    def replay(self, cert: Certificate, opts: Options | None = None) -> str:
        """Re-check a certificate produced by :meth:`run`."""
        if self.composite is None:
            return replay(self.expr, cert, opts, constraint=self.constraint)
        outcomes = []
        for part in cert.local_checks:
            if "certificate" not in part:
                continue
            sub = Certificate.from_dict(part["certificate"])
            expr = _PARTS[self.id][part["claim"]][0]()
            outcomes.append(replay(expr, sub, opts))
        if cert.outcome == VERIFIED and len(outcomes) != len(_PARTS[self.id]):
            return INCONCLUSIVE
        return _combine(outcomes)


def _box(bounds: list[tuple[float, float]], labels: list[str]) -> Box:
    return Box(tuple(Interval(lo, hi) for lo, hi in bounds), tuple(labels))


def _combine(outcomes: list[str]) -> str:
    if all(o == VERIFIED for o in outcomes):
        return VERIFIED
    return FALSIFIED if FALSIFIED in outcomes else INCONCLUSIVE


# --- individual problems ---------------------------------------------------------

def _ineq2() -> Problem:
    return Problem(
        id="ineq2",
        expr=ExprFn.from_function(scalar.lhs_ineq2, 3, "ineq2"),
        domain=_box([(1.0, SQRT2.hi), (1.0, SQRT2.hi), (2.0, 4.0)], ["h1", "h2", "t"]),
        constraint=ExprFn.from_function(scalar.circumradius_margin, 3, "circumradius<=sqrt2"),
        tight_point=(1.0, 1.0, 2.0),
        note="type (a) pieces; equality at the equilateral triangle of side 2",
    )


def _ineq3() -> Problem:
    return Problem(
        id="ineq3",
        expr=ExprFn.from_function(scalar.lhs_ineq3, 1, "ineq3"),
        domain=_box([(0.0, TWO_PI.hi)], ["theta"]),
        note="arcs of the sqrt 2 circle",
    )


def _ineq4() -> Problem:
    return Problem(
        id="ineq4",
        expr=ExprFn.from_function(scalar.lhs_ineq4_by_length, 1, "ineq4"),
        domain=_box([(0.0, 1.0)], ["s"]),
        note="segments from v/2 to the sqrt 2 circle, parametrised by length s = sqrt(2 - h^2)",
    )


_IN6 = ExprFn.from_function(scalar.lhs_ineq6, 3, "ineq6")
_T_SPLIT = 3.0


def _ineq6_dt() -> ExprFn:
    return ExprFn(3, lambda b: _IN6.gradient(b)[2], lambda b: tuple(_IN6.hessian(b)[2]), name="d/dt ineq6")


def _ineq6_mixed() -> ExprFn:
    def value(b: Box) -> Interval:
        full = Box((b.dims[0], b.dims[1], Interval(2.0, 2.0)), ("n1", "n2", "t"))
        return _IN6.hessian(full)[0][1]
    return ExprFn(2, value, name="d2/dn1dn2 ineq6 at t=2")


def _ineq6_far() -> ExprFn:
    return _IN6


_PARTS: dict[str, dict[str, tuple[Callable[[], ExprFn], Box]]] = {
    "ineq6": {
        "increasing in t for t <= 3": (_ineq6_dt, _box([(2.0, 2.52), (2.0, 2.52), (2.0, _T_SPLIT)], ["n1", "n2", "t"])),
        "mixed partial nonnegative on t = 2": (_ineq6_mixed, _box([(2.0, 2.52), (2.0, 2.52)], ["n1", "n2"])),
        "nonnegative for t >= 3": (_ineq6_far, _box([(2.0, 2.52), (2.0, 2.52), (_T_SPLIT, 4.0)], ["n1", "n2", "t"])),
    },
}

_INEQ6_IDENTITY = (
    "f(n, 2, 2) = 0 and f(2, n, 2) = 0 identically: the cosine argument (n^2 + 4 - 4)/(4n) "
    "reduces to n/4 and arccos(1/2) = pi/3, so theta = arccos(n/4) = alpha(n) + alpha(2)"
)


def _run_ineq6(problem: Problem, opts: Options) -> Certificate:
    """f(n1,n2,t) >= f(n1,n2,2) >= f(n1,2,2) + f(2,n2,2) - f(2,2,2) = 0.

    The first step uses monotonicity in t (certified for t <= 3; larger t is
    certified directly), the second integrates the nonnegative mixed partial
    over [2,n1] x [2,n2], and the edge values vanish by an algebraic identity.
    """
    parts, outcomes, cells, depth = [], [], 0, 0
    for claim, (make, box) in _PARTS[problem.id].items():
        sub = verify_nonneg(make(), box, opts, inequality_id=f"{problem.id}: {claim}")
        parts.append({"claim": claim, "certificate": sub.to_dict()})
        outcomes.append(sub.outcome)
        cells += sub.cells_examined
        depth = max(depth, sub.max_depth_reached)
    identity_ok = all(
        problem.expr.evaluator(_box([(n, n), (2.0, 2.0), (2.0, 2.0)], ["n1", "n2", "t"])).contains(0.0)
        and problem.expr.evaluator(_box([(2.0, 2.0), (n, n), (2.0, 2.0)], ["n1", "n2", "t"])).contains(0.0)
        for n in (2.0, 2.13, 2.26, 2.39, 2.52)
    )
    parts.append({"claim": "edge identity", "argument": _INEQ6_IDENTITY, "spot_checks_enclose_zero": identity_ok})
    outcome = _combine(outcomes) if identity_ok else INCONCLUSIVE
    return Certificate(
        inequality_id=problem.id,
        domain=problem.domain,
        cells_examined=cells,
        max_depth_reached=depth,
        min_margin=0.0,
        outcome=outcome,
        tight_points=[[2.0, 2.0, 2.0], [2.52, 2.0, 2.0], [2.0, 2.52, 2.0]],
        local_checks=parts,
        reason="composite: monotone in t, supermodular in (n1, n2), zero on the contact edges",
    )


def _ineq6() -> Problem:
    return Problem(
        id="ineq6",
        expr=_IN6,
        domain=_box([(2.0, 2.52), (2.0, 2.52), (2.0, 4.0)], ["n1", "n2", "t"]),
        note="angle between consecutive annulus points; equality whenever t = 2 and one norm is 2",
        composite=_run_ineq6,
    )


def _ineq7() -> Problem:
    return Problem(
        id="ineq7",
        expr=ExprFn.from_function(scalar.lhs_ineq7, 1, "ineq7"),
        domain=_box([(2.0, 2.52)], ["n"]),
        note="linear lower bound for alpha",
    )


def _dodec() -> Problem:
    expr, domain, tight = dodec3d.family_expr()
    return Problem(id="dodec-family", expr=expr, domain=domain, tight_point=(tight,),
                   note="tetrahedron family with double root at t_D")


_FACTORIES: dict[str, Callable[[], Problem]] = {
    "ineq2": _ineq2, "ineq3": _ineq3, "ineq4": _ineq4, "ineq6": _ineq6, "ineq7": _ineq7,
    "dodec-family": _dodec,
}
PROBLEM_IDS = tuple(_FACTORIES)


def get_problem(problem_id: str) -> Problem:
    try:
        return _FACTORIES[problem_id]()
    except KeyError:
        raise KeyError(f"unknown inequality id {problem_id!r}; choose from {', '.join(PROBLEM_IDS)}") from None


def certify(problem_id: str, opts: Options | None = None, delta: float = 0.05) -> Certificate:
    return get_problem(problem_id).run(opts, delta)
