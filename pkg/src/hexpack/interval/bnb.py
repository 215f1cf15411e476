"""Branch-and-bound certification of ``f >= 0`` over a box.

Each cell is settled by one of the following, tried in order:

* ``T``  the cell lies inside a neighbourhood already certified by the local
  (tight point) analysis;
* ``X``  a domain constraint ``g >= 0`` is provably violated on the cell;
* ``A``  the interval lower bound of f is at least ``margin_floor``;
* ``M``  a partial derivative has constant sign, so the minimum lies on a facet
  and only that facet is examined;
* ``B``  the cell is bisected along its widest relative dimension.

The decisions are recorded in preorder as ``Certificate.subdivision`` so the
proof can be replayed without the search heuristics (:func:`replay`).
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .core import ROUNDING_MODE, Box, Interval, IntervalError, add_rd, add_ru, collect_clamps
from .expr import ExprFn

VERIFIED = "verified"
FALSIFIED = "falsified"
INCONCLUSIVE = "inconclusive"

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_TOKEN = re.compile(r"[AXTFI]|M[0-9a-z][-+]|B[0-9a-z]")


@dataclass(frozen=True)
class Options:
    max_depth: int = 40
    min_width: float = 1e-8
    margin_floor: float = 0.0
    max_cells: int = 2_000_000
    value_tol: float = 1e-9


@dataclass
class Certificate:
    inequality_id: str
    domain: Box
    cells_examined: int = 0
    max_depth_reached: int = 0
    min_margin: float = math.inf
    outcome: str = INCONCLUSIVE
    witness: Box | None = None
    tight_points: list[list[float]] = field(default_factory=list)
    rounding_mode: str = ROUNDING_MODE
    subdivision: str = ""
    clamps: dict[str, int] = field(default_factory=dict)
    local_checks: list[dict] = field(default_factory=list)
    reason: str = ""

    @property
    def verified(self) -> bool:
        return self.outcome == VERIFIED

    def to_dict(self) -> dict:
        return {
            "inequality_id": self.inequality_id,
            "domain": box_to_json(self.domain),
            "cells_examined": self.cells_examined,
            "max_depth_reached": self.max_depth_reached,
            "min_margin": real_to_json(self.min_margin),
            "outcome": self.outcome,
            "witness": box_to_json(self.witness) if self.witness is not None else None,
            "tight_points": [[real_to_json(x) for x in p] for p in self.tight_points],
            "rounding_mode": self.rounding_mode,
            "subdivision": self.subdivision,
            "clamps": dict(sorted(self.clamps.items())),
            "local_checks": self.local_checks,
            "reason": self.reason,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(
            inequality_id=d["inequality_id"],
            domain=box_from_json(d["domain"]),
            cells_examined=int(d["cells_examined"]),
            max_depth_reached=int(d["max_depth_reached"]),
            min_margin=float(d["min_margin"]),
            outcome=d["outcome"],
            witness=box_from_json(d["witness"]) if d.get("witness") else None,
            tight_points=[[float(x) for x in p] for p in d.get("tight_points", [])],
            rounding_mode=d["rounding_mode"],
            subdivision=d.get("subdivision", ""),
            clamps=dict(d.get("clamps", {})),
            local_checks=list(d.get("local_checks", [])),
            reason=d.get("reason", ""),
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


def real_to_json(x: float) -> str:
    """Shortest round-trip decimal string."""
    return repr(float(x))


def box_to_json(box: Box) -> dict:
    return {"labels": list(box.labels), "dims": [[real_to_json(d.lo), real_to_json(d.hi)] for d in box.dims]}


def box_from_json(d: dict) -> Box:
    return Box(tuple(Interval(float(lo), float(hi)) for lo, hi in d["dims"]), tuple(d["labels"]))


def choose_split(cell: Box, domain: Box) -> int | None:
    """Dimension with the widest width relative to the domain; ties -> lowest index."""
    best, best_rel = None, 0.0
    for i, (c, d) in enumerate(zip(cell.dims, domain.dims)):
        w = c.hi - c.lo
        if w <= 0.0:
            continue
        dw = d.hi - d.lo
        rel = w / dw if dw > 0 else w
        if rel > best_rel:
            best, best_rel = i, rel
    return best


def _safe(fn, *args):
    try:
        return fn(*args)
    except (IntervalError, ZeroDivisionError, OverflowError):
        return None


class _Search:
    def __init__(self, expr: ExprFn, domain: Box, opts: Options, constraint: ExprFn | None,
                 exclusion: Box | None):
        self.expr = expr
        self.domain = domain
        self.opts = opts
        self.constraint = constraint
        self.exclusion = exclusion
        self.trace: list[str] = []
        self.cells = 0
        self.max_depth = 0
        self.min_margin = math.inf
        self.outcome = VERIFIED
        self.witness: Box | None = None
        self.reason = ""

    def _fail(self, outcome: str, witness: Box, reason: str, token: str) -> None:
        self.outcome = outcome
        self.witness = witness
        self.reason = reason
        self.trace.append(token)

    def run(self) -> None:
        expr, opts = self.expr, self.opts
        stack: list[tuple[Box, int, bool]] = [(self.domain, 0, False)]
        while stack:
            cell, depth, inside = stack.pop()
            self.cells += 1
            self.max_depth = max(self.max_depth, depth)
            if self.cells > opts.max_cells:
                self._fail(INCONCLUSIVE, cell, "cell budget exhausted", "I")
                return
            if self.exclusion is not None and self.exclusion.contains(cell):
                self.trace.append("T")
                continue
            if self.constraint is not None and not inside:
                g = _safe(self.constraint.evaluator, cell)
                if g is not None and g.hi < 0.0:
                    self.trace.append("X")
                    continue
                inside = g is not None and g.lo >= 0.0
            elif self.constraint is None:
                inside = True

            fv = _safe(expr.evaluator, cell)
            if fv is not None:
                if fv.lo >= opts.margin_floor:
                    self.min_margin = min(self.min_margin, fv.lo)
                    self.trace.append("A")
                    continue
                if inside and fv.hi < 0.0:
                    self._fail(FALSIFIED, cell, "interval upper bound negative on cell", "F")
                    return
            if inside:
                mid = cell.midpoint_box()
                fm = _safe(expr.evaluator, mid)
                if fm is not None and fm.hi < 0.0:
                    self._fail(FALSIFIED, mid, "negative value at cell midpoint", "F")
                    return
                facet = self._monotone(cell)
                if facet is not None:
                    token, sub = facet
                    self.trace.append(token)
                    stack.append((sub, depth, True))
                    continue

            i = choose_split(cell, self.domain)
            widest = max((d.hi - d.lo for d in cell.dims), default=0.0)
            if i is None or depth >= opts.max_depth or widest < opts.min_width:
                self._fail(INCONCLUSIVE, cell, f"limits reached at depth {depth}", "I")
                return
            try:
                left, right = cell.bisect(i)
            except ValueError:
                self._fail(INCONCLUSIVE, cell, "cell too narrow to bisect", "I")
                return
            self.trace.append("B" + _DIGITS[i])
            stack.append((right, depth + 1, inside))
            stack.append((left, depth + 1, inside))

    def _monotone(self, cell: Box) -> tuple[str, Box] | None:
        if self.expr.gradient is None:
            return None
        grad = _safe(self.expr.gradient, cell)
        if grad is None:
            return None
        for i, (g, d) in enumerate(zip(grad, cell.dims)):
            if d.lo == d.hi:
                continue
            if g.lo >= 0.0:
                return "M" + _DIGITS[i] + "-", cell.facet(i, upper=False)
            if g.hi <= 0.0:
                return "M" + _DIGITS[i] + "+", cell.facet(i, upper=True)
        return None


def _run(expr: ExprFn, domain: Box, opts: Options, constraint, exclusion, inequality_id: str) -> Certificate:
    if len(domain) != expr.arity:
        raise ValueError(f"domain has {len(domain)} dimensions, expression expects {expr.arity}")
    search = _Search(expr, domain, opts, constraint, exclusion)
    with collect_clamps() as log:
        search.run()
    return Certificate(
        inequality_id=inequality_id or expr.name,
        domain=domain,
        cells_examined=search.cells,
        max_depth_reached=search.max_depth,
        min_margin=search.min_margin,
        outcome=search.outcome,
        witness=search.witness,
        subdivision="".join(search.trace),
        clamps=dict(Counter(log)),
        reason=search.reason,
    )


def verify_nonneg(expr: ExprFn, domain: Box, opts: Options | None = None, *, inequality_id: str = "",
                  constraint: ExprFn | None = None) -> Certificate:
    """Certify ``expr >= 0`` on ``domain`` (restricted to ``constraint >= 0`` if given)."""
    return _run(expr, domain, opts or Options(), constraint, None, inequality_id)


def _as_interval(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.point(float(x))


def tight_neighbourhood(domain: Box, point: Sequence, delta: float) -> Box:
    dims = []
    for d, p in zip(domain.dims, point):
        p = _as_interval(p)
        lo = max(d.lo, add_rd(p.lo, -delta))
        hi = min(d.hi, add_ru(p.hi, delta))
        dims.append(Interval(lo, hi))
    return Box(tuple(dims), domain.labels)


def certify_tight_region(expr: ExprFn, domain: Box, point: Sequence, delta: float,
                         value_tol: float = 1e-9, local_cells: int = 20_000) -> dict:
    """Local second-order argument for a point where f attains 0.

    Coordinates along which f is monotone away from the point (the point being
    on the corresponding face of the neighbourhood) are fixed first; the sign
    of the partial derivative is itself certified by branch and bound.  On the
    remaining free coordinates the gradient at the point must enclose 0 and the
    interval Hessian must be positive definite by Gershgorin's theorem on every
    cell of a subdivision of the neighbourhood.  f at the point must enclose 0
    within ``value_tol``.  ``local_cells`` bounds the work of each sub-search.
    """
    if expr.gradient is None or expr.hessian is None:
        raise ValueError("tight point analysis needs gradient and Hessian evaluators")
    pbox = Box(tuple(_as_interval(p) for p in point), domain.labels)
    if not domain.contains(pbox):
        raise ValueError("tight point outside the domain")
    nbhd = tight_neighbourhood(domain, point, delta)
    report: dict = {
        "point": [[real_to_json(d.lo), real_to_json(d.hi)] for d in pbox.dims],
        "delta": real_to_json(delta),
        "neighbourhood": box_to_json(nbhd),
        "fixed": [],
        "ok": False,
    }
    reduced = nbhd
    changed = True
    while changed:
        changed = False
        for i, (r, p) in enumerate(zip(reduced.dims, pbox.dims)):
            if r == p:
                continue
            for side, sign in (("lower", 1.0), ("upper", -1.0)):
                on_face = r.lo == p.lo if side == "lower" else r.hi == p.hi
                if not on_face:
                    continue
                cells = _derivative_sign(expr, reduced, pbox, i, sign, local_cells)
                if cells is not None:
                    reduced = reduced.replace(i, p)
                    report["fixed"].append({"dim": reduced.labels[i], "side": side, "cells": cells})
                    changed = True
                    break
            if changed:
                break

    fp = _safe(expr.evaluator, pbox)
    if fp is None:
        report["reason"] = "value at tight point undefined"
        return report
    report["value"] = [real_to_json(fp.lo), real_to_json(fp.hi)]
    if not (fp.contains(0.0) and fp.width <= value_tol):
        report["reason"] = "value at tight point does not enclose 0 within tolerance"
        return report

    free = [i for i, (r, p) in enumerate(zip(reduced.dims, pbox.dims)) if r != p]
    report["free"] = [reduced.labels[i] for i in free]
    if free:
        gp = _safe(expr.gradient, pbox)
        if gp is None or not all(gp[i].contains(0.0) for i in free):
            report["reason"] = "gradient at tight point does not enclose 0 on free coordinates"
            return report
        report["gradient"] = {reduced.labels[i]: [real_to_json(gp[i].lo), real_to_json(gp[i].hi)] for i in free}
        margin, cells = _hessian_pd(expr, reduced, free, local_cells)
        report["gershgorin_cells"] = cells
        if margin is None:
            report["reason"] = "Hessian not certifiably positive definite; try a smaller delta"
            return report
        report["gershgorin_min"] = real_to_json(margin)
    report["ok"] = True
    report["reason"] = "certified"
    return report


def _derivative_sign(expr: ExprFn, box: Box, centre: Box, i: int, sign: float,
                     budget: int) -> int | None:
    """Cells used to certify ``sign * df/dx_i >= 0`` on ``box``, or None."""
    grad = _centred_gradient(expr, box, centre)
    if grad is not None:
        g = grad[i]
        if (sign > 0 and g.lo >= 0.0) or (sign < 0 and g.hi <= 0.0):
            return 1

    def value(b: Box) -> Interval:
        g = expr.gradient(b)[i]
        return g if sign > 0 else -g

    def slope(b: Box) -> tuple[Interval, ...]:
        row = expr.hessian(b)[i]
        return tuple(h if sign > 0 else -h for h in row)

    deriv = ExprFn(len(box), value, slope, name=f"d{i}")
    cert = _run(deriv, box, Options(max_cells=budget), None, None, deriv.name)
    return cert.cells_examined if cert.outcome == VERIFIED else None


def _hessian_pd(expr: ExprFn, box: Box, free: Sequence[int], budget: int) -> tuple[float | None, int]:
    """Smallest Gershgorin margin over a subdivision of ``box`` (None if not positive)."""
    stack = [box]
    cells = 0
    worst = math.inf
    while stack:
        cell = stack.pop()
        cells += 1
        if cells > budget:
            return None, cells
        hess = _safe(expr.hessian, cell)
        if hess is not None:
            m = min(gershgorin_margins(hess, free))
            if m > 0.0:
                worst = min(worst, m)
                continue
        k = choose_split(cell, box)
        if k is None or cell.dims[k].width < 1e-10:
            return None, cells
        stack.extend(reversed(cell.bisect(k)))
    return worst, cells


def _centred_gradient(expr: ExprFn, box: Box, centre: Box) -> tuple[Interval, ...] | None:
    """Gradient enclosure on ``box``: naive form intersected with the mean-value form about ``centre``."""
    naive = _safe(expr.gradient, box)
    gc = _safe(expr.gradient, centre)
    hess = _safe(expr.hessian, box)
    if naive is None or gc is None or hess is None:
        return naive
    out = []
    for i, g in enumerate(naive):
        mv = gc[i]
        for j, (b, c) in enumerate(zip(box.dims, centre.dims)):
            mv = mv + hess[i][j] * (b - c)
        out.append(g.intersect(mv) or g)
    return tuple(out)


def gershgorin_margins(hess: list[list[Interval]], idx: Sequence[int]) -> list[float]:
    """Lower bounds of diag minus off-diagonal row sums on the index subset."""
    out = []
    for i in idx:
        off = 0.0
        for j in idx:
            if j != i:
                off = add_ru(off, hess[i][j].mag)
        out.append(add_rd(hess[i][i].lo, -off))
    return out


def verify_nonneg_tight(expr: ExprFn, domain: Box, tight_point: Sequence, delta: float = 0.05,
                        opts: Options | None = None, *, inequality_id: str = "",
                        constraint: ExprFn | None = None, max_halvings: int = 8) -> Certificate:
    """Certify ``expr >= 0`` on ``domain`` where equality holds at ``tight_point``.

    ``delta`` is halved up to ``max_halvings`` times if the local argument
    fails on the larger neighbourhood.
    """
    opts = opts or Options()
    # shrink the neighbourhood until the local argument goes through
    for _ in range(max_halvings + 1):
        local = certify_tight_region(expr, domain, tight_point, delta, opts.value_tol)
        if local["ok"]:
            break
        delta /= 2
    point_repr = [_as_interval(p).mid for p in tight_point]
    nbhd = box_from_json(local["neighbourhood"])
    if not local["ok"]:
        return Certificate(
            inequality_id=inequality_id or expr.name,
            domain=domain,
            outcome=INCONCLUSIVE,
            witness=nbhd,
            tight_points=[point_repr],
            local_checks=[local],
            reason=local["reason"],
        )
    cert = _run(expr, domain, opts, constraint, nbhd, inequality_id)
    cert.tight_points = [point_repr]
    cert.local_checks = [local]
    return cert


def replay(expr: ExprFn, cert: Certificate, opts: Options | None = None, *,
           constraint: ExprFn | None = None) -> str:
    """Re-check every recorded decision of ``cert``; returns the replayed outcome.

    Only the acceptance tests are re-run; no search happens.  A mismatch
    between the trace and the recomputed tests yields ``inconclusive``.
    """
    opts = opts or Options()
    exclusion = None
    for local in cert.local_checks:
        point = [Interval(float(lo), float(hi)) for lo, hi in local["point"]]
        redo = certify_tight_region(expr, cert.domain, point, float(local["delta"]), opts.value_tol)
        if not redo["ok"]:
            return INCONCLUSIVE
        exclusion = box_from_json(redo["neighbourhood"])
    tokens = _TOKEN.findall(cert.subdivision)
    if "".join(tokens) != cert.subdivision:
        return INCONCLUSIVE
    pos = 0
    stack: list[tuple[Box, bool]] = [(cert.domain, False)]
    with collect_clamps():
        while stack:
            if pos >= len(tokens):
                return INCONCLUSIVE
            cell, inside = stack.pop()
            tok = tokens[pos]
            pos += 1
            if constraint is None:
                inside = True
            elif not inside and tok not in ("T", "X"):
                g = _safe(constraint.evaluator, cell)
                inside = g is not None and g.lo >= 0.0
            if tok == "T":
                if exclusion is None or not exclusion.contains(cell):
                    return INCONCLUSIVE
            elif tok == "X":
                g = _safe(constraint.evaluator, cell) if constraint is not None else None
                if inside or g is None or not g.hi < 0.0:
                    return INCONCLUSIVE
            elif tok == "A":
                fv = _safe(expr.evaluator, cell)
                if fv is None or fv.lo < opts.margin_floor:
                    return INCONCLUSIVE
            elif tok in ("F", "I"):
                return FALSIFIED if tok == "F" else INCONCLUSIVE
            elif tok[0] == "M":
                i = _DIGITS.index(tok[1])
                grad = _safe(expr.gradient, cell) if inside and expr.gradient is not None else None
                upper = tok[2] == "+"
                if grad is None or not (grad[i].hi <= 0.0 if upper else grad[i].lo >= 0.0):
                    return INCONCLUSIVE
                stack.append((cell.facet(i, upper), True))
            else:
                i = _DIGITS.index(tok[1])
                left, right = cell.bisect(i)
                stack.append((right, inside))
                stack.append((left, inside))
    return VERIFIED if pos == len(tokens) else INCONCLUSIVE
