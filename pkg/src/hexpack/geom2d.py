"""Voronoi cells of planar packings, truncation at radius sqrt 2 and boundary pieces.

The truncated boundary of the cell of the origin is cut at every foot v/2 of a
neighbour v (|v| < sqrt 8).  A foot always lies on the boundary because
|v|^2 < 8 <= |w|^2 + |v - w|^2 for any other packing point w.  Each bisector
edge therefore splits into two half-edges, and:

* two half-edges meeting at a Voronoi vertex inside the disk form a piece of
  kind ``A`` (the vertex is the circumcentre of {0, u1, u2}),
* a half-edge that leaves the disk is a piece of kind ``C``,
* the remaining arcs of the circle are pieces of kind ``B``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
import numpy as np

from . import scalar

TRUNC = math.sqrt(2.0)
OUTER = math.sqrt(8.0)
TOL_PACK = 1e-9
REPORT_TOL = 1e-9
HEX_BOUND = 4 * math.sqrt(3.0)


class PackingError(ValueError):
    """Points violate the packing condition."""


class PartitionError(RuntimeError):
    """The boundary could not be split into pieces consistently."""


@dataclass(frozen=True)
class Packing2:
    points: tuple[tuple[float, float], ...]
    dimension: int = 2

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float).reshape(-1, 2)
        if not np.all(np.isfinite(pts)):
            raise PackingError("non-finite coordinates")
        if len(pts) > 1:
            d = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
            np.fill_diagonal(d, np.inf)
            i, j = np.unravel_index(np.argmin(d), d.shape)
            if d[i, j] < 2.0 - TOL_PACK:
                raise PackingError(f"points {i} and {j} are at distance {d[i, j]!r} < 2")

    @classmethod
    def from_points(cls, points) -> "Packing2":
        return cls(tuple((float(x), float(y)) for x, y in np.asarray(points, dtype=float).reshape(-1, 2)))

    @classmethod
    def from_json(cls, doc: dict) -> "Packing2":
        if doc.get("dimension") != 2:
            raise PackingError("packing file must have \"dimension\": 2")
        return cls.from_points(doc["points"])

    def array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float).reshape(-1, 2)

    def to_json(self) -> dict:
        return {"dimension": 2, "points": [list(p) for p in self.points]}


@dataclass
class ConvexCell:
    """Convex polygon (counterclockwise) cut out by half-planes ``normal . x <= offset``.

    ``labels[i]`` is the index of the neighbour whose bisector carries the edge
    from ``vertices[i]`` to ``vertices[i+1]`` (-1 for the far bounding box, which
    only survives when the cell is unbounded).
    """

    vertices: np.ndarray
    labels: list[int]
    halfplanes: list[tuple[np.ndarray, float]]
    bounded: bool
    center: np.ndarray = field(default_factory=lambda: np.zeros(2))

    def perimeter(self) -> float:
        if not self.bounded:
            return math.inf
        v = self.vertices
        return float(np.sum(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)))


@dataclass
class BoundaryPiece:
    kind: str  # "A", "B" or "C"
    length: float
    angle: float
    l_terms: list[tuple[tuple[float, float], float]]
    start: tuple[float, float]
    end: tuple[float, float]
    u1: tuple[float, float] | None = None
    u2: tuple[float, float] | None = None
    theta_start: float | None = None
    theta_end: float | None = None
    v: tuple[float, float] | None = None
    side: str | None = None
    margin: float = 0.0

    def to_json(self) -> dict:
        d = asdict(self)
        d["l_terms"] = [{"point": list(p), "L": val} for p, val in self.l_terms]
        return {k: val for k, val in d.items() if val is not None}


@dataclass
class CellReport:
    total_length: float
    pieces: list[BoundaryPiece]
    sum_L: float
    bound: float = HEX_BOUND
    passed: bool = False
    margin_sum: float = 0.0
    min_margin: float = 0.0
    lemma_bound: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def pass_(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {
            "total_length": self.total_length,
            "bound": self.bound,
            "pass": self.passed,
            "sum_L": self.sum_L,
            "margin_sum": self.margin_sum,
            "min_margin": self.min_margin,
            "lemma_bound": self.lemma_bound,
            "failures": self.failures,
            "pieces": [p.to_json() for p in self.pieces],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


# --- Voronoi cells ---------------------------------------------------------------

def _clip(poly: list[tuple[np.ndarray, int]], normal: np.ndarray, offset: float, label: int,
          eps: float = 1e-12) -> list[tuple[np.ndarray, int]]:
    out: list[tuple[np.ndarray, int]] = []
    n = len(poly)
    for i in range(n):
        p, lab = poly[i]
        q, _ = poly[(i + 1) % n]
        fp = float(normal @ p) - offset
        fq = float(normal @ q) - offset
        p_in, q_in = fp <= eps, fq <= eps
        if p_in:
            out.append((p, lab))
            if not q_in:
                out.append((p + (q - p) * (fp / (fp - fq)), label))
        elif q_in:
            out.append((p + (q - p) * (fp / (fp - fq)), lab))
    # drop zero-length edges
    cleaned: list[tuple[np.ndarray, int]] = []
    for i, (p, lab) in enumerate(out):
        q = out[(i + 1) % len(out)][0]
        if len(out) > 1 and np.linalg.norm(q - p) < 1e-12:
            continue
        cleaned.append((p, lab))
    return cleaned


def voronoi_cell(center, neighbors) -> ConvexCell:
    """Intersection of the half-planes closer to ``center`` than to each neighbour."""
    c = np.asarray(center, dtype=float)
    nb = np.asarray(neighbors, dtype=float).reshape(-1, 2) - c
    if len(nb) == 0:
        raise ValueError("at least one neighbour is required")
    if np.any(np.linalg.norm(nb, axis=1) == 0.0):
        raise ValueError("a neighbour coincides with the centre")
    big = 1e3 * (1.0 + float(np.max(np.linalg.norm(nb, axis=1))))
    poly = [(np.array([-big, -big]), -1), (np.array([big, -big]), -1),
            (np.array([big, big]), -1), (np.array([-big, big]), -1)]
    halfplanes = []
    for k, v in enumerate(nb):
        offset = float(v @ v) / 2
        halfplanes.append((v.copy(), offset))
        poly = _clip(poly, v, offset, k)
    verts = np.array([p for p, _ in poly]) if poly else np.zeros((0, 2))
    labels = [lab for _, lab in poly]
    return ConvexCell(vertices=verts + c, labels=labels, halfplanes=halfplanes,
                      bounded=-1 not in labels, center=c)


# --- truncation ------------------------------------------------------------------

@dataclass
class _Seg:
    label: int
    start: np.ndarray
    end: np.ndarray
    start_on_circle: bool
    end_on_circle: bool


def _segments_in_disk(cell: ConvexCell, radius: float) -> list[_Seg]:
    verts = cell.vertices - cell.center
    n = len(verts)
    segs: list[_Seg] = []
    r2 = radius * radius
    for i in range(n):
        p, q = verts[i], verts[(i + 1) % n]
        d = q - p
        length = float(np.linalg.norm(d))
        if length == 0.0:
            continue
        u = d / length
        # work from the foot of the perpendicular: clipped edges can be very long
        along = -float(p @ u)
        foot = p + along * u
        h2 = float(foot @ foot)
        if h2 >= r2:
            continue
        w = math.sqrt(r2 - h2)
        s0, s1 = along - w, along + w
        lo, hi = max(0.0, s0), min(length, s1)
        if hi <= lo:
            continue
        start = foot - w * u if s0 >= 0.0 else p
        end = foot + w * u if s1 <= length else q
        segs.append(_Seg(cell.labels[i], start, end,
                         start_on_circle=s0 >= 0.0 or abs(np.linalg.norm(start) - radius) < 1e-12,
                         end_on_circle=s1 <= length or abs(np.linalg.norm(end) - radius) < 1e-12))
    return segs


def _angle(p: np.ndarray) -> float:
    return math.atan2(float(p[1]), float(p[0])) % (2 * math.pi)


def _ccw_gap(a: float, b: float) -> float:
    """Counterclockwise angle from direction a to direction b in [0, 2 pi)."""
    return (b - a) % (2 * math.pi)


def _tuple(p) -> tuple[float, float]:
    return (float(p[0]), float(p[1]))


def truncate_boundary(cell: ConvexCell, radius: float = TRUNC) -> list[BoundaryPiece]:
    """Boundary of cell ∩ disk(radius) about the cell centre as segments and arcs.

    Segments carry kind ``"S"`` and the neighbour index in ``side``; arcs carry
    kind ``"B"``.  Lengths are exact for this polygon.
    """
    segs = _segments_in_disk(cell, radius)
    if not segs:
        return [BoundaryPiece("B", 2 * math.pi * radius, 2 * math.pi, [], (radius, 0.0), (radius, 0.0),
                              theta_start=0.0, theta_end=2 * math.pi)]
    out: list[BoundaryPiece] = []
    for i, s in enumerate(segs):
        out.append(BoundaryPiece("S", float(np.linalg.norm(s.end - s.start)),
                                 _ccw_gap(_angle(s.start), _angle(s.end)), [], _tuple(s.start), _tuple(s.end),
                                 side=str(s.label)))
        nxt = segs[(i + 1) % len(segs)]
        if s.end_on_circle and nxt.start_on_circle:
            a0, a1 = _angle(s.end), _angle(nxt.start)
            gap = _ccw_gap(a0, a1)
            if len(segs) == 1 and gap == 0.0:
                gap = 2 * math.pi
            if gap > 0.0:
                out.append(BoundaryPiece("B", radius * gap, gap, [], _tuple(s.end), _tuple(nxt.start),
                                         theta_start=a0, theta_end=a0 + gap))
    return out


# --- partition -----------------------------------------------------------------

def neighbours_within(center, points, outer: float = OUTER) -> np.ndarray:
    """Points at distance in (0, outer) from centre, translated so centre is the origin."""
    c = np.asarray(center, dtype=float)
    pts = np.asarray(points, dtype=float).reshape(-1, 2) - c
    d = np.linalg.norm(pts, axis=1)
    return pts[(d > 0.0) & (d < outer)]


def _l_term(u: np.ndarray) -> tuple[tuple[float, float], float]:
    return (_tuple(u), scalar.L(float(np.linalg.norm(u)) / 2))


def partition_boundary(center, V) -> list[BoundaryPiece]:
    """Split the truncated boundary of the cell of ``center`` into A, B and C pieces.

    ``V`` may be a :class:`Packing2` or an array of points; only points at
    distance in (0, sqrt 8) from the centre are used.
    """
    pts = V.array() if isinstance(V, Packing2) else np.asarray(V, dtype=float).reshape(-1, 2)
    nb = neighbours_within(center, pts)
    if len(nb) == 0:
        return [BoundaryPiece("B", 2 * math.pi * TRUNC, 2 * math.pi, [], (TRUNC, 0.0), (TRUNC, 0.0),
                              theta_start=0.0, theta_end=2 * math.pi, margin=_margin_b(2 * math.pi))]
    cell = voronoi_cell((0.0, 0.0), nb)
    segs = _segments_in_disk(cell, TRUNC)
    feet = {}
    for s in segs:
        v = nb[s.label]
        foot = v / 2
        d = s.end - s.start
        proj = float((foot - s.start) @ d) / float(d @ d)
        if not (-1e-9 <= proj <= 1 + 1e-9):
            raise PartitionError(f"foot of neighbour {_tuple(v)} is not on its boundary edge")
        feet[s.label] = foot
    if len(feet) != len(nb):
        missing = [ _tuple(nb[k]) for k in range(len(nb)) if k not in feet]
        raise PartitionError(f"neighbours without a boundary edge: {missing}")

    pieces: list[BoundaryPiece] = []
    n = len(segs)
    for i, s in enumerate(segs):
        v = nb[s.label]
        foot = feet[s.label]
        # first half: start -> foot
        if s.start_on_circle:
            pieces.append(_piece_c(v, foot, s.start, "cw"))
        # second half: foot -> end
        if s.end_on_circle:
            pieces.append(_piece_c(v, foot, s.end, "ccw"))
            nxt = segs[(i + 1) % n]
            if nxt.start_on_circle:
                a0 = _angle(s.end)
                gap = _ccw_gap(a0, _angle(nxt.start))
                if n == 1 and gap == 0.0:
                    gap = 2 * math.pi
                pieces.append(BoundaryPiece("B", TRUNC * gap, gap, [], _tuple(s.end), _tuple(nxt.start),
                                            theta_start=a0, theta_end=a0 + gap, margin=_margin_b(gap)))
        else:
            nxt = segs[(i + 1) % n]
            if nxt.start_on_circle:
                raise PartitionError("interior vertex followed by a circle crossing")
            pieces.append(_piece_a(v, nb[nxt.label], foot, s.end, feet[nxt.label]))
    return pieces


def _margin_b(gap: float) -> float:
    return (TRUNC - scalar.B) * gap


def _piece_c(v: np.ndarray, foot: np.ndarray, circle_pt: np.ndarray, side: str) -> BoundaryPiece:
    h = float(np.linalg.norm(v)) / 2
    length = float(np.linalg.norm(circle_pt - foot))
    angle = math.atan2(length, h)
    term = _l_term(v)
    start, end = (circle_pt, foot) if side == "cw" else (foot, circle_pt)
    margin = length - scalar.B * angle - scalar.C * term[1]
    return BoundaryPiece("C", length, angle, [term], _tuple(start), _tuple(end), v=_tuple(v), side=side,
                         margin=margin)


def _piece_a(u1: np.ndarray, u2: np.ndarray, f1: np.ndarray, q: np.ndarray, f2: np.ndarray) -> BoundaryPiece:
    if float(np.linalg.norm(q)) >= TRUNC:
        raise PartitionError("Voronoi vertex of an A piece lies outside the truncation disk")
    length = float(np.linalg.norm(q - f1) + np.linalg.norm(f2 - q))
    cosang = float(u1 @ u2) / float(np.linalg.norm(u1) * np.linalg.norm(u2))
    angle = math.acos(max(-1.0, min(1.0, cosang)))
    terms = [_l_term(u1), _l_term(u2)]
    margin = length - scalar.B * angle - scalar.C * (terms[0][1] + terms[1][1])
    return BoundaryPiece("A", length, angle, terms, _tuple(f1), _tuple(f2), u1=_tuple(u1), u2=_tuple(u2),
                         margin=margin)


def certify_cell(center, V) -> CellReport:
    """Per-piece margins, their sum and the perimeter bound for one truncated cell."""
    pts = V.array() if isinstance(V, Packing2) else np.asarray(V, dtype=float).reshape(-1, 2)
    pieces = partition_boundary(center, pts)
    nb = neighbours_within(center, pts)
    sum_l = float(sum(scalar.L(float(np.linalg.norm(v)) / 2) for v in nb))
    total = float(sum(p.length for p in pieces))
    margins = [p.margin for p in pieces]
    failures = [f"{p.kind} piece starting at {p.start} has margin {p.margin!r}" for p in pieces
                if p.margin < -REPORT_TOL]
    angle_sum = sum(p.angle for p in pieces)
    if abs(angle_sum - 2 * math.pi) > 1e-9:
        failures.append(f"piece angles sum to {angle_sum!r}, not 2 pi")
    lemma = 2 * math.pi * scalar.B + 2 * scalar.C * sum_l
    passed = not failures and total >= HEX_BOUND - REPORT_TOL
    return CellReport(total_length=total, pieces=pieces, sum_L=sum_l, passed=passed,
                      margin_sum=float(sum(margins)), min_margin=float(min(margins)),
                      lemma_bound=lemma, failures=failures)


def truncated_length(center, V) -> float:
    """Length of the truncated boundary computed directly from the clipped polygon."""
    pts = V.array() if isinstance(V, Packing2) else np.asarray(V, dtype=float).reshape(-1, 2)
    nb = neighbours_within(center, pts)
    if len(nb) == 0:
        return 2 * math.pi * TRUNC
    return float(sum(p.length for p in truncate_boundary(voronoi_cell((0.0, 0.0), nb))))


# --- oracles and fixtures ---------------------------------------------------------

def ell_pair_by_construction(h1: float, h2: float, t: float) -> float:
    """Boundary length inside conv{0, u1, u2} from explicit bisector intersection."""
    u1 = np.array([2 * h1, 0.0])
    cos_theta = (4 * h1 * h1 + 4 * h2 * h2 - t * t) / (8 * h1 * h2)
    theta = math.acos(max(-1.0, min(1.0, cos_theta)))
    u2 = 2 * h2 * np.array([math.cos(theta), math.sin(theta)])
    q = np.linalg.solve(np.array([u1, u2]), np.array([u1 @ u1 / 2, u2 @ u2 / 2]))
    return float(np.linalg.norm(q - u1 / 2) + np.linalg.norm(q - u2 / 2))


def hex_lattice(radius: int = 2) -> Packing2:
    """Patch of the hexagonal lattice with minimal distance 2 (origin first)."""
    pts = [(0.0, 0.0)]
    a, b = np.array([2.0, 0.0]), np.array([1.0, math.sqrt(3.0)])
    for i in range(-radius, radius + 1):
        for j in range(-radius, radius + 1):
            if (i, j) == (0, 0) or abs(i + j) > radius:
                continue
            p = i * a + j * b
            pts.append((float(p[0]), float(p[1])))
    return Packing2(tuple(pts))


def figure2_packing() -> Packing2:
    """Five-point packing P0..P4 used in the level and cell illustrations."""
    def polar(r, deg):
        return (r * math.cos(math.radians(deg)), r * math.sin(math.radians(deg)))
    return Packing2(((0.0, 0.0), (2.4, 0.0), polar(2.2, 100), polar(2.0, 160), polar(3.2, 250)))


def random_saturated_packing(rng: np.random.Generator, radius: float = OUTER + 2.0,
                             grid_step: float = 0.05, contact_bias: float = 0.6) -> Packing2:
    """Random packing containing the origin, saturated on a grid inside ``radius``.

    Points are added one at a time; with probability ``contact_bias`` the new
    point touches an existing one, otherwise it is a uniformly chosen free grid
    point.  Stops when no grid point within ``radius`` is at distance >= 2 from
    all points, so there is no room left near the origin up to grid resolution.
    """
    g = np.arange(-radius, radius + grid_step / 2, grid_step)
    gx, gy = np.meshgrid(g, g)
    cand = np.column_stack([gx.ravel(), gy.ravel()])
    cand = cand[np.linalg.norm(cand, axis=1) < radius]
    pts = [np.zeros(2)]
    free = np.linalg.norm(cand, axis=1) >= 2.0
    while True:
        placed = False
        if rng.random() < contact_bias:
            for _ in range(20):
                base = pts[rng.integers(len(pts))]
                ang = rng.uniform(0, 2 * math.pi)
                p = base + 2.0 * np.array([math.cos(ang), math.sin(ang)])
                if np.linalg.norm(p) >= radius:
                    continue
                arr = np.array(pts)
                if np.min(np.linalg.norm(arr - p, axis=1)) >= 2.0 - 1e-12:
                    placed = True
                    break
        if not placed:
            idx = np.flatnonzero(free)
            if len(idx) == 0:
                break
            p = cand[idx[rng.integers(len(idx))]]
        pts.append(p)
        free &= np.linalg.norm(cand - p, axis=1) >= 2.0
    return Packing2.from_points(np.array(pts))


__all__ = [
    "BoundaryPiece", "CellReport", "ConvexCell", "HEX_BOUND", "OUTER", "Packing2", "PackingError",
    "PartitionError", "TRUNC", "certify_cell", "ell_pair_by_construction", "figure2_packing", "hex_lattice",
    "neighbours_within", "partition_boundary", "random_saturated_packing", "truncate_boundary",
    "truncated_length", "voronoi_cell",
]
