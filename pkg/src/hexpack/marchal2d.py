"""Levels, Rogers simplices and Marchal cells of planar packings.

A point has level >= k when it lies in the shape of some k-element subset S
of the packing: the closed sqrt 2 disk for one point, the rhombus
conv(S ∪ X_S) for a pair closer than sqrt 8, and conv(S) for larger
cocircular subsets of circumradius below sqrt 2.

Every point of the plane is assigned a flag (v, e, t) by walking from its
nearest packing point v along the ray through it to the Voronoi edge of v it
hits (edge e) and reading off on which side of the edge midpoint it lands
(triangle t).  Marchal k-cells group the flags: by triangle for k = 3, by
edge and triangle for k = 2 and singly otherwise.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import Delaunay, cKDTree

TRUNC2 = 2.0  # squared truncation radius
OUTER = math.sqrt(8.0)
COCIRCULAR_TOL = 1e-9


class ShapeError(ValueError):
    """Generator set does not define a shape."""


class DegeneracyError(RuntimeError):
    """Four or more points are cocircular on an empty circle."""

    def __init__(self, message: str, quadruple: tuple[int, ...]):
        super().__init__(message)
        self.quadruple = quadruple


@dataclass(frozen=True)
class Window:
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    @classmethod
    def around(cls, points: np.ndarray, pad: float = math.sqrt(2.0)) -> "Window":
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        if len(pts) == 0:
            return cls(-pad, -pad, pad, pad)
        lo, hi = pts.min(axis=0) - pad, pts.max(axis=0) + pad
        return cls(float(lo[0]), float(lo[1]), float(hi[0]), float(hi[1]))

    @property
    def area(self) -> float:
        return (self.xmax - self.xmin) * (self.ymax - self.ymin)

    def contains(self, p) -> bool:
        return self.xmin <= p[0] <= self.xmax and self.ymin <= p[1] <= self.ymax

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        return np.column_stack([rng.uniform(self.xmin, self.xmax, n), rng.uniform(self.ymin, self.ymax, n)])


# --- shapes -----------------------------------------------------------------------

def circumcircle(points: np.ndarray) -> tuple[np.ndarray, float]:
    """Circumcentre and radius of three or more points (least squares for more)."""
    p = np.asarray(points, dtype=float)
    a = 2 * (p[1:] - p[0])
    b = np.sum(p[1:] ** 2 - p[0] ** 2, axis=1)
    centre, *_ = np.linalg.lstsq(a, b, rcond=None)
    radius = float(np.linalg.norm(p[0] - centre))
    return centre, radius


def _shape_kind(S: np.ndarray) -> str:
    k = len(S)
    if k == 1:
        return "disk"
    if k == 2:
        if np.linalg.norm(S[0] - S[1]) >= OUTER:
            raise ShapeError("pair separated by sqrt 8 or more has no shape")
        return "rhombus"
    centre, r = circumcircle(S)
    if np.max(np.abs(np.linalg.norm(S - centre, axis=1) - r)) > COCIRCULAR_TOL * max(1.0, r):
        raise ShapeError("points are not cocircular")
    if r >= math.sqrt(2.0):
        raise ShapeError(f"circumradius {r!r} is not below sqrt 2")
    if k == 3:
        return "triangle"
    return "polygon"


def _in_rhombus(p: np.ndarray, u: np.ndarray, v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    mid = (u + v) / 2
    axis = v - u
    d = float(np.linalg.norm(axis))
    ax = axis / d
    normal = np.array([-ax[1], ax[0]])
    half_width = math.sqrt(max(0.0, 2.0 - d * d / 4))
    rel = p - mid
    a = np.abs(rel @ ax) / (d / 2)
    b = np.abs(rel @ normal) / half_width if half_width > 0 else np.where(np.abs(rel @ normal) <= tol, 0.0, np.inf)
    return a + b <= 1.0 + tol


def _in_convex_polygon(p: np.ndarray, poly: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    centre = poly.mean(axis=0)
    ang = np.arctan2(poly[:, 1] - centre[1], poly[:, 0] - centre[0])
    poly = poly[np.argsort(ang)]
    inside = np.ones(len(p), dtype=bool)
    for i in range(len(poly)):
        a, b = poly[i], poly[(i + 1) % len(poly)]
        cross = (b[0] - a[0]) * (p[:, 1] - a[1]) - (b[1] - a[1]) * (p[:, 0] - a[0])
        inside &= cross >= -tol
    return inside


def shape_contains(S, p) -> bool | np.ndarray:
    """Whether p (a point or an (n, 2) array) lies in conv(S ∪ X_S)."""
    S = np.asarray(S, dtype=float).reshape(-1, 2)
    pts = np.asarray(p, dtype=float)
    single = pts.ndim == 1
    pts = pts.reshape(-1, 2)
    kind = _shape_kind(S)
    if kind == "disk":
        out = np.sum((pts - S[0]) ** 2, axis=1) <= TRUNC2 + 1e-12
    elif kind == "rhombus":
        out = _in_rhombus(pts, S[0], S[1])
    else:
        out = _in_convex_polygon(pts, S)
    return bool(out[0]) if single else out


def rhombus_by_hull(u, v, p) -> bool:
    """Generic convex-hull membership for the pair shape (used to cross-check the rhombus test)."""
    u, v = np.asarray(u, float), np.asarray(v, float)
    d = v - u
    n = np.array([-d[1], d[0]]) / np.linalg.norm(d)
    w = math.sqrt(2.0 - float(d @ d) / 4)
    mid = (u + v) / 2
    hull = np.array([u, mid + w * n, v, mid - w * n])
    return bool(_in_convex_polygon(np.asarray(p, float).reshape(1, 2), hull)[0])


# --- levels -----------------------------------------------------------------------

@dataclass
class ShapeIndex:
    """All shapes of a packing, grouped by generator count."""

    points: np.ndarray
    pairs: list[tuple[int, int]]
    triangles: list[tuple[int, int, int]]
    higher: list[tuple[int, ...]]

    @classmethod
    def build(cls, V) -> "ShapeIndex":
        pts = np.asarray(V, dtype=float).reshape(-1, 2)
        pairs = []
        if len(pts) > 1:
            tree = cKDTree(pts)
            pairs = sorted((int(i), int(j)) for i, j in tree.query_pairs(OUTER - 1e-15))
            pairs = [(i, j) for i, j in pairs if np.linalg.norm(pts[i] - pts[j]) < OUTER]
        adj: dict[int, set[int]] = {i: set() for i in range(len(pts))}
        for i, j in pairs:
            adj[i].add(j)
            adj[j].add(i)
        triangles, higher = [], []
        for i, j in pairs:
            for k in sorted(adj[i] & adj[j]):
                if k > j:
                    try:
                        _shape_kind(pts[[i, j, k]])
                    except ShapeError:
                        continue
                    triangles.append((i, j, k))
        # larger cocircular sets extend a valid triangle by points on its circle
        for tri in triangles:
            centre, r = circumcircle(pts[list(tri)])
            extra = [m for m in range(len(pts)) if m not in tri
                     and abs(float(np.linalg.norm(pts[m] - centre)) - r) <= COCIRCULAR_TOL * max(1.0, r)]
            for size in range(1, len(extra) + 1):
                for more in itertools.combinations(extra, size):
                    key = tuple(sorted(tri + more))
                    if key not in higher:
                        higher.append(key)
        return cls(pts, pairs, triangles, higher)


def levels(samples, V, index: ShapeIndex | None = None) -> np.ndarray:
    """Level of each sample point (may exceed 3 only if the packing admits a card-4 shape)."""
    idx = index or ShapeIndex.build(V)
    pts = idx.points
    q = np.asarray(samples, dtype=float).reshape(-1, 2)
    lev = np.zeros(len(q), dtype=np.int64)
    if len(pts) == 0:
        return lev
    tree = cKDTree(pts)
    dist, _ = tree.query(q)
    lev[dist * dist <= TRUNC2 + 1e-12] = 1
    for i, j in idx.pairs:
        cand = lev == 1
        if not cand.any():
            break
        hit = np.zeros(len(q), dtype=bool)
        hit[cand] = _in_rhombus(q[cand], pts[i], pts[j])
        lev[hit] = 2
    for tri in idx.triangles:
        cand = lev == 2
        if not cand.any():
            break
        hit = np.zeros(len(q), dtype=bool)
        hit[cand] = _in_convex_polygon(q[cand], pts[list(tri)])
        lev[hit] = 3
    for group in idx.higher:
        cand = lev >= 3
        hit = np.zeros(len(q), dtype=bool)
        hit[cand] = _in_convex_polygon(q[cand], pts[list(group)])
        lev[hit] = np.maximum(lev[hit], len(group))
    return lev


def level(p, V) -> int:
    return int(levels(np.asarray(p, dtype=float).reshape(1, 2), V)[0])


# --- Rogers simplices ---------------------------------------------------------------

@dataclass(frozen=True)
class RogersSimplex:
    v: int
    edge: tuple[int, int]
    triangle: tuple[int, int, int]
    vertices: tuple[tuple[float, float], tuple[float, float], tuple[float, float]]
    signed_area: float
    partial: bool = False

    @property
    def flag(self) -> tuple[int, tuple[int, int], tuple[int, int, int]]:
        return (self.v, self.edge, self.triangle)


@dataclass
class Triangulation:
    points: np.ndarray
    simplices: np.ndarray  # (m, 3) vertex indices, counterclockwise
    circumcentres: np.ndarray
    perturbed: list[int] = field(default_factory=list)
    bare_edges: list[tuple[int, int]] = field(default_factory=list)  # edges with no triangle

    def edge_triangles(self) -> dict[tuple[int, int], dict[str, int]]:
        """For each Delaunay edge (i, j), i < j: triangles on its left/right as seen from i to j."""
        out: dict[tuple[int, int], dict[str, int]] = {}
        for t, tri in enumerate(self.simplices):
            for a in range(3):
                i, j = int(tri[a]), int(tri[(a + 1) % 3])
                # tri is ccw, so t lies to the left of i -> j
                key = (min(i, j), max(i, j))
                side = "left" if i < j else "right"
                out.setdefault(key, {})[side] = t
        for key in self.bare_edges:
            out.setdefault(key, {})
        return out


def _orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def delaunay(V, perturb: bool = False) -> Triangulation:
    """Delaunay triangulation; cocircular empty circles raise unless ``perturb``.

    With ``perturb`` the point of index i is moved by 1e-9 * (i + 1) along a
    fixed irrational direction, a deterministic tie-break by index.
    """
    pts = np.asarray(V, dtype=float).reshape(-1, 2)
    if len(pts) < 3 or np.linalg.matrix_rank(pts[1:] - pts[0], tol=1e-12) < 2:
        return _degenerate_triangulation(pts)
    work = pts.copy()
    moved: list[int] = []
    if perturb:
        direction = np.array([math.cos(1.0), math.sin(1.0)])
        work = pts + 1e-9 * (np.arange(len(pts))[:, None] + 1) * direction
        moved = list(range(len(pts)))
    tri = Delaunay(work)
    simp = tri.simplices.copy()
    for t in range(len(simp)):
        a, b, c = pts[simp[t]]
        if _orient(a, b, c) < 0:
            simp[t] = simp[t][[0, 2, 1]]
    centres = np.array([circumcircle(pts[s])[0] for s in simp])
    tr = Triangulation(pts, simp, centres, moved)
    if not perturb:
        _check_degenerate(tr)
    return tr


def _degenerate_triangulation(pts: np.ndarray) -> Triangulation:
    """Fewer than three points, or all collinear: consecutive points along the line are the edges."""
    order: list[int] = []
    if len(pts) >= 2:
        direction = pts[int(np.argmax(np.linalg.norm(pts - pts[0], axis=1)))] - pts[0]
        order = [int(i) for i in np.argsort((pts - pts[0]) @ direction)]
    edges = [(min(a, b), max(a, b)) for a, b in zip(order, order[1:])]
    empty = np.zeros((0, 3), dtype=int)
    return Triangulation(pts, empty, np.zeros((0, 2)), bare_edges=edges)


def _check_degenerate(tr: Triangulation) -> None:
    pts = tr.points
    for t, s in enumerate(tr.simplices):
        centre = tr.circumcentres[t]
        r = float(np.linalg.norm(pts[s[0]] - centre))
        d = np.abs(np.linalg.norm(pts - centre, axis=1) - r)
        on = [int(m) for m in np.flatnonzero(d <= COCIRCULAR_TOL * max(1.0, r)) if m not in s]
        if on:
            quad = tuple(sorted([int(x) for x in s] + on[:1]))
            raise DegeneracyError(f"points {quad} are cocircular", quad)


def rogers_partition(V, window: Window | None = None, perturb: bool = False) -> list[RogersSimplex]:
    """Six signed Rogers simplices per Delaunay triangle meeting the window."""
    tr = delaunay(V, perturb)
    pts = tr.points
    out = []
    for t, s in enumerate(tr.simplices):
        verts = pts[s]
        inside = window is None or all(window.contains(p) for p in verts)
        meets = window is None or inside or any(window.contains(p) for p in verts) or window.contains(tr.circumcentres[t])
        if not meets:
            continue
        c = tr.circumcentres[t]
        key = tuple(sorted(int(x) for x in s))
        for a in range(3):
            for b in range(3):
                if a == b:
                    continue
                v, w = int(s[a]), int(s[b])
                third = int(s[3 - a - b])
                pv, pw, p3 = pts[v], pts[w], pts[third]
                mid = (pv + pw) / 2
                sign = 1.0 if _orient(pv, mid, p3) > 0 else -1.0
                area = 0.5 * _orient(pv, mid, c) * sign
                out.append(RogersSimplex(v=v, edge=(min(v, w), max(v, w)), triangle=key,
                                         vertices=(tuple(pv), tuple(mid), tuple(c)), signed_area=float(area),
                                         partial=not inside))
    return out


def triangle_area_sums(simplices: Iterable[RogersSimplex], V) -> dict[tuple[int, int, int], tuple[float, float]]:
    """Per triangle: (sum of signed simplex areas, triangle area)."""
    pts = np.asarray(V, dtype=float).reshape(-1, 2)
    sums: dict[tuple[int, int, int], float] = {}
    for s in simplices:
        sums[s.triangle] = sums.get(s.triangle, 0.0) + s.signed_area
    return {t: (a, abs(_orient(*pts[list(t)])) / 2) for t, a in sums.items()}


# --- locating flags ----------------------------------------------------------------

@dataclass
class FlagLocator:
    """Vectorised assignment of plane points to flags (v, e, t)."""

    tri: Triangulation

    def __post_init__(self):
        pts = self.tri.points
        self.tree = cKDTree(pts)
        self.edges = self.tri.edge_triangles()
        self.nbrs: dict[int, list[int]] = {i: [] for i in range(len(pts))}
        for i, j in self.edges:
            self.nbrs[i].append(j)
            self.nbrs[j].append(i)

    def locate(self, q: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """Arrays (v, w, t, ambiguous, dist): nearest point, edge partner (-1 if none), triangle (-1
        if outside), tie flag and distance to the nearest point."""
        pts = self.tri.points
        q = np.asarray(q, dtype=float).reshape(-1, 2)
        d, nn = self.tree.query(q, k=2) if len(pts) > 1 else self.tree.query(q, k=1)
        if len(pts) > 1:
            v = nn[:, 0]
            ambiguous = np.abs(d[:, 1] - d[:, 0]) <= 1e-12
        else:
            v = np.asarray(nn)
            ambiguous = np.zeros(len(q), dtype=bool)
        w_out = np.full(len(q), -1)
        t_out = np.full(len(q), -1)
        for vi in np.unique(v):
            sel = np.flatnonzero(v == vi)
            nb = self.nbrs[int(vi)]
            if not nb:
                continue
            rel = q[sel] - pts[vi]
            dirs = pts[nb] - pts[vi]  # (m, 2)
            dots = rel @ dirs.T  # (n, m)
            half = 0.5 * np.sum(dirs ** 2, axis=1)
            with np.errstate(divide="ignore", invalid="ignore"):
                s = np.where(dots > 0, half[None, :] / dots, np.inf)
            best = np.argmin(s, axis=1)
            finite = np.isfinite(s[np.arange(len(sel)), best])
            srt = np.sort(s, axis=1)
            if s.shape[1] > 1:
                srt = np.where(np.isfinite(srt), srt, 1e300)
                ambiguous[sel] |= finite & (np.abs(srt[:, 1] - srt[:, 0]) <= 1e-12 * np.maximum(1.0, srt[:, 0]))
            for k_local, wi in enumerate(nb):
                rows = np.flatnonzero(finite & (best == k_local))
                if len(rows) == 0:
                    continue
                idx = sel[rows]
                w_out[idx] = wi
                a, b = (int(vi), wi)
                hit = pts[a] + rel[rows] * s[rows, k_local][:, None]
                mid = (pts[a] + pts[b]) / 2
                cross = (pts[b][0] - pts[a][0]) * (hit[:, 1] - mid[1]) - (pts[b][1] - pts[a][1]) * (hit[:, 0] - mid[0])
                sides = self.edges[(min(a, b), max(a, b))]
                left_of_ab = "left" if a < b else "right"
                right_of_ab = "right" if a < b else "left"
                t_left = sides.get(left_of_ab, -1)
                t_right = sides.get(right_of_ab, -1)
                t_out[idx] = np.where(cross > 0, t_left, t_right)
        return v, w_out, t_out, ambiguous, d[:, 0] if len(pts) > 1 else d


# --- Marchal cells -------------------------------------------------------------------

@dataclass
class MarchalCell:
    level: int
    key: tuple
    simplices: list[RogersSimplex]
    samples: int = 0
    partial: bool = False

    def contains(self, p, V, locator: "FlagLocator | None" = None) -> bool:
        """Membership: the point has this level and its flag belongs to this group."""
        loc = locator or FlagLocator(delaunay(V))
        keys = group_keys(np.asarray(p, dtype=float).reshape(1, 2), V, loc)
        return keys[0] == (self.level, self.key)


def _group_key(k: int, v: int, w: int, t: int, tri: Triangulation):
    tkey = tuple(sorted(int(x) for x in tri.simplices[t])) if t >= 0 else None
    ekey = (min(v, w), max(v, w)) if w >= 0 else None
    if k >= 3:
        return (tkey,)
    if k == 2:
        return (ekey, tkey)
    return (v, ekey, tkey)


def group_keys(samples, V, locator: FlagLocator, index: ShapeIndex | None = None) -> list[tuple]:
    lev = levels(samples, V, index)
    v, w, t, _, _ = locator.locate(samples)
    return [(int(k), _group_key(int(k), int(a), int(b), int(c), locator.tri)) for k, a, b, c in zip(lev, v, w, t)]


def marchal_cells(V, window: Window | None = None, n_samples: int = 200_000, seed: int = 0,
                  perturb: bool = False) -> list[MarchalCell]:
    """Marchal cells with their Rogers simplex groups, found by sampling the window.

    A cell is reported when at least one sample falls in it; cells whose
    simplices leave the window, or whose flags lie outside the convex hull,
    are marked partial.
    """
    pts = np.asarray(V, dtype=float).reshape(-1, 2)
    window = window or Window.around(pts)
    if len(pts) == 0:
        return [MarchalCell(level=0, key=(None, None, None), simplices=[], samples=n_samples, partial=True)]
    tri = delaunay(pts, perturb)
    loc = FlagLocator(tri)
    simplices = rogers_partition(pts, None, perturb)
    by_flag: dict[tuple, RogersSimplex] = {}
    for s in simplices:
        by_flag[s.flag] = s
    rng = np.random.default_rng(seed)
    q = window.sample(rng, n_samples)
    keys = group_keys(q, pts, loc)
    counts: dict[tuple, int] = {}
    for k in keys:
        counts[k] = counts.get(k, 0) + 1
    cells = []
    for (k, key), n in sorted(counts.items(), key=lambda kv: (kv[0][0], repr(kv[0][1]))):
        members = [s for s in simplices if _in_group(s, k, key)]
        partial = any(x is None for x in key) or any(not window.contains(p) for s in members for p in s.vertices)
        cells.append(MarchalCell(level=k, key=key, simplices=members, samples=n, partial=partial))
    return cells


def _in_group(s: RogersSimplex, k: int, key: tuple) -> bool:
    if k >= 3:
        return s.triangle == key[0]
    if k == 2:
        return s.edge == key[0] and s.triangle == key[1]
    return s.v == key[0] and s.edge == key[1] and s.triangle == key[2]


def census(cells: Sequence[MarchalCell]) -> dict[int, int]:
    """Number of nonempty cells per level."""
    out: dict[int, int] = {}
    for c in cells:
        out[c.level] = out.get(c.level, 0) + 1
    return dict(sorted(out.items()))


# --- validation -------------------------------------------------------------------

@dataclass
class CoverageReport:
    n_samples: int
    max_level: int
    level_counts: dict[int, int]
    claimed_once: float
    claim_threshold: float
    level_fractions: dict[int, float]
    stable: bool
    seed_comparison: dict[int, list[float]]
    perturbed: bool
    passed: bool
    failures: list[str]

    def to_json(self) -> dict:
        return {
            "n_samples": self.n_samples,
            "max_level": self.max_level,
            "level_counts": {str(k): v for k, v in self.level_counts.items()},
            "claimed_once": self.claimed_once,
            "claim_threshold": self.claim_threshold,
            "level_fractions": {str(k): v for k, v in self.level_fractions.items()},
            "stable": self.stable,
            "seed_comparison": {str(k): v for k, v in self.seed_comparison.items()},
            "perturbed": self.perturbed,
            "pass": self.passed,
            "failures": self.failures,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def validate_partition(V, window: Window | None = None, n_samples: int = 100_000, seed: int = 0,
                       perturb: bool = False, chunk: int = 250_000) -> CoverageReport:
    """Sample the window and check levels, unique cell membership and stability across seeds."""
    if n_samples < 1:
        raise ValueError("n_samples must be at least 1")
    pts = np.asarray(V, dtype=float).reshape(-1, 2)
    window = window or Window.around(pts)
    index = ShapeIndex.build(pts)
    loc = FlagLocator(delaunay(pts, perturb)) if len(pts) >= 1 else None
    failures: list[str] = []

    def run(seed_: int) -> tuple[np.ndarray, int]:
        rng = np.random.default_rng(seed_)
        levs, ambiguous = [], 0
        left = n_samples
        while left > 0:
            m = min(chunk, left)
            q = window.sample(rng, m)
            levs.append(levels(q, pts, index))
            if loc is not None:
                ambiguous += int(np.count_nonzero(loc.locate(q)[3]))
            left -= m
        return np.concatenate(levs), ambiguous

    lev, ambiguous = run(seed)
    lev2, _ = run(seed + 1)
    max_level = int(lev.max()) if len(lev) else 0
    if max_level >= 4:
        failures.append(f"{int(np.count_nonzero(lev >= 4))} samples have level >= 4")
    counts = {k: int(np.count_nonzero(lev == k)) for k in range(max(4, max_level + 1))}
    claimed = 1.0 - ambiguous / n_samples
    threshold = 1.0 - 10.0 / math.sqrt(n_samples)
    if claimed < threshold:
        failures.append(f"only {claimed:.6f} of samples lie in exactly one cell")
    fractions = {k: c / n_samples for k, c in counts.items()}
    comparison, stable = {}, True
    for k in counts:
        f1, f2 = fractions[k], float(np.count_nonzero(lev2 == k)) / n_samples
        sigma = math.sqrt(max(f1 * (1 - f1), f2 * (1 - f2), 1.0 / n_samples) * 2 / n_samples)
        comparison[k] = [f1, f2]
        if abs(f1 - f2) > 3 * sigma:
            stable = False
    if not stable:
        failures.append("level area estimates differ across seeds by more than 3 sigma")
    return CoverageReport(n_samples=n_samples, max_level=max_level, level_counts=counts, claimed_once=claimed,
                          claim_threshold=threshold, level_fractions=fractions, stable=stable,
                          seed_comparison=comparison, perturbed=perturb, passed=not failures, failures=failures)


__all__ = [
    "CoverageReport", "DegeneracyError", "FlagLocator", "MarchalCell", "RogersSimplex", "ShapeError",
    "ShapeIndex", "Triangulation", "Window", "census", "circumcircle", "delaunay", "group_keys", "level",
    "levels", "marchal_cells", "rhombus_by_hull", "rogers_partition", "shape_contains", "triangle_area_sums",
    "validate_partition",
]
