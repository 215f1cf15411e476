"""Checkers for L-sums of points in the annulus around a packing point.

Points live at norms between 2 and 2 h0 (or sqrt 8 for the norm-sum bound)
and are pairwise at distance >= 2.  The planar checker reproduces the angle
argument: consecutive points subtend at least alpha_i + alpha_{i+1} at the
origin and alpha_i >= 0.16 L_i + 0.32, so seven points give
sum L <= (2 pi - 14 * 0.32) / 0.32 < 6.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from . import scalar
from .interval import PI, Box, Certificate, ExprFn, Interval, Options, verify_nonneg
from .interval import func as F
from .parallel import pmap

TOL = 1e-9
ANNULUS_OUTER = scalar.CONSTANTS.annulus_outer  # 2 h0 = 2.52
FT_OUTER = scalar.CONSTANTS.r_outer_ft  # sqrt 8
FT_BOUND = 24 + 2 * scalar.H0  # 26.52
SEVEN_POINT_BOUND = (2 * math.pi - 14 * scalar.CONSTANTS.c_off) / scalar.CONSTANTS.c_off


class ConfigError(ValueError):
    """Configuration violates the annulus or separation conditions."""


@dataclass(frozen=True)
class AnnulusConfig:
    dimension: int
    points: tuple[tuple[float, ...], ...]
    outer: float = ANNULUS_OUTER
    check_separation: bool = True

    def __post_init__(self):
        if self.dimension not in (2, 3):
            raise ConfigError(f"dimension must be 2 or 3, got {self.dimension}")
        pts = self.array()
        if not np.all(np.isfinite(pts)):
            raise ConfigError("non-finite coordinates")
        norms = np.linalg.norm(pts, axis=1)
        for i, n in enumerate(norms):
            if n < 2.0 - TOL or n > self.outer + TOL:
                raise ConfigError(f"point {i} has norm {n!r} outside [2, {self.outer!r}]")
        if self.check_separation and len(pts) > 1:
            i, j, d = closest_pair(pts)
            if d < 2.0 - TOL:
                raise ConfigError(f"points {i} and {j} are at distance {d!r} < 2")

    @classmethod
    def from_points(cls, points, dimension: int | None = None, **kw) -> "AnnulusConfig":
        arr = np.asarray(points, dtype=float)
        dim = dimension or (arr.shape[1] if arr.ndim == 2 and len(arr) else 2)
        arr = arr.reshape(-1, dim)
        return cls(dim, tuple(tuple(float(x) for x in row) for row in arr), **kw)

    @classmethod
    def from_json(cls, doc: dict, **kw) -> "AnnulusConfig":
        if "points" not in doc:
            raise ConfigError("config file needs a \"points\" field")
        dim = doc.get("dimension")
        if dim not in (2, 3):
            raise ConfigError("config file needs \"dimension\": 2 or 3")
        rows = doc["points"]
        for k, row in enumerate(rows):
            if len(row) != dim:
                raise ConfigError(f"points[{k}] has {len(row)} coordinates, expected {dim}")
        return cls.from_points(rows, dim, **kw)

    def array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float).reshape(-1, self.dimension)

    def norms(self) -> np.ndarray:
        return np.linalg.norm(self.array(), axis=1)

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "points": [list(p) for p in self.points]}

    def __len__(self) -> int:
        return len(self.points)


def closest_pair(pts: np.ndarray) -> tuple[int, int, float]:
    tree = cKDTree(pts)
    d, idx = tree.query(pts, k=2)
    i = int(np.argmin(d[:, 1]))
    return i, int(idx[i, 1]), float(d[i, 1])


def sum_L(cfg: AnnulusConfig) -> float:
    return float(sum(scalar.L(float(n) / 2) for n in cfg.norms()))


# --- planar lemma -------------------------------------------------------------------

@dataclass
class LemmaReport:
    card: int
    sum_L: float
    bound: float
    method: str
    equality: bool
    valid: bool
    passed: bool
    theta_sum: float | None = None
    chain_bound: float | None = None
    min_angle: float | None = None
    chain: list[dict] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "card": self.card, "sum_L": self.sum_L, "bound": self.bound, "method": self.method,
            "equality": self.equality, "valid": self.valid, "pass": self.passed,
            "theta_sum": self.theta_sum, "chain_bound": self.chain_bound, "min_angle": self.min_angle,
            "chain": self.chain, "failures": self.failures,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _cyclic(pts: np.ndarray) -> np.ndarray:
    return np.argsort(np.arctan2(pts[:, 1], pts[:, 0]))


def _gaps(pts: np.ndarray) -> np.ndarray:
    ang = np.sort(np.arctan2(pts[:, 1], pts[:, 0]))
    return np.diff(np.append(ang, ang[0] + 2 * math.pi))


def check_lemma_L_2d(cfg: AnnulusConfig) -> LemmaReport:
    """Check sum L <= 6 for a planar annulus configuration."""
    if cfg.dimension != 2:
        raise ConfigError("check_lemma_L_2d needs a planar configuration")
    pts = cfg.array()
    card = len(pts)
    total = sum_L(cfg)
    failures: list[str] = []
    if card >= 8:
        gaps = _gaps(pts)
        smallest = float(gaps.min())
        # eight directions leave some consecutive gap <= pi/4, below the certified minimum angle
        return LemmaReport(card=card, sum_L=total, bound=6.0, method="pigeonhole", equality=False, valid=False,
                           passed=False, min_angle=smallest,
                           failures=[f"{card} points force an angle {smallest:.6f} <= pi/4; not a valid configuration"])
    if card <= 6:
        if any(scalar.L(float(n) / 2) > 1 + TOL for n in cfg.norms()):
            failures.append("a term exceeds L <= 1")
        if total > 6 + TOL:
            failures.append(f"sum L = {total} exceeds 6")
        return LemmaReport(card=card, sum_L=total, bound=6.0, method="termwise",
                           equality=abs(total - 6) <= TOL, valid=True, passed=not failures, failures=failures)
    order = _cyclic(pts)
    p = pts[order]
    norms = np.linalg.norm(p, axis=1)
    chain, theta_sum, alpha_sum = [], 0.0, 0.0
    for i in range(card):
        j = (i + 1) % card
        theta = _angle_between(p[i], p[j])
        a_i, a_j = scalar.alpha(float(norms[i])), scalar.alpha(float(norms[j]))
        lin = scalar.CONSTANTS.c_alpha * scalar.L(float(norms[i]) / 2) + scalar.CONSTANTS.c_off
        theta_sum += theta
        alpha_sum += a_i
        chain.append({"index": int(order[i]), "next": int(order[j]), "theta": theta, "alpha": a_i,
                      "alpha_next": a_j, "alpha_lower": lin})
        if theta < a_i + a_j - TOL:
            failures.append(f"angle {theta} below alpha sum {a_i + a_j} at position {i}")
        if a_i < lin - TOL:
            failures.append(f"alpha {a_i} below its linear bound {lin} at position {i}")
    if abs(theta_sum - 2 * math.pi) > TOL:
        failures.append(f"angles sum to {theta_sum}, not 2 pi")
    if total > SEVEN_POINT_BOUND + TOL:
        failures.append(f"sum L = {total} exceeds the chain bound {SEVEN_POINT_BOUND}")
    return LemmaReport(card=card, sum_L=total, bound=6.0, method="angle-chain", equality=False, valid=True,
                       passed=not failures, theta_sum=theta_sum, chain_bound=SEVEN_POINT_BOUND, chain=chain,
                       failures=failures)


def _angle_between(u: np.ndarray, v: np.ndarray) -> float:
    if len(u) == 2:
        cross = abs(float(u[0] * v[1] - u[1] * v[0]))
    else:
        cross = float(np.linalg.norm(np.cross(u, v)))
    return math.atan2(cross, float(np.dot(u, v)))


def is_regular_hexagon(cfg: AnnulusConfig, tol: float = 1e-9) -> bool:
    if cfg.dimension != 2 or len(cfg) != 6:
        return False
    return bool(np.all(np.abs(cfg.norms() - 2) <= tol) and np.all(np.abs(_gaps(cfg.array()) - math.pi / 3) <= tol))


# --- angular separation ----------------------------------------------------------

def _min_angle(n1, n2, sep):
    c = (n1 * n1 + n2 * n2 - sep * sep) / (2 * n1 * n2)
    return np.arccos(np.clip(c, -1.0, 1.0))


def min_angular_separation(r_lo: float, r_hi: float, sep: float = 2.0) -> float:
    """Least angle at the origin between points with norms in [r_lo, r_hi] at distance >= sep."""
    if not (2.0 <= r_lo <= r_hi) or sep < 2.0:
        raise ConfigError("need 2 <= r_lo <= r_hi and sep >= 2")
    if sep > 2 * r_hi:
        raise ConfigError(f"no two points of norm <= {r_hi} can be {sep} apart")
    # The angle is increasing in the distance, so the constraint is active; on the
    # diagonal n1 = n2 = n the cosine 1 - sep^2 / (2 n^2) grows with n.  A grid plus
    # local refinement covers the off-diagonal part.
    grid = np.linspace(r_lo, r_hi, 201)
    n1, n2 = np.meshgrid(grid, grid)
    vals = _min_angle(n1, n2, sep)
    k = np.unravel_index(np.argmin(vals), vals.shape)
    best = float(vals[k])
    from scipy.optimize import minimize

    res = minimize(lambda x: float(_min_angle(x[0], x[1], sep)), x0=[n1[k], n2[k]],
                   bounds=[(r_lo, r_hi), (r_lo, r_hi)], method="L-BFGS-B")
    return min(best, float(res.fun))


def certify_angular_separation(r_lo: float, r_hi: float, sep: float = 2.0, bound: Interval | None = None,
                               opts: Options | None = None) -> Certificate:
    """Interval certificate that the angle stays above ``bound`` (default pi/4)."""
    bound = bound if bound is not None else PI / 4
    sep_i = Interval.point(float(sep))

    def f(n1, n2):
        t = F.const(float(sep), sep_i, n1)
        return scalar.angle_at_origin(n1, n2, t) - F.const(bound.mid, bound, n1)

    box = Box((Interval(r_lo, r_hi), Interval(r_lo, r_hi)), ("n1", "n2"))
    return verify_nonneg(ExprFn.from_function(f, 2, "angle - bound"), box, opts,
                         inequality_id=f"angular-separation({r_lo}, {r_hi}, {sep})")


# --- three dimensions --------------------------------------------------------------

@dataclass
class SumReport:
    card: int
    sum_L: float
    bound: float
    passed: bool
    equality: bool
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"card": self.card, "sum_L": self.sum_L, "bound": self.bound, "pass": self.passed,
                "equality": self.equality, "failures": self.failures}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def check_L12_config(cfg: AnnulusConfig) -> SumReport:
    """Check sum L <= 12 on one given spatial configuration."""
    if cfg.dimension != 3:
        raise ConfigError("check_L12_config needs a spatial configuration")
    total = sum_L(cfg)
    failures = [] if total <= 12 + TOL else [f"sum L = {total} exceeds 12"]
    return SumReport(card=len(cfg), sum_L=total, bound=12.0, passed=not failures,
                     equality=abs(total - 12) <= TOL, failures=failures)


@dataclass
class NormSumReport:
    norm_sum: float
    bound: float
    sum_L: float
    implied_bound: float
    passed: bool
    failures: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"norm_sum": self.norm_sum, "bound": self.bound, "sum_L": self.sum_L,
                "implied_bound": self.implied_bound, "pass": self.passed, "failures": self.failures}


def ft_norm_sum(cfg: AnnulusConfig) -> NormSumReport:
    """Sum of norms of 13 points in the sqrt 8 annulus against 24 + 2 h0.

    Since h >= h0 - (h0 - 1) L(h) for every h, sum L <= 12 implies
    sum |v| >= 2 (13 h0 - 12 (h0 - 1)) = 26.52; ``implied_bound`` is the same
    expression with the configuration's own sum L.
    """
    if cfg.dimension != 3:
        raise ConfigError("ft_norm_sum needs a spatial configuration")
    if len(cfg) != 13:
        raise ConfigError(f"ft_norm_sum needs 13 points, got {len(cfg)}")
    if cfg.outer < FT_OUTER - TOL:
        raise ConfigError("ft_norm_sum uses the sqrt 8 outer radius")
    norms = cfg.norms()
    total, sl = float(norms.sum()), sum_L(cfg)
    implied = 2 * (13 * scalar.H0 - (scalar.H0 - 1) * sl)
    failures = []
    if sl > 12 + TOL:
        failures.append(f"sum L = {sl} exceeds 12, so the configuration cannot come from a packing")
    if total < FT_BOUND - TOL:
        failures.append(f"norm sum {total} is below {FT_BOUND}")
    return NormSumReport(norm_sum=total, bound=FT_BOUND, sum_L=sl, implied_bound=implied,
                         passed=not failures, failures=failures)


# --- distance dichotomy -------------------------------------------------------------

@dataclass
class DichotomyReport:
    tested: list[int]
    contact_counts: dict[int, int]
    violations: list[dict]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"tested": self.tested, "contact_counts": {str(k): v for k, v in self.contact_counts.items()},
                "violations": self.violations, "pass": self.passed}


def check_distance_dichotomy(V, tol: float = TOL) -> DichotomyReport:
    """For points with exactly 12 contacts, every other distance is 2 or at least 2 h0."""
    pts = np.asarray(V, dtype=float).reshape(-1, 3)
    tree = cKDTree(pts)
    counts, tested, violations = {}, [], []
    for u in range(len(pts)):
        near = [j for j in tree.query_ball_point(pts[u], ANNULUS_OUTER + 1.0) if j != u]
        dist = np.linalg.norm(pts[near] - pts[u], axis=1)
        contacts = int(np.count_nonzero(np.abs(dist - 2.0) <= tol))
        counts[u] = contacts
        if contacts != 12:
            continue
        tested.append(u)
        for j, d in zip(near, dist):
            if abs(d - 2.0) > tol and d < ANNULUS_OUTER - tol:
                violations.append({"u": u, "v": int(j), "distance": float(d)})
    return DichotomyReport(tested=tested, contact_counts=counts, violations=violations)


# --- standard configurations --------------------------------------------------------

def hexagon(radius: float = 2.0, phase: float = 0.0) -> AnnulusConfig:
    ang = phase + np.arange(6) * math.pi / 3
    return AnnulusConfig.from_points(radius * np.column_stack([np.cos(ang), np.sin(ang)]), 2)


def fcc_kissing() -> np.ndarray:
    """Cuboctahedron vertices at norm 2."""
    rows = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for si in (1, -1):
            for sj in (1, -1):
                v = [0.0, 0.0, 0.0]
                v[i], v[j] = si * math.sqrt(2.0), sj * math.sqrt(2.0)
                rows.append(v)
    return np.array(rows)


def hcp_kissing() -> np.ndarray:
    """Triangular orthobicupola: six equatorial points and mirrored triples above and below."""
    rows = [[2 * math.cos(k * math.pi / 3), 2 * math.sin(k * math.pi / 3), 0.0] for k in range(6)]
    r, z = 2 / math.sqrt(3.0), 2 * math.sqrt(2.0 / 3.0)
    for sign in (1.0, -1.0):
        for deg in (30, 150, 270):
            a = math.radians(deg)
            rows.append([r * math.cos(a), r * math.sin(a), sign * z])
    return np.array(rows)


def fcc_patch(radius: float = 4.5) -> np.ndarray:
    """FCC points sqrt 2 (a, b, c) with a + b + c even, inside the given radius."""
    m = int(math.ceil(radius / math.sqrt(2.0)))
    rng = np.arange(-m, m + 1)
    a, b, c = np.meshgrid(rng, rng, rng, indexing="ij")
    keep = (a + b + c) % 2 == 0
    pts = math.sqrt(2.0) * np.column_stack([a[keep], b[keep], c[keep]]).astype(float)
    return pts[np.linalg.norm(pts, axis=1) <= radius + 1e-12]


def hcp_patch(radius: float = 4.5) -> np.ndarray:
    """ABAB stacking of triangular layers (spacing 2), layer gap 2 sqrt(2/3)."""
    gap = 2 * math.sqrt(2.0 / 3.0)
    m = int(math.ceil(radius)) + 2
    rows = []
    for layer in range(-int(math.ceil(radius / gap)), int(math.ceil(radius / gap)) + 1):
        shift = np.array([1.0, 1 / math.sqrt(3.0)]) if layer % 2 else np.zeros(2)
        for i in range(-m, m + 1):
            for j in range(-m, m + 1):
                x = np.array([2 * i + j, math.sqrt(3.0) * j]) + shift
                rows.append([x[0], x[1], layer * gap])
    pts = np.array(rows)
    return pts[np.linalg.norm(pts, axis=1) <= radius + 1e-12]


def extremal_norm_config() -> AnnulusConfig:
    """Norm profile of equality in the norm-sum bound: twelve norms 2 and one norm 2 h0.

    No packing realises it.  A point of norm 2 h0 keeps distance 2 from a
    norm-2 point only at angle >= arccos(h0 / 2) ~ 50.95 deg, and twelve
    directions with pairwise angles >= 60 deg cannot avoid such a cap (the best
    found numerically is ~58.8 deg).  Separation checking is therefore off;
    the configuration is used for the arithmetic of the bound only.
    """
    pts = fcc_kissing()
    extra = 2 * scalar.H0 * np.array([1.0, 1.0, 1.0]) / math.sqrt(3.0)
    return AnnulusConfig.from_points(np.vstack([pts, extra]), 3, outer=FT_OUTER, check_separation=False)


# --- random configurations ----------------------------------------------------------

def random_configs_2d(rng: np.random.Generator, card: int, n: int, atom: float = 0.3) -> np.ndarray:
    """``n`` random planar configurations of ``card`` points, shape (n, card, 2).

    Norms are 2 with probability ``atom`` and uniform in [2, 2 h0] otherwise.
    Each consecutive angular gap is the minimum angle for its pair plus a
    Dirichlet share of the leftover angle, so separation holds by
    construction; norm draws that leave no room are redrawn.
    """
    if card < 1:
        raise ConfigError("card must be at least 1")
    out = np.zeros((0, card, 2))
    while len(out) < n:
        m = max(64, 2 * (n - len(out)))
        norms = np.where(rng.random((m, card)) < atom, 2.0, rng.uniform(2.0, ANNULUS_OUTER, (m, card)))
        if card == 1:
            gaps = np.zeros((m, 1))
        else:
            req = _min_angle(norms, np.roll(norms, -1, axis=1), 2.0)
            slack = 2 * math.pi - req.sum(axis=1)
            keep = slack >= -1e-12
            norms, req, slack = norms[keep], req[keep], np.maximum(slack[keep], 0.0)
            share = rng.gamma(1.0, size=req.shape)
            gaps = req + slack[:, None] * share / share.sum(axis=1, keepdims=True)
        ang = rng.uniform(0, 2 * math.pi, (len(norms), 1)) + np.cumsum(gaps, axis=1) - gaps
        pts = norms[:, :, None] * np.stack([np.cos(ang), np.sin(ang)], axis=2)
        out = np.concatenate([out, pts])
    return out[:n]


def random_config_2d(rng: np.random.Generator, card: int, atom: float = 0.3) -> AnnulusConfig:
    return AnnulusConfig.from_points(random_configs_2d(rng, card, 1, atom)[0], 2)


def _spread_directions(rng: np.random.Generator, m: int, card: int, steps: int, rate: float = 0.2) -> np.ndarray:
    """Random unit vectors pushed apart by a few damped steps of inverse-power repulsion."""
    x = rng.normal(size=(m, card, 3))
    x /= np.linalg.norm(x, axis=2, keepdims=True)
    eye = np.eye(card)[None]
    for k in range(steps):
        w = (2 - 2 * np.einsum("mik,mjk->mij", x, x) + eye) ** -3 * (1 - eye)
        force = x * w.sum(axis=2)[:, :, None] - np.einsum("mij,mjk->mik", w, x)
        force -= np.sum(force * x, axis=2, keepdims=True) * x
        scale = np.max(np.linalg.norm(force, axis=2), axis=1)[:, None, None]
        x = x + rate * (1 - k / steps) * force / np.maximum(scale, 1e-300)
        x /= np.linalg.norm(x, axis=2, keepdims=True)
    return x


def _shrink_norms(rng: np.random.Generator, pts: np.ndarray, atom: float) -> np.ndarray:
    """Lower each norm, in random order, by a random amount that keeps distance >= 2.

    For direction u and another point p the forbidden norms form the interval
    between the roots of n^2 - 2 n (u.p) + |p|^2 - 4; descending from an
    allowed norm, the first obstacle is the largest upper root below it.
    """
    m, card, _ = pts.shape
    rows = np.arange(m)
    for i in rng.permutation(card):
        cur = np.linalg.norm(pts[:, i], axis=1)
        u = pts[:, i] / cur[:, None]
        others = np.delete(pts, i, axis=1)
        up = np.einsum("mk,mjk->mj", u, others)
        disc = up * up - np.sum(others * others, axis=2) + 4.0
        root = np.where(disc > 0, up + np.sqrt(np.maximum(disc, 0.0)), -np.inf)
        root = np.where(root <= cur[:, None] + 1e-12, root, -np.inf)
        floor = np.maximum(2.0, root.max(axis=1) + 1e-12)
        floor = np.minimum(floor, cur)
        pick = np.where(rng.random(m) < atom, floor, rng.uniform(floor, cur))
        pts[rows, i] = u * pick[:, None]
    return pts


def random_configs_3d(rng: np.random.Generator, n: int, card: int = 13, outer: float = ANNULUS_OUTER,
                      atom: float = 0.3, steps: int = 20) -> np.ndarray:
    """``n`` random valid spatial configurations, shape (n, card, 3).

    Directions are spread by repulsion until all points fit at norm ``outer``;
    norms are then lowered point by point (see :func:`_shrink_norms`).
    Batches whose spread is insufficient are discarded and redrawn.
    """
    need = 2 * math.asin(1.0 / outer)
    out = np.zeros((0, card, 3))
    while len(out) < n:
        m = max(64, int(1.2 * (n - len(out))))
        x = _spread_directions(rng, m, card, int(rng.integers(steps // 2, steps + 1)))
        cos = np.einsum("mik,mjk->mij", x, x) - 2 * np.eye(card)[None]
        ok = np.arccos(np.clip(cos.max(axis=(1, 2)), -1, 1)) >= need + 1e-9
        pts = _shrink_norms(rng, x[ok] * outer, atom)
        out = np.concatenate([out, pts])
    return out[:n]


@dataclass
class SearchSummary:
    trials: int
    max_sum_L: float
    argmax: list
    at_bound: int
    at_bound_all_extremal: bool
    violations: int

    def to_json(self) -> dict:
        return {"trials": self.trials, "max_sum_L": self.max_sum_L, "argmax": self.argmax,
                "at_bound": self.at_bound, "at_bound_all_extremal": self.at_bound_all_extremal,
                "violations": self.violations}


def _search_2d_chunk(args: tuple[int, int]) -> tuple[float, list, int, bool, int]:
    seed, count = args
    rng = np.random.default_rng(seed)
    best, arg, at_bound, extremal, bad = -1.0, [], 0, True, 0
    cards = rng.integers(2, 8, count)
    for card in range(2, 8):
        batch = random_configs_2d(rng, card, int(np.count_nonzero(cards == card)))
        for pts in batch:
            cfg = AnnulusConfig.from_points(pts, 2)
            rep = check_lemma_L_2d(cfg)
            if not rep.passed or rep.sum_L > 6 + TOL:
                bad += 1
            if rep.sum_L >= 6 - TOL:
                at_bound += 1
                extremal &= is_regular_hexagon(cfg)
            if rep.sum_L > best:
                best, arg = rep.sum_L, [list(p) for p in cfg.points]
    return best, arg, at_bound, extremal, bad


def search_lemma_L_2d(trials: int = 100_000, seed: int = 0, chunks: int = 16) -> SearchSummary:
    """Random configurations of cards 2 to 7; the chunk seeds are seed, seed + 1, ..."""
    sizes = [trials // chunks + (1 if i < trials % chunks else 0) for i in range(chunks)]
    parts = pmap(_search_2d_chunk, [(seed + i, s) for i, s in enumerate(sizes) if s])
    best = max(parts, key=lambda p: p[0])
    return SearchSummary(trials=trials, max_sum_L=best[0], argmax=best[1], at_bound=sum(p[2] for p in parts),
                         at_bound_all_extremal=all(p[3] for p in parts), violations=sum(p[4] for p in parts))


def _search_3d_chunk(args: tuple[int, int, float]) -> tuple[float, list, float, int]:
    seed, count, outer = args
    rng = np.random.default_rng(seed)
    cfgs = random_configs_3d(rng, count, outer=outer)
    h = np.linalg.norm(cfgs, axis=2) / 2
    L = np.clip((scalar.H0 - h) / (scalar.H0 - 1), 0.0, None)
    sums = L.sum(axis=1)
    k = int(np.argmax(sums))
    norm_sums = (2 * h).sum(axis=1)
    return float(sums[k]), cfgs[k].tolist(), float(norm_sums.min()), int(np.count_nonzero(sums > 12 + TOL))


def search_L12(trials: int = 100_000, seed: int = 0, outer: float = ANNULUS_OUTER, chunks: int = 16) -> dict:
    """Random valid 13-point spatial configurations: largest sum L and smallest norm sum."""
    sizes = [trials // chunks + (1 if i < trials % chunks else 0) for i in range(chunks)]
    parts = pmap(_search_3d_chunk, [(seed + i, s, outer) for i, s in enumerate(sizes) if s])
    best = max(parts, key=lambda p: p[0])
    return {"trials": trials, "max_sum_L": best[0], "argmax": best[1],
            "min_norm_sum": min(p[2] for p in parts), "violations": sum(p[3] for p in parts)}


__all__ = [
    "ANNULUS_OUTER", "AnnulusConfig", "ConfigError", "DichotomyReport", "FT_BOUND", "FT_OUTER", "LemmaReport",
    "NormSumReport", "SEVEN_POINT_BOUND", "SearchSummary", "SumReport", "certify_angular_separation",
    "check_L12_config", "check_distance_dichotomy", "check_lemma_L_2d", "closest_pair", "extremal_norm_config",
    "fcc_kissing", "fcc_patch", "ft_norm_sum", "hcp_kissing", "hcp_patch", "hexagon", "is_regular_hexagon",
    "min_angular_separation", "random_config_2d", "random_configs_3d", "search_L12", "search_lemma_L_2d",
    "sum_L",
]
