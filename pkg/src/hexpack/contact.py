"""Contact graphs of twelve points on the sphere of radius 2.

Graphs carry a rotation system (cyclic neighbour order at each vertex) and are
turned into hypermaps whose f-orbits are the faces.  Corner angles of the
spherical faces satisfy linear rules: angles around a node sum to 2 pi, every
corner of a triangle of contact edges equals arccos(1/3), opposite corners of
a quadrilateral are equal and quadrilateral corners lie in [1.6292, 2.16672].
Feasibility is decided by HiGHS and then backed by exact rational data: a
witness that satisfies every row, or nonnegative Farkas multipliers.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import networkx as nx
import numpy as np
from scipy.optimize import linprog

from .interval import TWO_PI, Interval

CONTACT_ARC = 2 * math.asin(0.5)  # central angle of a contact edge at norm 2
ACOS_THIRD = (Interval.point(1.0) / 3).acos()
RHOMBUS_LO = Interval.from_decimal("1.6292")
RHOMBUS_HI = Interval.from_decimal("2.16672")
GAP_LO, GAP_HI = 2.0, 2.52
TOL = 1e-9

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
INCONCLUSIVE = "inconclusive"


class GraphError(ValueError):
    """Malformed graph or rotation system."""


# --- hypermaps ---------------------------------------------------------------------

@dataclass(frozen=True)
class Hypermap:
    e: tuple[int, ...]
    n: tuple[int, ...]
    f: tuple[int, ...]

    @property
    def darts(self) -> range:
        return range(len(self.e))


def orbits(perm: Sequence[int]) -> list[list[int]]:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = perm[x]
        out.append(cyc)
    return out


def _is_perm(p: Sequence[int], size: int) -> bool:
    return len(p) == size and sorted(p) == list(range(size))


@dataclass
class HypermapReport:
    valid: bool
    darts: int
    edges: int
    nodes: int
    faces: int
    euler: int | None
    offending_dart: int | None = None
    message: str = ""

    def to_json(self) -> dict:
        return dict(self.__dict__)


def hypermap_validate(h: Hypermap) -> HypermapReport:
    """Check e(n(f(x))) = x for every dart and count orbits."""
    size = len(h.e)
    for name, p in (("e", h.e), ("n", h.n), ("f", h.f)):
        if not _is_perm(p, size):
            return HypermapReport(False, size, 0, 0, 0, None, None, f"{name} is not a permutation of the darts")
    for x in range(size):
        if h.e[h.n[h.f[x]]] != x:
            return HypermapReport(False, size, 0, 0, 0, None, x, f"e n f moves dart {x}")
    ne, nn, nf = len(orbits(h.e)), len(orbits(h.n)), len(orbits(h.f))
    return HypermapReport(True, size, ne, nn, nf, nn + nf + ne - size)


def random_hypermap(rng: np.random.Generator, size: int) -> Hypermap:
    """Random e and n with f := (e n)^-1, which satisfies the axiom by construction."""
    e = [int(x) for x in rng.permutation(size)]
    n = [int(x) for x in rng.permutation(size)]
    en = [e[n[x]] for x in range(size)]
    f = [0] * size
    for x, y in enumerate(en):
        f[y] = x
    return Hypermap(tuple(e), tuple(n), tuple(f))


# --- contact graphs ----------------------------------------------------------------

@dataclass(frozen=True)
class ContactGraph:
    """Graph with a rotation system; ``rotation[v]`` lists neighbours of v in cyclic order."""

    rotation: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        nv = len(self.rotation)
        for v, nb in enumerate(self.rotation):
            if len(set(nb)) != len(nb):
                raise GraphError(f"vertex {v} lists a neighbour twice")
            for w in nb:
                if not (0 <= w < nv) or w == v:
                    raise GraphError(f"vertex {v} has invalid neighbour {w}")
                if v not in self.rotation[w]:
                    raise GraphError(f"edge {v}-{w} is not listed at {w}")

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted({(min(v, w), max(v, w)) for v, nb in enumerate(self.rotation) for w in nb})

    def networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n_vertices))
        g.add_edges_from(self.edges)
        return g

    def darts(self) -> list[tuple[int, int]]:
        return [(v, w) for v, nb in enumerate(self.rotation) for w in nb]

    def faces(self) -> list[list[int]]:
        """Faces as vertex cycles, read off the f-orbits of the hypermap."""
        h = graph_to_hypermap(self)
        darts = self.darts()
        return [[darts[x][0] for x in cyc] for cyc in orbits(h.f)]

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.rotation]

    def face_census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for face in self.faces():
            out[len(face)] = out.get(len(face), 0) + 1
        return dict(sorted(out.items()))

    def validate(self, require_twelve: bool = True) -> list[str]:
        problems = []
        if require_twelve and self.n_vertices != 12:
            problems.append(f"{self.n_vertices} vertices, expected 12")
        v, e, f = self.n_vertices, len(self.edges), len(self.faces())
        if v - e + f != 2:
            problems.append(f"V - E + F = {v - e + f}, expected 2")
        count: dict[tuple[int, int], set[int]] = {}
        for k, face in enumerate(self.faces()):
            for a, b in zip(face, face[1:] + face[:1]):
                count.setdefault((min(a, b), max(a, b)), set()).add(k)
        for edge in self.edges:
            if len(count.get(edge, ())) != 2:
                problems.append(f"edge {edge} does not lie on two distinct faces")
        return problems

    def to_json(self) -> dict:
        return {"vertices": self.n_vertices, "rotation": [list(nb) for nb in self.rotation]}

    @classmethod
    def from_json(cls, doc: dict, name: str = "") -> "ContactGraph":
        if not isinstance(doc, dict) or "rotation" not in doc:
            raise GraphError("graph file needs a \"rotation\" field")
        rot = doc["rotation"]
        if "vertices" in doc and doc["vertices"] != len(rot):
            raise GraphError(f"\"vertices\" is {doc['vertices']} but rotation has {len(rot)} rows")
        for k, row in enumerate(rot):
            if not isinstance(row, list) or not all(isinstance(x, int) for x in row):
                raise GraphError(f"rotation[{k}] must be a list of integers")
        return cls(tuple(tuple(row) for row in rot), name)


def graph_to_hypermap(g: ContactGraph) -> Hypermap:
    """Darts are directed edges; n turns around the tail, e reverses, f = (e n)^-1 walks faces."""
    darts = g.darts()
    index = {d: k for k, d in enumerate(darts)}
    e = [index[(w, v)] for v, w in darts]
    n = []
    for v, w in darts:
        nb = g.rotation[v]
        n.append(index[(v, nb[(nb.index(w) + 1) % len(nb)])])
    en = [e[n[x]] for x in range(len(darts))]
    f = [0] * len(darts)
    for x, y in enumerate(en):
        f[y] = x
    return Hypermap(tuple(e), tuple(n), tuple(f))


def rotation_from_plane(coords: np.ndarray, edges: Sequence[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    """Counterclockwise neighbour order of a straight-line planar drawing."""
    coords = np.asarray(coords, dtype=float)
    adj: dict[int, list[int]] = {v: [] for v in range(len(coords))}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    out = []
    for v in range(len(coords)):
        d = coords[adj[v]] - coords[v]
        order = np.argsort(np.arctan2(d[:, 1], d[:, 0]))
        out.append(tuple(adj[v][k] for k in order))
    return tuple(out)


def rotation_from_sphere(points: np.ndarray, edges: Sequence[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    """Counterclockwise neighbour order seen from outside the sphere."""
    pts = np.asarray(points, dtype=float)
    adj: dict[int, list[int]] = {v: [] for v in range(len(pts))}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    out = []
    for v in range(len(pts)):
        axis = pts[v] / np.linalg.norm(pts[v])
        ref = np.cross(axis, [1.0, 0.0, 0.0])
        if np.linalg.norm(ref) < 1e-6:
            ref = np.cross(axis, [0.0, 1.0, 0.0])
        ref /= np.linalg.norm(ref)
        other = np.cross(axis, ref)
        d = pts[adj[v]] - pts[v]
        order = np.argsort(np.arctan2(d @ other, d @ ref))
        out.append(tuple(adj[v][k] for k in order))
    return tuple(out)


def contact_edges(points: np.ndarray, tol: float = TOL) -> list[tuple[int, int]]:
    pts = np.asarray(points, dtype=float)
    out = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if abs(float(np.linalg.norm(pts[i] - pts[j])) - 2.0) <= tol:
                out.append((i, j))
    return out


def graph_from_points(points: np.ndarray, name: str = "") -> ContactGraph:
    pts = np.asarray(points, dtype=float)
    return ContactGraph(rotation_from_sphere(pts, contact_edges(pts)), name)


FTHEX_EDGES = (
    (0, 5), (0, 1), (0, 11), (0, 6), (1, 2), (1, 10), (1, 11), (2, 3), (2, 9), (2, 10),
    (3, 4), (3, 8), (3, 9), (4, 5), (4, 7), (4, 8), (5, 6), (5, 7), (6, 11), (6, 7),
    (7, 8), (8, 9), (9, 10), (10, 11),
)


def fthex_coordinates() -> np.ndarray:
    """Planar drawing: P0..P5 on an outer hexagon, P6..P11 on an inner one.

    Inner vertex P6 is joined to P0 and P5, P7 to P5 and P4, and so on, so it
    sits at the angle halfway between its two outer neighbours.
    """
    outer = [(2 * math.cos(math.radians(60 * k)), 2 * math.sin(math.radians(60 * k))) for k in range(6)]
    inner = [(math.cos(math.radians(330 - 60 * k)), math.sin(math.radians(330 - 60 * k))) for k in range(6)]
    return np.array(outer + inner)


def fthex_graph() -> ContactGraph:
    return ContactGraph(rotation_from_plane(fthex_coordinates(), FTHEX_EDGES), "fthex")


def fcc_graph() -> ContactGraph:
    from .annulus import fcc_kissing

    return graph_from_points(fcc_kissing(), "fcc")


def hcp_graph() -> ContactGraph:
    from .annulus import hcp_kissing

    return graph_from_points(hcp_kissing(), "hcp")


def wheel_graph(spokes: int = 6) -> ContactGraph:
    """Hub 0 with rim 1..spokes; every hub corner is a triangle corner."""
    hub = np.zeros((1, 2))
    rim = np.array([[math.cos(2 * math.pi * k / spokes), math.sin(2 * math.pi * k / spokes)] for k in range(spokes)])
    edges = [(0, k + 1) for k in range(spokes)] + [(k + 1, (k + 1) % spokes + 1) for k in range(spokes)]
    return ContactGraph(rotation_from_plane(np.vstack([hub, rim]), edges), f"wheel{spokes}")


def load_graph(name_or_path: str) -> ContactGraph:
    builtin = {"fcc": fcc_graph, "hcp": hcp_graph, "fthex": fthex_graph}
    if name_or_path in builtin:
        return builtin[name_or_path]()
    path = Path(name_or_path)
    return ContactGraph.from_json(json.loads(path.read_text()), path.stem)


# --- angle LP ------------------------------------------------------------------------

@dataclass(frozen=True)
class Row:
    """lo <= sum coeffs[j] x_j <= hi, with the bounds enclosing the true constants."""

    coeffs: tuple[tuple[int, int], ...]  # (variable, integer coefficient)
    lo: float | None
    hi: float | None
    rule: str
    mid: Fraction | None = None  # representative value for equality rows

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((Fraction(c) * x[j] for j, c in self.coeffs), Fraction(0))


@dataclass
class AngleLP:
    graph: str
    corners: list[tuple[int, int]]  # (vertex, face index)
    rows: list[Row]

    @property
    def n_vars(self) -> int:
        return len(self.corners)

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "corners": [list(c) for c in self.corners],
            "rows": [{"coeffs": [list(c) for c in r.coeffs], "lo": r.lo, "hi": r.hi, "rule": r.rule} for r in self.rows],
        }


def _eq_row(coeffs, enclosure: Interval, rule: str) -> Row:
    return Row(tuple(coeffs), enclosure.lo, enclosure.hi, rule, Fraction(enclosure.mid))


def build_angle_lp(g: ContactGraph) -> AngleLP:
    faces = g.faces()
    corners, by_vertex = [], {}
    face_corner: dict[int, list[int]] = {}
    for k, face in enumerate(faces):
        if len(face) < 3:
            raise GraphError(f"face {face} has fewer than three sides")
        for v in face:
            by_vertex.setdefault(v, []).append(len(corners))
            face_corner.setdefault(k, []).append(len(corners))
            corners.append((v, k))
    rows: list[Row] = []
    for v in sorted(by_vertex):
        rows.append(_eq_row([(j, 1) for j in by_vertex[v]], TWO_PI, f"node sum at {v}"))
    for k, face in enumerate(faces):
        idx = face_corner[k]
        if len(face) == 3:
            for j in idx:
                rows.append(_eq_row([(j, 1)], ACOS_THIRD, f"triangle corner in face {k}"))
        elif len(face) == 4:
            for a in range(2):
                rows.append(Row(((idx[a], 1), (idx[a + 2], -1)), 0.0, 0.0, f"opposite corners in face {k}",
                                Fraction(0)))
            for j in idx:
                rows.append(Row(((j, 1),), RHOMBUS_LO.lo, RHOMBUS_HI.hi, f"quadrilateral corner bounds in face {k}"))
    return AngleLP(g.name, corners, rows)


@dataclass
class EliminationCertificate:
    graph: str
    method: str  # lp-feasible, lp-infeasible, hexagon-perimeter, realized, not-applicable
    outcome: str
    payload: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"graph": self.graph, "method": self.method, "outcome": self.outcome, "payload": self.payload}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


def _system(lp: AngleLP) -> tuple[np.ndarray, np.ndarray, list[tuple[int, str]]]:
    """Rows as G x <= h with the conservative side of every bound; ``tags`` map back to rows."""
    G, h, tags = [], [], []
    for r_i, r in enumerate(lp.rows):
        vec = np.zeros(lp.n_vars)
        for j, c in r.coeffs:
            vec[j] += c
        if r.hi is not None:
            G.append(vec)
            h.append(r.hi)
            tags.append((r_i, "upper"))
        if r.lo is not None:
            G.append(-vec)
            h.append(-r.lo)
            tags.append((r_i, "lower"))
    return np.array(G).reshape(-1, lp.n_vars), np.array(h), tags


def _exact_feasible(lp: AngleLP, x: Sequence[Fraction]) -> tuple[bool, Fraction]:
    """Every row satisfied exactly, and the smallest slack over the inequality rows."""
    slack = None
    for v in x:
        if v < 0:
            return False, v
    for r in lp.rows:
        val = r.value(x)
        if r.lo is not None and val < Fraction(r.lo):
            return False, val - Fraction(r.lo)
        if r.hi is not None and val > Fraction(r.hi):
            return False, Fraction(r.hi) - val
        if r.mid is None and r.lo is not None and r.hi is not None:
            s = min(val - Fraction(r.lo), Fraction(r.hi) - val)
            slack = s if slack is None else min(slack, s)
    return True, slack if slack is not None else Fraction(0)


def _rational_repair(lp: AngleLP, x_float: np.ndarray) -> list[Fraction]:
    """Solve the equality rows exactly at their representative values, other variables from x_float."""
    n = lp.n_vars
    eqs = []
    for r in lp.rows:
        if r.mid is not None:
            vec = [Fraction(0)] * n
            for j, c in r.coeffs:
                vec[j] += c
            eqs.append((vec, r.mid))
    # Gaussian elimination over the rationals; non-pivot variables keep their float values
    rows = [list(v) + [b] for v, b in eqs]
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        rows[rank] = [v / p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    x = [Fraction(float(v)) for v in x_float]
    for i in range(rank - 1, -1, -1):
        col = pivots[i]
        val = rows[i][n] - sum((rows[i][j] * x[j] for j in range(n) if j != col and rows[i][j] != 0), Fraction(0))
        x[col] = val
    return x


def _farkas(lp: AngleLP, G: np.ndarray, h: np.ndarray) -> list[Fraction] | None:
    """Multipliers y >= 0 with y G >= 0 and y h < 0, rationalised and re-checked exactly."""
    m = len(h)
    res = linprog(c=h, A_ub=-G.T, b_ub=np.zeros(G.shape[1]), A_eq=np.ones((1, m)), b_eq=[1.0],
                  bounds=[(0, None)] * m, method="highs")
    if res.status != 0 or res.fun >= -1e-12:
        return None
    for denom in (10 ** 6, 10 ** 9, 10 ** 12):
        y = [max(Fraction(float(v)).limit_denominator(denom), Fraction(0)) for v in res.x]
        if verify_farkas(lp, y):
            return y
    return None


def verify_farkas(lp: AngleLP, y: Sequence[Fraction]) -> bool:
    """Exact check: y >= 0, y G >= 0 componentwise (x >= 0) and y h < 0."""
    G, h, _ = _system(lp)
    if len(y) != len(h) or any(v < 0 for v in y):
        return False
    for j in range(lp.n_vars):
        col = sum((y[i] * Fraction(int(G[i, j])) for i in range(len(h)) if G[i, j] != 0), Fraction(0))
        if col < 0:
            return False
    return sum((y[i] * Fraction(float(h[i])) for i in range(len(h))), Fraction(0)) < 0


def _max_slack(lp: AngleLP):
    """Maximise the smallest slack s of the two-sided inequality rows (capped at 1).

    The most interior witness is the natural representative when the rows
    leave a family of solutions; for the cuboctahedron it puts every
    quadrilateral corner at pi - arccos(1/3).
    """
    G, h, tags = _system(lp)
    soft = np.array([0.0 if lp.rows[r].mid is not None else 1.0 for r, _ in tags])
    A = np.hstack([G, soft[:, None]])
    c = np.zeros(lp.n_vars + 1)
    c[-1] = -1.0
    return linprog(c=c, A_ub=A, b_ub=h, bounds=[(0, None)] * lp.n_vars + [(None, 1.0)], method="highs")


def check_feasibility(lp: AngleLP) -> EliminationCertificate:
    if lp.n_vars == 0:
        return EliminationCertificate(lp.graph, "lp-feasible", FEASIBLE, {"witness": [], "exact": True})
    G, h, tags = _system(lp)
    res = _max_slack(lp)
    if res.status == 0 and -res.fun >= -1e-12:
        x = _rational_repair(lp, res.x[:-1])
        ok, slack = _exact_feasible(lp, x)
        if ok:
            return EliminationCertificate(lp.graph, "lp-feasible", FEASIBLE, {
                "witness": [str(v) for v in x], "witness_float": [float(v) for v in x], "exact": True,
                "min_inequality_slack": float(slack), "corners": [list(c) for c in lp.corners]})
        resid = float(np.max(G @ res.x[:-1] - h))
        return EliminationCertificate(lp.graph, "lp-feasible", INCONCLUSIVE, {
            "witness_float": [float(v) for v in res.x[:-1]], "exact": False, "max_violation": resid})
    if res.status == 2 or (res.status == 0 and -res.fun < -1e-12):
        y = _farkas(lp, G, h)
        if y is None:
            return EliminationCertificate(lp.graph, "lp-infeasible", INCONCLUSIVE,
                                          {"message": "solver reports infeasible but no exact certificate was found"})
        used = [{"row": tags[i][0], "side": tags[i][1], "rule": lp.rows[tags[i][0]].rule, "multiplier": str(v)}
                for i, v in enumerate(y) if v != 0]
        value = sum((y[i] * Fraction(float(h[i])) for i in range(len(h))), Fraction(0))
        return EliminationCertificate(lp.graph, "lp-infeasible", INFEASIBLE, {
            "multipliers": [str(v) for v in y], "combination": used, "bound": str(value), "bound_float": float(value)})
    return EliminationCertificate(lp.graph, "lp", INCONCLUSIVE, {"message": res.message})


def corner_values(lp: AngleLP, cert: EliminationCertificate, face_length: int, g: ContactGraph) -> list[float]:
    """Witness angles at corners of faces of the given length."""
    faces = g.faces()
    x = cert.payload.get("witness_float", [])
    return [x[j] for j, (_, k) in enumerate(lp.corners) if len(faces[k]) == face_length]


# --- hexagon elimination ------------------------------------------------------------

def eliminate_hexagon(g: ContactGraph) -> EliminationCertificate:
    """A face bounded by six or more contact arcs has perimeter >= 2 pi, impossible for a convex face."""
    arc = 2 * (Interval.point(0.5)).asin()
    for k, face in enumerate(g.faces()):
        if len(face) >= 6:
            perimeter = len(face) * arc
            return EliminationCertificate(g.name, "hexagon-perimeter", INFEASIBLE, {
                "face": face, "face_index": k, "arc": [arc.lo, arc.hi], "perimeter": [perimeter.lo, perimeter.hi],
                "bound": [TWO_PI.lo, TWO_PI.hi], "perimeter_reaches_bound": perimeter.hi >= TWO_PI.lo,
            })
    return EliminationCertificate(g.name, "hexagon-perimeter", "not-applicable",
                                  {"max_face_length": max((len(f) for f in g.faces()), default=0)})


# --- realisability -----------------------------------------------------------------

@dataclass
class RealizeReport:
    norms_ok: bool
    violations: list[dict]
    contact_edges: list[tuple[int, int]]
    isomorphic: bool
    mapping: dict[int, int] | None

    @property
    def passed(self) -> bool:
        return self.norms_ok and not self.violations and self.isomorphic

    def to_json(self) -> dict:
        return {"norms_ok": self.norms_ok, "violations": self.violations,
                "contact_edges": [list(e) for e in self.contact_edges], "isomorphic": self.isomorphic,
                "mapping": None if self.mapping is None else {str(k): v for k, v in self.mapping.items()},
                "pass": self.passed}


def realize_check(points, g: ContactGraph, tol: float = TOL) -> RealizeReport:
    """Distances in {2} ∪ (2.52, 4] and the distance-2 graph isomorphic to g."""
    pts = np.asarray(points, dtype=float).reshape(-1, 3)
    norms_ok = bool(np.all(np.abs(np.linalg.norm(pts, axis=1) - 2.0) <= tol))
    violations = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = float(np.linalg.norm(pts[i] - pts[j]))
            contact = abs(d - 2.0) <= tol
            if not contact and not (GAP_HI + tol < d <= 4.0 + tol):
                violations.append({"pair": [i, j], "distance": d})
    edges = contact_edges(pts, tol)
    h = nx.Graph()
    h.add_nodes_from(range(len(pts)))
    h.add_edges_from(edges)
    matcher = nx.algorithms.isomorphism.GraphMatcher(g.networkx(), h)
    iso = matcher.is_isomorphic()
    mapping = {int(k): int(v) for k, v in matcher.mapping.items()} if iso else None
    return RealizeReport(norms_ok, violations, edges, iso, mapping)


__all__ = [
    "ACOS_THIRD", "AngleLP", "CONTACT_ARC", "ContactGraph", "EliminationCertificate", "FEASIBLE", "FTHEX_EDGES",
    "GraphError", "Hypermap", "HypermapReport", "INCONCLUSIVE", "INFEASIBLE", "RHOMBUS_HI",
    "RHOMBUS_LO", "RealizeReport", "Row", "build_angle_lp", "check_feasibility", "contact_edges",
    "corner_values", "eliminate_hexagon", "fcc_graph", "fthex_coordinates", "fthex_graph", "graph_from_points",
    "graph_to_hypermap", "hcp_graph", "hypermap_validate", "load_graph", "orbits", "random_hypermap",
    "realize_check", "rotation_from_plane", "rotation_from_sphere", "verify_farkas", "wheel_graph",
]
