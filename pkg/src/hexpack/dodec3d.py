"""Tetrahedra with three unit-contact edges at the origin and the dodecahedral constants.

The family consists of the tetrahedra {0, v1, v2, v3} with |v_i| = 2 and
|v_i - v_j| = t.  Along it we track the solid angle at the origin, the common
dihedral angle along the edges {0, v_i} and the area of the Voronoi boundary
of the origin inside the tetrahedron.  The constants (a_D, b_D) make

    f(t) = area(t) + 3 a sol(t) + 3 b * 3 dih(t)

vanish to second order at the separation t_D realised by a regular
dodecahedron circumscribed about the unit ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .interval import PI, Box, ExprFn, Interval, Jet
from .interval import func as F

T_MIN = 2.0
T_MAX = math.sqrt(6.0)  # circumradius of the tetrahedron reaches sqrt 2


class FamilyDomainError(ValueError):
    """Separation outside the valid range of the tetrahedron family."""


class SingularSystemError(ArithmeticError):
    """The 2x2 system for the constants is numerically singular."""


@dataclass(frozen=True)
class TetFamilyPoint:
    t: float
    vertices: np.ndarray  # rows: origin, v1, v2, v3
    sol: float
    dih: float
    area: float


@dataclass(frozen=True)
class DodecConstants:
    t_D: float
    a_D: float
    b_D: float
    area_CD: float

    def identity_gap(self) -> float:
        """-3 a 4 pi - 3 b (2 pi) 12 - area_CD."""
        return -3 * self.a_D * 4 * math.pi - 3 * self.b_D * 2 * math.pi * 12 - self.area_CD


# --- regular dodecahedron -----------------------------------------------------

def dodecahedron_dihedral() -> float:
    return math.acos(-1 / math.sqrt(5))


def t_dodec() -> float:
    """Distance between centres at norm 2 along adjacent face normals of a dodecahedron."""
    psi = math.pi - dodecahedron_dihedral()
    return 4 * math.sin(psi / 2)


def dodecahedron_area(inradius: float = 1.0) -> float:
    """Surface area of the regular dodecahedron from its twelve pentagonal faces."""
    apothem = inradius / math.tan(dodecahedron_dihedral() / 2)
    pentagon = 5 * apothem * apothem * math.tan(math.pi / 5)
    return 12 * pentagon


# --- closed forms (generic over float / Interval / Jet) -----------------------

def family_cos_gamma(t):
    """Cosine of the angle at 0 between two of the v_i."""
    return 1 - F.sq(t) / 8


def family_dih(t):
    """Dihedral angle along {0, v_i}; the spherical triangle is equilateral."""
    cg = family_cos_gamma(t)
    return F.acos(cg / (1 + cg))


def family_sol(t):
    """Solid angle at the origin (spherical excess of the equilateral triangle)."""
    pi = F.const(math.pi, PI, t)
    return 3 * family_dih(t) - pi


def family_area(t):
    """Area of the Voronoi boundary of 0 inside the tetrahedron.

    Each of the three congruent kites (v/2, two face circumcentres, the
    tetrahedron circumcentre) has right angles at the face circumcentres.
    """
    t2 = F.sq(t)
    return 6 * t2 / ((16 - t2) * F.sqrt(12 - t2))


def family_lhs(t, a, b):
    """area + 3 a sol + 3 b sum L(1) dih; a and b are floats or intervals."""
    return family_area(t) + 3 * a * family_sol(t) + 9 * b * family_dih(t)


# --- explicit coordinates -------------------------------------------------------

def _check_t(t: float) -> None:
    if not (T_MIN - 1e-12 <= t < T_MAX):
        raise FamilyDomainError(f"t must lie in [2, sqrt 6), got {t}")


def family_vertices(t: float) -> np.ndarray:
    s = t / (2 * math.sqrt(3))
    c = math.sqrt(1 - s * s)
    rows = [np.zeros(3)]
    for i in range(3):
        ang = 2 * math.pi * i / 3
        rows.append(2 * np.array([s * math.cos(ang), s * math.sin(ang), c]))
    return np.array(rows)


def solid_angle(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    """Solid angle at 0 of the cone over a, b, c (Van Oosterom and Strackee)."""
    na, nb, nc = (float(np.linalg.norm(x)) for x in (a, b, c))
    num = abs(float(np.dot(a, np.cross(b, c))))
    den = na * nb * nc + float(np.dot(a, b)) * nc + float(np.dot(a, c)) * nb + float(np.dot(b, c)) * na
    return 2 * math.atan2(num, den)


def dihedral_angle(p: np.ndarray, q: np.ndarray, r: np.ndarray, s: np.ndarray) -> float:
    """Dihedral angle along edge pq between faces pqr and pqs."""
    e = q - p
    n1 = np.cross(e, r - p)
    n2 = np.cross(e, s - p)
    cosang = float(np.dot(n1, n2) / (np.linalg.norm(n1) * np.linalg.norm(n2)))
    return math.acos(max(-1.0, min(1.0, cosang)))


def circumcenter3(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    ab, ac = b - a, c - a
    n = np.cross(ab, ac)
    return a + (np.dot(ac, ac) * np.cross(n, ab) + np.dot(ab, ab) * np.cross(ac, n)) / (2 * np.dot(n, n))


def _polygon_area(pts: list[np.ndarray]) -> float:
    total = np.zeros(3)
    for i in range(len(pts)):
        total += np.cross(pts[i], pts[(i + 1) % len(pts)])
    return 0.5 * float(np.linalg.norm(total))


def tet_family(t: float) -> TetFamilyPoint:
    """Coordinates and angle/area data of the family member with separation t."""
    _check_t(t)
    verts = family_vertices(t)
    o, v1, v2, v3 = verts
    sol = solid_angle(v1, v2, v3)
    dih = dihedral_angle(o, v1, v2, v3)
    centre = _tet_circumcenter(verts)
    kite = [v1 / 2, circumcenter3(o, v1, v2), centre, circumcenter3(o, v1, v3)]
    return TetFamilyPoint(t=t, vertices=verts, sol=sol, dih=dih, area=3 * _polygon_area(kite))


def _tet_circumcenter(verts: np.ndarray) -> np.ndarray:
    o = verts[0]
    m = 2 * (verts[1:] - o)
    rhs = np.sum(verts[1:] ** 2, axis=1) - np.dot(o, o)
    return np.linalg.solve(m, rhs)


# --- constants ------------------------------------------------------------------

def _richardson(fn, t: float, step: float) -> np.ndarray:
    def central(h):
        return (fn(t + h) - fn(t - h)) / (2 * h)
    return (4 * central(step / 2) - central(step)) / 3


def solve_dodec_constants(step: float = 1e-5) -> DodecConstants:
    """Solve f(t_D) = 0 and f'(t_D) = 0 for (a_D, b_D) using finite differences."""
    td = t_dodec()

    def data(t):
        p = tet_family(t)
        return np.array([p.area, p.sol, p.dih])

    val = data(td)
    der = _richardson(data, td, step)
    m = np.array([[3 * val[1], 9 * val[2]], [3 * der[1], 9 * der[2]]])
    if abs(np.linalg.det(m)) < 1e-12 * np.linalg.norm(m) ** 2:
        raise SingularSystemError("constants system is singular")
    a, b = np.linalg.solve(m, -np.array([val[0], der[0]]))
    return DodecConstants(t_D=td, a_D=float(a), b_D=float(b), area_CD=dodecahedron_area())


def t_dodec_interval() -> Interval:
    """Enclosure of t_D = sqrt(8 (1 - 1/sqrt 5))."""
    inv = Interval.point(5.0).sqrt().recip()
    return (8 * (1 - inv)).sqrt()


def dodec_constants_enclosure() -> tuple[Interval, Interval]:
    """Rigorous enclosures of (a_D, b_D) from exact derivatives at t_D."""
    (tj,) = Jet.variables([t_dodec_interval()], order=1)
    area, dih = family_area(tj), family_dih(tj)
    sol = 3 * dih - PI
    a11, a12, r1 = 3 * sol.val, 9 * dih.val, -area.val
    a21, a22, r2 = 3 * sol.grad[0], 9 * dih.grad[0], -area.grad[0]
    det = a11 * a22 - a12 * a21
    return (r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det


def lhs_dodec_family(t, consts: DodecConstants | None = None):
    """f(t; a_D, b_D) along the family."""
    if isinstance(t, (int, float)):
        _check_t(t)
        consts = consts or solve_dodec_constants()
        return family_lhs(t, consts.a_D, consts.b_D)
    a, b = dodec_constants_enclosure()
    return family_lhs(t, a, b)


def family_expr() -> tuple[ExprFn, Box, Interval]:
    """Expression, domain [2, sqrt 6] and tight point t_D for certification."""
    a, b = dodec_constants_enclosure()

    def f(t):
        if isinstance(t, (int, float)):
            return family_lhs(t, a.mid, b.mid)
        return family_lhs(t, a, b)

    expr = ExprFn.from_function(f, 1, "dodec-family")
    domain = Box((Interval(T_MIN, Interval.point(6.0).sqrt().lo),), ("t",))
    return expr, domain, t_dodec_interval()


__all__ = [
    "DodecConstants", "FamilyDomainError", "SingularSystemError", "T_MAX", "T_MIN", "TetFamilyPoint",
    "circumcenter3", "dihedral_angle", "dodec_constants_enclosure", "dodecahedron_area",
    "dodecahedron_dihedral", "family_area", "family_dih", "family_expr", "family_lhs", "family_sol",
    "family_vertices", "lhs_dodec_family", "solid_angle", "solve_dodec_constants", "t_dodec",
    "t_dodec_interval", "tet_family",
]
