import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hexpack import dodec3d as dd
from hexpack.interval import VERIFIED, Interval, Jet

T_D_REF = 2.102924448476534
A_D_REF = -0.5811692062216101
B_D_REF = 0.02324851330469808
AREA_REF = 16.65087308554653  # dodecahedron with inradius 1, from edge length 20 / sqrt(250 + 110 sqrt 5)
DIHEDRAL_REF = 2.034443935795703

t_vals = st.floats(min_value=2.0, max_value=math.sqrt(6.0) - 1e-6)


def _dodecahedron_vertices():
    phi = (1 + math.sqrt(5)) / 2
    pts = [np.array(p, dtype=float) for p in itertools.product((-1, 1), repeat=3)]
    for a, b in itertools.product((-1, 1), repeat=2):
        pts += [np.array([0, a / phi, b * phi]), np.array([a / phi, b * phi, 0]), np.array([b * phi, 0, a / phi])]
    return np.array(pts)


def _faces(verts):
    """Pentagons as vertex index lists (vertices maximising a face normal direction)."""
    edge = min(np.linalg.norm(a - b) for a, b in itertools.combinations(verts, 2))
    faces = set()
    for tri in itertools.combinations(range(len(verts)), 3):
        a, b, c = verts[list(tri)]
        n = np.cross(b - a, c - a)
        if np.linalg.norm(n) < 1e-9:
            continue
        n /= np.linalg.norm(n)
        d = float(n @ a)
        side = verts @ n - d
        if np.all(side <= 1e-9) or np.all(side >= -1e-9):
            face = tuple(sorted(np.flatnonzero(np.abs(side) <= 1e-9)))
            if len(face) == 5:
                faces.add(face)
    assert edge > 0
    return sorted(faces)


def test_dodecahedron_from_coordinates():
    verts = _dodecahedron_vertices()
    faces = _faces(verts)
    assert len(faces) == 12
    normals = []
    for f in faces:
        c = verts[list(f)].mean(axis=0)
        normals.append(c / np.linalg.norm(c))
    inradius = float(np.linalg.norm(verts[list(faces[0])].mean(axis=0)))
    # adjacent faces share two vertices
    adj = [(i, j) for i, j in itertools.combinations(range(12), 2) if len(set(faces[i]) & set(faces[j])) == 2]
    assert len(adj) == 30
    i, j = adj[0]
    dihedral = math.pi - math.acos(float(normals[i] @ normals[j]))
    assert dihedral == pytest.approx(DIHEDRAL_REF, abs=1e-12)
    assert dd.dodecahedron_dihedral() == pytest.approx(DIHEDRAL_REF, abs=1e-12)
    # centres at distance 2 along adjacent face normals
    assert float(np.linalg.norm(2 * normals[i] - 2 * normals[j])) == pytest.approx(T_D_REF, abs=1e-12)
    edge = min(np.linalg.norm(a - b) for a, b in itertools.combinations(verts, 2))
    scaled_edge = edge / inradius
    pentagon = 0.25 * math.sqrt(5 * (5 + 2 * math.sqrt(5))) * scaled_edge ** 2
    assert 12 * pentagon == pytest.approx(AREA_REF, abs=1e-9)


def test_constants():
    c = dd.solve_dodec_constants()
    assert c.t_D == pytest.approx(T_D_REF, abs=1e-14)
    assert c.a_D == pytest.approx(A_D_REF, abs=1e-8)
    assert c.b_D == pytest.approx(B_D_REF, abs=1e-8)
    assert c.area_CD == pytest.approx(AREA_REF, abs=1e-12)
    assert abs(c.identity_gap()) < 1e-6


def test_rigorous_enclosures_contain_reference():
    a, b = dd.dodec_constants_enclosure()
    assert a.contains(A_D_REF) or abs(a.mid - A_D_REF) < 1e-13
    assert b.contains(B_D_REF) or abs(b.mid - B_D_REF) < 1e-13
    assert a.width < 1e-12 and b.width < 1e-12
    assert dd.t_dodec_interval().contains(T_D_REF)


def test_double_root_at_t_D():
    c = dd.solve_dodec_constants()
    (tj,) = Jet.variables([Interval.point(c.t_D)], order=2)
    a, b = dd.dodec_constants_enclosure()
    f = dd.family_lhs(tj, a, b)
    assert abs(f.val.mid) < 1e-12
    assert abs(f.grad[0].mid) < 1e-10
    assert f.hessian_matrix()[0][0].lo > 0


@given(t_vals)
def test_family_nonnegative(t):
    assert dd.lhs_dodec_family(t) >= -1e-12


@given(t_vals)
def test_closed_forms_match_coordinates(t):
    p = dd.tet_family(t)
    assert dd.family_area(t) == pytest.approx(p.area, rel=1e-10)
    assert dd.family_dih(t) == pytest.approx(p.dih, abs=1e-10)
    assert dd.family_sol(t) == pytest.approx(p.sol, abs=1e-10)


def _lhuilier(a, b, c):
    """Solid angle from the three edge angles by L'Huilier's formula."""
    def ang(x, y):
        return math.acos(float(x @ y) / (np.linalg.norm(x) * np.linalg.norm(y)))
    sa, sb, sc = ang(b, c), ang(a, c), ang(a, b)
    s = (sa + sb + sc) / 2
    prod = math.tan(s / 2) * math.tan((s - sa) / 2) * math.tan((s - sb) / 2) * math.tan((s - sc) / 2)
    return 4 * math.atan(math.sqrt(max(prod, 0.0)))


def test_solid_angle_matches_lhuilier(rng):
    for _ in range(200):
        a, b, c = rng.normal(size=(3, 3))
        assert dd.solid_angle(a, b, c) == pytest.approx(_lhuilier(a, b, c), abs=1e-9)
    # octant
    e = np.eye(3)
    assert dd.solid_angle(e[0], e[1], e[2]) == pytest.approx(math.pi / 2)


def test_area_by_monte_carlo(rng):
    t = 2.3
    o, v1, v2, v3 = dd.family_vertices(t)
    # sample the bisector plane of 0 and v1 around v1/2
    n = v1 / np.linalg.norm(v1)
    e1 = np.cross(n, [1.0, 0.0, 0.0])
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(n, e1)
    half = 1.5
    uv = rng.uniform(-half, half, (400_000, 2))
    x = v1 / 2 + uv[:, :1] * e1 + uv[:, 1:] * e2
    # inside the tetrahedron: barycentric coordinates in the basis v1, v2, v3
    bary = np.linalg.solve(np.column_stack([v1, v2, v3]), x.T).T
    inside = np.all(bary >= 0, axis=1) & (bary.sum(axis=1) <= 1)
    closer = (x @ v2 <= 2.0) & (x @ v3 <= 2.0)
    est = 3 * (2 * half) ** 2 * np.count_nonzero(inside & closer) / len(x)
    assert est == pytest.approx(dd.family_area(t), rel=0.02)


def test_family_domain_and_certificate():
    with pytest.raises(dd.FamilyDomainError):
        dd.tet_family(2.5)
    with pytest.raises(dd.FamilyDomainError):
        dd.tet_family(1.9)
    from hexpack import certify
    cert = certify.certify("dodec-family")
    assert cert.outcome == VERIFIED
    assert cert.tight_points[0][0] == pytest.approx(T_D_REF, abs=1e-12)
