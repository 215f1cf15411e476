import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hexpack import geom2d, marchal2d as m

FIG2 = geom2d.figure2_packing().array()
SQUARE = np.array([[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]])


def _rotate(pts, angle, shift):
    rot = np.array([[math.cos(angle), -math.sin(angle)], [math.sin(angle), math.cos(angle)]])
    return pts @ rot.T + shift


def test_level_examples():
    V = np.array([[0.0, 0.0], [2.0, 0.0], [1.0, math.sqrt(3.0)]])
    assert m.level((1.0, 0.5), V) == 3  # inside the triangle
    assert m.level((1.0, -0.5), V) == 2  # in the rhombus of the base pair only
    assert m.level((-1.0, 0.0), V) == 1  # in one disk only
    assert m.level((5.0, 5.0), V) == 0


def test_shapes():
    assert m.shape_contains([(0, 0)], (1.0, 1.0))
    assert not m.shape_contains([(0, 0)], (1.0, 1.01))
    # rhombus of a touching pair has half width 1 at the midpoint
    assert m.shape_contains([(0, 0), (2, 0)], (1.0, 0.999))
    assert not m.shape_contains([(0, 0), (2, 0)], (1.0, 1.001))
    with pytest.raises(m.ShapeError):
        m.shape_contains([(0, 0), (3, 0)], (1.0, 0.0))
    with pytest.raises(m.ShapeError):
        m.shape_contains([(0, 0), (2.8, 0), (1.4, 2.8)], (1.0, 0.5))  # circumradius too big


def test_rhombus_matches_generic_hull(rng):
    for _ in range(40):
        u = rng.uniform(-3, 3, 2)
        ang = rng.uniform(0, 2 * math.pi)
        v = u + rng.uniform(2.0, math.sqrt(8.0) - 1e-6) * np.array([math.cos(ang), math.sin(ang)])
        q = (u + v) / 2 + rng.uniform(-1.6, 1.6, (500, 2))
        fast = m.shape_contains([u, v], q)
        for p, f in zip(q, fast):
            assert f == m.rhombus_by_hull(u, v, p)


def test_figure2_index():
    idx = m.ShapeIndex.build(FIG2)
    assert idx.pairs == [(0, 1), (0, 2), (0, 3), (2, 3)]
    assert idx.triangles == [(0, 2, 3)]
    assert idx.higher == []


def test_figure2_has_no_level_four(rng):
    q = m.Window.around(FIG2).sample(rng, 200_000)
    lev = m.levels(q, FIG2)
    assert lev.max() == 3
    assert np.count_nonzero(lev == 3) > 0


def test_hex_patch_has_level_three(rng):
    V = geom2d.hex_lattice(2).array()
    lev = m.levels(m.Window.around(V).sample(rng, 50_000), V)
    assert lev.max() == 3
    assert np.count_nonzero(lev == 3) > 0


@given(st.floats(0, 2 * math.pi), st.floats(-5, 5), st.floats(-5, 5))
def test_levels_invariant_under_rigid_motion(angle, dx, dy):
    rng = np.random.default_rng(7)
    q = m.Window.around(FIG2).sample(rng, 2000)
    shift = np.array([dx, dy])
    a = m.levels(q, FIG2)
    b = m.levels(_rotate(q, angle, shift), _rotate(FIG2, angle, shift))
    # rounding may move points lying exactly on a shape boundary; none are sampled there
    assert np.count_nonzero(a != b) <= 2


def test_levels_monotone_in_packing(rng):
    q = m.Window.around(FIG2).sample(rng, 20_000)
    sub = m.levels(q, FIG2[:4])
    full = m.levels(q, FIG2)
    assert np.all(full >= sub)


def test_empty_packing():
    q = np.array([[0.0, 0.0], [1.0, 1.0]])
    assert list(m.levels(q, np.zeros((0, 2)))) == [0, 0]
    cells = m.marchal_cells(np.zeros((0, 2)), m.Window(-1, -1, 1, 1), n_samples=100)
    assert m.census(cells) == {0: 1}


def test_rogers_areas_sum_to_triangle_area():
    simplices = m.rogers_partition(FIG2)
    assert len(simplices) == 6 * len(m.delaunay(FIG2).simplices)
    for tri, (total, area) in m.triangle_area_sums(simplices, FIG2).items():
        assert total == pytest.approx(area, abs=1e-9)


def test_rogers_areas_with_obtuse_triangle():
    V = np.array([[0.0, 0.0], [3.6, 0.0], [1.8, 0.6]])
    simplices = m.rogers_partition(V)
    assert any(s.signed_area < 0 for s in simplices)
    ((total, area),) = m.triangle_area_sums(simplices, V).values()
    assert total == pytest.approx(area, abs=1e-12)


@pytest.mark.parametrize("seed", range(20))
def test_rogers_additivity_random(seed):
    pack = geom2d.random_saturated_packing(np.random.default_rng(seed))
    V = pack.array()
    for total, area in m.triangle_area_sums(m.rogers_partition(V, perturb=True), V).values():
        assert total == pytest.approx(area, abs=1e-9)


def test_degenerate_square_raises_and_perturb_resolves():
    with pytest.raises(m.DegeneracyError) as info:
        m.delaunay(SQUARE)
    assert sorted(info.value.quadruple) == [0, 1, 2, 3]
    tri = m.delaunay(SQUARE, perturb=True)
    assert len(tri.simplices) == 2
    assert tri.perturbed == [0, 1, 2, 3]


def test_collinear_and_tiny_inputs():
    tri = m.delaunay(np.array([[0.0, 0.0], [4.0, 0.0], [2.0, 0.0]]))
    assert tri.bare_edges == [(0, 2), (1, 2)]
    assert m.rogers_partition(np.array([[0.0, 0.0]])) == []


def test_figure2_census_fixture():
    cells = m.marchal_cells(FIG2, n_samples=200_000, seed=0)
    assert m.census(cells) == {0: 24, 1: 24, 2: 5, 3: 1}
    (top,) = [c for c in cells if c.level == 3]
    assert top.key == ((0, 2, 3),)
    assert len(top.simplices) == 6


def test_marchal_cell_membership_consistent():
    cells = m.marchal_cells(FIG2, n_samples=20_000, seed=3)
    loc = m.FlagLocator(m.delaunay(FIG2))
    rng = np.random.default_rng(4)
    for p in m.Window.around(FIG2).sample(rng, 50):
        owners = [c for c in cells if c.contains(p, FIG2, loc)]
        assert len(owners) <= 1


def test_validate_partition_passes_and_is_deterministic():
    a = m.validate_partition(FIG2, n_samples=50_000, seed=0)
    b = m.validate_partition(FIG2, n_samples=50_000, seed=0)
    assert a.passed, a.failures
    assert a.max_level == 3
    assert a.dumps() == b.dumps()


def test_validate_partition_perturbed_square():
    r = m.validate_partition(SQUARE, n_samples=20_000, perturb=True)
    assert r.passed and r.perturbed
