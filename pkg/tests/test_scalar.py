"""Scalar functions against frozen high-precision reference values."""

import math

import pytest
from hypothesis import assume, given, strategies as st

from hexpack import geom2d, scalar
from hexpack.interval import Interval, Jet

# reference values computed with mpmath at 40 digits
C_REF = -0.12078143160810607
ARC_COEFF_REF = 0.08088022903976172  # sqrt 2 - 4/3
LHS2_REF = {(1.1, 1.2, 2.3): 0.03318995017122963, (1.3, 1.05, 2.5): 0.07265841782028223, (1.0, 1.0, 2.0): 0.0}
LHS4_REF = {1.0: 0.07358388041150832, 1.1: 0.05699889854278246, 1.26: 0.01371260001284378,
            1.3: 0.01723825358482660}
LHS6_REF = {(2.52, 2.52, 2.0): 0.08482267533559533, (2.2, 2.3, 2.4): 0.2248619932692430, (2.0, 2.3, 2.0): 0.0}
LHS7_REF = {2.0: 0.04359877559829887, 2.3: 0.04690109545566759, 2.52: 0.04564433963348082}
ALPHA_REF = {2.0: math.pi / 6, 2.3: 0.4345934031479753, 2.52: 0.3656443396334808}
THETA_REF = {(2.52, 2.52, 2.0): 0.8161113546025570, (2.0, 2.52, 2.0): 0.8892431152317797}

h_vals = st.floats(min_value=1.0, max_value=math.sqrt(2.0))
n_vals = st.floats(min_value=2.0, max_value=2.52)


def test_constants():
    assert scalar.C == pytest.approx(C_REF, abs=1e-15)
    assert scalar.B == pytest.approx(4 / 3)
    assert scalar.CONSTANTS.annulus_outer == pytest.approx(2.52)
    assert scalar.CONSTANTS.r_outer_ft == pytest.approx(math.sqrt(8))
    for name in ("h0", "b", "c", "c_alpha", "c_off", "trunc", "r_outer_ft", "annulus_outer"):
        assert scalar.CONSTANTS.interval(name).contains(getattr(scalar.CONSTANTS, name))


def test_hexagon_identity():
    # 2 pi b + 12 c = 4 sqrt 3
    assert abs(scalar.hexagon_identity_gap()) < 1e-12


def test_L_values():
    assert scalar.L(1.0) == 1.0
    assert scalar.L(1.26) == 0.0
    assert scalar.L(1.5) == 0.0
    assert scalar.L(1.13) == pytest.approx(0.5)
    with pytest.raises(scalar.ScalarDomainError):
        scalar.L(-0.1)


@pytest.mark.parametrize("n,ref", sorted(ALPHA_REF.items()))
def test_alpha(n, ref):
    assert scalar.alpha(n) == pytest.approx(ref, abs=1e-14)


@pytest.mark.parametrize("args,ref", sorted(THETA_REF.items()))
def test_angle_at_origin(args, ref):
    assert scalar.angle_at_origin(*args) == pytest.approx(ref, abs=1e-14)


def test_lhs_ineq3():
    assert scalar.lhs_ineq3(1.0) == pytest.approx(ARC_COEFF_REF, abs=1e-15)
    assert scalar.lhs_ineq3(0.0) == 0.0
    with pytest.raises(scalar.ScalarDomainError):
        scalar.lhs_ineq3(7.0)


@pytest.mark.parametrize("args,ref", sorted(LHS2_REF.items()))
def test_lhs_ineq2(args, ref):
    assert scalar.lhs_ineq2(*args) == pytest.approx(ref, abs=1e-13)


@pytest.mark.parametrize("h,ref", sorted(LHS4_REF.items()))
def test_lhs_ineq4(h, ref):
    assert scalar.lhs_ineq4(h) == pytest.approx(ref, abs=1e-13)


@pytest.mark.parametrize("args,ref", sorted(LHS6_REF.items()))
def test_lhs_ineq6(args, ref):
    assert scalar.lhs_ineq6(*args) == pytest.approx(ref, abs=1e-13)


@pytest.mark.parametrize("n,ref", sorted(LHS7_REF.items()))
def test_lhs_ineq7(n, ref):
    assert scalar.lhs_ineq7(n) == pytest.approx(ref, abs=1e-13)


def test_domain_errors():
    with pytest.raises(scalar.ScalarDomainError):
        scalar.lhs_ineq2(0.9, 1.0, 2.0)
    with pytest.raises(scalar.ScalarDomainError):
        scalar.lhs_ineq2(1.4, 1.4, 2.0)  # circumradius too large
    with pytest.raises(scalar.ScalarDomainError):
        scalar.lhs_ineq4(1.5)
    with pytest.raises(scalar.ScalarDomainError):
        scalar.lhs_ineq7(2.6)
    with pytest.raises(scalar.ScalarDomainError):
        scalar.alpha(4.5)
    with pytest.raises(scalar.ScalarDomainError):
        scalar.lhs_ineq6(2.0, 2.0, 5.0)


def _pair_in_domain(h1, h2, t):
    try:
        scalar._check_pair(h1, h2, t)
    except scalar.ScalarDomainError:
        return False
    return True


@given(h_vals, h_vals, st.floats(min_value=2.0, max_value=4.0))
def test_ell_forms_agree(h1, h2, t):
    assume(_pair_in_domain(h1, h2, t))
    closed = scalar.ell_pair(h1, h2, t)
    assert closed == pytest.approx(scalar.ell_pair_circumradius(h1, h2, t), abs=1e-9)
    assert closed == pytest.approx(geom2d.ell_pair_by_construction(h1, h2, t), abs=1e-9)


@given(h_vals, h_vals, st.floats(min_value=2.0, max_value=4.0))
def test_lhs_ineq2_nonnegative_on_domain(h1, h2, t):
    assume(_pair_in_domain(h1, h2, t))
    assert scalar.lhs_ineq2(h1, h2, t) >= -1e-12


@given(h_vals)
def test_lhs_ineq4_forms_agree_and_nonnegative(h):
    s = math.sqrt(max(0.0, 2 - h * h))
    assert scalar.lhs_ineq4(h) == pytest.approx(scalar.lhs_ineq4_by_length(s), abs=1e-12)
    assert scalar.lhs_ineq4(h) >= -1e-12


@given(n_vals, n_vals, st.floats(min_value=2.0, max_value=4.0))
def test_lhs_ineq6_nonnegative(n1, n2, t):
    assume(t <= n1 + n2)
    assert scalar.lhs_ineq6(n1, n2, t) >= -1e-12


@given(n_vals)
def test_lhs_ineq7_positive(n):
    assert scalar.lhs_ineq7(n) > 0.04


@given(n_vals, n_vals)
def test_lhs_ineq7_concave(a, b):
    # midpoint concavity on [2, 2.52]
    mid = scalar.lhs_ineq7(0.5 * (a + b))
    assert mid >= 0.5 * (scalar.lhs_ineq7(a) + scalar.lhs_ineq7(b)) - 1e-12


@given(h_vals, h_vals, st.floats(min_value=2.0, max_value=4.0))
def test_interval_evaluation_encloses_float(h1, h2, t):
    assume(_pair_in_domain(h1, h2, t))
    iv = scalar.lhs_ineq2(Interval.point(h1), Interval.point(h2), Interval.point(t))
    value = scalar.lhs_ineq2(h1, h2, t)
    assert iv.lo - 1e-12 <= value <= iv.hi + 1e-12
    assert iv.width < 1e-10


def test_jet_derivative_of_L_slope():
    (h,) = Jet.variables([Interval(1.0, 1.1)], order=1)
    out = scalar.L(h)
    assert out.grad[0].contains(-1 / 0.26)
