"""Fast certificates (everything except the long two-piece inequality)."""

import json

import pytest

from hexpack import certify, scalar
from hexpack.interval import FALSIFIED, VERIFIED, Box, Certificate, ExprFn, Interval, Options, verify_nonneg

FAST = ["ineq3", "ineq4", "ineq6", "ineq7", "dodec-family"]


@pytest.mark.parametrize("pid", FAST)
def test_fast_problems_verify_and_replay(pid):
    cert = certify.certify(pid)
    assert cert.outcome == VERIFIED, cert.reason
    assert certify.get_problem(pid).replay(cert) == VERIFIED


@pytest.mark.parametrize("pid", FAST)
def test_certificate_json_round_trip(pid):
    cert = certify.certify(pid)
    text = cert.to_json()
    json.loads(text)
    back = Certificate.from_json(text)
    assert back.to_dict() == cert.to_dict()
    assert certify.get_problem(pid).replay(back) == VERIFIED


def test_unknown_problem():
    with pytest.raises(KeyError):
        certify.get_problem("ineq99")
    assert set(certify.PROBLEM_IDS) == {"ineq2", "ineq3", "ineq4", "ineq6", "ineq7", "dodec-family"}


def test_ineq6_composite_parts():
    cert = certify.certify("ineq6")
    claims = [part["claim"] for part in cert.local_checks]
    assert len(claims) == 4
    assert cert.local_checks[-1]["spot_checks_enclose_zero"] is True
    for part in cert.local_checks[:-1]:
        assert part["certificate"]["outcome"] == VERIFIED


def test_ineq6_zero_on_contact_edge():
    assert scalar.lhs_ineq6(2.0, 2.52, 2.0) == pytest.approx(0.0, abs=1e-14)
    assert scalar.lhs_ineq6(2.37, 2.0, 2.0) == pytest.approx(0.0, abs=1e-14)


def test_ineq7_concave_by_interval_second_derivative():
    expr = ExprFn.from_function(scalar.lhs_ineq7, 1, "ineq7")
    lo, hi, pieces = 2.0, 2.52 - 1e-9, 64
    step = (hi - lo) / pieces
    for k in range(pieces):
        box = Box((Interval(lo + k * step, min(hi, lo + (k + 1) * step)),), ("n",))
        assert expr.hessian(box)[0][0].hi < 0.0


def test_shifted_inequality_is_falsified():
    # the maximum of ineq7 is below 0.05
    expr = ExprFn.from_function(lambda n: scalar.lhs_ineq7(n) - 0.05, 1, "ineq7-shifted")
    cert = verify_nonneg(expr, Box.from_bounds([(2.0, 2.52)], ["n"]))
    assert cert.outcome == FALSIFIED
    assert scalar.lhs_ineq7(cert.witness.dims[0].mid) - 0.05 < 0


def test_depth_limit_produces_inconclusive_for_ineq2():
    cert = certify.certify("ineq2", Options(max_depth=3))
    assert cert.outcome != VERIFIED
