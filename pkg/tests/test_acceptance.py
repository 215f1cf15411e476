"""Acceptance criteria 1 to 10.

Each criterion records one or more checks; a PASS/FAIL line per criterion is
printed in the terminal summary (see conftest.py).  Run this file alone with

    pytest tests/test_acceptance.py -v
"""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from hexpack import annulus, certify, contact, dodec3d, geom2d, marchal2d, scalar
from hexpack.interval import VERIFIED, Interval, Options

# reference values from a 40-digit mpmath evaluation
LHS7_AT_2 = 0.04359877559829887
LHS7_AT_252 = 0.04564433963348082
SEVEN_POINT_BOUND = 5.634954084936208
FCC_SQUARE_CORNER = 1.910633236249019
HEX = 4 * math.sqrt(3)


def _dodecahedron_area_from_pentagons() -> float:
    """Regular dodecahedron with inradius 1: edge from the inradius formula, then 12 pentagons."""
    edge = 20 / math.sqrt(250 + 110 * math.sqrt(5))
    pentagon = 0.25 * math.sqrt(5 * (5 + 2 * math.sqrt(5))) * edge ** 2
    return 12 * pentagon


# --- 1 ---------------------------------------------------------------------------

def test_criterion_1_arc_inequality(acceptance):
    start = time.perf_counter()
    cert = certify.certify("ineq3")
    elapsed = time.perf_counter() - start
    acceptance.check(1, "ineq3 verified", cert.outcome == VERIFIED, cert.outcome)
    acceptance.check(1, "runtime < 1 s", elapsed < 1.0, f"{elapsed:.3f} s")
    acceptance.check(1, "replay", certify.get_problem("ineq3").replay(cert) == VERIFIED)


# --- 2 ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def ineq2_run():
    start = time.perf_counter()
    cert = certify.certify("ineq2", Options(), delta=0.05)
    return cert, time.perf_counter() - start


def test_criterion_2_two_piece_inequality(acceptance, ineq2_run):
    cert, elapsed = ineq2_run
    acceptance.check(2, "ineq2 verified", cert.outcome == VERIFIED, f"{cert.outcome}, {cert.cells_examined} cells")
    acceptance.check(2, "runtime < 10 min", elapsed < 600, f"{elapsed:.1f} s")
    local = cert.local_checks[0] if cert.local_checks else {}
    acceptance.check(2, "tight point (1, 1, 2)", cert.tight_points == [[1.0, 1.0, 2.0]], cert.tight_points)
    acceptance.check(2, "Hessian certificate at delta 0.05",
                     bool(local.get("ok")) and float(local.get("delta", 0)) == 0.05, local.get("delta"))
    at_tight = scalar.lhs_ineq2(Interval.point(1.0), Interval.point(1.0), Interval.point(2.0))
    acceptance.check(2, "equality at the equilateral triangle",
                     at_tight.contains(0.0) and abs(scalar.lhs_ineq2(1.0, 1.0, 2.0)) <= 1e-12, at_tight)


def test_criterion_2_replay(acceptance, ineq2_run):
    cert, _ = ineq2_run
    acceptance.check(2, "replay", certify.get_problem("ineq2").replay(cert) == VERIFIED)


# --- 3 ---------------------------------------------------------------------------

def test_criterion_3_certificates(acceptance):
    for pid in ("ineq4", "ineq6", "ineq7"):
        cert = certify.certify(pid)
        acceptance.check(3, f"{pid} verified", cert.outcome == VERIFIED, cert.outcome)
    acceptance.check(3, "ineq7(2) ~ 0.0436 within 1e-4", abs(scalar.lhs_ineq7(2.0) - 0.0436) <= 1e-4,
                     f"{scalar.lhs_ineq7(2.0):.10f}")
    acceptance.check(3, "ineq7(2) matches oracle", abs(scalar.lhs_ineq7(2.0) - LHS7_AT_2) <= 1e-12)
    acceptance.check(3, "ineq7(2.52) matches oracle", abs(scalar.lhs_ineq7(2.52) - LHS7_AT_252) <= 1e-12,
                     f"{scalar.lhs_ineq7(2.52):.10f}")


@pytest.mark.xfail(strict=True, reason="the stated endpoint 0.0475 is off by 1.9e-3 from the true "
                                      "value 0.0456443 (alpha(2.52) = 0.3656443, not 0.367520)")
def test_criterion_3_stated_upper_endpoint(acceptance):
    value = scalar.lhs_ineq7(2.52)
    ok = abs(value - 0.0475) <= 1e-4
    acceptance.check(3, "ineq7(2.52) ~ 0.0475 within 1e-4", ok, f"{value:.10f}")
    assert ok


# --- 4 ---------------------------------------------------------------------------

def test_criterion_4_hexagonal_cell(acceptance):
    report = geom2d.certify_cell((0.0, 0.0), geom2d.hex_lattice(2))
    acceptance.check(4, "perimeter 4 sqrt 3 within 1e-9", abs(report.total_length - HEX) <= 1e-9,
                     f"{report.total_length!r}")
    worst = max(abs(p.margin) for p in report.pieces)
    acceptance.check(4, "all margins within 1e-9 of 0", worst <= 1e-9, f"max |margin| {worst:.2e}")


# --- 5 ---------------------------------------------------------------------------

def test_criterion_5_random_packings(acceptance):
    rng = np.random.default_rng(2024)
    worst, failures = math.inf, 0
    for _ in range(1000):
        pack = geom2d.random_saturated_packing(rng)
        r = geom2d.certify_cell((0.0, 0.0), pack)
        worst = min(worst, r.total_length)
        failures += r.total_length < HEX - 1e-9
    acceptance.check(5, "1000 packings >= 4 sqrt 3 - 1e-9", failures == 0, f"min total {worst:.9f}")
    fig = geom2d.figure2_packing()
    acceptance.check(5, "Figure-2 P0 passes", geom2d.certify_cell(fig.points[0], fig).passed)


# --- 6 ---------------------------------------------------------------------------

def test_criterion_6_lemma_L(acceptance):
    hexr = annulus.check_lemma_L_2d(annulus.hexagon())
    acceptance.check(6, "hexagon sum L = 6", hexr.sum_L == 6.0 and hexr.passed, hexr.sum_L)
    summary = annulus.search_lemma_L_2d(trials=100_000, seed=0)
    acceptance.check(6, "1e5 random configs never exceed 6",
                     summary.violations == 0 and summary.max_sum_L <= 6 + 1e-9,
                     f"max {summary.max_sum_L:.12f}, {summary.at_bound} at bound")
    acceptance.check(6, "configs at the bound are hexagons", summary.at_bound_all_extremal)
    acceptance.check(6, "seven-point bound ~ 5.64", abs(annulus.SEVEN_POINT_BOUND - SEVEN_POINT_BOUND) <= 1e-12,
                     f"{annulus.SEVEN_POINT_BOUND:.12f}")
    rng = np.random.default_rng(7)
    chain_ok = all(
        (r := annulus.check_lemma_L_2d(annulus.random_config_2d(rng, 7))).passed and r.method == "angle-chain"
        and r.sum_L <= annulus.SEVEN_POINT_BOUND + 1e-9
        for _ in range(500)
    )
    acceptance.check(6, "checker confirms the seven-point chain", chain_ok)


# --- 7 ---------------------------------------------------------------------------

def test_criterion_7_spatial(acceptance):
    for name, pts in (("FCC", annulus.fcc_kissing()), ("HCP", annulus.hcp_kissing())):
        r = annulus.check_L12_config(annulus.AnnulusConfig.from_points(pts, 3))
        acceptance.check(7, f"{name} sum L = 12", abs(r.sum_L - 12) <= 1e-12 and r.passed, r.sum_L)
    ft = annulus.ft_norm_sum(annulus.extremal_norm_config())
    acceptance.check(7, "extremal norm sum 26.52 within 1e-9", abs(ft.norm_sum - 26.52) <= 1e-9,
                     f"{ft.norm_sum!r}")
    acceptance.check(7, "bound 24 + 2 h0 = 26.52", abs(annulus.FT_BOUND - 26.52) <= 1e-12)


# --- 8 ---------------------------------------------------------------------------

def test_criterion_8_dodecahedral_constants(acceptance):
    c = dodec3d.solve_dodec_constants()
    acceptance.check(8, "t_D = 2.1029 +- 1e-4", abs(c.t_D - 2.1029) <= 1e-4, f"{c.t_D:.10f}")
    acceptance.check(8, "a_D within 5e-4 of -0.581", abs(c.a_D + 0.581) <= 5e-4, f"{c.a_D:.10f}")
    acceptance.check(8, "b_D within 5e-5 of 0.0232", abs(c.b_D - 0.0232) <= 5e-5, f"{c.b_D:.10f}")
    area = _dodecahedron_area_from_pentagons()
    lhs = -3 * c.a_D * 4 * math.pi - 72 * math.pi * c.b_D
    acceptance.check(8, "identity vs pentagon area within 1e-6", abs(lhs - area) <= 1e-6, f"gap {lhs - area:.2e}")
    cert = certify.certify("dodec-family")
    acceptance.check(8, "family slice verified", cert.outcome == VERIFIED, cert.outcome)
    acceptance.check(8, "double root at t_D",
                     abs(dodec3d.lhs_dodec_family(c.t_D, c)) <= 1e-10 and bool(cert.local_checks[0]["ok"]))


# --- 9 ---------------------------------------------------------------------------

def test_criterion_9_contact_graphs(acceptance):
    fthex = contact.eliminate_hexagon(contact.fthex_graph())
    acceptance.check(9, "fthex eliminated by hexagon perimeter",
                     fthex.outcome == contact.INFEASIBLE and fthex.method == "hexagon-perimeter")
    g = contact.fcc_graph()
    lp = contact.build_angle_lp(g)
    cert = contact.check_feasibility(lp)
    squares = contact.corner_values(lp, cert, 4, g)
    acceptance.check(9, "FCC LP feasible", cert.outcome == contact.FEASIBLE and cert.payload["exact"])
    worst = max(abs(v - FCC_SQUARE_CORNER) for v in squares)
    acceptance.check(9, "FCC square corner 1.910633 +- 1e-6", worst <= 1e-6, f"max deviation {worst:.2e}")
    hcp = contact.check_feasibility(contact.build_angle_lp(contact.hcp_graph()))
    acceptance.check(9, "HCP LP feasible", hcp.outcome == contact.FEASIBLE)
    wheel = contact.build_angle_lp(contact.wheel_graph(6))
    bad = contact.check_feasibility(wheel)
    y = [Fraction(v) for v in bad.payload.get("multipliers", [])]
    acceptance.check(9, "planted contradiction infeasible", bad.outcome == contact.INFEASIBLE)
    acceptance.check(9, "Farkas certificate replays exactly", bool(y) and contact.verify_farkas(wheel, y))


# --- 10 --------------------------------------------------------------------------

def test_criterion_10_marchal(acceptance):
    V = geom2d.figure2_packing().array()
    report = marchal2d.validate_partition(V, n_samples=1_000_000, seed=0)
    acceptance.check(10, "1e6 samples, no level >= 4", report.max_level <= 3 and report.passed,
                     f"counts {report.level_counts}")
    sums = marchal2d.triangle_area_sums(marchal2d.rogers_partition(V), V)
    worst = max(abs(total - area) for total, area in sums.values())
    acceptance.check(10, "Rogers areas sum to triangle area within 1e-9", worst <= 1e-9, f"{worst:.2e}")
