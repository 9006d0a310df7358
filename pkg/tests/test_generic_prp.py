from fractions import Fraction
import math

import pytest

from prescribed_ricci import generic_prp as gp

P = gp.SO17_PARAMS


def test_params_parse_fractions_and_validate():
    p = gp.TwoSummandParams(7, 7, "7/6", "7/6")
    assert p.p1 == Fraction(7, 6) and p == P
    with pytest.raises(ValueError):
        gp.TwoSummandParams(1, 1, 0, 1)  # 2 p2 > d2
    with pytest.raises(ValueError):
        gp.TwoSummandParams(3, 4, 0, 0)


def test_ric_diag_examples():
    assert gp.ric_diag(P, 1.0) == pytest.approx(gp.DiagTensor(5 / 12, -7 / 12))
    r = gp.ric_diag(P, 6.0)
    assert (r.t1, r.t2) == pytest.approx((15 / 8, -1.0))
    assert gp.ric_diag(P, 1e-12).t2 == pytest.approx(-0.5)
    with pytest.raises(ValueError):
        gp.ric_diag(P, 0.0)


def test_solve_T():
    t1, lam = gp.solve_T(P, -1.0)
    assert (t1, lam) == pytest.approx((15 / 8, 6.0))
    with pytest.raises(gp.NotInImage):
        gp.solve_T(P, -0.5)


def test_solve_T_trivial_p1_parabola():
    for d2 in (2, 3, 6):
        params = gp.TwoSummandParams(1, d2, 0, 1)
        for t2 in (-0.6, -1.0, -4.0):
            t1, _ = gp.solve_T(params, t2)
            assert t1 == pytest.approx(d2 * d2 * (t2 * t2 + t2 + 0.25))


def test_solve_T_limit_at_minus_half():
    t1, lam = gp.solve_T(P, -0.5 - 1e-12)
    assert lam == pytest.approx(0.0, abs=1e-10)
    assert t1 == pytest.approx(gp.ric_diag(P, 1e-12).t1, abs=1e-9)


def test_tau_value():
    tau = gp.threshold_tau(P)
    assert tau == pytest.approx(6 - 3 * math.sqrt(5), abs=1e-12)
    assert 1 / tau == pytest.approx(-(2 + math.sqrt(5)) / 3, abs=1e-12)


def test_analyze_cT_scaled_image_point():
    res = gp.analyze_cT(P, 5 / 6, -7 / 6)
    plus = [s for s in res.solutions if s.branch == "plus"][0]
    assert plus.c == pytest.approx(0.5, abs=1e-12)
    assert plus.lam == pytest.approx(1.0, abs=1e-12)
    assert res.solution_count == 2


def test_analyze_cT_at_tau_single_solution():
    tau = gp.threshold_tau(P)
    res = gp.analyze_cT(P, -tau, -1.0)
    assert res.boundary and res.solution_count == 1
    assert abs(res.c_plus - res.c_minus) < 1e-9


def test_analyze_cT_beyond_tau_has_no_solution():
    res = gp.analyze_cT(P, 0.5, -1.0)  # ratio -0.5 > tau
    assert res.solutions == []


def test_analyze_cT_sign_conditions():
    with pytest.raises(ValueError):
        gp.analyze_cT(P, -1.0, -1.0)
    with pytest.raises(ValueError):
        gp.analyze_cT(P, 1.0, 1.0)


def test_trivial_regime_diagnostic():
    res = gp.analyze_cT(gp.TwoSummandParams(1, 2, 0, 1), 1.0, -1.0)
    assert res.trivial_regime
    s = res.solutions[0]
    assert (s.c, s.lam) == pytest.approx((1.0, 2.0), abs=1e-12)
    d = res.diagnostics
    assert d["lambda_d1_formula"] == pytest.approx(1.0)
    assert d["d1_formula_roundtrip_error"] == pytest.approx(0.75)
    assert d["general_roundtrip_error"] < 1e-12


def test_product_case():
    assert gp.product_case_solve("T", (-0.5, -0.5)).solvable
    r = gp.product_case_solve("cT", (-1.0, -1.0))
    assert r.solvable and r.c == pytest.approx(0.5)
    assert not gp.product_case_solve("cT", (-1.0, -2.0)).solvable
    with pytest.raises(ValueError):
        gp.product_case_solve("nope", (-1.0, -1.0))
