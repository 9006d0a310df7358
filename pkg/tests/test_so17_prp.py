from fractions import Fraction
import math

import numpy as np
import pytest

from prescribed_ricci import so17_prp as sp

GOLD = (Fraction(65, 108), Fraction(-43, 108), Fraction(-16, 27))


def test_ric_abc_examples():
    assert sp.ric_abc((1, 1, 0)) == pytest.approx((5 / 12, -7 / 12, 0.0), abs=1e-14)
    assert sp.ric_abc((2.0, 4.0, 1.0)) == pytest.approx(sp.ric_abc((4.0, 8.0, 2.0)), rel=1e-13)
    assert sp.ric_abc((1, 1, 1e-7)) == pytest.approx((5 / 12, -7 / 12, 0.0), abs=1e-6)
    with pytest.raises(ValueError):
        sp.ric_abc((1, 1, 1))


def test_ric_xyz_exact_and_reflection():
    assert tuple(sp.ric_xyz((1, 1, 0))) == (Fraction(5, 12), Fraction(-7, 12), 0)
    assert tuple(sp.ric_xyz((1, 1, Fraction(1, 2)))) == GOLD
    r1, r2, r3 = GOLD
    assert tuple(sp.ric_xyz((1, 1, Fraction(-1, 2)))) == (r1, r2, -r3)
    with pytest.raises(ValueError):
        sp.ric_xyz((1, 1, 1))


def test_phi_square_and_sqrt():
    assert tuple(sp.phi_square((1, 1, 0))) == (1, 1, 0)
    x, y, z = sp.phi_square((1, 2, 1))
    assert (x, y, z) == (2, 5, 3) and x * y - z * z == 1
    assert sp.phi_sqrt((1, 1, 0)) == pytest.approx((1, 1, 0))
    assert sp.phi_sqrt((4, 4, 0)) == pytest.approx((2, 2, 0))
    q = sp.phi_sqrt((2, 5, 3))
    assert q.a * q.b - q.c ** 2 > 0
    assert sp.phi_square(q) == pytest.approx((2, 5, 3), abs=1e-12)


def test_substitution_identity(rng):
    for _ in range(200):
        a, b = np.exp(rng.uniform(-1, 1, 2))
        c = rng.uniform(-0.9, 0.9) * math.sqrt(a * b)
        p = (float(a), float(b), float(c))
        assert sp.ric_abc(p) == pytest.approx(sp.ric_xyz(sp.phi_square(p)), rel=1e-10, abs=1e-12)


def test_cubic_vanishes_exactly_at_golden_point():
    assert sp.cubic_value(*GOLD) == 0
    # in units of 1/108 the cubic's terms are integers summing to zero
    assert sp.cubic_value(*GOLD) * 108 ** 3 == 0


def test_f1_golden_point_is_the_first_root():
    coeffs = [Fraction(c) for c in sp.cubic_coeffs(GOLD[1], GOLD[2])]
    from prescribed_ricci.polyroots import real_roots
    roots = real_roots(coeffs)
    assert len(roots) == 1  # only one real root, so it is Root 1
    assert roots[0].lo <= GOLD[0] <= roots[0].hi
    assert sp.f1(GOLD[1], GOLD[2]) == pytest.approx(65 / 108, abs=1e-12)


def test_f1_even_in_t3(rng):
    for _ in range(20):
        t2, t3 = rng.uniform(-2, 2), rng.uniform(0.1, 2)
        assert sp.f1(t2, t3) == sp.f1(t2, -t3)


def test_solve_T_examples():
    v = sp.solve_T_so17((15 / 8, -1.0, 0.0))
    assert v.member and v.branch == "diagonal"
    v = sp.solve_T_so17(tuple(float(g) for g in GOLD))
    assert v.member and v.branch == "cubic_high"
    assert sp.generic_lower_t3(-43 / 108) == pytest.approx(0.195, abs=1e-3)
    assert sp.exceptional_t3(-43 / 108) == pytest.approx(0.727, abs=1e-3)
    assert not sp.solve_T_so17((1.0, -1.0, 0.0)).member


def test_exceptional_branch_point():
    # Phi with 3x + y = 0 is impossible, so build an exceptional image point from the curve itself
    t2 = 0.0
    t3 = sp.exceptional_t3(t2)
    v = sp.solve_T_so17((0.75, t2, t3))
    assert v.member and v.branch == "exceptional"


def test_solve_cT_examples():
    cs = sp.solve_cT_so17((5 / 6, -7 / 6, 0.0)).c_values
    assert any(abs(c - 0.5) < 1e-9 for c in cs)
    cs = sp.solve_cT_so17((65 / 36, -43 / 36, 16 / 9)).c_values
    assert any(abs(c - 1 / 3) < 1e-9 for c in cs)
    assert sp.solve_cT_so17((1.0, -2.0, 0.0)).c_values == []
    with pytest.raises(ValueError):
        sp.solve_cT_so17((0.0, -1.0, 0.0))


def test_region_examples():
    v = sp.region_contains((-43 / 65, 64 / 65))
    assert v.contained and v.region_ids == [3, 6, 10]
    assert not sp.region_contains((-2.0, 0.1)).contained
    with pytest.raises(ValueError):
        sp.region_contains((-1.0, 0.0))


def test_region_boundary_flag():
    m = 0.5
    edge = m * m  # the l < m^2 bound
    assert sp.region_contains((edge - 1e-12, m)).boundary
    assert not sp.region_contains((edge - 1e-3, m)).boundary


def test_diagonal_slice():
    assert sp.diagonal_contains(-7 / 5)
    assert sp.diagonal_contains(sp.DIAG_L_MIN)
    assert not sp.diagonal_contains(-1.5)
    assert not sp.diagonal_contains(0.0)


def test_crossover_anchors():
    cr = sp.crossovers()
    assert len(cr) == 16
    for c in cr.values():
        assert c.anchor_ok(), c
    assert cr["m625"].value == pytest.approx(0.6247831485, abs=1e-9)


def test_f1168_radicals_match_indexed_roots():
    for m in (0.2, 0.6, 1.0, 1.15):
        lo, hi = sp.f1168_radicals(m)
        assert sp.bound_value("f1168m1", m) == pytest.approx(lo, abs=1e-9)
        assert sp.bound_value("f1168m2", m) == pytest.approx(hi, abs=1e-9)
    with pytest.raises(ValueError):
        sp.f1168_radicals(1.2)


def test_bound_outside_domain_raises():
    from prescribed_ricci.polyroots import RootIndexError
    with pytest.raises(RootIndexError):
        sp.bound_value("f1168m1", 1.5)


def test_oracle_verdicts():
    v = sp.region_oracle((-43 / 65, 64 / 65))
    assert v.verdict == "member"
    x, y, z = v.xyz
    assert (y / x, z / x) == pytest.approx((1.0, 0.5), abs=1e-4)
    assert sp.region_oracle((-7 / 5, 1e-9)).verdict == "member"
    assert sp.region_oracle((0.5, 0.1)).verdict == "non-member"
    assert sp.region_oracle((-2.0, 0.1)).verdict == "non-member"
