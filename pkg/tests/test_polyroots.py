from fractions import Fraction

import pytest

from prescribed_ricci import polyroots as pr


def test_simple_quadratic():
    roots = pr.real_roots([-1, 0, 1])
    assert [r.value for r in roots] == pytest.approx([-1.0, 1.0], abs=1e-12)
    assert roots[0].index == 1
    assert pr.root_at_index([-1, 0, 1], 2) == pytest.approx(1.0, abs=1e-12)


def test_no_real_roots():
    assert pr.real_roots([1, 0, 1]) == []
    assert pr.count_real_roots([1, 0, 1]) == 0


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        pr.RealPoly([0, 0])
    with pytest.raises(ValueError):
        pr.real_roots([3])


def test_index_out_of_range():
    with pytest.raises(pr.RootIndexError, match="index out of range"):
        pr.root_at_index([-1, 0, 1], 3)
    with pytest.raises(pr.RootIndexError):
        pr.root_at_index([1, 0, 1], 1)


def test_multiplicities_count_distinct_roots():
    # (t - 1)^3 (t + 2)
    roots = pr.real_roots([-2, 5, -3, -1, 1])
    assert [round(r.value, 9) for r in roots] == [-2.0, 1.0]
    assert [r.multiplicity for r in roots] == [1, 3]
    assert pr.root_at_index([-2, 5, -3, -1, 1], 2) == pytest.approx(1.0, abs=1e-10)


def test_exact_rational_root_is_bracketed():
    # 108 t - 65 has its root at 65/108
    r = pr.real_roots([-65, 108])[0]
    assert r.lo <= Fraction(65, 108) <= r.hi


def test_sturm_count_half_open():
    # roots -1, 0, 1; count on (a, b]
    p = [0, -1, 0, 1]
    assert pr.sturm_count(p, -2, 2) == 3
    assert pr.sturm_count(p, -1, 1) == 2
    assert pr.sturm_count(p, Fraction(1, 2), 3) == 1


def test_float_coefficients_converted_exactly():
    p = pr.RealPoly([0.1, 1.0])
    assert p.exact[0] == Fraction(0.1)
    assert pr.root_at_index(p, 1) == pytest.approx(-0.1, abs=1e-12)


def test_derivative_and_call():
    p = pr.RealPoly([1, 2, 3])
    assert p(2.0) == 17.0
    assert p.derivative().exact == (2, 6)
    assert p.degree == 2


def test_clustered_roots_separated():
    # (t - 1)(t - 1 - 1e-9) with exact coefficients
    eps = Fraction(1, 10**9)
    a, b = Fraction(1), 1 + eps
    roots = pr.real_roots([a * b, -(a + b), 1], precision=1e-13)
    assert len(roots) == 2
    assert roots[1].value - roots[0].value == pytest.approx(1e-9, rel=1e-3)
