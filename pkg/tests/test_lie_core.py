from fractions import Fraction
import math

import numpy as np
import pytest

from prescribed_ricci import lie_core as lc


@pytest.fixture(scope="module")
def B():
    return lc.build_p_basis()


def test_basis_entries(B):
    assert B[1][2, 3] == pytest.approx(1 / 6)
    X8 = B[8]
    assert X8[0, 1] == X8[1, 0] == pytest.approx(math.sqrt(3) / 6)
    mask = np.ones_like(X8, dtype=bool)
    mask[0, 1] = mask[1, 0] = False
    assert np.all(X8[mask] == 0)


def test_basis_in_so17_with_symmetry(B):
    for k in range(1, 15):
        X = B[k]
        assert lc.in_so17(X)
        if k <= 7:
            assert np.array_equal(X.T, -X)
        else:
            assert np.array_equal(X.T, X)


def test_killing_form_values(B):
    assert lc.killing_form(B[1], B[1]) == pytest.approx(-1.0)
    assert lc.killing_form(B[8], B[8]) == pytest.approx(1.0)
    assert lc.killing_form(B[1], B[8]) == 0.0


def test_killing_form_matches_adjoint_trace():
    assert lc.killing_adjoint_discrepancy() == 0


def test_fixed_inner_orthonormal(B):
    G = np.array([[lc.fixed_inner(B[i], B[j]) for j in range(1, 15)] for i in range(1, 15)])
    assert np.allclose(G, np.eye(14), atol=1e-14)
    assert lc.fixed_inner(2 * B[1], B[1]) == pytest.approx(2.0)
    assert lc.fixed_inner(B[1] + B[8], B[1] + B[8]) == pytest.approx(2.0)


def test_fixed_inner_rejects_g2_component(B):
    W = lc.bracket(B[1], B[2])
    G2 = W - np.einsum("k,kij->ij", lc.project_p(W), lc.basis_array())
    assert np.abs(G2).max() > 1e-3  # the bracket really has a g2 part
    with pytest.raises(lc.ProjectionError):
        lc.fixed_inner(G2, B[1])


def test_projection(B):
    e3 = np.zeros(14)
    e3[2] = 1
    assert np.allclose(lc.project_p(B[3]), e3)
    c = lc.project_p(lc.bracket(B[8], B[9]))
    assert np.allclose(c[7:], 0, atol=1e-14)
    W = lc.bracket(B[1], B[2])
    G2 = W - np.einsum("k,kij->ij", lc.project_p(W), lc.basis_array())
    assert np.allclose(lc.project_p(G2), 0, atol=1e-14)


def test_structure_sums_exact():
    s = lc.structure_sums(exact=True)
    assert (s.d1, s.d2) == (7, 7)
    assert s.p1_sum == s.p2_sum == s.p2_sum_alt == Fraction(7, 6)
    f = lc.structure_sums(exact=False)
    assert f.p1_sum == pytest.approx(7 / 6, abs=1e-13)


def test_oracle_golden_points():
    assert lc.ric_oracle(abc=(1, 1, 0)) == pytest.approx((5 / 12, -7 / 12, 0.0), abs=1e-12)
    assert lc.ric_oracle(abc=(2, 2, 0)) == pytest.approx((5 / 12, -7 / 12, 0.0), abs=1e-12)
    assert lc.ric_oracle(xyz=(1, 1, 0.5)) == pytest.approx((65 / 108, -43 / 108, -16 / 27), abs=1e-12)
    assert lc.ric_oracle_exact(1, 1, Fraction(1, 2)) == (Fraction(65, 108), Fraction(-43, 108), Fraction(-16, 27))


def test_oracle_rejects_bad_metrics():
    with pytest.raises(ValueError):
        lc.ric_oracle(abc=(1, 1, 1))
    with pytest.raises(ValueError):
        lc.ric_oracle(xyz=(1, 1, 2))
    with pytest.raises(ValueError):
        lc.ric_oracle(xyz=(1, 1, 0), abc=(1, 1, 0))


def test_numba_and_numpy_contractions_agree():
    from prescribed_ricci import _kernels
    if not _kernels.HAVE_NUMBA:
        pytest.skip("numba not installed")
    C = np.asarray(lc.structure_constants())
    G = lc.metric_gram(1.7, 0.4, -0.3)
    Gi = np.linalg.inv(G)
    a = _kernels.ric_contract(C, G, Gi, use_numba=False)
    b = _kernels.ric_contract(C, G, Gi, use_numba=True)
    assert np.allclose(a, b, atol=1e-14)
