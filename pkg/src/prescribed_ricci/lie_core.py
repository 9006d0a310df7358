"""so(1,7) = g2 + p1 + p2 as explicit 8x8 matrices, plus a brute-force Ricci oracle.

The basis x_1..x_14 of p is hard-coded. p1 (x_1..x_7) consists of
antisymmetric matrices inside so(7); p2 (x_8..x_14) are the symmetric boosts.
Indices in code are 0-based, so x_1 is index 0 and x_8 is index 7.

Everything in the float path has an exact counterpart that uses Fractions.
Entries of p2 carry a factor sqrt(3), but every quantity used here (brackets
projected back onto p, Killing form, inner products) involves an even number
of p2 factors and hence is rational. The exact path scales p2 by 1/sqrt(3)
and puts the factor back by parity.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

import numpy as np

from . import _kernels
from ._types import RicTriple

DIM = 8
J = np.diag([-1.0] + [1.0] * 7)
ZERO_TOL = 1e-10

# p1 generators: each row lists (i, j, sign) with M[i, j] = sign/6, M[j, i] = -sign/6
P1_ENTRIES = (
    ((2, 3, +1), (4, 5, +1), (6, 7, -1)),
    ((1, 3, -1), (4, 6, +1), (5, 7, +1)),
    ((1, 2, +1), (4, 7, +1), (5, 6, -1)),
    ((1, 5, -1), (2, 6, -1), (3, 7, -1)),
    ((1, 4, +1), (2, 7, -1), (3, 6, +1)),
    ((1, 7, +1), (2, 4, +1), (3, 5, -1)),
    ((1, 6, -1), (2, 5, +1), (3, 4, +1)),
)
# p2 generator k (k = 1..7): M[0, k] = M[k, 0] = sqrt(3)/6
P2_COLUMNS = (1, 2, 3, 4, 5, 6, 7)


class ProjectionError(ValueError):
    """Input is not (numerically) inside p."""


class OracleStructureError(RuntimeError):
    """The brute-force Ricci tensor does not have the expected invariant shape."""


@dataclass(frozen=True)
class PBasis:
    p1_basis: np.ndarray  # (7, 8, 8)
    p2_basis: np.ndarray  # (7, 8, 8)

    @property
    def all(self):
        return np.concatenate([self.p1_basis, self.p2_basis])

    def __getitem__(self, k):
        """1-based access, so basis[1] is x_1."""
        return self.all[k - 1]


@dataclass(frozen=True)
class StructureSums:
    d1: int
    d2: int
    p1_sum: object
    p2_sum: object
    p2_sum_alt: object = None  # sum <[e2, e2], e1>^2, should equal p2_sum


def _p1_matrix(entries, scale):
    M = [[0] * DIM for _ in range(DIM)]
    for i, j, sg in entries:
        M[i][j] = sg * scale
        M[j][i] = -sg * scale
    return M


def _p2_matrix(k, scale):
    M = [[0] * DIM for _ in range(DIM)]
    M[0][k] = scale
    M[k][0] = scale
    return M


@lru_cache(maxsize=1)
def build_p_basis():
    s = 1.0 / 6.0
    r = math.sqrt(3.0) / 6.0
    p1 = np.array([_p1_matrix(e, s) for e in P1_ENTRIES], dtype=float)
    p2 = np.array([_p2_matrix(k, r) for k in P2_COLUMNS], dtype=float)
    for arr in (p1, p2):
        arr.setflags(write=False)
    return PBasis(p1, p2)


def basis_array():
    return build_p_basis().all


def in_so17(X, tol=ZERO_TOL):
    X = np.asarray(X, dtype=float)
    return np.abs(X @ J + J @ X.T).max() <= tol


def bracket(X, Y):
    return X @ Y - Y @ X


def killing_form(X, Y):
    """B(X, Y) = 6 tr(XY) on so(1,7)."""
    return 6.0 * float(np.trace(np.asarray(X) @ np.asarray(Y)))


_SIGNS = np.array([-1.0] * 7 + [1.0] * 7)


def project_p(W):
    """Coefficients of the p-component of W in the basis x_1..x_14.

    Uses B-orthogonality of g2, p1, p2; B is negative definite on p1.
    """
    W = np.asarray(W, dtype=float)
    X = basis_array()
    traces = 6.0 * np.einsum("ij,kji->k", W, X)
    return _SIGNS * traces


def _p_residual(W, coeffs):
    return np.abs(np.asarray(W) - np.einsum("k,kij->ij", coeffs, basis_array())).max()


def fixed_inner(X, Y, tol=ZERO_TOL):
    """<X, Y> = B on the p2 parts minus B on the p1 parts (positive definite on p)."""
    cx, cy = project_p(X), project_p(Y)
    for W, c in ((X, cx), (Y, cy)):
        if _p_residual(W, c) > tol:
            raise ProjectionError("argument has a component outside p")
    # the basis is orthonormal, so the form is the Euclidean one on coefficients
    return float(cx @ cy)


@lru_cache(maxsize=1)
def structure_constants():
    """C[i, j, k]: coefficient of x_k in [x_i, x_j]_p (float)."""
    X = basis_array()
    n = len(X)
    C = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            C[i, j] = project_p(bracket(X[i], X[j]))
    C.setflags(write=False)
    return C


# --- exact path --------------------------------------------------------------

@lru_cache(maxsize=1)
def _exact_scaled_basis():
    # p2 stored divided by sqrt(3): entries 1/6
    s = Fraction(1, 6)
    p1 = [_p1_matrix(e, s) for e in P1_ENTRIES]
    p2 = [_p2_matrix(k, s) for k in P2_COLUMNS]
    return p1 + p2


def _mm(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n) if A[i][k] and B[k][j]) for j in range(n)]
            for i in range(n)]


def _trace_prod(A, B):
    n = len(A)
    return sum(A[i][k] * B[k][i] for i in range(n) for k in range(n) if A[i][k] and B[k][i])


@lru_cache(maxsize=1)
def structure_constants_exact():
    """Exact rational structure constants C[i][j][k] (nested lists of Fractions)."""
    Xs = _exact_scaled_basis()
    n = len(Xs)
    is_p2 = [k >= 7 for k in range(n)]
    br = {}
    for i in range(n):
        for j in range(n):
            P = _mm(Xs[i], Xs[j])
            Q = _mm(Xs[j], Xs[i])
            br[i, j] = [[P[a][b] - Q[a][b] for b in range(DIM)] for a in range(DIM)]
    C = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                t = 6 * _trace_prod(br[i, j], Xs[k])
                if t == 0:
                    continue
                odd = is_p2[i] + is_p2[j] + is_p2[k]
                if odd % 2:
                    raise ArithmeticError("irrational structure constant; basis data corrupted")
                sign = 1 if is_p2[k] else -1
                C[i][j][k] = sign * t * 3 ** (odd // 2)
    return C


def structure_sums(exact=True):
    """Dimensions and bracket square sums of the two summands.

    p1_sum = sum <[e1a, e1b], e1c>^2, p2_sum = sum <[e2a, e1b], e2c>^2, and
    p2_sum_alt = sum <[e2a, e2b], e1c>^2.
    """
    C = structure_constants_exact() if exact else structure_constants()
    r1, r2 = range(7), range(7, 14)
    zero = Fraction(0) if exact else 0.0

    def ssum(A, B, Cs):
        tot = zero
        for a in A:
            for b in B:
                for c in Cs:
                    v = C[a][b][c]
                    tot += v * v
        return tot

    return StructureSums(7, 7, ssum(r1, r1, r1), ssum(r2, r1, r2), ssum(r2, r2, r1))


def so17_full_basis():
    """A 28-element basis of so(1,7) with rational entries, plus a coordinate map."""
    elems = []
    for k in range(1, DIM):
        M = [[Fraction(0)] * DIM for _ in range(DIM)]
        M[0][k] = M[k][0] = Fraction(1)
        elems.append(M)
    for i in range(1, DIM):
        for j in range(i + 1, DIM):
            M = [[Fraction(0)] * DIM for _ in range(DIM)]
            M[i][j] = Fraction(1)
            M[j][i] = Fraction(-1)
            elems.append(M)

    def coords(M):
        out = [M[0][k] for k in range(1, DIM)]
        out += [M[i][j] for i in range(1, DIM) for j in range(i + 1, DIM)]
        return out

    return elems, coords


def killing_adjoint_discrepancy():
    """max |tr(ad X ad Y) - 6 tr(XY)| over pairs of the 28-element basis (exact)."""
    elems, coords = so17_full_basis()
    n = len(elems)
    ad = []
    for X in elems:
        cols = []
        for Y in elems:
            P, Q = _mm(X, Y), _mm(Y, X)
            cols.append(coords([[P[a][b] - Q[a][b] for b in range(DIM)] for a in range(DIM)]))
        ad.append([[cols[c][r] for c in range(n)] for r in range(n)])
    worst = Fraction(0)
    for i in range(n):
        for j in range(i, n):
            adtr = _trace_prod(ad[i], ad[j])
            worst = max(worst, abs(adtr - 6 * _trace_prod(elems[i], elems[j])))
    return worst


# --- Ricci oracle ------------------------------------------------------------

def _phi_from_args(xyz=None, abc=None):
    if (xyz is None) == (abc is None):
        raise ValueError("give exactly one of xyz or abc")
    if abc is not None:
        a, b, c = abc
        det = a * b - c * c
        if abs(det) < ZERO_TOL:
            raise ValueError("singular phi: ab - c^2 is zero")
        return a * a + c * c, b * b + c * c, c * (a + b)
    x, y, z = xyz
    if not (x > 0 and y > 0 and x * y - z * z > 0):
        raise ValueError("Phi must be positive definite: x, y > 0 and xy - z^2 > 0")
    return x, y, z


def metric_gram(x, y, z):
    """Gram matrix of the metric <Phi^-1 ., .> in the basis x_1..x_14."""
    det = x * y - z * z
    inv = np.array([[y, -z], [-z, x]]) / det
    return np.kron(inv, np.eye(7))


def ric_tensor(G):
    """Full 14x14 Ricci tensor (in the basis x_i) of the metric with Gram matrix G."""
    G = np.asarray(G, dtype=float)
    Ginv = np.linalg.inv(G)
    body = _kernels.ric_contract(np.asarray(structure_constants()), G, Ginv)
    return body - 0.5 * np.diag(_SIGNS)


def _check_shape(R, tol):
    scale = max(1.0, np.abs(R).max())
    blocks = [R[:7, :7], R[7:, 7:], R[:7, 7:], R[7:, :7]]
    if np.abs(R - R.T).max() > tol * scale:
        raise OracleStructureError("Ricci tensor is not symmetric")
    for B in blocks:
        d = np.diag(B)
        if np.abs(d - d[0]).max() > tol * scale:
            raise OracleStructureError("block diagonal is not constant")
        if np.abs(B - np.diag(d)).max() > tol * scale:
            raise OracleStructureError("nonzero entry off the block diagonals")


def ric_oracle(xyz=None, abc=None, check=True, tol=1e-9):
    """(r1, r2, r3) = (ric(x1,x1), ric(x8,x8), ric(x1,x8)) by direct summation.

    The metric is <Phi^-1 ., .> = <phi^-1 ., phi^-1 .>; give either the
    Phi-triple xyz or the phi-triple abc.
    """
    x, y, z = _phi_from_args(xyz, abc)
    R = ric_tensor(metric_gram(x, y, z))
    if check:
        _check_shape(R, tol)
    return RicTriple(float(R[0, 0]), float(R[7, 7]), float(R[0, 7]))


def _frac_inv2(x, y, z):
    det = x * y - z * z
    return y / det, x / det, -z / det


def ric_oracle_exact(x, y, z):
    """Exact (r1, r2, r3) for rational Phi = (x, y, z), as Fractions."""
    x, y, z = Fraction(x), Fraction(y), Fraction(z)
    if not (x > 0 and y > 0 and x * y - z * z > 0):
        raise ValueError("Phi must be positive definite")
    C = structure_constants_exact()
    n = 14
    ia, ib, ic = _frac_inv2(x, y, z)  # metric = Phi^-1

    def g(i, j):
        if i % 7 != j % 7:
            return Fraction(0)
        bi, bj = i // 7, j // 7
        return ia if bi == bj == 0 else ib if bi == bj == 1 else ic

    def ginv(i, j):
        if i % 7 != j % 7:
            return Fraction(0)
        bi, bj = i // 7, j // 7
        return x if bi == bj == 0 else y if bi == bj == 1 else z

    # CG[a][b][u] = g([x_a, x_b]_p, x_u); g is sparse (two nonzeros per row)
    partners = [(i, (i + 7) % 14) for i in range(n)]
    CG = [[[sum(C[a][b][k] * g(k, u) for k in (u, (u + 7) % 14)) for u in range(n)]
           for b in range(n)] for a in range(n)]

    def ric(u, v):
        t1 = Fraction(0)
        for a, a2 in partners:
            for b in (a, a2):
                w = ginv(a, b)
                if w == 0:
                    continue
                t1 += w * sum(CG[u][a][k] * C[v][b][k] for k in range(n))
        t3 = Fraction(0)
        for a, a2 in partners:
            for b in (a, a2):
                wab = ginv(a, b)
                for c, c2 in partners:
                    for d in (c, c2):
                        w = wab * ginv(c, d)
                        if w:
                            t3 += w * CG[a][c][u] * CG[b][d][v]
        kill = -1 if u < 7 else 1
        return -t1 / 2 - Fraction(kill, 2) * (u == v) + t3 / 4

    return ric(0, 0), ric(7, 7), ric(0, 7)
