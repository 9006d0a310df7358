"""Hot loops, compiled with numba when available.

Set PRESCRIBED_RICCI_PURE_NUMPY=1 to force the numpy implementations (useful
for debugging and for the benchmark comparison).
"""
import os

import numpy as np

try:
    import numba
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("PRESCRIBED_RICCI_PURE_NUMPY", "") not in ("1", "true", "yes")


# --- numpy reference implementations ---------------------------------------

def ric_contract_numpy(C, G, Ginv):
    """Ricci tensor minus the Killing-form term, in a non-orthonormal basis.

    C[i, j, k] are the p-components of [x_i, x_j]; G is the metric Gram matrix.
    """
    CG = C @ G  # CG[a, b, u] = g([x_a, x_b]_p, x_u)
    t1 = -0.5 * np.einsum("ab,uak,kl,vbl->uv", Ginv, C, G, C, optimize=True)
    K = np.einsum("ab,cd,bdv->acv", Ginv, Ginv, CG, optimize=True)
    t3 = 0.25 * np.einsum("acu,acv->uv", CG, K, optimize=True)
    return t1 + t3


def ric_xyz_numpy(x, y, z):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)
    d = 24.0 * (z * z - x * y) ** 2
    r1 = (9 * x * x * y * y - 18 * x * y * z * z + y ** 4 + 6 * y * y * z * z + 18 * z ** 4) / d
    r2 = (-3 * x * x * (4 * y * y - 3 * z * z) - 2 * x * (y ** 3 - 12 * y * z * z)
          + 3 * y * y * z * z - 6 * z ** 4) / d
    r3 = -y * z * (3 * x + y) ** 2 / d
    return r1, r2, r3


def ric_unit_x_numpy(z, w):
    """Ricci triple at Phi = [[1, z], [z, z^2 + e^w]]; det Phi = e^w exactly."""
    z = np.asarray(z, dtype=float)
    w = np.asarray(w, dtype=float)
    y = z * z + np.exp(w)
    d = 24.0 * np.exp(2.0 * w)
    z2 = z * z
    r1 = (9 * y * y - 18 * y * z2 + y ** 4 + 6 * y * y * z2 + 18 * z2 * z2) / d
    r2 = (-3 * (4 * y * y - 3 * z2) - 2 * (y ** 3 - 12 * y * z2) + 3 * y * y * z2 - 6 * z2 * z2) / d
    r3 = -y * z * (3 + y) ** 2 / d
    return r1, r2, r3


def residual_grid_numpy(zs, ws, l, m):
    Z, W = np.meshgrid(zs, ws, indexing="ij")
    r1, r2, r3 = ric_unit_x_numpy(Z, W)
    return (r2 / r1 - l) ** 2 + (np.abs(r3) / r1 - m) ** 2


# --- numba versions ---------------------------------------------------------

if HAVE_NUMBA:
    @numba.njit(cache=True)
    def _ric_contract_nb(C, G, Ginv):
        n = C.shape[0]
        CG = np.zeros((n, n, n))
        for a in range(n):
            for b in range(n):
                for u in range(n):
                    acc = 0.0
                    for k in range(n):
                        acc += C[a, b, k] * G[k, u]
                    CG[a, b, u] = acc
        out = np.zeros((n, n))
        # first term: -1/2 sum_ab Ginv_ab g([x_u, x_a], [x_v, x_b])
        for u in range(n):
            for v in range(n):
                acc = 0.0
                for a in range(n):
                    for b in range(n):
                        gab = Ginv[a, b]
                        if gab == 0.0:
                            continue
                        s = 0.0
                        for k in range(n):
                            s += CG[u, a, k] * C[v, b, k]
                        acc += gab * s
                out[u, v] = -0.5 * acc
        # third term
        tmp = np.zeros((n, n, n))
        for a in range(n):
            for d in range(n):
                for v in range(n):
                    acc = 0.0
                    for b in range(n):
                        acc += Ginv[a, b] * CG[b, d, v]
                    tmp[a, d, v] = acc
        K = np.zeros((n, n, n))
        for a in range(n):
            for c in range(n):
                for v in range(n):
                    acc = 0.0
                    for d in range(n):
                        acc += Ginv[c, d] * tmp[a, d, v]
                    K[a, c, v] = acc
        for u in range(n):
            for v in range(n):
                acc = 0.0
                for a in range(n):
                    for c in range(n):
                        acc += CG[a, c, u] * K[a, c, v]
                out[u, v] += 0.25 * acc
        return out

    @numba.njit(cache=True)
    def _residual_grid_nb(zs, ws, l, m):
        out = np.empty((zs.shape[0], ws.shape[0]))
        for i in range(zs.shape[0]):
            z = zs[i]
            z2 = z * z
            for j in range(ws.shape[0]):
                ew = np.exp(ws[j])
                y = z2 + ew
                d = 24.0 * ew * ew
                r1 = (9 * y * y - 18 * y * z2 + y ** 4 + 6 * y * y * z2 + 18 * z2 * z2) / d
                r2 = (-3 * (4 * y * y - 3 * z2) - 2 * (y ** 3 - 12 * y * z2)
                      + 3 * y * y * z2 - 6 * z2 * z2) / d
                r3 = -y * z * (3 + y) ** 2 / d
                out[i, j] = (r2 / r1 - l) ** 2 + (abs(r3) / r1 - m) ** 2
        return out


def ric_contract(C, G, Ginv, use_numba=None):
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba and HAVE_NUMBA:
        return _ric_contract_nb(np.ascontiguousarray(C, dtype=np.float64),
                                np.ascontiguousarray(G, dtype=np.float64),
                                np.ascontiguousarray(Ginv, dtype=np.float64))
    return ric_contract_numpy(C, G, Ginv)


def residual_grid(zs, ws, l, m, use_numba=None):
    """Squared distance from (r2/r1, |r3|/r1) to (l, m) over a (z, w) grid."""
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba and HAVE_NUMBA:
        return _residual_grid_nb(np.ascontiguousarray(zs, dtype=np.float64),
                                 np.ascontiguousarray(ws, dtype=np.float64), float(l), float(m))
    return residual_grid_numpy(zs, ws, l, m)
