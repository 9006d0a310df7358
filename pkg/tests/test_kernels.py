import os
import subprocess
import sys

import numpy as np
import pytest

from prescribed_ricci import _kernels
from prescribed_ricci.so17_prp import ORACLE_W, ORACLE_Z


def test_unit_x_matches_general_formula():
    z, w = 0.7, -0.3
    y = z * z + np.exp(w)
    a = _kernels.ric_unit_x_numpy(z, w)
    b = _kernels.ric_xyz_numpy(1.0, y, z)
    assert np.allclose(a, b, rtol=1e-12)


@pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")
def test_residual_grid_paths_agree():
    a = _kernels.residual_grid(ORACLE_Z, ORACLE_W, -0.4, 0.7, use_numba=False)
    b = _kernels.residual_grid(ORACLE_Z, ORACLE_W, -0.4, 0.7, use_numba=True)
    assert a.shape == (len(ORACLE_Z), len(ORACLE_W))
    assert np.allclose(a, b, rtol=1e-10, atol=0)


def test_pure_numpy_flag():
    env = dict(os.environ, PRESCRIBED_RICCI_PURE_NUMPY="1")
    out = subprocess.run([sys.executable, "-c", "from prescribed_ricci import _kernels; print(_kernels.USE_NUMBA)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
