"""Time the numba kernels against their numpy counterparts.

    python3 benchmarks/bench_kernels.py --repeat 20
"""
import argparse
import time

import numpy as np

from prescribed_ricci import _kernels, lie_core
from prescribed_ricci.so17_prp import ORACLE_W, ORACLE_Z


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=10)
    args = ap.parse_args(argv)
    if not _kernels.HAVE_NUMBA:
        print("numba is not installed; only the numpy path is available")
        return 0

    C = np.asarray(lie_core.structure_constants())
    G = lie_core.metric_gram(1.3, 0.7, 0.4)
    Ginv = np.linalg.inv(G)
    cases = {
        "ric_contract": lambda nb: _kernels.ric_contract(C, G, Ginv, use_numba=nb),
        "residual_grid": lambda nb: _kernels.residual_grid(ORACLE_Z, ORACLE_W, -0.5, 0.6, use_numba=nb),
    }
    print(f"{'kernel':<16}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}{'max diff':>12}")
    for name, run in cases.items():
        ref, fast = run(False), run(True)  # second call also triggers compilation
        diff = float(np.max(np.abs(ref - fast)))
        t_np = best_of(lambda: run(False), args.repeat)
        t_nb = best_of(lambda: run(True), args.repeat)
        print(f"{name:<16}{1e3 * t_np:>12.3f}{1e3 * t_nb:>12.3f}{t_np / t_nb:>10.1f}{diff:>12.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
