"""Compare the numba and pure-numpy batch kernels.

Usage::

    python3 benchmarks/bench_kernels.py [--n 10000] [--repeat 5]

Both kernels are called directly, so the env flag is not needed here.
"""
import argparse
import time

import numpy as np

from acmcubic import _kernels
from acmcubic.roots import _seeds


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10_000, help="batch size")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    n = args.n
    c = rng.uniform(-5, 5, (n, 3)) + 1j * rng.uniform(-5, 5, (n, 3))
    full = np.ascontiguousarray(np.hstack([np.ones((n, 1), dtype=complex), c]))
    seeds = np.ascontiguousarray(np.tile(_seeds(3, 0), (n, 1)))
    mats = np.ascontiguousarray(rng.normal(size=(n, 3, 3)) + 1j * rng.normal(size=(n, 3, 3)))

    # compile once outside the timed region
    _kernels._dk_numba(full[:2], seeds[:2], 500, 1e-14)
    _kernels._charpoly3_numba(mats[:2])

    cases = [
        ("durand-kerner", lambda: _kernels._dk_numpy(full, seeds, 500, 1e-14),
         lambda: _kernels._dk_numba(full, seeds, 500, 1e-14)),
        ("charpoly3", lambda: _kernels._charpoly3_numpy(mats),
         lambda: _kernels._charpoly3_numba(mats)),
    ]
    print(f"batch size {n}, best of {args.repeat}  (numba enabled by default: {_kernels.NUMBA_ENABLED})")
    print(f"{'kernel':<16}{'numpy [ms]':>12}{'numba [ms]':>12}{'speedup':>10}")
    for name, f_np, f_nb in cases:
        t_np = best_of(f_np, args.repeat)
        t_nb = best_of(f_nb, args.repeat)
        print(f"{name:<16}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>10.1f}")


if __name__ == "__main__":
    main()
