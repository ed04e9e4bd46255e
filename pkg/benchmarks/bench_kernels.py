#!/usr/bin/env python3
"""Timing comparison: compiled kernels vs the numpy fallback.

Times the two hot objectives (scalar and 64x64 grid) plus one end-to-end
super-discord optimization per backend.

    python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import math
import time

import numpy as np

from superdiscord import _kernels_py, quantum

try:
    from superdiscord import _kernels
except ImportError:
    _kernels = None

THETAS = np.linspace(0.0, math.pi / 2, 64)
PHIS = np.linspace(0.0, 2 * math.pi, 64, endpoint=False)


def best_of(repeats, fn, *args):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def scalar_loop(mod, rho, n=2000):
    for i in range(n):
        mod.weak_cond_entropy(rho, 0.3 + 1e-6 * i, 1.1, 0.8, 1)


def bench_backend(mod, rho, repeats):
    rows = []
    t = best_of(repeats, scalar_loop, mod, rho) / 2000
    rows.append(("weak_cond_entropy (scalar)", t))
    t = best_of(repeats, mod.weak_cond_entropy_grid, rho, 0.8, 1, THETAS, PHIS)
    rows.append(("weak_cond_entropy_grid 64x64", t))
    t = best_of(repeats, mod.proj_avg_cond_entropy_grid, rho, 1, THETAS, PHIS)
    rows.append(("proj_avg_cond_entropy_grid 64x64", t))
    return rows


def bench_super_discord(backend_env, repeats):
    import os
    import subprocess
    import sys

    code = (
        "import time\n"
        "from superdiscord import correlations, quantum\n"
        "rho = quantum.random_density(7)\n"
        "correlations.super_discord(rho, 1.0, quantum.Side.B)\n"
        "best = float('inf')\n"
        f"for _ in range({repeats}):\n"
        "    t0 = time.perf_counter()\n"
        "    correlations.super_discord(rho, 1.0, quantum.Side.B)\n"
        "    best = min(best, time.perf_counter() - t0)\n"
        "print(best)\n"
    )
    env = dict(os.environ, SUPERDISCORD_NO_EXT=backend_env)
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True
    )
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rho = np.ascontiguousarray(quantum.random_density(7).matrix)
    results = {}
    results["python"] = bench_backend(_kernels_py, rho, args.repeats)
    if _kernels is not None:
        results["cython"] = bench_backend(_kernels, rho, args.repeats)

    print(f"{'kernel':<36} " + "".join(f"{name:>12} " for name in results))
    for i, (label, _) in enumerate(results["python"]):
        line = f"{label:<36} "
        for name in results:
            line += f"{results[name][i][1] * 1e6:>10.1f}us "
        if "cython" in results:
            speedup = results["python"][i][1] / results["cython"][i][1]
            line += f"  ({speedup:.1f}x)"
        print(line)

    print()
    t_py = bench_super_discord("1", args.repeats)
    print(f"{'super_discord end-to-end':<36} {t_py * 1e3:>10.2f}ms (python)")
    if _kernels is not None:
        t_cy = bench_super_discord("0", args.repeats)
        print(f"{'':<36} {t_cy * 1e3:>10.2f}ms (cython)  ({t_py / t_cy:.1f}x)")


if __name__ == "__main__":
    main()
