"""Time the hot kernels with numba and with the pure Python/numpy fallback.

The fallback numbers come from a child process started with
ZYKOV_DISABLE_JIT=1, so nested kernel calls are interpreted too.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np

from zykov import generators, kernels
from zykov._accel import JIT_ENABLED


def _best(fn, repeat):
    fn()  # warm up / compile
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases():
    petersen = generators.petersen().graph
    adj = kernels.adjacency_words(petersen.masks)
    full = np.uint64(petersen.full_mask())
    rng = np.random.default_rng(7)
    m = rng.standard_normal((40, 40))
    sym = (m + m.T) / 2
    jac = kernels.jacobi_kernel if JIT_ENABLED else kernels.jacobi_numpy
    return {
        "all_splitting_masks(petersen)": lambda: kernels.all_splitting_masks(adj, petersen.n, full, False),
        "sweep_triangle_free(5)": lambda: kernels.sweep_triangle_free(5, False),
        "jacobi(40x40)": lambda: jac(sym, 1e-9, 100),
    }


def run(repeat):
    return {name: _best(fn, repeat) for name, fn in cases().items()}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(run(args.repeat)))
        return
    if not JIT_ENABLED:
        sys.exit("numba is disabled in this process; unset ZYKOV_DISABLE_JIT")
    jit = run(args.repeat)
    env = dict(os.environ, ZYKOV_DISABLE_JIT="1")
    out = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(args.repeat)],
                         env=env, check=True, capture_output=True, text=True)
    plain = json.loads(out.stdout)
    print(f"{'kernel':34s} {'numba s':>10s} {'fallback s':>11s} {'speedup':>8s}")
    for name in jit:
        print(f"{name:34s} {jit[name]:10.5f} {plain[name]:11.5f} {plain[name] / jit[name]:8.1f}")


if __name__ == "__main__":
    main()
