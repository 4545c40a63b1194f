"""Compare the numba-compiled kernels against the plain Python/NumPy fallback.

Each backend runs in its own subprocess because the choice is made once, at
import time, from ELLIPSUM_DISABLE_NUMBA.

    python3 benchmarks/bench_kernels.py [--size N] [--repeat R]
"""
import argparse
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import json, sys, time
import numpy as np
from ellipsum import _accel, _kernels
from ellipsum.corpus import builtin_corpus, verify_all
from ellipsum.elliptic_core import build_context, complete_KE_many
from ellipsum.jacobi import sncndn_many

size, repeat = int(sys.argv[1]), int(sys.argv[2])
rng = np.random.default_rng(7)
ks = rng.uniform(0.01, 0.99, size)
ctx = build_context(0.6)
us = rng.uniform(-4.0, 4.0, size)
betas = rng.uniform(0.5, 5.0, size // 10)
records = builtin_corpus()

workloads = {
    "agm_ke": lambda: complete_KE_many(ks),
    "sncndn": lambda: sncndn_many(us, ctx),
    "hyper_series": lambda: _kernels.hyper_series_array(
        True, 3, _kernels.SIGN_ALT2, _kernels.CSCH2, betas, 0.0, 1e-15, 10**6),
    "corpus": lambda: verify_all(records),
}
out = {"backend": _accel.BACKEND}
for name, fn in workloads.items():
    fn()  # warm-up, includes compilation for numba
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    out[name] = best
print(json.dumps(out))
"""


def run_backend(disable, size, repeat):
    env = dict(os.environ)
    env["ELLIPSUM_DISABLE_NUMBA"] = "1" if disable else "0"
    proc = subprocess.run([sys.executable, "-c", WORKER, str(size), str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=20000, help="points per vectorised workload")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    t0 = time.time()
    fast = run_backend(False, args.size, args.repeat)
    slow = run_backend(True, args.size, args.repeat)
    names = [k for k in fast if k != "backend"]
    print(f"{'workload':14s} {fast['backend']:>12s} {slow['backend']:>12s} {'speedup':>9s}")
    for name in names:
        print(f"{name:14s} {fast[name]:12.5f} {slow[name]:12.5f} {slow[name] / fast[name]:9.1f}x")
    print(f"(size={args.size}, best of {args.repeat}, wall {time.time() - t0:.1f} s)")


if __name__ == "__main__":
    main()
