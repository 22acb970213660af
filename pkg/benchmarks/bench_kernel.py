#!/usr/bin/env python3
"""Benchmark the compiled term kernel against the pure-Python fallback.

Runs the same ideal-theoretic workloads in two subprocesses, one with
TRIPLEPOINT_PURE=1 and one without, and prints a comparison table.

    python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import triplepoint
from triplepoint.ideals import IdealHandle
from triplepoint.presentations import instantiate, residue
from triplepoint.ulrich import classify_ulrich_set

def timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0

def bench_raw_kernel():
    from triplepoint import kernel
    from triplepoint.presentations import RTP_RING as R
    p = (R.polynomial("x + y + z + t") ** 7).terms
    q = (R.polynomial("x - y + 2*z - t") ** 7).terms
    pres = instantiate("A:2,3,4")
    gb = [list(g.terms) for g in pres.quotient.defining.groebner()]
    prod = kernel.mul_terms(list(p), list(q), R.kc)
    kernel.reduce_terms(prod, gb, R.kc)

def bench_classification():
    for tag in ("A:4,4,4", "H:10", "B:4,8"):
        classify_ulrich_set(instantiate(tag))

def bench_residue_grid():
    from triplepoint.expectations import grid_tags
    for ftag in grid_tags(3):
        residue(instantiate(ftag))

results = {"backend": triplepoint.KERNEL_BACKEND}
for name, fn in [
    ("raw kernel: deg-14 product + reduction", bench_raw_kernel),
    ("classification A:4,4,4 H:10 B:4,8", bench_classification),
    ("residue table, full grid <= 3", bench_residue_grid),
]:
    best = min(timed(fn) for _ in range(int(sys.argv[1])))
    results[name] = best
print(json.dumps(results))
"""


def run(pure: bool, repeat: int):
    env = dict(os.environ)
    if pure:
        env["TRIPLEPOINT_PURE"] = "1"
    else:
        env.pop("TRIPLEPOINT_PURE", None)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = ap.parse_args()
    compiled = run(False, args.repeat)
    pure = run(True, args.repeat)
    if compiled["backend"] != "compiled":
        print("note: compiled kernel unavailable; comparing pure vs pure")
    width = max(len(k) for k in compiled if k != "backend")
    print(f"{'workload':<{width}}  {'compiled':>9} {'pure':>9} {'speedup':>8}")
    for key in compiled:
        if key == "backend":
            continue
        c, p = compiled[key], pure[key]
        print(f"{key:<{width}}  {c:>8.3f}s {p:>8.3f}s {p / c:>7.2f}x")


if __name__ == "__main__":
    main()
