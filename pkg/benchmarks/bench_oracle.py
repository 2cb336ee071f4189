"""Benchmark the brute-force enumeration backends against each other.

Runs the three enumeration kernels through the public oracle entry
points on fixed workloads, once per backend, and prints a timing table
with the numba-over-numpy speedup.  Numba compilation is excluded by a
warm-up pass.

Usage: python benchmarks/bench_oracle.py [--repeat N] [--heavy]
"""

from __future__ import annotations

import argparse
import time

from acyclic_census.oracle import (brute_count, brute_count_bicolored,
                                   brute_count_weighted)

WORKLOADS = [
    ("arc tally       n=5 k=1 (1.0e6)", lambda b: brute_count(5, 1, backend=b)),
    ("weighted sum    n=5 w=7 (1.0e6)", lambda b: brute_count_weighted(5, 7, backend=b)),
    ("bicolored pairs n=4     (6.6e4)", lambda b: brute_count_bicolored(4, backend=b)),
]

HEAVY = [
    ("arc tally       n=4 k=3 (1.7e7)", lambda b: brute_count(4, 3, backend=b)),
    ("bicolored pairs n=5     (3.4e7)", lambda b: brute_count_bicolored(5, backend=b)),
]


def best_time(fn, backend, repeat):
    times = []
    for _ in range(repeat):
        started = time.perf_counter()
        fn(backend)
        times.append(time.perf_counter() - started)
    return min(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--heavy", action="store_true",
                        help="add the 10^7-candidate workloads")
    args = parser.parse_args()

    workloads = WORKLOADS + (HEAVY if args.heavy else [])

    try:
        brute_count(2, 1, backend="numba")  # warm-up: compile outside timing
    except ImportError:
        print("numba is not importable; nothing to compare")
        return 1

    print(f"{'workload':38} {'numba':>9} {'numpy':>9} {'speedup':>8}")
    for name, fn in workloads:
        want = fn("numba")
        assert fn("numpy") == want, f"backends disagree on {name}"
        t_nb = best_time(fn, "numba", args.repeat)
        t_np = best_time(fn, "numpy", args.repeat)
        print(f"{name:38} {t_nb:8.3f}s {t_np:8.3f}s {t_np / t_nb:7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
