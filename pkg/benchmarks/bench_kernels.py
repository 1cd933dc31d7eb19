#!/usr/bin/env python3
"""Benchmark the compiled counting kernel against the numpy fallback.

Usage:
    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --n-max 5000000 --repeat 5

Both backends fill the same representation-count tables; results are
asserted bitwise equal before timings are reported.
"""

import argparse
import time

import numpy as np

from genfrob._kernel import available_backends

WORKLOADS = [
    ("triple, small parts", (10, 15, 21)),
    ("pair, coprime", (101, 103)),
    ("quad, mixed", (6, 10, 15, 77)),
]


def time_backend(impl, parts, n_max, repeat):
    best = float("inf")
    table = None
    for _ in range(repeat):
        start = time.perf_counter()
        table = impl.build_counts(parts, n_max)
        best = min(best, time.perf_counter() - start)
    return best, table


def run(n_max, repeat):
    backends = available_backends()
    print(f"backends: {', '.join(sorted(backends))}   n_max={n_max}   repeat={repeat}")
    if "compiled" not in backends:
        print("note: compiled kernel not built; timing the fallback alone")
    header = f"{'workload':<22}" + "".join(f"{name:>14}" for name in sorted(backends))
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label, parts in WORKLOADS:
        times = {}
        tables = {}
        for name in sorted(backends):
            times[name], tables[name] = time_backend(backends[name], parts, n_max, repeat)
        produced = list(tables.values())
        for other in produced[1:]:
            assert np.array_equal(produced[0], other), "backends disagree"
        row = f"{label:<22}" + "".join(f"{times[name] * 1e3:>12.1f}ms" for name in sorted(times))
        if len(times) > 1:
            row += f"{times['python'] / times['compiled']:>9.1f}x"
        print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=2_000_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    run(args.n_max, args.repeat)


if __name__ == "__main__":
    main()
