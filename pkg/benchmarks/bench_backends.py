#!/usr/bin/env python3
"""Benchmark the compiled canonical-form kernel against the pure-Python twin.

Workloads mirror what enumeration actually does: batches of adjacency
bitsets pushed through ``certificates``.  Outputs are compared for
equality before any timing is reported.

Run:  python benchmarks/bench_backends.py
"""

from __future__ import annotations

import itertools
import random
import time
from array import array

from totalirr import kernels
from totalirr.enumeration import enumerate_connected, enumerate_trees


def workload_random(rng, n, count, p):
    graphs = []
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(count):
        rows = [0] * n
        for u, v in pairs:
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        graphs.append(tuple(rows))
    return graphs


def workload_family(stream):
    return [g.adjacency_rows for g in stream]


def flatten(n, graphs):
    flat = array("H")
    for rows in graphs:
        flat.extend(rows)
    return flat


def bench(backend, n, graphs, repeat=3):
    flat = flatten(n, graphs)
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = backend.certificates(n, flat, len(graphs))
        best = min(best, time.perf_counter() - t0)
    return result, best


def main():
    backends = kernels.available_backends()
    rng = random.Random(2024)
    workloads = [
        ("trees n=10", 10, workload_family(enumerate_trees(10))),
        ("unicyclic n=9", 9, workload_family(enumerate_connected(9, 9))),
        ("random n=9 p=0.4 x5000", 9, workload_random(rng, 9, 5000, 0.4)),
        ("random n=12 p=0.3 x2000", 12, workload_random(rng, 12, 2000, 0.3)),
    ]
    print(f"backends: {', '.join(sorted(backends))}")
    for name, n, graphs in workloads:
        results = {}
        times = {}
        for bname, backend in sorted(backends.items()):
            results[bname], times[bname] = bench(backend, n, graphs)
        first = next(iter(results.values()))
        assert all(r == first for r in results.values()), f"backend mismatch on {name}"
        line = f"{name:26s} ({len(graphs):5d} graphs)"
        for bname in sorted(times):
            rate = len(graphs) / times[bname]
            line += f"  {bname}: {times[bname] * 1e3:8.1f} ms ({rate:9.0f}/s)"
        if len(times) == 2:
            line += f"  speedup: {times['python'] / times['cython']:.1f}x"
        print(line)


if __name__ == "__main__":
    main()
