#!/usr/bin/env python3
"""Benchmark the compiled solver engine against the pure-Python fallback.

The two engines implement identical algorithms with identical enumeration
orders, so results must match exactly; this script measures the speedup on
representative instances of each kernel.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import time

import rainbowdom as rd
from rainbowdom.solver import _engine

try:
    from rainbowdom.solver import _speedups
except ImportError:
    _speedups = None


def time_call(fn, *args, repeat=1):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return result, best


def bb_args(g, k):
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    nbrs = [list(g.neighbors(v)) for v in range(g.n)]
    d = rd.regular_degree(g)
    lb = rd.lower_bound_regular(g.n, d, k) if d else 1
    return g.n, k, nbrs, order, lb


def domset_args(g):
    closed = g.adjacency_masks()
    for v in range(g.n):
        closed[v] |= 1 << v
    return g.n, closed


def cases():
    yield ("ladder prism m=10 k=3", "ladder_solve", (1, 10, 3))
    yield ("ladder prism m=12 k=4", "ladder_solve", (1, 12, 4))
    yield ("ladder mobius m=10 k=4", "ladder_solve", (2, 10, 4))
    yield ("ladder cycle n=20 k=3", "ladder_solve", (0, 20, 3))
    yield ("bb franklin k=3", "gamma_bb", bb_args(rd.franklin(), 3))
    yield ("bb prism(6) k=4", "gamma_bb", bb_args(rd.prism(6), 4))
    yield ("domset franklin x K3", "domset_bb",
           domset_args(rd.cartesian_product_complete(rd.franklin(), 3)))
    yield ("domset wreath(8)", "domset_bb", domset_args(rd.wreath(8)))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=1)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled engine not available; showing pure timings only")
    header = f"{'case':<28}{'pure (s)':>10}{'compiled (s)':>14}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, fn_name, fn_args in cases():
        pure_res, pure_t = time_call(getattr(_engine, fn_name), *fn_args,
                                     repeat=args.repeat)
        if _speedups is not None:
            comp_res, comp_t = time_call(getattr(_speedups, fn_name), *fn_args,
                                         repeat=args.repeat)
            assert pure_res == comp_res, f"engines disagree on {name}"
            speedup = pure_t / comp_t if comp_t > 0 else float("inf")
            print(f"{name:<28}{pure_t:>10.3f}{comp_t:>14.3f}{speedup:>8.1f}x")
        else:
            print(f"{name:<28}{pure_t:>10.3f}{'-':>14}{'-':>9}")


if __name__ == "__main__":
    main()
