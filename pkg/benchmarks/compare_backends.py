#!/usr/bin/env python3
"""Benchmark the compiled scan kernel against the pure-Python fallback.

Runs the two enumeration-heavy operations (square-zero scans and bounded
isomorphism search) on representative workloads with both backends and
prints the timings.  Invoke from the repository root:

    python3 benchmarks/compare_backends.py [--repeat N]
"""

import argparse
import time

import bottcoh
from bottcoh import (
    bott_tower_3,
    build_ring,
    classify_3stage,
    hirzebruch,
    iso_search,
    square_zero_elements,
)


def timed(fn, repeat):
    best = float("inf")
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return best, value


def workloads():
    r_bott = build_ring(bott_tower_3(2, -3, 1))
    yield (
        "square-zero scan, 3-stage Bott ring, bound 6",
        lambda backend: square_zero_elements(r_bott, 2, 6, backend=backend),
    )
    r_gen = build_ring(bott_tower_3(1, 4, -2))
    yield (
        "square-zero scan, power 2, bound 8",
        lambda backend: square_zero_elements(r_gen, 2, 8, backend=backend),
    )
    h1, h3 = build_ring(hirzebruch(1)), build_ring(hirzebruch(3))
    yield (
        "iso search, Hirzebruch 1 vs 3, bound 6",
        lambda backend: iso_search(h1, h3, 6, backend=backend),
    )
    t, tp = bott_tower_3(3, 2, -1), bott_tower_3(-3, 2 + 3, -1)
    yield (
        "classify 3-stage pair, bound 6",
        lambda backend: classify_3stage(t, tp, bound=6, backend=backend),
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not bottcoh.HAVE_COMPILED:
        print("compiled kernel not built; showing pure timings only")

    header = f"{'workload':<48}{'pure':>10}{'compiled':>10}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, fn in workloads():
        t_pure, v_pure = timed(lambda: fn("pure"), args.repeat)
        if bottcoh.HAVE_COMPILED:
            t_fast, v_fast = timed(lambda: fn("compiled"), args.repeat)
            same = _comparable(v_pure) == _comparable(v_fast)
            ratio = t_pure / t_fast if t_fast > 0 else float("inf")
            print(f"{name:<48}{t_pure:>9.4f}s{t_fast:>9.4f}s{ratio:>8.1f}x")
            if not same:
                raise SystemExit(f"backend results differ on: {name}")
        else:
            print(f"{name:<48}{t_pure:>9.4f}s{'-':>10}{'-':>9}")


def _comparable(value):
    if value is None:
        return None
    if isinstance(value, list):
        return [dict(v.items()) for v in value]
    if hasattr(value, "matrix"):
        return value.matrix
    if hasattr(value, "kind"):
        return (value.kind, getattr(value.witness, "matrix", None))
    return value


if __name__ == "__main__":
    main()
