"""Time the compiled kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.
"""

from __future__ import annotations

import argparse
import time
from itertools import combinations

from oneplane import gen_k4_extremal, gen_k5_optimal
from oneplane._kernels import _pykernels
from oneplane.certify import drawing_search
from oneplane.errors import SearchExhausted
from oneplane.cliques import AbstractGraph, turan_graph

try:
    from oneplane._kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def cases():
    big = gen_k5_optimal(60)
    pl = big._pl
    masks = big.adjacency_masks()
    dense = AbstractGraph(40, tuple(e for e in combinations(range(40), 2) if (e[0] * 7 + e[1] * 3) % 5))
    yield "face_cycles k5-optimal(60)", lambda m: m.face_cycles(pl.twin, pl.nxt)
    yield "find_clique K5 in k5-optimal(60)", lambda m: m.find_clique(masks, 5)
    yield "find_clique K6 in dense(40)", lambda m: m.find_clique(dense.masks(), 6)
    for n, k in ((7, 3), (7, 4), (7, 5)):
        yield f"max_kfree_edges({n}, {k})", lambda m, n=n, k=k: m.max_kfree_edges(n, k)


def refute_k7_minus_triangle() -> None:
    g = AbstractGraph(7, tuple(e for e in combinations(range(7), 2) if not set(e) <= {4, 5, 6}))
    try:
        drawing_search(g)
    except SearchExhausted as exc:
        assert exc.complete
    else:
        raise AssertionError("found a drawing")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"{'kernel':40} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in cases():
        py = best_of(lambda: fn(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:40} {py * 1e3:9.2f}ms {'n/a':>10} {'':>8}")
            continue
        cy = best_of(lambda: fn(_ckernels), args.repeat)
        print(f"{name:40} {py * 1e3:9.2f}ms {cy * 1e3:9.2f}ms {py / cy:7.1f}x")

    print()
    print(f"{'end to end':40} {'seconds':>10}")
    for name, fn in (
        ("gen_k4_extremal(9..60)", lambda: [gen_k4_extremal(n) for n in range(9, 61)]),
        ("gen_k5_optimal(10..60)", lambda: [gen_k5_optimal(n) for n in range(10, 61)]),
        ("drawing_search T_3(7)", lambda: drawing_search(turan_graph(7, 4))),
        ("drawing_search K6", lambda: drawing_search(AbstractGraph(6, tuple(combinations(range(6), 2))))),
        ("refute K7 minus a triangle", refute_k7_minus_triangle),
    ):
        print(f"{name:40} {best_of(fn, 1):10.3f}")


if __name__ == "__main__":
    main()
