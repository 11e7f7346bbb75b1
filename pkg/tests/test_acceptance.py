"""End-to-end acceptance checks, one test per criterion.

Each test is named ``test_criterion_<N>``; the terminal summary prints one
PASS/FAIL line per criterion (see ``conftest.py``). Running this file as a
script prints the same lines.
"""

from __future__ import annotations

import random
import time
from itertools import combinations
from math import comb

from conftest import c4, cube_q3, cycle, k4_crossed, random_drawing
from oneplane._plane import PlaneBuilder
from oneplane.certify import CONJECTURED, TIGHT, certify, drawing_search, maxe_bound, turan_exhaustive
from oneplane.cliques import AbstractGraph, turan_size
from oneplane.constructions import (
    FIXTURES,
    crossed_k4_seeds,
    gen_cube_g8,
    gen_k4_extremal,
    gen_k5_optimal,
    gen_ladder_H,
    gen_turan_drawing,
    load_fixture,
    q4_addition,
)
from oneplane.errors import SearchExhausted
from oneplane.invariants import ALTERNATING4, alternating_vertices, classify_faces, compute_invariants, crossing_skeleton

K5_RANGE = [8] + list(range(10, 61))


def residual(d) -> int:
    """4m - (12n - 24 - 2A - twoB - 3C), from the invariant report."""
    r = compute_invariants(d)
    return 4 * d.m - (12 * d.n - 24 - 2 * r.A - r.twoB - 3 * r.C)


def random_sparse_graph(rng: random.Random) -> AbstractGraph:
    """Connected graph on 4..8 vertices: a random tree plus up to n+3 edges."""
    n = rng.randint(4, 8)
    edges = {tuple(sorted((v, rng.randrange(v)))) for v in range(1, n)}
    pool = [e for e in combinations(range(n), 2) if e not in edges]
    edges |= set(rng.sample(pool, min(len(pool), rng.randint(0, n + 3))))
    return AbstractGraph(n, tuple(sorted(edges)))


def searched_drawings(count: int, seed: int = 2024):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = random_sparse_graph(rng)
        try:
            out.append(drawing_search(g))
        except SearchExhausted:
            continue
    return out


def corpus():
    """Every drawing the sign and structure laws are checked on."""
    ds = [load_fixture(name) for name in sorted(FIXTURES)]
    ds += [gen_cube_g8(), c4(), k4_crossed(), cube_q3(), cycle(6)]
    ds += [gen_k5_optimal(n) for n in (8, 10, 11, 12, 13, 14, 17, 22)]
    ds += [gen_k4_extremal(n) for n in range(9, 21)]
    ds += [gen_ladder_H(k) for k in range(2, 9)] + [gen_ladder_H(k, chords=True) for k in range(2, 9)]
    ds += [gen_turan_drawing(n, k) for n in range(1, 8) for k in (4, 5)]
    ds += [crossing_skeleton(gen_cube_g8())]
    ds += [random_drawing(seed, steps) for seed in range(60) for steps in (6, 14)]
    ds += searched_drawings(40, seed=99)
    return ds


# ---------------------------------------------------------------------------


def test_criterion_1():
    start = time.perf_counter()
    for name in FIXTURES:
        assert residual(load_fixture(name)) == 0, name
    for n in K5_RANGE:
        assert residual(gen_k5_optimal(n)) == 0, n
    for n in range(9, 61):
        assert residual(gen_k4_extremal(n)) == 0, n
    for k in range(2, 31):
        assert residual(gen_ladder_H(k)) == 0, k
    drawn = searched_drawings(200)
    assert len(drawn) >= 200 and all(d.n <= 8 for d in drawn)
    assert any(d.x > 0 for d in drawn)
    for d in drawn:
        assert residual(d) == 0, d.to_opg()
    elapsed = time.perf_counter() - start
    assert elapsed < 10, f"{elapsed:.2f}s"


def test_criterion_2():
    start = time.perf_counter()
    for n in K5_RANGE:
        d = gen_k5_optimal(n)
        assert d.n == n and d.m == 4 * n - 8 and d.x == n - 2
        assert not d.abstract_graph().has_clique(5)
    elapsed = time.perf_counter() - start
    assert elapsed < 5, f"{elapsed:.2f}s"


def test_criterion_3():
    start = time.perf_counter()
    for n in range(9, 61):
        d = gen_k4_extremal(n)
        assert d.n == n and d.m == (7 * n) // 2 - 7
        assert not d.abstract_graph().has_clique(4)
        assert 2 * (d.m - 3 * n + 6) <= d.x <= n - 2
    elapsed = time.perf_counter() - start
    assert elapsed < 5, f"{elapsed:.2f}s"


def test_criterion_4():
    stated = {(12, 3): 28, (8, 4): 20, (9, 5): 27, (7, 7): 19, (7, 8): 19, (9, 7): 27}
    for (n, k), upper in stated.items():
        assert maxe_bound(n, k).upper == upper, (n, k)
    for n in range(1, 21):
        # K3-free: 3n - 8 from n = 4 on, Turán below
        assert maxe_bound(n, 3).upper == (3 * n - 8 if n >= 4 else n * n // 4)
        assert maxe_bound(n, 4).upper == ((7 * n) // 2 - 7 if n >= 9 else n * n // 3 - n // 8)
        small5 = n <= 7 or n == 9
        assert maxe_bound(n, 5).upper == (3 * n * n // 8 - 3 * (n // 9) if small5 else 4 * n - 8)
        general = comb(n, 2) if n <= 6 else 4 * n - 9 if n in (7, 9) else 4 * n - 8
        for k in (7, 8, 10):
            assert maxe_bound(n, k).upper == general
        assert maxe_bound(n, 6).upper <= general


def test_criterion_5():
    start = time.perf_counter()
    for n in range(0, 8):
        for k in (3, 4, 5):
            assert turan_exhaustive(n, k) == turan_size(n, k), (n, k)
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"{elapsed:.2f}s"


def test_criterion_6():
    seen_k3free = seen_k4free = 0
    for d in corpus():
        r = compute_invariants(d)
        assert r.twoB >= 0 and r.C >= 0
        g = d.abstract_graph()
        if not g.has_clique(3):
            seen_k3free += 1
            assert r.A >= 0
            if d.n >= 3:
                assert d.m <= 3 * d.n - 6
        if not g.has_clique(4):
            seen_k4free += 1
            assert r.A >= -d.x
    assert seen_k3free >= 10 and seen_k4free >= 30


def _fake_triangle_corners(d, walks, z):
    """Corners of 3-faces at fake ``z`` as index pairs into its ring."""
    ring = list(d.planarization_neighbors(z))
    corners = []
    for w in walks:
        if len(w) == 3 and z in w:
            i = w.index(z)
            a, b = w[i - 1], w[(i + 1) % 3]
            corners.append(frozenset((ring.index(a), ring.index(b))))
    return corners


def test_criterion_7():
    checked = 0
    for d in corpus():
        walks = PlaneBuilder.from_drawing(d).faces()
        for z in range(d.n, d.n_prime):
            assert all(w < d.n for w in d.planarization_neighbors(z))
        for w in walks:
            fakes = sum(1 for v in w if v >= d.n)
            assert fakes <= len(w) // 2
        if d.abstract_graph().has_clique(3):
            continue
        for z in range(d.n, d.n_prime):
            corners = _fake_triangle_corners(d, walks, z)
            assert len(corners) <= 2
            if len(corners) == 2:
                # opposite corners share no ring position
                assert not corners[0] & corners[1]
            checked += 1
    assert checked > 0


def test_criterion_8():
    sk = crossing_skeleton(gen_cube_g8())
    kinds = [c.kind for c in classify_faces(sk).values()]
    assert len(kinds) == 12 and set(kinds) == {ALTERNATING4}
    alt = alternating_vertices(sk)
    assert alt == set(range(8)) and sk.n == 8
    assert all(sk.degree(u) == 3 for u in alt)
    assert sk.abstract_graph().has_clique(3)


def test_criterion_9():
    start = time.perf_counter()
    d = gen_cube_g8()
    for _ in range(13):
        nxt = q4_addition(d)
        assert not nxt.abstract_graph().has_clique(5)
        assert (nxt.n - d.n, nxt.m - d.m, nxt.x - d.x) == (4, 16, 4)
        assert crossed_k4_seeds(nxt)
        d = nxt
    assert (d.n, d.m) == (60, 232) and d.m == 4 * 60 - 8
    elapsed = time.perf_counter() - start
    assert elapsed < 5, f"{elapsed:.2f}s"


def test_criterion_10():
    for n in range(8, 21, 2):
        entry = maxe_bound(n, 3)
        assert entry.tight == TIGHT and entry.witness == "external"
    for n in range(5, 21, 2):
        entry = maxe_bound(n, 3)
        assert entry.tight == CONJECTURED and entry.lower == 3 * n - 9
        assert entry.upper == 3 * n - 8
    cert = certify(load_fixture("fig13_nonbip"), 3)
    assert cert.m == 20 <= cert.bound.upper == 3 * 10 - 8
    assert cert.passed and not cert.extremal


if __name__ == "__main__":
    import sys

    failed = 0
    for i in range(1, 11):
        fn = globals()[f"test_criterion_{i}"]
        t0 = time.perf_counter()
        try:
            fn()
            status = "PASS"
        except AssertionError as exc:
            status, failed = f"FAIL ({exc})", failed + 1
        print(f"criterion {i:2d}: {status}  [{time.perf_counter() - t0:.2f}s]")
    sys.exit(1 if failed else 0)
