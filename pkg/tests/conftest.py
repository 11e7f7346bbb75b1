from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from oneplane._plane import PlaneBuilder
from oneplane.drawing import Crossing, OnePlaneDrawing
from oneplane.errors import DrawingError

C4_TEXT = """opg 1
vertex 0
vertex 1
vertex 2
vertex 3
edge 0 0 1
edge 1 1 2
edge 2 2 3
edge 3 0 3
rot 0 e0 e3
rot 1 e0 e1
rot 2 e1 e2
rot 3 e2 e3
"""


def c4() -> OnePlaneDrawing:
    return OnePlaneDrawing(4, [(0, 1), (1, 2), (2, 3), (0, 3)], (), [(0, 3), (0, 1), (1, 2), (2, 3)])


def k4_crossed() -> OnePlaneDrawing:
    """Square 0,1,2,3 (counterclockwise) with crossing diagonals 02 and 13."""
    pts = [(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5)]
    segs = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 2), (1, 4), (4, 3)]
    return PlaneBuilder.from_coordinates(pts, segs, fake={4}).to_drawing()


def disjoint_c4s() -> OnePlaneDrawing:
    pts = [(0, 0), (1, 0), (1, 1), (0, 1), (3, 0), (4, 0), (4, 1), (3, 1)]
    segs = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
    return PlaneBuilder.from_coordinates(pts, segs).to_drawing()


def plane_from(points, segments, labels=None) -> OnePlaneDrawing:
    return PlaneBuilder.from_coordinates(points, segments, labels=labels).to_drawing()


def cube_q3() -> OnePlaneDrawing:
    pts = [(-2, -2), (2, -2), (2, 2), (-2, 2), (-1, -1), (1, -1), (1, 1), (-1, 1)]
    segs = [(i, (i + 1) % 4) for i in range(4)]
    segs += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    segs += [(i, i + 4) for i in range(4)]
    return plane_from(pts, segs)


def cycle(k: int) -> OnePlaneDrawing:
    import math

    pts = [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)]
    return plane_from(pts, [(i, (i + 1) % k) for i in range(k)])


@pytest.fixture
def c4_drawing():
    return c4()


@pytest.fixture
def k4x():
    return k4_crossed()


# ---------------------------------------------------------------------------
# random valid drawings grown by local surgery


def _is_bridge(walk, u, v) -> bool:
    """An edge seen from both sides in the same face walk is a bridge."""
    k = len(walk)
    return any(walk[i] == v and walk[(i + 1) % k] == u for i in range(k))


def _grow(seed: int, steps: int) -> OnePlaneDrawing:
    rng = random.Random(seed)
    b = PlaneBuilder.from_coordinates([(0, 0), (1, 0), (0, 1)], [(0, 1), (1, 2), (2, 0)])
    for _ in range(steps):
        trial = b.copy()
        walks = trial.faces()
        if not walks:
            break
        walk = rng.choice(walks)
        op = rng.choice(("star", "star", "pendant", "chord", "cross", "cross", "cross", "remove"))
        try:
            if op == "star":
                if len(set(walk)) != len(walk) or any(trial.fake[w] for w in walk):
                    continue
                trial.insert_star(walk)
            elif op == "pendant":
                i = rng.randrange(len(walk))
                if trial.fake[walk[i]]:
                    continue
                w = trial.add_vertex()
                trial.rot[w] = [walk[i]]
                trial._insert_after(walk[i], walk[i - 1], w)
            elif op == "chord":
                if len(walk) < 4:
                    continue
                i, j = sorted(rng.sample(range(len(walk)), 2))
                if trial.fake[walk[i]] or trial.fake[walk[j]] or walk[i] == walk[j]:
                    continue
                trial.add_chord(walk, i, j)
            elif op == "cross":
                # open a true edge between two faces, then cross the new 4-face
                i = rng.randrange(len(walk))
                u, v = walk[i - 1], walk[i]
                if trial.fake[u] or trial.fake[v] or _is_bridge(walk, u, v):
                    continue
                trial.remove_edge(u, v)
                quads = [
                    w for w in trial.faces()
                    if len(w) == 4 and len(set(w)) == 4 and not any(trial.fake[x] for x in w)
                ]
                if not quads:
                    continue
                trial.insert_crossed_diagonals(rng.choice(quads))
            else:
                i = rng.randrange(len(walk))
                u, v = walk[i - 1], walk[i]
                if trial.fake[u] or trial.fake[v] or _is_bridge(walk, u, v):
                    continue
                trial.remove_edge(u, v)
            trial.to_drawing()
        except DrawingError:
            continue
        b = trial
    return b.to_drawing()


@st.composite
def drawings(draw, max_steps: int = 12):
    """Valid 1-plane drawings built from a triangle by random face surgery."""
    seed = draw(st.integers(0, 2**32 - 1))
    steps = draw(st.integers(0, max_steps))
    return _grow(seed, steps)


def random_drawing(seed: int, steps: int = 12) -> OnePlaneDrawing:
    return _grow(seed, steps)


__all__ = ["C4_TEXT", "Crossing", "c4", "k4_crossed", "drawings", "random_drawing"]


# ---------------------------------------------------------------------------
# one summary line per acceptance criterion

_CRITERIA: dict[int, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_criterion_"):
        return
    num = int(name.rsplit("_", 1)[-1])
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[num] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        status, dur = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:2d}: {status}  [{dur:.2f}s]")
