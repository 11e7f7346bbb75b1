"""Generators for the extremal drawing families and the bundled fixtures."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from pathlib import Path

from . import opg
from ._plane import PlaneBuilder
from .cliques import turan_graph, turan_size
from .drawing import OnePlaneDrawing
from .errors import (
    BadParam,
    DrawingError,
    FixtureInvalid,
    NoCrossedK4AtSeed,
    ResultNotSimple,
    UnknownFixture,
)

FAMILIES = ("cube-g8", "ladder", "k4-extremal", "k5-optimal", "turan", "fixture")


@dataclass(frozen=True)
class ConstructionParams:
    """Selects one generated drawing: ``family`` plus its parameter.

    ``ladder`` takes ``k``; ``k4-extremal`` and ``k5-optimal`` take ``n``;
    ``turan`` takes ``n`` and ``k``; ``fixture`` takes ``name``.
    """

    family: str
    n: int | None = None
    k: int | None = None
    name: str | None = None

    def build(self) -> OnePlaneDrawing:
        if self.family == "cube-g8":
            return gen_cube_g8()
        if self.family == "ladder":
            return gen_ladder_H(_need(self.k, "k"))
        if self.family == "k4-extremal":
            return gen_k4_extremal(_need(self.n, "n"))
        if self.family == "k5-optimal":
            return gen_k5_optimal(_need(self.n, "n"))
        if self.family == "turan":
            return gen_turan_drawing(_need(self.n, "n"), _need(self.k, "k"))
        if self.family == "fixture":
            if not self.name:
                raise BadParam("fixture family needs a name")
            return load_fixture(self.name)
        raise BadParam(f"unknown family {self.family!r}; expected one of {FAMILIES}")


def _need(val: int | None, what: str) -> int:
    if val is None:
        raise BadParam(f"parameter {what} is required")
    return val


# ---------------------------------------------------------------------------
# cube-based optimal drawing on 8 vertices


def gen_cube_g8() -> OnePlaneDrawing:
    """Cube quadrangulation with both diagonals crossing in each of its six faces."""
    pts = [(-2, 2), (2, 2), (2, -2), (-2, -2), (-1, 1), (1, 1), (1, -1), (-1, -1)]
    segs = [(i, (i + 1) % 4) for i in range(4)]
    segs += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    segs += [(i, i + 4) for i in range(4)]
    b = PlaneBuilder.from_coordinates(pts, segs)
    for walk in b.faces():
        b.insert_crossed_diagonals(walk)
    return b.to_drawing()


# ---------------------------------------------------------------------------
# ladders with two apexes


def _ladder_builder(k: int, chords: bool) -> PlaneBuilder:
    if k < 2:
        raise BadParam(f"ladder needs k >= 2, got {k}")
    pts, labels, fake = [], [], set()

    def vertex(p, label=None, is_fake=False):
        pts.append(p)
        labels.append(label)
        if is_fake:
            fake.add(len(pts) - 1)
        return len(pts) - 1

    a = [vertex((i, 1), f"a{i}") for i in range(1, k + 1)]
    b = [vertex((i, 0), f"b{i}") for i in range(1, k + 1)]
    u = vertex(((k + 1) / 2, k + 1), "u")
    v = vertex(((k + 1) / 2, -k), "v")
    segs = [(a[i], b[i]) for i in range(k)]
    segs += [(u, a[i]) for i in range(k)] + [(v, b[i]) for i in range(k)]
    for i in range(k - 1):
        # u to b[i+1] crosses the top rail, v to a[i] crosses the bottom rail
        z = vertex((i + 1.5, 1), is_fake=True)
        w = vertex((i + 1.5, 0), is_fake=True)
        segs += [(a[i], z), (z, a[i + 1]), (u, z), (z, b[i + 1])]
        segs += [(b[i], w), (w, b[i + 1]), (v, w), (w, a[i])]
    builder = PlaneBuilder.from_coordinates(pts, segs, fake, labels)
    if chords:
        walk = _hexagon(builder, k)
        builder.add_chord(walk, walk.index(u), walk.index(b[0]))
        walk = builder.face_with_vertices([v, b[k - 1], a[k - 1], u, b[0]])
        builder.add_chord(walk, walk.index(v), walk.index(a[k - 1]))
    return builder


def _hexagon(builder: PlaneBuilder, k: int) -> list[int]:
    names = ["u", "a1", "b1", "v", f"b{k}", f"a{k}"]
    return builder.face_with_vertices([builder.find(s) for s in names])


def gen_ladder_H(k: int, chords: bool = False) -> OnePlaneDrawing:
    """Ladder on ``a1..ak``/``b1..bk`` with apex ``u`` over the a-rail and
    ``v`` under the b-rail; ``u-b(i+1)`` crosses ``a(i)a(i+1)`` and ``v-a(i)``
    crosses ``b(i)b(i+1)``. ``chords`` adds the uncrossed edges ``u-b1`` and
    ``v-ak`` through the outer hexagon."""
    return _ladder_builder(k, chords).to_drawing()


# ---------------------------------------------------------------------------
# four-cycle insertion into a crossed K4


def crossed_k4_seeds(d: OnePlaneDrawing) -> list[tuple[int, ...]]:
    """Sorted vertex sets of crossed K4s whose four faces at the crossing are
    triangles closed by the remaining K4 edges."""
    seeds = []
    for c in range(d.x):
        if _seed_walk(d, c) is not None:
            cr = d.crossings[c]
            seeds.append(tuple(sorted(d.edges[cr.e] + d.edges[cr.f])))
    return sorted(seeds)


def _seed_walk(d: OnePlaneDrawing, c: int) -> list[int] | None:
    z = d.fake_vertex(c)
    ring = d.planarization_neighbors(z)
    for i in range(4):
        p, q = ring[i], ring[(i + 1) % 4]
        if d.edge_id(p, q) is None or d.is_crossed(d.edge_id(p, q)):
            return None
    for f in d.faces_at[z]:
        if d.faces[f].degree != 3:
            return None
    return ring


def q4_addition(d: OnePlaneDrawing, seed=None) -> OnePlaneDrawing:
    """Replace the crossing diagonals of a crossed K4 by a four-cycle with
    crossed diagonals, joined to the K4 by four spokes and four crossing
    pairs. Adds 4 vertices, 16 edges and 4 crossings.

    ``seed`` is the K4's vertex set; by default the lexicographically least
    one from :func:`crossed_k4_seeds`. New vertices get ids ``n..n+3``.
    """
    target = None
    if seed is None:
        seeds = crossed_k4_seeds(d)
        if not seeds:
            raise NoCrossedK4AtSeed("drawing has no crossed K4 bounded by triangles")
        seed = seeds[0]
    want = tuple(sorted(seed))
    for c in range(d.x):
        cr = d.crossings[c]
        if tuple(sorted(d.edges[cr.e] + d.edges[cr.f])) == want:
            target = c
            break
    if target is None or _seed_walk(d, target) is None:
        raise NoCrossedK4AtSeed(f"{want} is not a crossed K4 bounded by triangles")
    b = PlaneBuilder.from_drawing(d)
    walk = b.remove_star(d.fake_vertex(target))
    inner = [b.add_vertex() for _ in range(4)]
    for i in range(4):
        b._insert_after(walk[i], walk[i - 1], inner[i])
        b.rot[inner[i]] = [inner[(i + 1) % 4], walk[i], inner[i - 1]]
    for i in range(4):
        b.insert_crossed_diagonals([walk[i], walk[(i + 1) % 4], inner[(i + 1) % 4], inner[i]])
    b.insert_crossed_diagonals(inner)
    try:
        return b.to_drawing()
    except DrawingError as exc:
        raise ResultNotSimple(str(exc)) from exc


def _k5_base(n: int) -> OnePlaneDrawing:
    if n == 8:
        return gen_cube_g8()
    return load_fixture({10: "g10_k5", 11: "g11_k5", 13: "g13_k5"}[n])


def gen_k5_optimal(n: int) -> OnePlaneDrawing:
    """K5-free drawing with ``4n - 8`` edges for ``n = 8`` or ``n >= 10``."""
    if n < 10 and n != 8:
        raise BadParam(f"no 4n-8 K5-free drawing on {n} vertices")
    base = {0: 8, 2: 10, 3: 11, 1: 13}[n % 4]
    d = _k5_base(base)
    seed = None
    for _ in range((n - base) // 4):
        old_n = d.n
        d = q4_addition(d, seed)
        seed = min(s for s in crossed_k4_seeds(d) if s[-1] >= old_n)
    return d


# ---------------------------------------------------------------------------
# K4-free family: hexagon gluing


def _host(n: int) -> PlaneBuilder:
    b = PlaneBuilder.from_drawing(load_fixture("g9_k4" if n % 2 else "g10_k4"))
    for p, q in (("a1", "a2"), ("b1", "b2"), ("u", "b2"), ("v", "a1")):
        b.remove_edge(b.find(p), b.find(q))
    return b


def gen_k4_extremal(n: int) -> OnePlaneDrawing:
    """K4-free drawing with ``floor(7n/2) - 7`` edges for ``n >= 9``."""
    if n < 9:
        raise BadParam(f"K4-free family starts at n = 9, got {n}")
    if n in (9, 10):
        return load_fixture("g9_k4" if n == 9 else "g10_k4")
    k = (n - 1) // 2 - 2
    host = _host(n)
    guest = _ladder_builder(k, chords=False)
    for g in range(len(guest.labels)):
        lab = guest.labels[g]
        if lab and lab[0] in "ab" and lab[1:] not in ("1", str(k)):
            guest.labels[g] = "h" + lab
    names = {"u": "u", "a1": "a1", "b1": "b1", "v": "v", "b2": f"b{k}", "a2": f"a{k}"}
    host_walk = host.face_with_vertices([host.find(s) for s in names])
    guest_walk = [guest.find(names[host.labels[h]]) for h in host_walk]
    host.glue(host_walk, guest, guest_walk)
    try:
        return host.to_drawing()
    except DrawingError as exc:
        raise ResultNotSimple(str(exc)) from exc


# ---------------------------------------------------------------------------
# Turán drawings on at most seven vertices


@lru_cache(maxsize=None)
def _turan_drawing_text(n: int, k: int) -> str:
    from .certify import drawing_search

    return drawing_search(turan_graph(n, k)).to_opg()


def _k2221_drawing() -> OnePlaneDrawing:
    """``K_{2,2,2,1}``: an octahedron with an apex in one triangle, reaching
    the three far vertices across the triangle's edges."""
    points = [(0, 10), (0, -2), (-9, -5), (2.5, 1), (9, -5), (-2.5, 1)]
    missing = {(0, 1), (2, 3), (4, 5)}
    segments = [e for e in combinations(range(6), 2) if e not in missing]
    b = PlaneBuilder.from_coordinates(points, segments)
    b.insert_star(b.face_with_vertices((1, 3, 5)))
    for u, v, far in ((1, 3, 5), (3, 5, 1), (5, 1, 3)):
        b.remove_edge(u, v)
        b.insert_crossed_diagonals(b.face_with_vertices((u, v, 6, far ^ 1)))
    return b.to_drawing()


def induced_subdrawing(d: OnePlaneDrawing, keep) -> OnePlaneDrawing:
    """Drawing induced on ``keep``; vertex ids are compacted in order."""
    keep = set(keep)
    b = PlaneBuilder.from_drawing(d)
    for u, v in d.edges:
        if u not in keep or v not in keep:
            b.remove_edge(u, v)
    for u in range(d.n):
        if u not in keep:
            b.alive[u] = False
    return b.to_drawing()


def gen_turan_drawing(n: int, k: int) -> OnePlaneDrawing:
    """1-plane drawing of ``T_{k-1}(n)`` for ``n <= 7`` and ``k`` in {4, 5};
    the ``k = 5`` drawings are induced by one drawing of ``K_{2,2,2,1}``."""
    if not 1 <= n <= 7 or k not in (4, 5):
        raise BadParam(f"Turán drawings exist here for 1 <= n <= 7 and k in (4, 5), got {n}, {k}")
    if k == 4:
        return opg.parse(_turan_drawing_text(n, 4))
    full = _k2221_drawing()
    want = turan_graph(n, 5).edges
    for keep in combinations(range(7), n):
        idx = {v: i for i, v in enumerate(keep)}
        sub = sorted(
            (idx[u], idx[v]) for u, v in full.edges if u in idx and v in idx
        )
        if tuple(sub) == want:
            d = induced_subdrawing(full, keep)
            assert d.m == turan_size(n, 5)
            return d
    raise DrawingError(f"no induced copy of T_4({n}) found")  # pragma: no cover


# ---------------------------------------------------------------------------
# fixtures


@dataclass(frozen=True)
class FixtureProfile:
    n: int
    m: int
    clique_free: int
    bipartite: bool | None = None


FIXTURES: dict[str, FixtureProfile] = {
    "maxe84": FixtureProfile(8, 20, 4),
    "maxe95": FixtureProfile(9, 27, 5),
    "g9_k4": FixtureProfile(9, 24, 4),
    "g10_k4": FixtureProfile(10, 28, 4),
    "g10_k5": FixtureProfile(10, 32, 5),
    "g11_k5": FixtureProfile(11, 36, 5),
    "g13_k5": FixtureProfile(13, 44, 5),
    "fig13_nonbip": FixtureProfile(10, 20, 3, bipartite=False),
}


def fixture_dir() -> Path:
    override = os.environ.get("ONEPLANE_FIXTURES")
    if override:
        return Path(override)
    return Path(str(resources.files("oneplane") / "fixtures"))


def verify_fixture(name: str, d: OnePlaneDrawing) -> None:
    prof = FIXTURES[name]
    problems = []
    if (d.n, d.m) != (prof.n, prof.m):
        problems.append(f"expected n={prof.n} m={prof.m}, got n={d.n} m={d.m}")
    g = d.abstract_graph()
    if g.has_clique(prof.clique_free):
        problems.append(f"contains K{prof.clique_free} on {g.find_clique(prof.clique_free)}")
    if prof.clique_free > 2 and not g.has_clique(prof.clique_free - 1):
        problems.append(f"unexpectedly K{prof.clique_free - 1}-free")
    if prof.bipartite is not None and g.is_bipartite() != prof.bipartite:
        problems.append("bipartite" if g.is_bipartite() else "not bipartite")
    if problems:
        raise FixtureInvalid(f"fixture {name}: " + "; ".join(problems))


def load_fixture(name: str) -> OnePlaneDrawing:
    """Read a bundled drawing and re-check its order, size and clique profile."""
    if name not in FIXTURES:
        raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")
    return _load_fixture(name, str(fixture_dir()))


@lru_cache(maxsize=None)
def _load_fixture(name: str, directory: str) -> OnePlaneDrawing:
    path = Path(directory) / f"{name}.opg"
    if not path.is_file():
        raise UnknownFixture(f"fixture file {path} not found")
    try:
        d = opg.read(path)
    except DrawingError as exc:
        raise FixtureInvalid(f"fixture {name}: {exc}") from exc
    verify_fixture(name, d)
    return d
