"""Combinatorial 1-plane drawings.

A drawing lives on the sphere and is stored as the rotation system of its
planarization: every true vertex lists its incident edges counterclockwise,
and every crossing is a pair of edges plus one orientation bit that fixes the
counterclockwise order of the four half-segments at the crossing point.

Planarization vertex ids are ``0..n-1`` for true vertices and ``n + c`` for
the fake vertex of crossing ``c``. Darts are directed segments of the
planarization; faces are the cycles of ``d -> next(twin(d))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

from . import _kernels
from .errors import (
    AdjacentCrossing,
    BadCrossOrientation,
    DuplicateEdge,
    EdgeCrossedTwice,
    LoopEdge,
    NotGenusZero,
    OPGSyntaxError,
    RotationMismatch,
    UnknownFace,
    UnknownVertex,
)

TRUE = "true"
FAKE = "fake"


@dataclass(frozen=True)
class Crossing:
    """Edges ``e`` and ``f`` cross once.

    With ``positive`` set, the counterclockwise order around the crossing is
    (e toward its first endpoint, f toward its first endpoint, e toward its
    second endpoint, f toward its second endpoint); otherwise it is the
    reverse alternating order.
    """

    e: int
    f: int
    positive: bool = True


class Dart(NamedTuple):
    id: int
    twin: int
    next: int
    origin: int
    edge: int


class Vertex(NamedTuple):
    id: int
    kind: str
    label: str | None


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class PlanarizationView:
    n_prime: int
    m_prime: int
    faces: tuple[Face, ...]


class _Planarization(NamedTuple):
    origin: list[int]
    twin: list[int]
    nxt: list[int]
    edge_of: list[int]
    out: list[list[int]]
    face_of: list[int]
    walks: list[list[int]]


def _canonical_rotation(rot: Sequence[int]) -> tuple[int, ...]:
    rot = tuple(rot)
    if not rot:
        return rot
    i = rot.index(min(rot))
    return rot[i:] + rot[:i]


def _build_darts(n, edges, crossings, rotations, crossing_of) -> _Planarization:
    """Dart arrays of the planarization; assumes structural checks passed."""
    origin: list[int] = []
    twin: list[int] = []
    edge_of: list[int] = []
    out_at: dict[tuple[int, int], int] = {}  # (true vertex, edge) -> dart
    fake_out: list[list[int]] = [[0, 0, 0, 0] for _ in crossings]

    def pair(a: int, b: int, e: int) -> tuple[int, int]:
        d = len(origin)
        origin.extend((a, b))
        twin.extend((d + 1, d))
        edge_of.extend((e, e))
        return d, d + 1

    for e, (u, v) in enumerate(edges):
        c = crossing_of[e]
        if c is None:
            du, dv = pair(u, v, e)
            out_at[u, e] = du
            out_at[v, e] = dv
        else:
            z = n + c
            # slot of this edge's half-segments in the crossing's base order
            first = 0 if crossings[c].e == e else 1
            du, dzu = pair(u, z, e)
            dv, dzv = pair(v, z, e)
            out_at[u, e] = du
            out_at[v, e] = dv
            fake_out[c][first] = dzu
            fake_out[c][first + 2] = dzv

    total = len(origin)
    nxt = [0] * total
    out: list[list[int]] = [[] for _ in range(n + len(crossings))]
    for u in range(n):
        ring = [out_at[u, e] for e in rotations[u]]
        out[u] = ring
        for i, d in enumerate(ring):
            nxt[d] = ring[(i + 1) % len(ring)]
    for c, cr in enumerate(crossings):
        a, b, p, q = fake_out[c]
        ring = [a, b, p, q] if cr.positive else [a, q, p, b]
        out[n + c] = ring
        for i, d in enumerate(ring):
            nxt[d] = ring[(i + 1) % 4]
    face_of, walks = _kernels.face_cycles(twin, nxt)
    return _Planarization(origin, twin, nxt, edge_of, out, face_of, walks)


def _euler_defects(n_total: int, pl: _Planarization) -> list[int]:
    """Per planarization component, ``V - E + F - 2`` (isolated vertices
    count as one face)."""
    parent = list(range(n_total))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for d in range(0, len(pl.origin), 2):
        ra, rb = find(pl.origin[d]), find(pl.origin[d + 1])
        if ra != rb:
            parent[ra] = rb
    verts: dict[int, int] = {}
    darts: dict[int, int] = {}
    faces: dict[int, int] = {}
    for v in range(n_total):
        r = find(v)
        verts[r] = verts.get(r, 0) + 1
    for d, o in enumerate(pl.origin):
        r = find(o)
        darts[r] = darts.get(r, 0) + 1
    for walk in pl.walks:
        r = find(pl.origin[walk[0]])
        faces[r] = faces.get(r, 0) + 1
    defects = []
    for r, nv in verts.items():
        ne = darts.get(r, 0) // 2
        nf = faces.get(r, 0) if ne else 1
        defects.append(nv - ne + nf - 2)
    return defects


@dataclass(frozen=True)
class OnePlaneDrawing:
    """A validated 1-plane drawing; immutable, so safe to share.

    Parameters
    ----------
    n : int
        Number of true vertices, with ids ``0..n-1``.
    edges : sequence of (u, v)
        Edge ``i`` joins ``edges[i]``; the first endpoint is the reference
        for crossing orientation.
    crossings : sequence of Crossing
    rotations : sequence of sequences
        ``rotations[u]`` lists the edge ids at ``u`` counterclockwise.
    labels : sequence of str or None, optional

    Raises
    ------
    DrawingError
        One of its subclasses, naming the first violated rule.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    crossings: tuple[Crossing, ...] = ()
    rotations: tuple[tuple[int, ...], ...] = ()
    labels: tuple[str | None, ...] = field(default=())

    def __post_init__(self):
        n = int(self.n)
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        crossings = tuple(
            c if isinstance(c, Crossing) else Crossing(*c) for c in self.crossings
        )
        rotations = tuple(_canonical_rotation(r) for r in self.rotations)
        if not rotations and n:
            rotations = ((),) * n
        labels = tuple(self.labels) + (None,) * (n - len(self.labels))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "rotations", rotations)
        object.__setattr__(self, "labels", labels)
        self._validate()

    # ------------------------------------------------------------------
    # validation

    def _validate(self) -> None:
        n, edges, crossings = self.n, self.edges, self.crossings
        if n < 0:
            raise OPGSyntaxError("negative vertex count")
        if len(self.labels) != n:
            raise OPGSyntaxError("more labels than vertices")
        seen: dict[frozenset, int] = {}
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n):
                raise UnknownVertex(f"edge {i} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"edge {i} is a loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise DuplicateEdge(f"edges {seen[key]} and {i} both join {u} and {v}")
            seen[key] = i
        crossing_of: list[int | None] = [None] * len(edges)
        for c, cr in enumerate(crossings):
            for e in (cr.e, cr.f):
                if not 0 <= e < len(edges):
                    raise OPGSyntaxError(f"crossing {c} names unknown edge {e}")
            if cr.e == cr.f:
                raise EdgeCrossedTwice(f"crossing {c} crosses edge {cr.e} with itself")
            for e in (cr.e, cr.f):
                if crossing_of[e] is not None:
                    raise EdgeCrossedTwice(
                        f"edge {e} appears in crossings {crossing_of[e]} and {c}"
                    )
                crossing_of[e] = c
            if set(edges[cr.e]) & set(edges[cr.f]):
                raise AdjacentCrossing(
                    f"crossing {c}: edges {cr.e} and {cr.f} share an endpoint"
                )
        if len(self.rotations) != n:
            raise RotationMismatch(f"expected {n} rotations, got {len(self.rotations)}")
        incident: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            incident[u].append(i)
            incident[v].append(i)
        for u in range(n):
            if sorted(self.rotations[u]) != incident[u]:
                raise RotationMismatch(
                    f"rotation at vertex {u} must list edges {incident[u]} exactly once"
                )
        object.__setattr__(self, "_crossing_of", tuple(crossing_of))
        pl = _build_darts(n, edges, crossings, self.rotations, crossing_of)
        if any(_euler_defects(n + len(crossings), pl)):
            self._diagnose_genus(crossing_of)
        object.__setattr__(self, "_pl_cache", pl)

    def _diagnose_genus(self, crossing_of) -> None:
        n, crossings = self.n, list(self.crossings)
        for c, cr in enumerate(crossings):
            flipped = crossings.copy()
            flipped[c] = Crossing(cr.e, cr.f, not cr.positive)
            pl = _build_darts(n, self.edges, flipped, self.rotations, crossing_of)
            if not any(_euler_defects(n + len(crossings), pl)):
                raise BadCrossOrientation(
                    f"crossing {c} ({cr.e} x {cr.f}): the declared orientation does "
                    "not match the rotations; the opposite one does"
                )
        raise NotGenusZero("the rotation system does not describe a drawing on the sphere")

    # ------------------------------------------------------------------
    # counts and lookups

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def x(self) -> int:
        return len(self.crossings)

    @property
    def n_prime(self) -> int:
        return self.n + self.x

    @property
    def m_prime(self) -> int:
        return self.m + 2 * self.x

    @property
    def _pl(self) -> _Planarization:
        return self._pl_cache  # type: ignore[attr-defined]

    def crossing_of(self, e: int) -> int | None:
        return self._crossing_of[e]  # type: ignore[attr-defined]

    def is_crossed(self, e: int) -> bool:
        return self.crossing_of(e) is not None

    def is_fake(self, v: int) -> bool:
        return v >= self.n

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n_prime:
            raise UnknownVertex(f"no planarization vertex {v}")

    def fake_vertex(self, c: int) -> int:
        return self.n + c

    def degree(self, u: int) -> int:
        """Degree in the planarization (equal to the degree in G for true
        vertices)."""
        self.check_vertex(u)
        return len(self._pl.out[u])

    def neighbors(self, u: int) -> list[int]:
        """Neighbours of a true vertex in G, in rotation order."""
        out = []
        for e in self.rotations[u]:
            a, b = self.edges[e]
            out.append(b if a == u else a)
        return out

    @cached_property
    def vertices(self) -> tuple[Vertex, ...]:
        true = [Vertex(i, TRUE, self.labels[i]) for i in range(self.n)]
        fake = [Vertex(self.n + c, FAKE, None) for c in range(self.x)]
        return tuple(true + fake)

    @cached_property
    def darts(self) -> tuple[Dart, ...]:
        pl = self._pl
        return tuple(
            Dart(d, pl.twin[d], pl.nxt[d], pl.origin[d], pl.edge_of[d])
            for d in range(len(pl.origin))
        )

    def rotation_at(self, v: int) -> list[int]:
        """Counterclockwise darts leaving planarization vertex ``v``."""
        self.check_vertex(v)
        return list(self._pl.out[v])

    def head(self, d: int) -> int:
        return self._pl.origin[self._pl.twin[d]]

    def planarization_neighbors(self, v: int) -> list[int]:
        return [self.head(d) for d in self.rotation_at(v)]

    # ------------------------------------------------------------------
    # faces

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        pl = self._pl
        return tuple(
            Face(i, tuple(w), tuple(pl.origin[d] for d in w))
            for i, w in enumerate(pl.walks)
        )

    def face(self, fid: int) -> Face:
        if not 0 <= fid < len(self.faces):
            raise UnknownFace(f"no face {fid}")
        return self.faces[fid]

    def face_of_dart(self, d: int) -> int:
        return self._pl.face_of[d]

    @cached_property
    def faces_at(self) -> tuple[tuple[int, ...], ...]:
        """For each planarization vertex, the faces of its corners in
        rotation order (a face repeats when the vertex is a cut vertex)."""
        pl = self._pl
        return tuple(tuple(pl.face_of[d] for d in ring) for ring in pl.out)

    def planarization_view(self) -> PlanarizationView:
        return PlanarizationView(self.n_prime, self.m_prime, self.faces)

    # ------------------------------------------------------------------
    # abstract graph

    def adjacency_masks(self) -> list[int]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def components(self) -> list[list[int]]:
        """Connected components of G (true vertices only), each sorted."""
        masks = self.adjacency_masks()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                rest = masks[u]
                while rest:
                    low = rest & -rest
                    v = low.bit_length() - 1
                    rest ^= low
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def connectivity(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        return self.connectivity() <= 1

    def abstract_graph(self):
        from .cliques import AbstractGraph

        return AbstractGraph(self.n, self.edges)

    def edge_id(self, u: int, v: int) -> int | None:
        return self._edge_index.get(frozenset((u, v)))

    @cached_property
    def _edge_index(self) -> dict[frozenset, int]:
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    def label(self, v: int) -> str:
        if v >= self.n:
            return f"z{v - self.n}"
        return self.labels[v] if self.labels[v] is not None else str(v)

    def vertex_by_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownVertex(f"no vertex labelled {label!r}") from None

    def to_opg(self) -> str:
        from .opg import serialize

        return serialize(self)

    def __repr__(self) -> str:
        return f"OnePlaneDrawing(n={self.n}, m={self.m}, x={self.x})"
