"""Mutable rotation-system builder used by the constructions.

Works on the planarization directly: fake vertices are ordinary vertices
flagged ``fake``, and each vertex keeps its neighbours counterclockwise.
A face walk ``a -> b -> c`` takes ``c`` to be the neighbour following ``a``
in the rotation at ``b``, matching ``next(twin(d))`` in :mod:`.drawing`, so
faces are traversed with their interior on the right.
"""

from __future__ import annotations

import math

from .drawing import Crossing, OnePlaneDrawing
from .errors import DrawingError, ResultNotSimple


class PlaneBuilder:
    def __init__(self):
        self.rot: list[list[int]] = []
        self.fake: list[bool] = []
        self.labels: list[str | None] = []
        self.alive: list[bool] = []

    # -- construction --------------------------------------------------

    def add_vertex(self, label: str | None = None, fake: bool = False) -> int:
        self.rot.append([])
        self.fake.append(fake)
        self.labels.append(label)
        self.alive.append(True)
        return len(self.rot) - 1

    @classmethod
    def from_coordinates(cls, points, segments, fake=(), labels=None) -> "PlaneBuilder":
        """Rotations of a straight-line plane drawing (not checked for
        planarity here; ``to_drawing`` validates)."""
        b = cls()
        fake = set(fake)
        for i in range(len(points)):
            b.add_vertex(labels[i] if labels else None, i in fake)
        for p, q in segments:
            b.rot[p].append(q)
            b.rot[q].append(p)
        for v, ring in enumerate(b.rot):
            x0, y0 = points[v]
            ring.sort(key=lambda w: math.atan2(points[w][1] - y0, points[w][0] - x0))
        return b

    @classmethod
    def from_drawing(cls, d: OnePlaneDrawing) -> "PlaneBuilder":
        b = cls()
        for v in range(d.n_prime):
            b.add_vertex(d.labels[v] if v < d.n else None, d.is_fake(v))
        for v in range(d.n_prime):
            b.rot[v] = d.planarization_neighbors(v)
        return b

    def copy(self) -> "PlaneBuilder":
        b = PlaneBuilder()
        b.rot = [list(r) for r in self.rot]
        b.fake = list(self.fake)
        b.labels = list(self.labels)
        b.alive = list(self.alive)
        return b

    def mirror(self) -> None:
        for ring in self.rot:
            ring.reverse()

    # -- queries -------------------------------------------------------

    def after(self, v: int, ref: int) -> int:
        ring = self.rot[v]
        return ring[(ring.index(ref) + 1) % len(ring)]

    def face_walk(self, a: int, b: int) -> list[int]:
        walk = []
        prev, cur = a, b
        while True:
            walk.append(prev)
            prev, cur = cur, self.after(cur, prev)
            if (prev, cur) == (a, b):
                return walk

    def faces(self) -> list[list[int]]:
        seen = set()
        out = []
        for a in range(len(self.rot)):
            if not self.alive[a]:
                continue
            for b in self.rot[a]:
                if (a, b) in seen:
                    continue
                walk = self.face_walk(a, b)
                for i in range(len(walk)):
                    seen.add((walk[i], walk[(i + 1) % len(walk)]))
                out.append(walk)
        return out

    def find(self, label: str) -> int:
        for v, lab in enumerate(self.labels):
            if lab == label and self.alive[v]:
                return v
        raise KeyError(label)

    def face_with_vertices(self, vertices) -> list[int]:
        target = sorted(vertices)
        for walk in self.faces():
            if sorted(walk) == target:
                return walk
        raise DrawingError(f"no face bounded exactly by {target}")

    # -- surgery -------------------------------------------------------

    def _insert_after(self, v: int, ref: int, w: int) -> None:
        ring = self.rot[v]
        ring.insert(ring.index(ref) + 1, w)

    def insert_star(self, walk, label=None, fake=False) -> int:
        """New vertex inside the face ``walk``, joined to every walk vertex."""
        z = self.add_vertex(label, fake)
        k = len(walk)
        for i in range(k):
            self._insert_after(walk[i], walk[i - 1], z)
        self.rot[z] = list(reversed(walk))
        return z

    def insert_crossed_diagonals(self, walk) -> int:
        """Both diagonals of the 4-face ``walk``, crossing at a new fake vertex."""
        if len(walk) != 4 or len(set(walk)) != 4 or any(self.fake[w] for w in walk):
            raise DrawingError("crossed diagonals need a face bounded by four true vertices")
        return self.insert_star(walk, fake=True)

    def add_chord(self, walk, i: int, j: int) -> None:
        """Join ``walk[i]`` and ``walk[j]`` through the face ``walk``."""
        a, b = walk[i], walk[j]
        self._insert_after(a, walk[i - 1], b)
        self._insert_after(b, walk[j - 1], a)

    def remove_star(self, z: int) -> list[int]:
        """Delete vertex ``z``; returns the walk of the merged face."""
        ring = self.rot[z]
        for w in ring:
            self.rot[w].remove(z)
        self.rot[z] = []
        self.alive[z] = False
        return list(reversed(ring))

    def remove_edge(self, u: int, v: int) -> None:
        """Remove the true edge ``uv``, whether drawn plainly or crossed."""
        if v in self.rot[u]:
            self.rot[u].remove(v)
            self.rot[v].remove(u)
            return
        for z in self.rot[u]:
            if self.fake[z] and v in self.rot[z]:
                ring = self.rot[z]
                i = ring.index(u)
                p, q = ring[(i + 1) % 4], ring[(i + 3) % 4]
                self.rot[u].remove(z)
                self.rot[v].remove(z)
                self.rot[p][self.rot[p].index(z)] = q
                self.rot[q][self.rot[q].index(z)] = p
                self.rot[z] = []
                self.alive[z] = False
                return
        raise DrawingError(f"no edge between {u} and {v}")

    def glue(self, host_walk, guest: "PlaneBuilder", guest_walk) -> dict[int, int]:
        """Paste ``guest`` into the host face ``host_walk``.

        ``guest_walk`` is a face of ``guest`` whose i-th vertex is identified
        with ``host_walk[i]``; the boundary edges of that face are dropped and
        everything on its other side moves into the host face. Returns the
        guest-to-host vertex map.
        """
        k = len(host_walk)
        guest = guest.copy()
        gpos = {g: i for i, g in enumerate(guest_walk)}
        # the guest walk must run opposite to the host walk once identified
        same = all(
            guest.after(guest_walk[i], guest_walk[i - 1]) == guest_walk[(i + 1) % k]
            for i in range(k)
        )
        if same:
            guest.mirror()
        mapping = {g: host_walk[i] for i, g in enumerate(guest_walk)}
        for g in range(len(guest.rot)):
            if guest.alive[g] and g not in mapping:
                mapping[g] = self.add_vertex(guest.labels[g], guest.fake[g])
        for g in range(len(guest.rot)):
            if not guest.alive[g] or g in gpos:
                continue
            self.rot[mapping[g]] = [mapping[w] for w in guest.rot[g]]
        for i, g in enumerate(guest_walk):
            ring = guest.rot[g]
            prev_g, next_g = guest_walk[i - 1], guest_walk[(i + 1) % k]
            start = ring.index(prev_g)
            inner = []
            j = (start + 1) % len(ring)
            while ring[j] != next_g:
                inner.append(mapping[ring[j]])
                j = (j + 1) % len(ring)
            host_ring = self.rot[host_walk[i]]
            at = host_ring.index(host_walk[i - 1]) + 1
            host_ring[at:at] = inner
        return mapping

    # -- export --------------------------------------------------------

    def to_drawing(self) -> OnePlaneDrawing:
        ids = {}
        labels = []
        for v in range(len(self.rot)):
            if self.alive[v] and not self.fake[v]:
                ids[v] = len(ids)
                labels.append(self.labels[v])
        pairs = set()
        through: dict[int, tuple[tuple[int, int], tuple[int, int]]] = {}
        for v, ring in enumerate(self.rot):
            if not self.alive[v]:
                continue
            if self.fake[v]:
                if len(ring) != 4 or any(self.fake[w] for w in ring):
                    raise DrawingError(f"fake vertex {v} is not a simple crossing")
                through[v] = ((ring[0], ring[2]), (ring[1], ring[3]))
                for a, b in through[v]:
                    key = (min(ids[a], ids[b]), max(ids[a], ids[b]))
                    if key in pairs:
                        raise ResultNotSimple(f"parallel edges between {key}")
                    pairs.add(key)
            else:
                for w in ring:
                    if not self.fake[w] and v < w:
                        key = (min(ids[v], ids[w]), max(ids[v], ids[w]))
                        if key in pairs:
                            raise ResultNotSimple(f"parallel edges between {key}")
                        pairs.add(key)
        edges = sorted(pairs)
        eid = {e: i for i, e in enumerate(edges)}

        def edge_of(a: int, b: int) -> int:
            return eid[(min(ids[a], ids[b]), max(ids[a], ids[b]))]

        crossings = []
        for z, ((a, c), (b, d)) in through.items():
            e1, e2 = edge_of(a, c), edge_of(b, d)
            e, f = (e1, e2) if e1 < e2 else (e2, e1)
            ring = [ids[w] for w in self.rot[z]]
            e0, f0 = edges[e][0], edges[f][0]
            i = ring.index(e0)
            crossings.append(Crossing(e, f, ring[(i + 1) % 4] == f0))
        crossings.sort(key=lambda c: c.e)
        rotations = [[] for _ in ids]
        for v, i in ids.items():
            for w in self.rot[v]:
                if self.fake[w]:
                    ring = self.rot[w]
                    other = ring[(ring.index(v) + 2) % 4]
                    rotations[i].append(edge_of(v, other))
                else:
                    rotations[i].append(edge_of(v, w))
        return OnePlaneDrawing(len(ids), edges, crossings, rotations, labels)
