"""Bound tables, certificates and brute-force oracles."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from math import comb

import networkx as nx
import planarity

from . import _kernels
from ._plane import PlaneBuilder
from .cliques import AbstractGraph, turan_size
from .drawing import Crossing, OnePlaneDrawing
from .errors import (
    BadParam,
    Disconnected,
    DrawingError,
    InvariantViolation,
    NotK4Free,
    RejectedByFilter,
    SearchExhausted,
    TooFewVertices,
)

TIGHT = "TightWithWitness"
UPPER_ONLY = "UpperOnly"
CONJECTURED = "ConjecturedLower"


@dataclass(frozen=True)
class BoundEntry:
    """Upper bound on the size of a K_k-free 1-planar graph of order n.

    ``tight`` is ``TightWithWitness``, ``UpperOnly`` or ``ConjecturedLower``;
    ``lower`` carries the conjectured value in the last case. ``witness``
    says where a matching graph comes from (``external`` when the witness is
    only cited, not produced here).
    """

    n: int
    k: int
    upper: int
    tight: str
    lower: int | None = None
    witness: str | None = None

    def status(self) -> str:
        if self.tight == CONJECTURED:
            return f"{CONJECTURED}({self.lower})"
        return self.tight


def general_bound(n: int) -> int:
    """Maximum size of any 1-planar graph of order ``n``."""
    if n <= 6:
        return comb(n, 2)
    if n in (7, 9):
        return 4 * n - 9
    return 4 * n - 8


def maxe_bound(n: int, k: int) -> BoundEntry:
    if n < 1 or k < 3:
        raise BadParam(f"need n >= 1 and k >= 3, got n={n}, k={k}")
    if k == 3:
        if n <= 3:
            return BoundEntry(n, k, turan_size(n, 3), TIGHT, witness="turan")
        upper = 3 * n - 8
        if n == 4:
            return BoundEntry(n, k, upper, TIGHT, witness="four-cycle")
        if n % 2:
            return BoundEntry(n, k, upper, CONJECTURED, lower=3 * n - 9, witness="external")
        if n >= 8:
            return BoundEntry(n, k, upper, TIGHT, witness="external")
        return BoundEntry(n, k, upper, UPPER_ONLY)
    if k == 4:
        if n <= 8:
            upper = n * n // 3 - n // 8
            return BoundEntry(n, k, upper, TIGHT, witness="fixture:maxe84" if n == 8 else "turan")
        return BoundEntry(n, k, 7 * n // 2 - 7, TIGHT, witness="k4-extremal")
    if k == 5:
        if n <= 7 or n == 9:
            upper = 3 * n * n // 8 - 3 * (n // 9)
            return BoundEntry(n, k, upper, TIGHT, witness="fixture:maxe95" if n == 9 else "turan")
        return BoundEntry(n, k, 4 * n - 8, TIGHT, witness="k5-optimal")
    if k == 6:
        return BoundEntry(n, k, min(general_bound(n), turan_size(n, 6)), UPPER_ONLY)
    upper = general_bound(n)
    if n == 7:
        return BoundEntry(n, k, upper, UPPER_ONLY)
    witness = "complete-graph" if n <= 6 else "fixture:maxe95" if n == 9 else "k5-optimal"
    return BoundEntry(n, k, upper, TIGHT, witness=witness)


# ---------------------------------------------------------------------------
# certificates

PASS, FAIL, NA = "pass", "fail", "n/a"
CHECKS = ("valid_drawing", "clique_free", "edge_count", "crossing_bounds")


@dataclass(frozen=True)
class Certificate:
    subject: str
    k: int
    n: int
    m: int
    x: int
    bound: BoundEntry
    checks: dict[str, str] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def verdict(self) -> str:
        return PASS if all(self.checks[c] != FAIL for c in CHECKS) else FAIL

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def extremal(self) -> bool:
        return self.passed and self.m == self.bound.upper

    def items(self) -> list[tuple[str, str]]:
        out = [
            ("subject", self.subject),
            ("k", str(self.k)),
            ("n", str(self.n)),
            ("m", str(self.m)),
            ("x", str(self.x)),
            ("bound", str(self.bound.upper)),
            ("bound_status", self.bound.status()),
            ("bound_witness", self.bound.witness or "none"),
        ]
        out += [(f"check.{c}", self.checks[c]) for c in CHECKS]
        out += [("verdict", self.verdict), ("extremal", str(self.extremal).lower())]
        out += [(f"note.{i}", note) for i, note in enumerate(self.notes)]
        return out

    def to_text(self) -> str:
        return "".join(f"{k}={v}\n" for k, v in self.items())


def digest(d: OnePlaneDrawing) -> str:
    return "sha256:" + hashlib.sha256(d.to_opg().encode()).hexdigest()


def certify(d: OnePlaneDrawing, k: int) -> Certificate:
    """Check ``d`` against the K_k-free bound; failures land in the certificate."""
    from .invariants import fake_structure_ok
    from .opg import parse

    bound = maxe_bound(max(d.n, 1), k)
    checks, notes = {}, []
    try:
        again = parse(d.to_opg())
        ok = again.to_opg() == d.to_opg() and fake_structure_ok(again)
        checks["valid_drawing"] = PASS if ok else FAIL
    except DrawingError as exc:
        checks["valid_drawing"] = FAIL
        notes.append(f"revalidation failed: {exc}")
    clique = d.abstract_graph().find_clique(k)
    checks["clique_free"] = PASS if clique is None else FAIL
    if clique is not None:
        notes.append(f"K{k} on {list(clique)}")
    checks["edge_count"] = PASS if d.m <= bound.upper else FAIL
    cap = max(d.n - 2, 0)
    crossing_ok = d.x <= cap
    if not crossing_ok:
        notes.append(f"{d.x} crossings exceed n-2 = {cap}")
    if k == 4 and clique is None and d.n >= 4 and d.is_connected():
        low = max(0, 2 * (d.m - 3 * d.n + 6))
        if d.x < low:
            crossing_ok = False
            notes.append(f"{d.x} crossings below the K4-free minimum {low}")
    checks["crossing_bounds"] = PASS if crossing_ok else FAIL
    return Certificate(digest(d), k, d.n, d.m, d.x, bound, checks, tuple(notes))


def crossing_lower_bound(d: OnePlaneDrawing) -> int:
    """Minimum crossings of a connected K4-free drawing: ``max(0, 2(m - 3n + 6))``."""
    if d.n < 4:
        raise TooFewVertices(f"need n >= 4, got {d.n}")
    if not d.is_connected():
        raise Disconnected(f"graph has {d.connectivity()} components")
    clique = d.abstract_graph().find_clique(4)
    if clique is not None:
        raise NotK4Free(f"K4 on {list(clique)}")
    low = max(0, 2 * (d.m - 3 * d.n + 6))
    if d.x < low:
        raise InvariantViolation(f"{d.x} crossings, fewer than the minimum {low}")
    return low


def turan_exhaustive(n: int, k: int) -> int:
    """Largest K_k-free graph on ``n <= 7`` labelled vertices, by exhaustive search."""
    if not 0 <= n <= 7:
        raise BadParam(f"exhaustive sweep supports 0 <= n <= 7, got {n}")
    if k < 2:
        raise BadParam("k must be at least 2")
    return _kernels.max_kfree_edges(n, k)


# ---------------------------------------------------------------------------
# drawing search


@dataclass(frozen=True)
class SearchLimits:
    """``max_crossings`` defaults to ``n - 2``, which every 1-planar drawing
    respects, so a search that stays within ``max_nodes`` is exhaustive."""

    max_crossings: int | None = None
    max_nodes: int = 100_000


def search_filter(g: AbstractGraph) -> str | None:
    """Reason ``g`` cannot be 1-planar by the edge bounds, or ``None``."""
    if g.n == 0:
        return None
    k = max(g.clique_number() + 1, 3)
    bound = maxe_bound(g.n, k)
    if g.m > bound.upper:
        return f"m={g.m} > {bound.upper} = maxe({g.n}, {k}), the K{k}-free 1-planar edge bound"
    return None


def _gadget_graph(g: AbstractGraph, pairs) -> tuple[nx.Graph, set]:
    """Planarization where each crossing becomes a wheel, forcing the four
    half-edges to leave the crossing in alternating order."""
    crossed = {e for pair in pairs for e in pair}
    H = nx.Graph()
    H.add_nodes_from(range(g.n))
    H.add_edges_from(e for e in g.edges if e not in crossed)
    for c, (e, f) in enumerate(pairs):
        hub = ("h", c)
        rim = [("r", c, i) for i in range(4)]
        for i in range(4):
            H.add_edge(hub, rim[i])
            H.add_edge(rim[i], rim[(i + 1) % 4])
        H.add_edge(e[0], rim[0])
        H.add_edge(f[0], rim[1])
        H.add_edge(e[1], rim[2])
        H.add_edge(f[1], rim[3])
    return H, crossed


def _obstruction_by_deletion(H: nx.Graph) -> list:
    """Edges of an edge-minimal nonplanar subgraph of the nonplanar ``H``.

    Deletes chunks of edges while the rest stays nonplanar, halving the
    chunk size on failure; every edge left is needed for nonplanarity.
    """
    kept = list(H.edges())
    size = max(1, len(kept) // 2)
    while True:
        i = 0
        while i < len(kept):
            trial = kept[:i] + kept[i + size:]
            if not planarity.is_planar(nx.Graph(trial)):
                kept = trial
            else:
                i += size
        if size == 1:
            return kept
        size //= 2


def _obstruction(H: nx.Graph) -> list:
    """Kuratowski subdivision in the nonplanar ``H``, from the edge-addition
    planarity library, with deletion as a fallback if its answer is planar."""
    edges = planarity.kuratowski_edges(H)
    if edges and not planarity.is_planar(nx.Graph(edges)):
        return edges
    return _obstruction_by_deletion(H)  # pragma: no cover


def _useful_pairs(kuratowski: list, crossed: set) -> list[tuple[tuple, tuple]]:
    """Crossing pairs that can destroy the given Kuratowski subdivision.

    If an uncrossed edge of the subdivision is crossed by an edge outside it,
    the subdivision survives through the new wheel's hub; if both edges lie
    on the same branch path it survives along the wheel's rim. So only two
    true edges on different branch paths can break it.
    """
    adj: dict = {}
    for a, b in kuratowski:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    path_of: dict = {}
    for a in adj:
        if len(adj[a]) < 3:
            continue
        for b in adj[a]:
            prev, cur, run = a, b, []
            run.append((prev, cur))
            while len(adj[cur]) == 2:
                nxt = adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
                prev, cur = cur, nxt
                run.append((prev, cur))
            pid = frozenset((a, cur, run[0][1], run[-1][0]))
            for u, v in run:
                if isinstance(u, int) and isinstance(v, int):
                    path_of[(min(u, v), max(u, v))] = pid
    edges = sorted(e for e in path_of if e not in crossed)
    return [
        (e, f)
        for i, e in enumerate(edges)
        for f in edges[i + 1:]
        if not set(e) & set(f) and path_of[e] != path_of[f]
    ]


def _from_embedding(g: AbstractGraph, pairs, emb) -> OnePlaneDrawing:
    b = PlaneBuilder()
    for _ in range(g.n):
        b.add_vertex()
    zs = [b.add_vertex(fake=True) for _ in pairs]
    attach = {}
    for c, (e, f) in enumerate(pairs):
        for i, end in enumerate((e[0], f[0], e[1], f[1])):
            attach["r", c, i] = end
    for u in range(g.n):
        ring = list(reversed(list(emb.neighbors_cw_order(u)))) if u in emb else []
        b.rot[u] = [w if isinstance(w, int) else zs[w[1]] for w in ring]
    for c in range(len(pairs)):
        hub_ring = list(reversed(list(emb.neighbors_cw_order(("h", c)))))
        b.rot[zs[c]] = [attach[r] for r in hub_ring]
    return b.to_drawing()


def _kuratowski_search(g: AbstractGraph, limits: SearchLimits) -> OnePlaneDrawing:
    cap = limits.max_crossings
    if cap is None:
        cap = max(g.n - 2, 0)
    full = cap >= max(g.n - 2, 0)
    edges = list(g.edges)
    # failures seen per crossing set: (budget, forbidden pairs). A failure
    # with budget b and forbidden set F rules out budget <= b with F' >= F.
    failed: dict[frozenset, list[tuple[int, frozenset]]] = {}
    nodes = 0
    truncated = False

    def dfs(pairs: tuple, budget: int, forbidden: frozenset) -> OnePlaneDrawing | None:
        nonlocal nodes, truncated
        key = frozenset(frozenset(p) for p in pairs)
        seen = failed.setdefault(key, [])
        if any(b >= budget and f <= forbidden for b, f in seen):
            return None
        nodes += 1
        if nodes > limits.max_nodes:
            truncated = True
            return None
        H, crossed = _gadget_graph(g, pairs)
        if planarity.is_planar(H):
            planar, cert = nx.check_planarity(H)
            if not planar:  # pragma: no cover - the two testers disagree
                raise InvariantViolation("planarity testers disagree")
            try:
                return _from_embedding(g, pairs, cert)
            except DrawingError:
                return _rotation_fallback(g, pairs, limits)
        if budget > 0:
            ruled_out = set(forbidden)
            for e, f in _useful_pairs(_obstruction(H), crossed):
                if (e, f) in ruled_out:
                    continue
                found = dfs(pairs + ((e, f),), budget - 1, frozenset(ruled_out))
                if found is not None or truncated:
                    return found
                ruled_out.add((e, f))
        seen.append((budget, forbidden))
        return None

    # a planarization with p crossings is a simple plane graph, so
    # m + 2p <= 3(n + p) - 6
    low = max(0, g.m - 3 * g.n + 6) if g.n >= 3 else 0
    for depth in range(low, cap + 1):
        found = dfs((), depth, frozenset())
        if found is not None:
            return found
        if truncated:
            raise SearchExhausted(f"node budget {limits.max_nodes} spent", complete=False)
    raise SearchExhausted(
        f"no 1-planar drawing with at most {cap} crossings", complete=full
    )


def _rotation_fallback(g: AbstractGraph, pairs, limits: SearchLimits) -> OnePlaneDrawing | None:
    """Enumerate rotation systems for one fixed crossing set."""
    index = {e: i for i, e in enumerate(g.edges)}
    X = [(index[e], index[f]) for e, f in pairs]
    try:
        return _enumerate_rotations(g, [X], limits.max_nodes)
    except SearchExhausted:
        return None


def _enumerate_rotations(g: AbstractGraph, crossing_sets, budget: int) -> OnePlaneDrawing | None:
    """First genus-0 drawing over the given crossing sets (edge-id pairs),
    both orientation bits per crossing and every rotation of every vertex."""
    edges = list(g.edges)
    rings = []
    for u in range(g.n):
        inc = [i for i, e in enumerate(edges) if u in e]
        if len(inc) <= 2:
            rings.append([tuple(inc)])
        else:
            rings.append([(inc[0],) + p for p in permutations(inc[1:])])
    for X in crossing_sets:
        for bits in product((True, False), repeat=len(X)):
            crossings = [Crossing(i, j, s) for (i, j), s in zip(X, bits)]
            for rot in product(*rings):
                budget -= 1
                if budget < 0:
                    raise SearchExhausted("rotation budget spent", complete=False)
                try:
                    return OnePlaneDrawing(g.n, edges, crossings, rot)
                except DrawingError:
                    continue
    return None


def _rotation_search(g: AbstractGraph, limits: SearchLimits) -> OnePlaneDrawing:
    cap = limits.max_crossings
    if cap is None:
        cap = max(g.n - 2, 0)
    edges = list(g.edges)
    cand = [
        (i, j) for i, j in combinations(range(len(edges)), 2)
        if not set(edges[i]) & set(edges[j])
    ]

    def matchings(start: int, used: frozenset, size: int):
        if size == 0:
            yield ()
            return
        for t in range(start, len(cand)):
            i, j = cand[t]
            if i in used or j in used:
                continue
            for rest in matchings(t + 1, used | {i, j}, size - 1):
                yield ((i, j),) + rest

    low = max(0, g.m - 3 * g.n + 6) if g.n >= 3 else 0
    sets = (X for size in range(low, cap + 1) for X in matchings(0, frozenset(), size))
    found = _enumerate_rotations(g, sets, limits.max_nodes)
    if found is None:
        raise SearchExhausted(
            f"no drawing with at most {cap} crossings", complete=cap >= g.n - 2
        )
    return found


def drawing_search(
    g: AbstractGraph, limits: SearchLimits | None = None, method: str = "kuratowski"
) -> OnePlaneDrawing:
    """Find a 1-plane drawing of ``g`` or raise ``SearchExhausted``.

    Edge-count filters reject first. The default method finds a Kuratowski
    subdivision of the current planarization and branches on crossing two of
    its edges that lie on different branch paths (no other crossing can
    destroy it), testing planarity with alternation forced by wheel gadgets.
    Planar gadget graphs are only a necessary condition, so each candidate
    is rebuilt and revalidated, with rotation enumeration as the fallback. ``method="rotations"`` enumerates rotation systems directly and
    is only practical for tiny graphs. Every result is a validated drawing
    whose abstract graph is ``g``.
    """
    limits = limits or SearchLimits()
    reason = search_filter(g)
    if reason:
        raise RejectedByFilter(reason)
    if method == "kuratowski":
        d = _kuratowski_search(g, limits)
    elif method == "rotations":
        d = _rotation_search(g, limits)
    else:
        raise BadParam(f"unknown search method {method!r}")
    if d.edges != g.edges:
        raise InvariantViolation("search returned a drawing of a different graph")
    return d
