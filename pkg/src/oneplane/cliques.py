"""Abstract graphs, clique search and Turán graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import _kernels
from .errors import BadParam, OPGSyntaxError, UnknownVertex


@dataclass(frozen=True)
class AbstractGraph:
    """Simple undirected graph on ``0..n-1`` with a canonical edge order."""

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise UnknownVertex(f"edge ({u}, {v}) leaves 0..{self.n - 1}")
            if u == v:
                raise BadParam(f"loop at {u}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def masks(self) -> list[int]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def degree_sequence(self) -> list[int]:
        return sorted((bin(m).count("1") for m in self.masks()), reverse=True)

    def find_clique(self, k: int) -> tuple[int, ...] | None:
        return find_clique(self, k)

    def has_clique(self, k: int) -> bool:
        return find_clique(self, k) is not None

    def clique_number(self) -> int:
        k = 1 if self.n else 0
        while k < self.n and self.has_clique(k + 1):
            k += 1
        return k

    def is_bipartite(self) -> bool:
        masks = self.masks()
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for v in range(self.n):
                    if masks[u] >> v & 1:
                        if color[v] < 0:
                            color[v] = 1 - color[u]
                            stack.append(v)
                        elif color[v] == color[u]:
                            return False
        return True


def find_clique(g: AbstractGraph, k: int) -> tuple[int, ...] | None:
    """Lexicographically least ``k``-clique of ``g``, or ``None``."""
    if k < 1:
        raise BadParam("clique size must be at least 1")
    if k > g.n:
        return None
    found = _kernels.find_clique(g.masks(), k)
    return None if found is None else tuple(found)


def has_clique(g: AbstractGraph, k: int) -> bool:
    return find_clique(g, k) is not None


def find_clique_naive(g: AbstractGraph, k: int) -> tuple[int, ...] | None:
    """Reference search over all ``k``-subsets in lexicographic order."""
    adj = set(g.edges)
    for sub in combinations(range(g.n), k):
        if all((a, b) in adj for a, b in combinations(sub, 2)):
            return sub
    return None


def turan_parts(n: int, r: int) -> list[int]:
    """Part sizes of the balanced complete ``r``-partite graph on ``n`` vertices."""
    if r < 1 or n < 0:
        raise BadParam("need r >= 1 and n >= 0")
    q, s = divmod(n, r)
    return [q + 1] * s + [q] * (r - s)


def turan_graph(n: int, k: int) -> AbstractGraph:
    """``T_{k-1}(n)``, the largest ``K_k``-free graph on ``n`` vertices."""
    if k < 2:
        raise BadParam("k must be at least 2")
    part = []
    for i, size in enumerate(turan_parts(n, k - 1)):
        part.extend([i] * size)
    edges = [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]]
    return AbstractGraph(n, tuple(edges))


def turan_size(n: int, k: int) -> int:
    """Maximum edges of a ``K_k``-free graph on ``n`` vertices (``k >= 2``)."""
    if k < 2:
        raise BadParam("k must be at least 2")
    parts = turan_parts(n, k - 1)
    return (n * n - sum(p * p for p in parts)) // 2


def parse_edge_list(text: str) -> AbstractGraph:
    """Header ``n m``, then one ``u v`` pair per line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise OPGSyntaxError("empty edge list")
    lineno, head = rows[0]
    if len(head) != 2 or not all(t.isdigit() for t in head):
        raise OPGSyntaxError("header must be 'n m'", lineno)
    n, m = int(head[0]), int(head[1])
    edges = []
    for lineno, toks in rows[1:]:
        if len(toks) != 2 or not all(t.isdigit() for t in toks):
            raise OPGSyntaxError("expected 'u v'", lineno)
        edges.append((int(toks[0]), int(toks[1])))
    g = AbstractGraph(n, tuple(edges))
    if len(edges) != m or g.m != m:
        raise OPGSyntaxError(f"header promises {m} distinct edges, found {g.m} in {len(edges)} lines")
    return g


def serialize_edge_list(g: AbstractGraph) -> str:
    return "\n".join([f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]) + "\n"
