"""Pure-Python kernels; the reference implementation for ``_ckernels``."""

from __future__ import annotations


def face_cycles(twin, nxt):
    """Partition darts into cycles of ``d -> nxt[twin[d]]``.

    Returns ``(face_of, walks)``; each walk starts at its smallest dart and
    walks are ordered by that dart.
    """
    count = len(twin)
    face_of = [-1] * count
    walks = []
    for start in range(count):
        if face_of[start] >= 0:
            continue
        fid = len(walks)
        walk = []
        d = start
        while face_of[d] < 0:
            face_of[d] = fid
            walk.append(d)
            d = nxt[twin[d]]
        walks.append(walk)
    return face_of, walks


def _extend(masks, cand, k, chosen):
    if k == 0:
        return True
    while cand:
        if cand.bit_count() < k:
            return False
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        chosen.append(v)
        if _extend(masks, cand & masks[v], k - 1, chosen):
            return True
        chosen.pop()
    return False


def find_clique(masks, k):
    """Lexicographically least k-clique of the graph given by adjacency
    bitmasks, as a sorted tuple, or None."""
    n = len(masks)
    if k <= 0:
        return ()
    chosen = []
    if _extend(masks, (1 << n) - 1, k, chosen):
        return tuple(chosen)
    return None


def _has_clique_in(masks, cand, k):
    return _extend(masks, cand, k, [])


def max_kfree_edges(n, k):
    """Maximum size of a K_k-free graph on n labelled vertices by exhaustive
    edge-by-edge search.

    Edges are decided row by row; a branch is cut when it cannot beat the
    incumbent or when a finished row leaves degrees out of non-increasing
    order (every graph has a relabelling with sorted degrees).
    """
    if n <= 1 or k <= 2:
        return 0
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    total = len(pairs)
    adj = [0] * n
    deg = [0] * n
    best = 0
    # rows whose last pair sits just before a given index
    row_end = {}
    pos = 0
    for i in range(n):
        pos += n - 1 - i
        row_end.setdefault(pos, []).append(i)

    def dfs(idx, edges):
        nonlocal best
        for i in row_end.get(idx, ()):
            if i >= 1 and deg[i] > deg[i - 1]:
                return
        if edges + (total - idx) <= best:
            return
        if idx == total:
            best = edges
            return
        i, j = pairs[idx]
        common = adj[i] & adj[j]
        if k == 3:
            blocked = common != 0
        else:
            blocked = _has_clique_in(adj, common, k - 2)
        if not blocked:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            deg[i] += 1
            deg[j] += 1
            dfs(idx + 1, edges + 1)
            adj[i] ^= 1 << j
            adj[j] ^= 1 << i
            deg[i] -= 1
            deg[j] -= 1
        dfs(idx + 1, edges)

    dfs(0, 0)
    return best
