# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; must agree exactly with ``_pykernels``.

Bitset routines use 64-bit masks and therefore handle at most 64 vertices;
the dispatcher routes larger graphs to the Python kernels.
"""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popcount(u64 x) nogil:
    return __builtin_popcountll(x)


cdef inline int _ctz(u64 x) nogil:
    return __builtin_ctzll(x)


def face_cycles(twin, nxt):
    cdef Py_ssize_t count = len(twin)
    cdef Py_ssize_t i, start, d
    cdef long *tw = <long *> malloc(count * sizeof(long) + 1)
    cdef long *nx = <long *> malloc(count * sizeof(long) + 1)
    cdef long *fo = <long *> malloc(count * sizeof(long) + 1)
    cdef long fid = 0
    walks = []
    try:
        for i in range(count):
            tw[i] = twin[i]
            nx[i] = nxt[i]
            fo[i] = -1
        for start in range(count):
            if fo[start] >= 0:
                continue
            walk = []
            d = start
            while fo[d] < 0:
                fo[d] = fid
                walk.append(d)
                d = nx[tw[d]]
            walks.append(walk)
            fid += 1
        face_of = [fo[i] for i in range(count)]
    finally:
        free(tw)
        free(nx)
        free(fo)
    return face_of, walks


cdef bint _extend(u64 *masks, u64 cand, int k, int *chosen, int depth) nogil:
    cdef u64 low
    cdef int v
    if k == 0:
        return True
    while cand:
        if _popcount(cand) < k:
            return False
        v = _ctz(cand)
        low = (<u64> 1) << v
        cand ^= low
        chosen[depth] = v
        if _extend(masks, cand & masks[v], k - 1, chosen, depth + 1):
            return True
    return False


def find_clique(masks, int k):
    cdef int n = len(masks)
    cdef u64 cm[64]
    cdef int chosen[64]
    cdef int i
    cdef u64 full
    if n > 64:
        raise ValueError("at most 64 vertices")
    if k <= 0:
        return ()
    if k > 64:
        return None
    for i in range(n):
        cm[i] = masks[i]
    full = (~(<u64> 0)) if n == 64 else (((<u64> 1) << n) - 1)
    if _extend(cm, full, k, chosen, 0):
        return tuple(chosen[i] for i in range(k))
    return None


cdef struct _Search:
    int n
    int k
    int total
    int best
    int *pi
    int *pj
    int *rows_start
    int *rows_list
    u64 adj[64]
    int deg[64]


cdef void _dfs(_Search *s, int idx, int edges) nogil:
    cdef int r, i, j, a, b
    cdef u64 common
    cdef int scratch[64]
    cdef bint blocked
    for r in range(s.rows_start[idx], s.rows_start[idx + 1]):
        i = s.rows_list[r]
        if i >= 1 and s.deg[i] > s.deg[i - 1]:
            return
    if edges + (s.total - idx) <= s.best:
        return
    if idx == s.total:
        s.best = edges
        return
    i = s.pi[idx]
    j = s.pj[idx]
    common = s.adj[i] & s.adj[j]
    if s.k == 3:
        blocked = common != 0
    else:
        blocked = _extend(s.adj, common, s.k - 2, scratch, 0)
    if not blocked:
        s.adj[i] |= (<u64> 1) << j
        s.adj[j] |= (<u64> 1) << i
        s.deg[i] += 1
        s.deg[j] += 1
        _dfs(s, idx + 1, edges + 1)
        s.adj[i] ^= (<u64> 1) << j
        s.adj[j] ^= (<u64> 1) << i
        s.deg[i] -= 1
        s.deg[j] -= 1
    _dfs(s, idx + 1, edges)


def max_kfree_edges(int n, int k):
    cdef _Search s
    cdef int i, j, idx, pos, r
    if n <= 1 or k <= 2:
        return 0
    if n > 64:
        raise ValueError("at most 64 vertices")
    s.n = n
    s.k = k
    s.total = n * (n - 1) // 2
    s.best = 0
    s.pi = <int *> malloc(s.total * sizeof(int))
    s.pj = <int *> malloc(s.total * sizeof(int))
    s.rows_start = <int *> malloc((s.total + 2) * sizeof(int))
    s.rows_list = <int *> malloc(n * sizeof(int))
    try:
        idx = 0
        for i in range(n):
            s.adj[i] = 0
            s.deg[i] = 0
            for j in range(i + 1, n):
                s.pi[idx] = i
                s.pj[idx] = j
                idx += 1
        # rows_list[rows_start[t]:rows_start[t+1]] = rows ending just before t
        row_at = [[] for _ in range(s.total + 1)]
        pos = 0
        for i in range(n):
            pos += n - 1 - i
            row_at[pos].append(i)
        r = 0
        for idx in range(s.total + 1):
            s.rows_start[idx] = r
            for i in row_at[idx]:
                s.rows_list[r] = i
                r += 1
        s.rows_start[s.total + 1] = r
        _dfs(&s, 0, 0)
        return s.best
    finally:
        free(s.pi)
        free(s.pj)
        free(s.rows_start)
        free(s.rows_list)
