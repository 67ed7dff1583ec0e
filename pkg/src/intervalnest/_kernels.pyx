# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled nest-ordering kernels.

Vertices are 0-based indices into a row-major ``n * n`` adjacency buffer.
Every function here has a line-for-line twin in ``_kernels_py``.
"""

cdef enum:
    MAXN = 16


cdef inline bint _arc(const unsigned char[:] adj, int n, int a, int b) nogil:
    return adj[a * n + b] != 0


cdef inline bint _sym(const unsigned char[:] adj, int n, int a, int b) nogil:
    return adj[a * n + b] != 0 and adj[b * n + a] != 0


cdef bint _quad_ok(const unsigned char[:] adj, int n, int u, int v, int w, int z) nogil:
    if _arc(adj, n, u, w) and _arc(adj, n, u, z):
        if not (_arc(adj, n, u, v) or (_sym(adj, n, v, w) and _sym(adj, n, v, z)
                                       and _sym(adj, n, w, z))):
            return False
    if _arc(adj, n, z, u) and _arc(adj, n, z, v):
        if not (_arc(adj, n, z, w) or (_sym(adj, n, w, u) and _sym(adj, n, v, u)
                                       and _sym(adj, n, w, v))):
            return False
    if _arc(adj, n, u, z) and _arc(adj, n, v, w):
        if not (_arc(adj, n, u, w) or _arc(adj, n, v, z)):
            return False
    if _arc(adj, n, z, u) and _arc(adj, n, w, v):
        if not (_arc(adj, n, z, v) or _arc(adj, n, w, u)):
            return False
    if _arc(adj, n, u, w) and _arc(adj, n, v, z):
        if not (_arc(adj, n, v, w) or _arc(adj, n, u, z)):
            return False
    if _arc(adj, n, z, v) and _arc(adj, n, w, u):
        if not (_arc(adj, n, z, u) or _arc(adj, n, w, v)):
            return False
    return True


cdef bint _extends(const unsigned char[:] adj, int n, int* seq, int k) nogil:
    # quadruples of positions i <= j <= l <= k whose last slot is k
    cdef int i, j, l
    cdef int z = seq[k]
    for i in range(k + 1):
        for j in range(i, k + 1):
            for l in range(j, k + 1):
                if not _quad_ok(adj, n, seq[i], seq[j], seq[l], z):
                    return False
    return True


cdef bint _reflexive(const unsigned char[:] adj, int n) nogil:
    cdef int v
    for v in range(n):
        if adj[v * n + v] == 0:
            return False
    return True


def _check_args(adj, int n):
    if n < 0 or n > MAXN:
        raise ValueError("kernel supports 0 <= n <= %d" % MAXN)
    if len(adj) != n * n:
        raise ValueError("adjacency buffer has length %d, expected %d" % (len(adj), n * n))


def nest_ok(const unsigned char[:] adj, int n, order):
    """True iff the digraph is reflexive and ``order`` satisfies the nest properties."""
    _check_args(adj, n)
    cdef int seq[MAXN]
    cdef int k
    cdef bint ok = True
    if len(order) != n:
        raise ValueError("order has wrong length")
    for k in range(n):
        seq[k] = order[k]
        if seq[k] < 0 or seq[k] >= n:
            raise ValueError("order entry out of range")
    if not _reflexive(adj, n):
        return False
    with nogil:
        for k in range(n):
            if not _extends(adj, n, seq, k):
                ok = False
                break
    return ok


cdef long _search(const unsigned char[:] adj, int n, int* seq, bint* used, int k,
                  bint first_only) nogil:
    cdef int x
    cdef long total = 0
    if k == n:
        return 1
    for x in range(n):
        if used[x]:
            continue
        seq[k] = x
        if _extends(adj, n, seq, k):
            used[x] = True
            total += _search(adj, n, seq, used, k + 1, first_only)
            used[x] = False
            if first_only and total:
                return total
    return total


def first_nest_ordering(const unsigned char[:] adj, int n):
    """Lexicographically smallest nest ordering as a tuple of indices, or None."""
    _check_args(adj, n)
    cdef int seq[MAXN]
    cdef bint used[MAXN]
    cdef int k
    cdef long found
    if not _reflexive(adj, n):
        return None
    for k in range(n):
        used[k] = False
    with nogil:
        found = _search(adj, n, seq, used, 0, True)
    if not found:
        return None
    return tuple(seq[k] for k in range(n))


def count_nest_orderings(const unsigned char[:] adj, int n):
    """Number of nest orderings (0 for non-reflexive input)."""
    _check_args(adj, n)
    cdef int seq[MAXN]
    cdef bint used[MAXN]
    cdef int k
    cdef long total
    if not _reflexive(adj, n):
        return 0
    for k in range(n):
        used[k] = False
    with nogil:
        total = _search(adj, n, seq, used, 0, False)
    return total
