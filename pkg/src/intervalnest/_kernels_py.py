"""Pure-Python twin of the compiled ``_kernels`` module.

Same signatures, same results; used when the extension is not built or
when ``INTERVALNEST_PURE_PYTHON`` is set.
"""

MAXN = 16


def _check_args(adj, n):
    if n < 0 or n > MAXN:
        raise ValueError("kernel supports 0 <= n <= %d" % MAXN)
    if len(adj) != n * n:
        raise ValueError("adjacency buffer has length %d, expected %d" % (len(adj), n * n))


def _quad_ok(adj, n, u, v, w, z):
    def arc(a, b):
        return adj[a * n + b] != 0

    def sym(a, b):
        return adj[a * n + b] != 0 and adj[b * n + a] != 0

    if arc(u, w) and arc(u, z):
        if not (arc(u, v) or (sym(v, w) and sym(v, z) and sym(w, z))):
            return False
    if arc(z, u) and arc(z, v):
        if not (arc(z, w) or (sym(w, u) and sym(v, u) and sym(w, v))):
            return False
    if arc(u, z) and arc(v, w):
        if not (arc(u, w) or arc(v, z)):
            return False
    if arc(z, u) and arc(w, v):
        if not (arc(z, v) or arc(w, u)):
            return False
    if arc(u, w) and arc(v, z):
        if not (arc(v, w) or arc(u, z)):
            return False
    if arc(z, v) and arc(w, u):
        if not (arc(z, u) or arc(w, v)):
            return False
    return True


def _extends(adj, n, seq, k):
    z = seq[k]
    for i in range(k + 1):
        for j in range(i, k + 1):
            for l in range(j, k + 1):
                if not _quad_ok(adj, n, seq[i], seq[j], seq[l], z):
                    return False
    return True


def _reflexive(adj, n):
    return all(adj[v * n + v] for v in range(n))


def nest_ok(adj, n, order):
    """True iff the digraph is reflexive and ``order`` satisfies the nest properties."""
    _check_args(adj, n)
    if len(order) != n:
        raise ValueError("order has wrong length")
    seq = list(order)
    if any(not 0 <= x < n for x in seq):
        raise ValueError("order entry out of range")
    if not _reflexive(adj, n):
        return False
    return all(_extends(adj, n, seq, k) for k in range(n))


def _search(adj, n, seq, used, k, first_only):
    if k == n:
        return 1
    total = 0
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


def first_nest_ordering(adj, n):
    """Lexicographically smallest nest ordering as a tuple of indices, or None."""
    _check_args(adj, n)
    if not _reflexive(adj, n):
        return None
    seq = [0] * n
    if not _search(adj, n, seq, [False] * n, 0, True):
        return None
    return tuple(seq)


def count_nest_orderings(adj, n):
    """Number of nest orderings (0 for non-reflexive input)."""
    _check_args(adj, n)
    if not _reflexive(adj, n):
        return 0
    return _search(adj, n, [0] * n, [False] * n, 0, False)
