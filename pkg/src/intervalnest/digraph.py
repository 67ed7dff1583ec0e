"""Labeled digraphs on vertices ``1..n`` with loops allowed.

Arcs are stored both as a frozenset of pairs and as a flat row-major
adjacency byte string, which is what the search kernels consume.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import BoundExceededError, DigraphError, EdgeListError

Arc = tuple[int, int]

#: Largest n accepted by :func:`enumerate_digraphs`, keyed by ``reflexive_only``.
ENUMERATION_BOUND = {True: 4, False: 3}


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[Arc]
    adjacency: bytes = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.n
        adj = bytearray(n * n)
        for u, v in self.arcs:
            adj[(u - 1) * n + v - 1] = 1
        object.__setattr__(self, "adjacency", bytes(adj))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_arc(self, u: int, v: int) -> bool:
        return self.adjacency[(u - 1) * self.n + v - 1] == 1

    def has_loop(self, v: int) -> bool:
        return self.has_arc(v, v)

    def out_neighbors(self, u: int) -> frozenset[int]:
        n = self.n
        row = self.adjacency[(u - 1) * n:u * n]
        return frozenset(i + 1 for i, b in enumerate(row) if b)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def transpose(self) -> "Digraph":
        return Digraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def relabel(self, mapping) -> "Digraph":
        """Image of the digraph under ``mapping`` (old label -> new label)."""
        return Digraph(self.n, frozenset((mapping[u], mapping[v]) for u, v in self.arcs))

    def __str__(self):
        return "Digraph(n=%d, arcs=%s)" % (self.n, self.sorted_arcs())


def new_digraph(n: int, arcs: Iterable[Arc] = ()) -> Digraph:
    """Build a digraph, collapsing duplicate arcs.

    Raises :class:`DigraphError` for a negative ``n`` or an endpoint
    outside ``1..n``.
    """
    if not isinstance(n, int) or n < 0:
        raise DigraphError("vertex count must be a non-negative integer, got %r" % (n,))
    checked = set()
    for pair in arcs:
        try:
            u, v = pair
        except (TypeError, ValueError):
            raise DigraphError("arc %r is not an ordered pair" % (pair,)) from None
        if not (isinstance(u, int) and isinstance(v, int) and 1 <= u <= n and 1 <= v <= n):
            raise DigraphError("arc %r has an endpoint outside 1..%d" % ((u, v), n))
        checked.add((u, v))
    return Digraph(n, frozenset(checked))


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, frozenset((u, v) for u in range(1, n + 1) for v in range(1, n + 1)))


def is_reflexive(d: Digraph) -> bool:
    return all(d.has_loop(v) for v in d.vertices)


def loopless_vertices(d: Digraph) -> list[int]:
    return [v for v in d.vertices if not d.has_loop(v)]


def symmetric_arcs(d: Digraph) -> frozenset[Arc]:
    """Arcs whose reverse is also an arc; every loop qualifies."""
    return frozenset((u, v) for u, v in d.arcs if d.has_arc(v, u))


def random_digraph(n: int, arc_probability: float, seed: int,
                   force_reflexive: bool = False) -> Digraph:
    """Seeded G(n, p) digraph.

    One uniform draw is consumed per ordered pair in row-major order,
    loops included, so the stream does not depend on ``force_reflexive``.
    """
    if not 0.0 <= arc_probability <= 1.0:
        raise DigraphError("arc probability must lie in [0, 1], got %r" % (arc_probability,))
    rng = random.Random(seed)
    arcs = set()
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            hit = rng.random() < arc_probability
            if u == v and force_reflexive:
                hit = True
            if hit:
                arcs.add((u, v))
    return Digraph(n, frozenset(arcs))


def _optional_pairs(n: int, reflexive_only: bool) -> list[Arc]:
    return [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)
            if not (reflexive_only and u == v)]


def enumerate_digraphs(n: int, reflexive_only: bool = True) -> Iterator[Digraph]:
    """Yield every labeled digraph on ``n`` vertices exactly once.

    With ``reflexive_only`` all loops are fixed present. The i-th digraph
    has the arcs selected by the bits of i over the optional pairs in
    row-major order.
    """
    bound = ENUMERATION_BOUND[bool(reflexive_only)]
    if n > bound:
        raise BoundExceededError(
            "exhaustive enumeration (reflexive_only=%s)" % bool(reflexive_only), n, bound)
    pairs = _optional_pairs(n, reflexive_only)
    loops = frozenset((v, v) for v in range(1, n + 1)) if reflexive_only else frozenset()
    for mask in range(1 << len(pairs)):
        chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield Digraph(n, loops | frozenset(chosen))


def count_digraphs(n: int, reflexive_only: bool = True) -> int:
    return 1 << len(_optional_pairs(n, reflexive_only))


# -- edge-list text format ----------------------------------------------------

def parse_edge_list(text: str) -> Digraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` lines and blank lines are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise EdgeListError("expected two integers, got %r" % line, lineno)
        try:
            rows.append((lineno, int(fields[0]), int(fields[1])))
        except ValueError:
            raise EdgeListError("expected two integers, got %r" % line, lineno) from None
    if not rows:
        raise EdgeListError("missing header line 'n m'")
    head_line, n, m = rows[0]
    if n < 0 or m < 0:
        raise EdgeListError("header values must be non-negative", head_line)
    body = rows[1:]
    if len(body) != m:
        raise EdgeListError("header announces %d arcs but %d arc lines follow" % (m, len(body)),
                            head_line)
    arcs = []
    for lineno, u, v in body:
        if not (1 <= u <= n and 1 <= v <= n):
            raise EdgeListError("arc (%d, %d) has an endpoint outside 1..%d" % (u, v, n), lineno)
        arcs.append((u, v))
    return new_digraph(n, arcs)


def format_edge_list(d: Digraph) -> str:
    arcs = d.sorted_arcs()
    lines = ["%d %d" % (d.n, len(arcs))]
    lines.extend("%d %d" % a for a in arcs)
    return "\n".join(lines) + "\n"
