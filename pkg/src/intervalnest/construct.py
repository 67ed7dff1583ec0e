"""Interval model of a reflexive digraph from one of its nest orderings.

Vertices are identified with their positions ``1..n`` under the ordering,
with two isolated auxiliary vertices at positions ``0`` and ``n + 1``.
For a vertex at position ``x``:

* ``sigma_r(x)`` is the first position right of ``x`` that is not an
  out-neighbor, ``sigma_l(x)`` the last such position on the left;
* ``tail_r(x)`` holds the out-neighbors beyond ``sigma_r(x)``,
  ``tail_l(x)`` those before ``sigma_l(x)``;
* ``I_x = [sigma_l + 1/(2 + |tail_l|), sigma_r - 1/(2 + |tail_r|)]``;
* ``J_x`` spans from the smallest right end ``b_z`` over in-neighbors
  ``z < x`` to the largest left end ``a_z`` over in-neighbors ``z > x``,
  and always contains ``x`` itself.

All arithmetic is exact (:class:`fractions.Fraction`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph, is_reflexive, loopless_vertices
from .errors import InvariantError, NotNestOrderingError, NotReflexiveError, OrderingError
from .model import IntervalModel, RationalInterval, realizes
from .ordering import Ordering, check_nest_ordering


@dataclass(frozen=True)
class VertexStops:
    position: int
    sigma_r: int
    sigma_l: int
    tail_r: frozenset[int]
    tail_l: frozenset[int]


@dataclass(frozen=True)
class StopData:
    """Stop functions and tails, indexed by vertex label; values are positions."""

    n: int
    order: Ordering
    by_vertex: dict

    def __getitem__(self, v: int) -> VertexStops:
        return self.by_vertex[v]

    def at_position(self, p: int) -> VertexStops:
        return self.by_vertex[self.order.vertex_at(p)]


def _check_inputs(d: Digraph, order: Ordering):
    if order.n != d.n:
        raise OrderingError("ordering has %d vertices but the digraph has %d" % (order.n, d.n))
    if not is_reflexive(d):
        raise NotReflexiveError(loopless_vertices(d))


def _out_positions(d: Digraph, order: Ordering, v: int) -> set[int]:
    return {order.position(w) for w in d.out_neighbors(v)}


def compute_stops(d: Digraph, order: Ordering) -> StopData:
    _check_inputs(d, order)
    n = d.n
    by_vertex = {}
    for v in d.vertices:
        x = order.position(v)
        out = _out_positions(d, order, v)
        sigma_r = next(z for z in range(x + 1, n + 2) if z not in out)
        sigma_l = next(z for z in range(x - 1, -2, -1) if z not in out)
        by_vertex[v] = VertexStops(
            position=x,
            sigma_r=sigma_r,
            sigma_l=sigma_l,
            tail_r=frozenset(z for z in out if z > sigma_r),
            tail_l=frozenset(z for z in out if z < sigma_l),
        )
    return StopData(n, order, by_vertex)


def build_model_unchecked(d: Digraph, order: Ordering) -> IntervalModel:
    """Evaluate the endpoint formulas without checking the ordering or the result.

    Only reflexivity is enforced. For a non-nest ordering the model need
    not realize ``d`` or be nested.
    """
    stops = compute_stops(d, order)
    n = d.n
    a = {}
    b = {}
    for v in d.vertices:
        s = stops[v]
        a[v] = s.sigma_l + Fraction(1, 2 + len(s.tail_l))
        b[v] = s.sigma_r - Fraction(1, 2 + len(s.tail_r))
    # second pass: J endpoints read a and b of other vertices
    pairs = []
    for v in d.vertices:
        x = order.position(v)
        alpha = Fraction(x)
        beta = Fraction(x)
        for z in d.vertices:
            if z == v or not d.has_arc(z, v):
                continue
            if order.position(z) < x:
                alpha = min(alpha, b[z])
            else:
                beta = max(beta, a[z])
        pairs.append((RationalInterval(a[v], b[v]), RationalInterval(alpha, beta)))
    return IntervalModel(n, tuple(pairs))


def build_model(d: Digraph, order: Ordering) -> IntervalModel:
    """Nest interval model realizing ``d``, built from the nest ordering ``order``.

    Raises :class:`NotNestOrderingError` (carrying the full report) when
    ``order`` is not a nest ordering. The result is validated before it is
    returned; a failed validation raises :class:`InvariantError`.
    """
    _check_inputs(d, order)
    report = check_nest_ordering(d, order)
    if not report.ok:
        raise NotNestOrderingError(report)
    model = build_model_unchecked(d, order)
    for v, (i_v, j_v) in enumerate(model.pairs, 1):
        if not i_v.contains(j_v):
            raise InvariantError("J_%d = %s is not inside I_%d = %s" % (v, j_v, v, i_v))
    check = realizes(model, d)
    if not check.ok:
        raise InvariantError("constructed model does not realize the digraph: %s"
                             % (check.mismatches,))
    return model


def tails_nested(stops: StopData) -> list[tuple[str, int, int]]:
    """Pairs with equal stops whose tails are not comparable under inclusion.

    Empty for every nest ordering.
    """
    bad = []
    verts = sorted(stops.by_vertex)
    for i, x in enumerate(verts):
        sx = stops[x]
        for y in verts[i + 1:]:
            sy = stops[y]
            if sx.sigma_r == sy.sigma_r and not (sx.tail_r <= sy.tail_r or sy.tail_r <= sx.tail_r):
                bad.append(("right", x, y))
            if sx.sigma_l == sy.sigma_l and not (sx.tail_l <= sy.tail_l or sy.tail_l <= sx.tail_l):
                bad.append(("left", x, y))
    return bad
