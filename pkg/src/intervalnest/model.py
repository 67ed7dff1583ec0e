"""Interval models: origin/destination interval pairs with exact rational endpoints.

Arc ``u -> v`` is present exactly when ``I_u`` meets ``J_v``. Besides the
realization check this module classifies model shapes, removes degenerate
intervals without changing the modeled digraph, and reads a nest ordering
off a nest model by picking distinct points inside the destination intervals.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .digraph import Digraph
from .errors import ModelFormatError, NotNestModelError
from .ordering import Ordering

SHAPE_FLAGS = ("interval", "reflexive", "nest", "catch", "balanced",
               "chronological", "adjusted", "point")


@dataclass(frozen=True)
class RationalInterval:
    left: Fraction
    right: Fraction

    def __post_init__(self):
        object.__setattr__(self, "left", Fraction(self.left))
        object.__setattr__(self, "right", Fraction(self.right))
        if self.left > self.right:
            raise ValueError("interval [%s, %s] has left > right" % (self.left, self.right))

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def is_point(self) -> bool:
        return self.left == self.right

    def meets(self, other: "RationalInterval") -> bool:
        return max(self.left, other.left) <= min(self.right, other.right)

    def contains(self, other: "RationalInterval") -> bool:
        return self.left <= other.left and other.right <= self.right

    def __contains__(self, x) -> bool:
        return self.left <= x <= self.right

    def __str__(self):
        return "[%s, %s]" % (self.left, self.right)


@dataclass(frozen=True)
class IntervalModel:
    """``pairs[v - 1] = (I_v, J_v)``."""

    n: int
    pairs: tuple[tuple[RationalInterval, RationalInterval], ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((i, j) for i, j in self.pairs))
        if len(self.pairs) != self.n:
            raise ValueError("model lists %d interval pairs for n = %d" % (len(self.pairs), self.n))

    def origin(self, v: int) -> RationalInterval:
        return self.pairs[v - 1][0]

    def destination(self, v: int) -> RationalInterval:
        return self.pairs[v - 1][1]

    def intervals(self) -> Iterable[RationalInterval]:
        for i, j in self.pairs:
            yield i
            yield j

    @property
    def positive_length(self) -> bool:
        return all(iv.left < iv.right for iv in self.intervals())

    @property
    def nest(self) -> bool:
        return is_nest(self)


def make_model(pairs) -> IntervalModel:
    """Build from ``[((a, b), (alpha, beta)), ...]`` with any Fraction-compatible numbers."""
    built = tuple((RationalInterval(*i), RationalInterval(*j)) for i, j in pairs)
    return IntervalModel(len(built), built)


def digraph_of(m: IntervalModel) -> Digraph:
    arcs = frozenset(
        (u, v)
        for u in range(1, m.n + 1)
        for v in range(1, m.n + 1)
        if m.origin(u).meets(m.destination(v))
    )
    return Digraph(m.n, arcs)


@dataclass(frozen=True)
class RealizationReport:
    mismatches: tuple[tuple[int, int, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "mismatches": [{"arc": [u, v], "kind": kind} for u, v, kind in self.mismatches]}


def realizes(m: IntervalModel, d: Digraph) -> RealizationReport:
    """Compare the model's intersection digraph with ``d`` pair by pair."""
    if m.n != d.n:
        raise ValueError("model has %d vertices but the digraph has %d" % (m.n, d.n))
    bad = []
    for u in range(1, m.n + 1):
        for v in range(1, m.n + 1):
            meets = m.origin(u).meets(m.destination(v))
            arc = d.has_arc(u, v)
            if arc and not meets:
                bad.append((u, v, "arc-without-intersection"))
            elif meets and not arc:
                bad.append((u, v, "intersection-without-arc"))
    return RealizationReport(tuple(bad))


def is_nest(m: IntervalModel) -> bool:
    return all(i.contains(j) for i, j in m.pairs)


def shape_of(m: IntervalModel) -> frozenset[str]:
    """Shape flags the model satisfies at every vertex.

    ``catch`` needs the destination point strictly inside the origin;
    ``balanced`` needs it at the midpoint of an origin of positive length,
    so ``balanced`` implies ``catch``.
    """
    flags = {"interval"}
    pairs = m.pairs
    if all(i.meets(j) for i, j in pairs):
        flags.add("reflexive")
    if all(i.contains(j) for i, j in pairs):
        flags.add("nest")
    if all(j.is_point() for _, j in pairs):
        flags.add("point")
        if all(i.left < j.left < i.right for i, j in pairs):
            flags.add("catch")
            if all(2 * j.left == i.left + i.right for i, j in pairs):
                flags.add("balanced")
        if all(j.left == i.left for i, j in pairs):
            flags.add("chronological")
    if all(i.left == j.left for i, j in pairs):
        flags.add("adjusted")
    return frozenset(flags)


# -- positive-length perturbation ---------------------------------------------

def _endpoint_values(m: IntervalModel):
    lefts = {iv.left for iv in m.intervals()}
    rights = {iv.right for iv in m.intervals()}
    return lefts, rights


def _shift(m: IntervalModel, x: Fraction, eps: Fraction) -> IntervalModel:
    def move_left(t):
        return t + eps if t > x else t

    def move_right(t):
        return t + eps if t >= x else t

    def move(iv):
        return RationalInterval(move_left(iv.left), move_right(iv.right))

    return IntervalModel(m.n, tuple((move(i), move(j)) for i, j in m.pairs))


def perturb_positive(m: IntervalModel) -> IntervalModel:
    """Equivalent model in which every interval has positive length.

    Models that are already positive come back unchanged. Otherwise, scanning
    left to right, each value that is both a left and a right endpoint is
    split: right endpoints at that value and all larger endpoints move up by
    half the smallest gap between distinct endpoint values.
    """
    if m.positive_length:
        return m
    while True:
        lefts, rights = _endpoint_values(m)
        shared = lefts & rights
        if not shared:
            return m
        x = min(shared)
        values = sorted(lefts | rights)
        gaps = [b - a for a, b in zip(values, values[1:])]
        eps = min(gaps) / 2 if gaps else Fraction(1, 2)
        m = _shift(m, x, eps)


def extract_ordering(m: IntervalModel) -> tuple[Ordering, dict[int, Fraction]]:
    """A nest ordering of ``digraph_of(m)`` read off the nest model ``m``.

    After :func:`perturb_positive`, vertices are processed by
    ``(right(J), left(J), label)`` and each gets the point
    ``max(left(J_v), previous + delta)`` with ``delta = g / (2n)``, ``g``
    the shortest destination length. Every point lies strictly inside its
    destination interval and points strictly increase in processing order.
    The returned points refer to the perturbed model.
    """
    if not is_nest(m):
        raise NotNestModelError("extract_ordering needs a nest model (J_v inside I_v for all v)")
    n = m.n
    if n == 0:
        return Ordering(()), {}
    pm = perturb_positive(m)
    g = min(j.length for _, j in pm.pairs)
    delta = g / (2 * n)
    order = sorted(range(1, n + 1),
                   key=lambda v: (pm.destination(v).right, pm.destination(v).left, v))
    points = {}
    prev = None
    for v in order:
        j = pm.destination(v)
        p = j.left if prev is None else max(j.left, prev + delta)
        points[v] = p
        prev = p
    return Ordering(tuple(order)), points


# -- JSON ----------------------------------------------------------------------

_RATIONAL = re.compile(r"^(-?(?:0|[1-9][0-9]*))/([1-9][0-9]*)$")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


def parse_rational(text) -> Fraction:
    """Strict inverse of :func:`format_rational`: reduced, positive denominator, no signs on zero."""
    if not isinstance(text, str):
        raise ModelFormatError("rational must be a string 'num/den', got %r" % (text,))
    match = _RATIONAL.match(text)
    if not match:
        raise ModelFormatError("malformed rational %r (expected 'num/den', denominator > 0)" % text)
    num, den = int(match.group(1)), int(match.group(2))
    q = Fraction(num, den)
    if q.numerator != num or q.denominator != den or text == "-0/1":
        raise ModelFormatError("rational %r is not in lowest terms" % text)
    return q


def model_to_json(m: IntervalModel) -> dict:
    return {
        "n": m.n,
        "intervals": [
            {"I": [format_rational(i.left), format_rational(i.right)],
             "J": [format_rational(j.left), format_rational(j.right)]}
            for i, j in m.pairs
        ],
    }


def dumps_model(m: IntervalModel) -> str:
    return json.dumps(model_to_json(m), sort_keys=True)


def model_from_json(data) -> IntervalModel:
    if not isinstance(data, dict):
        raise ModelFormatError("model must be a JSON object")
    n = data.get("n")
    items = data.get("intervals")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ModelFormatError("field 'n' must be a non-negative integer")
    if not isinstance(items, list) or len(items) != n:
        raise ModelFormatError("field 'intervals' must be a list of %d entries" % n)
    pairs = []
    for idx, item in enumerate(items, 1):
        if not isinstance(item, dict):
            raise ModelFormatError("intervals[%d] must be an object" % idx)
        built = []
        for key in ("I", "J"):
            ends = item.get(key)
            if not isinstance(ends, list) or len(ends) != 2:
                raise ModelFormatError("intervals[%d].%s must be a two-element list" % (idx, key))
            try:
                lo, hi = (parse_rational(t) for t in ends)
            except ModelFormatError as exc:
                raise ModelFormatError("intervals[%d].%s: %s" % (idx, key, exc)) from None
            if lo > hi:
                raise ModelFormatError("intervals[%d].%s has left > right" % (idx, key))
            built.append(RationalInterval(lo, hi))
        pairs.append(tuple(built))
    return IntervalModel(n, tuple(pairs))


def loads_model(text: str) -> IntervalModel:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelFormatError("invalid JSON: %s" % exc) from None
    return model_from_json(data)


# -- seeded instance generators ------------------------------------------------

def random_nest_model(n: int, seed: int, grid: int = 12, denominator: int = 3,
                      degenerate: bool = False) -> IntervalModel:
    """Seeded nest model on ``grid * denominator`` equally spaced values.

    Origins are random; destinations are random intervals clamped into the
    origin. With ``degenerate`` at least one interval is forced to a point.
    """
    rng = random.Random(seed)
    top = grid * denominator

    def value():
        return Fraction(rng.randint(0, top), denominator)

    pairs = []
    for _ in range(n):
        a, b = sorted((value(), value()))
        lo, hi = sorted((value(), value()))
        lo = min(max(lo, a), b)
        hi = min(max(hi, a), b)
        pairs.append([a, b, lo, hi])
    if degenerate and n:
        v = rng.randrange(n)
        a, b, lo, hi = pairs[v]
        if rng.random() < 0.5:
            p = Fraction(rng.randint(int(a * denominator), int(b * denominator)), denominator)
            pairs[v] = [a, b, p, p]
        else:
            pairs[v] = [a, a, a, a]
    return make_model(((a, b), (lo, hi)) for a, b, lo, hi in pairs)
