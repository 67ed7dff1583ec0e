"""Vertex orderings, the nest-ordering properties and forbidden-pattern catalogs.

Two independent routes decide whether an ordering is a nest ordering:
:func:`check_nest_ordering` evaluates the six closure statements over every
non-decreasing quadruple of positions, and :func:`check_pattern_free` runs
the generic pattern engine over :func:`nest_patterns`. They are kept apart
on purpose so that each checks the other.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .digraph import Digraph, is_reflexive, loopless_vertices
from .errors import NotReflexiveError, OrderingError

NEST_RULES = ("i-first", "i-second", "ii-first", "ii-second", "iii-first", "iii-second")

CLASS_NAMES = ("adjusted", "catch", "point", "balanced", "chronological",
               "reflexive_interval", "nest")


@dataclass(frozen=True)
class Ordering:
    """A permutation of ``1..n``; ``labels[p - 1]`` sits at position ``p``."""

    labels: tuple[int, ...]
    _position: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        n = len(labels)
        if sorted(labels) != list(range(1, n + 1)):
            raise OrderingError("ordering %r is not a permutation of 1..%d" % (labels, n))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_position", {v: p for p, v in enumerate(labels, 1)})

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.labels)

    def position(self, v: int) -> int:
        return self._position[v]

    def vertex_at(self, p: int) -> int:
        return self.labels[p - 1]

    def reversed(self) -> "Ordering":
        return Ordering(self.labels[::-1])

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)


def parse_order(text: str) -> Ordering:
    """Parse ``"1,3,2"`` (labels in position order)."""
    try:
        labels = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise OrderingError("order must be comma-separated integers, got %r" % (text,)) from None
    return Ordering(labels)


def _require_same_size(d: Digraph, order: Ordering):
    if order.n != d.n:
        raise OrderingError("ordering has %d vertices but the digraph has %d" % (order.n, d.n))


@dataclass(frozen=True)
class OrderingReport:
    violations: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [{"rule": rule, "witness": list(w)} for rule, w in self.violations],
        }


# -- nest-ordering properties -------------------------------------------------

def nest_failures(arc, u, v, w, z) -> list[str]:
    """Rules among the six statements failing for ``u <= v <= w <= z``.

    ``arc(a, b)`` is the adjacency predicate.
    """
    def sym(a, b):
        return arc(a, b) and arc(b, a)

    failed = []
    if arc(u, w) and arc(u, z) and not (arc(u, v) or (sym(v, w) and sym(v, z) and sym(w, z))):
        failed.append("i-first")
    if arc(z, u) and arc(z, v) and not (arc(z, w) or (sym(w, u) and sym(v, u) and sym(w, v))):
        failed.append("i-second")
    if arc(u, z) and arc(v, w) and not (arc(u, w) or arc(v, z)):
        failed.append("ii-first")
    if arc(z, u) and arc(w, v) and not (arc(z, v) or arc(w, u)):
        failed.append("ii-second")
    if arc(u, w) and arc(v, z) and not (arc(v, w) or arc(u, z)):
        failed.append("iii-first")
    if arc(z, v) and arc(w, u) and not (arc(z, u) or arc(w, v)):
        failed.append("iii-second")
    return failed


def check_nest_ordering(d: Digraph, order: Ordering) -> OrderingReport:
    """All violations of the nest-ordering properties, witnesses as labels.

    Quadruples range over non-decreasing position tuples, so vertices may
    repeat. Violations come out in lexicographic position order, rules in
    :data:`NEST_RULES` order within one quadruple.
    """
    _require_same_size(d, order)
    if not is_reflexive(d):
        raise NotReflexiveError(loopless_vertices(d))
    arc = d.has_arc
    labels = order.labels
    out = []
    for quad in itertools.combinations_with_replacement(labels, 4):
        for rule in nest_failures(arc, *quad):
            out.append((rule, quad))
    return OrderingReport(tuple(out))


def is_nest_ordering(d: Digraph, order: Ordering) -> bool:
    """Reflexive and free of violations; never raises for loopless input."""
    if not is_reflexive(d):
        return False
    arc = d.has_arc
    for quad in itertools.combinations_with_replacement(order.labels, 4):
        if nest_failures(arc, *quad):
            return False
    return True


# -- forbidden patterns -------------------------------------------------------

@dataclass(frozen=True)
class Pattern:
    """Ordered-slot template; slots are 1-based and assigned non-decreasing positions.

    Adjacent slots ``i, i+1`` may share a position only if ``(i, i+1)`` is in
    ``equalities``. ``required`` arcs must be present and ``forbidden`` arcs
    absent between the assigned vertices.
    """

    name: str
    slot_count: int
    equalities: frozenset = frozenset()
    required: frozenset = frozenset()
    forbidden: frozenset = frozenset()

    def __post_init__(self):
        k = self.slot_count
        if k < 1:
            raise ValueError("pattern %s needs at least one slot" % self.name)
        for a, b in self.required | self.forbidden:
            if not (1 <= a <= k and 1 <= b <= k):
                raise ValueError("pattern %s: slot pair %r outside 1..%d" % (self.name, (a, b), k))
        for a, b in self.equalities:
            if b != a + 1 or not 1 <= a < k:
                raise ValueError("pattern %s: equality %r is not an adjacent slot pair"
                                 % (self.name, (a, b)))
        if self.required & self.forbidden:
            raise ValueError("pattern %s: arcs both required and forbidden" % self.name)

    def shape(self) -> tuple:
        """Name-free identity, for comparing patterns across catalogs."""
        return (self.slot_count, tuple(sorted(self.equalities)),
                tuple(sorted(self.required)), tuple(sorted(self.forbidden)))

    def mirrored(self, name=None) -> "Pattern":
        """The same pattern read against the reversed ordering."""
        k = self.slot_count

        def flip(pairs):
            return frozenset((k + 1 - a, k + 1 - b) for a, b in pairs)

        return Pattern(name or self.name + "~", k,
                       frozenset((k - b + 1, k - a + 1) for a, b in self.equalities),
                       flip(self.required), flip(self.forbidden))

    def holds_at(self, arc, witness: Sequence[int]) -> bool:
        """Whether the arc conditions hold for slot vertices ``witness``."""
        for a, b in self.required:
            if not arc(witness[a - 1], witness[b - 1]):
                return False
        for a, b in self.forbidden:
            if arc(witness[a - 1], witness[b - 1]):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "slot_count": self.slot_count,
            "equalities": [list(p) for p in sorted(self.equalities)],
            "required": [list(p) for p in sorted(self.required)],
            "forbidden": [list(p) for p in sorted(self.forbidden)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Pattern":
        return cls(data["name"], data["slot_count"],
                   frozenset(tuple(p) for p in data["equalities"]),
                   frozenset(tuple(p) for p in data["required"]),
                   frozenset(tuple(p) for p in data["forbidden"]))


@dataclass(frozen=True)
class PatternCatalog:
    class_name: str
    patterns: tuple[Pattern, ...]

    def __post_init__(self):
        names = [p.name for p in self.patterns]
        if len(set(names)) != len(names):
            raise ValueError("duplicate pattern names in catalog %s" % self.class_name)

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self):
        return len(self.patterns)

    def __getitem__(self, name: str) -> Pattern:
        for p in self.patterns:
            if p.name == name:
                return p
        raise KeyError(name)

    def shapes(self) -> set:
        return {p.shape() for p in self.patterns}

    def to_json(self) -> dict:
        return {"class": self.class_name, "patterns": [p.to_json() for p in self.patterns]}


_SLOT = {"u": 1, "v": 2, "w": 3, "z": 4}


def _pattern(name, slots, eq="", req="", forb="") -> Pattern:
    """Shorthand: ``req="uz vw"`` means arcs u->z and v->w; ``eq="vw"`` lets v = w."""
    def pairs(spec):
        return frozenset((_SLOT[t[0]], _SLOT[t[1]]) for t in spec.split())

    return Pattern(name, slots, pairs(eq), pairs(req), pairs(forb))


def _loop(name) -> Pattern:
    return Pattern(name, 1, forbidden=frozenset({(1, 1)}))


# Patterns (a)-(f) are shared by the reflexive-interval and nest catalogs.
_HFJ = (
    ("(a)", "vw", "uz", "uv wz"),
    ("(b)", "vw", "uz vw", "uw vz"),
    ("(c)", "", "vz uw", "uz vw"),
    ("(d)", "vw", "zu", "vu zw"),
    ("(e)", "vw", "zu wv", "wu zv"),
    ("(f)", "", "zv wu", "zu wv"),
)


@functools.lru_cache(maxsize=None)
def nest_patterns() -> PatternCatalog:
    pats = [_pattern("nest-" + tag, 4, eq, req, forb) for tag, eq, req, forb in _HFJ]
    pats.append(_pattern("nest-(g)", 4, "vw", "uz", "uv zw"))
    pats.append(_pattern("nest-(h)", 4, "vw", "zu", "uv zw"))
    pats.append(_loop("nest-(j)"))
    return PatternCatalog("nest", tuple(pats))


@functools.lru_cache(maxsize=None)
def reflexive_interval_patterns() -> PatternCatalog:
    pats = [_pattern("reflexive-interval-" + tag, 4, eq, req, forb)
            for tag, eq, req, forb in _HFJ]
    pats.append(_loop("reflexive-interval-loop"))
    return PatternCatalog("reflexive_interval", tuple(pats))


@functools.lru_cache(maxsize=None)
def adjusted_patterns() -> PatternCatalog:
    return PatternCatalog("adjusted", (
        _pattern("adjusted-1", 3, req="uw", forb="uv"),
        _pattern("adjusted-2", 3, req="wu", forb="vu"),
        _loop("adjusted-loop"),
    ))


@functools.lru_cache(maxsize=None)
def catch_patterns() -> PatternCatalog:
    return PatternCatalog("catch", (
        _pattern("catch-1", 3, req="uw", forb="uv"),
        _pattern("catch-2", 3, req="wu", forb="wv"),
        _loop("catch-loop"),
    ))


@functools.lru_cache(maxsize=None)
def point_patterns() -> PatternCatalog:
    return PatternCatalog("point", (
        _pattern("point-(p)", 4, "uv", "uz uv", "uw"),
        _pattern("point-(q)", 4, "vw", "vz vu", "vw"),
        _pattern("point-(r)", 4, "vw", "wu wz", "wv"),
        _pattern("point-(s)", 4, "wz", "zu zw", "zv"),
    ))


@functools.lru_cache(maxsize=None)
def balanced_patterns() -> PatternCatalog:
    return PatternCatalog("balanced", (
        _pattern("balanced-1", 3, req="uw", forb="uv"),
        _pattern("balanced-2", 3, req="wu", forb="wv"),
        _pattern("balanced-3", 4, req="vz wu", forb="wz vu"),
        _loop("balanced-loop"),
    ))


@functools.lru_cache(maxsize=None)
def chronological_patterns() -> PatternCatalog:
    return PatternCatalog("chronological", (
        _loop("chronological-loop"),
        _pattern("chronological-1", 2, req="vu", forb="uv"),
        _pattern("chronological-2", 3, req="uw", forb="uv"),
        _pattern("chronological-3", 3, req="wu", forb="vu"),
        _pattern("chronological-4", 3, req="wu", forb="wv"),
        _pattern("chronological-5", 3, req="wu", forb="vw"),
        _pattern("chronological-6", 3, req="uw vu", forb="vw"),
        _pattern("chronological-7", 3, req="uw vu wv", forb="wu"),
        _pattern("chronological-8", 3, req="uv vw wv", forb="uw"),
    ))


_CATALOGS = {
    "adjusted": adjusted_patterns,
    "catch": catch_patterns,
    "point": point_patterns,
    "balanced": balanced_patterns,
    "chronological": chronological_patterns,
    "reflexive_interval": reflexive_interval_patterns,
    "nest": nest_patterns,
}


def normalize_class_name(name: str) -> str:
    key = name.replace("-", "_")
    if key not in _CATALOGS:
        raise KeyError("unknown class %r; expected one of %s" % (name, ", ".join(CLASS_NAMES)))
    return key


def catalog(class_name: str) -> PatternCatalog:
    return _CATALOGS[normalize_class_name(class_name)]()


def all_catalogs() -> dict[str, PatternCatalog]:
    return {name: _CATALOGS[name]() for name in CLASS_NAMES}


# -- pattern engine -----------------------------------------------------------

@functools.lru_cache(maxsize=None)
def slot_positions(n: int, slot_count: int, equalities: frozenset) -> tuple:
    """All admissible 1-based position tuples for a pattern, lexicographic."""
    out = []

    def extend(prefix):
        if len(prefix) == slot_count:
            out.append(tuple(prefix))
            return
        i = len(prefix)  # next slot is i + 1
        if i == 0:
            lo = 1
        else:
            lo = prefix[-1] if (i, i + 1) in equalities else prefix[-1] + 1
        for p in range(lo, n + 1):
            prefix.append(p)
            extend(prefix)
            prefix.pop()

    extend([])
    return tuple(out)


@functools.lru_cache(maxsize=None)
def slot_positions_ending_at(last: int, slot_count: int, equalities: frozenset) -> tuple:
    """Admissible position tuples whose final slot sits at ``last``."""
    return tuple(t for t in slot_positions(last, slot_count, equalities) if t[-1] == last)


def iter_matches(d: Digraph, order: Ordering, p: Pattern) -> Iterator[tuple[int, ...]]:
    arc = d.has_arc
    labels = order.labels
    for pos in slot_positions(order.n, p.slot_count, p.equalities):
        witness = tuple(labels[i - 1] for i in pos)
        if p.holds_at(arc, witness):
            yield witness


def match_pattern(d: Digraph, order: Ordering, p: Pattern) -> list[tuple[int, ...]]:
    """Every occurrence of ``p``, as vertex-label tuples in lexicographic position order."""
    _require_same_size(d, order)
    return list(iter_matches(d, order, p))


def check_pattern_free(d: Digraph, order: Ordering, cat: PatternCatalog) -> OrderingReport:
    """One violation (the first witness) per pattern that occurs."""
    _require_same_size(d, order)
    out = []
    for p in cat:
        first = next(iter_matches(d, order, p), None)
        if first is not None:
            out.append((p.name, first))
    return OrderingReport(tuple(out))


def first_pattern_violation(d: Digraph, order: Ordering, cat: PatternCatalog):
    """``(pattern name, witness)`` of the first occurring pattern, or None."""
    for p in cat:
        first = next(iter_matches(d, order, p), None)
        if first is not None:
            return p.name, first
    return None


def prefix_extends(d: Digraph, prefix: Sequence[int], cat: PatternCatalog) -> bool:
    """Whether appending ``prefix[-1]`` creates no occurrence ending at it.

    Occurrence depends only on the relative order of the slot vertices, so a
    prefix with an occurrence cannot be completed to a pattern-free ordering.
    """
    arc = d.has_arc
    last = len(prefix)
    for p in cat:
        for pos in slot_positions_ending_at(last, p.slot_count, p.equalities):
            if p.holds_at(arc, [prefix[i - 1] for i in pos]):
                return False
    return True


def orderings(n: int) -> Iterable[Ordering]:
    """All n! orderings, lexicographic by label sequence."""
    for perm in itertools.permutations(range(1, n + 1)):
        yield Ordering(perm)
