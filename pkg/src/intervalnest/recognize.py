"""Exhaustive recognition, certificates and class censuses.

Nothing here is polynomial: membership is decided by searching all
orderings with prefix pruning, which is sound because a violated property
or an occurring pattern depends only on the relative order of its
vertices. Canonical witnesses are the lexicographically smallest orderings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

from . import kernels
from .construct import build_model
from .digraph import Digraph, enumerate_digraphs, is_reflexive, loopless_vertices
from .errors import BoundExceededError, InvariantError
from .model import IntervalModel, is_nest, model_to_json, realizes
from .ordering import (
    CLASS_NAMES,
    Ordering,
    PatternCatalog,
    all_catalogs,
    catalog,
    check_nest_ordering,
    first_pattern_violation,
    nest_patterns,
    normalize_class_name,
    orderings,
    prefix_extends,
)

BRUTE_FORCE_BOUND = 9

#: Classes whose catalog is characterized in this package's own theory;
#: the rest are transcriptions of characterizations from other work.
PROVEN_CLASSES = frozenset({"nest", "reflexive_interval"})


def _check_bound(what: str, d: Digraph):
    if d.n > BRUTE_FORCE_BOUND:
        raise BoundExceededError(what, d.n, BRUTE_FORCE_BOUND)


def brute_force_nest_ordering(d: Digraph) -> Optional[Ordering]:
    """Lexicographically smallest nest ordering, or None (always None if not reflexive)."""
    _check_bound("brute-force nest-ordering search", d)
    found = kernels.first_nest_ordering(d.adjacency, d.n)
    if found is None:
        return None
    return Ordering(tuple(i + 1 for i in found))


def count_nest_orderings(d: Digraph) -> int:
    _check_bound("nest-ordering count", d)
    return kernels.count_nest_orderings(d.adjacency, d.n)


def find_pattern_free_ordering(d: Digraph, cat: PatternCatalog) -> Optional[Ordering]:
    """Lexicographically smallest ordering avoiding every pattern of ``cat``."""
    _check_bound("pattern-free ordering search", d)
    n = d.n
    prefix: list[int] = []
    used = [False] * (n + 1)

    def search() -> bool:
        if len(prefix) == n:
            return True
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            if prefix_extends(d, prefix, cat):
                used[v] = True
                if search():
                    return True
                used[v] = False
            prefix.pop()
        return False

    return Ordering(tuple(prefix)) if search() else None


@dataclass(frozen=True)
class Certificate:
    """Re-verifiable answer to "is ``digraph`` an interval nest digraph?"."""

    digraph: Digraph
    verdict: str
    ordering: Optional[Ordering] = None
    model: Optional[IntervalModel] = None
    refutation: dict = field(default_factory=dict)

    @property
    def member(self) -> bool:
        return self.verdict == "member"

    def verify(self) -> bool:
        """Re-check a member certificate end to end; non-members re-run the search."""
        d = self.digraph
        if self.member:
            return (check_nest_ordering(d, self.ordering).ok
                    and is_nest(self.model)
                    and realizes(self.model, d).ok)
        return brute_force_nest_ordering(d) is None

    def violations_by_ordering(self) -> Iterator[tuple[Ordering, tuple]]:
        """For a non-member: each ordering with its first forbidden-pattern occurrence."""
        cat = nest_patterns()
        for order in orderings(self.digraph.n):
            yield order, first_pattern_violation(self.digraph, order, cat)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "n": self.digraph.n}
        if self.member:
            out["ordering"] = list(self.ordering.labels)
            out["model"] = model_to_json(self.model)
        else:
            out["refutation"] = dict(self.refutation)
        return out


def is_interval_nest(d: Digraph) -> Certificate:
    _check_bound("interval-nest recognition", d)
    if not is_reflexive(d):
        return Certificate(d, "non-member", refutation={
            "reason": "not reflexive",
            "loopless_vertices": loopless_vertices(d),
        })
    order = brute_force_nest_ordering(d)
    if order is None:
        return Certificate(d, "non-member", refutation={
            "reason": "no nest ordering",
            "orderings_checked": math.factorial(d.n),
        })
    cert = Certificate(d, "member", order, build_model(d, order))
    if not cert.verify():
        raise InvariantError("member certificate failed re-verification for %s" % d)
    return cert


@dataclass(frozen=True)
class ClassReport:
    admitted: dict
    witnesses: dict

    def to_json(self) -> dict:
        return {
            name: {
                "admitted": self.admitted[name],
                "ordering": (list(self.witnesses[name].labels)
                             if self.witnesses[name] is not None else None),
                "basis": "characterized here" if name in PROVEN_CLASSES else "per cited catalog",
            }
            for name in CLASS_NAMES
        }


def classify(d: Digraph) -> ClassReport:
    """For each class, whether some ordering avoids its catalog, with the smallest such ordering."""
    _check_bound("classification", d)
    witnesses = {name: find_pattern_free_ordering(d, cat) for name, cat in all_catalogs().items()}
    return ClassReport({k: w is not None for k, w in witnesses.items()}, witnesses)


@dataclass
class CensusResult:
    n: int
    reflexive_only: bool
    total: int = 0
    counts: dict = field(default_factory=lambda: {name: 0 for name in CLASS_NAMES})
    nest_agreement: int = 0
    admitted: dict = field(default_factory=lambda: {name: set() for name in CLASS_NAMES})

    def to_json(self) -> dict:
        return {"n": self.n, "reflexive_only": self.reflexive_only, "total": self.total,
                "counts": dict(self.counts), "nest_agreement": self.nest_agreement}


def census(n: int, reflexive_only: bool = True) -> CensusResult:
    """Classify every enumerated digraph; ``admitted`` holds enumeration indices."""
    result = CensusResult(n, reflexive_only)
    for idx, d in enumerate(enumerate_digraphs(n, reflexive_only)):
        report = classify(d)
        result.total += 1
        for name, ok in report.admitted.items():
            if ok:
                result.counts[name] += 1
                result.admitted[name].add(idx)
        direct = brute_force_nest_ordering(d) is not None
        if direct == report.admitted["nest"]:
            result.nest_agreement += 1
    return result


def _arc_key(d: Digraph):
    return (len(d.arcs), d.sorted_arcs())


def find_separating_example(class_a: str, class_b: str, n: int,
                            reflexive_only: Optional[bool] = None) -> Optional[Digraph]:
    """Smallest digraph (arc count, then sorted arc list) admitted by ``class_a`` but not ``class_b``.

    ``reflexive_only`` defaults to the widest enumeration available for ``n``:
    all digraphs up to n = 3, reflexive ones at n = 4.
    """
    if reflexive_only is None:
        reflexive_only = n > 3
    cat_a = catalog(normalize_class_name(class_a))
    cat_b = catalog(normalize_class_name(class_b))
    best = None
    for d in enumerate_digraphs(n, reflexive_only):
        if best is not None and _arc_key(d) >= _arc_key(best):
            continue
        if (find_pattern_free_ordering(d, cat_a) is not None
                and find_pattern_free_ordering(d, cat_b) is None):
            best = d
    return best
