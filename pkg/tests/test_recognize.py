import itertools

import pytest
from hypothesis import given, settings

from intervalnest.digraph import complete_digraph, enumerate_digraphs, new_digraph
from intervalnest.errors import BoundExceededError
from intervalnest.model import digraph_of, is_nest, realizes
from intervalnest.ordering import (
    CLASS_NAMES,
    Ordering,
    all_catalogs,
    catalog,
    check_pattern_free,
    is_nest_ordering,
    nest_patterns,
)
from intervalnest.recognize import (
    BRUTE_FORCE_BOUND,
    brute_force_nest_ordering,
    census,
    classify,
    count_nest_orderings,
    find_pattern_free_ordering,
    find_separating_example,
    is_interval_nest,
)

from conftest import LOOPS3, digraphs

CYCLE3 = new_digraph(3, LOOPS3 + [(1, 2), (2, 3), (3, 1)])


def _all_orders(n):
    return [Ordering(p) for p in itertools.permutations(range(1, n + 1))]


def _oracle_pattern_free(d, cat):
    for o in _all_orders(d.n):
        if check_pattern_free(d, o, cat).ok:
            return o
    return None


def test_single_loop_member(loop1):
    cert = is_interval_nest(loop1)
    assert cert.member and cert.verify()
    assert cert.ordering.labels == (1,)
    assert cert.to_json()["model"] == {"n": 1, "intervals": [{"I": ["1/2", "3/2"], "J": ["1/1", "1/1"]}]}


def test_running_example_member(running):
    cert = is_interval_nest(running)
    assert cert.member
    assert cert.ordering.labels == (1, 2, 3)
    assert realizes(cert.model, running).ok and is_nest(cert.model)


def test_chord_example_reorders():
    d = new_digraph(3, LOOPS3 + [(1, 3)])
    assert brute_force_nest_ordering(d).labels == (1, 3, 2)
    d4 = new_digraph(4, [(v, v) for v in range(1, 5)] + [(1, 4)])
    assert brute_force_nest_ordering(d4).labels == (1, 4, 2, 3)


def test_non_reflexive_refutation():
    cert = is_interval_nest(new_digraph(2, [(1, 1), (1, 2)]))
    assert not cert.member
    assert cert.refutation == {"reason": "not reflexive", "loopless_vertices": [2]}
    assert cert.verify()


def test_cycle_non_member():
    cert = is_interval_nest(CYCLE3)
    assert not cert.member
    assert cert.refutation == {"reason": "no nest ordering", "orderings_checked": 6}
    assert cert.verify()
    witnesses = list(cert.violations_by_ordering())
    assert len(witnesses) == 6 and all(w is not None for _, w in witnesses)


def test_empty_digraph_member():
    cert = is_interval_nest(new_digraph(0))
    assert cert.member and cert.ordering.labels == ()


def test_bound():
    with pytest.raises(BoundExceededError):
        is_interval_nest(complete_digraph(BRUTE_FORCE_BOUND + 1))
    with pytest.raises(BoundExceededError):
        classify(complete_digraph(BRUTE_FORCE_BOUND + 1))
    with pytest.raises(BoundExceededError):
        census(5, True)
    with pytest.raises(BoundExceededError):
        census(4, False)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=5))
def test_search_matches_enumeration(d):
    expected = next((o for o in _all_orders(d.n) if is_nest_ordering(d, o)), None)
    assert brute_force_nest_ordering(d) == expected
    assert count_nest_orderings(d) == sum(is_nest_ordering(d, o) for o in _all_orders(d.n))
    cert = is_interval_nest(d)
    assert cert.member == (expected is not None)
    assert cert.verify()


@settings(max_examples=40, deadline=None)
@given(digraphs(max_n=4))
def test_pattern_search_matches_enumeration(d):
    for name, cat in all_catalogs().items():
        assert find_pattern_free_ordering(d, cat) == _oracle_pattern_free(d, cat), name


def test_classify_running(running):
    report = classify(running)
    assert report.admitted["nest"] and report.admitted["reflexive_interval"]
    data = report.to_json()
    assert set(data) == set(CLASS_NAMES)
    assert data["nest"]["basis"] == "characterized here"
    assert data["catch"]["basis"] == "per cited catalog"


def test_classify_loopless_pair():
    report = classify(new_digraph(2, [(1, 2), (2, 1)]))
    assert [c for c in CLASS_NAMES if report.admitted[c]] == ["point"]
    assert report.witnesses["point"].labels == (1, 2)


def test_classify_is_deterministic(running):
    assert classify(running).to_json() == classify(running).to_json()


def test_census_small():
    r1 = census(1, True)
    assert r1.total == 1 and all(r1.counts[c] == 1 for c in CLASS_NAMES)
    r2 = census(2, True)
    assert r2.total == 4 and r2.nest_agreement == 4
    r3 = census(3, True)
    assert r3.total == 64 and r3.counts["nest"] == 62 and r3.nest_agreement == 64
    g3 = census(3, False)
    assert g3.total == 512 and g3.counts["point"] == 506


def test_census_indices_follow_enumeration():
    r = census(3, True)
    ds = list(enumerate_digraphs(3, True))
    for idx in r.admitted["nest"]:
        assert brute_force_nest_ordering(ds[idx]) is not None
    missing = set(range(64)) - r.admitted["nest"]
    assert {frozenset(ds[i].arcs) for i in missing} == {
        CYCLE3.arcs, new_digraph(3, LOOPS3 + [(1, 3), (3, 2), (2, 1)]).arcs}


def test_separating_examples():
    d = find_separating_example("reflexive-interval", "nest", 4)
    assert d.sorted_arcs() == sorted([(v, v) for v in range(1, 5)] + [(1, 2), (2, 3), (4, 2)])
    assert find_pattern_free_ordering(d, catalog("reflexive_interval")) is not None
    assert brute_force_nest_ordering(d) is None
    assert find_separating_example("reflexive-interval", "nest", 3) is None
    assert find_separating_example("catch", "balanced", 3) is None


def test_separating_example_minimality():
    d = find_separating_example("nest", "chronological", 3)
    assert d.sorted_arcs() == [(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)]
    ri, nc = nest_patterns(), catalog("chronological")
    key = (len(d.arcs), d.sorted_arcs())
    for other in enumerate_digraphs(3, False):
        if (len(other.arcs), other.sorted_arcs()) < key:
            assert not (_oracle_pattern_free(other, ri) is not None
                        and _oracle_pattern_free(other, nc) is None)


def test_member_model_realizes(running):
    cert = is_interval_nest(running)
    assert digraph_of(cert.model) == running
