from fractions import Fraction as F
from math import lcm

import pytest
from hypothesis import assume, given, settings

from intervalnest.construct import build_model, build_model_unchecked, compute_stops, tails_nested
from intervalnest.digraph import complete_digraph, new_digraph
from intervalnest.errors import NotNestOrderingError, NotReflexiveError
from intervalnest.model import is_nest, realizes
from intervalnest.ordering import Ordering, check_nest_ordering
from intervalnest.recognize import brute_force_nest_ordering

from conftest import LOOPS3, digraph_and_ordering, digraphs


def endpoints(model):
    return [((i.left, i.right), (j.left, j.right)) for i, j in model.pairs]


def test_stops_single_loop(loop1):
    s = compute_stops(loop1, Ordering((1,)))[1]
    assert (s.sigma_r, s.sigma_l, s.tail_r, s.tail_l) == (2, 0, frozenset(), frozenset())


def test_stops_running_example(running):
    stops = compute_stops(running, Ordering.identity(3))
    assert [stops[v].sigma_r for v in (1, 2, 3)] == [2, 4, 4]
    assert [stops[v].sigma_l for v in (1, 2, 3)] == [0, 1, 1]
    assert stops[1].tail_r == {3}
    assert all(not stops[v].tail_l for v in (1, 2, 3))
    assert not stops[2].tail_r and not stops[3].tail_r


def test_stops_complete_two():
    stops = compute_stops(complete_digraph(2), Ordering.identity(2))
    assert [(stops[v].sigma_r, stops[v].sigma_l) for v in (1, 2)] == [(3, 0), (3, 0)]
    assert all(not stops[v].tail_r and not stops[v].tail_l for v in (1, 2))


def test_stops_refuse_non_reflexive():
    with pytest.raises(NotReflexiveError):
        compute_stops(new_digraph(2, [(1, 1)]), Ordering.identity(2))


@settings(max_examples=200)
@given(digraph_and_ordering(max_n=6, reflexive=True))
def test_stop_invariants(case):
    d, o = case
    stops = compute_stops(d, o)
    n = d.n
    for v in d.vertices:
        s = stops[v]
        x = o.position(v)
        out = {o.position(w) for w in d.out_neighbors(v)}
        assert x < s.sigma_r <= n + 1 and 0 <= s.sigma_l < x
        assert all(p in out for p in range(x + 1, s.sigma_r))
        assert all(p in out for p in range(s.sigma_l + 1, x))
        assert s.sigma_r == n + 1 or s.sigma_r not in out
        assert s.sigma_l == 0 or s.sigma_l not in out
        assert s.tail_r == {p for p in out if p > s.sigma_r}
        assert s.tail_l == {p for p in out if p < s.sigma_l}


def test_model_single_loop(loop1):
    m = build_model(loop1, Ordering((1,)))
    assert endpoints(m) == [((F(1, 2), F(3, 2)), (1, 1))]


def test_model_running_example(running):
    m = build_model(running, Ordering.identity(3))
    assert endpoints(m) == [
        ((F(1, 2), F(5, 3)), (1, 1)),
        ((F(3, 2), F(7, 2)), (2, 2)),
        ((F(3, 2), F(7, 2)), (F(5, 3), 3)),
    ]


def test_model_complete_two():
    m = build_model(complete_digraph(2), Ordering.identity(2))
    assert endpoints(m) == [((F(1, 2), F(5, 2)), (1, 1)), ((F(1, 2), F(5, 2)), (2, 2))]


def test_refuses_non_nest_ordering():
    d = new_digraph(3, LOOPS3 + [(1, 3)])
    with pytest.raises(NotNestOrderingError) as info:
        build_model(d, Ordering.identity(3))
    assert ("i-first", (1, 2, 3, 3)) in info.value.report.violations
    # the unchecked variant still evaluates the formulas
    m = build_model_unchecked(d, Ordering.identity(3))
    assert not realizes(m, d).ok


def _nest_case(d, o):
    """Replace ``o`` by a nest ordering of ``d`` when it is not one; None if none exists."""
    if check_nest_ordering(d, o).ok:
        return o
    return brute_force_nest_ordering(d)


@settings(max_examples=200, deadline=None)
@given(digraph_and_ordering(max_n=6, reflexive=True))
def test_construction_properties(case):
    d, o = case
    o = _nest_case(d, o)
    assume(o is not None)
    m = build_model(d, o)
    stops = compute_stops(d, o)
    assert is_nest(m)
    assert realizes(m, d).ok
    assert tails_nested(stops) == []
    den = lcm(*range(2, d.n + 3))
    for v in d.vertices:
        s = stops[v]
        i, j = m.pairs[v - 1]
        assert s.sigma_r - F(1, 2) <= i.right < s.sigma_r
        assert s.sigma_l < i.left <= s.sigma_l + F(1, 2)
        assert o.position(v) in j
        for q in (i.left, i.right, j.left, j.right):
            assert den % q.denominator == 0


@given(digraphs(max_n=6, reflexive=True))
def test_nest_ordering_search_feeds_construction(d):
    o = brute_force_nest_ordering(d)
    if o is not None:
        assert realizes(build_model(d, o), d).ok
