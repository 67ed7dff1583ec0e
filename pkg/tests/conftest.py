import pytest
from hypothesis import strategies as st

from intervalnest.digraph import Digraph, new_digraph
from intervalnest.ordering import Ordering

LOOPS3 = [(1, 1), (2, 2), (3, 3)]


@pytest.fixture
def running():
    """Three vertices, all loops, 1->3 and the symmetric pair 2<->3."""
    return new_digraph(3, LOOPS3 + [(1, 3), (2, 3), (3, 2)])


@pytest.fixture
def loop1():
    return new_digraph(1, [(1, 1)])


@st.composite
def digraphs(draw, min_n=1, max_n=5, reflexive=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(1, n + 1)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    arcs = {p for p, b in zip(pairs, bits) if b}
    if reflexive:
        arcs |= {(v, v) for v in range(1, n + 1)}
    elif reflexive is False:
        arcs -= {(v, v) for v in range(1, n + 1)}
    return Digraph(n, frozenset(arcs))


@st.composite
def digraph_and_ordering(draw, **kw):
    d = draw(digraphs(**kw))
    perm = draw(st.permutations(list(range(1, d.n + 1))))
    return d, Ordering(tuple(perm))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
