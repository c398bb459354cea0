import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bisect2.errors import EndpointOutOfRange, LoopRejected
from bisect2.graph import Colouring, degree, induced_subgraph_components, is_cubic, new_multigraph

from .oracles import components_by_flooding


@st.composite
def multigraphs(draw, max_n=10, max_m=20):
    n = draw(st.integers(1, max_n))
    pairs = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(pairs, max_size=max_m))
    return new_multigraph(n, edges)


def test_k4_is_cubic(k4):
    assert k4.n == 4 and k4.m == 6
    assert [degree(k4, v) for v in range(4)] == [3, 3, 3, 3]
    assert is_cubic(k4)


def test_theta_multigraph():
    g = new_multigraph(2, [(0, 1), (0, 1), (0, 1)])
    assert (degree(g, 0), degree(g, 1)) == (3, 3)
    assert is_cubic(g)
    assert not g.is_simple()


def test_path_degree():
    p2 = new_multigraph(2, [(0, 1)])
    assert degree(p2, 0) == 1
    assert not is_cubic(p2)


def test_petersen_is_cubic(petersen):
    assert is_cubic(petersen)


def test_loop_rejected():
    with pytest.raises(LoopRejected) as info:
        new_multigraph(2, [(0, 0)])
    assert info.value.index == 0


def test_endpoint_out_of_range():
    with pytest.raises(EndpointOutOfRange) as info:
        new_multigraph(2, [(0, 1), (1, 2)])
    assert info.value.index == 1


def test_components_in_k4(k4):
    assert induced_subgraph_components(k4, {0, 1}) == [frozenset({0, 1})]
    assert induced_subgraph_components(k4, set()) == []


def test_petersen_components_match_flooding(petersen):
    side = {0, 1, 2, 5, 8}
    got = sorted(sorted(c) for c in induced_subgraph_components(petersen, side))
    want = sorted(sorted(c) for c in components_by_flooding(10, petersen.edges, side))
    assert got == want


@given(multigraphs())
def test_degree_counts_endpoint_occurrences(g):
    for v in range(g.n):
        assert degree(g, v) == sum(e.count(v) for e in g.edges)


@given(multigraphs(), st.data())
def test_components_partition_subset(g, data):
    subset = data.draw(st.sets(st.integers(0, g.n - 1)))
    comps = induced_subgraph_components(g, subset)
    assert sum(len(c) for c in comps) == len(subset)
    assert set().union(*comps) == subset if comps else not subset
    assert sorted(map(sorted, comps)) == sorted(map(sorted, components_by_flooding(g.n, g.edges, subset)))


@given(multigraphs())
@settings(max_examples=50)
def test_edge_order_preserved(g):
    again = new_multigraph(g.n, list(g.edges))
    assert again.edges == g.edges


def test_colouring_document_roundtrip():
    c = Colouring.from_string("BWWB")
    assert c.to_document() == "BWWB"
    assert c.black == [0, 3]
