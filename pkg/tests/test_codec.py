import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bisect2.codec import (
    read_colouring,
    read_edge_list,
    read_graph6,
    write_colouring,
    write_edge_list,
    write_graph6,
)
from bisect2.errors import (
    EndpointOutOfRange,
    LoopRejected,
    MalformedColouring,
    MalformedHeader,
    NonCanonicalPadding,
    NotSimple,
    PayloadLengthMismatch,
)
from bisect2.graph import Multigraph, is_cubic

from .oracles import girth

PETERSEN_G6 = "IheA@GUAo"


def random_simple(n, p, rng):
    return Multigraph(n, tuple((i, j) for j in range(n) for i in range(j) if rng.random() < p))


def test_k4_graph6(k4):
    g = read_graph6("C~")
    assert g.n == 4 and g.m == 6
    assert write_graph6(k4) == "C~"


def test_single_vertex():
    assert write_graph6(Multigraph(1, ())) == "@"
    assert read_graph6("@").n == 1


def test_empty_graph():
    g = read_graph6("?")
    assert g.n == 0 and g.m == 0


def test_petersen_census_line():
    g = read_graph6(PETERSEN_G6)
    assert (g.n, g.m) == (10, 15)
    assert is_cubic(g)
    assert girth(g) == 5


def test_optional_header():
    assert read_graph6(">>graph6<<C~").m == 6


def test_agrees_with_networkx_decoder():
    rng = random.Random(5)
    for _ in range(30):
        g = random_simple(rng.randint(1, 20), 0.4, rng)
        line = write_graph6(g)
        ref = nx.from_graph6_bytes(line.encode())
        assert sorted(ref.edges()) == sorted(g.edges)


def test_large_order_header():
    g = Multigraph(70, ((0, 69), (3, 4)))
    line = write_graph6(g)
    assert line[0] == "~"
    back = read_graph6(line)
    assert back.n == 70 and sorted(back.edges) == [(0, 69), (3, 4)]


def test_theta_not_simple(theta):
    with pytest.raises(NotSimple):
        write_graph6(theta)


def test_corrupt_padding():
    # n=4 uses exactly 6 bits; n=3 uses 3 bits + 3 padding bits
    assert read_graph6("Bw").m == 3
    with pytest.raises(NonCanonicalPadding):
        read_graph6("Bx")


@pytest.mark.parametrize("line", ["C~~", "C", "I"])
def test_payload_length(line):
    with pytest.raises(PayloadLengthMismatch):
        read_graph6(line)


@pytest.mark.parametrize("line", ["", ":Fa@x^", "C~ ", "C\x7f"])
def test_malformed(line):
    if line == "C~ ":
        assert read_graph6(line).m == 6  # surrounding whitespace is stripped
        return
    with pytest.raises(MalformedHeader):
        read_graph6(line)


@given(st.integers(0, 12), st.integers(0, 2**32 - 1))
def test_graph6_roundtrip(n, seed):
    g = random_simple(n, random.Random(seed).random(), random.Random(seed))
    back = read_graph6(write_graph6(g))
    assert back.n == g.n
    assert back.edges == tuple(sorted(g.edges, key=lambda e: (e[1], e[0])))


THETA_DOC = "2 3\n0 1\n0 1\n0 1\n"


def test_edge_list_theta():
    g = read_edge_list(THETA_DOC)
    assert g.n == 2 and g.edges == ((0, 1),) * 3
    assert write_edge_list(g) == THETA_DOC
    assert read_edge_list(THETA_DOC.rstrip("\n")).edges == g.edges


def test_edge_list_errors():
    with pytest.raises(EndpointOutOfRange):
        read_edge_list("2 1\n0 2")
    with pytest.raises(LoopRejected):
        read_edge_list("2 1\n1 1")
    with pytest.raises(MalformedHeader):
        read_edge_list("2\n0 1")
    with pytest.raises(MalformedHeader):
        read_edge_list("2 2\n0 1")
    with pytest.raises(MalformedHeader):
        read_edge_list("2 1\n0 x")


@given(st.integers(1, 8), st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=15))
def test_edge_list_byte_identical(n, pairs):
    edges = [(u % n, v % n) for u, v in pairs if u % n != v % n]
    doc = f"{n} {len(edges)}\n" + "".join(f"{u} {v}\n" for u, v in edges)
    assert write_edge_list(read_edge_list(doc)) == doc


def test_colouring_document():
    c = read_colouring("BBWW\n", 4)
    assert write_colouring(c) == "BBWW\n"
    with pytest.raises(MalformedColouring):
        read_colouring("BBWX", 4)
    with pytest.raises(MalformedColouring):
        read_colouring("BBW", 4)
    with pytest.raises(MalformedColouring):
        read_colouring("bbww", 4)
