import random

import pytest

from bisect2.constructions import insert_string, triangle_replacement
from bisect2.decomposition import (
    DiamondString,
    K4Structure,
    RingOfDiamonds,
    TriangleReplaced,
    decompose,
    expand,
    roundtrip_check,
)
from bisect2.errors import InvalidStructure, StructureViolation
from bisect2.generators import (
    gen_claw_free,
    gen_named,
    gen_random_bridgeless_cubic,
    gen_ring_of_diamonds,
)
from bisect2.graph import Multigraph
from bisect2.isomorphism import are_isomorphic, find_isomorphism
from bisect2.recognition import find_bridges, find_diamonds

from .fixtures import claw_free_fixtures
from .oracles import brute_isomorphic


def test_k4(k4):
    assert isinstance(decompose(k4), K4Structure)


def test_ring_of_four():
    d = decompose(gen_ring_of_diamonds(4))
    assert isinstance(d, RingOfDiamonds)
    assert len(d.diamonds) == 4


def test_ring_order_is_cyclic():
    g = gen_ring_of_diamonds(6)
    d = decompose(g)
    for i, cur in enumerate(d.diamonds):
        nxt = d.diamonds[(i + 1) % 6]
        assert g.adjacent(cur.b, nxt.a)


def test_prism_gives_theta(prism, theta):
    d = decompose(prism)
    assert isinstance(d, TriangleReplaced)
    assert d.h.n == 2 and d.h.m == 3 and not d.h.is_simple()
    assert d.strings == {}
    assert sorted(v for t in d.triangle_of for v in t) == list(range(6))


def test_expand_theta_is_prism(theta, prism):
    g = expand(TriangleReplaced(theta, ((0, 1, 2), (3, 4, 5))))
    assert brute_isomorphic(g, prism)


def test_expand_k4_and_ring(k4):
    g = expand(TriangleReplaced(k4, ((0, 1, 2),) * 4))
    assert g.n == 12 and g.m == 18 and g.is_simple()
    ring = expand(RingOfDiamonds(tuple(decompose(gen_ring_of_diamonds(2)).diamonds)))
    assert ring.n == 8 and len(find_diamonds(ring)) == 2


def test_expand_rejects_bad_h():
    h = Multigraph(2, ((0, 1),))
    with pytest.raises(InvalidStructure):
        expand(TriangleReplaced(h, ()))
    with pytest.raises(InvalidStructure):
        expand(RingOfDiamonds(()))


def test_string_recovered(prism):
    g = insert_string(prism, 6, 2)
    d = decompose(g)
    assert isinstance(d, TriangleReplaced)
    (s,) = d.strings.values()
    assert len(s.diamonds) == 2
    assert g.adjacent(s.attach_u, s.diamonds[0].a)
    assert g.adjacent(s.diamonds[0].b, s.diamonds[1].a)
    assert g.adjacent(s.diamonds[1].b, s.attach_v)
    assert s.end_entries == (s.diamonds[0].a, s.diamonds[1].b)


def test_petersen_rejected(petersen):
    with pytest.raises(StructureViolation):
        decompose(petersen)


def test_bridged_graph_rejected():
    bridged = Multigraph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)))
    with pytest.raises(StructureViolation):
        decompose(bridged)


def test_string_closing_on_one_triangle_rejected():
    # each triangle sends a string back to itself; contraction would need loops
    g = Multigraph(
        14,
        ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3),
         (1, 6), (9, 2), (4, 10), (13, 5),
         (6, 7), (6, 8), (7, 8), (7, 9), (8, 9),
         (10, 11), (10, 12), (11, 12), (11, 13), (12, 13)),
    )
    assert find_bridges(g) == [6]
    with pytest.raises(StructureViolation):
        decompose(g)


def check_invariants(g, d):
    assert find_bridges(d.h) == []
    total = sum(len(s.diamonds) for s in d.strings.values())
    assert g.n == 3 * d.h.n + 4 * total
    owners = [v for t in d.triangle_of for v in t]
    owners += [v for s in d.strings.values() for dd in s.diamonds for v in dd.vertices]
    assert sorted(owners) == list(range(g.n))
    found = {frozenset(dd.vertices) for dd in find_diamonds(g)}
    in_strings = [frozenset(dd.vertices) for s in d.strings.values() for dd in s.diamonds]
    assert sorted(map(sorted, found)) == sorted(map(sorted, in_strings))


@pytest.mark.parametrize("seed", range(200))
def test_synthesis_then_decomposition(seed):
    rng = random.Random(seed)
    g = gen_claw_free(rng.choice([2, 4, 6]), seed, strings=rng.randint(0, 3), max_string=2)
    d = decompose(g)
    assert isinstance(d, TriangleReplaced)
    check_invariants(g, d)
    assert roundtrip_check(g, d)


@pytest.mark.parametrize("seed", range(30))
def test_triangle_replacement_recovers_h(seed):
    h = gen_random_bridgeless_cubic(2 + 2 * (seed % 8), seed)
    d = decompose(triangle_replacement(h))
    assert are_isomorphic(d.h, h)


@pytest.mark.parametrize("name,g", sorted(claw_free_fixtures().items()))
def test_fixture_roundtrip(name, g):
    assert roundtrip_check(g)


def test_triangle_vertex_map_is_an_isomorphism_without_strings(k4):
    g = triangle_replacement(gen_random_bridgeless_cubic(8, 1))
    d = decompose(g)
    phi = d.triangle_vertex_map()
    canon = expand(d)
    assert sorted(tuple(sorted((phi[u], phi[v]))) for u, v in canon.edges) == sorted(
        tuple(sorted(e)) for e in g.edges
    )


def test_json_shape(prism):
    doc = decompose(insert_string(prism, 6, 1)).to_json()
    assert doc["variant"] == "triangle_replaced"
    assert doc["h"]["n"] == 2 and len(doc["strings"]) == 1


def test_isomorphism_search_matches_brute_force():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 7)
        edges = tuple((i, j) for j in range(n) for i in range(j) if rng.random() < 0.5)
        g1 = Multigraph(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        g2 = Multigraph(n, tuple((perm[u], perm[v]) for u, v in edges))
        assert are_isomorphic(g1, g2)
        g3 = Multigraph(n, tuple((i, j) for j in range(n) for i in range(j) if rng.random() < 0.5))
        assert are_isomorphic(g1, g3) == brute_isomorphic(g1, g3)


def test_isomorphism_respects_multiplicity():
    a = Multigraph(4, ((0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)))
    b = Multigraph(4, ((0, 1), (0, 1), (2, 3), (1, 2), (0, 3), (2, 3)))
    c = Multigraph(4, ((0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3)))
    assert are_isomorphic(a, b)
    assert not are_isomorphic(a, c)
    f = find_isomorphism(a, b)
    assert sorted(tuple(sorted((f[u], f[v]))) for u, v in a.edges) == sorted(tuple(sorted(e)) for e in b.edges)
