"""Named fixtures and seeded random instances."""

from __future__ import annotations

import random

from . import constructions
from .errors import GenerationFailed, PreconditionFailed, TooSmall, UnknownName
from .graph import Multigraph, is_connected, is_cubic
from .recognition import find_bridges


def _petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, tuple(outer + spokes + inner))


NAMED = {
    "k4": constructions.k4,
    "petersen": _petersen,
    "prism": lambda: Multigraph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5))),
    "theta": lambda: Multigraph(2, ((0, 1), (0, 1), (0, 1))),
}


def gen_named(name: str) -> Multigraph:
    try:
        return NAMED[name]()
    except KeyError:
        raise UnknownName(f"unknown graph {name!r}; choose from {sorted(NAMED)}") from None


def gen_ring_of_diamonds(k: int) -> Multigraph:
    if k < 2:
        raise TooSmall("a ring of diamonds needs at least 2 diamonds")
    return constructions.ring_of_diamonds(k)


def gen_triangle_replacement(h: Multigraph) -> Multigraph:
    if not (is_cubic(h) and is_connected(h)) or find_bridges(h):
        raise PreconditionFailed("H must be a connected bridgeless cubic multigraph")
    return constructions.triangle_replacement(h)


def gen_insert_string(g: Multigraph, edge_id: int, k: int) -> Multigraph:
    """Replace one edge by a string of ``k`` diamonds (the edge id is reused for its first link)."""
    return constructions.insert_string(g, edge_id, k)


def gen_random_bridgeless_cubic(n: int, seed: int | None = None, max_tries: int = 10_000) -> Multigraph:
    """Configuration-model cubic multigraph, resampled until loop-free, connected and bridgeless.

    Not uniform over isomorphism classes.  ``n = 2`` can only give the theta graph.
    """
    if n < 2 or n % 2:
        raise ValueError("n must be even and at least 2")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        pairs = [(stubs[i], stubs[i + 1]) for i in range(0, len(stubs), 2)]
        if any(u == v for u, v in pairs):
            continue
        g = Multigraph(n, tuple((min(u, v), max(u, v)) for u, v in pairs))
        if is_connected(g) and not find_bridges(g):
            return g
    raise GenerationFailed(f"no bridgeless cubic multigraph on {n} vertices after {max_tries} tries")


def gen_claw_free(
    h_order: int,
    seed: int | None = None,
    strings: int = 2,
    max_string: int = 3,
    max_order: int | None = None,
) -> Multigraph:
    """Random bridgeless claw-free cubic graph: triangle-replace a random H and
    insert up to ``strings`` diamond strings on non-triangle edges.

    Strings are dropped once another would push the order past ``max_order``.
    """
    rng = random.Random(seed)
    h = gen_random_bridgeless_cubic(h_order, rng.randrange(2**32))
    g = constructions.triangle_replacement(h)
    links = list(range(3 * h.n, 3 * h.n + h.m))
    for e in rng.sample(links, min(strings, len(links))):
        k = rng.randint(1, max_string)
        if max_order is not None:
            k = min(k, (max_order - g.n) // 4)
            if k < 1:
                break
        g = constructions.insert_string(g, e, k)
    return g
