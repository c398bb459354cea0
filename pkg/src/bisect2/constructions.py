"""Deterministic graph builders shared by structure expansion and the generators.

Labelling conventions:

* Triangle replacement: H-vertex ``i`` becomes vertices ``3i, 3i+1, 3i+2``.
  H-edges claim triangle ports in edge-id order; edge ``e = (u, v)`` takes
  the next free slot at ``u`` and then at ``v``.  The three triangle edges
  of every H-vertex come first, so H-edge ``e`` is edge ``3 n(H) + e``.
* Diamonds are laid out as ``a, x, y, b`` on four consecutive ids, with
  ``a`` and ``b`` the non-adjacent pair.
* A diamond string inserted on edge ``uv`` reuses that edge's id for
  ``u - a_1`` and appends everything else, so no other edge id moves.
"""

from __future__ import annotations

from .errors import NoSuchEdge
from .graph import Multigraph


def k4() -> Multigraph:
    return Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def diamond_edges(a: int, x: int, y: int, b: int) -> list[tuple[int, int]]:
    return [(a, x), (a, y), (x, y), (x, b), (y, b)]


def triangle_ports(h: Multigraph) -> list[tuple[int, int]]:
    """For each H-edge, the pair of triangle vertices that carry it."""
    used = [0] * h.n
    ports = []
    for u, v in h.edges:
        pu, pv = 3 * u + used[u], 3 * v + used[v]
        used[u] += 1
        used[v] += 1
        ports.append((pu, pv))
    return ports


def triangle_replacement(h: Multigraph) -> Multigraph:
    """Replace every vertex of a cubic multigraph by a triangle."""
    edges = []
    for i in range(h.n):
        edges += [(3 * i, 3 * i + 1), (3 * i, 3 * i + 2), (3 * i + 1, 3 * i + 2)]
    edges += triangle_ports(h)
    return Multigraph(3 * h.n, tuple(edges))


def ring_of_diamonds(k: int) -> Multigraph:
    edges = []
    for i in range(k):
        edges += diamond_edges(4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3)
    for i in range(k):
        edges.append((4 * i + 3, 4 * ((i + 1) % k)))
    return Multigraph(4 * k, tuple(edges))


def insert_string(g: Multigraph, edge_id: int, k: int) -> Multigraph:
    """Replace edge ``edge_id = uv`` with ``u - D_1 - ... - D_k - v``."""
    if not 0 <= edge_id < g.m:
        raise NoSuchEdge(f"no edge {edge_id}")
    if k < 1:
        raise ValueError("a string needs at least one diamond")
    u, v = g.edges[edge_id]
    edges = list(g.edges)
    base = g.n
    edges[edge_id] = (u, base)
    for i in range(k):
        a = base + 4 * i
        edges += diamond_edges(a, a + 1, a + 2, a + 3)
        if i + 1 < k:
            edges.append((a + 3, a + 4))
    edges.append((base + 4 * k - 1, v))
    return Multigraph(g.n + 4 * k, tuple(edges))
