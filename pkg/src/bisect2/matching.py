"""Perfect matchings of bridgeless cubic multigraphs and their 2-factors."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from . import constructions
from .errors import NoPerfectMatching, NotTwoRegular
from .graph import Multigraph


@dataclass(frozen=True)
class Matching:
    """Edge ids of a matching in H, ascending.

    ``m_prime`` holds the ids of the same edges inside
    ``constructions.triangle_replacement(H)``, where H-edge ``e`` is edge
    ``3 n(H) + e``.
    """

    edges: tuple[int, ...]
    m_prime: tuple[int, ...] = ()


@dataclass(frozen=True)
class Circuit:
    # edges[i] joins vertices[i] and vertices[(i + 1) % len]
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class CircuitFamily:
    circuits: tuple[Circuit, ...]
    # expanded[i] is the cycle of triangle-replacement vertices over circuits[i]
    expanded: tuple[tuple[int, ...], ...] = field(default=())


def maximum_matching(n: int, adj: list[list[int]]) -> list[int]:
    """Maximum cardinality matching of a simple graph by blossom contraction.

    ``adj[v]`` must be duplicate-free.  Returns ``mate`` with ``mate[v] = -1``
    for exposed vertices.  Roots and neighbours are scanned in list order,
    so the result is deterministic.
    """
    mate = [-1] * n

    def augmenting_search(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, b, to, blossom)
                    mark_path(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # flip the alternating path ending at `to`
                        while to != -1:
                            pv = parent[to]
                            nxt = mate[pv]
                            mate[to] = pv
                            mate[pv] = to
                            to = nxt
                        return True
                    in_tree[mate[to]] = True
                    queue.append(mate[to])
        return False

    for root in range(n):
        if mate[root] == -1:
            augmenting_search(root)
    return mate


def perfect_matching(h: Multigraph) -> Matching:
    """A perfect matching of ``h``; parallel edges are represented by their lowest id."""
    adj = [sorted(set(h.neighbours(v))) for v in range(h.n)]
    mate = maximum_matching(h.n, adj)
    if any(m == -1 for m in mate):
        raise NoPerfectMatching(f"{sum(m == -1 for m in mate)} vertices left exposed")
    edges = sorted(h.edge_between(v, mate[v]) for v in range(h.n) if v < mate[v])
    return Matching(tuple(edges), tuple(3 * h.n + e for e in edges))


def two_factor(h: Multigraph, m: Matching) -> CircuitFamily:
    """Circuits formed by the edges outside ``m``; digons are allowed."""
    in_m = set(m.edges)
    rest = [[e for e in h.incident[v] if e not in in_m] for v in range(h.n)]
    bad = [v for v in range(h.n) if len(rest[v]) != 2]
    if bad:
        raise NotTwoRegular(f"complement degree is not 2 at vertices {bad[:5]}")
    seen = [False] * h.n
    circuits = []
    for start in range(h.n):
        if seen[start]:
            continue
        vs, es = [], []
        v, e = start, rest[start][0]
        while not seen[v]:
            seen[v] = True
            vs.append(v)
            es.append(e)
            v = h.other(e, v)
            e = rest[v][1] if rest[v][0] == e else rest[v][0]
        circuits.append(Circuit(tuple(vs), tuple(es)))
    return CircuitFamily(tuple(circuits))


def expand_circuits(h: Multigraph, family: CircuitFamily) -> CircuitFamily:
    """Fill in each circuit's image in the triangle replacement of ``h``.

    Per circuit vertex the image visits the port of the incoming edge and
    then the port of the outgoing edge, so it has exactly twice the length.
    """
    ports = constructions.triangle_ports(h)

    def port(v: int, e: int) -> int:
        return ports[e][0] if h.edges[e][0] == v else ports[e][1]

    expanded = []
    for c in family.circuits:
        cycle = []
        for i, v in enumerate(c.vertices):
            cycle += [port(v, c.edges[i - 1]), port(v, c.edges[i])]
        expanded.append(tuple(cycle))
    return replace(family, expanded=tuple(expanded))
