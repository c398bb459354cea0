"""Structural predicates: connectivity, cubicity, bridges, claws, diamonds."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Multigraph, is_connected, is_cubic


@dataclass(frozen=True)
class Diamond:
    """An induced K4 minus the edge ``ab``.

    ``a`` and ``b`` are the non-adjacent pair, ``x`` and ``y`` the adjacent
    pair.  Inside a string or ring the pair is oriented: ``a`` faces the
    predecessor and ``b`` the successor.
    """

    a: int
    b: int
    x: int
    y: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.a, self.x, self.y, self.b)

    def entered_at(self, v: int) -> Diamond:
        if v == self.a:
            return self
        if v == self.b:
            return Diamond(self.b, self.a, self.x, self.y)
        raise ValueError(f"{v} is not an end of {self}")


@dataclass
class RecognitionReport:
    n: int
    m: int
    connected: bool
    cubic: bool
    simple: bool
    bridges: list[int] = field(default_factory=list)
    # None means not applicable (multigraph input)
    claw_free: bool | None = None
    claw_witness: tuple[int, int, int, int] | None = None
    diamonds: list[Diamond] = field(default_factory=list)

    @property
    def bridgeless(self) -> bool:
        return not self.bridges

    @property
    def theorem_applies(self) -> bool:
        """True iff the graph is connected, simple, cubic, bridgeless and claw-free."""
        return self.connected and self.simple and self.cubic and self.bridgeless and self.claw_free is True

    def failures(self) -> list[str]:
        out = []
        if not self.connected:
            out.append("not connected")
        if not self.simple:
            out.append("not simple")
        if not self.cubic:
            out.append("not cubic")
        if self.bridges:
            out.append(f"bridges at edges {self.bridges}")
        if self.claw_free is False:
            out.append(f"claw at {self.claw_witness}")
        return out

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "connected": self.connected,
            "cubic": self.cubic,
            "simple": self.simple,
            "bridgeless": self.bridgeless,
            "bridges": list(self.bridges),
            "claw_free": self.claw_free,
            "claw_witness": list(self.claw_witness) if self.claw_witness else None,
            "diamonds": [list(d.vertices) for d in self.diamonds],
            "theorem_applies": self.theorem_applies,
        }


def find_bridges(g: Multigraph) -> list[int]:
    """Ids of all cut-edges, ascending.

    Iterative DFS low-link.  The tree edge is skipped by id rather than by
    endpoint, so a parallel partner of the tree edge counts as a back edge.
    """
    pre = [-1] * g.n
    low = [0] * g.n
    bridges = []
    counter = 0
    for root in range(g.n):
        if pre[root] != -1:
            continue
        pre[root] = low[root] = counter
        counter += 1
        # (vertex, edge id used to reach it, position in incidence list)
        stack = [(root, -1, 0)]
        while stack:
            v, via, i = stack[-1]
            inc = g.incident[v]
            if i < len(inc):
                stack[-1] = (v, via, i + 1)
                e = inc[i]
                if e == via:
                    continue
                w = g.other(e, v)
                if pre[w] == -1:
                    pre[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e, 0))
                else:
                    low[v] = min(low[v], pre[w])
            else:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > pre[parent]:
                        bridges.append(via)
    return sorted(bridges)


def find_claw_generic(g: Multigraph) -> tuple[int, int, int, int] | None:
    """Scan every 3-subset of every neighbourhood for an independent triple."""
    for v in range(g.n):
        nbrs = sorted(set(g.neighbours(v)))
        for t in combinations(nbrs, 3):
            if not any(g.adjacent(p, q) for p, q in combinations(t, 2)):
                return (v, *t)
    return None


def find_claw(g: Multigraph) -> tuple[int, int, int, int] | None:
    """Return ``(centre, l1, l2, l3)`` for some induced claw, or None."""
    if not is_cubic(g):
        return find_claw_generic(g)
    for v in range(g.n):
        p, q, r = sorted(g.neighbours(v))
        if not (g.adjacent(p, q) or g.adjacent(p, r) or g.adjacent(q, r)):
            return (v, p, q, r)
    return None


def is_claw_free(g: Multigraph) -> bool:
    return find_claw(g) is None


def find_diamonds(g: Multigraph) -> list[Diamond]:
    """All induced diamonds of a simple cubic graph, ordered by smallest vertex.

    For each edge xy, the diamond candidates are the common neighbours of
    x and y; we need exactly two of them and they must be non-adjacent.
    """
    found: dict[frozenset[int], Diamond] = {}
    for x, y in g.edges:
        common = (set(g.neighbours(x)) & set(g.neighbours(y))) - {x, y}
        if len(common) != 2:
            continue
        a, b = sorted(common)
        if g.adjacent(a, b):
            continue
        key = frozenset((a, b, x, y))
        if key not in found:
            found[key] = Diamond(a, b, min(x, y), max(x, y))
    return sorted(found.values(), key=lambda d: min(d.vertices))


def recognize(g: Multigraph) -> RecognitionReport:
    cubic = is_cubic(g)
    simple = g.is_simple()
    report = RecognitionReport(
        n=g.n,
        m=g.m,
        connected=is_connected(g),
        cubic=cubic,
        simple=simple,
        bridges=find_bridges(g),
    )
    if simple:
        report.claw_witness = find_claw(g)
        report.claw_free = report.claw_witness is None
        if cubic:
            report.diamonds = find_diamonds(g)
    return report
