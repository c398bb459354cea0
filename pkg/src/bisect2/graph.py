"""Vertex-indexed edge-list multigraphs and two-colourings.

Vertices are the integers ``0..n-1``; edge ids are positions in the edge
list and never change after construction.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import EndpointOutOfRange, LoopRejected

Edge = tuple[int, int]


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[Edge, ...]
    # incident[v] lists the ids of edges at v, in edge-id order
    incident: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise EndpointOutOfRange(i)
            if u == v:
                raise LoopRejected(i)
            inc[u].append(i)
            inc[v].append(i)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "incident", tuple(tuple(x) for x in inc))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def other(self, edge_id: int, v: int) -> int:
        u, w = self.edges[edge_id]
        return w if u == v else u

    def neighbours(self, v: int) -> list[int]:
        """Neighbours of ``v`` with multiplicity, in edge-id order."""
        return [self.other(e, v) for e in self.incident[v]]

    def multiplicity(self, u: int, v: int) -> int:
        return sum(1 for e in self.incident[u] if self.other(e, u) == v)

    def adjacent(self, u: int, v: int) -> bool:
        return any(self.other(e, u) == v for e in self.incident[u])

    def edge_between(self, u: int, v: int) -> int | None:
        """Lowest edge id joining ``u`` and ``v``, or None."""
        for e in self.incident[u]:
            if self.other(e, u) == v:
                return e
        return None

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def degree_sequence(self) -> list[int]:
        return sorted(len(x) for x in self.incident)


def new_multigraph(n: int, edges: Iterable[Sequence[int]]) -> Multigraph:
    return Multigraph(n, tuple(tuple(e) for e in edges))


def degree(g: Multigraph, v: int) -> int:
    return g.degree(v)


def is_cubic(g: Multigraph) -> bool:
    return all(len(x) == 3 for x in g.incident)


def is_connected(g: Multigraph) -> bool:
    if g.n == 0:
        return False
    return len(induced_subgraph_components(g, range(g.n))) == 1


def induced_subgraph_components(g: Multigraph, subset: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by ``subset``.

    Components are listed in order of their smallest vertex.
    """
    members = set(subset)
    seen: set[int] = set()
    out = []
    for s in sorted(members):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbours(v):
                if w in members and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def bfs_order(g: Multigraph) -> list[int]:
    """All vertices in BFS order, restarting at the lowest unvisited vertex."""
    seen = [False] * g.n
    order = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in g.neighbours(v):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


class Colour(enum.Enum):
    BLACK = "B"
    WHITE = "W"

    @property
    def opposite(self) -> Colour:
        return Colour.WHITE if self is Colour.BLACK else Colour.BLACK


BLACK = Colour.BLACK
WHITE = Colour.WHITE


@dataclass(frozen=True)
class Colouring:
    assignment: tuple[Colour, ...]

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, v: int) -> Colour:
        return self.assignment[v]

    def vertices(self, colour: Colour) -> list[int]:
        return [v for v, c in enumerate(self.assignment) if c is colour]

    @property
    def black(self) -> list[int]:
        return self.vertices(BLACK)

    @property
    def white(self) -> list[int]:
        return self.vertices(WHITE)

    def to_document(self) -> str:
        return "".join(c.value for c in self.assignment)

    @classmethod
    def from_string(cls, s: str) -> Colouring:
        return cls(tuple(Colour(ch) for ch in s))

    @classmethod
    def from_mapping(cls, n: int, colours: dict[int, Colour]) -> Colouring:
        missing = [v for v in range(n) if v not in colours]
        if missing:
            raise ValueError(f"vertices left uncoloured: {missing[:5]}")
        return cls(tuple(colours[v] for v in range(n)))
