"""Exhaustive isomorphism search for small multigraphs.

Used to validate structure round-trips.  Colour refinement prunes the
candidate sets; the search itself is a plain backtracking over vertex
images that checks edge multiplicities against every mapped vertex.
"""

from __future__ import annotations

from collections import Counter

from .graph import Multigraph


def _refine(g1: Multigraph, g2: Multigraph) -> tuple[list[int], list[int]]:
    lab1 = [g1.degree(v) for v in range(g1.n)]
    lab2 = [g2.degree(v) for v in range(g2.n)]
    classes = len(set(lab1) | set(lab2))
    while True:
        table: dict[tuple, int] = {}

        def relabel(g: Multigraph, lab: list[int]) -> list[int]:
            out = []
            for v in range(g.n):
                key = (lab[v], tuple(sorted(lab[w] for w in g.neighbours(v))))
                out.append(table.setdefault(key, len(table)))
            return out

        new1, new2 = relabel(g1, lab1), relabel(g2, lab2)
        if len(table) == classes or Counter(new1) != Counter(new2):
            return new1, new2
        lab1, lab2, classes = new1, new2, len(table)


def invariant_screen(g1: Multigraph, g2: Multigraph) -> bool:
    """Cheap necessary condition: order, size and refined degree profile agree."""
    if g1.n != g2.n or g1.m != g2.m or g1.degree_sequence() != g2.degree_sequence():
        return False
    lab1, lab2 = _refine(g1, g2)
    return Counter(lab1) == Counter(lab2)


def find_isomorphism(g1: Multigraph, g2: Multigraph) -> list[int] | None:
    """A vertex map ``f`` with ``g1 ≅ g2`` under ``v -> f[v]``, or None."""
    if g1.n != g2.n or g1.m != g2.m or g1.degree_sequence() != g2.degree_sequence():
        return None
    lab1, lab2 = _refine(g1, g2)
    if Counter(lab1) != Counter(lab2):
        return None
    n = g1.n
    # order g1 so that each vertex (after a component's first) has a mapped neighbour
    order: list[int] = []
    anchor: dict[int, int] = {}
    placed = [False] * n
    class_size = Counter(lab1)
    for s in sorted(range(n), key=lambda v: class_size[lab1[v]]):
        if placed[s]:
            continue
        placed[s] = True
        order.append(s)
        i = len(order) - 1
        while i < len(order):
            v = order[i]
            for w in g1.neighbours(v):
                if not placed[w]:
                    placed[w] = True
                    anchor[w] = v
                    order.append(w)
            i += 1
    mult1 = [Counter(g1.neighbours(v)) for v in range(n)]
    mult2 = [Counter(g2.neighbours(v)) for v in range(n)]
    f = [-1] * n
    used = [False] * n

    def consistent(u: int, c: int) -> bool:
        if lab1[u] != lab2[c]:
            return False
        mapped1 = {f[w]: k for w, k in mult1[u].items() if f[w] != -1}
        mapped2 = {w: k for w, k in mult2[c].items() if used[w]}
        return mapped1 == mapped2

    def extend(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        if u in anchor:
            candidates = sorted(set(g2.neighbours(f[anchor[u]])))
        else:
            candidates = range(n)
        for c in candidates:
            if used[c] or not consistent(u, c):
                continue
            f[u] = c
            used[c] = True
            if extend(i + 1):
                return True
            f[u] = -1
            used[c] = False
        return False

    return list(f) if extend(0) else None


def are_isomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    return find_isomorphism(g1, g2) is not None
