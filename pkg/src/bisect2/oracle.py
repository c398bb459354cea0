"""Exhaustive search for k-bisections of small graphs.

Vertices are coloured in BFS order from vertex 0.  A branch is abandoned
as soon as a colour class would exceed n/2 or the monochromatic component
of the vertex just coloured grows beyond k.  Components only ever merge
as vertices are added, so checking the new vertex's component suffices.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Iterator

from .errors import OddOrder, OverCap
from .graph import BLACK, WHITE, Colour, Colouring, Multigraph, bfs_order

SEARCH_CAP = 24
COUNT_CAP = 16
CAP_ENV = "BISECT2_ORACLE_CAP"


@dataclass
class SearchStats:
    nodes_explored: int = 0
    solutions_found: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "nodes_explored": self.nodes_explored,
            "solutions_found": self.solutions_found,
            "elapsed_s": round(self.elapsed, 6),
        }


def search_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else SEARCH_CAP


def _check_input(g: Multigraph, cap: int) -> None:
    if g.n % 2:
        raise OddOrder(f"graph has odd order {g.n}")
    if g.n > cap:
        raise OverCap(f"graph has {g.n} vertices, oracle cap is {cap}")


def _backtrack(g: Multigraph, k: int, stats: SearchStats, first_black: bool) -> Iterator[list[Colour]]:
    n = g.n
    half = n // 2
    order = bfs_order(g)
    nbrs = [sorted(set(g.neighbours(v))) for v in range(n)]
    colour: list[Colour | None] = [None] * n
    used = {BLACK: 0, WHITE: 0}

    def component_exceeds(v: int, c: Colour) -> bool:
        seen = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if w not in seen and colour[w] is c:
                    seen.add(w)
                    if len(seen) > k:
                        return True
                    stack.append(w)
        return False

    def step(i: int) -> Iterator[list[Colour]]:
        if i == n:
            stats.solutions_found += 1
            yield list(colour)  # type: ignore[arg-type]
            return
        v = order[i]
        choices = (BLACK,) if (first_black and i == 0) else (BLACK, WHITE)
        for c in choices:
            if used[c] == half:
                continue
            stats.nodes_explored += 1
            colour[v] = c
            used[c] += 1
            if not component_exceeds(v, c):
                yield from step(i + 1)
            colour[v] = None
            used[c] -= 1

    if k < 1 and n > 0:
        return
    yield from step(0)


def search_k_bisection(g: Multigraph, k: int, cap: int | None = None) -> tuple[Colouring | None, SearchStats]:
    """Some k-bisection of ``g``, or None if none exists (the search is exhaustive).

    Vertex 0 is fixed Black; swapping colours maps k-bisections to
    k-bisections, so this loses nothing.
    """
    _check_input(g, search_cap() if cap is None else cap)
    stats = SearchStats()
    t0 = time.perf_counter()
    found = next(_backtrack(g, k, stats, first_black=True), None)
    stats.elapsed = time.perf_counter() - t0
    return (Colouring(tuple(found)) if found is not None else None), stats


def count_k_bisections(g: Multigraph, k: int, cap: int = COUNT_CAP) -> int:
    """Number of k-bisections as labelled colourings (colour swaps counted separately)."""
    return count_k_bisections_with_stats(g, k, cap)[0]


def count_k_bisections_with_stats(g: Multigraph, k: int, cap: int = COUNT_CAP) -> tuple[int, SearchStats]:
    _check_input(g, cap)
    stats = SearchStats()
    t0 = time.perf_counter()
    total = sum(1 for _ in _backtrack(g, k, stats, first_black=False))
    stats.elapsed = time.perf_counter() - t0
    return total, stats
