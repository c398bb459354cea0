"""Constructive 2-bisections of bridgeless claw-free cubic graphs, and a verifier
for k-bisections of arbitrary graphs.

The construction follows the graph's structure:

* K4 is split into two adjacent pairs;
* a ring of diamonds gets the same asymmetric colouring on every diamond;
* otherwise G comes from a cubic multigraph H.  A perfect matching M of H
  leaves a 2-factor whose circuits become even cycles in the triangle
  replacement of H; those cycles are coloured alternately, the ends of
  each matching edge get opposite colours, and diamond strings are then
  coloured around their fixed end colours.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import constructions
from .decomposition import (
    DiamondString,
    K4Structure,
    RingOfDiamonds,
    Structure,
    TriangleReplaced,
    decompose,
)
from .errors import ConstructionError, LengthMismatch, OddCircuit, PreconditionFailed
from .graph import BLACK, WHITE, Colour, Colouring, Multigraph, induced_subgraph_components
from .matching import CircuitFamily, Matching, expand_circuits, perfect_matching, two_factor
from .recognition import Diamond, RecognitionReport, recognize


class DiamondKind(enum.Enum):
    SYMMETRIC = "symmetric"
    ASYMMETRIC = "asymmetric"


@dataclass(frozen=True)
class DiamondColouring:
    kind: DiamondKind
    colours: dict[int, Colour]


def classify_diamond(d: Diamond, colouring: Colouring) -> DiamondColouring | None:
    """Kind of a 2+2 colouring on ``d``; None if the diamond is not balanced."""
    colours = {v: colouring[v] for v in d.vertices}
    if sum(c is BLACK for c in colours.values()) != 2:
        return None
    kind = DiamondKind.SYMMETRIC if colours[d.a] is colours[d.b] else DiamondKind.ASYMMETRIC
    return DiamondColouring(kind, colours)


@dataclass
class VerifyReport:
    k: int
    n_black: int
    n_white: int
    components: list[tuple[Colour, frozenset[int]]] = field(default_factory=list)

    @property
    def balanced(self) -> bool:
        return self.n_black == self.n_white

    @property
    def max_order(self) -> int:
        return max((len(c) for _, c in self.components), default=0)

    def k_ok(self, k: int | None = None) -> bool:
        return self.max_order <= (self.k if k is None else k)

    @property
    def ok(self) -> bool:
        """Balanced and every monochromatic component within the bound."""
        return self.balanced and self.k_ok()

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "balanced": self.balanced,
            "black": self.n_black,
            "white": self.n_white,
            "max_order": self.max_order,
            "k_ok": self.k_ok(),
            "ok": self.ok,
            "components": [{"colour": c.value, "vertices": sorted(s)} for c, s in self.components],
        }


def verify(g: Multigraph, c: Colouring, k: int = 2) -> VerifyReport:
    if len(c) != g.n:
        raise LengthMismatch(f"colouring has {len(c)} entries, graph has {g.n} vertices")
    black, white = c.black, c.white
    comps = [(BLACK, s) for s in induced_subgraph_components(g, black)]
    comps += [(WHITE, s) for s in induced_subgraph_components(g, white)]
    return VerifyReport(k, len(black), len(white), comps)


def colour_circuit_and_matching(
    hd: Multigraph, family: CircuitFamily, m_prime: tuple[int, ...] | list[int]
) -> Colouring:
    """Colour the triangle replacement from its expanded circuits and matching edges.

    Each expanded circuit alternates colours starting with Black at its
    lowest vertex; each matching edge gets Black at its lower end.
    """
    colours: dict[int, Colour] = {}

    def put(v: int, c: Colour) -> None:
        if v in colours:
            raise ConstructionError(f"vertex {v} coloured twice")
        colours[v] = c

    for cycle in family.expanded:
        if len(cycle) % 2:
            raise OddCircuit(f"expanded circuit of odd length {len(cycle)}")
        start = cycle.index(min(cycle))
        for i in range(len(cycle)):
            put(cycle[(start + i) % len(cycle)], BLACK if i % 2 == 0 else WHITE)
    for e in m_prime:
        u, v = sorted(hd.edges[e])
        put(u, BLACK)
        put(v, WHITE)
    try:
        return Colouring.from_mapping(hd.n, colours)
    except ValueError as exc:
        raise ConstructionError(str(exc)) from exc


def colour_string(s: DiamondString, colour_u: Colour, colour_v: Colour) -> dict[int, Colour]:
    """Colour the diamonds of a string whose end vertices are already coloured.

    Equal end colours: every diamond is symmetric, with its non-adjacent
    pair in the opposite colour.  Different end colours: every diamond is
    asymmetric and each diamond's entry vertex is opposite to the vertex
    before it, which leaves the last exit vertex opposite to ``colour_v``.
    """
    out: dict[int, Colour] = {}
    if colour_u is colour_v:
        for d in s.diamonds:
            out[d.a] = out[d.b] = colour_u.opposite
            out[d.x] = out[d.y] = colour_u
        return out
    # b_i keeps colour_u, so a_{i+1} is opposite to it for every i
    for d in s.diamonds:
        out[d.a] = out[d.x] = colour_u.opposite
        out[d.b] = out[d.y] = colour_u
    return out


def colour_ring(diamonds: tuple[Diamond, ...] | list[Diamond], n: int | None = None) -> Colouring:
    """Asymmetric colouring of every diamond of a ring: ``a, x`` Black and ``y, b`` White.

    Consecutive diamonds meet at ``b_i`` (White) and ``a_{i+1}`` (Black),
    so any ring length works.
    """
    colours: dict[int, Colour] = {}
    for d in diamonds:
        colours[d.a] = colours[d.x] = BLACK
        colours[d.b] = colours[d.y] = WHITE
    return Colouring.from_mapping(4 * len(diamonds) if n is None else n, colours)


def _k4_colouring(g: Multigraph) -> Colouring:
    return Colouring((BLACK, BLACK, WHITE, WHITE)[: g.n])


@dataclass
class Solution:
    colouring: Colouring
    recognition: RecognitionReport
    structure: Structure
    matching: Matching | None = None
    family: CircuitFamily | None = None
    hd_colouring: Colouring | None = None


def colour_triangle_replaced(n: int, d: TriangleReplaced) -> tuple[Colouring, Matching, CircuitFamily, Colouring]:
    """Colour a graph of order ``n`` with structure ``d``.

    Returns the colouring of G together with the matching of H, its circuit
    family and the colouring of the triangle replacement of H.
    """
    h = d.h
    hd = constructions.triangle_replacement(h)
    m = perfect_matching(h)
    family = expand_circuits(h, two_factor(h, m))
    hd_colouring = colour_circuit_and_matching(hd, family, m.m_prime)

    colours: dict[int, Colour] = {}
    for t, v in enumerate(d.triangle_vertex_map()):
        colours[v] = hd_colouring[t]
    for s in d.strings.values():
        colours.update(colour_string(s, colours[s.attach_u], colours[s.attach_v]))
    return Colouring.from_mapping(n, colours), m, family, hd_colouring


def solve_detailed(g: Multigraph) -> Solution:
    report = recognize(g)
    if not report.theorem_applies:
        raise PreconditionFailed("; ".join(report.failures()) or "preconditions not met", report)
    structure = decompose(g)
    if isinstance(structure, K4Structure):
        return Solution(_k4_colouring(g), report, structure)
    if isinstance(structure, RingOfDiamonds):
        return Solution(colour_ring(structure.diamonds, g.n), report, structure)
    colouring, m, family, hd_colouring = colour_triangle_replaced(g.n, structure)
    return Solution(colouring, report, structure, m, family, hd_colouring)


def solve(g: Multigraph) -> Colouring:
    """A 2-bisection of a connected bridgeless claw-free simple cubic graph."""
    return solve_detailed(g).colouring
