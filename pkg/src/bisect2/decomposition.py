"""Structure of bridgeless claw-free cubic graphs.

Every such graph is K4, a ring of diamonds, or is obtained from a
bridgeless cubic multigraph H by blowing each vertex up into a triangle
and replacing some of the resulting non-triangle edges by strings of
diamonds.  :func:`decompose` recovers that structure from a concrete graph
and :func:`expand` rebuilds a concrete graph from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Union

from . import constructions
from .errors import GraphError, InvalidStructure, StructureViolation
from .graph import Multigraph, is_connected, is_cubic
from .isomorphism import are_isomorphic, invariant_screen
from .recognition import Diamond, find_bridges, find_diamonds

ISOMORPHISM_LIMIT = 16


@dataclass(frozen=True)
class DiamondString:
    """A maximal chain of diamonds running from ``attach_u`` to ``attach_v``.

    Diamonds are oriented along the chain: ``diamonds[0].a`` is adjacent to
    ``attach_u``, each ``diamonds[i].b`` to ``diamonds[i+1].a``, and
    ``diamonds[-1].b`` to ``attach_v``.
    """

    diamonds: tuple[Diamond, ...]
    attach_u: int
    attach_v: int

    @property
    def end_entries(self) -> tuple[int, int]:
        return (self.diamonds[0].a, self.diamonds[-1].b)

    def reversed(self) -> DiamondString:
        flipped = tuple(Diamond(d.b, d.a, d.x, d.y) for d in reversed(self.diamonds))
        return DiamondString(flipped, self.attach_v, self.attach_u)

    def to_json(self) -> dict:
        return {
            "attach": [self.attach_u, self.attach_v],
            "diamonds": [list(d.vertices) for d in self.diamonds],
        }


@dataclass(frozen=True)
class K4Structure:
    variant: ClassVar[str] = "k4"

    def to_json(self) -> dict:
        return {"variant": self.variant}


@dataclass(frozen=True)
class RingOfDiamonds:
    """Diamonds in cyclic order; ``diamonds[i].b`` is adjacent to ``diamonds[i+1].a``."""

    diamonds: tuple[Diamond, ...]
    variant: ClassVar[str] = "ring_of_diamonds"

    def to_json(self) -> dict:
        return {"variant": self.variant, "diamonds": [list(d.vertices) for d in self.diamonds]}


@dataclass(frozen=True)
class TriangleReplaced:
    """G built from the multigraph ``h``.

    ``triangle_of[i][s]`` is the G-vertex in the triangle of H-vertex ``i``
    that carries the H-edge occupying port slot ``s`` (slots are claimed in
    H-edge id order, as in :func:`constructions.triangle_ports`).
    ``strings`` maps H-edge ids to the diamond string standing in for them,
    oriented from the lower-slot end ``u`` of the H-edge ``(u, v)``.
    """

    h: Multigraph
    triangle_of: tuple[tuple[int, int, int], ...]
    strings: dict[int, DiamondString] = field(default_factory=dict)
    variant: ClassVar[str] = "triangle_replaced"

    def port_vertices(self) -> list[tuple[int, int]]:
        """G-vertices at the two ends of each H-edge."""
        return [
            (self.triangle_of[pu // 3][pu % 3], self.triangle_of[pv // 3][pv % 3])
            for pu, pv in constructions.triangle_ports(self.h)
        ]

    def triangle_vertex_map(self) -> list[int]:
        """``map[t]`` is the G-vertex for vertex ``t`` of ``triangle_replacement(h)``."""
        return [self.triangle_of[t // 3][t % 3] for t in range(3 * self.h.n)]

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "h": {"n": self.h.n, "edges": [list(e) for e in self.h.edges]},
            "triangles": [list(t) for t in self.triangle_of],
            "strings": [dict(h_edge=e, **s.to_json()) for e, s in sorted(self.strings.items())],
        }


Structure = Union[K4Structure, RingOfDiamonds, TriangleReplaced]


def _external(g: Multigraph, d: Diamond, v: int) -> int:
    inside = set(d.vertices)
    (w,) = [w for w in g.neighbours(v) if w not in inside]
    return w


def _exited_at(d: Diamond, v: int) -> Diamond:
    e = d.entered_at(v)
    return Diamond(e.b, e.a, e.x, e.y)


def _ring_order(g: Multigraph, diamonds: list[Diamond], owner: dict[int, Diamond]) -> tuple[Diamond, ...]:
    start = diamonds[0]
    cur = start
    order = [cur]
    while True:
        w = _external(g, cur, cur.b)
        nxt = owner[w]
        if nxt == start:
            if w != start.a:
                raise StructureViolation("ring of diamonds closes on the wrong vertex")
            break
        if len(order) >= len(diamonds):
            raise StructureViolation("diamond ring does not close")
        try:
            cur = nxt.entered_at(w)
        except ValueError as exc:
            raise StructureViolation(str(exc)) from exc
        order.append(cur)
    if len(order) != len(diamonds):
        raise StructureViolation("diamonds do not form a single ring")
    return tuple(order)


def _strings(g: Multigraph, diamonds: list[Diamond], owner: dict[int, Diamond]) -> list[DiamondString]:
    done: set[Diamond] = set()
    out = []
    for d in diamonds:
        if d in done:
            continue
        cur = d
        # walk back to the first diamond of the chain
        for _ in range(len(diamonds) + 1):
            w = _external(g, cur, cur.a)
            if w not in owner:
                break
            try:
                cur = _exited_at(owner[w], w)
            except ValueError as exc:
                raise StructureViolation(str(exc)) from exc
        else:
            raise StructureViolation("closed ring of diamonds inside a larger graph")
        attach_u = _external(g, cur, cur.a)
        chain = [cur]
        w = _external(g, cur, cur.b)
        while w in owner:
            try:
                cur = owner[w].entered_at(w)
            except ValueError as exc:
                raise StructureViolation(str(exc)) from exc
            chain.append(cur)
            w = _external(g, cur, cur.b)
        if attach_u == w:
            raise StructureViolation(f"diamond string starts and ends at vertex {w}")
        for c in chain:
            done.add(owner[c.a])
        out.append(DiamondString(tuple(chain), attach_u, w))
    return out


def _triangles(g: Multigraph, rest: list[int]) -> dict[int, frozenset[int]]:
    in_rest = set(rest)
    tri_of: dict[int, frozenset[int]] = {}
    for v in rest:
        nbrs = [w for w in g.neighbours(v) if w in in_rest]
        found = [
            frozenset((v, p, q))
            for i, p in enumerate(nbrs)
            for q in nbrs[i + 1 :]
            if g.adjacent(p, q)
        ]
        if len(found) != 1:
            raise StructureViolation(f"vertex {v} lies in {len(found)} triangles outside diamonds")
        tri_of[v] = found[0]
    for v, t in tri_of.items():
        if any(tri_of[w] != t for w in t):
            raise StructureViolation(f"triangles at vertex {v} overlap")
    return tri_of


def decompose(g: Multigraph) -> Structure:
    """Recover the K4 / ring / triangle-replacement structure of ``g``."""
    if not g.is_simple() or not is_cubic(g):
        raise StructureViolation("input must be a simple cubic graph")
    if not is_connected(g):
        raise StructureViolation("input must be connected")
    if g.n == 4:
        return K4Structure()

    diamonds = find_diamonds(g)
    owner = {v: d for d in diamonds for v in d.vertices}
    if len(owner) != 4 * len(diamonds):
        raise StructureViolation("diamonds overlap")
    if len(owner) == g.n:
        return RingOfDiamonds(_ring_order(g, diamonds, owner))

    strings = _strings(g, diamonds, owner)
    at_end = {}
    for s in strings:
        at_end[s.attach_u] = s
        at_end[s.attach_v] = s.reversed()

    rest = [v for v in range(g.n) if v not in owner]
    tri_of = _triangles(g, rest)
    triangles = sorted(set(tri_of.values()), key=min)
    index = {t: i for i, t in enumerate(triangles)}

    h_edges: list[tuple[int, int]] = []
    slots: list[list[int]] = [[] for _ in triangles]
    h_strings: dict[int, DiamondString] = {}
    for w in rest:
        (z,) = [z for z in g.neighbours(w) if z not in tri_of[w]]
        if z in owner:
            s = at_end[w]
            partner = s.attach_v
        else:
            s = None
            partner = z
        if partner < w:
            continue
        e = len(h_edges)
        h_edges.append((index[tri_of[w]], index[tri_of[partner]]))
        slots[index[tri_of[w]]].append(w)
        slots[index[tri_of[partner]]].append(partner)
        if s is not None:
            h_strings[e] = s
    try:
        h = Multigraph(len(triangles), tuple(h_edges))
    except GraphError as exc:
        raise StructureViolation(f"contracted multigraph is invalid: {exc}") from exc
    if not is_cubic(h) or any(len(s) != 3 for s in slots):
        raise StructureViolation("contracted multigraph is not cubic")
    if find_bridges(h):
        raise StructureViolation("contracted multigraph has a bridge")
    return TriangleReplaced(h, tuple(tuple(s) for s in slots), h_strings)


def expand(d: Structure) -> Multigraph:
    """Concrete graph for a structure, in the canonical labelling.

    For a triangle replacement, H-vertex ``i`` becomes ``3i, 3i+1, 3i+2``
    and string vertices are appended in H-edge order.
    """
    if isinstance(d, K4Structure):
        return constructions.k4()
    if isinstance(d, RingOfDiamonds):
        if len(d.diamonds) < 2:
            raise InvalidStructure("a ring needs at least two diamonds")
        return constructions.ring_of_diamonds(len(d.diamonds))
    if isinstance(d, TriangleReplaced):
        if not is_cubic(d.h):
            raise InvalidStructure("H is not cubic")
        g = constructions.triangle_replacement(d.h)
        for e in sorted(d.strings):
            if not 0 <= e < d.h.m:
                raise InvalidStructure(f"string on missing H-edge {e}")
            g = constructions.insert_string(g, 3 * d.h.n + e, len(d.strings[e].diamonds))
        return g
    raise InvalidStructure(f"unknown structure {d!r}")


def roundtrip_check(g: Multigraph, d: Structure | None = None) -> bool:
    """Whether ``expand(decompose(g))`` is isomorphic to ``g``.

    Exact search up to 16 vertices; beyond that only invariants (order,
    size, refined degree profile, diamond count) are compared.
    """
    if d is None:
        d = decompose(g)
    g2 = expand(d)
    if g.n <= ISOMORPHISM_LIMIT:
        return are_isomorphic(g, g2)
    return invariant_screen(g, g2) and len(find_diamonds(g)) == len(find_diamonds(g2))
