"""2-bisections of bridgeless claw-free cubic graphs.

A k-bisection is a balanced two-colouring of the vertices in which every
monochromatic connected component has at most k vertices.
"""

from .bisector import VerifyReport, colour_ring, colour_string, solve, solve_detailed, verify
from .codec import read_colouring, read_edge_list, read_graph6, write_colouring, write_edge_list, write_graph6
from .decomposition import (
    DiamondString,
    K4Structure,
    RingOfDiamonds,
    TriangleReplaced,
    decompose,
    expand,
    roundtrip_check,
)
from .graph import BLACK, WHITE, Colour, Colouring, Multigraph, degree, induced_subgraph_components, is_cubic, new_multigraph
from .matching import expand_circuits, perfect_matching, two_factor
from .oracle import count_k_bisections, search_k_bisection
from .recognition import Diamond, find_bridges, find_diamonds, is_claw_free, recognize

__version__ = "0.1.0"
