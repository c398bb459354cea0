"""Shared graph fixtures."""

from bisect2.generators import gen_insert_string, gen_named, gen_ring_of_diamonds, gen_triangle_replacement


def claw_free_fixtures():
    """Named bridgeless claw-free cubic graphs, small to medium."""
    prism = gen_named("prism")
    k4_tri = gen_triangle_replacement(gen_named("k4"))
    out = {
        "k4": gen_named("k4"),
        "prism": prism,
        "k4_triangles": k4_tri,
        "petersen_triangles": gen_triangle_replacement(gen_named("petersen")),
        "prism_string1": gen_insert_string(prism, 6, 1),
        "prism_string2": gen_insert_string(prism, 6, 2),
        "prism_two_strings": gen_insert_string(gen_insert_string(prism, 6, 1), 7, 1),
        "k4_triangles_string3": gen_insert_string(k4_tri, 12, 3),
    }
    for k in range(2, 9):
        out[f"ring{k}"] = gen_ring_of_diamonds(k)
    return out
