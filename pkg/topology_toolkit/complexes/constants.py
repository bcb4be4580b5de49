"""
Reference data for the named complexes.
"""

# Facets of a 16-vertex triangulated homology 3-sphere (Poincaré sphere).
# Closure: f-vector (16, 106, 180, 90), 392 simplices.
HOMOLOGY_SPHERE_FACETS = (
    (1, 2, 4, 9), (1, 2, 4, 15), (1, 2, 6, 14), (1, 2, 6, 15), (1, 2, 9, 14),
    (1, 3, 4, 12), (1, 3, 4, 15), (1, 3, 7, 10), (1, 3, 7, 12), (1, 3, 10, 15),
    (1, 4, 9, 12), (1, 5, 6, 13), (1, 5, 6, 14), (1, 5, 8, 11), (1, 5, 8, 13),
    (1, 5, 11, 14), (1, 6, 13, 15), (1, 7, 8, 10), (1, 7, 8, 11), (1, 7, 11, 12),
    (1, 8, 10, 13), (1, 9, 11, 12), (1, 9, 11, 14), (1, 10, 13, 15), (2, 3, 5, 10),
    (2, 3, 5, 11), (2, 3, 7, 10), (2, 3, 7, 13), (2, 3, 11, 13), (2, 4, 9, 13),
    (2, 4, 11, 13), (2, 4, 11, 15), (2, 5, 8, 11), (2, 5, 8, 12), (2, 5, 10, 12),
    (2, 6, 10, 12), (2, 6, 10, 14), (2, 6, 12, 15), (2, 7, 9, 13), (2, 7, 9, 14),
    (2, 7, 10, 14), (2, 8, 11, 15), (2, 8, 12, 15), (3, 4, 5, 14), (3, 4, 5, 15),
    (3, 4, 12, 14), (3, 5, 10, 15), (3, 5, 11, 14), (3, 7, 12, 13), (3, 11, 13, 14),
    (3, 12, 13, 14), (4, 5, 6, 7), (4, 5, 6, 14), (4, 5, 7, 15), (4, 6, 7, 11),
    (4, 6, 10, 11), (4, 6, 10, 14), (4, 7, 11, 15), (4, 8, 9, 12), (4, 8, 9, 13),
    (4, 8, 10, 13), (4, 8, 10, 14), (4, 8, 12, 14), (4, 10, 11, 13), (5, 6, 7, 13),
    (5, 7, 9, 13), (5, 7, 9, 15), (5, 8, 9, 12), (5, 8, 9, 13), (5, 9, 10, 12),
    (5, 9, 10, 15), (6, 7, 11, 12), (6, 7, 12, 13), (6, 10, 11, 12), (6, 12, 13, 15),
    (7, 8, 10, 14), (7, 8, 11, 15), (7, 8, 14, 15), (7, 9, 14, 15), (8, 12, 14, 15),
    (9, 10, 11, 12), (9, 10, 11, 16), (9, 10, 15, 16), (9, 11, 14, 16), (9, 14, 15, 16),
    (10, 11, 13, 16), (10, 13, 15, 16), (11, 13, 14, 16), (12, 13, 14, 15), (13, 14, 15, 16),
)

# Figure-1 graph: a triangle with a few pendant trees, 17 Whitney simplices.
FIG1_EDGES = (
    (1, 2), (2, 3), (3, 1), (3, 4), (3, 6), (3, 8), (8, 9), (8, 10),
)

# Triangulated cylinder on 8 vertices (two 4-cycles and a zig-zag band).
CYLINDER_EDGES = (
    (1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5),
    (1, 5), (5, 2), (2, 6), (6, 3), (3, 7), (7, 4), (4, 8), (8, 1),
)

# Octahedron graph: 6 vertices, opposite pairs (1, 6), (2, 4), (3, 5) not adjacent.
OCTAHEDRON_EDGES = (
    (1, 2), (1, 3), (1, 4), (1, 5),
    (6, 2), (6, 3), (6, 4), (6, 5),
    (2, 3), (3, 4), (4, 5), (5, 2),
)

SCHEMA_VERSION = 1
