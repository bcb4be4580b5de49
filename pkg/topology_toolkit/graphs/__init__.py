from topology_toolkit.graphs.graph import (
    complete_graph,
    complex_to_graph,
    cycle_graph,
    make_graph,
    path_graph,
    skeleton_graph,
    star_graph,
    unit_sphere_graph,
    wheel_graph,
    whitney_complex,
)
from topology_toolkit.graphs.refinement import barycentric_refine, edge_refine, refine_times, refined_f_vector
from topology_toolkit.graphs.products import (
    product_simplex_count,
    shannon_product,
    stanley_reisner_product,
)
from topology_toolkit.graphs.quotient import QuotientResult, is_continuous_graph_map, quotient

__all__ = [
    "complete_graph",
    "complex_to_graph",
    "cycle_graph",
    "make_graph",
    "path_graph",
    "skeleton_graph",
    "star_graph",
    "unit_sphere_graph",
    "wheel_graph",
    "whitney_complex",
    "barycentric_refine",
    "edge_refine",
    "refine_times",
    "refined_f_vector",
    "product_simplex_count",
    "shannon_product",
    "stanley_reisner_product",
    "QuotientResult",
    "is_continuous_graph_map",
    "quotient",
]
