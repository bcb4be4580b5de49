from topology_toolkit.hodge.exterior import (
    OrientedComplex,
    betti,
    block_sizes,
    euler_poincare_check,
    exterior_derivative,
    harmonic_basis,
    heat_supertrace,
    hodge_blocks,
    mckean_singer_check,
    oriented,
)
from topology_toolkit.hodge.interaction import InteractionComplex, wu_betti
from topology_toolkit.hodge.dynamics import (
    SimplexMap,
    fixed_simplices,
    graph_automorphisms,
    graph_endomorphisms,
    index_sum,
    is_continuous,
    is_simplicial,
    koopman,
    lefschetz_check,
    lefschetz_number,
    map_sign,
    random_continuous_map,
    simplex_map_from_vertex_map,
)

__all__ = [
    "OrientedComplex",
    "betti",
    "block_sizes",
    "euler_poincare_check",
    "exterior_derivative",
    "harmonic_basis",
    "heat_supertrace",
    "hodge_blocks",
    "mckean_singer_check",
    "oriented",
    "InteractionComplex",
    "wu_betti",
    "SimplexMap",
    "fixed_simplices",
    "graph_automorphisms",
    "graph_endomorphisms",
    "index_sum",
    "is_continuous",
    "is_simplicial",
    "koopman",
    "lefschetz_check",
    "lefschetz_number",
    "map_sign",
    "random_continuous_map",
    "simplex_map_from_vertex_map",
]
