from topology_toolkit.complexes.simplex import (
    FVector,
    Simplex,
    SimplexSet,
    SimplicialComplex,
    canonical_key,
    iter_bits,
)
from topology_toolkit.complexes.constructors import (
    closure,
    cone,
    deletion,
    disjoint_union,
    double_suspension,
    induced_subcomplex,
    join,
    link,
    point,
    relabel,
    skeleton,
    sphere_zero,
    suspension,
    wedge_sum,
)


def f_vector(G: SimplicialComplex) -> FVector:
    """Simplex counts per dimension; ``()`` for the empty complex."""
    return G.f_vector()


def dimension(G: SimplicialComplex) -> int:
    """Maximal simplex dimension, -1 for the empty complex."""
    return G.dim


__all__ = [
    "FVector",
    "Simplex",
    "SimplexSet",
    "SimplicialComplex",
    "canonical_key",
    "iter_bits",
    "closure",
    "cone",
    "deletion",
    "dimension",
    "disjoint_union",
    "double_suspension",
    "f_vector",
    "induced_subcomplex",
    "join",
    "link",
    "point",
    "relabel",
    "skeleton",
    "sphere_zero",
    "suspension",
    "wedge_sum",
]
