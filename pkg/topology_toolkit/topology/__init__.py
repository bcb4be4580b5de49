from topology_toolkit.topology.stars import StarBasis, core, star, unit_ball, unit_sphere
from topology_toolkit.topology.open_sets import (
    Topology,
    TopologyEnumerator,
    boundary,
    closure,
    enumerate_topology,
    interior,
    is_closed,
    is_compact,
    is_locally_closed,
    is_open,
    locally_closed_count,
    relative_topology,
)
from topology_toolkit.topology.properties import (
    SeparationReport,
    cech_nerve_graph,
    connected_components,
    cycle_rank_check,
    is_connected,
    is_one_connected,
    nerve_dimension,
    separation_report,
    star_cover,
    topological_dimension,
    vertex_star_cover,
)

__all__ = [
    "StarBasis",
    "core",
    "star",
    "unit_ball",
    "unit_sphere",
    "Topology",
    "TopologyEnumerator",
    "boundary",
    "closure",
    "enumerate_topology",
    "interior",
    "is_closed",
    "is_compact",
    "is_locally_closed",
    "is_open",
    "locally_closed_count",
    "relative_topology",
    "SeparationReport",
    "cech_nerve_graph",
    "connected_components",
    "cycle_rank_check",
    "is_connected",
    "is_one_connected",
    "nerve_dimension",
    "separation_report",
    "star_cover",
    "topological_dimension",
    "vertex_star_cover",
]
