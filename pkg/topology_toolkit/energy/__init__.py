from topology_toolkit.energy.green import (
    REGIONS,
    ConnectionMatrix,
    GreenMatrix,
    connection_matrix,
    curvature,
    energy_sum,
    general_energy_check,
    green_h_matrix,
    green_matrix,
    green_matrix_stats,
    green_star_identity,
    monitor_ones_positive_definite,
    nullity_report,
)

__all__ = [
    "REGIONS",
    "ConnectionMatrix",
    "GreenMatrix",
    "connection_matrix",
    "curvature",
    "energy_sum",
    "general_energy_check",
    "green_h_matrix",
    "green_matrix",
    "green_matrix_stats",
    "green_star_identity",
    "monitor_ones_positive_definite",
    "nullity_report",
]
