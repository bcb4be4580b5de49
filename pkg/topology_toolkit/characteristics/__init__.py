from topology_toolkit.characteristics.wu import (
    SUPPORTED_ORDERS,
    ball_formula_check,
    euler,
    fermi_characteristic,
    relative_wu,
    relative_wu_under_refinement,
    star_characteristics,
    wu,
    wu_bruteforce,
    wu_fast,
    wu_h,
)

__all__ = [
    "SUPPORTED_ORDERS",
    "ball_formula_check",
    "euler",
    "fermi_characteristic",
    "relative_wu",
    "relative_wu_under_refinement",
    "star_characteristics",
    "wu",
    "wu_bruteforce",
    "wu_fast",
    "wu_h",
]
