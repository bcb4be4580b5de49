# topology_toolkit/__init__.py

from . import characteristics, complexes, energy, graphs, hodge, homeo, io, recognition, topology
from .complexes import Simplex, SimplexSet, SimplicialComplex, closure
from .config import ToolkitConfig
from .errors import ToolkitError
from .report import InvariantReport, VerificationReport, build_invariant_report

__version__ = "0.1.0"

__all__ = [
    "characteristics",
    "complexes",
    "energy",
    "graphs",
    "hodge",
    "homeo",
    "io",
    "recognition",
    "topology",
    "Simplex",
    "SimplexSet",
    "SimplicialComplex",
    "closure",
    "ToolkitConfig",
    "ToolkitError",
    "InvariantReport",
    "VerificationReport",
    "build_invariant_report",
]
