from typing import Any, Callable, Dict, Union
from pathlib import Path

import networkx as nx

from topology_toolkit.complexes.constants import (
    CYLINDER_EDGES,
    FIG1_EDGES,
    HOMOLOGY_SPHERE_FACETS,
    OCTAHEDRON_EDGES,
)
from topology_toolkit.complexes.constructors import closure, double_suspension, wedge_sum
from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.errors import ComplexParseError
from topology_toolkit.graphs.graph import (
    complete_graph,
    cycle_graph,
    make_graph,
    path_graph,
    star_graph,
    wheel_graph,
    whitney_complex,
)
from topology_toolkit.io.base import ComplexReader
from topology_toolkit.io.readers import FacetListReader, GraphReader, VertexMapReader


class ReaderFactory:
    """
    Factory choosing a reader from the top-level keys of a JSON document.

    Examples
    --------
    >>> reader = ReaderFactory.create_reader({"facets": [[1, 2]]})
    >>> type(reader).__name__
    'FacetListReader'
    >>> G = ReaderFactory.read("octahedron.json")
    """

    # Mapping of JSON keys to reader classes
    READER_MAP = {
        'facets': FacetListReader,
        'vertices': GraphReader,
        'edges': GraphReader,
        'map': VertexMapReader,
    }

    @classmethod
    def create_reader(cls, document: Dict[str, Any], verbose: bool = False) -> ComplexReader:
        """
        Create a reader for a parsed document.

        An empty document reads as a facet list, giving the empty complex.

        Raises
        ------
        ComplexParseError
            If no key of the document is known.
        """
        if not document:
            return FacetListReader(verbose=verbose)
        for key in document:
            if key in cls.READER_MAP:
                return cls.READER_MAP[key](verbose=verbose)
        supported = ", ".join(cls.get_supported_keys())
        raise ComplexParseError(
            f"Unsupported document keys: {', '.join(sorted(document))}\n"
            f"Supported keys: {supported}"
        )

    @classmethod
    def read(cls, filepath: Union[str, Path], verbose: bool = False) -> Any:
        """Load a JSON file and read it with the matching reader."""
        document = FacetListReader(verbose=verbose).load(filepath)
        return cls.create_reader(document, verbose=verbose).read_document(document)

    @classmethod
    def get_supported_keys(cls) -> list:
        return sorted(cls.READER_MAP.keys())

    @classmethod
    def register_reader(cls, key: str, reader_class) -> None:
        """
        Register a reader for a top-level JSON key.

        Raises
        ------
        TypeError
            If ``reader_class`` does not inherit from ComplexReader.
        """
        if not (isinstance(reader_class, type) and issubclass(reader_class, ComplexReader)):
            raise TypeError(f"{reader_class} must inherit from ComplexReader")
        cls.READER_MAP[key] = reader_class


def _whitney(edges) -> SimplicialComplex:
    return whitney_complex(make_graph(edges=edges))


def _figure_eight() -> SimplicialComplex:
    c4 = whitney_complex(cycle_graph(4))
    return wedge_sum(c4, 1, c4, 1)


def _digital_eight() -> SimplicialComplex:
    # 2x3 grid: two squares sharing the edge 2-5
    return _whitney([(1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (2, 5), (3, 6)])


def _moebius() -> SimplicialComplex:
    return whitney_complex(nx.complement(cycle_graph(7)))


def _three_sphere() -> SimplicialComplex:
    return double_suspension(whitney_complex(cycle_graph(4)))


class ComplexFactory:
    """
    Registry of named complexes.

    Plain keys build a fixed complex; parametrised keys ``family:n`` build a
    Whitney complex from a graph family.

    Examples
    --------
    >>> ComplexFactory.create('octahedron').f_vector()
    (6, 12, 8)
    >>> len(ComplexFactory.create('cycle:4'))
    8
    """

    REGISTRY: Dict[str, Callable[[], SimplicialComplex]] = {
        'fig1': lambda: _whitney(FIG1_EDGES),
        'octahedron': lambda: _whitney(OCTAHEDRON_EDGES),
        'twosphere': lambda: _whitney(OCTAHEDRON_EDGES),
        'onesphere': lambda: whitney_complex(cycle_graph(4)),
        'threesphere': _three_sphere,
        'homology3sphere': lambda: closure(HOMOLOGY_SPHERE_FACETS),
        'figure8': _figure_eight,
        'digital8': _digital_eight,
        'moebius': _moebius,
        'cylinder': lambda: _whitney(CYLINDER_EDGES),
    }

    FAMILIES: Dict[str, Callable[[int], nx.Graph]] = {
        'cycle': cycle_graph,
        'complete': complete_graph,
        'star': star_graph,
        'path': path_graph,
        'wheel': wheel_graph,
    }

    @classmethod
    def create(cls, key: str) -> SimplicialComplex:
        """
        Build the complex registered under ``key``.

        Raises
        ------
        ValueError
            If the key or family is unknown, or the parameter is not an integer.
        """
        name, sep, param = key.partition(':')
        if sep:
            if name not in cls.FAMILIES:
                raise ValueError(
                    f"Unknown complex family: '{name}'\n"
                    f"Supported keys: {', '.join(cls.get_supported_keys())}"
                )
            try:
                n = int(param)
            except ValueError as e:
                raise ValueError(f"Family parameter must be an integer, got '{param}'") from e
            return whitney_complex(cls.FAMILIES[name](n))
        if key not in cls.REGISTRY:
            raise ValueError(
                f"Unknown complex: '{key}'\n"
                f"Supported keys: {', '.join(cls.get_supported_keys())}"
            )
        return cls.REGISTRY[key]()

    @classmethod
    def get_supported_keys(cls) -> list:
        """Plain keys, then the families as ``family:n``."""
        return sorted(cls.REGISTRY) + sorted(f"{name}:n" for name in cls.FAMILIES)

    @classmethod
    def register(cls, key: str, builder: Callable[[], SimplicialComplex]) -> None:
        if ':' in key:
            raise ValueError(f"Registry keys may not contain ':', got '{key}'")
        cls.REGISTRY[key] = builder
