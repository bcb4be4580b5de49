from typing import Any, Dict

from topology_toolkit.complexes.constructors import closure
from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.errors import ComplexParseError
from topology_toolkit.io.base import ComplexReader


def _as_vertex(value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ComplexParseError(f"Vertices must be integers, got {value!r}")
    return value


class FacetListReader(ComplexReader):
    """
    Reader for facet-list files ``{"facets": [[1, 2, 3], [3, 4], ...]}``.

    The complex is the downward closure of the listed sets, so any
    generating family works, not only the facets. A missing ``facets`` key
    or an empty file gives the empty complex.

    Examples
    --------
    >>> reader = FacetListReader()
    >>> G = reader.read_document({"facets": [[1, 2], [2, 3]]})
    >>> len(G)
    5
    """

    KEYS = ('facets',)

    def _read(self, document: Dict[str, Any]) -> SimplicialComplex:
        facets = document.get('facets', [])
        if not isinstance(facets, list):
            raise ComplexParseError("'facets' must be a list of vertex lists")
        sets = []
        for facet in facets:
            if not isinstance(facet, list):
                raise ComplexParseError(f"Facet {facet!r} is not a list")
            sets.append([_as_vertex(v) for v in facet])
        G = closure(sets)
        self._log_done(f"{len(G)} simplices from {len(sets)} facets")
        return G
