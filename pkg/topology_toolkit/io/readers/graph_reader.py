from typing import Any, Dict

from topology_toolkit.complexes.simplex import SimplicialComplex
from topology_toolkit.errors import ComplexParseError
from topology_toolkit.graphs.graph import make_graph, whitney_complex
from topology_toolkit.io.base import ComplexReader
from topology_toolkit.io.readers.facet_reader import _as_vertex


class GraphReader(ComplexReader):
    """
    Reader for graph files ``{"vertices": [...], "edges": [[a, b], ...]}``.

    The graph is lifted to its Whitney complex.

    Examples
    --------
    >>> reader = GraphReader()
    >>> reader.read_document({"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3], [1, 3]]}).f_vector()
    (3, 3, 1)
    """

    KEYS = ('vertices', 'edges')

    def _read(self, document: Dict[str, Any]) -> SimplicialComplex:
        vertices = [_as_vertex(v) for v in document.get('vertices', [])]
        edges = []
        for edge in document.get('edges', []):
            if not isinstance(edge, list) or len(edge) != 2:
                raise ComplexParseError(f"Edge {edge!r} must be a pair of vertices")
            edges.append((_as_vertex(edge[0]), _as_vertex(edge[1])))
        G = whitney_complex(make_graph(vertices, edges))
        self._log_done(f"graph with {len(vertices)} listed vertices and {len(edges)} edges")
        return G
