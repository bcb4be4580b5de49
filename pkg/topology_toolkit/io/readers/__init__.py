from .facet_reader import FacetListReader
from .graph_reader import GraphReader
from .map_reader import VertexMapReader

__all__ = [
    "FacetListReader",
    "GraphReader",
    "VertexMapReader",
]
