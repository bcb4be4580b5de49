# Import from base
from .base import ComplexReader

# Import readers
from .readers import (
    FacetListReader,
    GraphReader,
    VertexMapReader,
)

# Import utilities
from .exporter import MatrixExporter, facets_json
from .factory import ComplexFactory, ReaderFactory

__all__ = [
    # Base classes
    "ComplexReader",
    # Readers
    "FacetListReader",
    "GraphReader",
    "VertexMapReader",
    # Utilities
    "MatrixExporter",
    "facets_json",
    "ComplexFactory",
    "ReaderFactory",
]
