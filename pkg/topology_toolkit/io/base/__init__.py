from .reader import ComplexReader

__all__ = [
    "ComplexReader",
]
