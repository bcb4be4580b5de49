from typing import Any, Dict

from topology_toolkit.errors import ComplexParseError
from topology_toolkit.io.base import ComplexReader


class VertexMapReader(ComplexReader):
    """
    Reader for vertex maps ``{"map": {"1": 2, "2": 2, ...}}``.

    JSON object keys are strings; they are converted back to integers.
    Used to feed graph endomorphisms to the Lefschetz computation.
    """

    KEYS = ('map',)

    def _read(self, document: Dict[str, Any]) -> Dict[int, int]:
        raw = document.get('map')
        if not isinstance(raw, dict):
            raise ComplexParseError("'map' must be an object from vertices to vertices")
        phi = {}
        for key, value in raw.items():
            try:
                phi[int(key)] = int(value)
            except (TypeError, ValueError) as e:
                raise ComplexParseError(f"Cannot read map entry {key!r}: {value!r}") from e
        self._log_done(f"vertex map on {len(phi)} vertices")
        return phi
