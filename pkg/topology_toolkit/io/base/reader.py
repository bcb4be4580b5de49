import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Union

from topology_toolkit.errors import ComplexParseError, ToolkitError


class ComplexReader(ABC):
    """
    Abstract base class for the JSON input readers.

    Uses the Template Method pattern:
    - read() loads the file, then calls _read() on the parsed document
    - read_document() runs the same pipeline on an already parsed dict
    - Subclasses implement _read() and may override _finish()

    Attributes
    ----------
    verbose : bool
        Enable verbose output.
    """

    #: Top-level JSON keys this reader understands.
    KEYS: tuple = ()

    def __init__(self, verbose: bool = False):
        self.verbose = verbose

    @abstractmethod
    def _read(self, document: Dict[str, Any]) -> Any:
        """
        Turn a parsed JSON document into the reader's result.

        Raises
        ------
        ComplexParseError
            If the document does not have the expected shape.
        """

    def _finish(self, result: Any) -> Any:
        return result

    def load(self, filepath: Union[str, Path]) -> Dict[str, Any]:
        """
        Parse a JSON file into a dict.

        Raises
        ------
        ComplexParseError
            If the file is missing, is not JSON, or is not a JSON object.
        """
        filepath = Path(filepath)
        if self.verbose:
            print(f"[INFO] Reading {filepath}")
        try:
            text = filepath.read_text(encoding='utf-8')
        except OSError as e:
            raise ComplexParseError(f"Cannot read {filepath}: {e}") from e
        if not text.strip():
            return {}
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise ComplexParseError(f"{filepath} is not valid JSON: {e}") from e
        if not isinstance(document, dict):
            raise ComplexParseError(f"{filepath} must hold a JSON object, got {type(document).__name__}")
        return document

    def read_document(self, document: Dict[str, Any]) -> Any:
        """Run the reader on an already parsed document."""
        try:
            result = self._read(document)
        except ComplexParseError:
            raise
        except (ToolkitError, TypeError, ValueError, KeyError) as e:
            raise ComplexParseError(f"Malformed {type(self).__name__} input: {e}") from e
        return self._finish(result)

    def read(self, filepath: Union[str, Path]) -> Any:
        """
        Read a file (Template Method).

        Examples
        --------
        >>> reader = FacetListReader()
        >>> G = reader.read("octahedron.json")
        """
        return self.read_document(self.load(filepath))

    def _log_done(self, what: str) -> None:
        if self.verbose:
            print(f"[INFO] Loaded {what}")
