import json
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from topology_toolkit.complexes.constants import SCHEMA_VERSION
from topology_toolkit.complexes.simplex import SimplicialComplex

METHODS = ('csv', 'json', 'excel')


def facets_json(G: SimplicialComplex) -> str:
    """Canonical facet-list JSON text of a complex, newline-terminated."""
    facets = sorted(list(x) for x in G.facets())
    return json.dumps({'facets': facets}, sort_keys=True) + "\n"


class MatrixExporter:
    """
    Exporter for simplex-indexed matrices (L, g, Dirac, Hodge) and facet files.

    Rows and columns are labelled by the simplices in canonical order, so
    an exported matrix can be read without the complex at hand.

    Supports the export methods:
    - csv: one CSV file, simplex labels as row index and header
    - json: schema-versioned document with the index legend and the rows
    - excel: one workbook, one sheet per block when block sizes are given

    Examples
    --------
    >>> exporter = MatrixExporter(output_dir="exports")
    >>> exporter.export(L, index, method="csv", filename="connection.csv")
    >>> exporter.export(H, index, method="excel", filename="hodge.xlsx", block_sizes=(4, 4))
    """

    def __init__(self, output_dir=".", verbose=False):
        self.output_dir = Path(output_dir)
        self.verbose = verbose

        self.output_dir.mkdir(parents=True, exist_ok=True)

    def export(
        self,
        matrix: np.ndarray,
        index: Sequence[str],
        method: str = "csv",
        filename: Optional[str] = None,
        block_sizes: Optional[Sequence[int]] = None,
    ) -> Path:
        """
        Export a square matrix with its simplex legend.

        Parameters
        ----------
        matrix : numpy.ndarray
            Square integer matrix.
        index : sequence of str
            Simplex labels, one per row.
        method : {'csv', 'json', 'excel'}
        filename : str, optional
            Defaults to ``matrix.<ext>``.
        block_sizes : sequence of int, optional
            Sizes of the diagonal blocks (the f-vector for Hodge blocks);
            only the excel method splits on them.

        Returns
        -------
        Path
            The written file.

        Raises
        ------
        ValueError
            If the method is unknown or the legend does not fit the matrix.
        """
        matrix = np.asarray(matrix)
        if matrix.ndim != 2 or matrix.shape[0] != len(index) or matrix.shape[1] != len(index):
            raise ValueError(
                f"Matrix of shape {matrix.shape} does not match an index of {len(index)} labels"
            )
        if method == "csv":
            return self._export_csv(matrix, index, filename or "matrix.csv")
        elif method == "json":
            return self._export_json(matrix, index, filename or "matrix.json")
        elif method == "excel":
            return self._export_excel(matrix, index, filename or "matrix.xlsx", block_sizes)
        else:
            raise ValueError(
                f"Unknown export method: '{method}'. "
                f"Supported methods: {', '.join(repr(m) for m in METHODS)}"
            )

    def _frame(self, matrix: np.ndarray, index: Sequence[str]) -> pd.DataFrame:
        return pd.DataFrame(matrix, index=list(index), columns=list(index))

    def _export_csv(self, matrix: np.ndarray, index: Sequence[str], filename: str) -> Path:
        filepath = self.output_dir / filename
        try:
            self._frame(matrix, index).to_csv(filepath, index_label='simplex')
            if self.verbose:
                print(f"[INFO] Exported {matrix.shape[0]}x{matrix.shape[1]} matrix to CSV: {filepath}")
        except Exception as e:
            raise Exception(f"Error exporting to CSV {filepath}: {e}") from e
        return filepath

    def _export_json(self, matrix: np.ndarray, index: Sequence[str], filename: str) -> Path:
        filepath = self.output_dir / filename
        document = {
            'schema_version': SCHEMA_VERSION,
            'index': list(index),
            'rows': [[int(v) for v in row] for row in matrix.tolist()],
        }
        try:
            filepath.write_text(json.dumps(document, sort_keys=True) + "\n", encoding='utf-8')
            if self.verbose:
                print(f"[INFO] Exported {matrix.shape[0]}x{matrix.shape[1]} matrix to JSON: {filepath}")
        except Exception as e:
            raise Exception(f"Error exporting to JSON {filepath}: {e}") from e
        return filepath

    def _export_excel(
        self,
        matrix: np.ndarray,
        index: Sequence[str],
        filename: str,
        block_sizes: Optional[Sequence[int]] = None,
    ) -> Path:
        filepath = self.output_dir / filename
        if block_sizes is None:
            block_sizes = [len(index)]
        if sum(block_sizes) != len(index):
            raise ValueError(f"Block sizes {list(block_sizes)} do not add up to {len(index)}")
        try:
            with pd.ExcelWriter(filepath, engine='openpyxl') as writer:
                start = 0
                for k, size in enumerate(block_sizes):
                    stop = start + size
                    block = self._frame(matrix[start:stop, start:stop], index[start:stop])
                    sheet_name = "Sheet1" if len(block_sizes) == 1 else f"Block{k}"
                    block.to_excel(writer, sheet_name=sheet_name, index_label='simplex')
                    if self.verbose:
                        print(f"[INFO] Created {sheet_name}: {size} rows")
                    start = stop
            if self.verbose:
                print(f"[INFO] Successfully exported to {filepath}")
        except Exception as e:
            raise Exception(f"Error exporting to Excel {filepath}: {e}") from e
        return filepath

    def export_complex(self, G: SimplicialComplex, filename: str) -> Path:
        """
        Write the facet list of ``G`` as canonical JSON.

        Facets are sorted, keys are sorted and the file ends with a newline,
        so the same complex always gives the same bytes.
        """
        filepath = self.output_dir / filename
        try:
            filepath.write_text(facets_json(G), encoding='utf-8')
            if self.verbose:
                print(f"[INFO] Exported {len(G.facets())} facets to {filepath}")
        except Exception as e:
            raise Exception(f"Error exporting facets {filepath}: {e}") from e
        return filepath

    def get_output_dir(self) -> Path:
        return self.output_dir
