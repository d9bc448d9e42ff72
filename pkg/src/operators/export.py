# CSV (row-major, full) and Matrix Market coordinate export

import csv
import io
from typing import Union

import numpy as np

from operators.matrices import IncidenceMatrix, SymmetricMatrix


def _format(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def matrix_to_csv(matrix: Union[SymmetricMatrix, IncidenceMatrix]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in matrix.entries:
        writer.writerow([_format(x) for x in row])
    return buffer.getvalue()


def matrix_to_matrix_market(matrix: Union[SymmetricMatrix, IncidenceMatrix]) -> str:
    """Coordinate format, 1-based indices; symmetric matrices store the lower triangle only."""
    entries = matrix.entries
    field = "integer" if np.issubdtype(entries.dtype, np.integer) else "real"
    symmetric = isinstance(matrix, SymmetricMatrix)
    if symmetric:
        rows, cols = np.nonzero(np.tril(entries))
    else:
        rows, cols = np.nonzero(entries)
    lines = [
        f"%%MatrixMarket matrix coordinate {field} {'symmetric' if symmetric else 'general'}",
        f"{entries.shape[0]} {entries.shape[1]} {len(rows)}",
    ]
    for i, j in zip(rows, cols):
        lines.append(f"{i + 1} {j + 1} {_format(entries[i, j])}")
    return "\n".join(lines) + "\n"
