"""
Integer invariant factors of sparse matrices.

The reduction repeatedly picks the nonzero entry of smallest absolute value as pivot
(a unit is taken as soon as one is seen), clears its column with row operations and
its row with column operations, and records the pivot once it is isolated. Python
integers never overflow, so coefficient growth only costs time.
"""
from math import gcd
from typing import Dict, Iterable, List, Tuple

from decorators.measure_time import measure_execution_time


class _SparseIntMatrix:
    def __init__(self, columns: Iterable[Dict[int, int]]):
        self.rows: Dict[int, Dict[int, int]] = {}
        self.cols: Dict[int, Dict[int, int]] = {}
        for j, column in enumerate(columns):
            for i, value in column.items():
                if value:
                    self.rows.setdefault(i, {})[j] = value
                    self.cols.setdefault(j, {})[i] = value

    def set(self, i: int, j: int, value: int):
        if value:
            self.rows.setdefault(i, {})[j] = value
            self.cols.setdefault(j, {})[i] = value
            return
        row = self.rows.get(i)
        if row is not None and j in row:
            del row[j]
            if not row:
                del self.rows[i]
            col = self.cols[j]
            del col[i]
            if not col:
                del self.cols[j]

    def pivot(self) -> Tuple[int, int, int]:
        best = None
        for i, row in self.rows.items():
            for j, value in row.items():
                size = abs(value)
                if size == 1:
                    return i, j, value
                if best is None or size < abs(best[2]):
                    best = (i, j, value)
        return best

    def add_row_multiple(self, target: int, source: int, factor: int):
        """row[target] -= factor * row[source]"""
        for j, value in list(self.rows[source].items()):
            self.set(target, j, self.rows.get(target, {}).get(j, 0) - factor * value)

    def add_col_multiple(self, target: int, source: int, factor: int):
        """col[target] -= factor * col[source]"""
        for i, value in list(self.cols[source].items()):
            self.set(i, target, self.cols.get(target, {}).get(i, 0) - factor * value)

    def remove(self, i: int, j: int):
        for col in list(self.rows.get(i, {})):
            self.set(i, col, 0)
        for row in list(self.cols.get(j, {})):
            self.set(row, j, 0)


def diagonalize(columns: Iterable[Dict[int, int]]) -> List[int]:
    """Absolute values of the pivots of a unimodular diagonalization (not yet a divisibility chain)."""
    matrix = _SparseIntMatrix(columns)
    diagonal = []
    while matrix.rows:
        i, j, value = matrix.pivot()
        clean = True
        for row in [r for r in matrix.cols[j] if r != i]:
            factor = matrix.rows[row][j] // value
            matrix.add_row_multiple(row, i, factor)
            if matrix.rows.get(row, {}).get(j):
                clean = False
        if clean:
            for col in [c for c in matrix.rows[i] if c != j]:
                factor = matrix.rows[i][col] // value
                matrix.add_col_multiple(col, j, factor)
                if matrix.rows[i].get(col):
                    clean = False
        if clean:
            diagonal.append(abs(value))
            matrix.remove(i, j)
    return diagonal


def divisibility_chain(diagonal: Iterable[int]) -> List[int]:
    """Turn diagonal entries into invariant factors d_1 | d_2 | ... by gcd/lcm exchanges."""
    values = sorted(abs(v) for v in diagonal if v)
    units = [v for v in values if v == 1]
    rest = [v for v in values if v != 1]
    for a in range(len(rest)):
        for b in range(a + 1, len(rest)):
            g = gcd(rest[a], rest[b])
            rest[a], rest[b] = g, rest[a] * rest[b] // g
    return units + sorted(rest)


@measure_execution_time
def invariant_factors(columns: Iterable[Dict[int, int]]) -> List[int]:
    """
    Nonzero invariant factors of an integer matrix given by sparse columns.

    Args:
        columns: one ``{row: value}`` dict per column.

    Returns:
        list[int]: the invariant factors in increasing divisibility order; their
        number is the rank of the matrix.
    """
    return divisibility_chain(diagonalize(columns))
