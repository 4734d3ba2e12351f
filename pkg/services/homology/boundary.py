from dataclasses import dataclass
from typing import Dict, List, Tuple

from sympy.polys.matrices import DomainMatrix

from models.complex import Face, SimplicialComplex
from utils.exceptions import PreconditionError


@dataclass(frozen=True)
class BoundaryMatrix:
    """
    Matrix of the i-th boundary map in canonical face order.

    Columns are stored sparsely: ``columns[j]`` maps a row index to its sign.

    Attributes:
        rows (tuple): the (i-1)-faces; for i = 0 this is the single empty face.
        cols (tuple): the i-faces.
        columns (tuple): one ``{row: ±1}`` dict per column.
    """
    rows: Tuple[Face, ...]
    cols: Tuple[Face, ...]
    columns: Tuple[Dict[int, int], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.cols)

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * len(self.cols) for _ in self.rows]
        for j, column in enumerate(self.columns):
            for i, sign in column.items():
                dense[i][j] = sign
        return dense

    def to_domain_matrix(self, domain) -> DomainMatrix:
        entries: Dict[int, Dict[int, object]] = {}
        for j, column in enumerate(self.columns):
            for i, sign in column.items():
                entries.setdefault(i, {})[j] = domain.convert(sign)
        return DomainMatrix(entries, self.shape, domain)


def boundary_column(face: Face, row_index: Dict[Face, int]) -> Dict[int, int]:
    """Signed boundary of one face: removing the j-th vertex carries sign (-1)^j."""
    return {row_index[sub]: (-1) ** j for j, sub in enumerate(face.boundary())}


def boundary_matrix(X: SimplicialComplex, i: int) -> BoundaryMatrix:
    """
    Boundary map from i-chains to (i-1)-chains.

    The empty face indexes the single row of the augmentation map when ``i = 0``,
    so the resulting homology is reduced.
    """
    if i < 0:
        raise PreconditionError(f"Boundary maps are defined for i >= 0, got {i}")
    rows = X.faces_of_dim(i - 1)
    cols = X.faces_of_dim(i)
    row_index = {face: k for k, face in enumerate(rows)}
    columns = tuple(boundary_column(face, row_index) for face in cols)
    return BoundaryMatrix(rows=rows, cols=cols, columns=columns)
