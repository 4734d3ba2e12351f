from fractions import Fraction
from typing import Dict, Optional, Tuple

from sympy import isprime
from sympy.polys.domains import GF, QQ

from services.homology.boundary import BoundaryMatrix
from utils.exceptions import ComplexInputError

RING_Z = 'Z'
RING_Q = 'Q'
RING_Zp = 'Zp'


def parse_ring(ring) -> Tuple[str, Optional[int]]:
    """
    Normalize a coefficient ring.

    Accepts ``'Z'``, ``'Q'``, ``'Z/p'``, ``'Zp'``-style strings with a number, or a bare prime.

    Returns:
        tuple: (``'Z'`` | ``'Q'`` | ``'Zp'``, p or None)

    Raises:
        ComplexInputError: for unknown rings or a modulus that is not prime.
    """
    if isinstance(ring, int) and not isinstance(ring, bool):
        p = ring
    else:
        text = str(ring).strip().upper().replace(' ', '')
        if text in (RING_Z, 'ZZ'):
            return RING_Z, None
        if text in (RING_Q, 'QQ'):
            return RING_Q, None
        for prefix in ('Z/', 'ZP', 'GF', 'Z'):
            if text.startswith(prefix):
                text = text[len(prefix):].strip('()')
                break
        try:
            p = int(text)
        except ValueError:
            raise ComplexInputError(f"Unknown coefficient ring '{ring}'")
    if not isprime(p):
        raise ComplexInputError(f"Coefficient modulus {p} is not prime")
    return RING_Zp, p


def field_domain(ring):
    kind, p = parse_ring(ring)
    if kind == RING_Zp:
        return GF(p)
    return QQ


def matrix_rank(matrix: BoundaryMatrix, ring=RING_Q) -> int:
    """Rank over Q or Z/p using sympy's sparse domain matrices (rank over Z equals rank over Q)."""
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return 0
    kind, _ = parse_ring(ring)
    domain = QQ if kind == RING_Z else field_domain(ring)
    return matrix.to_domain_matrix(domain).rank()


class IncrementalRank:
    """
    Rank of a growing set of rational column vectors.

    Keeps an echelon basis keyed by pivot index; a column is reduced against the
    basis from its lowest index upward. The state is single-owner and mutable.
    """

    def __init__(self):
        self._basis: Dict[int, Dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._basis)

    def _reduce(self, column: Dict[int, int]) -> Dict[int, Fraction]:
        vector = {i: Fraction(v) for i, v in column.items() if v}
        while vector:
            pivot = min(vector)
            basis_vector = self._basis.get(pivot)
            if basis_vector is None:
                break
            factor = vector[pivot] / basis_vector[pivot]
            for i, value in basis_vector.items():
                updated = vector.get(i, 0) - factor * value
                if updated:
                    vector[i] = updated
                else:
                    vector.pop(i, None)
        return vector

    def is_independent(self, column: Dict[int, int]) -> bool:
        return bool(self._reduce(column))

    def add(self, column: Dict[int, int]) -> bool:
        """Insert the column if it raises the rank; return whether it did."""
        vector = self._reduce(column)
        if not vector:
            return False
        self._basis[min(vector)] = vector
        return True
