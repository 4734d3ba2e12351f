"""
Exhaustive check of Kalai's weighted count of d-dimensional hypertrees.

Summed over all d-hypertrees on [n] (complete (d-1)-skeleton, C(n-1, d) faces of
dimension d, Q-acyclic), the squared order of H_{d-1} equals n ** C(n-2, d). For
d = 1 this is Cayley's formula.
"""
from itertools import combinations
from typing import Optional, Tuple

import config
from decorators.measure_time import measure_execution_time
from models.complex import Face
from services.complex.operations import complete_skeleton
from services.homology.boundary import boundary_column
from services.homology.normal_form import invariant_factors
from utils.exceptions import ComplexInputError, SizeGuardError
from utils.general import binomial, product, validate_positive_int
from utils.logging import setup_logger

logger = setup_logger(__name__)


def expected_weighted_count(n: int, d: int) -> int:
    return n ** binomial(n - 2, d)


@measure_execution_time
def kalai_check(n: int, d: int, guard: Optional[int] = None) -> Tuple[int, int, bool]:
    """
    Enumerate every candidate hypertree on [n] and compare the weighted sum with the formula.

    A choice of C(n-1, d) faces is Q-acyclic exactly when its boundary columns are
    independent; the order of H_{d-1} is then the product of the invariant factors
    of those columns.

    Args:
        n (int): number of vertices.
        d (int): dimension, at least 1.
        guard (int): largest C(n, d+1) allowed; defaults to ``STUCK_KALAI_GUARD``.

    Returns:
        tuple: (weighted sum, expected value, whether they agree)

    Raises:
        SizeGuardError: if C(n, d+1) exceeds the guard.
    """
    validate_positive_int(d, 'd')
    validate_positive_int(n, 'n')
    if n < d + 1:
        raise ComplexInputError(f"Need n >= d + 1, got n={n}, d={d}")
    guard = config.KALAI_GUARD if guard is None else guard
    candidates = binomial(n, d + 1)
    if candidates > guard:
        raise SizeGuardError(f"C({n},{d + 1}) = {candidates} exceeds the enumeration guard {guard}")

    rows = complete_skeleton(n, d - 1).faces_of_dim(d - 1)
    row_index = {row: k for k, row in enumerate(rows)}
    columns = [boundary_column(Face(c), row_index) for c in combinations(range(1, n + 1), d + 1)]
    size = binomial(n - 1, d)

    total = 0
    hypertrees = 0
    for chosen in combinations(columns, size):
        factors = invariant_factors(chosen)
        if len(factors) < size:
            continue
        hypertrees += 1
        total += product(factors) ** 2

    expected = expected_weighted_count(n, d)
    logger.info(f"Kalai check n={n} d={d}: {hypertrees} hypertrees, weighted sum {total}, expected {expected}")
    return total, expected, total == expected
