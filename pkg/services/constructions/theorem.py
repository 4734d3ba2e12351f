"""
Stuck complexes for every admissible (n, d).

A d-dimensional complex on n vertices with no free faces that still anticollapses to
the simplex exists exactly when n >= 8 and 2 <= d <= n - 4. With k = n - d:

* k = 4 starts from the dual of Y28_2 (8 vertices, dimension 4),
* k = 5 and n = 8 is searched: the dual of a collapsible 3-dimensional hypertree
  on 8 vertices without anticollapse moves,
* k = 5 and n >= 9 stacks the dual of Y28_2 once, giving (9, 4),
* k >= 6 starts from the 8-vertex dunce hat and stacks it k - 6 times,

and double cones lift the start to dimension d. Stacking a top facet and double
coning both keep a complex free of free faces. Anticollapse certificates are
transported through every move and replayed at the end.
"""
from typing import List, NamedTuple, Optional, Tuple, Union

from decorators.measure_time import measure_execution_time
from models.certificates import Certificate
from models.complex import SimplicialComplex
from models.reports import Claim, ConstructionResult, Refusal, RefusalReason
from services.collapse.steps import free_faces, verify_certificate
from services.constructions.base_case import find_base_case
from services.constructions.catalog import catalog
from services.constructions.moves import double_cone, stacking_move, transport_double_cone, transport_stacking
from services.duality.alexander import is_anticollapsible
from utils.exceptions import ComplexInputError, SearchBudgetError, StuckError
from utils.general import validate_non_negative_int
from utils.logging import setup_logger

logger = setup_logger(__name__)

CITATIONS = {
    RefusalReason.FEW_VERTICES: "On 7 or fewer vertices every contractible complex is collapsible "
                                "and no anticollapsible complex gets stuck.",
    RefusalReason.LOW_DIMENSION: "A contractible complex of dimension at most 1 is a point or a tree, "
                                 "and a tree has a leaf.",
    RefusalReason.HIGH_DIMENSION: "A d-dimensional complex on n vertices with d >= n-3 that anticollapses "
                                  "to the simplex has a free face.",
}


def refusal(n: int, d: int) -> Optional[Refusal]:
    """
    The reason no stuck complex exists for (n, d), or None when one does.

    Raises:
        ComplexInputError: for negative arguments or n = 0.
    """
    validate_non_negative_int(n, 'n')
    validate_non_negative_int(d, 'd')
    if n == 0:
        raise ComplexInputError("Invalid n: a complex needs at least one vertex")
    if d <= 1:
        reason = RefusalReason.LOW_DIMENSION
    elif d >= n - 3:
        reason = RefusalReason.HIGH_DIMENSION
    elif n <= 7:
        reason = RefusalReason.FEW_VERTICES
    else:
        return None
    return Refusal(n=n, d=d, reason=reason, citation=CITATIONS[reason])


class Route(NamedTuple):
    """Where a construction starts and how many stacking moves follow."""
    start: str
    n: int
    d: int
    stacks: int


def route(n: int, d: int) -> Route:
    k = n - d
    if k == 4:
        return Route('dual_Y28_2', 8, 4, 0)
    if k == 5 and n == 8:
        return Route('BASE8_3', 8, 3, 0)
    if k == 5:
        return Route('dual_Y28_2', 8, 4, 1)
    return Route('DUNCE8_2', 8, 2, k - 6)


def plan(n: int, d: int) -> List[str]:
    """Moves used for an admissible (n, d), as readable strings."""
    way = route(n, d)
    steps = [f'start {way.start} ({way.n}, {way.d})']
    steps += [f'stack -> ({way.n + i + 1}, {way.d})' for i in range(way.stacks)]
    base_n = way.n + way.stacks
    steps += [f'double cone -> ({base_n + i + 1}, {way.d + i + 1})' for i in range(d - way.d)]
    return steps


def _start(way: Route, seed: int) -> Tuple[SimplicialComplex, Certificate]:
    if way.start == 'DUNCE8_2':
        entry = find_base_case(seed=seed)
    elif way.start.startswith('BASE'):
        entry = find_base_case(seed=seed, n=way.n, d=way.d, use_golden=False)
    else:
        entry = catalog(way.start, seed=seed)
    return entry.complex, entry.certificates[Claim.ANTICOLLAPSIBLE]


def _check(result: ConstructionResult) -> List[str]:
    problems = []
    X = result.complex
    if X.dimension != result.d:
        problems.append(f"dimension {X.dimension} instead of {result.d}")
    if X.n != result.n or len(X.vertices) != result.n:
        problems.append(f"{len(X.vertices)} vertices instead of {result.n}")
    if free_faces(X):
        problems.append("has free faces")
    try:
        if not verify_certificate(X, result.certificate).is_simplex():
            problems.append("certificate does not end at the simplex")
    except StuckError as e:
        problems.append(f"certificate does not replay: {e}")
    return problems


@measure_execution_time
def theorem2_construct(n: int, d: int, seed: int = 0) -> Union[ConstructionResult, Refusal]:
    """
    Build a d-dimensional complex on n vertices with no free faces that anticollapses to the simplex.

    Args:
        n (int): number of vertices.
        d (int): dimension.
        seed (int): seed for any search involved.

    Returns:
        ConstructionResult | Refusal: the verified complex with its certificate, or
        the reason no such complex exists.

    Raises:
        ComplexInputError: for negative arguments.
        SearchBudgetError: if neither transport nor search produced a certificate.
        StuckError: if the result fails verification.
    """
    refused = refusal(n, d)
    if refused is not None:
        logger.info(f"({n}, {d}) refused: {refused.label}")
        return refused

    way = route(n, d)
    X, certificate = _start(way, seed)
    transported = True
    try:
        for _ in range(way.stacks):
            X, certificate = transport_stacking(X, X.facets[-1], certificate)
        for _ in range(X.dimension, d):
            X, certificate = transport_double_cone(X, X.vertices[0], certificate)
    except StuckError as e:
        logger.warning(f"Certificate transport failed for ({n}, {d}): {e}; searching instead")
        transported = False

    if not transported:
        X = _rebuild(way, d, seed)
        certificate = is_anticollapsible(X, seed=seed)
        if certificate is None:
            raise SearchBudgetError(f"No anticollapse certificate found for ({n}, {d})", {'seed': seed})

    result = ConstructionResult(n=n, d=d, complex=X, certificate=certificate, plan=plan(n, d),
                                transported=transported)
    problems = _check(result)
    if problems:
        raise StuckError(f"Construction for ({n}, {d}) failed verification: {'; '.join(problems)}")
    logger.info(f"Constructed ({n}, {d}) with {len(X.facets)} facets and {len(certificate)} moves")
    return result


def _rebuild(way: Route, d: int, seed: int) -> SimplicialComplex:
    X, _ = _start(way, seed)
    for _ in range(way.stacks):
        X = stacking_move(X, X.facets[-1])
    for _ in range(X.dimension, d):
        X = double_cone(X, X.vertices[0])
    return X
