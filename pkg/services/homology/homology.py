from typing import Dict, List

from models.complex import Face, SimplicialComplex
from models.reports import HomologyProfile
from services.homology.boundary import boundary_column, boundary_matrix
from services.homology.normal_form import invariant_factors
from services.homology.rank import RING_Z, IncrementalRank, matrix_rank, parse_ring
from utils.exceptions import PreconditionError
from utils.logging import setup_logger

logger = setup_logger(__name__)


def homology(X: SimplicialComplex) -> HomologyProfile:
    """
    Reduced homology with integer coefficients.

    Dimension -1 is included, so the empty complex ``{∅}`` has betti_{-1} = 1 and
    the void complex has no homology at all.

    Args:
        X (SimplicialComplex): any complex.

    Returns:
        HomologyProfile: reduced Betti numbers and torsion coefficients for
        dimensions -1 through dim X.
    """
    if X.is_void:
        return HomologyProfile(betti={}, torsion={})

    top = X.dimension
    ranks: Dict[int, int] = {}
    factors: Dict[int, List[int]] = {}
    for i in range(0, top + 1):
        factors[i] = invariant_factors(boundary_matrix(X, i).columns)
        ranks[i] = len(factors[i])

    betti = {}
    torsion = {}
    for k in range(-1, top + 1):
        cycles = len(X.faces_of_dim(k)) - ranks.get(k, 0)
        betti[k] = cycles - ranks.get(k + 1, 0)
        torsion[k] = tuple(t for t in factors.get(k + 1, ()) if t > 1)
    logger.debug(f"Homology of {X!r}: betti={betti} torsion={torsion}")
    return HomologyProfile(betti=betti, torsion=torsion)


def betti_numbers(X: SimplicialComplex, ring='Q') -> Dict[int, int]:
    """Reduced Betti numbers over Q or Z/p, computed from field ranks."""
    kind, _ = parse_ring(ring)
    if kind == RING_Z:
        return dict(homology(X).betti)
    if X.is_void:
        return {}
    top = X.dimension
    ranks = {i: matrix_rank(boundary_matrix(X, i), ring) for i in range(0, top + 1)}
    return {
        k: len(X.faces_of_dim(k)) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        for k in range(-1, top + 1)
    }


def is_acyclic(X: SimplicialComplex, ring='Q') -> bool:
    """
    True iff all reduced homology of ``X`` vanishes over ``ring``.

    Raises:
        ComplexInputError: if the ring is Z/p with p not prime.
    """
    kind, _ = parse_ring(ring)
    if kind == RING_Z:
        return homology(X).is_z_acyclic()
    return not any(betti_numbers(X, ring).values())


def components(X: SimplicialComplex) -> int:
    """Number of connected components, from reduced betti_0."""
    if X.is_void or not X.vertices:
        return 0
    return homology(X).betti_number(0) + 1


def adds_top_cycle(X: SimplicialComplex, sigma, full_recompute: bool = False) -> bool:
    """
    Whether adding ``sigma`` to ``X`` creates a new rational cycle in its dimension.

    Equivalently, the boundary of ``sigma`` is already a rational combination of
    the boundaries of the faces of ``X`` of the same dimension.

    Args:
        X (SimplicialComplex): the current complex.
        sigma: the candidate face, not yet in ``X``.
        full_recompute (bool): compare full matrix ranks instead of reducing one column.

    Raises:
        PreconditionError: if ``sigma`` is already in ``X`` or its boundary is not.
    """
    face = sigma if isinstance(sigma, Face) else Face.of(sigma)
    if face in X:
        raise PreconditionError(f"Face {face!r} is already in the complex")
    missing = [sub for sub in face.boundary() if sub not in X]
    if missing:
        raise PreconditionError(f"Boundary of {face!r} is not in the complex: missing {missing}")

    d = face.dim
    rows = X.faces_of_dim(d - 1)
    row_index = {row: k for k, row in enumerate(rows)}
    existing = [boundary_column(f, row_index) for f in X.faces_of_dim(d)]
    column = boundary_column(face, row_index)

    if full_recompute:
        before = boundary_matrix(X, d)
        after = boundary_matrix(SimplicialComplex(X.faces | {face}, X.ground), d)
        return matrix_rank(after) == matrix_rank(before)

    basis = IncrementalRank()
    for existing_column in existing:
        basis.add(existing_column)
    return not basis.is_independent(column)
