"""
Alexander duality over a fixed ground set.

The dual of ``X`` on ground set V has the faces whose complements are not in ``X``.
Its facets are the complements of the minimal non-faces of ``X``. An elementary
collapse (τ, σ) of ``X`` corresponds to the anticollapse (V∖σ, V∖τ) of the dual and
the other way round.
"""
from itertools import combinations
from typing import List, Optional

from decorators.measure_time import measure_execution_time
from models.certificates import Certificate, Direction, StepPair, certificate_for
from models.complex import EMPTY_FACE, Face, SimplicialComplex
from services.collapse.core import core_erosion
from services.collapse.search import search_collapse
from services.collapse.steps import replay
from services.complex.operations import from_facets, void_complex
from services.homology.homology import betti_numbers
from utils.exceptions import ComplexInputError, PreconditionError, SizeGuardError, StepError
from utils.logging import setup_logger

logger = setup_logger(__name__)

BRUTE_FORCE_LIMIT = 16


def minimal_non_faces(X: SimplicialComplex) -> List[Face]:
    if X.is_void:
        return [EMPTY_FACE]
    found = set()
    for face in X.faces:
        for vertex in X.ground:
            if vertex in face:
                continue
            candidate = face.with_vertex(vertex)
            if candidate in X or candidate in found:
                continue
            if all(sub in X for sub in candidate.boundary()):
                found.add(candidate)
    return sorted(found, key=lambda f: (len(f), f))


@measure_execution_time
def alexander_dual(X: SimplicialComplex) -> SimplicialComplex:
    """
    Alexander dual of ``X`` over its own ground set.

    The dual of the full simplex is the void complex, and the dual of the empty
    complex ``{∅}`` is the boundary of the simplex.
    """
    ground = sorted(X.ground)
    non_faces = minimal_non_faces(X)
    if not non_faces:
        return void_complex(ground)
    return from_facets((f.complement(ground) for f in non_faces), ground=ground)


def alexander_dual_by_subsets(X: SimplicialComplex) -> SimplicialComplex:
    """Dual computed by testing every subset of the ground set (small ground sets only)."""
    ground = sorted(X.ground)
    if len(ground) > BRUTE_FORCE_LIMIT:
        raise SizeGuardError(f"Subset enumeration limited to {BRUTE_FORCE_LIMIT} vertices, got {len(ground)}")
    faces = set()
    for size in range(len(ground) + 1):
        for subset in combinations(ground, size):
            face = Face(subset)
            if face.complement(ground) not in X:
                faces.add(face)
    return SimplicialComplex(faces, ground)


def dual_step(step: StepPair, ground) -> StepPair:
    return StepPair(step.coface.complement(ground), step.free.complement(ground), step.direction.opposite())


def dual_certificate(X: SimplicialComplex, certificate: Certificate, keep_trivial: bool = False) -> Certificate:
    """
    Transport a certificate on ``X`` to the dual sequence on the dual of ``X``.

    A collapse certificate that ends at a single vertex v gets the trivial collapse
    of ∅ appended before transport, so the dual sequence ends at the full simplex
    (its last step adds the complement of v together with V). For an anticollapse
    certificate ending at the full simplex, the dual sequence would end with the
    trivial collapse; it is dropped unless ``keep_trivial`` so the result ends at a
    single vertex.

    Raises:
        ComplexInputError: if the certificate does not replay on ``X``.
    """
    try:
        end = replay(X, certificate.steps, allow_trivial=True)
    except StepError as e:
        raise ComplexInputError(f"Certificate does not replay on the complex: {e}")
    if end.digest() != certificate.end_hash or X.digest() != certificate.start_hash:
        raise ComplexInputError("Certificate digests do not match the complex")

    ground = sorted(X.ground)
    steps = list(certificate.steps)
    if certificate.kind is Direction.COLLAPSE and len(end.vertices) == 1 and len(end) == 2:
        steps.append(StepPair(EMPTY_FACE, Face(end.vertices), Direction.COLLAPSE))
    dual_steps = [dual_step(step, ground) for step in steps]
    if certificate.kind is Direction.ANTICOLLAPSE and not keep_trivial and dual_steps and dual_steps[-1].is_trivial:
        dual_steps.pop()

    start = alexander_dual(X)
    finish = replay(start, dual_steps, allow_trivial=True)
    return certificate_for(start, finish, certificate.kind.opposite(), dual_steps, certificate.seed)


def is_anticollapsible(X: SimplicialComplex, restarts: Optional[int] = None, seed: int = 0,
                       backtrack_face_limit: Optional[int] = None) -> Optional[Certificate]:
    """
    Search for anticollapses taking ``X`` to the full simplex on its ground set.

    The search runs on the dual, where it is a collapse search, and the result is
    transported back.

    Returns:
        Certificate | None: an anticollapse certificate, or None when none was found.
    """
    if X.is_simplex():
        return certificate_for(X, X, Direction.ANTICOLLAPSE, [], seed)
    dual = alexander_dual(X)
    found = search_collapse(dual, restarts=restarts, backtrack_face_limit=backtrack_face_limit, seed=seed)
    if found is None:
        logger.info(f"No anticollapse found for {X!r} (seed {seed})")
        return None
    return dual_certificate(dual, found)


def is_d_anticollapsible(X: SimplicialComplex, d: int) -> bool:
    """
    Whether anticollapses can complete the d-skeleton of ``X``.

    This is exactly (n-d-2)-collapsibility of the dual, decided by core erosion when
    the dual has dimension n-d-2.

    Raises:
        PreconditionError: if the dual has dimension above n-d-2.
    """
    target = X.n - d - 2
    dual = alexander_dual(X)
    if dual.is_void or dual.dimension < target:
        return True
    if dual.dimension > target:
        raise PreconditionError(
            f"Dual has dimension {dual.dimension}; an exact test needs at most {target}"
        )
    if target == 0:
        # a lone vertex of the dual goes by the trivial collapse
        return len(dual.vertices) <= 1
    if target < 0:
        return False
    return core_erosion(dual)[1]


def check_alexander_duality(X: SimplicialComplex, field='Q') -> bool:
    """
    Compare reduced Betti numbers of ``X`` and its dual over a field.

    For every i from -1 to n-2, betti_i(X) must equal betti_{n-i-3}(dual).
    """
    n = X.n
    dual = alexander_dual(X)
    primal = betti_numbers(X, field)
    other = betti_numbers(dual, field)
    for i in range(-1, n - 1):
        if primal.get(i, 0) != other.get(n - i - 3, 0):
            logger.debug(f"Duality fails at i={i}: {primal.get(i, 0)} vs {other.get(n - i - 3, 0)}")
            return False
    return True
