from typing import List, Optional

import config
from decorators.measure_time import measure_execution_time
from models.certificates import Certificate, Direction, StepPair, certificate_for
from models.complex import SimplicialComplex
from services.collapse.steps import WorkingComplex
from utils.logging import setup_logger
from utils.seeding import choose, derive_seed, make_rng

logger = setup_logger(__name__)


def _greedy_attempt(X: SimplicialComplex, seed: int) -> Optional[List[StepPair]]:
    rng = make_rng(seed)
    working = WorkingComplex(X)
    steps = []
    while not working.is_single_vertex():
        pairs = working.sorted_free_pairs()
        if not pairs:
            return None
        free, coface = choose(rng, pairs)
        step = StepPair(free, coface, Direction.COLLAPSE)
        working.apply(step)
        steps.append(step)
    return steps


def _backtrack(X: SimplicialComplex) -> Optional[List[StepPair]]:
    """Depth-first search over all collapse orders, skipping complexes already seen."""
    seen = set()

    def explore(faces: frozenset) -> Optional[List[StepPair]]:
        if faces in seen:
            return None
        seen.add(faces)
        working = WorkingComplex(SimplicialComplex(faces, X.ground))
        if working.is_single_vertex():
            return []
        for free, coface in working.sorted_free_pairs():
            rest = explore(faces - {free, coface})
            if rest is not None:
                return [StepPair(free, coface, Direction.COLLAPSE)] + rest
        return None

    return explore(X.faces)


@measure_execution_time
def search_collapse(X: SimplicialComplex, restarts: Optional[int] = None,
                    backtrack_face_limit: Optional[int] = None, seed: int = 0) -> Optional[Certificate]:
    """
    Look for a sequence of elementary collapses taking ``X`` to a single vertex.

    Randomized greedy runs are restarted with seeds derived from ``seed``; if all of
    them get stuck and ``X`` has few enough faces above dimension 0, every collapse
    order is searched exhaustively.

    Args:
        X (SimplicialComplex): the complex to collapse.
        restarts (int): greedy attempts; defaults to ``STUCK_COLLAPSE_RESTARTS``.
        backtrack_face_limit (int): exhaustive search bound on faces of dimension >= 1;
            defaults to ``STUCK_BACKTRACK_FACE_LIMIT``.
        seed (int): master seed.

    Returns:
        Certificate | None: a collapse certificate, or None when nothing was found.
        None is not a proof that ``X`` is not collapsible.
    """
    restarts = config.COLLAPSE_RESTARTS if restarts is None else restarts
    limit = config.BACKTRACK_FACE_LIMIT if backtrack_face_limit is None else backtrack_face_limit
    if X.is_void or not X.vertices:
        return None

    for attempt in range(max(restarts, 0)):
        steps = _greedy_attempt(X, derive_seed(seed, attempt))
        if steps is not None:
            end = WorkingComplex(X)
            for step in steps:
                end.apply(step)
            logger.debug(f"Collapse found on attempt {attempt + 1} with {len(steps)} steps")
            return certificate_for(X, end.snapshot(), Direction.COLLAPSE, steps, seed)

    upper = sum(1 for f in X.faces if f.dim >= 1)
    if upper <= limit:
        steps = _backtrack(X)
        if steps is not None:
            end = WorkingComplex(X)
            for step in steps:
                end.apply(step)
            logger.debug(f"Collapse found by exhaustive search with {len(steps)} steps")
            return certificate_for(X, end.snapshot(), Direction.COLLAPSE, steps, seed)
        logger.info(f"Exhaustive search shows {X!r} is not collapsible")
        return None

    logger.info(f"No collapse found for {X!r} after {restarts} restarts (seed {seed})")
    return None
