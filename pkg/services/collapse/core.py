from collections import deque
from typing import Dict, Optional, Tuple

from models.complex import Face, SimplicialComplex
from services.complex.operations import pure_part
from utils.exceptions import PreconditionError
from utils.logging import setup_logger
from utils.seeding import make_rng

logger = setup_logger(__name__)


def core_erosion(X: SimplicialComplex, seed: Optional[int] = None) -> Tuple[SimplicialComplex, bool]:
    """
    Remove top-dimensional free pairs until none remain.

    A (d-1)-face lying in exactly one d-face is collapsed together with it. What is
    left over does not depend on the order of removals; ``seed`` shuffles the order
    and is only used to check that.

    Args:
        X (SimplicialComplex): a complex of dimension d >= 1.
        seed (int | None): optional seed for a random removal order.

    Returns:
        tuple: (residue, is_d_collapsible). When not d-collapsible, the pure part
        of the residue is a d-dimensional core.

    Raises:
        PreconditionError: if ``X`` has dimension below 1.
    """
    d = X.dimension
    if d < 1:
        raise PreconditionError(f"Core erosion needs dimension at least 1, got {d}")

    top = set(X.faces_of_dim(d))
    degree: Dict[Face, int] = {}
    for face in top:
        for sub in face.boundary():
            degree[sub] = degree.get(sub, 0) + 1

    queue = deque(sorted(f for f, count in degree.items() if count == 1))
    if seed is not None:
        order = list(queue)
        make_rng(seed).shuffle(order)
        queue = deque(order)

    removed = set()
    while queue:
        ridge = queue.popleft()
        if ridge in removed or degree.get(ridge) != 1:
            continue
        owner = next(v for v in (ridge.with_vertex(u) for u in X.ground if u not in ridge) if v in top)
        top.discard(owner)
        removed.update((ridge, owner))
        for sub in owner.boundary():
            degree[sub] -= 1
            if degree[sub] == 1 and sub not in removed:
                queue.append(sub)

    residue = SimplicialComplex(X.faces - removed, X.ground)
    collapsible = not top
    logger.debug(f"Core erosion removed {len(removed) // 2} pairs; d-collapsible={collapsible}")
    return residue, collapsible


def d_core(X: SimplicialComplex) -> Optional[SimplicialComplex]:
    """The d-core left by erosion, or None when ``X`` is d-collapsible."""
    residue, collapsible = core_erosion(X)
    return None if collapsible else pure_part(residue)


def is_d_collapsible(X: SimplicialComplex) -> bool:
    return core_erosion(X)[1]
