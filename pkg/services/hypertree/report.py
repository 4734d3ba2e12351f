from typing import Optional

from models.complex import SimplicialComplex
from models.reports import HypertreeReport, Tri
from services.collapse.core import core_erosion
from services.collapse.search import search_collapse
from services.collapse.steps import free_faces
from services.duality.alexander import alexander_dual
from services.homology.homology import homology
from utils.exceptions import PreconditionError
from utils.general import product
from utils.logging import setup_logger

logger = setup_logger(__name__)


def _has_core(X: SimplicialComplex) -> bool:
    return X.dimension >= 1 and not core_erosion(X)[1]


def is_hypertree(X: SimplicialComplex, d: int, restarts: Optional[int] = None, seed: int = 0) -> HypertreeReport:
    """
    Classify a d-dimensional complex against the hypertree property chain.

    Collapsibility flags are tri-state: FOUND when a certificate was produced,
    REFUTED when a top-dimensional core (of ``X`` or of its dual) rules the move
    sequence out, UNKNOWN otherwise.

    Args:
        X (SimplicialComplex): a complex of dimension ``d``.
        d (int): expected dimension.
        restarts (int): collapse-search restarts; defaults to ``STUCK_COLLAPSE_RESTARTS``.
        seed (int): seed of the searches.

    Raises:
        PreconditionError: if ``X`` does not have dimension ``d``.
    """
    if X.dimension != d:
        raise PreconditionError(f"Expected a {d}-dimensional complex, got dimension {X.dimension}")

    profile = homology(X)
    q_acyclic = profile.is_q_acyclic()
    torsion_order = product(profile.torsion_of(d - 1)) if profile.betti_number(d - 1) == 0 else None

    d_collapsible = core_erosion(X)[1] if d >= 1 else True
    dual = alexander_dual(X)

    collapsible = Tri.UNKNOWN
    if not d_collapsible:
        collapsible = Tri.REFUTED
    elif search_collapse(X, restarts=restarts, seed=seed) is not None:
        collapsible = Tri.FOUND

    anticollapsible = Tri.UNKNOWN
    if X.is_simplex():
        anticollapsible = Tri.FOUND
    elif _has_core(dual):
        anticollapsible = Tri.REFUTED
    elif search_collapse(dual, restarts=restarts, seed=seed) is not None:
        anticollapsible = Tri.FOUND

    report = HypertreeReport(
        complex=X,
        dimension=d,
        facet_count=len(X.faces_of_dim(d)),
        q_acyclic=q_acyclic,
        torsion_order=torsion_order,
        d_collapsible=Tri.FOUND if d_collapsible else Tri.REFUTED,
        collapsible=collapsible,
        anticollapsible=anticollapsible,
        free_faces=len(free_faces(X)),
        dual_free_faces=len(free_faces(dual)),
        seed=seed,
    )
    logger.debug(f"Hypertree report for {X!r}: {report.as_row()}")
    return report
