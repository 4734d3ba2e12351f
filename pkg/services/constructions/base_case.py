"""
Base cases on few vertices: complexes with no free faces that anticollapse to the simplex.

The shipped base case is a triangulated dunce hat with 17 triangles on 8 vertices,
stored with its anticollapse certificate in the data directory. It misses the edges
38, 57, 58 and 68. The three edges 12, 23 and 13 of the identified boundary lie in
three triangles each; every other edge lies in two. Its certificate adds the
tetrahedron 1367, then seventeen pairs through vertex 8, after which the complex is a
cone with apex 8 and the cone is filled.

Other (n, d) are searched: the dual of a collapsible hypertree anticollapses, and it
has no free faces when the hypertree admits no anticollapse move.
"""
import os
from threading import RLock
from typing import Optional, Tuple

from cachetools import LRUCache, cached

import config
from decorators.measure_time import measure_execution_time
from models.certificates import Certificate
from models.complex import SimplicialComplex
from models.reports import CatalogEntry, Claim
from services.collapse.certificate_io import read_certificate, write_certificate
from services.collapse.search import search_collapse
from services.collapse.steps import free_faces, verify_certificate
from services.complex.facet_io import read_facet_file, write_facet_file
from services.duality.alexander import alexander_dual, dual_certificate
from services.homology.homology import homology
from services.hypertree.kruskal import kruskal_generate
from utils.exceptions import ComplexInputError, SearchBudgetError, StuckError
from utils.general import binomial
from utils.logging import setup_logger
from utils.seeding import derive_seed

logger = setup_logger(__name__)

GOLDEN_NAME = 'DUNCE8_2'
BASE_CLAIMS = frozenset({Claim.NO_FREE_FACES, Claim.Z_ACYCLIC, Claim.ANTICOLLAPSIBLE})


def golden_base_case(data_dir: Optional[str] = None) -> Tuple[SimplicialComplex, Certificate]:
    """The shipped dunce hat and its anticollapse certificate to the 7-simplex."""
    directory = data_dir or config.DATA_DIR
    X = read_facet_file(os.path.join(directory, f'{GOLDEN_NAME}.facets'))
    certificate = read_certificate(os.path.join(directory, f'{GOLDEN_NAME}.anticollapse.cert'))
    return X, certificate


def verify_base_case(X: SimplicialComplex, certificate: Certificate, n: int = 8, d: int = 2) -> bool:
    """d-dimensional, n vertices, no free faces, Z-acyclic, certificate reaches the simplex."""
    if X.dimension != d or X.n != n or len(X.vertices) != n:
        return False
    if free_faces(X):
        return False
    if not homology(X).is_z_acyclic():
        return False
    try:
        return verify_certificate(X, certificate).is_simplex()
    except StuckError as e:
        logger.warning(f"Base-case certificate does not replay: {e}")
        return False


def _candidate(n: int, d: int, seed: int, restarts: int) -> Optional[Tuple[SimplicialComplex, Certificate]]:
    k = n - d - 2
    tree = kruskal_generate(n, k, seed, block_anticollapses=True)
    if len(tree.faces_of_dim(k)) != binomial(n - 1, k):
        return None
    X = alexander_dual(tree)
    if X.dimension != d or free_faces(X):
        return None
    found = search_collapse(tree, restarts=restarts, seed=seed)
    if found is None:
        return None
    return X, dual_certificate(tree, found)


_searches = LRUCache(maxsize=16)
_searches_lock = RLock()


@cached(cache=_searches, lock=_searches_lock)
def _search(n: int, d: int, seed: int, budget: int, restarts: int) -> Tuple[CatalogEntry, int]:
    stats = {'tried': 0, 'short': 0, 'passed': 0}
    for trial in range(budget):
        trial_seed = derive_seed(seed, trial)
        stats['tried'] += 1
        found = _candidate(n, d, trial_seed, restarts)
        if found is None:
            stats['short'] += 1
            continue
        X, certificate = found
        if not verify_base_case(X, certificate, n=n, d=d):
            continue
        stats['passed'] += 1
        logger.info(f"Base case for ({n}, {d}) found at trial {trial} (seed {trial_seed})")
        entry = CatalogEntry(name=f'BASE{n}_{d}', complex=X, claims=BASE_CLAIMS,
                             certificates={Claim.ANTICOLLAPSIBLE: certificate})
        return entry, trial_seed
    raise SearchBudgetError(f"No base case for ({n}, {d}) within {budget} trials", stats)


@measure_execution_time
def find_base_case(seed: int = 0, budget: Optional[int] = None, n: int = 8, d: int = 2, use_golden: bool = True,
                   restarts: int = 8, out_dir: Optional[str] = None) -> CatalogEntry:
    """
    A d-dimensional complex on ``n`` vertices with no free faces that anticollapses.

    The shipped dunce hat is re-verified first for (8, 2). Otherwise (or with
    ``use_golden=False``) candidates are duals of random (n-d-2)-dimensional
    hypertrees generated without anticollapse moves; a candidate passes when
    the hypertree collapses.

    Args:
        seed (int): master seed of the search.
        budget (int): number of hypertrees to try; defaults to ``STUCK_BASE_CASE_BUDGET``.
        n (int): number of vertices.
        d (int): dimension, at most n - 3.
        use_golden (bool): accept the shipped complex for (8, 2).
        restarts (int): collapse restarts per candidate.
        out_dir (str): if given, a searched complex and its certificate are written there.

    Returns:
        CatalogEntry: the base case with its anticollapse certificate.

    Raises:
        ComplexInputError: if d < 1 or d > n - 3.
        SearchBudgetError: if no candidate passed within the budget.
    """
    if d < 1 or d > n - 3:
        raise ComplexInputError(f"A base case needs 1 <= d <= n - 3, got n={n}, d={d}")
    if (n, d) == (8, 2) and use_golden:
        try:
            X, certificate = golden_base_case()
        except ComplexInputError as e:
            logger.warning(f"Shipped base case unreadable: {e}")
        else:
            if verify_base_case(X, certificate):
                return CatalogEntry(name=GOLDEN_NAME, complex=X, claims=BASE_CLAIMS,
                                    certificates={Claim.ANTICOLLAPSIBLE: certificate})
        logger.warning("Shipped base case failed verification; falling back to search")

    budget = config.BASE_CASE_BUDGET if budget is None else budget
    entry, trial_seed = _search(n, d, seed, budget, restarts)
    if out_dir:
        write_facet_file(entry.complex, os.path.join(out_dir, f'base_{n}_{d}.facets'), header=f"seed {trial_seed}")
        write_certificate(entry.certificates[Claim.ANTICOLLAPSIBLE],
                          os.path.join(out_dir, f'base_{n}_{d}.anticollapse.cert'))
    return entry
