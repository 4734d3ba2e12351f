from threading import RLock

from cachetools import LRUCache, cached

import config
from models.complex import SimplicialComplex
from services.complex.operations import cone_apexes, facet_key, link_and_del
from utils.logging import setup_logger

logger = setup_logger(__name__)

_memo = LRUCache(maxsize=config.NONEVASIVE_CACHE)
_memo_lock = RLock()


def _memo_key(X: SimplicialComplex):
    return facet_key(X)


@cached(cache=_memo, key=_memo_key, lock=_memo_lock)
def is_non_evasive(X: SimplicialComplex) -> bool:
    """
    Decide non-evasiveness exactly.

    A single vertex is non-evasive; otherwise some vertex must have a non-evasive
    link and a non-evasive deletion. Cones are non-evasive, and a complex with
    nonzero reduced Euler characteristic never is. Results are memoized on the
    relabeled facet set, so translated copies share one entry.

    Args:
        X (SimplicialComplex): the complex to test.

    Returns:
        bool: whether ``X`` is non-evasive. The empty and void complexes are not.
    """
    if X.is_void or not X.vertices:
        return False
    if len(X.vertices) == 1:
        return True
    if X.reduced_euler_characteristic() != 0:
        return False
    if cone_apexes(X):
        return True
    for vertex in X.vertices:
        link, rest = link_and_del(X, vertex)
        if is_non_evasive(link) and is_non_evasive(rest):
            return True
    return False


def clear_memo():
    with _memo_lock:
        _memo.clear()
