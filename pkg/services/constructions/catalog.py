"""
Named complexes on few vertices and the claims made about them.

Every complex is read from its golden facet file in the data directory; the
digests below pin the shipped files. ``dual_<name>`` is the Alexander dual of a
primary entry and ``<name>*`` is accepted for it.
"""
import os
from threading import RLock
from typing import Callable, Dict, List, Optional, Tuple

from cachetools import LRUCache, cached

import config
from models.complex import SimplicialComplex
from models.reports import CatalogEntry, Claim
from services.collapse.core import core_erosion
from services.collapse.search import search_collapse
from services.collapse.steps import free_faces, verify_certificate
from services.complex.facet_io import read_facet_file
from services.constructions.base_case import BASE_CLAIMS, GOLDEN_NAME, golden_base_case
from services.duality.alexander import alexander_dual, is_anticollapsible
from services.homology.homology import homology, is_acyclic
from utils.exceptions import ComplexInputError, StuckError
from utils.logging import setup_logger

logger = setup_logger(__name__)

# Y28_2: 2-dimensional hypertree on 8 vertices, collapsible, its dual has no free faces.
# Y38_3: 3-dimensional hypertree on 8 vertices, collapsible; its dual has four free faces.
# C38_3: 3-dimensional Q-acyclic complex on 8 vertices, neither 3-collapsible nor 3-anticollapsible.
# RP2_6: six-vertex real projective plane, Q-acyclic with torsion Z/2 in dimension 1.
PRIMARY = {
    'Y28_2': frozenset({Claim.COLLAPSIBLE, Claim.Z_ACYCLIC, Claim.DUAL_NO_FREE_FACES}),
    'Y38_3': frozenset({Claim.COLLAPSIBLE, Claim.Z_ACYCLIC}),
    'C38_3': frozenset({Claim.Q_ACYCLIC, Claim.HAS_CORE, Claim.DUAL_HAS_CORE}),
    'RP2_6': frozenset({Claim.Q_ACYCLIC, Claim.NOT_Z2_ACYCLIC}),
}

DUAL_CLAIMS = {
    'Y28_2': frozenset({Claim.NO_FREE_FACES, Claim.ANTICOLLAPSIBLE, Claim.Z_ACYCLIC}),
    'Y38_3': frozenset({Claim.ANTICOLLAPSIBLE, Claim.Z_ACYCLIC}),
    'C38_3': frozenset({Claim.Q_ACYCLIC, Claim.HAS_CORE, Claim.DUAL_HAS_CORE}),
}

GOLDEN_DIGESTS = {
    'Y28_2': 'c5145b84b61a8afc8f30bb07e337321e52356d5b314e1001c585c0942a5437c9',
    'Y38_3': '944eff84dd8db19543c62c8ddb2fe8665d929c1305a6d2fcb6674e246483bfd2',
    'C38_3': 'b58a1471212ba99b1ecc93de45ccf7faee256598d38148d95c830e85921c40e4',
    'RP2_6': '42639acd954489874f3e479b842d98d9cefb18d48713668276c20209255366b3',
    'DUNCE8_2': 'b12477dca8ea8a47169f8b908964a017235b26df8c35d95bf57aff0a733e6235',
}

DUAL_PREFIX = 'dual_'


def catalog_names() -> List[str]:
    names = list(PRIMARY) + [DUAL_PREFIX + name for name in DUAL_CLAIMS]
    return names + [GOLDEN_NAME]


def golden_path(name: str, data_dir: Optional[str] = None) -> str:
    return os.path.join(data_dir or config.DATA_DIR, f'{name}.facets')


def _normalize(name: str) -> str:
    text = name.strip()
    if text.endswith('*'):
        text = DUAL_PREFIX + text[:-1]
    return text


def catalog_complex(name: str) -> SimplicialComplex:
    """
    The complex behind a catalog name, without verifying its claims.

    Raises:
        ComplexInputError: for an unknown name or a missing golden file.
    """
    key = _normalize(name)
    if key in PRIMARY or key == GOLDEN_NAME:
        return read_facet_file(golden_path(key))
    if key.startswith(DUAL_PREFIX) and key[len(DUAL_PREFIX):] in DUAL_CLAIMS:
        return alexander_dual(catalog_complex(key[len(DUAL_PREFIX):]))
    raise ComplexInputError(f"Unknown catalog entry '{name}'. Known: {', '.join(catalog_names())}")


def catalog_claims(name: str) -> frozenset:
    key = _normalize(name)
    if key in PRIMARY:
        return PRIMARY[key]
    if key.startswith(DUAL_PREFIX) and key[len(DUAL_PREFIX):] in DUAL_CLAIMS:
        return DUAL_CLAIMS[key[len(DUAL_PREFIX):]]
    if key == GOLDEN_NAME:
        return BASE_CLAIMS
    raise ComplexInputError(f"Unknown catalog entry '{name}'")


def check_claim(name: str, X: SimplicialComplex, claim: Claim, seed: int = 0) -> Tuple[bool, object]:
    """
    Verify one claim on ``X``.

    Returns:
        tuple: (holds, witness) where the witness is a certificate when one was produced.
    """
    checks: Dict[Claim, Callable[[], Tuple[bool, object]]] = {
        Claim.COLLAPSIBLE: lambda: _witness(search_collapse(X, seed=seed)),
        Claim.ANTICOLLAPSIBLE: lambda: _anticollapse_witness(name, X, seed),
        Claim.NO_FREE_FACES: lambda: (not free_faces(X), None),
        Claim.DUAL_NO_FREE_FACES: lambda: (not free_faces(alexander_dual(X)), None),
        Claim.Q_ACYCLIC: lambda: (is_acyclic(X, 'Q'), None),
        Claim.Z_ACYCLIC: lambda: (homology(X).is_z_acyclic(), None),
        Claim.NOT_Z2_ACYCLIC: lambda: (not is_acyclic(X, 2), None),
        Claim.HAS_CORE: lambda: (not core_erosion(X)[1], None),
        Claim.DUAL_HAS_CORE: lambda: (not core_erosion(alexander_dual(X))[1], None),
    }
    return checks[claim]()


def _witness(certificate) -> Tuple[bool, object]:
    return certificate is not None, certificate


def _anticollapse_witness(name: str, X: SimplicialComplex, seed: int) -> Tuple[bool, object]:
    if _normalize(name) == GOLDEN_NAME:
        _, certificate = golden_base_case()
        end = verify_certificate(X, certificate)
        return end.is_simplex(), certificate
    return _witness(is_anticollapsible(X, seed=seed))


_entries = LRUCache(maxsize=32)
_entries_lock = RLock()


@cached(cache=_entries, key=lambda name, seed=0: (_normalize(name), seed), lock=_entries_lock)
def catalog(name: str, seed: int = 0) -> CatalogEntry:
    """
    Load a catalog entry and re-verify every claim it makes.

    Args:
        name (str): one of ``catalog_names()``; a trailing ``*`` means ``dual_``.
        seed (int): seed for the collapse searches used as witnesses.

    Returns:
        CatalogEntry: the complex, its claims and the certificates found.

    Raises:
        ComplexInputError: for an unknown name.
        StuckError: if a claim fails to verify.
    """
    key = _normalize(name)
    X = catalog_complex(key)
    claims = catalog_claims(key)
    certificates = {}
    for claim in sorted(claims, key=lambda c: c.value):
        holds, witness = check_claim(key, X, claim, seed=seed)
        if not holds:
            raise StuckError(f"Catalog entry {key} fails its claim '{claim.value}'")
        if witness is not None:
            certificates[claim] = witness
    logger.info(f"Catalog entry {key} verified: {', '.join(sorted(c.value for c in claims))}")
    return CatalogEntry(name=key, complex=X, claims=claims, certificates=certificates)
