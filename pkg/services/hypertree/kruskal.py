"""
Random d-dimensional hypertrees by the higher-dimensional Kruskal algorithm.

Starting from the complete (d-1)-skeleton on [n], candidate d-faces are taken in a
seeded random order; a face is kept unless its boundary is already a rational
combination of the boundaries kept so far. The run stops once C(n-1, d) faces
are kept, which makes the result Q-acyclic.

With ``block_anticollapses`` a face is also skipped when it would leave some
(d+2)-set with all but one of its d-faces kept. Such a set is an anticollapse
move, and it is a free face of the Alexander dual. These runs can stop short of
C(n-1, d) faces.
"""
from collections import Counter
from itertools import combinations

from decorators.measure_time import measure_execution_time
from models.complex import Face, SimplicialComplex
from services.complex.operations import complete_skeleton
from services.homology.boundary import boundary_column
from services.homology.homology import adds_top_cycle
from services.homology.rank import IncrementalRank
from utils.exceptions import ComplexInputError, StuckError
from utils.general import binomial, validate_positive_int
from utils.logging import setup_logger
from utils.seeding import make_rng

logger = setup_logger(__name__)


def _opens_anticollapse(face: Face, kept: Counter, n: int, d: int) -> bool:
    return any(kept[face.with_vertex(v)] == d for v in range(1, n + 1) if v not in face)


@measure_execution_time
def kruskal_generate(n: int, d: int, seed: int, oracle: bool = False,
                     block_anticollapses: bool = False) -> SimplicialComplex:
    """
    Generate a d-dimensional hypertree on n vertices.

    Args:
        n (int): number of vertices, at least d + 1.
        d (int): dimension, at least 1.
        seed (int): seed of the candidate order.
        oracle (bool): cross-check every decision against a full rank recomputation.
        block_anticollapses (bool): skip faces that would open an anticollapse move.

    Returns:
        SimplicialComplex: complete (d-1)-skeleton plus C(n-1, d) faces of dimension d,
        or fewer when ``block_anticollapses`` ran out of candidates.

    Raises:
        ComplexInputError: if n < d + 1 or d < 1.
    """
    validate_positive_int(d, 'd')
    validate_positive_int(n, 'n')
    if n < d + 1:
        raise ComplexInputError(f"Need n >= d + 1, got n={n}, d={d}")

    target = binomial(n - 1, d)
    skeleton = complete_skeleton(n, d - 1)
    rows = skeleton.faces_of_dim(d - 1)
    row_index = {row: k for k, row in enumerate(rows)}

    candidates = [Face(c) for c in combinations(range(1, n + 1), d + 1)]
    order = make_rng(seed).permutation(len(candidates))

    basis = IncrementalRank()
    kept_in = Counter()
    accepted = []
    rejected = blocked = 0
    for position in order:
        if len(accepted) == target:
            break
        face = candidates[int(position)]
        if block_anticollapses and _opens_anticollapse(face, kept_in, n, d):
            blocked += 1
            continue
        keep = basis.add(boundary_column(face, row_index))
        if oracle:
            current = SimplicialComplex(skeleton.faces | set(accepted), skeleton.ground)
            if adds_top_cycle(current, face, full_recompute=True) == keep:
                raise StuckError(f"Incremental rank disagrees with full recomputation at {face!r}")
        if keep:
            accepted.append(face)
            if block_anticollapses:
                for v in range(1, n + 1):
                    if v not in face:
                        kept_in[face.with_vertex(v)] += 1
        else:
            rejected += 1

    logger.debug(f"Kruskal n={n} d={d} seed={seed}: kept {len(accepted)}, rejected {rejected}, blocked {blocked}")
    return SimplicialComplex(skeleton.faces | set(accepted), skeleton.ground)
