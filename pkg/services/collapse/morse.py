from typing import Optional, Tuple

import networkx as nx

from models.certificates import Certificate, Direction, Matching, MorseVector, StepPair
from models.complex import Face, SimplicialComplex
from services.collapse.steps import WorkingComplex
from utils.exceptions import MatchingError, PreconditionError
from utils.logging import setup_logger
from utils.seeding import choose, make_rng

logger = setup_logger(__name__)


def random_discrete_morse(X: SimplicialComplex, seed: int) -> Tuple[MorseVector, Matching]:
    """
    One run of random discrete Morse collapsing.

    At each step a free pair is drawn uniformly among those whose larger face has
    the highest dimension. When no free pair exists, a top-dimensional face is drawn
    uniformly, counted as critical and deleted. The last vertex is critical.

    Args:
        X (SimplicialComplex): a complex with at least one vertex.
        seed (int): seed of the run.

    Returns:
        tuple: (MorseVector, Matching of the collapsed pairs).
    """
    if X.is_void or not X.vertices:
        raise PreconditionError("Random discrete Morse needs a complex with at least one vertex")
    rng = make_rng(seed)
    working = WorkingComplex(X)
    counts = [0] * (X.dimension + 1)
    pairs = []
    while not working.is_single_vertex():
        free = working.sorted_free_pairs()
        if free:
            top = max(len(coface) for _, coface in free)
            lower, upper = choose(rng, [pair for pair in free if len(pair[1]) == top])
            working.apply(StepPair(lower, upper, Direction.COLLAPSE))
            pairs.append((lower, upper))
            continue
        dim = working.top_dimension()
        candidates = sorted(f for f in working.faces if f.dim == dim)
        critical = choose(rng, candidates)
        working.delete_maximal(critical)
        counts[dim] += 1
    counts[0] += 1
    return MorseVector(tuple(counts)), Matching(frozenset(pairs))


def validate_matching(X: SimplicialComplex, M: Matching):
    """
    Raise ``MatchingError`` unless every pair is a Hasse edge of ``X`` and no face repeats.
    """
    used = set()
    for lower, upper in M.pairs:
        if lower not in X or upper not in X:
            raise MatchingError(f"Pair ({lower!r}, {upper!r}) is not in the complex")
        if len(upper) != len(lower) + 1 or not lower.issubface(upper):
            raise MatchingError(f"Pair ({lower!r}, {upper!r}) is not a Hasse edge")
        for face in (lower, upper):
            if face in used:
                raise MatchingError(f"Face {face!r} is matched twice")
            used.add(face)


def oriented_hasse_diagram(X: SimplicialComplex, M: Matching) -> nx.DiGraph:
    """Hasse diagram with edges pointing up, except matched edges which point down."""
    matched = set(M.pairs)
    include_empty = any(not lower for lower, _ in matched)
    graph = nx.DiGraph()
    graph.add_nodes_from(f for f in X.faces if f or include_empty)
    for lower, upper in X.hasse_edges(include_empty=include_empty):
        if (lower, upper) in matched:
            graph.add_edge(upper, lower)
        else:
            graph.add_edge(lower, upper)
    return graph


def verify_matching_acyclic(X: SimplicialComplex, M: Matching) -> bool:
    """
    True iff the matching induces no directed cycle on the Hasse diagram.

    Raises:
        MatchingError: if a pair is not a Hasse edge of ``X`` or a face is matched twice.
    """
    validate_matching(X, M)
    return nx.is_directed_acyclic_graph(oriented_hasse_diagram(X, M))


def find_cycle(X: SimplicialComplex, M: Matching) -> Optional[list]:
    """A directed cycle of the oriented Hasse diagram, as a list of faces, or None."""
    validate_matching(X, M)
    try:
        edges = nx.find_cycle(oriented_hasse_diagram(X, M))
    except nx.NetworkXNoCycle:
        return None
    return [edge[0] for edge in edges]


def matching_from_certificate(certificate: Certificate) -> Matching:
    """The pairs of a collapse or anticollapse certificate, as a matching."""
    return Matching(frozenset((step.free, step.coface) for step in certificate.steps))


def critical_subcomplex(X: SimplicialComplex, M: Matching) -> Optional[SimplicialComplex]:
    """
    The critical cells of ``M`` as a complex, or None when they are not downward closed.
    """
    critical = set(M.critical_cells(X))
    if not critical:
        return SimplicialComplex((), X.ground)
    faces = critical | {Face()}
    for face in critical:
        if any(sub not in faces for sub in face.boundary()):
            return None
    return SimplicialComplex(faces, X.ground)
