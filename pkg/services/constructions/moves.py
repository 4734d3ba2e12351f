"""
Moves that build bigger stuck complexes from smaller ones, with certificate transport.

* ``double_cone(X, x)`` adds one vertex and one dimension: the union of a cone with
  apex ``a`` over ``X`` with ``x`` renamed ``b`` and a cone with apex ``b`` over ``X``
  with ``x`` renamed ``a``.
* ``stacking_move(X, σ)`` keeps the dimension and adds one vertex: a top facet is
  replaced by the cone over its boundary.

Anticollapse certificates are carried through both moves constructively.
"""
from itertools import combinations
from typing import List, Optional, Tuple

from models.certificates import Certificate, Direction, Matching, StepPair, certificate_for
from models.complex import Face, SimplicialComplex
from services.collapse.morse import validate_matching
from services.collapse.steps import WorkingComplex, replay
from services.complex.operations import canonical_mapping, cone_apexes, relabel, simplex
from services.duality.alexander import alexander_dual, dual_certificate
from utils.exceptions import ComplexInputError, PreconditionError
from utils.logging import setup_logger

logger = setup_logger(__name__)


# -- double cone -------------------------------------------------------------

def fresh_labels(X: SimplicialComplex) -> Tuple[int, int]:
    top = max(X.ground, default=0)
    return top + 1, top + 2


def _rename(face: Face, x: int, new: int) -> Face:
    return face.without(x).with_vertex(new) if x in face else face


def double_cone_labeled(X: SimplicialComplex, x: int) -> Tuple[SimplicialComplex, int, int]:
    """
    Double cone with the raw fresh labels a = max+1 and b = max+2.

    If ``x`` is not a vertex of ``X`` both cones are taken over ``X`` itself.

    Returns:
        tuple: (complex on (V minus x) plus {a, b}, a, b)
    """
    a, b = fresh_labels(X)
    faces = set()
    for face in X.faces:
        for apex, renamed in ((a, _rename(face, x, b)), (b, _rename(face, x, a))):
            faces.add(renamed)
            faces.add(renamed.with_vertex(apex))
    ground = (X.ground - {x}) | {a, b}
    return SimplicialComplex(faces, ground), a, b


def double_cone(X: SimplicialComplex, x: int) -> SimplicialComplex:
    """
    Double cone over ``X`` at ``x``, relabeled order-preservingly onto 1..n+1.

    Raises:
        ComplexInputError: if ``x`` is not a positive integer label.
    """
    Face((x,))
    raw, _, _ = double_cone_labeled(X, x)
    return relabel(raw, canonical_mapping(raw.ground))


def lift_matching(X: SimplicialComplex, x: int, M: Matching) -> Matching:
    """
    Lift a matching on ``X`` to the raw double cone at ``x`` (labels from ``fresh_labels``).

    With ``M_b`` the matching on ``X`` with ``x`` renamed ``b``, every pair (τ, σ) of
    ``M_b`` gives ([a,τ], [a,σ]); also (τ, σ) itself when b ∉ τ, and ([b,τ], [b,σ])
    when b ∉ σ.

    Raises:
        MatchingError: if ``M`` is not a matching on ``X``.
    """
    validate_matching(X, M)
    a, b = fresh_labels(X)
    lifted = set()
    for lower, upper in M.pairs:
        tau, sigma = _rename(lower, x, b), _rename(upper, x, b)
        lifted.add((tau.with_vertex(a), sigma.with_vertex(a)))
        if b not in tau:
            lifted.add((tau, sigma))
        if b not in sigma:
            lifted.add((tau.with_vertex(b), sigma.with_vertex(b)))
    return Matching(frozenset(lifted))


def _psi_preimage_step(step: StepPair, x: int, a: int, b: int) -> List[StepPair]:
    """Collapse steps on the dual of the double cone covering one collapse of the dual of X."""
    tau, sigma = step.free, step.coface
    if x not in sigma:
        return [step]
    if x in tau:
        t0, s0 = tau.without(x), sigma.without(x)
        return [
            StepPair(t0.union((a, b)), s0.union((a, b))),
            StepPair(t0.with_vertex(a), s0.with_vertex(a)),
            StepPair(t0.with_vertex(b), s0.with_vertex(b)),
        ]
    return [
        StepPair(tau.with_vertex(a), tau.union((a, b))),
        StepPair(tau, tau.with_vertex(b)),
    ]


def transport_double_cone(X: SimplicialComplex, x: int, certificate: Certificate) -> Tuple[SimplicialComplex, Certificate]:
    """
    Carry an anticollapse certificate of ``X`` (to the full simplex) to its double cone.

    The dual of the double cone is the dual of ``X`` with ``x`` blown up into the
    edge {a, b}. The collapse sequence of the dual of ``X`` lifts through that
    blow-up and comes back as an anticollapse sequence.

    Returns:
        tuple: (canonically labeled double cone, its anticollapse certificate)

    Raises:
        PreconditionError: if the certificate is not an anticollapse certificate.
        StepError: if a lifted move is illegal.
    """
    if certificate.kind is not Direction.ANTICOLLAPSE:
        raise PreconditionError("Double-cone transport needs an anticollapse certificate")
    if x not in X.ground:
        raise PreconditionError(f"Vertex {x} is not in the ground set")
    raw, a, b = double_cone_labeled(X, x)
    collapse_cert = dual_certificate(X, certificate)

    lifted: List[StepPair] = []
    for step in collapse_cert.steps:
        lifted.extend(_psi_preimage_step(step, x, a, b))
    end_of_dual = replay(alexander_dual(X), collapse_cert.steps)
    if end_of_dual.vertices == (x,):
        lifted.append(StepPair(Face((a,)), Face((a, b))))

    raw_dual = alexander_dual(raw)
    finish = replay(raw_dual, lifted)
    raw_collapse = certificate_for(raw_dual, finish, Direction.COLLAPSE, lifted, certificate.seed)
    raw_cert = dual_certificate(raw_dual, raw_collapse)
    return relabel_with_certificate(raw, raw_cert)


# -- stacking ----------------------------------------------------------------

def stacking_move(X: SimplicialComplex, sigma, apex: Optional[int] = None) -> SimplicialComplex:
    """
    Replace the top facet ``sigma`` by the cone over its boundary from a new vertex.

    Raises:
        PreconditionError: if ``sigma`` is not a facet of top dimension.
    """
    facet = sigma if isinstance(sigma, Face) else Face.of(sigma)
    if facet not in X.facets or facet.dim != X.dimension:
        raise PreconditionError(f"{facet!r} is not a top-dimensional facet")
    v = max(X.ground) + 1 if apex is None else apex
    if v in X.ground:
        raise ComplexInputError(f"Apex {v} is already in the ground set")
    faces = set(X.faces)
    faces.discard(facet)
    for sub in facet.subfaces():
        if sub != facet:
            faces.add(sub.with_vertex(v))
    return SimplicialComplex(faces, X.ground | {v})


def stacked_simplex(d: int, j: int) -> SimplicialComplex:
    """The d-simplex stacked j times, always on the most recent facet."""
    X = simplex(range(1, d + 2))
    for _ in range(j):
        X = stacking_move(X, X.facets[-1])
    return X


def transport_stacking(X: SimplicialComplex, sigma, certificate: Certificate) -> Tuple[SimplicialComplex, Certificate]:
    """
    Carry an anticollapse certificate of ``X`` through a stacking move at ``sigma``.

    The first move adds (σ, [v,σ]); the moves of ``X`` then apply unchanged; the
    result is a cone with apex any vertex of σ, which ``cone_fill`` completes.
    """
    facet = sigma if isinstance(sigma, Face) else Face.of(sigma)
    Y = stacking_move(X, facet)
    v = max(Y.ground)
    steps = [StepPair(facet, facet.with_vertex(v), Direction.ANTICOLLAPSE)]
    steps.extend(certificate.steps)
    middle = replay(Y, steps)
    steps.extend(cone_fill(middle, facet[0]))
    end = replay(Y, steps)
    return Y, certificate_for(Y, end, Direction.ANTICOLLAPSE, steps, certificate.seed)


# -- cones -------------------------------------------------------------------

def cone_fill(K: SimplicialComplex, apex: int) -> List[StepPair]:
    """
    Anticollapses from a cone ``K`` with apex ``apex`` to the full simplex on its ground set.

    Every face ρ avoiding the apex that is missing from ``K`` is added together with
    ρ plus the apex, in order of increasing dimension.

    Raises:
        PreconditionError: if ``apex`` is not a cone point of ``K``.
    """
    if apex not in cone_apexes(K):
        raise PreconditionError(f"Vertex {apex} is not a cone apex of {K!r}")
    others = sorted(K.ground - {apex})
    steps = []
    for size in range(len(others) + 1):
        for subset in combinations(others, size):
            rho = Face(subset)
            if rho not in K:
                steps.append(StepPair(rho, rho.with_vertex(apex), Direction.ANTICOLLAPSE))
    return steps


# -- relabeling --------------------------------------------------------------

def relabel_with_certificate(X: SimplicialComplex, certificate: Certificate) -> Tuple[SimplicialComplex, Certificate]:
    """Relabel ``X`` onto 1..n and its certificate with it."""
    mapping = canonical_mapping(X.ground)
    Y = relabel(X, mapping)
    steps = [step.relabel(mapping) for step in certificate.steps]
    working = WorkingComplex(Y)
    for step in steps:
        working.apply(step)
    return Y, certificate_for(Y, working.snapshot(), certificate.kind, steps, certificate.seed)
