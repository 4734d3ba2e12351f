from itertools import combinations
from typing import Dict, Iterable, Optional, Tuple

from models.complex import EMPTY_FACE, Face, SimplicialComplex
from utils.exceptions import ComplexInputError


def _as_face(face) -> Face:
    return face if isinstance(face, Face) else Face.of(face)


def from_facets(facets: Iterable[Iterable[int]], ground: Optional[Iterable[int]] = None) -> SimplicialComplex:
    """
    Build the downward closure of a list of faces.

    Non-maximal inputs are absorbed. With no facets the result is the empty
    complex ``{∅}`` over ``ground``.

    Args:
        facets: faces given as vertex lists.
        ground: explicit ground set; defaults to the union of the facets.

    Returns:
        SimplicialComplex: the closure.

    Raises:
        ComplexInputError: on duplicate or non-positive labels, or a facet outside ``ground``.
    """
    closed = {EMPTY_FACE}
    for raw in facets:
        face = _as_face(raw)
        if face in closed:
            continue
        closed.update(face.subfaces())
    return SimplicialComplex(closed, ground)


def void_complex(ground: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex((), ground)


def simplex(vertices: Iterable[int]) -> SimplicialComplex:
    return from_facets([Face.of(vertices)])


def simplex_boundary(vertices: Iterable[int]) -> SimplicialComplex:
    face = Face.of(vertices)
    return from_facets(face.boundary(), ground=face)


def complete_skeleton(n: int, j: int) -> SimplicialComplex:
    """All faces of dimension at most ``j`` on the vertices 1..n."""
    return from_facets((Face(c) for c in combinations(range(1, n + 1), j + 1)), ground=range(1, n + 1))


def with_ground(X: SimplicialComplex, ground: Iterable[int]) -> SimplicialComplex:
    return SimplicialComplex(X.faces, ground)


def link(X: SimplicialComplex, v: int) -> SimplicialComplex:
    return link_and_del(X, v)[0]


def deletion(X: SimplicialComplex, v: int) -> SimplicialComplex:
    return link_and_del(X, v)[1]


def link_and_del(X: SimplicialComplex, v: int) -> Tuple[SimplicialComplex, SimplicialComplex]:
    """
    Link and deletion of a vertex; both live on the ground set without ``v``.

    Raises:
        ComplexInputError: if ``v`` is not in the ground set of ``X``.
    """
    if v not in X.ground:
        raise ComplexInputError(f"Vertex {v} is not in the ground set")
    ground = X.ground - {v}
    link_faces = set()
    del_faces = set()
    for face in X.faces:
        if v in face:
            link_faces.add(face.without(v))
        else:
            del_faces.add(face)
    return SimplicialComplex(link_faces, ground), SimplicialComplex(del_faces, ground)


def join(X: SimplicialComplex, Y: SimplicialComplex) -> SimplicialComplex:
    """Faces are all unions of a face of ``X`` with a face of ``Y``."""
    overlap = X.ground & Y.ground
    if overlap:
        raise ComplexInputError(f"Cannot join complexes sharing vertices {sorted(overlap)}")
    faces = {left.union(right) for left in X.faces for right in Y.faces}
    return SimplicialComplex(faces, X.ground | Y.ground)


def cone(X: SimplicialComplex, apex: int) -> SimplicialComplex:
    return join(simplex([apex]), X)


def cone_apexes(X: SimplicialComplex) -> Tuple[int, ...]:
    """Vertices ``v`` with every facet of ``X`` containing ``v``."""
    if X.is_void or not X.vertices:
        return ()
    common = set(X.facets[0])
    for facet in X.facets[1:]:
        common &= set(facet)
    return tuple(sorted(common))


def is_cone(X: SimplicialComplex) -> bool:
    return bool(cone_apexes(X))


def skeleton(X: SimplicialComplex, j: int) -> SimplicialComplex:
    return SimplicialComplex((f for f in X.faces if f.dim <= j), X.ground)


def pure_part(X: SimplicialComplex) -> SimplicialComplex:
    """Downward closure of the top-dimensional facets only."""
    top = X.dimension
    if X.is_void:
        return X
    return from_facets((f for f in X.facets if f.dim == top), ground=X.ground)


def induced_subcomplex(X: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    keep = set(vertices)
    return SimplicialComplex((f for f in X.faces if keep.issuperset(f)), X.ground & keep)


def relabel(X: SimplicialComplex, mapping: Dict[int, int]) -> SimplicialComplex:
    """Apply an injective relabeling to faces and ground set."""
    images = [mapping.get(v, v) for v in X.ground]
    if len(set(images)) != len(images):
        raise ComplexInputError("Relabeling is not injective on the ground set")
    return SimplicialComplex((f.relabel(mapping) for f in X.faces), images)


def canonical_mapping(vertices: Iterable[int]) -> Dict[int, int]:
    """Order-preserving map of ``vertices`` onto 1..k."""
    return {v: i for i, v in enumerate(sorted(vertices), start=1)}


def canonical_relabel(X: SimplicialComplex) -> Tuple[SimplicialComplex, Dict[int, int]]:
    mapping = canonical_mapping(X.ground)
    return relabel(X, mapping), mapping


def facet_key(X: SimplicialComplex) -> Tuple:
    """Hashable canonical form of the complex on its own vertices."""
    mapping = canonical_mapping(X.vertices)
    return tuple(sorted(f.relabel(mapping) for f in X.facets)) if not X.is_void else ('void',)
