"""
Domain model for finite abstract simplicial complexes.

A ``Face`` is a strictly increasing tuple of positive vertex labels; the empty tuple
is the empty face. A ``SimplicialComplex`` is an immutable, downward-closed family
of faces over an explicit ground set, which may be larger than the set of vertices
actually used (the Alexander dual needs this).

Two degenerate complexes are kept apart:

* the *empty complex* ``{∅}``, whose only face is the empty face;
* the *void complex*, with no faces at all (the dual of a full simplex).
"""
import hashlib
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from utils.exceptions import ComplexInputError


class Face(tuple):
    """A simplex given by its sorted vertex labels."""

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int] = ()):
        values = tuple(vertices)
        for vertex in values:
            if isinstance(vertex, bool) or not isinstance(vertex, int):
                raise ComplexInputError(f"Invalid vertex label {vertex!r}: labels must be integers")
            if vertex < 1:
                raise ComplexInputError(f"Invalid vertex label {vertex}: labels must be positive")
        for left, right in zip(values, values[1:]):
            if left >= right:
                raise ComplexInputError(f"Invalid face {list(values)}: labels must be strictly increasing")
        return super().__new__(cls, values)

    @classmethod
    def of(cls, vertices: Iterable[int]) -> 'Face':
        """Build a face from labels in any order, rejecting duplicates."""
        values = list(vertices)
        ordered = sorted(values)
        if len(set(ordered)) != len(ordered):
            raise ComplexInputError(f"Invalid face {values}: duplicate vertex")
        return cls(ordered)

    @property
    def dim(self) -> int:
        return len(self) - 1

    def with_vertex(self, vertex: int) -> 'Face':
        if vertex in self:
            raise ComplexInputError(f"Vertex {vertex} already in face {list(self)}")
        return Face(sorted((*self, vertex)))

    def without(self, vertex: int) -> 'Face':
        return Face(v for v in self if v != vertex)

    def union(self, other: Iterable[int]) -> 'Face':
        return Face(sorted(set(self).union(other)))

    def complement(self, ground: Iterable[int]) -> 'Face':
        mine = set(self)
        return Face(sorted(v for v in ground if v not in mine))

    def boundary(self) -> List['Face']:
        """Codimension-one faces, in the order of the vertex removed."""
        return [Face(self[:j] + self[j + 1:]) for j in range(len(self))]

    def subfaces(self) -> Iterator['Face']:
        for size in range(len(self) + 1):
            for subset in combinations(self, size):
                yield Face(subset)

    def issubface(self, other: 'Face') -> bool:
        return set(self).issubset(other)

    def relabel(self, mapping: Dict[int, int]) -> 'Face':
        return Face.of(mapping.get(v, v) for v in self)

    def __repr__(self):
        return f"[{','.join(str(v) for v in self)}]"


EMPTY_FACE = Face()


class HasseEdge(NamedTuple):
    lower: Face
    upper: Face

    @classmethod
    def checked(cls, lower: Face, upper: Face) -> 'HasseEdge':
        if len(upper) != len(lower) + 1 or not lower.issubface(upper):
            raise ComplexInputError(f"{lower!r} -> {upper!r} is not a Hasse edge")
        return cls(lower, upper)


class SimplicialComplex:
    """
    Immutable downward-closed family of faces on an explicit ground set.

    Args:
        faces: every face of the complex (must already be downward closed).
        ground: the vertex set the complex lives on; defaults to its vertices.

    Raises:
        ComplexInputError: if the faces are not downward closed or use labels
            outside the ground set.
    """

    def __init__(self, faces: Iterable[Face], ground: Optional[Iterable[int]] = None):
        face_set = frozenset(f if isinstance(f, Face) else Face(f) for f in faces)
        support = {v for f in face_set if len(f) == 1 for v in f}
        if ground is None:
            ground_set = frozenset(support)
        else:
            ground_set = frozenset(ground)
            for vertex in ground_set:
                Face((vertex,))

        by_dim: Dict[int, List[Face]] = {}
        for face in face_set:
            for vertex in face:
                if vertex not in ground_set:
                    raise ComplexInputError(f"Face {face!r} uses vertex {vertex} outside the ground set")
            if face and any(sub not in face_set for sub in face.boundary()):
                raise ComplexInputError(f"Face family is not downward closed at {face!r}")
            by_dim.setdefault(face.dim, []).append(face)

        self._faces: FrozenSet[Face] = face_set
        self._ground: FrozenSet[int] = ground_set
        self._by_dim: Dict[int, Tuple[Face, ...]] = {k: tuple(sorted(v)) for k, v in by_dim.items()}

    # -- basic queries -------------------------------------------------------

    @property
    def ground(self) -> FrozenSet[int]:
        return self._ground

    @property
    def n(self) -> int:
        """Size of the ground set."""
        return len(self._ground)

    @property
    def faces(self) -> FrozenSet[Face]:
        return self._faces

    @property
    def is_void(self) -> bool:
        return not self._faces

    @property
    def dimension(self) -> int:
        """Largest face dimension; -1 for both ``{∅}`` and the void complex."""
        return max(self._by_dim) if self._by_dim else -1

    @cached_property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(f[0] for f in self._by_dim.get(0, ()))

    def faces_of_dim(self, k: int) -> Tuple[Face, ...]:
        return self._by_dim.get(k, ())

    def f_vector(self) -> List[int]:
        """Face counts for dimensions -1, 0, ..., dim."""
        return [len(self.faces_of_dim(k)) for k in range(-1, self.dimension + 1)]

    @cached_property
    def facets(self) -> Tuple[Face, ...]:
        covered = set()
        for face in self._faces:
            covered.update(face.boundary())
        return tuple(sorted((f for f in self._faces if f not in covered), key=lambda f: (len(f), f)))

    def cofaces(self, face: Face) -> List[Face]:
        """Faces of the complex that contain ``face`` and have one more vertex."""
        found = []
        for vertex in sorted(self._ground):
            if vertex not in face:
                candidate = face.with_vertex(vertex)
                if candidate in self._faces:
                    found.append(candidate)
        return found

    def up_degree(self, face: Face) -> int:
        return len(self.cofaces(face))

    def hasse_edges(self, include_empty: bool = False) -> List[HasseEdge]:
        start = 0 if include_empty else 1
        edges = []
        for k in range(start, self.dimension + 1):
            for upper in self.faces_of_dim(k):
                edges.extend(HasseEdge(lower, upper) for lower in upper.boundary())
        return edges

    def reduced_euler_characteristic(self) -> int:
        return sum((-1) ** k * len(faces) for k, faces in self._by_dim.items())

    def is_simplex(self) -> bool:
        """True when the complex is the full simplex on its ground set."""
        return Face(sorted(self._ground)) in self._faces

    def is_pure(self) -> bool:
        return all(f.dim == self.dimension for f in self.facets)

    def digest(self) -> str:
        """SHA-256 over the canonical text of the ground set and the sorted facets."""
        lines = ['ground ' + ' '.join(str(v) for v in sorted(self._ground))]
        if self.is_void:
            lines.append('void')
        lines.extend('facet ' + ' '.join(str(v) for v in facet) for facet in sorted(self.facets))
        return hashlib.sha256('\n'.join(lines).encode('utf-8')).hexdigest()

    # -- dunder --------------------------------------------------------------

    def __contains__(self, face) -> bool:
        return face in self._faces

    def __iter__(self) -> Iterator[Face]:
        return iter(sorted(self._faces, key=lambda f: (len(f), f)))

    def __len__(self) -> int:
        return len(self._faces)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._ground == other._ground and self._faces == other._faces

    def __hash__(self) -> int:
        return hash((self._ground, self._faces))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(void, n={self.n})"
        return f"SimplicialComplex(n={self.n}, dim={self.dimension}, f={self.f_vector()[1:]})"
