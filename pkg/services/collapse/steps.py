"""
Elementary collapses and anticollapses.

``free_faces`` and ``apply_step`` work on immutable complexes. Long move sequences
(certificate replay, searches) run on a ``WorkingComplex``, a mutable face set that
tracks up-degrees and the current free pairs incrementally.
"""
from typing import Dict, Iterable, List, Optional, Set, Tuple

from models.certificates import Certificate, Direction, StepPair, certificate_for
from models.complex import EMPTY_FACE, Face, SimplicialComplex
from utils.exceptions import ComplexInputError, StepError
from utils.logging import setup_logger

logger = setup_logger(__name__)


class WorkingComplex:
    """
    Mutable copy of a complex for applying many moves.

    Args:
        X (SimplicialComplex): starting complex.
        allow_trivial (bool): whether the move pairing ∅ with a lone vertex is legal.
    """

    def __init__(self, X: SimplicialComplex, allow_trivial: bool = False):
        self.ground = X.ground
        self.faces: Set[Face] = set(X.faces)
        self.allow_trivial = allow_trivial
        self._up: Dict[Face, int] = {}
        self._partner: Dict[Face, Face] = {}
        # free face -> its unique coface
        self._free: Dict[Face, Face] = {}
        for face in self.faces:
            self._up.setdefault(face, 0)
            if face:
                for sub in face.boundary():
                    self._up[sub] = self._up.get(sub, 0) + 1
                    self._partner[sub] = face
        for face in self.faces:
            self._refresh(face)

    # -- bookkeeping ---------------------------------------------------------

    def _unique_coface(self, face: Face) -> Optional[Face]:
        partner = self._partner.get(face)
        if partner is not None and partner in self.faces:
            return partner
        for vertex in self.ground:
            if vertex not in face:
                candidate = face.with_vertex(vertex)
                if candidate in self.faces:
                    self._partner[face] = candidate
                    return candidate
        return None

    def _is_free(self, face: Face) -> Optional[Face]:
        if face not in self.faces or self._up.get(face, 0) != 1:
            return None
        if not face and not self.allow_trivial:
            return None
        coface = self._unique_coface(face)
        if coface is None or self._up.get(coface, 0) != 0:
            return None
        return coface

    def _refresh(self, face: Face):
        self._free.pop(face, None)
        coface = self._is_free(face)
        if coface is not None:
            self._free[face] = coface

    def _drop_pairs_touching(self, faces: Iterable[Face]):
        for face in faces:
            self._free.pop(face, None)
            if face:
                for sub in face.boundary():
                    if self._free.get(sub) == face:
                        del self._free[sub]

    def _remove_face(self, face: Face) -> List[Face]:
        self.faces.discard(face)
        self._up.pop(face, None)
        touched = []
        if face:
            for sub in face.boundary():
                self._up[sub] -= 1
                touched.append(sub)
        return touched

    def _add_face(self, face: Face) -> List[Face]:
        self.faces.add(face)
        self._up[face] = 0
        touched = []
        if face:
            for sub in face.boundary():
                self._up[sub] = self._up.get(sub, 0) + 1
                self._partner[sub] = face
                touched.append(sub)
        return touched

    def _rescan(self, faces: Iterable[Face]):
        seen = set()
        for face in faces:
            for candidate in [face, *(face.boundary() if face else ())]:
                if candidate not in seen:
                    seen.add(candidate)
                    self._refresh(candidate)

    # -- queries -------------------------------------------------------------

    def __contains__(self, face) -> bool:
        return face in self.faces

    def up_degree(self, face: Face) -> int:
        return self._up.get(face, 0)

    @property
    def free_pairs(self) -> List[Tuple[Face, Face]]:
        return list(self._free.items())

    def sorted_free_pairs(self) -> List[Tuple[Face, Face]]:
        return sorted(self._free.items(), key=lambda pair: (len(pair[1]), pair))

    def top_dimension(self) -> int:
        return max((len(f) - 1 for f in self.faces), default=-1)

    def is_single_vertex(self) -> bool:
        return len(self.faces) == 2 and EMPTY_FACE in self.faces

    def snapshot(self) -> SimplicialComplex:
        return SimplicialComplex(self.faces, self.ground)

    # -- moves ---------------------------------------------------------------

    def check(self, step: StepPair):
        """Raise ``StepError`` unless ``step`` is legal right now."""
        free, coface = step.free, step.coface
        if step.is_trivial and not self.allow_trivial:
            raise StepError("the trivial move on the empty face is disabled", step)
        if step.direction is Direction.COLLAPSE:
            if free not in self.faces or coface not in self.faces:
                raise StepError("both faces must be in the complex", step)
            if self._up.get(coface, 0) != 0:
                raise StepError(f"{coface!r} is not maximal", step)
            if self._up.get(free, 0) != 1:
                raise StepError(f"{free!r} lies in {self._up.get(free, 0)} larger faces", step)
            return
        if not set(coface).issubset(self.ground):
            raise StepError("anticollapses may not introduce vertices outside the ground set", step)
        if free in self.faces or coface in self.faces:
            raise StepError("both faces must be missing from the complex", step)
        missing = [sub for sub in coface.boundary() if sub != free and sub not in self.faces]
        if missing:
            raise StepError(f"other boundary faces of {coface!r} are missing: {missing}", step)
        if free and any(sub not in self.faces for sub in free.boundary()):
            raise StepError(f"boundary of {free!r} is not in the complex", step)

    def apply(self, step: StepPair):
        self.check(step)
        if step.direction is Direction.COLLAPSE:
            self._drop_pairs_touching((step.free, step.coface))
            touched = self._remove_face(step.coface) + self._remove_face(step.free)
        else:
            self._drop_pairs_touching(step.coface.boundary())
            touched = self._add_face(step.free) + self._add_face(step.coface) + [step.free, step.coface]
        self._rescan(touched)

    def delete_maximal(self, face: Face):
        """Remove one maximal face (a critical cell in a Morse run)."""
        if face not in self.faces or self._up.get(face, 0) != 0:
            raise StepError(f"{face!r} is not a maximal face")
        self._drop_pairs_touching([face])
        self._rescan(self._remove_face(face))


def free_faces(X: SimplicialComplex, allow_trivial: bool = False) -> List[StepPair]:
    """
    All free pairs of ``X``: a face lying in exactly one larger face, with that face.

    The unique larger face is then a maximal face of one more vertex. The empty
    face is reported only with ``allow_trivial`` (for a single-vertex complex).
    """
    working = WorkingComplex(X, allow_trivial=allow_trivial)
    return [StepPair(free, coface, Direction.COLLAPSE) for free, coface in working.sorted_free_pairs()]


def apply_step(X: SimplicialComplex, step: StepPair, allow_trivial: bool = False) -> SimplicialComplex:
    """
    Apply one elementary collapse or anticollapse.

    Raises:
        StepError: naming the violated condition.
    """
    working = WorkingComplex(X, allow_trivial=allow_trivial)
    working.apply(step)
    return working.snapshot()


def replay(X: SimplicialComplex, steps: Iterable[StepPair], allow_trivial: bool = False) -> SimplicialComplex:
    working = WorkingComplex(X, allow_trivial=allow_trivial)
    for index, step in enumerate(steps):
        try:
            working.apply(step)
        except StepError as e:
            raise StepError(f"step {index}: {e.condition}", step)
    return working.snapshot()


def verify_certificate(X: SimplicialComplex, certificate: Certificate,
                       allow_trivial: bool = False) -> SimplicialComplex:
    """
    Replay a certificate on ``X`` and check both digests.

    Returns:
        SimplicialComplex: the complex reached.

    Raises:
        ComplexInputError: if a digest does not match.
        StepError: if a move is illegal.
    """
    if X.digest() != certificate.start_hash:
        raise ComplexInputError("Certificate start digest does not match the complex")
    end = replay(X, certificate.steps, allow_trivial=allow_trivial)
    if end.digest() != certificate.end_hash:
        raise ComplexInputError("Certificate end digest does not match the replayed complex")
    return end


def build_certificate(X: SimplicialComplex, steps: List[StepPair], kind: Direction,
                      seed: Optional[int] = None, allow_trivial: bool = False) -> Certificate:
    """Replay ``steps`` on ``X`` and pin the result into a certificate."""
    end = replay(X, steps, allow_trivial=allow_trivial)
    return certificate_for(X, end, kind, steps, seed)
