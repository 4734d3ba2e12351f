from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from models.complex import Face, SimplicialComplex
from utils.exceptions import ComplexInputError


class Direction(str, Enum):
    COLLAPSE = 'collapse'
    ANTICOLLAPSE = 'anticollapse'

    def opposite(self) -> 'Direction':
        return Direction.ANTICOLLAPSE if self is Direction.COLLAPSE else Direction.COLLAPSE


@dataclass(frozen=True)
class StepPair:
    """
    One elementary move: remove (collapse) or add (anticollapse) ``free`` and ``coface``.

    Attributes:
        free (Face): the smaller face of the pair.
        coface (Face): the face with exactly one more vertex that contains ``free``.
        direction (Direction): whether the pair is removed or added.
    """
    free: Face
    coface: Face
    direction: Direction = Direction.COLLAPSE

    def __post_init__(self):
        if not isinstance(self.free, Face):
            object.__setattr__(self, 'free', Face.of(self.free))
        if not isinstance(self.coface, Face):
            object.__setattr__(self, 'coface', Face.of(self.coface))
        if len(self.coface) != len(self.free) + 1 or not self.free.issubface(self.coface):
            raise ComplexInputError(f"{self.free!r} is not a codimension-one face of {self.coface!r}")

    @property
    def is_trivial(self) -> bool:
        """The move pairing the empty face with a single vertex."""
        return len(self.free) == 0

    def relabel(self, mapping: Dict[int, int]) -> 'StepPair':
        return StepPair(self.free.relabel(mapping), self.coface.relabel(mapping), self.direction)

    def __str__(self):
        return f"{self.direction.value}({self.free!r}, {self.coface!r})"


@dataclass(frozen=True)
class Certificate:
    """
    Replayable list of elementary moves, pinned to its start and end complexes by digest.

    Attributes:
        kind (Direction): every step has this direction.
        ground (tuple): ground set the moves act on.
        steps (tuple): the ordered moves.
        start_hash (str): digest of the complex the moves start from.
        end_hash (str): digest of the complex reached after the last move.
        seed (int | None): seed of the run that produced the certificate, if any.
    """
    kind: Direction
    ground: Tuple[int, ...]
    steps: Tuple[StepPair, ...]
    start_hash: str
    end_hash: str
    seed: Optional[int] = None

    def __post_init__(self):
        for step in self.steps:
            if step.direction is not self.kind:
                raise ComplexInputError(f"Step {step} does not match certificate kind '{self.kind.value}'")

    def __len__(self):
        return len(self.steps)

    @property
    def uses_trivial_step(self) -> bool:
        return any(step.is_trivial for step in self.steps)

    def pairs(self) -> List[Tuple[Face, Face]]:
        return [(step.free, step.coface) for step in self.steps]


@dataclass(frozen=True)
class Matching:
    """A set of (face, coface) Hasse edges; no face may appear twice."""
    pairs: frozenset = field(default_factory=frozenset)

    @classmethod
    def of(cls, pairs: Iterable[Tuple[Iterable[int], Iterable[int]]]) -> 'Matching':
        normalized = set()
        for lower, upper in pairs:
            lower = lower if isinstance(lower, Face) else Face.of(lower)
            upper = upper if isinstance(upper, Face) else Face.of(upper)
            normalized.add((lower, upper))
        return cls(frozenset(normalized))

    def matched_faces(self) -> set:
        return {face for pair in self.pairs for face in pair}

    def critical_cells(self, complex_: SimplicialComplex) -> List[Face]:
        """Nonempty faces of ``complex_`` left unmatched."""
        matched = self.matched_faces()
        return [f for f in complex_ if f and f not in matched]

    def morse_vector(self, complex_: SimplicialComplex) -> 'MorseVector':
        counts = [0] * (complex_.dimension + 1)
        for face in self.critical_cells(complex_):
            counts[face.dim] += 1
        return MorseVector(tuple(counts))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs, key=lambda pair: (len(pair[0]), pair)))


@dataclass(frozen=True)
class MorseVector:
    """Number of critical cells in each dimension 0, 1, ..., dim."""
    counts: Tuple[int, ...]

    def alternating_sum(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.counts))

    def is_perfect_point(self) -> bool:
        """True for the vector (1, 0, ..., 0) of a collapsible complex."""
        return bool(self.counts) and self.counts[0] == 1 and not any(self.counts[1:])

    def __str__(self):
        return '(' + ', '.join(str(c) for c in self.counts) + ')'


def certificate_for(start: SimplicialComplex, end: SimplicialComplex, kind: Direction,
                    steps: Iterable[StepPair], seed: Optional[int] = None) -> Certificate:
    return Certificate(
        kind=kind,
        ground=tuple(sorted(start.ground)),
        steps=tuple(steps),
        start_hash=start.digest(),
        end_hash=end.digest(),
        seed=seed,
    )
