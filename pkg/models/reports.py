from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from models.certificates import Certificate
from models.complex import SimplicialComplex


@dataclass(frozen=True)
class HomologyProfile:
    """
    Reduced integral homology of a complex.

    Attributes:
        betti (dict): dimension -> reduced Betti number (rank of the free part).
        torsion (dict): dimension -> sorted invariant factors greater than one.
    """
    betti: Dict[int, int]
    torsion: Dict[int, Tuple[int, ...]]

    def betti_number(self, k: int) -> int:
        return self.betti.get(k, 0)

    def torsion_of(self, k: int) -> Tuple[int, ...]:
        return self.torsion.get(k, ())

    def is_q_acyclic(self) -> bool:
        return not any(self.betti.values())

    def is_z_acyclic(self) -> bool:
        return self.is_q_acyclic() and not any(self.torsion.values())

    def dimensions(self) -> List[int]:
        return sorted(set(self.betti) | set(self.torsion))

    def lines(self) -> List[str]:
        rows = []
        for k in self.dimensions():
            if k < 0 and not self.betti_number(k):
                continue
            torsion = ','.join(str(t) for t in self.torsion_of(k))
            rows.append(f"dim {k}: betti={self.betti_number(k)} torsion=[{torsion}]")
        return rows


class Tri(str, Enum):
    """Outcome of a property check that may be inconclusive."""
    FOUND = 'found'
    REFUTED = 'refuted'
    UNKNOWN = 'unknown'


@dataclass
class HypertreeReport:
    complex: SimplicialComplex
    dimension: int
    facet_count: int
    q_acyclic: bool
    torsion_order: Optional[int]
    d_collapsible: Tri = Tri.UNKNOWN
    collapsible: Tri = Tri.UNKNOWN
    anticollapsible: Tri = Tri.UNKNOWN
    free_faces: int = 0
    dual_free_faces: int = 0
    seed: Optional[int] = None

    @property
    def no_free_faces(self) -> bool:
        return self.free_faces == 0

    @property
    def dual_no_free_faces(self) -> bool:
        return self.dual_free_faces == 0

    def as_row(self) -> dict:
        return {
            'seed': self.seed,
            'facets': self.facet_count,
            'q_acyclic': self.q_acyclic,
            'torsion': self.torsion_order,
            'dcollapsible': self.d_collapsible.value,
            'collapsible': self.collapsible.value,
            'anticollapsible': self.anticollapsible.value,
            'free_faces': self.free_faces,
            'dual_free_faces': self.dual_free_faces,
        }


class Claim(str, Enum):
    COLLAPSIBLE = 'collapsible'
    ANTICOLLAPSIBLE = 'anticollapsible'
    NO_FREE_FACES = 'no-free-faces'
    Q_ACYCLIC = 'Q-acyclic'
    Z_ACYCLIC = 'Z-acyclic'
    NOT_Z2_ACYCLIC = 'not-Z/2-acyclic'
    HAS_CORE = 'has-core'
    DUAL_HAS_CORE = 'dual-has-core'
    DUAL_NO_FREE_FACES = 'dual-no-free-faces'


@dataclass
class CatalogEntry:
    """
    A named complex with the properties it is known to have.

    Attributes:
        name (str): catalog identifier.
        complex (SimplicialComplex): the complex itself.
        claims (frozenset): the ``Claim`` flags, each re-verified when the entry is loaded.
        certificates (dict): witnesses found while verifying, keyed by claim.
    """
    name: str
    complex: SimplicialComplex
    claims: frozenset
    certificates: Dict[Claim, Certificate] = field(default_factory=dict)


class RefusalReason(str, Enum):
    FEW_VERTICES = 'n ≤ 7'
    LOW_DIMENSION = 'd ≤ 1'
    HIGH_DIMENSION = 'd ≥ n−3'


@dataclass(frozen=True)
class Refusal:
    """Why no stuck complex exists for the requested parameters."""
    n: int
    d: int
    reason: RefusalReason
    citation: str

    @property
    def label(self) -> str:
        if self.reason is RefusalReason.HIGH_DIMENSION:
            gap = self.n - self.d
            return f"d = n−{gap}" if gap >= 1 else "d ≥ n"
        if self.reason is RefusalReason.LOW_DIMENSION:
            return f"d = {self.d}"
        return self.reason.value

    def __str__(self):
        return f"Refusal: {self.label}"


@dataclass
class ConstructionResult:
    n: int
    d: int
    complex: SimplicialComplex
    certificate: Certificate
    plan: List[str]
    transported: bool = True


@dataclass
class SurveySummary:
    n: int
    d: int
    trials: int
    seed: int
    collapsible_not_anticollapsible: List[int] = field(default_factory=list)
    neither: List[int] = field(default_factory=list)
    no_free_faces: List[int] = field(default_factory=list)
    invalid: List[int] = field(default_factory=list)
