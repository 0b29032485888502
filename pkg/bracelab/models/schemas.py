"""
Pydantic report and record models.

- ValidationReport / AxiomViolation: what validate() found wrong with a pair of tables.
- ExpansionTrace, CheckResult, LevelResult: results of the verification operations.
- InvariantRecord, CatalogEntry: the catalog index records; Signature names the one-sided witnesses.
- PeriodicDecomposition, FactorMembershipResult: free-algebra outputs.
"""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from .structures import FiniteBrace


class ViolationKind(str, Enum):
    NOT_ABELIAN_GROUP = "NotAbelianGroup"
    NOT_DISTRIBUTIVE = "NotDistributive"
    ZERO_PRODUCT = "ZeroProduct"
    CIRCLE_NOT_GROUP = "CircleNotGroup"


class Signature(str, Enum):
    """Which one-sided chain vanishes while the other does not."""
    LEFT_ONLY = "left-only"  # A^n = 0, A^(n) never 0: nilpotent adjoint group, infinite level
    RIGHT_ONLY = "right-only"  # A^(n) = 0, A^n never 0: finite level, adjoint group not nilpotent


class AxiomViolation(BaseModel):
    kind: ViolationKind
    reason: str  # e.g. "not associative", "no inverse"
    witness: Tuple[int, ...] = Field(..., description="Witnessing element, pair or triple")
    count: int = Field(1, description="How many witnesses of this reason exist")


class ValidationReport(BaseModel):
    order: int
    chirality: str
    violations: List[AxiomViolation] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> List[ViolationKind]:
        return sorted({v.kind for v in self.violations}, key=lambda k: k.value)

    def lines(self) -> List[str]:
        return [
            f"{v.kind.value}: {v.reason} at {v.witness} ({v.count} witness{'es' if v.count != 1 else ''})"
            for v in self.violations
        ]


class CheckResult(BaseModel):
    """Outcome of an exhaustive check; counterexample is the first failing tuple."""
    name: str
    passed: bool
    counterexample: Optional[Tuple[int, ...]] = None
    detail: Optional[str] = None

    def __bool__(self) -> bool:
        return self.passed


class ExpansionTrace(BaseModel):
    a: int
    b: int
    c: int
    s: int  # A^s = 0
    d: List[int]
    d_prime: List[int]
    correction: int  # value of the alternating correction sum
    lhs: int  # (a + b)c
    rhs: int  # ac + bc + correction
    holds: bool
    memberships_ok: bool = True  # d'_i lies in A^{i+1} for every i


class LevelResult(BaseModel):
    """Multipermutation level; level is None when the retraction stalls above one point."""
    level: Optional[int]
    sizes: List[int]

    @property
    def finite(self) -> bool:
        return self.level is not None


class InvariantRecord(BaseModel):
    order: int
    chirality: str
    additive_type: List[int]  # elementary divisors, e.g. [2, 4]
    adjoint_nilpotent: bool
    adjoint_class: Optional[int] = None
    adjoint_abelian: bool
    left_vanishes_at: Optional[int] = None
    right_vanishes_at: Optional[int] = None
    bracket_vanishes_at: Optional[int] = None
    socle_size: int
    multipermutation_level: Optional[int] = None
    two_sided: bool

    @property
    def signature(self) -> Optional[Signature]:
        left, right = self.left_vanishes_at is not None, self.right_vanishes_at is not None
        if left and not right:
            return Signature.LEFT_ONLY
        if right and not left:
            return Signature.RIGHT_ONLY
        return None


class CatalogEntry(BaseModel):
    path: str  # relative to the catalog directory
    fingerprint: str
    invariants: InvariantRecord
    brace: Optional[FiniteBrace] = Field(None, exclude=True)


class PeriodicDecomposition(BaseModel):
    prefix: str
    period: str
    repetitions: int  # full copies of the period after the prefix
    tail: str  # partial copy of the period closing the word
    within_bound: bool  # len(prefix) < 2 * n!

    def reconstruct(self) -> str:
        return self.prefix + self.period * self.repetitions + self.tail


class FactorMembershipResult(BaseModel):
    exponents: Tuple[int, int, int]
    hypothesis: bool  # r in P(M^(n1+n2+n3))
    factors_in_span: List[bool]

    @property
    def holds(self) -> bool:
        return (not self.hypothesis) or all(self.factors_in_span)
