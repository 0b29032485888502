"""
Brace axiom validation.

- Checks the additive group, the distributive law of the requested side,
  zero products, and the circle group, all vectorized with numpy.
- Collects every violated axiom (first witness in lexicographic order plus a
  witness count) instead of stopping at the first one.
- validate() returns a certified FiniteBrace or raises BraceValidationError
  carrying the full report.
"""

import logging
from typing import List, Sequence, Tuple

import numpy as np

from ...core.exceptions import BraceValidationError
from ...models.schemas import AxiomViolation, ValidationReport, ViolationKind
from ...models.structures import Chirality, FiniteBrace, Table, check_square

logger = logging.getLogger(__name__)


def as_table(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(x) for x in row) for row in table)


def _violation(kind: ViolationKind, reason: str, failures: np.ndarray) -> List[AxiomViolation]:
    """One AxiomViolation for a boolean failure mask, or nothing if the mask is clear."""
    hits = np.argwhere(failures)
    if len(hits) == 0:
        return []
    witness = tuple(int(i) for i in hits[0])
    return [AxiomViolation(kind=kind, reason=reason, witness=witness, count=len(hits))]


def additive_group_violations(A: np.ndarray) -> List[AxiomViolation]:
    n = A.shape[0]
    ar = np.arange(n)
    kind = ViolationKind.NOT_ABELIAN_GROUP
    found = []
    found += _violation(kind, "0 is not the additive identity", (A[0] != ar) | (A[:, 0] != ar))
    found += _violation(kind, "addition not commutative", A != A.T)
    found += _violation(kind, "addition not associative", A[A] != A[ar[:, None, None], A[None, :, :]])
    found += _violation(kind, "no additive inverse", ~(A == 0).any(axis=1))
    return found


def left_distributive_failures(A: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Mask over (a, b, c) where a(b + c) != ab + ac."""
    return M[:, A] != A[M[:, :, None], M[:, None, :]]


def right_distributive_failures(A: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Mask over (a, b, c) where (a + b)c != ac + bc."""
    ar = np.arange(A.shape[0])
    return M[A[:, :, None], ar[None, None, :]] != A[M[:, None, :], M[None, :, :]]


def circle_group_violations(A: np.ndarray, M: np.ndarray) -> List[AxiomViolation]:
    n = A.shape[0]
    ar = np.arange(n)
    C = A[A[M, ar[:, None]], ar[None, :]]  # a∘b = ab + a + b
    kind = ViolationKind.CIRCLE_NOT_GROUP
    found = []
    found += _violation(kind, "0 is not the circle identity", (C[0] != ar) | (C[:, 0] != ar))
    found += _violation(kind, "circle not associative", C[C] != C[ar[:, None, None], C[None, :, :]])
    found += _violation(kind, "no circle inverse", ~(C == 0).any(axis=1) | ~(C == 0).any(axis=0))
    return found


def validation_report(
    order: int,
    add_table: Sequence[Sequence[int]],
    mul_table: Sequence[Sequence[int]],
    chirality: Chirality = Chirality.LEFT,
) -> ValidationReport:
    """Check every brace axiom. Raises TableShapeError on malformed tables."""
    add_table, mul_table = as_table(add_table), as_table(mul_table)
    check_square(add_table, order, "add_table")
    check_square(mul_table, order, "mul_table")

    A = np.array(add_table, dtype=np.int64).reshape(order, order)
    M = np.array(mul_table, dtype=np.int64).reshape(order, order)

    violations = additive_group_violations(A)
    if chirality is Chirality.LEFT:
        violations += _violation(ViolationKind.NOT_DISTRIBUTIVE, "a(b+c) != ab+ac", left_distributive_failures(A, M))
    else:
        violations += _violation(ViolationKind.NOT_DISTRIBUTIVE, "(a+b)c != ac+bc", right_distributive_failures(A, M))
    violations += _violation(ViolationKind.ZERO_PRODUCT, "a0 != 0", M[:, 0] != 0)
    violations += _violation(ViolationKind.ZERO_PRODUCT, "0a != 0", M[0, :] != 0)
    violations += circle_group_violations(A, M)

    report = ValidationReport(order=order, chirality=chirality.value, violations=violations)
    if not report.ok:
        logger.debug(f"Order {order} tables rejected: {report.lines()}")
    return report


def validate(
    order: int,
    add_table: Sequence[Sequence[int]],
    mul_table: Sequence[Sequence[int]],
    chirality: Chirality = Chirality.LEFT,
) -> FiniteBrace:
    report = validation_report(order, add_table, mul_table, chirality)
    if not report.ok:
        raise BraceValidationError(report)
    return FiniteBrace(
        order=order,
        add_table=as_table(add_table),
        mul_table=as_table(mul_table),
        chirality=chirality,
    )


def distributive_witness(brace: FiniteBrace, side: Chirality) -> Tuple[bool, Tuple[int, ...]]:
    """Does the distributive law of `side` hold? Returns (holds, first failing triple)."""
    A = np.array(brace.add_table, dtype=np.int64)
    M = np.array(brace.mul_table, dtype=np.int64)
    mask = left_distributive_failures(A, M) if side is Chirality.LEFT else right_distributive_failures(A, M)
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return True, ()
    return False, tuple(int(i) for i in hits[0])
