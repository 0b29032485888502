"""
The braided-group operator of a left brace and the two-sided identity.

sigma(a, b) = (^a b, a^b) with ^a b = λ_a(b) and a^b = (^a b)^-1 ∘ a ∘ b, so that
a ∘ b = ^a b ∘ a^b. Group words are read in (A, ∘): products
are circle products and inverses are adjoint inverses. The identity

    c ∘ ^((a∘b∘c)^-1) c  =  (^(b^-1) c) ∘ ^(((a^b) ∘ (^(b^-1) c))^-1) c

holds for all triples exactly when the brace is two-sided.
"""

import logging
from itertools import product
from typing import Tuple

from ...models.schemas import CheckResult
from ...models.structures import FiniteBrace, SetSolution
from ..braces.operations import lambda_table, require_left

logger = logging.getLogger(__name__)


class BraidingOperator:
    """sigma(a, b) = (^a b, a^b) on a left brace."""

    def __init__(self, brace: FiniteBrace):
        require_left(brace)
        self.brace = brace
        self.lam = lambda_table(brace)

    def left_action(self, g: int, c: int) -> int:
        """^g c = λ_g(c)."""
        return self.lam[g][c]

    def right_action(self, a: int, b: int) -> int:
        """a^b = (^a b)^-1 ∘ a ∘ b."""
        circ = self.brace.circle
        return circ(circ(self.brace.inverse(self.lam[a][b]), a), b)

    def __call__(self, a: int, b: int) -> Tuple[int, int]:
        return self.left_action(a, b), self.right_action(a, b)

    def is_involutive(self) -> bool:
        return all(self(*self(a, b)) == (a, b) for a, b in product(self.brace.elements, repeat=2))

    def matches(self, sol: SetSolution) -> bool:
        """Pointwise agreement with a solution on the same set."""
        return sol.size == self.brace.order and all(
            self(a, b) == sol.apply(a, b) for a, b in product(self.brace.elements, repeat=2)
        )


def braiding_from_brace(brace: FiniteBrace) -> BraidingOperator:
    return BraidingOperator(brace)


def solution_from_braiding(op: BraidingOperator) -> SetSolution:
    """Read sigma and tau off the operator: r(a, b) = (^a b, a^b)."""
    n = op.brace.order
    sigma = tuple(tuple(op.left_action(a, b) for b in range(n)) for a in range(n))
    tau = tuple(tuple(op.right_action(a, b) for a in range(n)) for b in range(n))
    return SetSolution(size=n, sigma=sigma, tau=tau)


def check_two_sided_identity(brace: FiniteBrace) -> CheckResult:
    op = BraidingOperator(brace)
    circ, inv = brace.circle, brace.inverse
    for a, b, c in product(brace.elements, repeat=3):
        abc = circ(circ(a, b), c)
        lhs = circ(c, op.left_action(inv(abc), c))
        u = op.left_action(inv(b), c)
        rhs = circ(u, op.left_action(inv(circ(op.right_action(a, b), u)), c))
        if lhs != rhs:
            logger.debug(f"Two-sided identity fails at {(a, b, c)}")
            return CheckResult(name="two-sided-identity", passed=False, counterexample=(a, b, c))
    return CheckResult(name="two-sided-identity", passed=True)
