"""
Primary decomposition of braces with nilpotent adjoint group.

A finite left brace whose adjoint group is nilpotent is the direct sum of the
Sylow subgroups of (A, +); each is an ideal and a brace of prime-power order.
The same hypothesis bounds the left powers: A^n = 0 for n = max(alpha_p) + 1.
"""

import logging
from typing import List, Tuple

from sympy import factorint

from ...core.exceptions import AdjointNotNilpotent, VerificationFailure
from ...models.structures import Certification, FiniteBrace, SeriesKind
from ..braces.operations import ideal_test, primary_components, require_left, restrict
from ..series.chains import chain
from .analysis import adjoint_group, is_nilpotent

logger = logging.getLogger(__name__)


def _require_nilpotent_adjoint(brace: FiniteBrace) -> None:
    nilpotent, _ = is_nilpotent(adjoint_group(brace))
    if not nilpotent:
        raise AdjointNotNilpotent(f"adjoint group of the order-{brace.order} brace is not nilpotent")


def p_decomposition(brace: FiniteBrace) -> List[Tuple[int, FiniteBrace]]:
    """(p, Sylow p-part as a brace) for each prime p dividing the order, ascending in p.

    The one-element brace has no prime divisors and decomposes into the empty list.
    """
    require_left(brace)
    _require_nilpotent_adjoint(brace)
    parts = []
    for p, component in primary_components(brace).items():
        certified = ideal_test(brace, component.members)
        if certified.certification is not Certification.IDEAL:
            raise VerificationFailure(f"{p}-primary part is not an ideal")
        sub, _ = restrict(brace, certified.members)
        parts.append((p, sub))
    logger.info(f"Order {brace.order} brace decomposed into parts of orders {[b.order for _, b in parts]}")
    return parts


def nilpotency_bound_check(brace: FiniteBrace) -> bool:
    """A^n vanishes at index <= max(alpha_p) + 1 for |A| = prod p^alpha_p."""
    require_left(brace)
    _require_nilpotent_adjoint(brace)
    bound = max(factorint(brace.order).values(), default=0) + 1
    left = chain(brace, SeriesKind.LEFT_POWERS, certify=False)
    return left.vanishes and left.vanishes_at <= bound
