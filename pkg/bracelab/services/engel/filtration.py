"""
The T(j) filtration and the S-grading.

- T(j): span of monomials with at most j letter changes (factors ab or ba).
  T(i)·T(j) is contained in T(i+j+1).
- S = span{ab, ab^2}. s_grading splits a polynomial into pieces lying in F·S^i
  and F·S^i·a, plus whatever is of neither shape.
"""

import logging
import re
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from ...core.exceptions import InputError, VerificationFailure
from .free_poly import FreePoly

logger = logging.getLogger(__name__)

_S_SHAPE = re.compile(r"^((?:abb?)*)(a?)$")


def alternations(monomial: str) -> int:
    return sum(1 for x, y in zip(monomial, monomial[1:]) if x != y)


def t_membership(poly: FreePoly, j: int) -> Tuple[bool, Optional[str]]:
    """(poly in T(j), a monomial with the most alternations if not).

    The polynomial must be constant-free.
    """
    if poly.constant:
        raise InputError("T(j) membership is defined for constant-free polynomials")
    worst = None
    for m in poly.monomials():
        if worst is None or alternations(m) > alternations(worst):
            worst = m
    if worst is None or alternations(worst) <= j:
        return True, None
    return False, worst


def t_product_check(p: FreePoly, q: FreePoly, i: int, j: int) -> bool:
    """For p in T(i) and q in T(j), is pq in T(i+j+1)? Inputs outside T(i), T(j) are rejected."""
    if not t_membership(p, i)[0] or not t_membership(q, j)[0]:
        raise InputError(f"factors are not in T({i}) and T({j})")
    return t_membership(p * q, i + j + 1)[0]


class SGrading(BaseModel):
    """components[i] lies in F·S^i, trailing_a[i] in F·S^i·a; remainder has neither shape."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    components: Dict[int, FreePoly]
    trailing_a: Dict[int, FreePoly]
    remainder: FreePoly

    def is_pure(self) -> bool:
        return self.remainder.is_zero and len(self.components) + len(self.trailing_a) == 1

    def pure_shape(self) -> Optional[Tuple[int, bool]]:
        """(i, trailing a) when the polynomial is a single homogeneous piece."""
        if not self.is_pure():
            return None
        if self.components:
            return next(iter(self.components)), False
        return next(iter(self.trailing_a)), True


def s_degree(monomial: str) -> Optional[Tuple[int, bool]]:
    """(i, trailing a) if the monomial is a product of i factors ab / ab^2, possibly followed by a."""
    match = _S_SHAPE.match(monomial)
    if match is None:
        return None
    return match.group(1).count("a"), bool(match.group(2))


def s_grading(poly: FreePoly) -> SGrading:
    field = poly.field
    pieces: Dict[Tuple[int, bool], Dict[str, object]] = {}
    rest: Dict[str, object] = {}
    for m, c in poly.items():
        shape = s_degree(m)
        if shape is None:
            rest[m] = c
        else:
            pieces.setdefault(shape, {})[m] = c

    grading = SGrading(
        components={i: FreePoly(t, field) for (i, tail), t in sorted(pieces.items()) if not tail},
        trailing_a={i: FreePoly(t, field) for (i, tail), t in sorted(pieces.items()) if tail},
        remainder=FreePoly(rest, field),
    )
    total = grading.remainder
    for part in list(grading.components.values()) + list(grading.trailing_a.values()):
        total = total + part
    if total != poly:
        raise VerificationFailure("S-graded pieces do not sum back to the input")
    return grading
