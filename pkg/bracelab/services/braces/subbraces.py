"""Subbraces generated by a set of elements."""

import logging
from typing import Iterable, Tuple

from ...core.exceptions import NotBracketNilpotent
from ...models.structures import FiniteBrace, SeriesKind
from ..series.chains import additive_span, chain
from .operations import Permutation, require_left, restrict

logger = logging.getLogger(__name__)


def generate_subbrace(brace: FiniteBrace, generators: Iterable[int]) -> Tuple[FiniteBrace, Permutation]:
    """The additive span of all products of elements of `generators`, as a brace.

    Only defined when A^[s] = 0 for some s; then the span is closed under the
    circle operation and inherits the brace structure.
    """
    require_left(brace)
    bracket = chain(brace, SeriesKind.BRACKET, certify=False)
    if not bracket.vanishes:
        raise NotBracketNilpotent(f"A^[n] stabilizes at size {bracket.terms[-1].size}; closure is not guaranteed")

    mul = brace.mul_table
    current = additive_span(brace, generators).member_set
    while True:
        products = {mul[x][y] for x in current for y in current}
        grown = additive_span(brace, current | products).member_set
        if grown == current:
            break
        current = grown
    sub, embedding = restrict(brace, sorted(current))
    logger.debug(f"Generated subbrace of order {sub.order} inside order {brace.order}")
    return sub, embedding
