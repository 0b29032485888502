"""
Radical chains of a left brace.

- additive_span / product_span: additive subgroups generated by elements and products.
- chain: A^n (left powers), A^(n) (right powers), A^[n] (bracket chain).
- socle: {x : x·a = 0 for all a}.
- Right braces go through chain_mirrored, which works on the opposite brace.
"""

import logging
from typing import Dict, Iterable, List, Optional

from ...core.exceptions import DifferentParents
from ...models.structures import BraceSubset, Certification, FiniteBrace, SeriesChain, SeriesKind
from ..braces.operations import ideal_test, opposite, require_left, whole

logger = logging.getLogger(__name__)


def additive_span(brace: FiniteBrace, generators: Iterable[int]) -> BraceSubset:
    """Breadth-first closure of {0} under adding generators."""
    gens = sorted(set(generators) - {0})
    add = brace.add_table
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = add[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return BraceSubset(parent=brace, members=tuple(sorted(seen)), certification=Certification.ADDITIVE_SUBGROUP)


def _same_parent(c: BraceSubset, d: BraceSubset) -> None:
    if c.parent is not d.parent and c.parent != d.parent:
        raise DifferentParents("subsets belong to different braces")


def product_span(c: BraceSubset, d: BraceSubset) -> BraceSubset:
    """C·D: the additive subgroup generated by all c·d."""
    _same_parent(c, d)
    mul = c.parent.mul_table
    return additive_span(c.parent, {mul[x][y] for x in c.members for y in d.members})


def subgroup_sum(brace: FiniteBrace, parts: Iterable[BraceSubset]) -> BraceSubset:
    members = set()
    for p in parts:
        members |= p.member_set
    return additive_span(brace, members)


def _certified(subsets: List[BraceSubset]) -> List[BraceSubset]:
    return [ideal_test(s.parent, s.members) for s in subsets]


def _finish(kind: SeriesKind, terms: List[BraceSubset], certify: bool) -> SeriesChain:
    if certify:
        terms = _certified(terms)
    vanishes_at = len(terms) if terms[-1].is_zero else None
    return SeriesChain(kind=kind, terms=tuple(terms), vanishes_at=vanishes_at)


def _one_sided(brace: FiniteBrace, kind: SeriesKind) -> List[BraceSubset]:
    a = whole(brace)
    terms = [a]
    while not terms[-1].is_zero:
        prev = terms[-1]
        nxt = product_span(a, prev) if kind is SeriesKind.LEFT_POWERS else product_span(prev, a)
        if nxt.members == prev.members:
            break
        terms.append(nxt)
    return terms


def _bracket(brace: FiniteBrace) -> List[BraceSubset]:
    """A^[1] = A, A^[n+1] = sum over i of A^[i]·A^[n+1-i].

    Stops at {0}, or once a run of equal terms starting at index k reaches
    index 2k: past that point every convolution summand is already one of the
    summands of the stable term.
    """
    terms = [whole(brace)]  # terms[i] is A^[i+1]
    products: Dict[tuple, BraceSubset] = {}
    run_start = 1
    while not terms[-1].is_zero:
        n = len(terms)  # computing A^[n+1]
        parts = []
        for i in range(1, n + 1):
            key = (i, n + 1 - i)
            if key not in products:
                products[key] = product_span(terms[i - 1], terms[n - i])
            parts.append(products[key])
        nxt = subgroup_sum(brace, parts)
        if nxt.members == terms[-1].members:
            if n + 1 >= 2 * run_start:
                break
        else:
            run_start = n + 1
        terms.append(nxt)
    # drop the confirming copies of the stable term
    while len(terms) > 1 and terms[-1].members == terms[-2].members:
        terms.pop()
    return terms


def chain(brace: FiniteBrace, kind: SeriesKind, certify: bool = True) -> SeriesChain:
    """One radical chain of a left brace, indexed from 1."""
    require_left(brace)
    terms = _bracket(brace) if kind is SeriesKind.BRACKET else _one_sided(brace, kind)
    result = _finish(kind, terms, certify)
    logger.debug(f"{kind.value} chain sizes {[t.size for t in result.terms]}, vanishes at {result.vanishes_at}")
    return result


def chain_mirrored(brace: FiniteBrace, kind: SeriesKind, certify: bool = True) -> SeriesChain:
    """The chain of a brace of either chirality.

    For a right brace, A^n of the brace is A^(n) of its opposite and vice
    versa; the terms are re-attached to the original brace.
    """
    if brace.is_left:
        return chain(brace, kind, certify)
    mirrored = chain(opposite(brace), kind.mirrored(), certify=False)
    terms = [BraceSubset(parent=brace, members=t.members) for t in mirrored.terms]
    return _finish(kind, terms, certify)


def socle(brace: FiniteBrace) -> BraceSubset:
    require_left(brace)
    members = [x for x in brace.elements if all(v == 0 for v in brace.mul_table[x])]
    return ideal_test(brace, members)


def vanishing_index(brace: FiniteBrace, kind: SeriesKind) -> Optional[int]:
    return chain_mirrored(brace, kind, certify=False).vanishes_at
