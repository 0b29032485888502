"""
Brace operations.

- circle / adjoint_inverse / lambda_map: the adjoint group and the λ-action.
- opposite, direct_sum, restrict, quotient: constructions on braces.
- ideal_test: certify a subset as additive subgroup or ideal.
- trivial_brace, brace_from_ring: ready-made examples.
"""

import logging
from itertools import product
from math import prod
from typing import Dict, Iterable, List, Sequence, Tuple

from ...core.exceptions import (
    BraceValidationError,
    InputError,
    MixedChirality,
    NotAnIdeal,
    WrongChirality,
)
from ...models.schemas import ViolationKind
from ...models.structures import BraceSubset, Certification, Chirality, FiniteBrace
from .abelian import additive_orders, primary_parts, standard_group, type_of
from .validation import distributive_witness, validate, validation_report

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


def circle(brace: FiniteBrace, a: int, b: int) -> int:
    return brace.circle(a, b)


def adjoint_inverse(brace: FiniteBrace, a: int) -> int:
    return brace.inverse(a)


def require_left(brace: FiniteBrace) -> None:
    if not brace.is_left:
        raise WrongChirality(Chirality.LEFT.value, brace.chirality.value)


def lambda_map(brace: FiniteBrace, a: int) -> Permutation:
    """λ_a(b) = ab + b as a permutation of the elements."""
    require_left(brace)
    add, mul = brace.add_table, brace.mul_table
    return tuple(add[mul[a][b]][b] for b in brace.elements)


def lambda_table(brace: FiniteBrace) -> Tuple[Permutation, ...]:
    return tuple(lambda_map(brace, a) for a in brace.elements)


def is_two_sided(brace: FiniteBrace) -> bool:
    holds, _ = distributive_witness(brace, brace.chirality.flipped())
    return holds


def opposite(brace: FiniteBrace) -> FiniteBrace:
    mul = brace.mul_table
    transposed = tuple(tuple(mul[b][a] for b in brace.elements) for a in brace.elements)
    return FiniteBrace(
        order=brace.order,
        add_table=brace.add_table,
        mul_table=transposed,
        chirality=brace.chirality.flipped(),
    )


def direct_sum(braces: Sequence[FiniteBrace]) -> FiniteBrace:
    """Componentwise sum; element index follows itertools.product order of the summands."""
    if not braces:
        raise InputError("direct_sum needs at least one summand")
    chiralities = {b.chirality for b in braces}
    if len(chiralities) > 1:
        raise MixedChirality(f"summands mix chiralities: {sorted(c.value for c in chiralities)}")

    elements = list(product(*(b.elements for b in braces)))
    index = {x: i for i, x in enumerate(elements)}

    def table(pick) -> Tuple[Tuple[int, ...], ...]:
        return tuple(
            tuple(index[tuple(pick(s)[xi][yi] for s, xi, yi in zip(braces, x, y))] for y in elements)
            for x in elements
        )

    return FiniteBrace(
        order=prod(b.order for b in braces),
        add_table=table(lambda s: s.add_table),
        mul_table=table(lambda s: s.mul_table),
        chirality=braces[0].chirality,
    )


def subset(brace: FiniteBrace, members: Iterable[int], certification: Certification = Certification.RAW) -> BraceSubset:
    return BraceSubset(parent=brace, members=tuple(sorted(set(members))), certification=certification)


def whole(brace: FiniteBrace) -> BraceSubset:
    return BraceSubset(parent=brace, members=tuple(brace.elements), certification=Certification.IDEAL)


def zero(brace: FiniteBrace) -> BraceSubset:
    return BraceSubset(parent=brace, members=(0,), certification=Certification.IDEAL)


def is_additive_subgroup(brace: FiniteBrace, members: Sequence[int]) -> bool:
    s = set(members)
    add = brace.add_table
    return 0 in s and all(add[x][y] in s for x in s for y in s)


def ideal_failure(brace: FiniteBrace, members: Sequence[int]) -> str:
    """Empty string if `members` is an ideal, otherwise the first failed condition."""
    s = set(members)
    if not is_additive_subgroup(brace, members):
        return "not an additive subgroup"
    mul = brace.mul_table
    for i in s:
        for a in brace.elements:
            if mul[a][i] not in s:
                return f"{a}·{i} = {mul[a][i]} leaves the subset"
            if mul[i][a] not in s:
                return f"{i}·{a} = {mul[i][a]} leaves the subset"
            conj = brace.circle(brace.circle(a, i), brace.inverse(a))
            if conj not in s:
                return f"{a}∘{i}∘{a}⁻¹ = {conj} leaves the subset (not normal)"
    return ""


def ideal_test(brace: FiniteBrace, members: Iterable[int]) -> BraceSubset:
    """Certify `members` at the highest level it reaches."""
    members = tuple(sorted(set(members)))
    if 0 not in members:
        raise InputError("a brace subset must contain 0")
    if not is_additive_subgroup(brace, members):
        level = Certification.RAW
    elif ideal_failure(brace, members):
        level = Certification.ADDITIVE_SUBGROUP
    else:
        level = Certification.IDEAL
    return BraceSubset(parent=brace, members=members, certification=level)


def restrict(brace: FiniteBrace, members: Sequence[int]) -> Tuple[FiniteBrace, Permutation]:
    """The brace on a closed subset, relabeled 0..k-1 in sorted order, plus the embedding."""
    embedding = tuple(sorted(set(members)))
    index = {x: i for i, x in enumerate(embedding)}
    add, mul = brace.add_table, brace.mul_table
    for x in embedding:
        for y in embedding:
            if add[x][y] not in index or mul[x][y] not in index:
                raise InputError(f"subset is not closed: {x}, {y} leave it")
    sub = validate(
        len(embedding),
        [[index[add[x][y]] for y in embedding] for x in embedding],
        [[index[mul[x][y]] for y in embedding] for x in embedding],
        brace.chirality,
    )
    return sub, embedding


def quotient(brace: FiniteBrace, ideal: BraceSubset) -> Tuple[FiniteBrace, Permutation]:
    """A/I with cosets labeled by their smallest element; returns (quotient, projection)."""
    if ideal.parent is not brace and ideal.parent != brace:
        raise NotAnIdeal("subset belongs to another brace")
    if ideal.certification is not Certification.IDEAL:
        reason = ideal_failure(brace, ideal.members)
        if reason:
            raise NotAnIdeal(reason)

    add = brace.add_table
    representatives: List[int] = []
    projection = [-1] * brace.order
    for x in brace.elements:
        if projection[x] >= 0:
            continue
        label = len(representatives)
        representatives.append(x)
        for i in ideal.members:
            projection[add[x][i]] = label

    mul = brace.mul_table
    q = validate(
        len(representatives),
        [[projection[add[x][y]] for y in representatives] for x in representatives],
        [[projection[mul[x][y]] for y in representatives] for x in representatives],
        brace.chirality,
    )
    logger.debug(f"Quotient of order-{brace.order} brace by |I|={ideal.size} has order {q.order}")
    return q, tuple(projection)


def additive_order(brace: FiniteBrace, a: int) -> int:
    return additive_orders(brace.add_table)[a]


def additive_multiple(brace: FiniteBrace, k: int, a: int) -> int:
    """k·a, the sum of k copies of a (k >= 0)."""
    v = 0
    for _ in range(k):
        v = brace.add_table[v][a]
    return v


def additive_type(brace: FiniteBrace) -> Tuple[int, ...]:
    return type_of(brace.add_table)


def primary_components(brace: FiniteBrace) -> Dict[int, BraceSubset]:
    """Prime -> p-primary part of (A,+) as an additive subgroup."""
    return {
        p: BraceSubset(parent=brace, members=members, certification=Certification.ADDITIVE_SUBGROUP)
        for p, members in primary_parts(brace.add_table).items()
    }


def trivial_brace(moduli: Sequence[int] = (), chirality: Chirality = Chirality.LEFT) -> FiniteBrace:
    """Zero multiplication on Z/d_1 x ... x Z/d_k (the empty product is the one-element brace)."""
    elements, table = standard_group(tuple(moduli))
    n = len(elements)
    return FiniteBrace(
        order=n,
        add_table=table,
        mul_table=tuple(tuple(0 for _ in range(n)) for _ in range(n)),
        chirality=chirality,
    )


def brace_from_ring(add_table: Sequence[Sequence[int]], mul_table: Sequence[Sequence[int]]) -> FiniteBrace:
    """The two-sided (left-flagged) brace of a radical ring given by its tables."""
    order = len(add_table)
    report = validation_report(order, add_table, mul_table, Chirality.LEFT)
    right = validation_report(order, add_table, mul_table, Chirality.RIGHT)
    extra = [v for v in right.violations if v.kind is ViolationKind.NOT_DISTRIBUTIVE]
    if not report.ok or extra:
        report.violations.extend(extra)
        raise BraceValidationError(report)
    return validate(order, add_table, mul_table, Chirality.LEFT)
