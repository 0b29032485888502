"""
Finite group analysis on Cayley tables.

- adjoint_group: the group (A, ∘) of a brace.
- subgroup_closure, commutator, element_order, center.
- lower_central_series / is_nilpotent (the nilpotency contract) and
  is_nilpotent_by_sylow (independent cross-check).
- direct_product and find_group_isomorphism for small groups.
"""

import logging
from itertools import product
from math import prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import factorint

from ...models.schemas import CheckResult
from ...models.structures import FiniteBrace, FiniteGroup

logger = logging.getLogger(__name__)

Subgroup = Tuple[int, ...]


def adjoint_group(brace: FiniteBrace) -> FiniteGroup:
    return FiniteGroup(order=brace.order, table=brace.circle_table)


def check_group(group: FiniteGroup) -> CheckResult:
    t = group.table
    for g in group.elements:
        if t[0][g] != g or t[g][0] != g:
            return CheckResult(name="group", passed=False, counterexample=(g,), detail="0 is not the identity")
        if group.inverse[g] < 0 or t[group.inverse[g]][g] != 0:
            return CheckResult(name="group", passed=False, counterexample=(g,), detail="no inverse")
    for g, h, k in product(group.elements, repeat=3):
        if t[t[g][h]][k] != t[g][t[h][k]]:
            return CheckResult(name="group", passed=False, counterexample=(g, h, k), detail="not associative")
    return CheckResult(name="group", passed=True)


def subgroup_closure(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Breadth-first closure of {0} under right multiplication by the generators."""
    gens = sorted(set(generators) - {0})
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.table[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def commutator(group: FiniteGroup, g: int, h: int) -> int:
    """[g, h] = g h g^-1 h^-1."""
    t = group.table
    return t[t[t[g][h]][group.inv(g)]][group.inv(h)]


def element_order(group: FiniteGroup, g: int) -> int:
    k, x = 1, g
    while x != 0:
        x = group.table[x][g]
        k += 1
    return k


def center(group: FiniteGroup) -> Subgroup:
    t = group.table
    return tuple(z for z in group.elements if all(t[z][g] == t[g][z] for g in group.elements))


def lower_central_series(group: FiniteGroup) -> List[Subgroup]:
    """gamma_1 = G, gamma_{k+1} = <[g, x] : g in G, x in gamma_k>, until {0} or stable."""
    series = [tuple(group.elements)]
    while len(series[-1]) > 1:
        nxt = subgroup_closure(group, {commutator(group, g, x) for g in group.elements for x in series[-1]})
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def is_nilpotent(group: FiniteGroup) -> Tuple[bool, Optional[int]]:
    """(nilpotent, class); class is the number of strict descents, None if not nilpotent."""
    series = lower_central_series(group)
    if len(series[-1]) != 1:
        return False, None
    return True, len(series) - 1


def is_nilpotent_by_sylow(group: FiniteGroup) -> bool:
    """Nilpotent iff for every prime p the p-elements form a subgroup of full p-power order."""
    orders = [element_order(group, g) for g in group.elements]
    for p, alpha in factorint(group.order).items():
        p_elements = [g for g in group.elements if _is_power_of(orders[g], p)]
        if len(p_elements) != p ** alpha:
            return False
        if subgroup_closure(group, p_elements) != tuple(p_elements):
            return False
    return True


def _is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def direct_product(groups: Sequence[FiniteGroup]) -> FiniteGroup:
    elements = list(product(*(g.elements for g in groups)))
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(
        tuple(index[tuple(g.table[xi][yi] for g, xi, yi in zip(groups, x, y))] for y in elements)
        for x in elements
    )
    return FiniteGroup(order=prod(g.order for g in groups), table=table)


def _generating_set(group: FiniteGroup) -> List[int]:
    """Greedy generators: repeatedly add the smallest element outside the current span."""
    gens: List[int] = []
    span: Subgroup = (0,)
    while len(span) < group.order:
        g = next(x for x in group.elements if x not in span)
        gens.append(g)
        span = subgroup_closure(group, gens)
    return gens


def find_group_isomorphism(g1: FiniteGroup, g2: FiniteGroup) -> Optional[Tuple[int, ...]]:
    """A bijection f: g1 -> g2 with f(xy) = f(x)f(y), or None.

    Generators of g1 are mapped to elements of g2 of the same order; each
    complete choice is extended along words in the generators and rejected
    on the first inconsistency.
    """
    if g1.order != g2.order:
        return None
    o1 = [element_order(g1, g) for g in g1.elements]
    o2 = [element_order(g2, g) for g in g2.elements]
    if sorted(o1) != sorted(o2):
        return None
    gens = _generating_set(g1)
    pools = [[y for y in g2.elements if o2[y] == o1[g]] for g in gens]

    for images in product(*pools):
        f = _extend(g1, g2, gens, images)
        if f is not None:
            return f
    return None


def _extend(g1: FiniteGroup, g2: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> Optional[Tuple[int, ...]]:
    f: Dict[int, int] = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, img in zip(gens, images):
                y, fy = g1.table[x][g], g2.table[f[x]][img]
                if y in f:
                    if f[y] != fy:
                        return None
                else:
                    f[y] = fy
                    nxt.append(y)
        frontier = nxt
    if len(set(f.values())) != g1.order:
        return None
    t1, t2 = g1.table, g2.table
    mapping = tuple(f[x] for x in g1.elements)
    if any(mapping[t1[x][y]] != t2[mapping[x]][mapping[y]] for x in g1.elements for y in g1.elements):
        return None
    return mapping
