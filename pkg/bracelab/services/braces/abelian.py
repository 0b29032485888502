"""
Finite abelian groups given by an addition table.

- Standard groups Z/m_1 x ... x Z/m_k (elements are product tuples, index 0 is zero).
- Elementary divisor types, additive orders and multiples, primary components.
- Isomorphisms from a standard group onto any abelian table with the same type,
  enumerated by backtracking over generator images.
"""

import logging
from functools import lru_cache
from itertools import product
from math import prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from sympy import factorint
from sympy.utilities.iterables import partitions

from ...models.structures import Table

logger = logging.getLogger(__name__)

Moduli = Tuple[int, ...]


@lru_cache(maxsize=None)
def standard_group(moduli: Moduli) -> Tuple[Tuple[Tuple[int, ...], ...], Table]:
    """Elements and addition table of Z/m_1 x ... x Z/m_k in itertools.product order."""
    elements = tuple(product(*(range(m) for m in moduli)))
    index = {x: i for i, x in enumerate(elements)}
    table = tuple(
        tuple(index[tuple((xi + yi) % m for xi, yi, m in zip(x, y, moduli))] for y in elements)
        for x in elements
    )
    return elements, table


def abelian_types(order: int) -> List[Moduli]:
    """Elementary divisor types of all abelian groups of the given order, sorted."""
    per_prime = []
    for p, e in sorted(factorint(order).items()):
        choices = []
        for part in partitions(e):
            choices.append(tuple(sorted(p ** k for k, mult in part.items() for _ in range(mult))))
        per_prime.append(sorted(choices))
    return sorted(tuple(sorted(sum(combo, ()))) for combo in product(*per_prime))


def multiples_table(table: Table, up_to: int) -> List[Tuple[int, ...]]:
    """mult[k][x] = k·x for k in 0..up_to."""
    n = len(table)
    mult = [tuple(0 for _ in range(n))]
    for _ in range(up_to):
        prev = mult[-1]
        mult.append(tuple(table[prev[x]][x] for x in range(n)))
    return mult


def additive_orders(table: Table) -> Tuple[int, ...]:
    n = len(table)
    orders = []
    for x in range(n):
        k, y = 1, x
        while y != 0:
            y = table[y][x]
            k += 1
        orders.append(k)
    return tuple(orders)


def type_of(table: Table) -> Moduli:
    """Elementary divisors of the abelian group with this addition table."""
    n = len(table)
    if n == 1:
        return ()
    mult = multiples_table(table, n)
    divisors = []
    for p, e in sorted(factorint(n).items()):
        # ranks[k] = number of cyclic factors of order >= p^k
        sizes = [sum(1 for x in range(n) if mult[p ** k][x] == 0) for k in range(e + 1)]
        ranks = [0]
        for k in range(1, e + 1):
            ratio, r = sizes[k] // sizes[k - 1], 0
            while ratio > 1:
                ratio //= p
                r += 1
            ranks.append(r)
        ranks.append(0)
        for k in range(1, e + 1):
            divisors += [p ** k] * (ranks[k] - ranks[k + 1])
    return tuple(sorted(divisors))


def primary_parts(table: Table) -> Dict[int, Tuple[int, ...]]:
    """For each prime p dividing the order, the sorted members of the p-primary part."""
    n = len(table)
    orders = additive_orders(table)
    parts = {}
    for p in sorted(factorint(n)):
        parts[p] = tuple(x for x in range(n) if _is_power_of(orders[x], p))
    return parts


def _is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def isomorphisms_from_standard(
    moduli: Moduli,
    table: Table,
    candidates: Optional[Sequence[Sequence[int]]] = None,
) -> Iterator[Tuple[int, ...]]:
    """Yield every isomorphism phi: standard_group(moduli) -> (table), as phi[std_index].

    Generator images are tried in increasing index order, so the yield order is
    deterministic. `candidates[i]` optionally restricts the image of the i-th
    generator (it is intersected with the elements of the right order).
    """
    n = len(table)
    elements, _ = standard_group(moduli)
    if prod(moduli) != n:
        return
    if n == 1:
        yield (0,)
        return
    orders = additive_orders(table)
    mult = multiples_table(table, max(moduli))
    pools = []
    for i, m in enumerate(moduli):
        allowed = range(n) if candidates is None else candidates[i]
        pools.append([g for g in allowed if orders[g] == m])

    images: List[int] = []

    def extend(span: List[int], depth: int) -> Iterator[Tuple[int, ...]]:
        if depth == len(moduli):
            phi = []
            for x in elements:
                v = 0
                for xi, g in zip(x, images):
                    v = table[v][mult[xi][g]]
                phi.append(v)
            yield tuple(phi)
            return
        m = moduli[depth]
        for g in pools[depth]:
            new_span = {table[s][mult[t][g]] for s in span for t in range(m)}
            if len(new_span) != len(span) * m:
                continue
            images.append(g)
            yield from extend(sorted(new_span), depth + 1)
            images.pop()

    yield from extend([0], 0)


def automorphisms(moduli: Moduli) -> List[Tuple[int, ...]]:
    """All automorphisms of the standard group, as permutations of element indices."""
    _, table = standard_group(moduli)
    auts = list(isomorphisms_from_standard(moduli, table))
    logger.debug(f"Aut{moduli} has {len(auts)} elements")
    return auts
