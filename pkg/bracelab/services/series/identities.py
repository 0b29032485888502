"""
Expansion identities for left braces.

- expansion_check: (a+b)c = ac + bc + sum_{i=0}^{2s} (-1)^{i+1} ((d_i d'_i)c - d_i(d'_i c))
  in a left brace with A^s = 0, where d_0 = a, d'_0 = b, d_{i+1} = d_i + d'_i, d'_{i+1} = d_i d'_i.
- torsion_check: m·a = m·b = 0 forces m·d_i = m·d'_i = 0.
- bracket_defect_check: (a+b)c - ac - bc lies in A^[i+j+k] for a in A^[i], b in A^[j], c in A^[k].
- coprime_products_vanish: ac = 0 when the additive orders of a and c are coprime.
"""

import logging
from math import gcd
from typing import List, Optional, Tuple

from ...core.exceptions import MembershipViolation, NotBracketNilpotent, NotLeftNilpotent
from ...models.schemas import CheckResult, ExpansionTrace
from ...models.structures import FiniteBrace, SeriesChain, SeriesKind
from ..braces.abelian import additive_orders
from ..braces.operations import additive_multiple, require_left
from .chains import chain

logger = logging.getLogger(__name__)


def _left_nilpotent_chain(brace: FiniteBrace) -> SeriesChain:
    left = chain(brace, SeriesKind.LEFT_POWERS, certify=False)
    if not left.vanishes:
        raise NotLeftNilpotent(f"A^n never vanishes (stable at size {left.terms[-1].size})")
    return left


def _bracket_nilpotent_chain(brace: FiniteBrace) -> SeriesChain:
    bracket = chain(brace, SeriesKind.BRACKET, certify=False)
    if not bracket.vanishes:
        raise NotBracketNilpotent(f"A^[n] never vanishes (stable at size {bracket.terms[-1].size})")
    return bracket


def d_sequences(brace: FiniteBrace, a: int, b: int, steps: int) -> Tuple[List[int], List[int]]:
    add, mul = brace.add_table, brace.mul_table
    d, dp = [a], [b]
    for _ in range(steps):
        d.append(add[d[-1]][dp[-1]])
        dp.append(mul[d[-2]][dp[-1]])
    return d, dp


def expansion_check(
    brace: FiniteBrace,
    a: int,
    b: int,
    c: int,
    left: Optional[SeriesChain] = None,
) -> ExpansionTrace:
    """Build the d-sequences for (a, b) and test the expansion of (a+b)c.

    `left` may carry a precomputed left-powers chain when many triples of the
    same brace are checked.
    """
    require_left(brace)
    left = left or _left_nilpotent_chain(brace)
    if not left.vanishes:
        raise NotLeftNilpotent("A^n never vanishes")
    s = left.vanishes_at
    add, mul = brace.add_table, brace.mul_table

    d, dp = d_sequences(brace, a, b, 2 * s)
    memberships_ok = all(dp[i] in left.term(i + 1) for i in range(len(dp)))

    correction = 0
    for i in range(2 * s + 1):
        term = brace.sub(mul[mul[d[i]][dp[i]]][c], mul[d[i]][mul[dp[i]][c]])
        correction = add[correction][term] if i % 2 else brace.sub(correction, term)

    lhs = mul[add[a][b]][c]
    rhs = add[add[mul[a][c]][mul[b][c]]][correction]
    return ExpansionTrace(
        a=a, b=b, c=c, s=s,
        d=d[: 2 * s + 1], d_prime=dp[: 2 * s + 1],
        correction=correction, lhs=lhs, rhs=rhs,
        holds=lhs == rhs, memberships_ok=memberships_ok,
    )


def torsion_check(brace: FiniteBrace, a: int, b: int, m: Optional[int] = None) -> CheckResult:
    """If m·a = m·b = 0 then every d_i and d'_i is killed by m (m defaults to lcm of the orders)."""
    require_left(brace)
    left = _left_nilpotent_chain(brace)
    orders = additive_orders(brace.add_table)
    if m is None:
        m = orders[a] * orders[b] // gcd(orders[a], orders[b])
    if additive_multiple(brace, m, a) or additive_multiple(brace, m, b):
        return CheckResult(name="torsion", passed=True, detail=f"{m} does not kill both inputs")
    d, dp = d_sequences(brace, a, b, 2 * left.vanishes_at)
    for i, (x, y) in enumerate(zip(d, dp)):
        if additive_multiple(brace, m, x) or additive_multiple(brace, m, y):
            return CheckResult(name="torsion", passed=False, counterexample=(i, x, y))
    return CheckResult(name="torsion", passed=True)


def bracket_defect_check(
    brace: FiniteBrace,
    a: int,
    b: int,
    c: int,
    i: int,
    j: int,
    k: int,
    bracket: Optional[SeriesChain] = None,
) -> bool:
    """Does (a+b)c - ac - bc lie in A^[i+j+k]? Memberships a in A^[i] etc. are enforced."""
    require_left(brace)
    bracket = bracket or _bracket_nilpotent_chain(brace)
    if not bracket.vanishes:
        raise NotBracketNilpotent("A^[n] never vanishes")
    for element, index in ((a, i), (b, j), (c, k)):
        if element not in bracket.term(index):
            raise MembershipViolation(element, index)
    add, mul = brace.add_table, brace.mul_table
    defect = brace.sub(brace.sub(mul[add[a][b]][c], mul[a][c]), mul[b][c])
    return defect in bracket.term(i + j + k)


def coprime_products_vanish(brace: FiniteBrace) -> CheckResult:
    """In a left-nilpotent brace, ac = 0 whenever gcd(ord(a), ord(c)) = 1."""
    require_left(brace)
    _left_nilpotent_chain(brace)
    orders = additive_orders(brace.add_table)
    for a in brace.elements:
        for c in brace.elements:
            if gcd(orders[a], orders[c]) == 1 and brace.mul_table[a][c] != 0:
                return CheckResult(name="coprime-products", passed=False, counterexample=(a, c))
    return CheckResult(name="coprime-products", passed=True)
