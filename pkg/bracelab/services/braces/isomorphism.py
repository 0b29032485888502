"""
Isomorphism testing and canonical forms for braces.

Every brace with additive type (m_1, ..., m_k) is transported onto the
standard group Z/m_1 x ... x Z/m_k along an additive isomorphism. The
canonical form is the lexicographically smallest transported multiplication
table; its sha256 is the catalog fingerprint.
"""

import hashlib
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ...models.structures import Chirality, FiniteBrace
from .abelian import Moduli, additive_orders, isomorphisms_from_standard, standard_group, type_of

logger = logging.getLogger(__name__)

Bijection = Tuple[int, ...]


class CanonicalForm(BaseModel):
    model_config = ConfigDict(frozen=True)

    moduli: Moduli
    chirality: Chirality
    mul_table: Tuple[int, ...]  # flattened, row-major over the standard group
    isomorphism: Bijection  # standard index -> element of the input brace

    @property
    def fingerprint(self) -> str:
        payload = f"{self.chirality.value}|{','.join(map(str, self.moduli))}|{','.join(map(str, self.mul_table))}"
        return hashlib.sha256(payload.encode("ascii")).hexdigest()

    def to_brace(self) -> FiniteBrace:
        _, add = standard_group(self.moduli)
        n = len(add)
        rows = tuple(tuple(self.mul_table[i * n:(i + 1) * n]) for i in range(n))
        return FiniteBrace(order=n, add_table=add, mul_table=rows, chirality=self.chirality)


def transport(mul_table: Sequence[Sequence[int]], phi: Bijection) -> Tuple[int, ...]:
    """Flattened table of x*y = phi^-1(phi(x)·phi(y))."""
    inv = [0] * len(phi)
    for i, x in enumerate(phi):
        inv[x] = i
    return tuple(inv[mul_table[px][py]] for px in phi for py in phi)


def canonical_form(brace: FiniteBrace) -> CanonicalForm:
    moduli = type_of(brace.add_table)
    best: Optional[Tuple[int, ...]] = None
    best_phi: Bijection = ()
    for phi in isomorphisms_from_standard(moduli, brace.add_table):
        t = transport(brace.mul_table, phi)
        if best is None or t < best:
            best, best_phi = t, phi
    return CanonicalForm(moduli=moduli, chirality=brace.chirality, mul_table=best, isomorphism=best_phi)


def fingerprint(brace: FiniteBrace) -> str:
    return canonical_form(brace).fingerprint


def relabel(brace: FiniteBrace, perm: Sequence[int]) -> FiniteBrace:
    """The isomorphic brace whose element perm[x] plays the role of x. perm[0] must be 0."""
    n = brace.order
    inv = [0] * n
    for x, y in enumerate(perm):
        inv[y] = x
    add = tuple(tuple(perm[brace.add_table[inv[u]][inv[v]]] for v in range(n)) for u in range(n))
    mul = tuple(tuple(perm[brace.mul_table[inv[u]][inv[v]]] for v in range(n)) for u in range(n))
    return FiniteBrace(order=n, add_table=add, mul_table=mul, chirality=brace.chirality)


def element_signatures(brace: FiniteBrace) -> Tuple[Tuple[int, int, int, int], ...]:
    """Isomorphism-invariant label of each element used to prune the search.

    (additive order, circle order, zeros in its multiplication row, zeros in its column)
    """
    orders = additive_orders(brace.add_table)
    signatures = []
    for x in brace.elements:
        k, y = 1, x
        while y != 0:
            y = brace.circle(y, x)
            k += 1
        row_zeros = sum(1 for v in brace.mul_table[x] if v == 0)
        col_zeros = sum(1 for a in brace.elements if brace.mul_table[a][x] == 0)
        signatures.append((orders[x], k, row_zeros, col_zeros))
    return tuple(signatures)


def is_isomorphic(b1: FiniteBrace, b2: FiniteBrace) -> Optional[Bijection]:
    """A bijection f: b1 -> b2 preserving + and ·, or None.

    One additive isomorphism phi1 from the standard group onto b1 is fixed;
    the search backtracks over additive isomorphisms phi2 onto b2 whose
    generator images carry the same signatures, and returns phi2∘phi1^-1 for
    the first one that also preserves multiplication.
    """
    if b1.order != b2.order or b1.chirality is not b2.chirality:
        return None
    moduli = type_of(b1.add_table)
    if type_of(b2.add_table) != moduli:
        return None
    sig1, sig2 = element_signatures(b1), element_signatures(b2)
    if sorted(sig1) != sorted(sig2):
        return None

    phi1 = next(isomorphisms_from_standard(moduli, b1.add_table))
    elements, _ = standard_group(moduli)
    generators = _generator_indices(elements, moduli)
    candidates = [[y for y in b2.elements if sig2[y] == sig1[phi1[g]]] for g in generators]

    inv1: Dict[int, int] = {x: i for i, x in enumerate(phi1)}
    for phi2 in isomorphisms_from_standard(moduli, b2.add_table, candidates):
        f = tuple(phi2[inv1[x]] for x in b1.elements)
        if _preserves_mul(b1, b2, f):
            logger.debug(f"Isomorphism found between order-{b1.order} braces")
            return f
    return None


def _generator_indices(elements: Sequence[Tuple[int, ...]], moduli: Moduli) -> List[int]:
    index = {x: i for i, x in enumerate(elements)}
    k = len(moduli)
    return [index[tuple(1 if j == i else 0 for j in range(k))] for i in range(k)]


def _preserves_mul(b1: FiniteBrace, b2: FiniteBrace, f: Bijection) -> bool:
    m1, m2 = b1.mul_table, b2.mul_table
    return all(m2[f[x]][f[y]] == f[m1[x][y]] for x in b1.elements for y in b1.elements)
