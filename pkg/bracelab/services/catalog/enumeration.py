"""
Exhaustive enumeration of small braces up to isomorphism.

A left brace on an abelian group A is the same thing as a map
λ: A -> Aut(A, +) with λ_0 = id and λ_{a + λ_a(b)} = λ_a λ_b; the
multiplication is then ab = λ_a(b) - b. For every abelian group of the
requested order the search assigns λ element by element, forcing λ on
every a + λ_a(b) whose inputs are known, and backtracks on conflicts.
Found tables are deduplicated by their orbit under Aut(A, +); each class is
represented by the smallest table in its orbit, which is its canonical form.
Right braces are the opposites of the left ones.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Set, Tuple

from ...core.config import settings
from ...core.exceptions import BoundExceeded, InputError
from ...models.schemas import CatalogEntry
from ...models.structures import Chirality, FiniteBrace
from ..braces.abelian import Moduli, abelian_types, automorphisms, standard_group
from ..braces.isomorphism import CanonicalForm, canonical_form, transport
from ..braces.operations import opposite
from .invariants import compute_invariants

logger = logging.getLogger(__name__)

Flat = Tuple[int, ...]


class LambdaSearch:
    """Backtracking search for all λ-maps on one standard abelian group."""

    def __init__(self, moduli: Moduli):
        self.moduli = moduli
        _, self.add = standard_group(moduli)
        self.n = len(self.add)
        self.neg = tuple(next(y for y in range(self.n) if self.add[x][y] == 0) for x in range(self.n))
        self.auts = automorphisms(moduli)
        self.aut_index = {p: i for i, p in enumerate(self.auts)}
        self.identity = self.aut_index[tuple(range(self.n))]
        self._compose: Dict[Tuple[int, int], int] = {}

    def compose(self, i: int, j: int) -> int:
        key = (i, j)
        if key not in self._compose:
            f, g = self.auts[i], self.auts[j]
            self._compose[key] = self.aut_index[tuple(f[g[x]] for x in range(self.n))]
        return self._compose[key]

    def mul_table(self, lam: List[int]) -> Flat:
        add, neg = self.add, self.neg
        return tuple(add[self.auts[lam[a]][b]][neg[b]] for a in range(self.n) for b in range(self.n))

    def _assign(self, lam: List[int], trail: List[int], x: int, g: int) -> bool:
        """Set λ_x = g and close under the λ-rule; False on conflict."""
        lam[x] = g
        trail.append(x)
        queue = [x]
        while queue:
            x = queue.pop()
            assigned = [y for y in range(1, self.n) if lam[y] >= 0]
            for y in assigned:
                for a, b in ((x, y), (y, x)):
                    c = self.add[a][self.auts[lam[a]][b]]
                    required = self.compose(lam[a], lam[b])
                    if lam[c] < 0:
                        lam[c] = required
                        trail.append(c)
                        queue.append(c)
                    elif lam[c] != required:
                        return False
        return True

    def _undo(self, lam: List[int], trail: List[int], mark: int) -> None:
        while len(trail) > mark:
            lam[trail.pop()] = -1

    def search(self, root_choice: Optional[int] = None) -> List[Flat]:
        """Every λ-map (as a flattened multiplication table).

        With root_choice set, only the subtree where λ_1 is that automorphism
        is explored.
        """
        lam = [-1] * self.n
        lam[0] = self.identity
        found: List[Flat] = []
        if self.n == 1:
            return [self.mul_table(lam)]
        trail: List[int] = []

        def recurse() -> None:
            x = next((y for y in range(1, self.n) if lam[y] < 0), None)
            if x is None:
                found.append(self.mul_table(lam))
                return
            choices = range(len(self.auts))
            if x == 1 and root_choice is not None:
                choices = (root_choice,)
            for g in choices:
                mark = len(trail)
                if self._assign(lam, trail, x, g):
                    recurse()
                self._undo(lam, trail, mark)

        recurse()
        return found

    def orbit(self, table: Flat) -> Set[Flat]:
        rows = [table[i * self.n:(i + 1) * self.n] for i in range(self.n)]
        return {transport(rows, alpha) for alpha in self.auts}

    def classes(self, tables: List[Flat]) -> List[Flat]:
        """Smallest table of each Aut-orbit among `tables`."""
        seen: Set[Flat] = set()
        canon = []
        for t in tables:
            if t in seen:
                continue
            orbit = self.orbit(t)
            seen |= orbit
            canon.append(min(orbit))
        return canon


def _search_subtree(moduli: Moduli, root_choice: Optional[int]) -> List[Flat]:
    search = LambdaSearch(moduli)
    return search.classes(search.search(root_choice))


class BraceEnumerator:
    """Enumerates braces of a given order, one per isomorphism class."""

    def __init__(self, max_order: Optional[int] = None, workers: Optional[int] = None):
        """
        Initialize the enumerator.

        Args:
            max_order: Largest order accepted (default: settings.ENUMERATION_MAX_ORDER)
            workers: Worker processes for the search (default: settings.ENUMERATION_WORKERS)
        """
        self.max_order = max_order if max_order is not None else settings.ENUMERATION_MAX_ORDER
        self.workers = workers if workers is not None else settings.ENUMERATION_WORKERS

    def _check_order(self, order: int) -> None:
        if order < 1:
            raise InputError(f"order must be positive, got {order}")
        if order > self.max_order:
            raise BoundExceeded(order, self.max_order)

    def _tables_for(self, moduli: Moduli) -> List[Flat]:
        search = LambdaSearch(moduli)
        if self.workers <= 1 or search.n == 1:
            return search.classes(search.search())
        roots = range(len(search.auts))
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            chunks = list(pool.map(_search_subtree, [moduli] * len(roots), roots))
        # classes from different subtrees may coincide; merge by orbit
        merged = sorted({t for chunk in chunks for t in chunk})
        return search.classes(merged)

    def left_braces(self, order: int) -> List[FiniteBrace]:
        """Canonical representatives of all left braces of this order, in canonical order."""
        self._check_order(order)
        braces = []
        for moduli in abelian_types(order):
            _, add = standard_group(moduli)
            n = len(add)
            tables = sorted(self._tables_for(moduli))
            logger.info(f"Additive group {moduli or '(trivial)'}: {len(tables)} left braces")
            for t in tables:
                mul = tuple(t[i * n:(i + 1) * n] for i in range(n))
                braces.append(FiniteBrace(order=n, add_table=add, mul_table=mul, chirality=Chirality.LEFT))
        return braces

    def braces(self, order: int, chirality: Chirality = Chirality.LEFT) -> List[Tuple[FiniteBrace, CanonicalForm]]:
        left = self.left_braces(order)
        if chirality is Chirality.LEFT:
            return [(b, canonical_form(b)) for b in left]
        right = [opposite(b) for b in left]
        pairs = [(b, canonical_form(b)) for b in right]
        return sorted(pairs, key=lambda p: (p[1].moduli, p[1].mul_table))

    def enumerate(self, order: int, chirality: Chirality = Chirality.LEFT) -> List[CatalogEntry]:
        entries = []
        for k, (brace, canon) in enumerate(self.braces(order, chirality), start=1):
            entries.append(
                CatalogEntry(
                    path=entry_path(order, chirality, k),
                    fingerprint=canon.fingerprint,
                    invariants=compute_invariants(brace),
                    brace=brace,
                )
            )
        logger.info(f"Enumerated {len(entries)} {chirality.value} braces of order {order}")
        return entries


def entry_path(order: int, chirality: Chirality, k: int) -> str:
    return f"order-{order:02d}/{chirality.value}-{k:03d}.brace"


def enumerate_braces(order: int, chirality: Chirality = Chirality.LEFT, workers: Optional[int] = None) -> List[CatalogEntry]:
    return BraceEnumerator(workers=workers).enumerate(order, chirality)
