# tests/test_equivalences.py
"""
Structural properties checked on every enumerated left brace.

Orders up to 7 run by default; order 8 (27 braces) is marked slow.
"""

from itertools import product

import pytest
from sympy import factorint

from bracelab.models.structures import SeriesKind
from bracelab.services.braces.operations import is_two_sided, opposite
from bracelab.services.groups.analysis import adjoint_group, is_nilpotent
from bracelab.services.groups.decomposition import nilpotency_bound_check
from bracelab.services.series.chains import chain, chain_mirrored
from bracelab.services.series.identities import (
    bracket_defect_check,
    coprime_products_vanish,
    expansion_check,
    torsion_check,
)
from bracelab.services.ybe.braiding import check_two_sided_identity
from bracelab.services.ybe.retraction import multipermutation_level
from bracelab.services.ybe.solutions import is_solution, solution_from_brace


def check_brace(brace):
    left = chain(brace, SeriesKind.LEFT_POWERS, certify=False)
    right = chain(brace, SeriesKind.RIGHT_POWERS, certify=False)
    bracket = chain(brace, SeriesKind.BRACKET, certify=False)
    nilpotent, _ = is_nilpotent(adjoint_group(brace))
    sol = solution_from_brace(brace)
    level = multipermutation_level(sol).level

    L, R, B, M = left.vanishes, right.vanishes, bracket.vanishes, level is not None

    # four equivalent conditions
    assert (L and R) == B == (R and nilpotent) == (nilpotent and M)
    # adjoint nilpotent iff A^n = 0
    assert nilpotent == L
    # finite level m iff A^(m+1) = 0
    assert M == R
    if M:
        assert right.vanishes_at == level + 1

    # mirrored statement for the opposite right brace
    assert chain_mirrored(opposite(brace), SeriesKind.RIGHT_POWERS, certify=False).vanishes == nilpotent

    primes = factorint(brace.order)
    if nilpotent and len(primes) <= 1:
        assert nilpotency_bound_check(brace)

    assert is_solution(sol)
    assert check_two_sided_identity(brace).passed == is_two_sided(brace)

    if L:
        for a, b, c in product(brace.elements, repeat=3):
            assert expansion_check(brace, a, b, c, left).holds
        for a, b in product(brace.elements, repeat=2):
            assert torsion_check(brace, a, b).passed
        assert coprime_products_vanish(brace).passed

    if B:
        # deepest bracket term holding each element
        depth = {x: max(k for k in range(1, bracket.vanishes_at + 1) if x in bracket.term(k)) for x in brace.elements}
        for a, b, c in product(brace.elements, repeat=3):
            assert bracket_defect_check(brace, a, b, c, depth[a], depth[b], depth[c], bracket), (a, b, c)


class TestEnumeratedBraces:
    """Every left brace of small order satisfies the structural properties."""

    @pytest.mark.parametrize("order", range(1, 8))
    def test_orders_up_to_seven(self, enumerated, order):
        """Test all properties on one order."""
        for brace in enumerated.left(order):
            check_brace(brace)

    @pytest.mark.slow
    def test_order_eight(self, enumerated):
        """Test all properties on the 27 left braces of order 8."""
        braces = enumerated.left(8)

        assert len(braces) == 27
        for brace in braces:
            check_brace(brace)
            assert nilpotency_bound_check(brace)
            assert chain(brace, SeriesKind.LEFT_POWERS, certify=False).vanishes_at <= 4

    @pytest.mark.slow
    def test_order_eight_left_only_witness(self, enumerated):
        """Test that order 8 has a brace with A^4 = 0, A^(n) never 0 and a nilpotent adjoint group."""
        witnesses = []
        for brace in enumerated.left(8):
            left = chain(brace, SeriesKind.LEFT_POWERS, certify=False)
            right = chain(brace, SeriesKind.RIGHT_POWERS, certify=False)
            if left.vanishes_at == 4 and not right.vanishes:
                witnesses.append(brace)

        assert witnesses
        for brace in witnesses:
            assert is_nilpotent(adjoint_group(brace))[0]
            assert multipermutation_level(solution_from_brace(brace)).level is None
            assert not chain(brace, SeriesKind.BRACKET, certify=False).vanishes
