# tests/test_series.py
"""
Unit tests for the radical chains, the socle and the expansion identities.
"""

from itertools import product

import pytest

from bracelab.core.exceptions import DifferentParents, MembershipViolation, NotLeftNilpotent, WrongChirality
from bracelab.models.structures import Certification, SeriesKind
from bracelab.services.braces.operations import opposite, trivial_brace, whole, zero
from bracelab.services.series.chains import (
    additive_span,
    chain,
    chain_mirrored,
    product_span,
    socle,
    vanishing_index,
)
from bracelab.services.series.identities import (
    bracket_defect_check,
    coprime_products_vanish,
    expansion_check,
    torsion_check,
)


def sizes(result):
    return [t.size for t in result.terms]


class TestChains:
    """Test suite for A^n, A^(n) and A^[n]."""

    def test_trivial_brace(self, trivial4):
        """Test that every chain of a trivial brace vanishes at index 2."""
        for kind in SeriesKind:
            result = chain(trivial4, kind)
            assert sizes(result) == [4, 1]
            assert result.vanishes_at == 2

    def test_one_element_brace(self):
        """Test that A = {0} vanishes at index 1."""
        for kind in SeriesKind:
            assert chain(trivial_brace(()), kind).vanishes_at == 1

    def test_s3_brace(self, s3_brace):
        """Test the order-6 brace: A^(3) = 0 while A^n stays {0, 2, 4}."""
        left = chain(s3_brace, SeriesKind.LEFT_POWERS)
        right = chain(s3_brace, SeriesKind.RIGHT_POWERS)
        bracket = chain(s3_brace, SeriesKind.BRACKET)

        assert sizes(left) == [6, 3]
        assert not left.vanishes
        assert left.terms[1].members == (0, 2, 4)
        assert sizes(right) == [6, 3, 1]
        assert right.vanishes_at == 3
        assert sizes(bracket) == [6, 3]
        assert not bracket.vanishes

    def test_ring_brace(self, ring_z4):
        """Test the ring brace Z/4 with product 2xy."""
        for kind in SeriesKind:
            result = chain(ring_z4, kind)
            assert sizes(result) == [4, 2, 1]
            assert result.vanishes_at == 3

    def test_terms_are_ideals(self, s3_brace, ring_z4):
        """Test that every computed term is certified as an ideal."""
        for brace in (s3_brace, ring_z4):
            for kind in SeriesKind:
                assert all(t.certification is Certification.IDEAL for t in chain(brace, kind).terms)

    def test_term_beyond_range(self, s3_brace):
        """Test that term() repeats the stable term."""
        left = chain(s3_brace, SeriesKind.LEFT_POWERS)

        assert left.term(1).size == 6
        assert left.term(10).members == (0, 2, 4)

    def test_right_brace_needs_mirroring(self, s3_brace):
        """Test that chain() refuses right braces and chain_mirrored swaps the kinds."""
        opp = opposite(s3_brace)

        with pytest.raises(WrongChirality):
            chain(opp, SeriesKind.LEFT_POWERS)

        assert chain_mirrored(opp, SeriesKind.LEFT_POWERS).vanishes_at == 3
        assert not chain_mirrored(opp, SeriesKind.RIGHT_POWERS).vanishes
        assert vanishing_index(opp, SeriesKind.LEFT_POWERS) == 3

    def test_one_sided_inside_bracket(self, enumerated):
        """Test A^k and A^(k) inside A^[k] on every brace of order <= 7."""
        for brace in enumerated.left_upto(7):
            left = chain(brace, SeriesKind.LEFT_POWERS, certify=False)
            right = chain(brace, SeriesKind.RIGHT_POWERS, certify=False)
            bracket = chain(brace, SeriesKind.BRACKET, certify=False)
            for k in range(1, brace.order + 2):
                assert left.term(k).issubset(bracket.term(k)), (brace, k)
                assert right.term(k).issubset(bracket.term(k)), (brace, k)

    def test_bracket_strictly_above_right(self, s3_brace):
        """Test that A^(3) = 0 while A^[3] keeps A^3 = {0, 2, 4}."""
        right = chain(s3_brace, SeriesKind.RIGHT_POWERS)
        bracket = chain(s3_brace, SeriesKind.BRACKET)

        assert right.term(3).is_zero
        assert bracket.term(3).members == (0, 2, 4)
        assert right.term(3).issubset(bracket.term(3))
        assert not bracket.term(3).issubset(right.term(3))

    def test_descending(self, enumerated):
        """Test that every chain is descending; the one-sided ones strictly."""
        for brace in enumerated.left_upto(6):
            for kind in SeriesKind:
                terms = chain(brace, kind, certify=False).terms
                for big, small in zip(terms, terms[1:]):
                    assert small.issubset(big)
                    if kind is not SeriesKind.BRACKET:
                        assert small.size < big.size


class TestSpansAndSocle:
    """Test suite for spans and the socle."""

    def test_product_with_zero(self, s3_brace):
        """Test C·{0} = {0}."""
        assert product_span(whole(s3_brace), zero(s3_brace)).is_zero

    def test_product_of_trivial_brace(self, trivial4):
        """Test A·A = {0} in a trivial brace."""
        assert product_span(whole(trivial4), whole(trivial4)).is_zero

    def test_product_different_parents(self, s3_brace, trivial4):
        """Test that subsets of different braces cannot be multiplied."""
        with pytest.raises(DifferentParents):
            product_span(whole(s3_brace), whole(trivial4))

    def test_additive_span(self, s3_brace):
        """Test spans in Z/6."""
        assert additive_span(s3_brace, [2]).members == (0, 2, 4)
        assert additive_span(s3_brace, [2, 3]).members == tuple(range(6))
        assert additive_span(s3_brace, []).is_zero

    def test_socle(self, s3_brace, trivial4):
        """Test socles of the order-6 brace and of a trivial brace."""
        soc = socle(s3_brace)

        assert soc.members == (0, 2, 4)
        assert soc.certification is Certification.IDEAL
        assert socle(trivial4).size == 4

    def test_socle_is_where_circle_is_sum(self, enumerated):
        """Test x in Soc(A) iff x∘a = x + a for all a, on braces of order <= 6."""
        for brace in enumerated.left_upto(6):
            soc = socle(brace)
            for x in brace.elements:
                expected = all(brace.circle(x, a) == brace.add(x, a) for a in brace.elements)
                assert (x in soc) == expected

    def test_last_right_power_in_socle(self, enumerated):
        """Test A^(s-1) inside the socle when A^(s) = 0."""
        for brace in enumerated.left_upto(6):
            right = chain(brace, SeriesKind.RIGHT_POWERS, certify=False)
            if right.vanishes and right.vanishes_at >= 2:
                assert right.term(right.vanishes_at - 1).issubset(socle(brace))


class TestExpansionIdentity:
    """Test suite for expansion_check and the related checks."""

    def test_trivial_brace(self, trivial4):
        """Test that the correction vanishes in a trivial brace."""
        trace = expansion_check(trivial4, 1, 2, 3)

        assert trace.holds
        assert trace.correction == 0
        assert trace.d[0] == 1 and trace.d_prime[0] == 2

    def test_a_zero(self, ring_z4):
        """Test that a = 0 gives both sides equal to bc."""
        for b, c in product(ring_z4.elements, repeat=2):
            trace = expansion_check(ring_z4, 0, b, c)
            assert trace.holds
            assert trace.lhs == ring_z4.mul(b, c)

    def test_all_triples_small_orders(self, enumerated):
        """Test every triple of every left-nilpotent brace of order <= 6."""
        for brace in enumerated.left_upto(6):
            left = chain(brace, SeriesKind.LEFT_POWERS, certify=False)
            if not left.vanishes:
                continue
            for a, b, c in product(brace.elements, repeat=3):
                trace = expansion_check(brace, a, b, c, left)
                assert trace.holds, (brace, a, b, c)
                assert trace.memberships_ok

    def test_needs_left_nilpotence(self, s3_brace):
        """Test that the order-6 brace is refused."""
        with pytest.raises(NotLeftNilpotent):
            expansion_check(s3_brace, 1, 1, 1)

    def test_torsion(self, ring_z4):
        """Test that multiples killing a and b kill the d-sequences."""
        for a, b in product(ring_z4.elements, repeat=2):
            assert torsion_check(ring_z4, a, b).passed
        assert torsion_check(ring_z4, 2, 2, m=2).passed

    def test_bracket_defect(self, ring_z4):
        """Test (a+b)c - ac - bc in A^[i+j+k] for all admissible tuples."""
        bracket = chain(ring_z4, SeriesKind.BRACKET, certify=False)
        for i, j, k in product(range(1, 4), repeat=3):
            for a, b, c in product(ring_z4.elements, repeat=3):
                if a in bracket.term(i) and b in bracket.term(j) and c in bracket.term(k):
                    assert bracket_defect_check(ring_z4, a, b, c, i, j, k, bracket)

    def test_bracket_defect_membership(self, ring_z4):
        """Test that 1 is rejected as a member of A^[2]."""
        with pytest.raises(MembershipViolation):
            bracket_defect_check(ring_z4, 1, 0, 0, 2, 1, 1)

    def test_coprime_products(self):
        """Test ac = 0 for coprime additive orders."""
        assert coprime_products_vanish(trivial_brace((6,))).passed

    def test_coprime_needs_left_nilpotence(self, s3_brace):
        """Test that the order-6 brace is refused."""
        with pytest.raises(NotLeftNilpotent):
            coprime_products_vanish(s3_brace)
