# tests/test_free_poly.py
"""
Unit tests for FreePoly arithmetic modulo a^2 and b^3.
"""

import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from bracelab.core.exceptions import FieldMismatch, InputError
from bracelab.services.engel.free_poly import (
    RATIONALS,
    CoefficientField,
    FreePoly,
    dump_poly,
    is_reduced,
    parse_poly_dump,
    poly_sum,
)

GF3 = CoefficientField(characteristic=3)

polys = st.dictionaries(
    st.text(alphabet="ab", max_size=4),
    st.integers(-3, 3),
    max_size=5,
).map(FreePoly)


class TestFreePoly:
    """Test suite for the reduced free algebra."""

    def setup_method(self):
        """Setup test fixtures."""
        self.a = FreePoly.generator("a")
        self.b = FreePoly.generator("b")
        self.one = FreePoly.one()

    def test_defining_relations(self):
        """Test a^2 = 0 and b^3 = 0."""
        assert (self.a * self.a).is_zero
        assert (self.b * self.b * self.b).is_zero
        assert not (self.b * self.b).is_zero

    def test_unit(self):
        """Test (1 + a)(1 - a) = 1 and (1 + b)(1 - b + b^2) = 1."""
        assert (self.one + self.a) * (self.one - self.a) == 1
        assert (1 + self.b) * (1 - self.b + self.b**2) == self.one

    def test_unreduced_monomials_vanish(self):
        """Test that monomials with aa or bbb are never stored."""
        p = FreePoly({"aab": 1, "abbb": 2, "ab": 0, "ba": 5})

        assert p.monomials() == ["ba"]
        assert not is_reduced("baab")

    def test_bad_monomial(self):
        """Test that letters other than a and b are rejected."""
        with pytest.raises(InputError):
            FreePoly({"ac": 1})

    def test_inspection(self):
        """Test constant, degree, length and ordering of monomials."""
        p = FreePoly({"ba": 1, "b": -2, "": 3, "ab": 1})

        assert p.monomials() == ["", "b", "ab", "ba"]
        assert p.constant == RATIONALS.convert(3)
        assert p.degree == 2
        assert len(p) == 4
        assert len(p.without_constant()) == 3
        assert set(p.terms) == {"b", "ab", "ba"}

    def test_field_mismatch(self):
        """Test that polynomials over different fields are not combined."""
        with pytest.raises(FieldMismatch):
            self.a + FreePoly.generator("a", GF3)

    def test_prime_field(self):
        """Test that 3a = 0 over GF(3)."""
        a = FreePoly.generator("a", GF3)

        assert (a * 3).is_zero
        assert str(GF3) == "GF(3)"

    def test_field_must_be_prime(self):
        """Test that GF(4) is refused."""
        with pytest.raises(ValidationError):
            CoefficientField(characteristic=4)

    def test_negative_power(self):
        """Test that negative powers are refused."""
        with pytest.raises(InputError):
            self.a ** -1

    def test_unhashable(self):
        """Test that polynomials are not hashable."""
        with pytest.raises(TypeError):
            hash(self.a)

    def test_sum(self):
        """Test poly_sum."""
        assert poly_sum([self.a, self.b, -self.a]) == self.b
        assert poly_sum([]).is_zero


class TestDumpFormat:
    """Test suite for the polynomial dump format."""

    def test_dump(self):
        """Test coefficients, ordering and the constant."""
        p = FreePoly({"ba": -1, "": 1, "a": "1/2"})

        assert dump_poly(p) == "1 1\n1/2 a\n-1 ba\n"

    def test_parse(self):
        """Test that parsing inverts dumping."""
        p = FreePoly({"aba": "-2/3", "": 4, "bb": 1})

        assert parse_poly_dump(dump_poly(p)) == p

    def test_parse_errors(self):
        """Test malformed lines and repeated monomials."""
        with pytest.raises(InputError):
            parse_poly_dump("1 a extra\n")
        with pytest.raises(InputError):
            parse_poly_dump("1 a\n2 a\n")

    def test_zero(self):
        """Test that zero dumps to the empty string."""
        assert dump_poly(FreePoly.zero()) == ""


class TestRingAxioms:
    """Property tests for the ring structure."""

    @settings(max_examples=100, deadline=None)
    @given(polys, polys, polys)
    def test_associative(self, p, q, r):
        """Test (pq)r = p(qr)."""
        assert (p * q) * r == p * (q * r)

    @settings(max_examples=100, deadline=None)
    @given(polys, polys, polys)
    def test_distributive(self, p, q, r):
        """Test p(q + r) = pq + pr and (p + q)r = pr + qr."""
        assert p * (q + r) == p * q + p * r
        assert (p + q) * r == p * r + q * r

    @settings(max_examples=100, deadline=None)
    @given(polys, polys)
    def test_additive_group(self, p, q):
        """Test p + q = q + p and p - p = 0."""
        assert p + q == q + p
        assert (p - p).is_zero
