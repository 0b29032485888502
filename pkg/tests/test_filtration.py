# tests/test_filtration.py
"""
Unit tests for the T(j) filtration and the S-grading.
"""

import pytest
from hypothesis import given, settings, strategies as st

from bracelab.core.exceptions import InputError
from bracelab.services.engel.elements import ElementBuilder
from bracelab.services.engel.filtration import alternations, s_degree, s_grading, t_membership, t_product_check
from bracelab.services.engel.free_poly import FreePoly

monomials = st.text(alphabet="ab", min_size=1, max_size=6)


class TestTFiltration:
    """Test suite for T(j)."""

    def setup_method(self):
        """Setup test fixtures."""
        self.builder = ElementBuilder()

    def test_alternations(self):
        """Test counting letter changes."""
        assert alternations("a") == 0
        assert alternations("abba") == 2
        assert alternations("ababa") == 4

    def test_membership(self):
        """Test membership and the reported witness."""
        p = FreePoly({"ab": 1, "bab": 2})

        assert t_membership(p, 2) == (True, None)
        assert t_membership(p, 1) == (False, "bab")

    def test_constant_rejected(self):
        """Test that T(j) membership needs a constant-free polynomial."""
        with pytest.raises(InputError):
            t_membership(FreePoly.one(), 3)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_z_minus_w(self, n):
        """Test z_n - w_n - 1 in T(2^n - 3)."""
        poly = self.builder.z(n) - self.builder.w(n) - 1

        assert t_membership(poly, 2**n - 3)[0]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_zinv_minus_wbar(self, n):
        """Test z_n^-1 - wbar_n - 1 in T(2^n - 3)."""
        poly = self.builder.z_inverse(n) - self.builder.wbar(n) - 1

        assert t_membership(poly, 2**n - 3)[0]

    def test_z2_remainder(self):
        """Test the exact remainder for n = 2."""
        assert self.builder.z(2) - self.builder.w(2) - 1 == FreePoly({"b": 1, "ab": 1, "ba": -1})

    def test_w_is_not_in_lower_level(self):
        """Test that w_n itself needs 2^n - 2 alternations."""
        for n in range(2, 5):
            w = self.builder.w(n)
            assert t_membership(w, 2**n - 2)[0]
            assert not t_membership(w, 2**n - 3)[0]

    def test_product_rejects_outside_factors(self):
        """Test that factors must lie in the named levels."""
        with pytest.raises(InputError):
            t_product_check(FreePoly({"aba": 1}), FreePoly({"b": 1}), 1, 0)

    @settings(max_examples=200, deadline=None)
    @given(monomials, monomials)
    def test_product_property(self, m1, m2):
        """Test T(i) T(j) inside T(i + j + 1)."""
        p, q = FreePoly({m1: 1}), FreePoly({m2: 1})

        assert t_product_check(p, q, alternations(m1), alternations(m2))


class TestSGrading:
    """Test suite for the S-grading."""

    def setup_method(self):
        """Setup test fixtures."""
        self.builder = ElementBuilder()

    def test_s_degree(self):
        """Test shapes of single monomials."""
        assert s_degree("") == (0, False)
        assert s_degree("a") == (0, True)
        assert s_degree("ababb") == (2, False)
        assert s_degree("abbaba") == (2, True)
        assert s_degree("ba") is None
        assert s_degree("abbb") is None

    def test_grading(self):
        """Test splitting a mixed polynomial."""
        p = FreePoly({"ab": 1, "abb": 2, "aba": 3, "b": 4})
        grading = s_grading(p)

        assert grading.components == {1: FreePoly({"ab": 1, "abb": 2})}
        assert grading.trailing_a == {1: FreePoly({"aba": 3})}
        assert grading.remainder == FreePoly({"b": 4})
        assert not grading.is_pure()
        assert grading.pure_shape() is None

    def test_w_shape(self):
        """Test w_n in F S^(2^(n-1) - 1) a for n <= 5."""
        for n in range(1, 6):
            assert s_grading(self.builder.w(n)).pure_shape() == (2 ** (n - 1) - 1, True)
