# tests/test_periodicity.py
"""
Unit tests for factor complexity and eventual periodicity.
"""

from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from bracelab.core.exceptions import InputError
from bracelab.services.engel.periodicity import distinct_subwords, periodic_decomposition
from bracelab.services.engel.words import Word, word_W


@st.composite
def eventually_periodic(draw):
    """prefix + cycle * reps over three letters, with |prefix| + |cycle| < n <= 6."""
    n = draw(st.integers(2, 6))
    cycle = draw(st.text(alphabet="xyz", min_size=1, max_size=n - 1))
    prefix = draw(st.text(alphabet="xyz", max_size=n - 1 - len(cycle)))
    reps = draw(st.integers(1, 40))
    return prefix + cycle * reps, prefix, n


class TestPeriodicity:
    """Test suite for periodic_decomposition."""

    def test_constant_word(self):
        """Test xxxxx with n = 2."""
        d = periodic_decomposition("xxxxx", 2)

        assert d.prefix == ""
        assert d.period == "xx"
        assert d.repetitions == 2
        assert d.tail == "x"
        assert d.within_bound
        assert d.reconstruct() == "xxxxx"

    def test_alternating_word(self):
        """Test (xy)^k with n = 3."""
        s = "xy" * 7
        d = periodic_decomposition(s, 3)

        assert distinct_subwords(s, 3) == 2
        assert len(d.period) == 6
        assert d.reconstruct() == s

    def test_complex_enough(self):
        """Test that words with at least n factors of length n give None."""
        assert periodic_decomposition("xyxy", 2) is None
        assert periodic_decomposition(word_W(5), 2) is None

    def test_word_input(self):
        """Test that Word input is rendered with letter names."""
        d = periodic_decomposition(Word("ABABABAB"), 3)

        assert d.reconstruct() == "ABABABAB"

    def test_preperiod(self):
        """Test a word that becomes periodic after a prefix."""
        s = "y" + "x" * 11
        d = periodic_decomposition(s, 3)

        assert d.prefix == "y"
        assert d.reconstruct() == s

    def test_bad_length(self):
        """Test n < 1."""
        with pytest.raises(InputError):
            distinct_subwords("xy", 0)
        with pytest.raises(InputError):
            periodic_decomposition("xy", 0)

    @given(st.text(alphabet="xy", max_size=30), st.integers(1, 4))
    def test_any_word(self, s, n):
        """Test that low complexity always yields a reconstructing decomposition."""
        d = periodic_decomposition(s, n)

        if distinct_subwords(s, n) >= n:
            assert d is None
        else:
            assert d.reconstruct() == s
            assert d.period == "" or len(d.period) == factorial(n)

    @settings(max_examples=1000, deadline=None)
    @given(eventually_periodic())
    def test_eventually_periodic(self, case):
        """Test words built as a prefix followed by a cycle, with |prefix| + |cycle| < n."""
        s, prefix, n = case
        d = periodic_decomposition(s, n)

        assert distinct_subwords(s, n) < n
        assert d is not None
        assert d.reconstruct() == s
        assert len(d.period) == factorial(n)
        assert len(d.prefix) <= len(prefix)
        assert d.within_bound
