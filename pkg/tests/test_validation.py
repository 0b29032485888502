# tests/test_validation.py
"""
Unit tests for brace axiom validation.

Checks the report against a plain-Python oracle on every table pair of
order <= 2, on large families of order 3, and on random order-4 tables.
"""

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from bracelab.core.exceptions import BraceValidationError, TableShapeError
from bracelab.models.schemas import ViolationKind
from bracelab.models.structures import Chirality
from bracelab.services.braces.validation import validate, validation_report
from tests.conftest import cyclic_add, ring_mul, s3_mul


def oracle_kinds(n, add, mul, chirality=Chirality.LEFT):
    """Axiom check written out element by element."""
    E = range(n)
    kinds = set()

    group_ok = (
        all(add[0][x] == x and add[x][0] == x for x in E)
        and all(add[x][y] == add[y][x] for x in E for y in E)
        and all(add[add[x][y]][z] == add[x][add[y][z]] for x in E for y in E for z in E)
        and all(any(add[x][y] == 0 for y in E) for x in E)
    )
    if not group_ok:
        kinds.add(ViolationKind.NOT_ABELIAN_GROUP)

    if chirality is Chirality.LEFT:
        distributive = all(mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]] for a in E for b in E for c in E)
    else:
        distributive = all(mul[add[a][b]][c] == add[mul[a][c]][mul[b][c]] for a in E for b in E for c in E)
    if not distributive:
        kinds.add(ViolationKind.NOT_DISTRIBUTIVE)

    if any(mul[a][0] != 0 or mul[0][a] != 0 for a in E):
        kinds.add(ViolationKind.ZERO_PRODUCT)

    def circ(a, b):
        return add[add[mul[a][b]][a]][b]

    circle_ok = (
        all(circ(0, x) == x and circ(x, 0) == x for x in E)
        and all(circ(circ(x, y), z) == circ(x, circ(y, z)) for x in E for y in E for z in E)
        and all(any(circ(x, y) == 0 for y in E) and any(circ(y, x) == 0 for y in E) for x in E)
    )
    if not circle_ok:
        kinds.add(ViolationKind.CIRCLE_NOT_GROUP)
    return kinds


def all_tables(n):
    for flat in product(range(n), repeat=n * n):
        yield [list(flat[i * n:(i + 1) * n]) for i in range(n)]


class TestValidate:
    """Test suite for validate() on known tables."""

    def test_trivial_brace(self):
        """Test that zero multiplication on Z/4 is a brace."""
        brace = validate(4, cyclic_add(4), [[0] * 4 for _ in range(4)])

        assert brace.order == 4
        assert brace.chirality is Chirality.LEFT
        assert brace.circle_table == brace.add_table

    def test_s3_brace(self):
        """Test the order-6 brace with non-abelian adjoint group."""
        brace = validate(6, cyclic_add(6), s3_mul())

        assert brace.circle(1, 2) != brace.circle(2, 1)
        assert all(brace.circle(a, brace.inverse(a)) == 0 for a in brace.elements)

    def test_s3_brace_is_not_a_right_brace(self):
        """Test that the same tables fail right distributivity."""
        report = validation_report(6, cyclic_add(6), s3_mul(), Chirality.RIGHT)

        assert not report.ok
        assert ViolationKind.NOT_DISTRIBUTIVE in report.kinds()

    def test_invalid_raises_with_report(self):
        """Test that validate() raises BraceValidationError carrying the report."""
        mul = [[0, 0], [0, 1]]

        with pytest.raises(BraceValidationError) as excinfo:
            validate(2, cyclic_add(2), mul)

        assert not excinfo.value.report.ok
        assert excinfo.value.report.lines()

    def test_collects_every_violation(self):
        """Test that a table breaking several axioms reports every kind."""
        add = [[0, 1, 2], [1, 1, 0], [2, 0, 0]]
        mul = [[1, 0, 0], [0, 2, 1], [0, 1, 2]]

        report = validation_report(3, add, mul)

        assert ViolationKind.NOT_ABELIAN_GROUP in report.kinds()
        assert ViolationKind.ZERO_PRODUCT in report.kinds()
        assert set(report.kinds()) == oracle_kinds(3, add, mul)

    def test_witness_counts(self):
        """Test that violations carry a first witness and a count."""
        report = validation_report(2, cyclic_add(2), [[0, 1], [0, 0]])
        zero = [v for v in report.violations if v.kind is ViolationKind.ZERO_PRODUCT]

        assert zero
        assert all(v.count >= 1 for v in zero)
        assert zero[0].witness == (1,)

    def test_ragged_table(self):
        """Test that a short row raises TableShapeError."""
        with pytest.raises(TableShapeError):
            validate(2, [[0, 1], [1]], [[0, 0], [0, 0]])

    def test_entry_out_of_range(self):
        """Test that indices outside 0..n-1 raise TableShapeError."""
        with pytest.raises(TableShapeError):
            validate(2, [[0, 1], [1, 2]], [[0, 0], [0, 0]])


class TestAxiomOracle:
    """validation_report agrees with the plain oracle."""

    def test_all_tables_order_one_and_two(self):
        """Test every (add, mul) pair of order 1 and 2."""
        for n in (1, 2):
            for add in all_tables(n):
                for mul in all_tables(n):
                    for chirality in Chirality:
                        report = validation_report(n, add, mul, chirality)
                        assert set(report.kinds()) == oracle_kinds(n, add, mul, chirality), (add, mul)

    def test_all_additions_order_three(self):
        """Test every addition table of order 3 with zero multiplication."""
        mul = [[0] * 3 for _ in range(3)]
        for add in all_tables(3):
            report = validation_report(3, add, mul)
            assert set(report.kinds()) == oracle_kinds(3, add, mul), add

    def test_all_multiplications_order_three(self):
        """Test every multiplication table on Z/3."""
        add = cyclic_add(3)
        valid = 0
        for mul in all_tables(3):
            report = validation_report(3, add, mul)
            assert set(report.kinds()) == oracle_kinds(3, add, mul), mul
            valid += report.ok
        assert valid == 1  # only the trivial brace

    @settings(max_examples=10_000, deadline=None)
    @given(
        st.one_of(
            st.just(cyclic_add(4)),
            st.lists(st.lists(st.integers(0, 3), min_size=4, max_size=4), min_size=4, max_size=4),
        ),
        st.one_of(
            st.sampled_from([ring_mul(4, 2), ring_mul(4, 0)]),
            st.lists(st.lists(st.integers(0, 3), min_size=4, max_size=4), min_size=4, max_size=4),
        ),
        st.sampled_from(list(Chirality)),
    )
    def test_random_order_four(self, add, mul, chirality):
        """Test random order-4 tables."""
        report = validation_report(4, add, mul, chirality)
        assert set(report.kinds()) == oracle_kinds(4, add, mul, chirality)
