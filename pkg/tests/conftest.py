"""Shared fixtures: hand-built braces and session-cached enumerations."""

from typing import Dict, List

import pytest

from bracelab.models.structures import FiniteBrace
from bracelab.services.braces.operations import brace_from_ring, trivial_brace
from bracelab.services.braces.validation import validate
from bracelab.services.catalog.enumeration import BraceEnumerator


def cyclic_add(n: int) -> List[List[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def s3_mul() -> List[List[int]]:
    """ab = -2b for odd a, 0 for even a, on Z/6; its adjoint group is S3."""
    return [[(-2 * b) % 6 if a % 2 else 0 for b in range(6)] for a in range(6)]


def ring_mul(n: int, k: int) -> List[List[int]]:
    """x·y = k x y mod n."""
    return [[(k * a * b) % n for b in range(n)] for a in range(n)]


@pytest.fixture
def trivial4() -> FiniteBrace:
    return trivial_brace((4,))


@pytest.fixture
def ring_z4() -> FiniteBrace:
    return brace_from_ring(cyclic_add(4), ring_mul(4, 2))


@pytest.fixture
def s3_brace() -> FiniteBrace:
    return validate(6, cyclic_add(6), s3_mul())


class _EnumerationCache:
    def __init__(self):
        self._left: Dict[int, List[FiniteBrace]] = {}
        self.enumerator = BraceEnumerator(workers=1)

    def left(self, order: int) -> List[FiniteBrace]:
        if order not in self._left:
            self._left[order] = self.enumerator.left_braces(order)
        return self._left[order]

    def left_upto(self, max_order: int) -> List[FiniteBrace]:
        return [b for order in range(1, max_order + 1) for b in self.left(order)]


@pytest.fixture(scope="session")
def enumerated() -> _EnumerationCache:
    return _EnumerationCache()
