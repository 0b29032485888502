"""
The distinguished elements of F<a, b>/(a^2, b^3).

- w_n = W_n(a, b, -a, b^2 - b) and wbar_n = bar(W_n)(a, b, -a, b^2 - b), by the
  recurrences w_{n+1} = w_n b wbar_n and wbar_{n+1} = w_n (b^2 - b) wbar_n.
- z_2 = (1+a)(1+b)(1-a), z_{n+1} = z_n (1+b) z_n^-1 and
  z_{n+1}^-1 = z_n (1 - b + b^2) z_n^-1.
- v_n = z_{n+1} (1+b)^-1, the n-fold commutator [1+a, 1+b, ..., 1+b].
"""

import logging
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

from ...core.config import settings
from ...core.exceptions import InputError, TooLarge
from .free_poly import RATIONALS, CoefficientField, FreePoly
from .words import Letter, Word

logger = logging.getLogger(__name__)


def substitute(word: Word, images: Mapping[Letter, FreePoly], field: CoefficientField = RATIONALS) -> FreePoly:
    """Evaluate a word letter by letter in the free algebra."""
    result = FreePoly.one(field)
    for letter in word:
        result = result * images[letter]
    return result


def standard_images(field: CoefficientField = RATIONALS) -> Dict[Letter, FreePoly]:
    """A -> a, B -> b, A' -> -a, B' -> b^2 - b."""
    a, b = FreePoly.generator("a", field), FreePoly.generator("b", field)
    return {Letter.A: a, Letter.B: b, Letter.A_PRIME: -a, Letter.B_PRIME: b * b - b}


class ElementBuilder:
    """Memoized construction of w_n, wbar_n, z_n, z_n^-1 and v_n over one field."""

    def __init__(
        self,
        field: CoefficientField = RATIONALS,
        max_w_n: Optional[int] = None,
        max_z_n: Optional[int] = None,
        max_product_n: Optional[int] = None,
    ):
        """
        Initialize the builder.

        Args:
            field: Coefficient field of every element built
            max_w_n: Largest n for w_n / wbar_n (default: settings.ENGEL_MAX_W_N)
            max_z_n: Largest n for z_n / z_n^-1 (default: settings.ENGEL_MAX_Z_N)
            max_product_n: Largest n for multiplying out z_n z_n^-1 (default: settings.ENGEL_MAX_PRODUCT_N)
        """
        self.field = field
        self.max_w_n = max_w_n if max_w_n is not None else settings.ENGEL_MAX_W_N
        self.max_z_n = max_z_n if max_z_n is not None else settings.ENGEL_MAX_Z_N
        self.max_product_n = max_product_n if max_product_n is not None else settings.ENGEL_MAX_PRODUCT_N
        self.one = FreePoly.one(field)
        self.a = FreePoly.generator("a", field)
        self.b = FreePoly.generator("b", field)
        self.one_plus_b = self.one + self.b
        self.one_plus_b_inverse = self.one - self.b + self.b * self.b
        self._w: Dict[int, Tuple[FreePoly, FreePoly]] = {1: (self.a, -self.a)}
        self._z: Dict[int, Tuple[FreePoly, FreePoly]] = {}
        self._tower: Dict[int, Tuple[FreePoly, FreePoly]] = {}

    def _check_w(self, n: int) -> None:
        if n < 1:
            raise InputError(f"w_n is defined for n >= 1, got {n}")
        if n > self.max_w_n:
            raise TooLarge("n", n, self.max_w_n)

    def _check_z(self, n: int) -> None:
        if n < 2:
            raise InputError(f"z_n is defined for n >= 2, got {n}")
        if n > self.max_z_n:
            raise TooLarge("n", n, self.max_z_n)

    def _w_pair(self, n: int) -> Tuple[FreePoly, FreePoly]:
        if n not in self._w:
            w, wbar = self._w_pair(n - 1)
            self._w[n] = (w * self.b * wbar, w * (self.b * self.b - self.b) * wbar)
            logger.info(f"w_{n}: {len(self._w[n][0])} terms, wbar_{n}: {len(self._w[n][1])} terms")
        return self._w[n]

    def w(self, n: int) -> FreePoly:
        self._check_w(n)
        return self._w_pair(n)[0]

    def wbar(self, n: int) -> FreePoly:
        self._check_w(n)
        return self._w_pair(n)[1]

    def _z_pair(self, n: int) -> Tuple[FreePoly, FreePoly]:
        if n not in self._z:
            if n == 2:
                left, right = self.one + self.a, self.one - self.a
                self._z[2] = (left * self.one_plus_b * right, left * self.one_plus_b_inverse * right)
            else:
                z, z_inv = self._z_pair(n - 1)
                self._z[n] = (z * self.one_plus_b * z_inv, z * self.one_plus_b_inverse * z_inv)
            logger.info(f"z_{n}: {len(self._z[n][0])} terms, z_{n}^-1: {len(self._z[n][1])} terms")
        return self._z[n]

    def z(self, n: int) -> FreePoly:
        self._check_z(n)
        return self._z_pair(n)[0]

    def z_inverse(self, n: int) -> FreePoly:
        self._check_z(n)
        return self._z_pair(n)[1]

    def inverse_products(self, n: int) -> Tuple[FreePoly, FreePoly]:
        """(z_n z_n^-1, z_n^-1 z_n), both 1 when the recurrences are right."""
        self._check_z(n)
        if n > self.max_product_n:
            raise TooLarge("n", n, self.max_product_n)
        z, z_inv = self._z_pair(n)
        return z * z_inv, z_inv * z

    def v(self, n: int) -> FreePoly:
        """v_n = z_{n+1} (1 - b + b^2)."""
        if n < 1:
            raise InputError(f"v_n is defined for n >= 1, got {n}")
        return self.z(n + 1) * self.one_plus_b_inverse

    def commutator_tower(self, n: int) -> FreePoly:
        """v_n from the commutator definition: v_1 = [1+a, 1+b], v_{k+1} = [v_k, 1+b]."""
        if n < 1:
            raise InputError(f"v_n is defined for n >= 1, got {n}")
        self._check_z(n + 1)
        return self._tower_pair(n)[0]

    def _tower_pair(self, n: int) -> Tuple[FreePoly, FreePoly]:
        # [x, y] = x y x^-1 y^-1, so [x, y]^-1 = y x y^-1 x^-1
        if n not in self._tower:
            if n == 1:
                x, x_inv = self.one + self.a, self.one - self.a
            else:
                x, x_inv = self._tower_pair(n - 1)
            y, y_inv = self.one_plus_b, self.one_plus_b_inverse
            self._tower[n] = (x * y * x_inv * y_inv, y * x * y_inv * x_inv)
        return self._tower[n]


@lru_cache(maxsize=None)
def default_builder(field: CoefficientField = RATIONALS) -> ElementBuilder:
    return ElementBuilder(field)


def compute_w(n: int, field: CoefficientField = RATIONALS) -> FreePoly:
    return default_builder(field).w(n)


def compute_wbar(n: int, field: CoefficientField = RATIONALS) -> FreePoly:
    return default_builder(field).wbar(n)


def compute_z(n: int, field: CoefficientField = RATIONALS) -> FreePoly:
    return default_builder(field).z(n)


def compute_z_inverse(n: int, field: CoefficientField = RATIONALS) -> FreePoly:
    return default_builder(field).z_inverse(n)


def compute_v(n: int, field: CoefficientField = RATIONALS) -> FreePoly:
    return default_builder(field).v(n)
