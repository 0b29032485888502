"""
Sparse noncommutative polynomials in a, b modulo a^2 = 0 and b^3 = 0.

- Monomials are strings over {a, b}; a monomial containing "aa" or "bbb" is zero.
- The empty string is the constant term (the unital extension R^1).
- Coefficients live in an exact sympy domain: QQ, or GF(p) for cross-checks.
"""

import logging
import re
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_validator
from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ

from ...core.exceptions import FieldMismatch, InputError

logger = logging.getLogger(__name__)

_MONOMIAL = re.compile(r"^[ab]*$")


@lru_cache(maxsize=None)
def _domain(characteristic: int):
    return QQ if characteristic == 0 else GF(characteristic, symmetric=False)


class CoefficientField(BaseModel):
    """Exact rationals (characteristic 0) or the prime field GF(p)."""

    model_config = ConfigDict(frozen=True)

    characteristic: int = 0

    @field_validator("characteristic")
    @classmethod
    def _prime_or_zero(cls, p: int) -> int:
        if p != 0 and not isprime(p):
            raise ValueError(f"characteristic must be 0 or a prime, got {p}")
        return p

    @property
    def domain(self):
        return _domain(self.characteristic)

    def convert(self, value):
        if isinstance(value, str):
            return self.domain.from_sympy(Rational(value))
        return self.domain.convert(value)

    def format(self, c) -> str:
        return str(self.domain.to_sympy(c))

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


RATIONALS = CoefficientField()

Scalar = Union[int, str, object]


def is_reduced(monomial: str) -> bool:
    return "aa" not in monomial and "bbb" not in monomial


def _tail(m: str) -> Tuple[str, int]:
    if not m:
        return "", 0
    if m[-1] == "a":
        return "a", 0
    return "b", len(m) - len(m.rstrip("b"))


def _head(m: str) -> Tuple[str, int]:
    if not m:
        return "", 0
    if m[0] == "a":
        return "a", 0
    return "b", len(m) - len(m.lstrip("b"))


def _compatible(tail: Tuple[str, int], head: Tuple[str, int]) -> bool:
    """Does a monomial ending in `tail` times one starting with `head` survive reduction?"""
    if tail[0] == "a" and head[0] == "a":
        return False
    if tail[0] == "b" and head[0] == "b" and tail[1] + head[1] >= 3:
        return False
    return True


class FreePoly:
    """An immutable element of F<a, b>/(a^2, b^3) with optional constant term."""

    __slots__ = ("_terms", "field")

    def __init__(self, terms: Optional[Mapping[str, object]] = None, field: CoefficientField = RATIONALS):
        clean: Dict[str, object] = {}
        for m, c in (terms or {}).items():
            if not _MONOMIAL.match(m):
                raise InputError(f"monomial {m!r} is not a word in a, b")
            c = field.convert(c)
            if c and is_reduced(m):
                clean[m] = c
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FreePoly is immutable")

    @classmethod
    def _raw(cls, terms: Dict[str, object], field: CoefficientField) -> "FreePoly":
        """Wrap an already reduced, zero-free dict without copying."""
        poly = cls.__new__(cls)
        object.__setattr__(poly, "_terms", terms)
        object.__setattr__(poly, "field", field)
        return poly

    # constructors
    @classmethod
    def zero(cls, field: CoefficientField = RATIONALS) -> "FreePoly":
        return cls._raw({}, field)

    @classmethod
    def one(cls, field: CoefficientField = RATIONALS) -> "FreePoly":
        return cls._raw({"": field.domain.one}, field)

    @classmethod
    def monomial(cls, m: str, coeff: Scalar = 1, field: CoefficientField = RATIONALS) -> "FreePoly":
        return cls({m: coeff}, field)

    @classmethod
    def generator(cls, name: str, field: CoefficientField = RATIONALS) -> "FreePoly":
        if name not in ("a", "b"):
            raise InputError(f"unknown generator {name!r}")
        return cls.monomial(name, 1, field)

    # inspection
    @property
    def terms(self) -> Dict[str, object]:
        """Non-constant terms."""
        return {m: c for m, c in self._terms.items() if m}

    @property
    def constant(self):
        return self._terms.get("", self.field.domain.zero)

    def items(self) -> Iterator[Tuple[str, object]]:
        return iter(self._terms.items())

    def coefficient(self, m: str):
        return self._terms.get(m, self.field.domain.zero)

    def monomials(self) -> List[str]:
        return sorted(self._terms, key=lambda m: (len(m), m))

    def without_constant(self) -> "FreePoly":
        return FreePoly._raw(self.terms, self.field)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((len(m) for m in self._terms), default=-1)

    def __len__(self) -> int:
        return len(self._terms)

    # arithmetic
    def _coerce(self, other) -> "FreePoly":
        if isinstance(other, FreePoly):
            if other.field != self.field:
                raise FieldMismatch(f"cannot combine polynomials over {self.field} and {other.field}")
            return other
        return FreePoly({"": other}, self.field)

    def __add__(self, other) -> "FreePoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out[m] + c if m in out else c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return FreePoly._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self) -> "FreePoly":
        return FreePoly._raw({m: -c for m, c in self._terms.items()}, self.field)

    def __sub__(self, other) -> "FreePoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FreePoly":
        return self._coerce(other) - self

    def scale(self, scalar: Scalar) -> "FreePoly":
        s = self.field.convert(scalar)
        if not s:
            return FreePoly.zero(self.field)
        return FreePoly._raw({m: c * s for m, c in self._terms.items()}, self.field)

    def __mul__(self, other) -> "FreePoly":
        if not isinstance(other, FreePoly):
            return self.scale(other)
        other = self._coerce(other)
        left: Dict[Tuple[str, int], List[Tuple[str, object]]] = {}
        for m, c in self._terms.items():
            left.setdefault(_tail(m), []).append((m, c))
        right: Dict[Tuple[str, int], List[Tuple[str, object]]] = {}
        for m, c in other._terms.items():
            right.setdefault(_head(m), []).append((m, c))

        out: Dict[str, object] = {}
        for tail, lterms in left.items():
            for head, rterms in right.items():
                if not _compatible(tail, head):
                    continue
                for m1, c1 in lterms:
                    for m2, c2 in rterms:
                        m = m1 + m2
                        out[m] = out[m] + c1 * c2 if m in out else c1 * c2
        return FreePoly._raw({m: c for m, c in out.items() if c}, self.field)

    def __rmul__(self, other) -> "FreePoly":
        return self.scale(other)

    def __pow__(self, k: int) -> "FreePoly":
        if k < 0:
            raise InputError("negative powers are not defined")
        result = FreePoly.one(self.field)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, FreePoly):
            return self.field == other.field and self._terms == other._terms
        if isinstance(other, int):
            return self == FreePoly({"": other}, self.field)
        return NotImplemented

    __hash__ = None

    def __repr__(self) -> str:
        if self.is_zero:
            return "FreePoly(0)"
        return "FreePoly(" + " + ".join(f"{self.field.format(self._terms[m])}*{m or '1'}" for m in self.monomials()) + ")"


def poly_sum(polys: Iterable[FreePoly], field: CoefficientField = RATIONALS) -> FreePoly:
    total = FreePoly.zero(field)
    for p in polys:
        total = total + p
    return total


def dump_poly(poly: FreePoly) -> str:
    """One line per monomial, '<coefficient> <monomial>', by degree then lexicographically.

    The constant term is written with monomial '1'.
    """
    lines = [f"{poly.field.format(poly.coefficient(m))} {m or '1'}" for m in poly.monomials()]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_poly_dump(text: str, field: CoefficientField = RATIONALS) -> FreePoly:
    terms: Dict[str, object] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected '<coefficient> <monomial>'")
        coeff, m = parts
        m = "" if m == "1" else m
        if m in terms:
            raise InputError(f"line {lineno}: monomial {parts[1]} repeated")
        terms[m] = field.convert(coeff)
    return FreePoly(terms, field)
