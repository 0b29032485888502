"""
Coefficient spaces of polynomial matrices.

A matrix M has entries in S^m·F[x] (x a central indeterminate); P(M) is the
span of every coefficient of every entry. Spaces are computed exactly by
row reduction over the monomial coordinates with sympy's DomainMatrix.

If r = r1 r2 r3 with each r_i a product of n_i elements of F·S^m and
r lies in P(M^(n1+n2+n3)), then every r_i lies in P(M^(n_i)).
"""

import logging
import re
from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict
from sympy.polys.matrices import DomainMatrix

from ...core.config import settings
from ...core.exceptions import InputError, MalformedEntries, TooLarge, VerificationFailure
from ...models.schemas import FactorMembershipResult
from .free_poly import RATIONALS, CoefficientField, FreePoly

logger = logging.getLogger(__name__)

_S_WORD = re.compile(r"^(?:abb?)+$")


class XPoly:
    """A polynomial in the central indeterminate x with FreePoly coefficients."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Optional[Dict[int, FreePoly]] = None, field: CoefficientField = RATIONALS):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if not c.is_zero}
        self.field = field

    def __add__(self, other: "XPoly") -> "XPoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return XPoly(out, self.field)

    def __mul__(self, other: "XPoly") -> "XPoly":
        out: Dict[int, FreePoly] = {}
        for i, p in self.coeffs.items():
            for j, q in other.coeffs.items():
                pq = p * q
                out[i + j] = out[i + j] + pq if i + j in out else pq
        return XPoly(out, self.field)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs


Matrix = List[List[XPoly]]


def identity_matrix(size: int, field: CoefficientField = RATIONALS) -> Matrix:
    return [[XPoly({0: FreePoly.one(field)} if i == j else {}, field) for j in range(size)] for i in range(size)]


def matmul(x: Matrix, y: Matrix) -> Matrix:
    size = len(x)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = XPoly({}, x[i][0].field)
            for k in range(size):
                acc = acc + x[i][k] * y[k][j]
            row.append(acc)
        out.append(row)
    return out


def s_power(poly: FreePoly) -> Optional[int]:
    """m if every monomial of poly is a product of m factors ab / ab^2, else None."""
    degrees = set()
    for m, _ in poly.items():
        if not _S_WORD.match(m):
            return None
        degrees.add(m.count("a"))
    return degrees.pop() if len(degrees) == 1 else None


class CoeffSpace(BaseModel):
    """A basis of P(M^power) in reduced row echelon form over the monomial coordinates."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    basis: List[FreePoly]
    size: int
    power: int
    field: CoefficientField

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, poly: FreePoly) -> bool:
        if poly.is_zero:
            return True
        if not self.basis:
            return False
        return _rank(self.basis + [poly], self.field) == len(self.basis)


def _coordinates(polys: Sequence[FreePoly], field: CoefficientField):
    monomials = sorted({m for p in polys for m, _ in p.items()}, key=lambda m: (len(m), m))
    dom = field.domain
    rows = [[p.coefficient(m) for m in monomials] for p in polys]
    return DomainMatrix(rows, (len(polys), len(monomials)), dom), monomials


def _rank(polys: Sequence[FreePoly], field: CoefficientField) -> int:
    matrix, monomials = _coordinates(polys, field)
    if not monomials:
        return 0
    return matrix.rank()


def _check_matrix(matrix: Matrix) -> int:
    """Validate the shape and return the common S-power m of the entries (0 if all zero)."""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise InputError("coefficient spaces need a square matrix")
    m_common = None
    for i, row in enumerate(matrix):
        for j, entry in enumerate(row):
            for k, c in entry.coeffs.items():
                if k < 0:
                    raise MalformedEntries(i, j, f"negative power of x ({k})")
                m = s_power(c)
                if m is None:
                    raise MalformedEntries(i, j, f"coefficient of x^{k} is not homogeneous in S")
                if m_common is not None and m != m_common:
                    raise MalformedEntries(i, j, f"S-power {m} differs from {m_common}")
                m_common = m
    return m_common or 0


def matrix_power(matrix: Matrix, k: int) -> Matrix:
    result = identity_matrix(len(matrix), matrix[0][0].field if matrix else RATIONALS)
    for _ in range(k):
        result = matmul(result, matrix)
    return result


def coeff_space(
    matrix: Matrix,
    k: int,
    field: CoefficientField = RATIONALS,
    max_dim: Optional[int] = None,
    max_power: Optional[int] = None,
) -> CoeffSpace:
    """Basis of P(M^k); k = 0 gives span{1}."""
    max_dim = max_dim if max_dim is not None else settings.COEFF_MAX_DIM
    max_power = max_power if max_power is not None else settings.COEFF_MAX_POWER
    size = len(matrix)
    if size > max_dim:
        raise TooLarge("dimension", size, max_dim)
    if k > max_power:
        raise TooLarge("power", k, max_power)
    if k < 0:
        raise InputError(f"power must be non-negative, got {k}")
    _check_matrix(matrix)

    if k == 0:
        return CoeffSpace(basis=[FreePoly.one(field)], size=size, power=0, field=field)

    coefficients = [c for row in matrix_power(matrix, k) for entry in row for c in entry.coeffs.values()]
    if not coefficients:
        return CoeffSpace(basis=[], size=size, power=k, field=field)

    coords, monomials = _coordinates(coefficients, field)
    reduced, pivots = coords.rref()
    rows = reduced.to_list()[: len(pivots)]
    basis = [FreePoly(dict(zip(monomials, row)), field) for row in rows]
    if _rank(basis, field) != len(basis):
        raise VerificationFailure("row-reduced basis is not linearly independent")
    logger.debug(f"P(M^{k}) for a {size}x{size} matrix has dimension {len(basis)}")
    return CoeffSpace(basis=basis, size=size, power=k, field=field)


def _product(factors: Sequence[FreePoly], field: CoefficientField) -> FreePoly:
    result = FreePoly.one(field)
    for f in factors:
        result = result * f
    return result


def factor_membership_check(
    matrix: Matrix,
    factors: Sequence[Sequence[FreePoly]],
    field: CoefficientField = RATIONALS,
) -> FactorMembershipResult:
    """Test r = r1 r2 r3 in P(M^(n1+n2+n3)) and, when it holds, each r_i in P(M^(n_i)).

    factors[i] lists the n_i elements of F·S^m whose product is r_i.
    """
    if len(factors) != 3:
        raise InputError("expected exactly three factor lists")
    m = _check_matrix(matrix)
    for group in factors:
        for c in group:
            if c.is_zero or s_power(c) != m:
                raise InputError(f"factor {c!r} is not a nonzero element of F·S^{m}")

    exponents = tuple(len(group) for group in factors)
    parts = [_product(group, field) for group in factors]
    r = _product(parts, field)
    hypothesis = coeff_space(matrix, sum(exponents), field).contains(r)
    in_span = [coeff_space(matrix, n, field).contains(p) for n, p in zip(exponents, parts)] if hypothesis else []
    return FactorMembershipResult(exponents=exponents, hypothesis=hypothesis, factors_in_span=in_span)
