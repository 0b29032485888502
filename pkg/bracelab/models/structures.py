"""
Immutable algebraic structures shared by every service.

- FiniteBrace: additive and multiplicative Cayley tables plus a chirality flag.
- BraceSubset: a set of element indices of a brace with its certification level.
- SeriesChain: one of the radical chains A^n, A^(n), A^[n].
- FiniteGroup: a group given by its Cayley table (identity is index 0).
- SetSolution: a map r(x, y) = (sigma_x(y), tau_y(x)) stored as permutations.

All models are frozen; derived tables are cached on first use.
"""

from enum import Enum, IntEnum
from functools import cached_property
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..core.exceptions import TableShapeError

Table = Tuple[Tuple[int, ...], ...]


class Chirality(str, Enum):
    LEFT = "left"
    RIGHT = "right"

    def flipped(self) -> "Chirality":
        return Chirality.RIGHT if self is Chirality.LEFT else Chirality.LEFT


class Certification(IntEnum):
    RAW = 0
    ADDITIVE_SUBGROUP = 1
    IDEAL = 2


class SeriesKind(str, Enum):
    LEFT_POWERS = "left"  # A^{n+1} = A . A^n
    RIGHT_POWERS = "right"  # A^{(n+1)} = A^{(n)} . A
    BRACKET = "bracket"  # A^{[n+1]} = sum A^{[i]} . A^{[n+1-i]}

    def mirrored(self) -> "SeriesKind":
        if self is SeriesKind.LEFT_POWERS:
            return SeriesKind.RIGHT_POWERS
        if self is SeriesKind.RIGHT_POWERS:
            return SeriesKind.LEFT_POWERS
        return self


def check_square(table: Table, order: int, name: str) -> None:
    if len(table) != order:
        raise TableShapeError(f"{name} has {len(table)} rows, expected {order}")
    for i, row in enumerate(table):
        if len(row) != order:
            raise TableShapeError(f"{name} row {i} has {len(row)} entries, expected {order}")
        for j, entry in enumerate(row):
            if not 0 <= entry < order:
                raise TableShapeError(f"{name}[{i}][{j}] = {entry} is outside 0..{order - 1}")


class FiniteBrace(BaseModel):
    """A finite left or right brace on the indices 0..order-1 (0 is the additive identity).

    Instances handed out by the services are certified: they were produced by
    `validate` or by a construction that preserves the axioms. The model
    itself only checks table shapes.
    """

    model_config = ConfigDict(frozen=True)

    order: int
    add_table: Table
    mul_table: Table
    chirality: Chirality = Chirality.LEFT

    @model_validator(mode="after")
    def _check_shapes(self) -> "FiniteBrace":
        if self.order < 1:
            raise TableShapeError(f"order must be positive, got {self.order}")
        check_square(self.add_table, self.order, "add_table")
        check_square(self.mul_table, self.order, "mul_table")
        return self

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def is_left(self) -> bool:
        return self.chirality is Chirality.LEFT

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.negation[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.negation[b]]

    def circle(self, a: int, b: int) -> int:
        return self.circle_table[a][b]

    def inverse(self, a: int) -> int:
        return self.adjoint_inverse[a]

    @cached_property
    def negation(self) -> Tuple[int, ...]:
        neg = []
        for a in self.elements:
            row = self.add_table[a]
            neg.append(next((b for b in self.elements if row[b] == 0), -1))
        return tuple(neg)

    @cached_property
    def circle_table(self) -> Table:
        add = self.add_table
        return tuple(
            tuple(add[add[self.mul_table[a][b]][a]][b] for b in self.elements)
            for a in self.elements
        )

    @cached_property
    def adjoint_inverse(self) -> Tuple[int, ...]:
        circ = self.circle_table
        return tuple(
            next((b for b in self.elements if circ[a][b] == 0), -1)
            for a in self.elements
        )


class BraceSubset(BaseModel):
    """A subset of element indices (sorted, duplicate-free, always containing 0)."""

    model_config = ConfigDict(frozen=True)

    parent: FiniteBrace
    members: Tuple[int, ...]
    certification: Certification = Certification.RAW

    @model_validator(mode="after")
    def _check_members(self) -> "BraceSubset":
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be sorted and duplicate-free")
        if not self.members or self.members[0] != 0:
            raise ValueError("members must contain 0")
        if self.members[-1] >= self.parent.order:
            raise ValueError(f"member {self.members[-1]} is outside the brace")
        return self

    @cached_property
    def member_set(self) -> frozenset:
        return frozenset(self.members)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_zero(self) -> bool:
        return self.members == (0,)

    def __contains__(self, element: int) -> bool:
        return element in self.member_set

    def issubset(self, other: "BraceSubset") -> bool:
        return self.member_set <= other.member_set


class SeriesChain(BaseModel):
    """A radical chain; terms[k] is the term with index k+1 (terms[0] = A)."""

    model_config = ConfigDict(frozen=True)

    kind: SeriesKind
    terms: Tuple[BraceSubset, ...]
    vanishes_at: Optional[int] = None

    @property
    def vanishes(self) -> bool:
        return self.vanishes_at is not None

    def term(self, index: int) -> BraceSubset:
        """Term at the 1-based `index`, extended past the computed range."""
        if index < 1:
            raise ValueError(f"indices start at 1, got {index}")
        if index <= len(self.terms):
            return self.terms[index - 1]
        return self.terms[-1]


class FiniteGroup(BaseModel):
    """A finite group given by its Cayley table; index 0 is the identity."""

    model_config = ConfigDict(frozen=True)

    order: int
    table: Table

    @model_validator(mode="after")
    def _check_shape(self) -> "FiniteGroup":
        check_square(self.table, self.order, "group table")
        return self

    @property
    def elements(self) -> range:
        return range(self.order)

    def op(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    @cached_property
    def inverse(self) -> Tuple[int, ...]:
        return tuple(
            next((h for h in self.elements if self.table[g][h] == 0), -1)
            for g in self.elements
        )

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[g][h] == t[h][g] for g in self.elements for h in range(g))


class SetSolution(BaseModel):
    """r(x, y) = (sigma[x][y], tau[y][x]) on X = {0..size-1}."""

    model_config = ConfigDict(frozen=True)

    size: int
    sigma: Table
    tau: Table
    labels: Optional[Tuple[str, ...]] = None

    @model_validator(mode="after")
    def _check_shape(self) -> "SetSolution":
        check_square(self.sigma, self.size, "sigma")
        check_square(self.tau, self.size, "tau")
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError(f"{len(self.labels)} labels for {self.size} points")
        return self

    def apply(self, x: int, y: int) -> Tuple[int, int]:
        return self.sigma[x][y], self.tau[y][x]

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)
