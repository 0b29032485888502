"""
Error hierarchy.

- InputError: the caller handed in something that breaks a contract (CLI exit 2).
- VerificationFailure: an internal consistency check failed (CLI exit 1).
- Failed mathematical checks (braid relation, two-sided identity, infinite
  multipermutation level) are returned as values, not raised.
"""

from typing import Optional


class BraceLabError(Exception):
    """Base class for every error raised by bracelab."""


class InputError(BraceLabError):
    """A violated precondition; maps to exit code 2."""


class VerificationFailure(BraceLabError):
    """An internal check that should never fail did; maps to exit code 1."""


# brace-core
class TableShapeError(InputError):
    """Tables are not n x n or hold indices outside 0..n-1."""


class BraceValidationError(InputError):
    """The tables do not define a brace. Carries the full violation report."""

    def __init__(self, report):
        self.report = report
        kinds = ", ".join(sorted({v.kind.value for v in report.violations}))
        super().__init__(f"not a brace: {kinds}")


class WrongChirality(InputError):
    def __init__(self, expected: str, got: str):
        self.expected = expected
        self.got = got
        super().__init__(f"operation requires a {expected} brace, got a {got} brace")


class MixedChirality(InputError):
    """Summands of a direct sum disagree on chirality."""


class DifferentParents(InputError):
    """Subsets belong to different braces."""


class NotAnIdeal(InputError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"subset is not an ideal: {reason}")


class MembershipViolation(InputError):
    def __init__(self, element: int, term: int):
        self.element = element
        self.term = term
        super().__init__(f"element {element} is not in A^[{term}]")


# refused preconditions
class NotBracketNilpotent(InputError):
    """No s with A^[s] = 0."""


class NotLeftNilpotent(InputError):
    """No s with A^s = 0."""


class AdjointNotNilpotent(InputError):
    """The adjoint group is not nilpotent."""


# ybe
class InducedMapIllDefined(VerificationFailure):
    def __init__(self, x: int, y: int, detail: str = ""):
        self.x = x
        self.y = y
        super().__init__(f"retraction is not well defined at ({x}, {y}) {detail}".rstrip())


# engel-lab
class FieldMismatch(InputError):
    """Polynomials over different coefficient fields were combined."""


class TooLarge(InputError):
    def __init__(self, what: str, value: int, bound: int):
        self.what = what
        self.value = value
        self.bound = bound
        super().__init__(f"{what}={value} exceeds the feasibility bound {bound}")


class MalformedEntries(InputError):
    def __init__(self, row: int, col: int, detail: Optional[str] = None):
        self.row = row
        self.col = col
        super().__init__(f"matrix entry ({row}, {col}) is not in the S^m span" + (f": {detail}" if detail else ""))


# cli-catalog
class BoundExceeded(InputError):
    def __init__(self, order: int, bound: int):
        self.order = order
        self.bound = bound
        super().__init__(f"order {order} exceeds the enumeration bound {bound}")


class BraceFileError(InputError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
