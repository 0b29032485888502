"""
Brace commands.

Commands:
- validate <file>: check the axioms; prints every violation
- info <file>: all catalog invariants and the fingerprint
- canon <file>: canonical fingerprint
- iso <file1> <file2>: an isomorphism, if one exists
"""

import logging

from ..core.exceptions import BraceValidationError
from ..services.braces.isomorphism import canonical_form, is_isomorphic
from ..services.catalog.brace_file import read_brace_file
from ..services.catalog.invariants import compute_invariants

logger = logging.getLogger(__name__)


def cmd_validate(args) -> int:
    try:
        brace = read_brace_file(args.file)
    except BraceValidationError as e:
        print("invalid")
        for line in e.report.lines():
            print(line)
        return 2
    print(f"valid {brace.chirality.value} brace of order {brace.order}")
    return 0


def cmd_info(args) -> int:
    brace = read_brace_file(args.file)
    record = compute_invariants(brace)
    for key, value in record.model_dump().items():
        print(f"{key}: {_fmt(value)}")
    print(f"fingerprint: {canonical_form(brace).fingerprint}")
    return 0


def cmd_canon(args) -> int:
    brace = read_brace_file(args.file)
    print(canonical_form(brace).fingerprint)
    return 0


def cmd_iso(args) -> int:
    b1, b2 = read_brace_file(args.file1), read_brace_file(args.file2)
    f = is_isomorphic(b1, b2)
    if f is None:
        print("not isomorphic")
        return 1
    print("isomorphic: " + " ".join(str(y) for y in f))
    return 0


def _fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return ",".join(str(v) for v in value) or "-"
    return str(value)


def register(subparsers) -> None:
    p = subparsers.add_parser("validate", help="Validate a brace file")
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    p = subparsers.add_parser("info", help="Print every invariant of a brace")
    p.add_argument("file")
    p.set_defaults(handler=cmd_info)

    p = subparsers.add_parser("canon", help="Print the canonical fingerprint")
    p.add_argument("file")
    p.set_defaults(handler=cmd_canon)

    p = subparsers.add_parser("iso", help="Test two braces for isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(handler=cmd_iso)
