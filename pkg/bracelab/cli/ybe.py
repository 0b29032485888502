"""
Yang-Baxter commands.

Commands:
- ybe <file> --check: braid relation, involutivity and non-degeneracy
- ybe <file> --export: the solution in the 'solution <size>' format
- ybe <file> --mpl: multipermutation level (or 'infinite')
"""

import logging

from ..services.catalog.brace_file import read_brace_file, serialize_solution
from ..services.ybe.retraction import multipermutation_level
from ..services.ybe.solutions import check_braid, check_involutive, check_nondegenerate, solution_from_brace

logger = logging.getLogger(__name__)


def cmd_ybe(args) -> int:
    brace = read_brace_file(args.file)
    sol = solution_from_brace(brace)

    if args.export:
        print(serialize_solution(sol), end="")
        return 0

    if args.mpl:
        result = multipermutation_level(sol)
        print(result.level if result.finite else "infinite")
        return 0

    failed = False
    for check in (check_braid(sol), check_involutive(sol), check_nondegenerate(sol)):
        if check.passed:
            print(f"{check.name}: pass")
        else:
            failed = True
            print(f"{check.name}: fail at {check.counterexample}" + (f" ({check.detail})" if check.detail else ""))
    return 1 if failed else 0


def register(subparsers) -> None:
    p = subparsers.add_parser("ybe", help="Work with the solution of a left brace")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--check", action="store_true", help="Verify the solution (default)")
    mode.add_argument("--export", action="store_true", help="Print the solution tables")
    mode.add_argument("--mpl", action="store_true", help="Print the multipermutation level")
    p.set_defaults(handler=cmd_ybe)
