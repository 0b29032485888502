"""
Series commands.

Commands:
- series <file> --kind left|right|bracket: terms of A^n, A^(n) or A^[n]
- decompose <file>: primary decomposition (adjoint group must be nilpotent)
"""

import logging

from ..models.structures import SeriesKind
from ..services.braces.operations import additive_type
from ..services.catalog.brace_file import read_brace_file
from ..services.groups.decomposition import p_decomposition
from ..services.series.chains import chain_mirrored

logger = logging.getLogger(__name__)

_SYMBOLS = {
    SeriesKind.LEFT_POWERS: "A^{}",
    SeriesKind.RIGHT_POWERS: "A^({})",
    SeriesKind.BRACKET: "A^[{}]",
}


def cmd_series(args) -> int:
    brace = read_brace_file(args.file)
    kind = SeriesKind(args.kind)
    result = chain_mirrored(brace, kind)
    for k, term in enumerate(result.terms, start=1):
        members = " ".join(str(x) for x in term.members)
        print(f"{_SYMBOLS[kind].format(k)} size={term.size} {term.certification.name.lower()}: {members}")
    if result.vanishes:
        print(f"vanishes at {result.vanishes_at}")
    else:
        print(f"stabilizes at size {result.terms[-1].size}")
    return 0


def cmd_decompose(args) -> int:
    brace = read_brace_file(args.file)
    for p, part in p_decomposition(brace):
        print(f"p={p} order={part.order} type={','.join(map(str, additive_type(part))) or '-'}")
    return 0


def register(subparsers) -> None:
    p = subparsers.add_parser("series", help="Compute a radical chain")
    p.add_argument("file")
    p.add_argument("--kind", choices=[k.value for k in SeriesKind], default=SeriesKind.LEFT_POWERS.value)
    p.set_defaults(handler=cmd_series)

    p = subparsers.add_parser("decompose", help="Split into braces of prime-power order")
    p.add_argument("file")
    p.set_defaults(handler=cmd_decompose)
