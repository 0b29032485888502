"""
Catalog commands.

Commands:
- enumerate <order> [--chirality left|right] [--signature left-only|right-only]
  [--out [dir]] [--workers k]: one brace per isomorphism class, optionally
  narrowed to the one-sided witnesses and saved to a catalog directory
"""

import logging

from ..core.config import settings
from ..models.schemas import Signature
from ..models.structures import Chirality
from ..services.catalog.catalog_store import CatalogStore
from ..services.catalog.enumeration import BraceEnumerator

logger = logging.getLogger(__name__)


def _opt(value) -> str:
    return "-" if value is None else str(value)


def cmd_enumerate(args) -> int:
    enumerator = BraceEnumerator(workers=args.workers)
    entries = enumerator.enumerate(args.order, Chirality(args.chirality))
    shown = entries
    if args.signature is not None:
        wanted = Signature(args.signature)
        shown = [entry for entry in entries if entry.invariants.signature is wanted]

    for entry in shown:
        inv = entry.invariants
        print(
            f"{entry.path} {entry.fingerprint[:16]}"
            f" type={','.join(map(str, inv.additive_type)) or '-'}"
            f" nilpotent={'yes' if inv.adjoint_nilpotent else 'no'}"
            f" left={_opt(inv.left_vanishes_at)}"
            f" right={_opt(inv.right_vanishes_at)}"
            f" bracket={_opt(inv.bracket_vanishes_at)}"
            f" mpl={_opt(inv.multipermutation_level)}"
            f" two_sided={'yes' if inv.two_sided else 'no'}"
        )
    if shown is entries:
        print(f"{len(entries)} braces")
    else:
        print(f"{len(shown)} of {len(entries)} braces are {args.signature}")

    if args.out is not None and shown:
        index = CatalogStore(args.out).save(shown)
        logger.info(f"Catalog index written to {index}")
    return 0


def register(subparsers) -> None:
    p = subparsers.add_parser("enumerate", help="Enumerate braces of one order up to isomorphism")
    p.add_argument("order", type=int)
    p.add_argument("--chirality", choices=[c.value for c in Chirality], default=Chirality.LEFT.value)
    p.add_argument(
        "--signature",
        choices=[s.value for s in Signature],
        default=None,
        help="Keep braces where only the left (or only the right) powers vanish",
    )
    p.add_argument(
        "--out",
        nargs="?",
        const=settings.CATALOG_DIR,
        default=None,
        help=f"Save to a catalog directory (bare --out uses {settings.CATALOG_DIR})",
    )
    p.add_argument("--workers", type=int, default=None, help="Worker processes for the search")
    p.set_defaults(handler=cmd_enumerate)
