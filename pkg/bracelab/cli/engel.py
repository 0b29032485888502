"""
Free-algebra commands.

Commands:
- engel --word n: W_n with its length and letter counts
- engel --witness n: v_n != 1, cross-checked against z_{n+1} and the commutator tower
- engel --identity <name> n: one of the expansion identities, with a certificate
- engel --dump <element> n: an element in the polynomial dump format
"""

import logging
from typing import Callable, Dict

from ..core.exceptions import InputError
from ..services.engel.elements import default_builder
from ..services.engel.filtration import alternations, s_grading, t_membership
from ..services.engel.free_poly import FreePoly, dump_poly
from ..services.engel.words import alternates, letter_counts, word_W

logger = logging.getLogger(__name__)


def _max_alternations(poly: FreePoly) -> int:
    return max((alternations(m) for m in poly.monomials() if m), default=0)


def _t_identity(label: str, poly: FreePoly, n: int) -> int:
    j = 2**n - 3
    ok, worst = t_membership(poly, j)
    if ok:
        print(f"{label} in T({j}): verified ({len(poly)} terms, at most {_max_alternations(poly)} alternations)")
        return 0
    print(f"{label} in T({j}): FAILED, {worst} has {alternations(worst)} alternations")
    return 1


def identity_z_w(n: int) -> int:
    builder = default_builder()
    return _t_identity(f"z_{n} - w_{n} - 1", builder.z(n) - builder.w(n) - 1, n)


def identity_zinv_wbar(n: int) -> int:
    builder = default_builder()
    return _t_identity(f"z_{n}^-1 - wbar_{n} - 1", builder.z_inverse(n) - builder.wbar(n) - 1, n)


def identity_inverse(n: int) -> int:
    right, left = default_builder().inverse_products(n)
    ok = right == 1 and left == 1
    print(f"z_{n} * z_{n}^-1 = z_{n}^-1 * z_{n} = 1: {'verified' if ok else 'FAILED'}")
    return 0 if ok else 1


def identity_w_grading(n: int) -> int:
    w = default_builder().w(n)
    expected = (2 ** (n - 1) - 1, True)
    shape = s_grading(w).pure_shape()
    ok = shape == expected
    print(f"w_{n} in F*S^{expected[0]}*a: {'verified' if ok else f'FAILED (shape {shape})'} ({len(w)} terms)")
    return 0 if ok else 1


IDENTITIES: Dict[str, Callable[[int], int]] = {
    "z-w-t": identity_z_w,
    "zinv-wbar-t": identity_zinv_wbar,
    "inverse": identity_inverse,
    "w-grading": identity_w_grading,
}


def _elements() -> Dict[str, Callable[[int], FreePoly]]:
    builder = default_builder()
    return {
        "w": builder.w,
        "wbar": builder.wbar,
        "z": builder.z,
        "z-inverse": builder.z_inverse,
        "v": builder.v,
    }


def cmd_engel(args) -> int:
    if args.word is not None:
        w = word_W(args.word)
        print(str(w))
        print(f"length {len(w)}")
        print(" ".join(f"{letter.value}={count}" for letter, count in letter_counts(w).items()))
        print(f"alternating: {'yes' if alternates(w) else 'no'}")
        return 0

    if args.witness is not None:
        n = args.witness
        builder = default_builder()
        v = builder.v(n)
        nontrivial = v != 1
        factored = builder.z(n + 1) == v * builder.one_plus_b
        tower = builder.commutator_tower(n) == v
        print(f"v_{n} != 1: {'verified' if nontrivial else 'FAILED'} ({len(v)} terms)")
        print(f"z_{n + 1} = v_{n} (1 + b): {'verified' if factored else 'FAILED'}")
        print(f"v_{n} from the commutator tower: {'verified' if tower else 'FAILED'}")
        return 0 if nontrivial and factored and tower else 1

    if args.identity is not None:
        name, n = args.identity
        if name not in IDENTITIES:
            raise InputError(f"unknown identity {name!r}; choose from {', '.join(IDENTITIES)}")
        return IDENTITIES[name](_int(n))

    name, n = args.dump
    elements = _elements()
    if name not in elements:
        raise InputError(f"unknown element {name!r}; choose from {', '.join(elements)}")
    print(dump_poly(elements[name](_int(n))), end="")
    return 0


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"expected an integer, got {text!r}")


def register(subparsers) -> None:
    p = subparsers.add_parser("engel", help="Free-algebra computations modulo a^2 and b^3")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--word", type=int, metavar="N", help="Print W_N")
    mode.add_argument("--witness", type=int, metavar="N", help="Check v_N != 1")
    mode.add_argument("--identity", nargs=2, metavar=("NAME", "N"), help=f"One of: {', '.join(IDENTITIES)}")
    mode.add_argument("--dump", nargs=2, metavar=("ELEMENT", "N"), help="One of: w, wbar, z, z-inverse, v")
    p.set_defaults(handler=cmd_engel)
