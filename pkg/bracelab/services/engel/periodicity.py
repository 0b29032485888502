"""
Factor complexity and eventual periodicity of finite words.

A word with fewer than n distinct factors of length n is eventually
periodic: it can be written c·d·d·...·d with |d| = n!, the last copy of d
possibly cut short.
"""

import logging
from math import factorial
from typing import Optional, Tuple, Union

from ...core.exceptions import InputError, VerificationFailure
from ...models.schemas import PeriodicDecomposition
from .words import Word

logger = logging.getLogger(__name__)

WordLike = Union[str, Word]


def _text(w: WordLike) -> str:
    return w.code if isinstance(w, Word) else w


def _render(w: WordLike, piece: str) -> str:
    return str(Word(piece)) if isinstance(w, Word) else piece


def distinct_subwords(w: WordLike, n: int) -> int:
    if n < 1:
        raise InputError(f"factor length must be positive, got {n}")
    s = _text(w)
    return len({s[i:i + n] for i in range(len(s) - n + 1)})


def _preperiod(s: str, t: int) -> int:
    """Smallest p with s[i] == s[i + t] for every i >= p."""
    p = len(s) - t
    while p > 0 and s[p - 1] == s[p - 1 + t]:
        p -= 1
    return max(p, 0)


def periodic_decomposition(w: WordLike, n: int) -> Optional[PeriodicDecomposition]:
    """c·d^k·(prefix of d) with |d| = n!, or None when w has at least n factors of length n.

    Among the periods t <= n (all of which divide n!), the one with the
    shortest preperiod is used; the result is verified by reconstruction.
    """
    s = _text(w)
    if distinct_subwords(s, n) >= n:
        return None
    block = factorial(n)
    if not s:
        return PeriodicDecomposition(prefix="", period="", repetitions=0, tail="", within_bound=True)

    best: Tuple[int, int] = min((_preperiod(s, t), t) for t in range(1, min(n, len(s)) + 1))
    p, t = best
    cycle = s[p:p + t]
    period = (cycle * (block // t + 1))[:block]
    rest = s[p:]
    reps = len(rest) // block
    decomposition = PeriodicDecomposition(
        prefix=_render(w, s[:p]),
        period=_render(w, period),
        repetitions=reps,
        tail=_render(w, rest[reps * block:]),
        within_bound=p < 2 * block,
    )
    if s[:p] + period * reps + rest[reps * block:] != s or not period.startswith(rest[reps * block:]):
        raise VerificationFailure("periodic decomposition does not reconstruct the word")
    return decomposition
