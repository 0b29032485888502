"""
Words over the alphabet {A, B, A', B'}.

- W_1 = A, W_{n+1} = W_n B bar(W_n), where bar swaps A <-> A', B <-> B'
  and reverses the word.
- Letter counts, the alternation property and parsing from ASCII ("A'", "B'").

Words are stored as a code string, one character per letter: A, B for the
plain letters and a, b for the primed ones.
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import Dict, Optional

from ...core.config import settings
from ...core.exceptions import InputError, TooLarge

logger = logging.getLogger(__name__)


class Letter(str, Enum):
    A = "A"
    B = "B"
    A_PRIME = "A'"
    B_PRIME = "B'"

    @property
    def code(self) -> str:
        return _CODES[self]


_CODES = {Letter.A: "A", Letter.B: "B", Letter.A_PRIME: "a", Letter.B_PRIME: "b"}
_LETTERS = {code: letter for letter, code in _CODES.items()}
_BAR = str.maketrans("ABab", "abAB")


class Word:
    """An immutable word; equality and hashing go through the code string."""

    __slots__ = ("code",)

    def __init__(self, code: str = ""):
        if any(ch not in _LETTERS for ch in code):
            raise InputError(f"invalid letter code in {code!r}")
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.code)

    def __iter__(self):
        return (_LETTERS[ch] for ch in self.code)

    def __getitem__(self, i) -> Letter:
        return _LETTERS[self.code[i]]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.code + other.code)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    def __str__(self) -> str:
        return "".join(_LETTERS[ch].value for ch in self.code)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def bar(self) -> "Word":
        return Word(self.code.translate(_BAR)[::-1])


def parse_word(text: str) -> Word:
    """Parse "ABA'B'..." (a prime may also be written as ′)."""
    text = text.replace("′", "'")
    codes = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch not in "AB":
            raise InputError(f"unexpected character {ch!r} at position {i}")
        primed = i + 1 < len(text) and text[i + 1] == "'"
        codes.append(ch.lower() if primed else ch)
        i += 2 if primed else 1
    return Word("".join(codes))


def word_bar(w: Word) -> Word:
    return w.bar()


@lru_cache(maxsize=32)
def _word(n: int) -> Word:
    if n == 1:
        return Word("A")
    prev = _word(n - 1)
    return Word(prev.code + "B" + prev.bar().code)


def word_W(n: int, max_n: Optional[int] = None) -> Word:
    """W_n, of length 2^n - 1."""
    max_n = max_n if max_n is not None else settings.ENGEL_MAX_WORD_N
    if n < 1:
        raise InputError(f"W_n is defined for n >= 1, got {n}")
    if n > max_n:
        raise TooLarge("n", n, max_n)
    return _word(n)


def letter_counts(w: Word) -> Dict[Letter, int]:
    return {letter: w.code.count(letter.code) for letter in Letter}


def alternates(w: Word) -> bool:
    """After A or A' comes B or B', and after B or B' comes A or A'."""
    kinds = w.code.upper()
    return "AA" not in kinds and "BB" not in kinds
