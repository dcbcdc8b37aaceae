"""Reduced words in the free group of rank 2.

A letter is encoded as a nonzero int: ``1`` and ``-1`` are the first
generator and its inverse, ``2`` and ``-2`` the second.  The torus model
names the generators ``x, y`` and the Klein-bottle model ``u, v``; the
carrier is the same.
"""

from __future__ import annotations

import operator
import re
from typing import Iterable, Iterator, Sequence

from . import _kernels as K

G1 = 1
G2 = 2


class WordParseError(ValueError):
    """Malformed word text."""


class FreeWord:
    """An immutable, freely reduced word.

    Structural equality is group equality, since the stored letters are
    always in reduced form.
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = (), *, _reduced: bool = False):
        t = tuple(letters)
        if not _reduced:
            for c in t:
                if c not in (1, -1, 2, -2):
                    raise ValueError(f"invalid letter code {c!r}")
            t = K.reduce_letters(t)
        object.__setattr__(self, "letters", t)

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    def __reduce__(self):
        return (FreeWord._wrap, (self.letters,))

    @classmethod
    def _wrap(cls, letters: tuple) -> "FreeWord":
        return cls(letters, _reduced=True)

    @classmethod
    def identity(cls) -> "FreeWord":
        return _IDENTITY

    @classmethod
    def gen(cls, g: int, k: int = 1) -> "FreeWord":
        """``g**k`` for a generator code ``g`` in {1, 2}."""
        return cls._wrap((g,) * k if k >= 0 else (-g,) * (-k))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord._wrap(K.mul(self.letters, other.letters))

    def __invert__(self) -> "FreeWord":
        return FreeWord._wrap(K.inv(self.letters))

    inverse = __invert__

    def __pow__(self, k: int) -> "FreeWord":
        return FreeWord._wrap(K.power(self.letters, operator.index(k)))

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __lt__(self, other: "FreeWord") -> bool:
        return sort_key(self) < sort_key(other)

    def __repr__(self):
        return f"FreeWord({format_word(self)!r})"

    def __str__(self):
        return format_word(self)

    def invert_letters(self) -> "FreeWord":
        return FreeWord._wrap(K.flip(self.letters))

    def exponent_sum(self, g: int) -> int:
        return K.exp_sum(self.letters, g)

    def is_palindrome(self) -> bool:
        return K.is_palindrome(self.letters)

    def substitute(self, img1: "FreeWord", img2: "FreeWord") -> "FreeWord":
        """Apply the endomorphism sending the generators to ``img1`` and ``img2``."""
        return FreeWord._wrap(K.substitute(self.letters, img1.letters, img2.letters))

    def conjugate(self, c: "FreeWord") -> "FreeWord":
        """``c * self * c**-1``."""
        return c * self * ~c


_IDENTITY = FreeWord._wrap(())


# -- functional surface --------------------------------------------------------

def reduce(letters: Iterable[int]) -> FreeWord:
    return FreeWord(letters)


def multiply(w1: FreeWord, w2: FreeWord) -> FreeWord:
    return w1 * w2


def invert(w: FreeWord) -> FreeWord:
    return ~w


def invert_letters(w: FreeWord) -> FreeWord:
    """``w(g1^-1, g2^-1)``: flip every exponent sign, keep the order."""
    return w.invert_letters()


def exponent_sum(w: FreeWord, g: int) -> int:
    return w.exponent_sum(g)


def word_length(w: FreeWord) -> int:
    return len(w.letters)


def is_palindrome(w: FreeWord) -> bool:
    """True iff ``w == invert(invert_letters(w))``, i.e. w reads the same backwards."""
    return w.is_palindrome()


def sort_key(w: FreeWord) -> tuple:
    rank = {c: i for i, c in enumerate(K.LETTER_ORDER)}
    return (len(w.letters), tuple(rank[c] for c in w.letters))


def enumerate_reduced(max_length: int) -> Iterator[FreeWord]:
    """Every reduced word of length <= max_length, length first then lexicographic.

    The letter order is g1 < g1^-1 < g2 < g2^-1.
    """
    if max_length < 0:
        raise ValueError("max_length must be non-negative")
    for length in range(max_length + 1):
        for t in K.words_of_length(length):
            yield FreeWord._wrap(t)


def count_of_length(length: int) -> int:
    return 1 if length == 0 else 4 * 3 ** (length - 1)


# -- text format ---------------------------------------------------------------

_ATOM = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def parse_word(text: str, names: Sequence[str] = ("x", "y")) -> FreeWord:
    """Parse whitespace-separated atoms such as ``x y^-1 x^3``; ``1`` is the identity.

    Unreduced input is accepted and reduced.
    """
    codes = {names[0]: G1, names[1]: G2}
    letters: list[int] = []
    tokens = text.replace("*", " ").replace("·", " ").split()
    if not tokens:
        raise WordParseError("empty word (use '1' for the identity)")
    for tok in tokens:
        if tok == "1":
            continue
        m = _ATOM.match(tok)
        if not m or m.group(1) not in codes:
            raise WordParseError(f"bad atom {tok!r} (expected {names[0]}, {names[1]} with optional ^k)")
        g = codes[m.group(1)]
        k = int(m.group(2)) if m.group(2) is not None else 1
        letters.extend([g if k > 0 else -g] * abs(k))
    return FreeWord(letters)


def format_word(w: FreeWord, names: Sequence[str] = ("x", "y")) -> str:
    """Run-length collapsed text form; ``1`` for the identity."""
    if not w.letters:
        return "1"
    parts = []
    letters = w.letters
    i = 0
    while i < len(letters):
        c = letters[i]
        j = i
        while j < len(letters) and letters[j] == c:
            j += 1
        k = (j - i) * (1 if c > 0 else -1)
        name = names[abs(c) - 1]
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(parts)
