"""The infinite dihedral Weyl group W = <s, t | s^2 = t^2 = 1>.

Every element has a unique reduced word, which is an alternating string in
the letters s, t; an element is therefore determined by its length together
with its first letter.  Multiplication, inversion, descents and the Bruhat
order are all decided by short case analysis on this normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

_OTHER = {"s": "t", "t": "s"}


@dataclass(frozen=True)
class WeylWord:
    """Element of the infinite dihedral group in normal form.

    >>> WeylWord(3, "s").letters
    'sts'
    >>> WeylWord.parse("stst") * WeylWord.parse("ts")
    st
    """

    length: int
    first: str | None = None

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.length == 0:
            if self.first is not None:
                raise ValueError("the identity has no first letter")
        elif self.first not in ("s", "t"):
            raise ValueError(f"first letter must be 's' or 't', not {self.first!r}")

    @classmethod
    def identity(cls) -> WeylWord:
        return cls(0, None)

    @classmethod
    def parse(cls, text: str) -> WeylWord:
        """Parse "e" or a reduced alternating string; reject anything else."""
        if text == "e":
            return cls(0, None)
        if not text or any(ch not in "st" for ch in text):
            raise ValueError(f"not a Weyl word: {text!r}")
        for a, b in zip(text, text[1:]):
            if a == b:
                raise ValueError(f"not a reduced alternating word: {text!r}")
        return cls(len(text), text[0])

    @property
    def letters(self) -> str:
        if self.length == 0:
            return ""
        out = []
        letter = self.first
        for _ in range(self.length):
            out.append(letter)
            letter = _OTHER[letter]
        return "".join(out)

    @property
    def last(self) -> str | None:
        if self.length == 0:
            return None
        return self.first if self.length % 2 == 1 else _OTHER[self.first]

    def inverse(self) -> WeylWord:
        # reversing an alternating string gives the alternating string
        # starting from the old last letter
        if self.length == 0:
            return self
        return WeylWord(self.length, self.last)

    def __mul__(self, other: WeylWord) -> WeylWord:
        return word_mul(self, other)

    def __str__(self) -> str:
        return "e" if self.length == 0 else self.letters

    def __repr__(self) -> str:
        return str(self)


E = WeylWord.identity()
S = WeylWord(1, "s")
T = WeylWord(1, "t")


def word_mul(x: WeylWord, y: WeylWord) -> WeylWord:
    """Product in normal form.

    Once the boundary letters match, cancellation telescopes until the
    shorter factor is exhausted, so the case analysis is O(1).

    >>> word_mul(S, S)
    e
    >>> word_mul(WeylWord.parse("st"), WeylWord.parse("st"))
    stst
    """
    if x.length == 0:
        return y
    if y.length == 0:
        return x
    if x.last != y.first:
        return WeylWord(x.length + y.length, x.first)
    if x.length > y.length:
        return WeylWord(x.length - y.length, x.first)
    if x.length < y.length:
        # the first x.length letters of y are consumed
        rest_first = y.first if x.length % 2 == 0 else _OTHER[y.first]
        return WeylWord(y.length - x.length, rest_first)
    return E


def lengths_add(x: WeylWord, y: WeylWord) -> bool:
    """True iff l(xy) = l(x) + l(y)."""
    return word_mul(x, y).length == x.length + y.length


def bruhat_leq(x: WeylWord, w: WeylWord) -> bool:
    """Subword criterion: x <= w iff the reduced word of x is a subsequence
    of the reduced word of w.

    >>> bruhat_leq(S, WeylWord.parse("sts"))
    True
    >>> bruhat_leq(WeylWord.parse("stst"), WeylWord.parse("sts"))
    False
    """
    if x.length > w.length:
        return False
    it = iter(w.letters)
    return all(ch in it for ch in x.letters)


def st_power(n: int) -> WeylWord:
    """(st)^n for n >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return E if n == 0 else WeylWord(2 * n, "s")


def ts_power(n: int) -> WeylWord:
    """(ts)^n for n >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return E if n == 0 else WeylWord(2 * n, "t")


def all_words(max_length: int):
    """All group elements of length <= max_length, shortest first."""
    yield E
    for n in range(1, max_length + 1):
        yield WeylWord(n, "s")
        yield WeylWord(n, "t")
