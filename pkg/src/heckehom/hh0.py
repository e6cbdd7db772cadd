"""The trace quotient HH0 = A/[A,A] of the Hecke algebra.

The quotient has basis {[T_s], [T_t], [T_{(st)^n}] : n >= 0}; the class of
T_e is the n = 0 entry.  Reduction of an arbitrary element to this basis is
a terminating rewriting procedure on basis words:

  * an even word is a cyclic rotation of (st)^n when lengths add, so its
    class is [T_{(st)^n}];
  * rotating the first letter of an odd word to the back creates an
    adjacent repeated generator, and the quadratic relation then strictly
    shortens the word:  [T_{g(hg)^m}] = (q-1) [T_{(st)^m}] + q [T_{h(gh)^{m-1}}].

Each quadratic step reduces length by two, so the rewriting terminates.
"""

from __future__ import annotations

from .laurent import LaurentQ, ONE, ZERO, Q
from .weyl import WeylWord, _OTHER
from .hecke import HeckeElement

_Q_MINUS_1 = Q - 1


class HH0Class:
    """Element of HH0 in the canonical basis.

    Stored as the [T_s] coefficient, the [T_t] coefficient, and a sparse
    mapping n -> coefficient of [T_{(st)^n}] (n = 0 is the class of T_e).
    """

    __slots__ = ("coeff_s", "coeff_t", "_even")

    def __init__(self, coeff_s=ZERO, coeff_t=ZERO, even=None):
        self.coeff_s = coeff_s if isinstance(coeff_s, LaurentQ) else LaurentQ.const(coeff_s)
        self.coeff_t = coeff_t if isinstance(coeff_t, LaurentQ) else LaurentQ.const(coeff_t)
        data = {}
        if even:
            for n, coeff in even.items():
                c = coeff if isinstance(coeff, LaurentQ) else LaurentQ.const(coeff)
                if n < 0:
                    raise ValueError("even-part index must be nonnegative")
                if c:
                    data[int(n)] = c
        self._even = data

    @classmethod
    def zero(cls) -> HH0Class:
        return cls()

    @classmethod
    def basis_s(cls) -> HH0Class:
        return cls(coeff_s=ONE)

    @classmethod
    def basis_t(cls) -> HH0Class:
        return cls(coeff_t=ONE)

    @classmethod
    def basis_even(cls, n: int) -> HH0Class:
        return cls(even={n: ONE})

    @property
    def even(self) -> dict[int, LaurentQ]:
        return dict(self._even)

    def even_coefficient(self, n: int) -> LaurentQ:
        return self._even.get(n, ZERO)

    @property
    def is_zero(self) -> bool:
        return not (self.coeff_s or self.coeff_t or self._even)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HH0Class):
            return NotImplemented
        return (
            self.coeff_s == other.coeff_s
            and self.coeff_t == other.coeff_t
            and self._even == other._even
        )

    def __add__(self, other: HH0Class) -> HH0Class:
        even = dict(self._even)
        for n, c in other._even.items():
            v = even.get(n, ZERO) + c
            if v:
                even[n] = v
            else:
                even.pop(n, None)
        return HH0Class(self.coeff_s + other.coeff_s, self.coeff_t + other.coeff_t, even)

    def __neg__(self) -> HH0Class:
        return HH0Class(-self.coeff_s, -self.coeff_t, {n: -c for n, c in self._even.items()})

    def __sub__(self, other: HH0Class) -> HH0Class:
        return self + (-other)

    def scale(self, coeff) -> HH0Class:
        c = coeff if isinstance(coeff, LaurentQ) else LaurentQ.const(coeff)
        return HH0Class(
            c * self.coeff_s, c * self.coeff_t, {n: c * v for n, v in self._even.items()}
        )

    def render(self) -> str:
        from .hecke import _render_coeff_token, _join_signed

        if self.is_zero:
            return "0"
        parts = []
        for n in sorted(self._even):
            parts.append(_render_coeff_token(self._even[n], f"[E({n})]"))
        if self.coeff_s:
            parts.append(_render_coeff_token(self.coeff_s, "[Ts]"))
        if self.coeff_t:
            parts.append(_render_coeff_token(self.coeff_t, "[Tt]"))
        return _join_signed(parts)

    __str__ = render

    def __repr__(self) -> str:
        return self.render()


def hh0_scale(coeff, x: HH0Class) -> HH0Class:
    """Coefficientwise scaling, normalized."""
    return x.scale(coeff)


_WORD_CLASS_CACHE: dict[WeylWord, HH0Class] = {}


def class_of_word(word: WeylWord) -> HH0Class:
    """The class of T_w in the canonical basis.

    >>> class_of_word(WeylWord(2, "t"))
    [E(1)]
    >>> class_of_word(WeylWord(3, "s"))
    (-1 + q)*[E(1)] + q*[Tt]
    """
    cached = _WORD_CLASS_CACHE.get(word)
    if cached is not None:
        return cached
    if word.length % 2 == 0:
        result = HH0Class.basis_even(word.length // 2)
    elif word.length == 1:
        result = HH0Class.basis_s() if word.first == "s" else HH0Class.basis_t()
    else:
        # rotate the leading generator to the back; the trailing repeat
        # resolves by the quadratic relation
        m = (word.length - 1) // 2
        shorter = WeylWord(word.length - 2, _OTHER[word.first])
        result = HH0Class.basis_even(m).scale(_Q_MINUS_1) + class_of_word(shorter).scale(Q)
    _WORD_CLASS_CACHE[word] = result
    return result


def reduce_to_hh0(a: HeckeElement) -> HH0Class:
    """The class of a Hecke element in the trace quotient, LaurentQ-linearly."""
    total = HH0Class.zero()
    for word, coeff in a.terms.items():
        total = total + class_of_word(word).scale(coeff)
    return total
