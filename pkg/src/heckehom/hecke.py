"""The Iwahori-Hecke algebra of the infinite dihedral group.

Basis elements T_w are indexed by Weyl words; multiplication is fixed by

    T_w T_w' = T_{ww'}        when l(ww') = l(w) + l(w'),
    T_g^2    = (q-1) T_g + q  for the generators g in {s, t},

over exact Laurent polynomials in q.  Inverses of basis elements and the
R-polynomials extracted from them are computed here as well, together with
the descent recursion that serves as an independent check.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentQ, ONE, ZERO, Q, qpow
from .weyl import E, WeylWord, bruhat_leq, word_mul, _OTHER

_Q_MINUS_1 = Q - 1


class HeckeElement:
    """Finite formal sum of basis elements T_w with LaurentQ coefficients.

    >>> basis(WeylWord(1, "s")) * basis(WeylWord(1, "s"))
    q*T[e] + (-1 + q)*T[s]
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for word, coeff in terms.items():
                c = coeff if isinstance(coeff, LaurentQ) else LaurentQ.const(coeff)
                if c:
                    data[word] = c
        self._terms = data

    @property
    def terms(self) -> dict[WeylWord, LaurentQ]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, word: WeylWord) -> LaurentQ:
        return self._terms.get(word, ZERO)

    def support(self) -> list[WeylWord]:
        return sorted(self._terms, key=_word_key)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: HeckeElement) -> HeckeElement:
        out = dict(self._terms)
        for word, c in other._terms.items():
            v = out.get(word, ZERO) + c
            if v:
                out[word] = v
            else:
                out.pop(word, None)
        result = HeckeElement.__new__(HeckeElement)
        result._terms = out
        return result

    def __neg__(self) -> HeckeElement:
        result = HeckeElement.__new__(HeckeElement)
        result._terms = {w: -c for w, c in self._terms.items()}
        return result

    def __sub__(self, other: HeckeElement) -> HeckeElement:
        return self + (-other)

    def __mul__(self, other) -> HeckeElement:
        if isinstance(other, HeckeElement):
            return t_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> HeckeElement:
        return self.scale(other)

    def scale(self, coeff) -> HeckeElement:
        c = coeff if isinstance(coeff, LaurentQ) else LaurentQ.const(coeff)
        return HeckeElement({w: c * v for w, v in self._terms.items()})

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = [
            _render_coeff_token(self._terms[word], f"T[{word}]")
            for word in self.support()
        ]
        return _join_signed(parts)

    __str__ = render

    def __repr__(self) -> str:
        return self.render()


def _word_key(word: WeylWord):
    return (word.length, word.first or "")


def _render_coeff_token(coeff: LaurentQ, token: str) -> tuple[bool, str]:
    """Return (negative, body) for one rendered term."""
    terms = coeff.terms
    if len(terms) == 1:
        ((exp, c),) = terms.items()
        negative = c < 0
        c = abs(c)
        if exp == 0 and c == 1:
            return negative, token
        if exp == 0:
            return negative, f"{c}*{token}"
        mono = "q" if exp == 1 else f"q^{exp}"
        if c == 1:
            return negative, f"{mono}*{token}"
        return negative, f"{c}*{mono}*{token}"
    return False, f"({coeff.render()})*{token}"


def _join_signed(parts: list[tuple[bool, str]]) -> str:
    out = []
    for negative, body in parts:
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append(("- " if negative else "+ ") + body)
    return " ".join(out)


def basis(word: WeylWord) -> HeckeElement:
    """The basis element T_w."""
    return HeckeElement({word: ONE})


def one() -> HeckeElement:
    return basis(E)


def zero() -> HeckeElement:
    return HeckeElement()


def _mul_generator(terms: dict[WeylWord, LaurentQ], letter: str) -> dict:
    """Right-multiply a term dict by T_g for a generator g."""
    g = WeylWord(1, letter)
    out: dict[WeylWord, LaurentQ] = {}
    for word, coeff in terms.items():
        wg = word_mul(word, g)
        if wg.length > word.length:
            _accum(out, wg, coeff)
        else:
            _accum(out, word, coeff * _Q_MINUS_1)
            _accum(out, wg, coeff * Q)
    return out


def _accum(out: dict, word: WeylWord, coeff: LaurentQ) -> None:
    v = out.get(word, ZERO) + coeff
    if v:
        out[word] = v
    else:
        out.pop(word, None)


def t_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Bilinear product, peeling the right factor generator by generator."""
    total: dict[WeylWord, LaurentQ] = {}
    for word, coeff in b._terms.items():
        cur = dict(a._terms)
        for letter in word.letters:
            cur = _mul_generator(cur, letter)
        for w, c in cur.items():
            _accum(total, w, c * coeff)
    result = HeckeElement.__new__(HeckeElement)
    result._terms = total
    return result


# T_g^{-1} = q^{-1} T_g - (1 - q^{-1}) T_e, forced by the quadratic relation
_GEN_INVERSE = {
    letter: HeckeElement(
        {WeylWord(1, letter): qpow(-1), E: qpow(-1) - 1}
    )
    for letter in ("s", "t")
}

_INVERSE_CACHE: dict[WeylWord, HeckeElement] = {}


def t_inverse(word: WeylWord) -> HeckeElement:
    """The inverse of T_w, as the reversed product of generator inverses.

    Cached per word; the cache is a pure memo table.

    >>> t_mul(basis(WeylWord(1, "s")), t_inverse(WeylWord(1, "s")))
    T[e]
    """
    cached = _INVERSE_CACHE.get(word)
    if cached is not None:
        return cached
    if word.length == 0:
        result = one()
    else:
        # T_w = T_g T_{w'} with g the first letter, so T_w^{-1} = T_{w'}^{-1} T_g^{-1}
        rest = WeylWord(word.length - 1, _OTHER[word.first]) if word.length > 1 else E
        result = t_mul(t_inverse(rest), _GEN_INVERSE[word.first])
    _INVERSE_CACHE[word] = result
    return result


def r_polynomial(x: WeylWord, w: WeylWord) -> LaurentQ:
    """R_{x,w}, extracted from the expansion of the inverse basis element:

        R_{x,w} = (-1)^(l(x)+l(w)) * q^l(w) * [coefficient of T_x in T_{w^-1}^{-1}]

    Vanishes unless x <= w in the Bruhat order.

    >>> r_polynomial(E, WeylWord(2, "s"))
    1 - 2*q + q^2
    """
    if not bruhat_leq(x, w):
        return ZERO
    coeff = t_inverse(w.inverse()).coefficient(x)
    sign = 1 if (x.length + w.length) % 2 == 0 else -1
    return qpow(w.length) * coeff * sign


_R_RECURSIVE_CACHE: dict[tuple[WeylWord, WeylWord], LaurentQ] = {}


def r_polynomial_recursive(x: WeylWord, w: WeylWord) -> LaurentQ:
    """R_{x,w} by the descent recursion, independent of any inversion:

        R_{x,x} = 1;  R_{x,w} = 0 unless x <= w;  and for sw < w:
        R_{x,w} = R_{sx,sw}                         if sx < x,
        R_{x,w} = (q-1) R_{x,sw} + q R_{sx,sw}      if sx > x.
    """
    if w.length == 0:
        return ONE if x.length == 0 else ZERO
    key = (x, w)
    cached = _R_RECURSIVE_CACHE.get(key)
    if cached is not None:
        return cached
    s = WeylWord(1, w.first)  # the unique left descent of w
    sw = word_mul(s, w)
    sx = word_mul(s, x)
    if sx.length < x.length:
        result = r_polynomial_recursive(sx, sw)
    else:
        result = _Q_MINUS_1 * r_polynomial_recursive(x, sw) + Q * r_polynomial_recursive(sx, sw)
    _R_RECURSIVE_CACHE[key] = result
    return result


def evaluate_at_one(a: HeckeElement) -> dict[WeylWord, Fraction]:
    """Specialize q = 1, collapsing the algebra onto the group algebra of W."""
    out = {}
    for word, coeff in a._terms.items():
        v = coeff.evaluate(1)
        if v:
            out[word] = v
    return out
