"""Exact rational scalars and sparse Laurent polynomials in the parameter q.

Every coefficient in this package is a ``fractions.Fraction``; no floating
point is used anywhere.  Laurent polynomials are stored as sparse mappings
{exponent: coefficient} with zero coefficients dropped, so equality of
normalized mappings is exact equality of values.
"""

from __future__ import annotations

from fractions import Fraction


class NotDivisible(ArithmeticError):
    """Raised when no exact Laurent-polynomial quotient exists."""


def _rat(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class LaurentQ:
    """Sparse Laurent polynomial in q with Fraction coefficients.

    >>> (Q - 1) * (Q + 1) == Q**2 - 1
    True
    >>> qpow(-1) * Q
    1
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for exp, coeff in terms.items():
                c = _rat(coeff)
                if c:
                    data[int(exp)] = c
        self._terms = data

    @classmethod
    def const(cls, value) -> LaurentQ:
        return cls({0: _rat(value)})

    @classmethod
    def monomial(cls, coeff, exp: int) -> LaurentQ:
        return cls({exp: _rat(coeff)})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def coefficient(self, exp: int) -> Fraction:
        return self._terms.get(exp, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentQ):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentQ.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __add__(self, other) -> LaurentQ:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        result = LaurentQ.__new__(LaurentQ)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> LaurentQ:
        result = LaurentQ.__new__(LaurentQ)
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other) -> LaurentQ:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentQ:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LaurentQ:
        other = _as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        result = LaurentQ.__new__(LaurentQ)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentQ:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self._terms) != 1:
                raise NotDivisible(f"negative power of a non-unit: {self}")
            ((exp, coeff),) = self._terms.items()
            return LaurentQ.monomial(Fraction(1) / coeff, -exp) ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divide_exact(self, other: LaurentQ) -> LaurentQ:
        """Return c with self = other * c, or raise NotDivisible.

        Iterated leading-term elimination after stripping valuations; a
        nonzero remainder is an error, never an approximation.

        >>> ((Q - 1) ** 2).divide_exact(Q * (Q - 1))
        -q^-1 + 1
        """
        other = _as_laurent(other)
        if other is NotImplemented:
            raise TypeError("divide_exact needs a LaurentQ or exact rational")
        if other.is_zero:
            raise ZeroDivisionError("exact division by the zero polynomial")
        if self.is_zero:
            return ZERO
        shift = self.valuation() - other.valuation()
        rem = {e - self.valuation(): c for e, c in self._terms.items()}
        den = {e - other.valuation(): c for e, c in other._terms.items()}
        dd = max(den)
        dlead = den[dd]
        quot: dict[int, Fraction] = {}
        while rem:
            rd = max(rem)
            if rd < dd:
                raise NotDivisible(f"({self}) is not divisible by ({other})")
            c = rem[rd] / dlead
            e = rd - dd
            quot[e] = c
            for de, dc in den.items():
                k = de + e
                v = rem.get(k, 0) - c * dc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return LaurentQ({e + shift: c for e, c in quot.items()})

    def evaluate(self, value) -> Fraction:
        """Substitute an exact rational value for q."""
        x = _rat(value)
        total = Fraction(0)
        for exp, coeff in self._terms.items():
            total += coeff * x**exp
        return total

    def render(self) -> str:
        """Canonical textual form, terms sorted by ascending exponent.

        >>> (Q - 1).render()
        '-1 + q'
        >>> LaurentQ({-1: 1, 1: 1}).render()
        'q^-1 + q'
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exp, coeff in sorted(self._terms.items()):
            body = _render_term(abs(coeff), exp)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append(("+ " if coeff > 0 else "- ") + body)
        return " ".join(parts)

    __str__ = render

    def __repr__(self) -> str:
        return self.render()


def _render_term(coeff: Fraction, exp: int) -> str:
    if exp == 0:
        return str(coeff)
    mono = "q" if exp == 1 else f"q^{exp}"
    if coeff == 1:
        return mono
    return f"{coeff}*{mono}"


def _as_laurent(value):
    if isinstance(value, LaurentQ):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentQ.const(value)
    return NotImplemented


def qpow(exp: int) -> LaurentQ:
    """The monomial q^exp."""
    return LaurentQ.monomial(1, exp)


ZERO = LaurentQ()
ONE = LaurentQ.const(1)
Q = qpow(1)


class MultiLaurent:
    """Sparse Laurent polynomial in r commuting variables over Fractions.

    Terms are keyed by integer exponent vectors of length ``rank``; this is
    the group algebra of the lattice Z^r in coordinates.
    """

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms=None):
        if rank < 1:
            raise ValueError("rank must be a positive integer")
        self.rank = rank
        data = {}
        if terms:
            for vec, coeff in terms.items():
                key = tuple(int(v) for v in vec)
                if len(key) != rank:
                    raise ValueError(f"exponent vector {key} has length != {rank}")
                c = _rat(coeff)
                if c:
                    data[key] = c
        self._terms = data

    @classmethod
    def monomial(cls, rank: int, vec, coeff=1) -> MultiLaurent:
        return cls(rank, {tuple(vec): coeff})

    @classmethod
    def one(cls, rank: int) -> MultiLaurent:
        return cls(rank, {(0,) * rank: 1})

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.rank, tuple(sorted(self._terms.items()))))

    def _check(self, other: MultiLaurent):
        if not isinstance(other, MultiLaurent) or other.rank != self.rank:
            raise ValueError("rank mismatch")

    def __add__(self, other: MultiLaurent) -> MultiLaurent:
        self._check(other)
        out = dict(self._terms)
        for vec, c in other._terms.items():
            v = out.get(vec, 0) + c
            if v:
                out[vec] = v
            else:
                out.pop(vec, None)
        result = MultiLaurent.__new__(MultiLaurent)
        result.rank = self.rank
        result._terms = out
        return result

    def __neg__(self) -> MultiLaurent:
        result = MultiLaurent.__new__(MultiLaurent)
        result.rank = self.rank
        result._terms = {v: -c for v, c in self._terms.items()}
        return result

    def __sub__(self, other: MultiLaurent) -> MultiLaurent:
        return self + (-other)

    def __mul__(self, other: MultiLaurent) -> MultiLaurent:
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for v1, c1 in self._terms.items():
            for v2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(v1, v2))
                v = out.get(key, 0) + c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        result = MultiLaurent.__new__(MultiLaurent)
        result.rank = self.rank
        result._terms = out
        return result

    def scale(self, coeff) -> MultiLaurent:
        c = _rat(coeff)
        return MultiLaurent(self.rank, {v: c * x for v, x in self._terms.items()})

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = [f"{c}*x^{list(v)}" for v, c in sorted(self._terms.items())]
        return " + ".join(parts)
