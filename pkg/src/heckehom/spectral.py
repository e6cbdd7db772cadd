"""Degree-zero spectral operators on the unramified principal series.

The Laurent algebra H(Lambda) = C[lambda, lambda^-1] maps into the Hecke
algebra by the two induction homomorphisms

    pind:  lambda ->  q * T_{ts}^{-1},      opind:  lambda -> q^{-1} * T_{st},

and the restriction map sends [T_s], [T_t] to q-1 and [T_{(st)^n}] to
q^n (lambda^n + lambda^-n).  The compact-restriction operator is defined by
the degree-zero identity

    one_gc = 1 - opind . chi_m . pres,

and its explicit basis values, the commutator with pind, and the
R-polynomial closed form are verified against this definition.
"""

from __future__ import annotations

from .laurent import LaurentQ, ONE, ZERO, Q, qpow
from .weyl import E, st_power, ts_power
from .hecke import HeckeElement, basis, t_inverse, r_polynomial
from .hh0 import HH0Class, reduce_to_hh0


class LambdaElement:
    """Element of the rank-one Laurent group algebra with LaurentQ coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for n, coeff in terms.items():
                c = coeff if isinstance(coeff, LaurentQ) else LaurentQ.const(coeff)
                if c:
                    data[int(n)] = c
        self._terms = data

    @classmethod
    def monomial(cls, n: int, coeff=1) -> LambdaElement:
        return cls({n: coeff})

    @classmethod
    def zero(cls) -> LambdaElement:
        return cls()

    @property
    def terms(self) -> dict[int, LaurentQ]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, n: int) -> LaurentQ:
        return self._terms.get(n, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LambdaElement):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: LambdaElement) -> LambdaElement:
        out = dict(self._terms)
        for n, c in other._terms.items():
            v = out.get(n, ZERO) + c
            if v:
                out[n] = v
            else:
                out.pop(n, None)
        result = LambdaElement.__new__(LambdaElement)
        result._terms = out
        return result

    def __neg__(self) -> LambdaElement:
        result = LambdaElement.__new__(LambdaElement)
        result._terms = {n: -c for n, c in self._terms.items()}
        return result

    def __sub__(self, other: LambdaElement) -> LambdaElement:
        return self + (-other)

    def scale(self, coeff) -> LambdaElement:
        c = coeff if isinstance(coeff, LaurentQ) else LaurentQ.const(coeff)
        return LambdaElement({n: c * v for n, v in self._terms.items()})

    def render(self) -> str:
        from .hecke import _render_coeff_token, _join_signed

        if not self._terms:
            return "0"
        parts = []
        for n in sorted(self._terms):
            coeff = self._terms[n]
            if n == 0:
                body = coeff.render()
                if len(coeff.terms) > 1:
                    parts.append((False, f"({body})"))
                else:
                    negative = body.startswith("-")
                    parts.append((negative, body.lstrip("-")))
            else:
                token = "L" if n == 1 else f"L^{n}"
                parts.append(_render_coeff_token(coeff, token))
        return _join_signed(parts)

    __str__ = render

    def __repr__(self) -> str:
        return self.render()


def pind_hecke(x: LambdaElement) -> HeckeElement:
    """Hecke-algebra image of x under pind, before reduction.

    lambda^n -> q^n T_{(ts)^n}^{-1} for n >= 0, lambda^-n -> q^-n T_{(ts)^n}.
    """
    total = HeckeElement()
    for n, coeff in x.terms.items():
        if n >= 0:
            image = t_inverse(ts_power(n)).scale(qpow(n))
        else:
            image = basis(ts_power(-n)).scale(qpow(n))
        total = total + image.scale(coeff)
    return total


def opind_hecke(x: LambdaElement) -> HeckeElement:
    """Hecke-algebra image of x under opind, before reduction.

    lambda^n -> q^-n T_{(st)^n} for n >= 0, lambda^-n -> q^n T_{(st)^n}^{-1}.
    """
    total = HeckeElement()
    for n, coeff in x.terms.items():
        if n >= 0:
            image = basis(st_power(n)).scale(qpow(-n))
        else:
            image = t_inverse(st_power(-n)).scale(qpow(-n))
        total = total + image.scale(coeff)
    return total


def pind_map(x: LambdaElement) -> HH0Class:
    return reduce_to_hh0(pind_hecke(x))


def opind_map(x: LambdaElement) -> HH0Class:
    return reduce_to_hh0(opind_hecke(x))


def pres_map(c: HH0Class) -> LambdaElement:
    """Restriction: [T_s], [T_t] -> q-1; [T_{(st)^n}] -> q^n(lambda^n + lambda^-n).

    Note pres([E(0)]) = 2, the n = 0 value of the displayed formula.
    """
    total = LambdaElement()
    scalar = (c.coeff_s + c.coeff_t) * (Q - 1)
    if scalar:
        total = total + LambdaElement({0: scalar})
    for n, coeff in c.even.items():
        qn = qpow(n) * coeff
        if n == 0:
            total = total + LambdaElement({0: qn * 2})
        else:
            total = total + LambdaElement({n: qn, -n: qn})
    return total


def one_mc(x: LambdaElement) -> LambdaElement:
    """Keep only the lambda^0 term."""
    c = x.coefficient(0)
    return LambdaElement({0: c}) if c else LambdaElement()


def chi_m(x: LambdaElement) -> LambdaElement:
    """Keep only strictly positive powers of lambda."""
    return LambdaElement({n: c for n, c in x.terms.items() if n >= 1})


def one_gc(c: HH0Class) -> HH0Class:
    """Compact restriction, defined by c - opind(chi_m(pres(c)))."""
    return c - opind_map(chi_m(pres_map(c)))


def commutator_direct(n: int) -> HH0Class:
    """one_gc(pind(lambda^n)) - pind(one_mc(lambda^n))."""
    x = LambdaElement.monomial(n)
    return one_gc(pind_map(x)) - pind_map(one_mc(x))


def r1_even_closed_form(n: int) -> LaurentQ:
    """(q-1)(q^{2n-1} - q^{2n-2} + ... + q - 1), the closed form of R_{1,(st)^n}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    alternating = LaurentQ({j: 1 if j % 2 == 1 else -1 for j in range(2 * n)})
    return (Q - 1) * alternating


def commutator_closed_form(n: int) -> HH0Class:
    """Rank-one closed form of the commutator:

        (R_{1,(st)^n} / (q^n (q-1))) * ((q-1) [E(0)] - [T_s] - [T_t])

    for n >= 1, and zero for n < 1.  The exact division failing would
    indicate an implementation fault, so it is allowed to propagate.
    """
    if n < 1:
        return HH0Class.zero()
    r_poly = r_polynomial(E, st_power(n))
    factor = r_poly.divide_exact(qpow(n) * (Q - 1))
    template = HH0Class(coeff_s=-ONE, coeff_t=-ONE, even={0: Q - 1})
    return template.scale(factor)


def commutator_alternative_form(n: int) -> HH0Class:
    """reduce((pind - opind)(chi_m(lambda^n))), the other side of the identity."""
    x = chi_m(LambdaElement.monomial(n))
    return reduce_to_hh0(pind_hecke(x) - opind_hecke(x))
