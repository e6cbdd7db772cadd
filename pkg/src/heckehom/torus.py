"""Hochschild chains of the group algebra of a lattice and the torus picture.

Chains of degree p over the lattice Z^r are spanned by (p+1)-tuples of
integer vectors; the boundary b adds adjacent entries (group
multiplication, written additively), the cyclic operator rotates with sign,
and the normalized Connes operator B inserts the zero vector in front of
the cyclic norm.  The comparison side is the algebra of differential forms
on the dual torus: a p-form is a combination of monomial times
dlog(z_{i_1}) ^ ... ^ dlog(z_{i_p}), reached through the map

    f0 (x) f1 (x) ... (x) fp  ->  (1/p!) f0 df1 ^ ... ^ dfp.

All homology statements are verified on exponent-windowed truncations; the
chain complex is graded by the total exponent vector, which every structure
map preserves, so windowed computations inside one grade are exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .laurent import _rat
from .linalg import (
    GaussianBasis,
    QuotientSpace,
    intersect_with_columns,
    kernel_vectors,
)

ChainKey = tuple[tuple[int, ...], ...]
FormKey = tuple[tuple[int, ...], tuple[int, ...]]


class LatticeChain:
    """Degree-p Hochschild chain of the group algebra of Z^rank."""

    __slots__ = ("rank", "degree", "_terms")

    def __init__(self, rank: int, degree: int, terms=None):
        if rank < 1:
            raise ValueError("rank must be positive")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.rank = rank
        self.degree = degree
        data: dict[ChainKey, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                key = tuple(tuple(int(x) for x in vec) for vec in key)
                if len(key) != degree + 1 or any(len(vec) != rank for vec in key):
                    raise ValueError(f"bad chain key {key} for degree {degree}, rank {rank}")
                c = _rat(coeff)
                if c:
                    data[key] = c
        self._terms = data

    @classmethod
    def from_key(cls, rank: int, key: ChainKey, coeff=1) -> LatticeChain:
        return cls(rank, len(key) - 1, {key: coeff})

    @classmethod
    def from_tensors(cls, factors) -> LatticeChain:
        """Chain from a tuple of MultiLaurent group-algebra elements."""
        factors = list(factors)
        if not factors:
            raise ValueError("need at least one tensor factor")
        rank = factors[0].rank
        terms: dict[ChainKey, Fraction] = {}
        for combo in itertools.product(*(f.terms.items() for f in factors)):
            key = tuple(vec for vec, _ in combo)
            coeff = Fraction(1)
            for _, c in combo:
                coeff *= c
            if coeff:
                terms[key] = terms.get(key, 0) + coeff
        return cls(rank, len(factors) - 1, {k: v for k, v in terms.items() if v})

    @property
    def terms(self) -> dict[ChainKey, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeChain):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __add__(self, other: LatticeChain) -> LatticeChain:
        if self.rank != other.rank or self.degree != other.degree:
            raise ValueError("rank/degree mismatch")
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        result = LatticeChain.__new__(LatticeChain)
        result.rank, result.degree, result._terms = self.rank, self.degree, out
        return result

    def __neg__(self) -> LatticeChain:
        result = LatticeChain.__new__(LatticeChain)
        result.rank, result.degree = self.rank, self.degree
        result._terms = {k: -c for k, c in self._terms.items()}
        return result

    def __sub__(self, other: LatticeChain) -> LatticeChain:
        return self + (-other)

    def scale(self, coeff) -> LatticeChain:
        c = _rat(coeff)
        return LatticeChain(
            self.rank, self.degree, {k: c * v for k, v in self._terms.items()}
        )

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        bits = [f"{c}*{key}" for key, c in sorted(self._terms.items())]
        return " + ".join(bits)


class TorusForm:
    """Differential form on the dual torus, in monomial/dlog coordinates."""

    __slots__ = ("rank", "degree", "_terms")

    def __init__(self, rank: int, degree: int, terms=None):
        if rank < 1:
            raise ValueError("rank must be positive")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.rank = rank
        self.degree = degree
        data: dict[FormKey, Fraction] = {}
        if terms:
            for (exps, idx), coeff in terms.items():
                exps = tuple(int(x) for x in exps)
                idx = tuple(int(i) for i in idx)
                if len(exps) != rank or len(idx) != degree:
                    raise ValueError("bad form key")
                if any(a >= b for a, b in zip(idx, idx[1:])) or any(
                    i < 0 or i >= rank for i in idx
                ):
                    raise ValueError("index set must be strictly increasing within range")
                c = _rat(coeff)
                if c:
                    data[(exps, idx)] = c
        self._terms = data

    @property
    def terms(self) -> dict[FormKey, Fraction]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusForm):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.degree == other.degree
            and self._terms == other._terms
        )

    def __add__(self, other: TorusForm) -> TorusForm:
        if self.rank != other.rank or self.degree != other.degree:
            raise ValueError("rank/degree mismatch")
        out = dict(self._terms)
        for key, c in other._terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        result = TorusForm.__new__(TorusForm)
        result.rank, result.degree, result._terms = self.rank, self.degree, out
        return result

    def __neg__(self) -> TorusForm:
        result = TorusForm.__new__(TorusForm)
        result.rank, result.degree = self.rank, self.degree
        result._terms = {k: -c for k, c in self._terms.items()}
        return result

    def __sub__(self, other: TorusForm) -> TorusForm:
        return self + (-other)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for (exps, idx), c in sorted(self._terms.items()):
            wedge = "^".join(f"dlog{i + 1}" for i in idx) or "1"
            bits.append(f"{c}*z^{list(exps)}*{wedge}")
        return " + ".join(bits)


def _vec_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _total(key: ChainKey) -> tuple[int, ...]:
    total = key[0]
    for vec in key[1:]:
        total = _vec_add(total, vec)
    return total


def _face_key(key: ChainKey, i: int) -> ChainKey:
    p = len(key) - 1
    if i < p:
        return key[:i] + (_vec_add(key[i], key[i + 1]),) + key[i + 2 :]
    return (_vec_add(key[p], key[0]),) + key[1:p]


def boundary_key(key: ChainKey) -> dict[ChainKey, int]:
    """Alternating face sum on a single basis tuple."""
    out: dict[ChainKey, int] = {}
    for i in range(len(key)):
        face = _face_key(key, i)
        sign = 1 if i % 2 == 0 else -1
        v = out.get(face, 0) + sign
        if v:
            out[face] = v
        else:
            out.pop(face, None)
    return out


def _rotate_right(key: ChainKey) -> ChainKey:
    return key[-1:] + key[:-1]


def _is_degenerate(key: ChainKey) -> bool:
    zero = (0,) * len(key[0])
    return any(vec == zero for vec in key[1:])


def connes_b_key(key: ChainKey) -> dict[ChainKey, int]:
    """Normalized Connes operator on a basis tuple: insert the zero vector
    in front of the signed cyclic norm, then discard degenerate tuples."""
    rank = len(key[0])
    zero = (0,) * rank
    if any(vec == zero for vec in key):
        # every rotation would place the zero entry in an interior slot
        return {}
    p = len(key) - 1
    step = 1 if p % 2 == 0 else -1
    out: dict[ChainKey, int] = {}
    rotated = key
    sign = 1
    for j in range(p + 1):
        if j:
            rotated = _rotate_right(rotated)
            sign *= step
        new_key = (zero,) + rotated
        v = out.get(new_key, 0) + sign
        if v:
            out[new_key] = v
        else:
            out.pop(new_key, None)
    return out


def hkr_key(rank: int, key: ChainKey) -> dict[FormKey, Fraction]:
    """HKR value on a monomial tuple: (1/p!) f0 df1 ^ ... ^ dfp."""
    p = len(key) - 1
    total = _total(key)
    if p == 0:
        return {(total, ()): Fraction(1)}
    if p > rank:
        return {}
    rows = key[1:]
    scale = Fraction(1, factorial(p))
    out: dict[FormKey, Fraction] = {}
    for idx in itertools.combinations(range(rank), p):
        det = _int_det([[row[j] for j in idx] for row in rows])
        if det:
            out[(total, idx)] = scale * det
    return out


def _int_det(matrix: list[list[int]]) -> int:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = 0
    for j in range(n):
        if matrix[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in matrix[1:]]
            term = matrix[0][j] * _int_det(minor)
            total += term if j % 2 == 0 else -term
    return total


def de_rham_d_key(rank: int, fkey: FormKey) -> dict[FormKey, int]:
    exps, idx = fkey
    out: dict[FormKey, int] = {}
    for j in range(rank):
        if exps[j] == 0 or j in idx:
            continue
        position = sum(1 for i in idx if i < j)
        sign = 1 if position % 2 == 0 else -1
        new_idx = tuple(sorted(idx + (j,)))
        out[(exps, new_idx)] = sign * exps[j]
    return out


def _lift_chain(rank, degree, keyed: dict) -> LatticeChain:
    result = LatticeChain.__new__(LatticeChain)
    result.rank, result.degree = rank, degree
    result._terms = {k: v for k, v in keyed.items() if v}
    return result


def hochschild_b(chain: LatticeChain) -> LatticeChain:
    """Alternating face-map boundary; undefined in degree zero."""
    if chain.degree < 1:
        raise ValueError("the boundary is not defined on degree-0 chains")
    out: dict[ChainKey, Fraction] = {}
    for key, coeff in chain._terms.items():
        for face, sign in boundary_key(key).items():
            v = out.get(face, 0) + coeff * sign
            if v:
                out[face] = v
            else:
                out.pop(face, None)
    return _lift_chain(chain.rank, chain.degree - 1, out)


def cyclic_t(chain: LatticeChain) -> LatticeChain:
    """Rotate each tuple right by one, with sign (-1)^degree."""
    sign = 1 if chain.degree % 2 == 0 else -1
    out = {_rotate_right(key): sign * coeff for key, coeff in chain._terms.items()}
    return _lift_chain(chain.rank, chain.degree, out)


def normalize_chain(chain: LatticeChain) -> LatticeChain:
    """Project onto the normalized complex: drop tuples with an interior zero."""
    out = {k: c for k, c in chain._terms.items() if not _is_degenerate(k)}
    return _lift_chain(chain.rank, chain.degree, out)


def connes_B(chain: LatticeChain) -> LatticeChain:
    """Normalized Connes operator, degree p -> p+1."""
    out: dict[ChainKey, Fraction] = {}
    for key, coeff in chain._terms.items():
        if _is_degenerate(key):
            continue
        for new_key, sign in connes_b_key(key).items():
            v = out.get(new_key, 0) + coeff * sign
            if v:
                out[new_key] = v
            else:
                out.pop(new_key, None)
    return _lift_chain(chain.rank, chain.degree + 1, out)


def hkr(chain: LatticeChain) -> TorusForm:
    out: dict[FormKey, Fraction] = {}
    for key, coeff in chain._terms.items():
        for fkey, value in hkr_key(chain.rank, key).items():
            v = out.get(fkey, 0) + coeff * value
            if v:
                out[fkey] = v
            else:
                out.pop(fkey, None)
    form = TorusForm.__new__(TorusForm)
    form.rank, form.degree = chain.rank, chain.degree
    form._terms = out
    return form


def pi0(form: TorusForm) -> TorusForm:
    """Projection onto translation-invariant forms (trivial monomial part)."""
    zero = (0,) * form.rank
    out = {k: c for k, c in form._terms.items() if k[0] == zero}
    result = TorusForm.__new__(TorusForm)
    result.rank, result.degree, result._terms = form.rank, form.degree, out
    return result


def de_rham_d(form: TorusForm) -> TorusForm:
    out: dict[FormKey, Fraction] = {}
    for fkey, coeff in form._terms.items():
        for new_key, value in de_rham_d_key(form.rank, fkey).items():
            v = out.get(new_key, 0) + coeff * value
            if v:
                out[new_key] = v
            else:
                out.pop(new_key, None)
    result = TorusForm.__new__(TorusForm)
    result.rank, result.degree, result._terms = form.rank, form.degree + 1, out
    return result


def class_action(chain: LatticeChain, indicator_of_zero: bool = True) -> LatticeChain:
    """Action of a class function on chains.

    With indicator_of_zero the function is the characteristic function of
    the trivial subgroup (the compact part of a lattice), so exactly the
    tuples whose entries sum to zero survive; otherwise the function is the
    constant 1 and the chain is returned unchanged.
    """
    if not indicator_of_zero:
        return chain
    zero = (0,) * chain.rank
    out = {k: c for k, c in chain._terms.items() if _total(k) == zero}
    return _lift_chain(chain.rank, chain.degree, out)


# ---------------------------------------------------------------------------
# windowed enumeration and the commuting-square verification


def window_vectors(rank: int, window: int):
    return itertools.product(range(-window, window + 1), repeat=rank)


def windowed_keys(rank: int, degree: int, window: int):
    """All degree-p basis tuples with every entry in [-window, window]^rank."""
    return itertools.product(window_vectors(rank, window), repeat=degree + 1)


def sector_keys(rank: int, degree: int, window: int, total: tuple[int, ...]):
    """Windowed basis tuples with a prescribed total exponent vector."""
    for prefix in itertools.product(window_vectors(rank, window), repeat=degree):
        partial = (0,) * rank
        for vec in prefix:
            partial = _vec_add(partial, vec)
        last = tuple(t - x for t, x in zip(total, partial))
        if all(-window <= x <= window for x in last):
            yield prefix + (last,)


def _in_window(key: ChainKey, window: int) -> bool:
    return all(all(-window <= x <= window for x in vec) for vec in key)


@dataclass
class SquareReport:
    """Result of one commuting-square verification.

    The dimensions refer to the invariant (total exponent zero) sector of
    the windowed complex, which is where the projection acts nontrivially.
    """

    rank: int
    window: int
    degree: int
    dim_cycles: int
    dim_boundaries: int
    dim_invariant: int
    square_commutes: bool
    hkr_b_constant: Fraction | None
    hkr_b_consistent: bool
    passed: bool

    def as_dict(self) -> dict:
        c = self.hkr_b_constant
        return {
            "rank": self.rank,
            "window": self.window,
            "degree": self.degree,
            "dim_cycles": self.dim_cycles,
            "dim_boundaries": self.dim_boundaries,
            "dim_invariant": self.dim_invariant,
            "hkr_b_constant": str(c) if c is not None else None,
            "pass": self.passed,
        }


def _invariant_sector_dims(rank: int, degree: int, window: int):
    """(cycles, boundaries, quotient, boundary_basis) in the zero-total sector."""
    zero = (0,) * rank
    keys = list(sector_keys(rank, degree, window, zero))
    if degree == 0:
        cycles = [{key: Fraction(1)} for key in keys]
    else:
        images = ((key, _fraction_vec(boundary_key(key))) for key in keys)
        cycles = kernel_vectors(images)
    source = sector_keys(rank, degree + 1, window, zero)
    raw_boundaries = (_fraction_vec(boundary_key(key)) for key in source)
    window_pred = lambda key: _in_window(key, window)
    boundaries = intersect_with_columns(raw_boundaries, window_pred)
    quotient = QuotientSpace(boundaries, cycles)
    return cycles, quotient


def _fraction_vec(int_vec: dict) -> dict:
    return {k: Fraction(v) for k, v in int_vec.items()}


def _chain_of_vec(rank: int, degree: int, vec: dict) -> LatticeChain:
    return _lift_chain(rank, degree, dict(vec))


def check_square_on_key(rank: int, key: ChainKey) -> bool:
    """hkr(class_action(x)) == pi0(hkr(x)) on a single basis tuple."""
    chain = LatticeChain.from_key(rank, key)
    return hkr(class_action(chain)) == pi0(hkr(chain))


def measure_hkr_b_constant(rank: int, degree: int, window: int):
    """Find c with hkr(B(x)) = c * d(hkr(x)) on windowed normalized chains.

    Returns (constant, consistent): constant is None when both sides vanish
    identically on the window (the relation is then vacuous).
    """
    constant = None
    for key in windowed_keys(rank, degree, window):
        if _is_degenerate(key):
            continue
        chain = LatticeChain.from_key(rank, key)
        left = hkr(connes_B(chain))
        right = de_rham_d(hkr(chain))
        if right.is_zero:
            if not left.is_zero:
                return None, False
            continue
        ratio = None
        for fkey, value in right.terms.items():
            lvalue = left.terms.get(fkey, Fraction(0))
            r = lvalue / value
            if ratio is None:
                ratio = r
            elif ratio != r:
                return None, False
        # left may not have extra support beyond right
        if any(fkey not in right.terms for fkey in left.terms):
            return None, False
        if constant is None:
            constant = ratio
        elif constant != ratio:
            return None, False
    return constant, True


def homology_square_check(rank: int, window: int, degree: int) -> SquareReport:
    """Verify the compact-restriction/invariant-forms square on a window.

    On windowed degree-p cycles, checks hkr . class_action = pi0 . hkr up to
    b-boundaries by exact linear algebra, and reports the dimensions of the
    invariant sector of the windowed homology.

    Exhaustive over the window: the work grows like (2*window+1)^(rank*(p+2)),
    so large ranks want window 1.
    """
    if rank < 1 or window < 1 or degree < 0 or degree > rank:
        raise ValueError("need rank >= 1, window >= 1, 0 <= degree <= rank")
    square_commutes = all(
        check_square_on_key(rank, key) for key in windowed_keys(rank, degree, window)
    )
    cycles, quotient = _invariant_sector_dims(rank, degree, window)
    constant, consistent = measure_hkr_b_constant(rank, degree, window)
    passed = square_commutes and consistent
    return SquareReport(
        rank=rank,
        window=window,
        degree=degree,
        dim_cycles=len(cycles),
        dim_boundaries=quotient.boundary_rank,
        dim_invariant=quotient.dim,
        square_commutes=square_commutes,
        hkr_b_constant=constant,
        hkr_b_consistent=consistent,
        passed=passed,
    )


def compact_part_of_b_image_is_boundary(rank: int, degree: int, window: int) -> bool:
    """Homology-level vanishing of the compact part of the Connes operator.

    For every windowed normalized cycle z of the zero-total sector, the
    chain class_action(B(z)) must be a boundary of the windowed zero-total
    sector one degree up.  This is the lattice instance of the vanishing of
    compact restriction composed with B.
    """
    zero = (0,) * rank
    keys = list(sector_keys(rank, degree, window, zero))
    normalized = [k for k in keys if not _is_degenerate(k)]
    if degree == 0:
        cycle_vecs = [{key: Fraction(1)} for key in normalized]
    else:
        images = ((key, _fraction_vec(boundary_key(key))) for key in normalized)
        cycle_vecs = kernel_vectors(images)
    source = sector_keys(rank, degree + 2, window, zero)
    raw = (_fraction_vec(boundary_key(key)) for key in source)
    boundaries = intersect_with_columns(raw, lambda key: _in_window(key, window))
    basis = GaussianBasis()
    for vec in boundaries:
        basis.insert(vec)
    for vec in cycle_vecs:
        chain = _chain_of_vec(rank, degree, vec)
        image = class_action(connes_B(chain))
        if image.is_zero:
            continue
        if not basis.contains(image.terms):
            return False
    return True
