"""Exact symbolic computation in the type-A1-tilde Iwahori-Hecke algebra and
small-scale Hochschild/cyclic homology, with verification suites.

Subpackages by topic:

    laurent    exact rationals and sparse Laurent polynomials in q
    weyl       the infinite dihedral Weyl group
    hecke      the Hecke algebra, basis inverses, R-polynomials
    hh0        the trace quotient and its canonical basis
    hh0_oracle truncated commutator-space oracle over Q(q)
    spectral   induction/restriction operators and the compact-restriction
               identity in degree zero
    torus      lattice Hochschild chains, differential forms, the
               invariant-forms projection
    engine     Hochschild/cyclic homology of algebras by structure constants
    suites     the verification case lists behind the CLI
"""

from .laurent import LaurentQ, MultiLaurent, NotDivisible, ONE, Q, ZERO, qpow
from .weyl import E, S, T, WeylWord, bruhat_leq, lengths_add, st_power, ts_power, word_mul
from .hecke import (
    HeckeElement,
    basis,
    r_polynomial,
    r_polynomial_recursive,
    t_inverse,
    t_mul,
)
from .hh0 import HH0Class, class_of_word, hh0_scale, reduce_to_hh0
from .spectral import (
    LambdaElement,
    chi_m,
    commutator_closed_form,
    commutator_direct,
    one_gc,
    one_mc,
    opind_map,
    pind_map,
    pres_map,
)
from .torus import (
    LatticeChain,
    TorusForm,
    class_action,
    connes_B,
    cyclic_t,
    de_rham_d,
    hkr,
    hochschild_b,
    homology_square_check,
    normalize_chain,
    pi0,
)
from .engine import (
    AlgebraSpec,
    NoUnit,
    NotAssociative,
    TooLarge,
    compute_cyclic,
    compute_hochschild,
    class_function_action,
    dual_numbers,
    ground_field,
    group_algebra,
    load_algebra,
    sbi_exactness_check,
    upper_triangular_2,
)
from .exprparse import ParseError, parse_hecke, parse_laurent

__version__ = "0.1.0"
