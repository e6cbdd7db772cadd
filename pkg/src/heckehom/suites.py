"""Verification suites: every identity the library claims, run as a case list.

Each case carries an id, a human-readable statement of the claim being
checked, its parameters, and rendered expected/actual values.  Suites are
deterministic: the same configuration and seed produce the same report,
byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .laurent import LaurentQ, ONE, Q, qpow
from .weyl import E, WeylWord, all_words, bruhat_leq, st_power, word_mul
from .hecke import (
    HeckeElement,
    basis,
    evaluate_at_one,
    one as hecke_one,
    r_polynomial,
    r_polynomial_recursive,
    t_inverse,
    t_mul,
)
from .hh0 import HH0Class, class_of_word, reduce_to_hh0
from .hh0_oracle import TruncatedTraceOracle
from . import spectral as sp
from . import torus as tr
from . import engine as eg

SUITE_TARGETS = (
    "hecke",
    "rpoly",
    "hh0",
    "clozel",
    "commutator",
    "geomlemma",
    "torus",
    "engine",
)

DEFAULT_ENGINE_ALGEBRAS = (
    "ground_field",
    "dual_numbers",
    "cyclic_2",
    "cyclic_3",
    "cyclic_4",
    "upper_triangular_2",
)

# frozen homology dimensions through degree 4, derived independently:
# ground field and separable group algebras have vanishing higher HH and
# two-periodic HC; dual numbers have one-dimensional HH_p for p >= 1 and
# HC forced to [2,0,2,0,2] by the long exact sequence together with
# HC_1 = (forms)/(exact forms) = 0; the 2x2 upper-triangular algebra has
# the homology of its diagonal.
ENGINE_ORACLE_DIMS = {
    "ground_field": ([1, 0, 0, 0, 0], [1, 0, 1, 0, 1]),
    "dual_numbers": ([2, 1, 1, 1, 1], [2, 0, 2, 0, 2]),
    "cyclic_2": ([2, 0, 0, 0, 0], [2, 0, 2, 0, 2]),
    "cyclic_3": ([3, 0, 0, 0, 0], [3, 0, 3, 0, 3]),
    "cyclic_4": ([4, 0, 0, 0, 0], [4, 0, 4, 0, 4]),
    "cyclic_5": ([5, 0, 0, 0, 0], [5, 0, 5, 0, 5]),
    "cyclic_6": ([6, 0, 0, 0, 0], [6, 0, 6, 0, 6]),
    "upper_triangular_2": ([2, 0, 0, 0, 0], [2, 0, 2, 0, 2]),
}


class ConfigError(ValueError):
    """Invalid suite configuration (reported separately from failures)."""


@dataclass
class SuiteConfig:
    nmax: int = 20
    lmax: int = 14
    reduce_oracle_cutoff: int = 8
    torus_ranks: tuple[int, ...] = (1, 2)
    torus_window: int = 2
    torus_degrees: tuple[int, ...] | None = None  # default: all p <= rank
    engine_cutoff: int = 4
    engine_algebras: tuple[str, ...] = DEFAULT_ENGINE_ALGEBRAS
    engine_spec_files: tuple[str, ...] = ()
    trace_pairs: int = 500
    seed: int = 20260810

    def validate(self) -> None:
        for name, value in [
            ("nmax", self.nmax),
            ("lmax", self.lmax),
            ("reduce_oracle_cutoff", self.reduce_oracle_cutoff),
            ("torus_window", self.torus_window),
            ("trace_pairs", self.trace_pairs),
        ]:
            if value < 1:
                raise ConfigError(f"{name} must be positive, got {value}")
        if self.engine_cutoff < 0:
            raise ConfigError("engine_cutoff must be nonnegative")
        if any(r < 1 for r in self.torus_ranks):
            raise ConfigError("torus ranks must be positive")
        if self.torus_degrees is not None and any(p < 0 for p in self.torus_degrees):
            raise ConfigError("torus degrees must be nonnegative")
        for name in self.engine_algebras:
            if name not in eg.BUILTIN_ALGEBRAS:
                raise ConfigError(f"unknown builtin algebra {name!r}")


@dataclass
class Case:
    id: str
    claim: str
    params: dict
    expected: str
    actual: str
    passed: bool


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: list[Case] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    def add(self, case_id: str, claim: str, params: dict, expected, actual) -> None:
        exp, act = str(expected), str(actual)
        self.cases.append(Case(case_id, claim, params, exp, act, exp == act))

    def add_bool(self, case_id: str, claim: str, params: dict, ok: bool, detail: str = "") -> None:
        self.cases.append(Case(case_id, claim, params, "pass", "pass" if ok else f"fail {detail}".strip(), ok))

    def extend(self, other: SuiteReport) -> None:
        self.cases.extend(other.cases)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": [
                {
                    "id": c.id,
                    "claim": c.claim,
                    "params": c.params,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.passed,
                }
                for c in self.cases
            ],
            "pass": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False) + "\n"

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}   seed: {self.seed}"]
        for c in self.cases:
            status = "PASS" if c.passed else "FAIL"
            params = ", ".join(f"{k}={v}" for k, v in c.params.items())
            line = f"[{status}] {c.id} — {c.claim}"
            if params:
                line += f"  ({params})"
            if not c.passed:
                line += f"\n       expected: {c.expected}\n       actual:   {c.actual}"
            lines.append(line)
        lines.append(
            f"{sum(c.passed for c in self.cases)}/{len(self.cases)} checks passed"
        )
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["id", "claim", "params", "expected", "actual", "pass"])
        for c in self.cases:
            writer.writerow(
                [c.id, c.claim, json.dumps(c.params, sort_keys=True), c.expected, c.actual, c.passed]
            )
        return buffer.getvalue()

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


# ---------------------------------------------------------------------------
# random element generation (seeded; the seed is echoed in every report)


def _random_word(rng: random.Random, max_length: int) -> WeylWord:
    length = rng.randint(0, max_length)
    if length == 0:
        return E
    return WeylWord(length, rng.choice("st"))


def _random_laurent(rng: random.Random) -> LaurentQ:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        terms[rng.randint(-2, 2)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return LaurentQ(terms)


def _random_hecke(rng: random.Random, max_length: int, max_terms: int = 3) -> HeckeElement:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[_random_word(rng, max_length)] = _random_laurent(rng)
    return HeckeElement(terms)


# ---------------------------------------------------------------------------
# individual suites


def suite_hecke(cfg: SuiteConfig) -> SuiteReport:
    report = SuiteReport("hecke", cfg.seed)
    rng = random.Random(cfg.seed)

    for letter in "st":
        g = basis(WeylWord(1, letter))
        expected = basis(WeylWord(1, letter)).scale(Q - 1) + hecke_one().scale(Q)
        report.add(
            f"hecke/quadratic/{letter}",
            f"T[{letter}]^2 = (q-1)*T[{letter}] + q*T[e]",
            {"generator": letter},
            expected,
            t_mul(g, g),
        )
    report.add(
        "hecke/lengths-add",
        "T[s]*T[t] = T[st]",
        {},
        basis(WeylWord.parse("st")),
        t_mul(basis(WeylWord(1, "s")), basis(WeylWord(1, "t"))),
    )

    a = _random_hecke(rng, 6)
    report.add_bool(
        "hecke/identity",
        "T[e]*a = a = a*T[e] for a random a",
        {"support": [str(w) for w in a.support()]},
        t_mul(hecke_one(), a) == a and t_mul(a, hecke_one()) == a,
    )

    assoc_ok = True
    witness = ""
    for k in range(25):
        x, y, z = (_random_hecke(rng, 6) for _ in range(3))
        if t_mul(t_mul(x, y), z) != t_mul(x, t_mul(y, z)):
            assoc_ok = False
            witness = f"case {k}"
            break
    report.add_bool(
        "hecke/associativity",
        "(a*b)*c = a*(b*c) for seeded random elements, support length <= 6",
        {"cases": 25, "seed": cfg.seed},
        assoc_ok,
        witness,
    )

    inverse_ok = True
    witness = ""
    for w in all_words(20):
        inv = t_inverse(w)
        if t_mul(basis(w), inv) != hecke_one() or t_mul(inv, basis(w)) != hecke_one():
            inverse_ok = False
            witness = str(w)
            break
    report.add_bool(
        "hecke/inverse-contract",
        "T[w]*T[w]^-1 = T[e] = T[w]^-1*T[w] for all l(w) <= 20",
        {"lmax": 20},
        inverse_ok,
        witness,
    )

    special_ok = True
    witness = ""
    for x in all_words(5):
        for y in all_words(5):
            product = evaluate_at_one(t_mul(basis(x), basis(y)))
            if product != {word_mul(x, y): Fraction(1)}:
                special_ok = False
                witness = f"{x},{y}"
                break
        if not special_ok:
            break
    report.add_bool(
        "hecke/specialize-q1",
        "at q = 1 the product collapses to the group algebra: T[x]*T[y] -> T[xy]",
        {"lmax": 5},
        special_ok,
        witness,
    )
    return report


def suite_rpoly(cfg: SuiteConfig) -> SuiteReport:
    report = SuiteReport("rpoly", cfg.seed)
    words = list(all_words(cfg.lmax))

    recursion_ok = True
    vanish_ok = True
    degree_ok = True
    diag_ok = True
    witness_r = witness_v = witness_d = witness_x = ""
    for w in words:
        for x in words:
            extracted = r_polynomial(x, w)
            if extracted != r_polynomial_recursive(x, w):
                recursion_ok, witness_r = False, f"x={x}, w={w}"
            if not bruhat_leq(x, w):
                if not extracted.is_zero:
                    vanish_ok, witness_v = False, f"x={x}, w={w}"
                continue
            if extracted.is_zero or extracted.valuation() < 0 or extracted.degree() != w.length - x.length:
                degree_ok, witness_d = False, f"x={x}, w={w}"
            if x == w and extracted != ONE:
                diag_ok, witness_x = False, f"x={x}"
    pairs = len(words) ** 2
    report.add_bool(
        "rpoly/recursion-oracle",
        "extraction from inverse expansion matches the descent recursion",
        {"lmax": cfg.lmax, "pairs": pairs},
        recursion_ok,
        witness_r,
    )
    report.add_bool(
        "rpoly/vanishing",
        "R_{x,w} = 0 off the Bruhat order",
        {"lmax": cfg.lmax},
        vanish_ok,
        witness_v,
    )
    report.add_bool(
        "rpoly/degree-law",
        "R_{x,w} is an honest polynomial of degree l(w) - l(x) for x <= w",
        {"lmax": cfg.lmax},
        degree_ok,
        witness_d,
    )
    report.add_bool(
        "rpoly/diagonal",
        "R_{x,x} = 1",
        {"lmax": cfg.lmax},
        diag_ok,
        witness_x,
    )

    for n in range(1, cfg.nmax + 1):
        report.add(
            f"rpoly/closed-form/{n}",
            "R_{1,(st)^n} = (q-1)(q^{2n-1} - q^{2n-2} + ... - 1)",
            {"n": n},
            sp.r1_even_closed_form(n),
            r_polynomial(E, st_power(n)),
        )

    for n in range(1, min(cfg.nmax, 10) + 1):
        w = st_power(n)
        lhs = t_inverse(w.inverse()).scale(qpow(n)) - basis(w).scale(qpow(-n))
        terms = {}
        for x in all_words(2 * n - 1):
            value = r_polynomial(x, w)
            if value:
                sign = 1 if x.length % 2 == 0 else -1
                terms[x] = value * qpow(-n) * sign
        report.add(
            f"rpoly/inverse-expansion/{n}",
            "q^n T[(ts)^n]^-1 - q^-n T[(st)^n] = q^-n sum (-1)^l(w) R_{w,(st)^n} T[w]",
            {"n": n},
            HeckeElement(terms),
            lhs,
        )
    return report


def suite_hh0(cfg: SuiteConfig) -> SuiteReport:
    report = SuiteReport("hh0", cfg.seed)
    rng = random.Random(cfg.seed)

    fixed_ok = True
    witness = ""
    checks = [
        (basis(WeylWord(1, "s")), HH0Class.basis_s()),
        (basis(WeylWord(1, "t")), HH0Class.basis_t()),
    ] + [(basis(st_power(n)), HH0Class.basis_even(n)) for n in range(cfg.nmax + 1)]
    for element, expected in checks:
        if reduce_to_hh0(element) != expected:
            fixed_ok, witness = False, str(element)
            break
    report.add_bool(
        "hh0/basis-fixed-points",
        "canonical basis elements reduce to themselves",
        {"nmax": cfg.nmax},
        fixed_ok,
        witness,
    )

    trace_ok = True
    witness = ""
    for k in range(cfg.trace_pairs):
        a = _random_hecke(rng, 8)
        b = _random_hecke(rng, 8)
        if reduce_to_hh0(t_mul(a, b)) != reduce_to_hh0(t_mul(b, a)):
            trace_ok, witness = False, f"case {k}"
            break
    report.add_bool(
        "hh0/trace-property",
        "reduce(ab) = reduce(ba) for seeded random pairs, support length <= 8",
        {"pairs": cfg.trace_pairs, "seed": cfg.seed},
        trace_ok,
        witness,
    )

    linear_ok = True
    for k in range(25):
        a = _random_hecke(rng, 8)
        b = _random_hecke(rng, 8)
        c = _random_laurent(rng)
        lhs = reduce_to_hh0(a.scale(c) + b)
        rhs = reduce_to_hh0(a).scale(c) + reduce_to_hh0(b)
        if lhs != rhs:
            linear_ok = False
            break
    report.add_bool(
        "hh0/linearity",
        "reduction is LaurentQ-linear",
        {"cases": 25, "seed": cfg.seed},
        linear_ok,
    )

    oracle = TruncatedTraceOracle(cfg.reduce_oracle_cutoff, margin=2)
    for w in all_words(cfg.reduce_oracle_cutoff):
        report.add(
            f"hh0/oracle/{w}",
            "rewriting reduction matches the truncated commutator-space oracle",
            {"word": str(w), "cutoff": cfg.reduce_oracle_cutoff, "margin": 2},
            oracle.class_of_word(w),
            class_of_word(w),
        )
    return report


def suite_clozel(cfg: SuiteConfig) -> SuiteReport:
    report = SuiteReport("clozel", cfg.seed)
    table = [
        ("Ts", HH0Class.basis_s(), HH0Class.basis_s()),
        ("Tt", HH0Class.basis_t(), HH0Class.basis_t()),
        ("E0", HH0Class.basis_even(0), HH0Class.basis_even(0)),
    ] + [
        (f"E{n}", HH0Class.basis_even(n), HH0Class.zero())
        for n in range(1, cfg.nmax + 1)
    ]
    for token, element, expected in table:
        image = sp.one_gc(element)
        ok = image == expected and sp.one_gc(image) == image
        report.add_bool(
            f"clozel/{token}",
            "one_gc = 1 - opind.chi_m.pres matches the explicit table and is idempotent",
            {"basis": token},
            ok,
            f"one_gc({token}) = {image}" if not ok else "",
        )
    return report


def suite_commutator(cfg: SuiteConfig) -> SuiteReport:
    report = SuiteReport("commutator", cfg.seed)
    for n in range(-5, cfg.nmax + 1):
        report.add(
            f"commutator/direct-vs-closed/{n}",
            "one_gc.pind - pind.one_mc equals the R-polynomial closed form",
            {"n": n},
            sp.commutator_closed_form(n),
            sp.commutator_direct(n),
        )
    for n in range(-5, cfg.nmax + 1):
        report.add(
            f"commutator/alternative-form/{n}",
            "the commutator equals (pind - opind).chi_m",
            {"n": n},
            sp.commutator_alternative_form(n),
            sp.commutator_direct(n),
        )
    return report


def suite_geomlemma(cfg: SuiteConfig) -> SuiteReport:
    report = SuiteReport("geomlemma", cfg.seed)
    for n in range(-cfg.nmax, cfg.nmax + 1):
        lam = sp.LambdaElement.monomial(n)
        expected = (
            sp.LambdaElement({0: LaurentQ.const(2)})
            if n == 0
            else sp.LambdaElement({n: ONE, -n: ONE})
        )
        ok = (
            sp.pres_map(sp.pind_map(lam)) == expected
            and sp.pres_map(sp.opind_map(lam)) == expected
        )
        report.add_bool(
            f"geomlemma/{n}",
            "pres.pind = 1 + Ad_w = pres.opind on lambda^n",
            {"n": n},
            ok,
        )

    hom_ok = True
    witness = ""
    for m in range(-6, 7):
        for n in range(-6, 7):
            for image in (sp.pind_hecke, sp.opind_hecke):
                lhs = t_mul(
                    image(sp.LambdaElement.monomial(m)),
                    image(sp.LambdaElement.monomial(n)),
                )
                rhs = image(sp.LambdaElement.monomial(m + n))
                if lhs != rhs:
                    hom_ok, witness = False, f"m={m}, n={n}, map={image.__name__}"
    report.add_bool(
        "geomlemma/homomorphism",
        "pind and opind respect products before reduction",
        {"range": 6},
        hom_ok,
        witness,
    )
    return report


_TORUS_SWEEP_CAP = 20_000  # exhaustive windowed sweeps stay below this basis size


def suite_torus(cfg: SuiteConfig) -> SuiteReport:
    report = SuiteReport("torus", cfg.seed)

    # chain identities are checked on their own labelled windows, kept
    # small enough that the all-sector sweeps stay exhaustive
    identity_windows = {1: 2}
    for rank in cfg.torus_ranks:
        window = identity_windows.get(rank, 1)
        b2_ok = norm_ok = comm_ok = True
        swept = []
        for degree in range(rank + 2):
            if (2 * window + 1) ** (rank * (degree + 1)) > _TORUS_SWEEP_CAP:
                continue
            swept.append(degree)
            for key in tr.windowed_keys(rank, degree, window):
                chain = tr.LatticeChain.from_key(rank, key)
                if degree >= 2:
                    if not tr.hochschild_b(tr.hochschild_b(chain)).is_zero:
                        b2_ok = False
                if not tr._is_degenerate(key):
                    if not tr.connes_B(tr.connes_B(chain)).is_zero:
                        norm_ok = False
                    left = tr.normalize_chain(tr.hochschild_b(tr.connes_B(chain)))
                    right = (
                        tr.connes_B(tr.normalize_chain(tr.hochschild_b(chain)))
                        if degree >= 1
                        else tr.LatticeChain(rank, 0)
                    )
                    if not (left + right).is_zero:
                        norm_ok = False
                for op in ("b", "t", "B"):
                    if not _class_action_commutes(rank, chain, op):
                        comm_ok = False
        report.add_bool(
            f"torus/b-squared/r{rank}",
            "b^2 = 0 on all windowed chains",
            {"rank": rank, "window": window, "degrees": swept},
            b2_ok,
        )
        report.add_bool(
            f"torus/normalized-identities/r{rank}",
            "B^2 = 0 and bB + Bb = 0 on normalized windowed chains",
            {"rank": rank, "window": window, "degrees": swept},
            norm_ok,
        )
        report.add_bool(
            f"torus/class-action-commutes/r{rank}",
            "the compact-part projection commutes with b, t and B on chains",
            {"rank": rank, "window": window, "degrees": swept},
            comm_ok,
        )

    explicit_degrees = cfg.torus_degrees is not None
    for rank in cfg.torus_ranks:
        requested = cfg.torus_degrees if explicit_degrees else range(rank + 1)
        wanted = []
        for p in requested:
            if p > rank:
                continue
            # the boundary-source enumeration is the heaviest sweep
            if (2 * cfg.torus_window + 1) ** (rank * (p + 2)) > 1_000_000:
                if explicit_degrees:
                    raise ConfigError(
                        f"torus square check at rank {rank}, degree {p} needs a "
                        f"window smaller than {cfg.torus_window} to stay at desk scale"
                    )
                continue  # default degree selection sticks to feasible sweeps
            wanted.append(p)
        for p in wanted:
            square = tr.homology_square_check(rank, cfg.torus_window, p)
            report.add_bool(
                f"torus/square/r{rank}/p{p}",
                "hkr.class_action = pi0.hkr up to boundaries on windowed cycles",
                square.as_dict(),
                square.passed,
            )
            report.add(
                f"torus/invariant-dim/r{rank}/p{p}",
                "the invariant part of windowed HH_p has dimension C(rank, p)",
                {"rank": rank, "window": cfg.torus_window, "degree": p},
                _binomial(rank, p),
                square.dim_invariant,
            )
            vacuous = p >= rank
            constant_ok = (
                square.hkr_b_consistent
                and (square.hkr_b_constant is not None or vacuous)
                and (square.hkr_b_constant != 0 or vacuous)
            )
            report.add_bool(
                f"torus/hkr-b-constant/r{rank}/p{p}",
                "hkr.B = c_p * d.hkr on windowed normalized chains, c_p nonzero",
                {
                    "rank": rank,
                    "window": cfg.torus_window,
                    "degree": p,
                    "c_p": str(square.hkr_b_constant),
                    "vacuous": vacuous,
                },
                constant_ok,
            )

        # SBI instance: the compact part of B-images bounds; the p = rank
        # witness needs chains two degrees up, so it is checked on degrees
        # where the windowed sweep stays small
        for p in [p for p in wanted if p <= 1]:
            ok = tr.compact_part_of_b_image_is_boundary(rank, p, cfg.torus_window)
            report.add_bool(
                f"torus/sbi-instance/r{rank}/p{p}",
                "class_action(B(z)) is a boundary for every windowed invariant cycle z",
                {"rank": rank, "window": cfg.torus_window, "degree": p},
                ok,
            )
        pi0_ok = True
        swept = []
        for p in wanted:
            if (2 * cfg.torus_window + 1) ** (rank * (p + 1)) > _TORUS_SWEEP_CAP:
                continue
            swept.append(p)
            for key in tr.windowed_keys(rank, p, cfg.torus_window):
                if tr._is_degenerate(key):
                    continue
                chain = tr.LatticeChain.from_key(rank, key)
                if not tr.pi0(tr.hkr(tr.connes_B(chain))).is_zero:
                    pi0_ok = False
        report.add_bool(
            f"torus/pi0-after-B/r{rank}",
            "pi0.hkr.B = 0 on normalized windowed chains",
            {"rank": rank, "window": cfg.torus_window, "degrees": swept},
            pi0_ok,
        )
    return report


def _class_action_commutes(rank: int, chain: tr.LatticeChain, op: str) -> bool:
    if op == "b":
        if chain.degree == 0:
            return True
        left = tr.hochschild_b(tr.class_action(chain))
        right = tr.class_action(tr.hochschild_b(chain))
    elif op == "t":
        left = tr.cyclic_t(tr.class_action(chain))
        right = tr.class_action(tr.cyclic_t(chain))
    else:
        left = tr.connes_B(tr.class_action(chain))
        right = tr.class_action(tr.connes_B(chain))
    return left == right


def _binomial(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def suite_engine(cfg: SuiteConfig) -> SuiteReport:
    report = SuiteReport("engine", cfg.seed)

    # e1*e1 = e2 but e1*e2 = 1 while e2*e1 = 0, so (e1 e1) e1 != e1 (e1 e1)
    bad = eg.AlgebraSpec(
        name="bad",
        dim=3,
        products={(0, 0): {0: Fraction(1)}, (0, 1): {1: Fraction(1)},
                  (1, 0): {1: Fraction(1)}, (0, 2): {2: Fraction(1)},
                  (2, 0): {2: Fraction(1)}, (1, 1): {2: Fraction(1)},
                  (1, 2): {0: Fraction(1)}},
        unit={0: Fraction(1)},
    )
    try:
        eg.load_algebra(bad)
        witnessed = False
    except eg.NotAssociative as err:
        witnessed = err.witness == (1, 1, 1)
    report.add_bool(
        "engine/not-associative",
        "a non-associative table is rejected with a witness triple",
        {},
        witnessed,
    )
    try:
        eg.load_algebra(
            eg.AlgebraSpec(name="nounit", dim=1, products={(0, 0): {0: Fraction(1)}}, unit=None)
        )
        rejected = False
    except eg.NoUnit:
        rejected = True
    report.add_bool(
        "engine/no-unit",
        "a spec without a unit vector is rejected",
        {},
        rejected,
    )
    try:
        eg.compute_hochschild(eg.group_algebra(6), 6)
        guarded = False
    except eg.TooLarge:
        guarded = True
    report.add_bool(
        "engine/size-guard",
        "chain spaces beyond the guard raise TooLarge",
        {"guard": eg.CHAIN_GUARD},
        guarded,
    )

    algebras = [eg.BUILTIN_ALGEBRAS[name]() for name in cfg.engine_algebras]
    for path in cfg.engine_spec_files:
        algebras.append(eg.load_algebra_file(path))

    for spec in algebras:
        cutoff = cfg.engine_cutoff
        stack = eg.ChainStack(spec, min(cutoff + 1, 3))
        try:
            stack.verify_structure_identities()
            identities_ok = True
        except AssertionError:
            identities_ok = False
        report.add_bool(
            f"engine/{spec.name}/precyclic-identities",
            "d_i d_j = d_{j-1} d_i for i < j and t^(p+1) = 1 on the chain stack",
            {"algebra": spec.name, "degrees": f"<= {min(cutoff + 1, 3)}"},
            identities_ok,
        )

        result = eg.compute_cyclic(spec, cutoff)
        oracle = ENGINE_ORACLE_DIMS.get(spec.name)
        if oracle is not None:
            hh_expected, hc_expected = oracle
            report.add(
                f"engine/{spec.name}/hh-dims",
                "Hochschild dimensions match the hand-derived oracle",
                {"algebra": spec.name, "cutoff": cutoff},
                hh_expected[: cutoff + 1],
                result.hh_dims,
            )
            report.add(
                f"engine/{spec.name}/hc-dims",
                "cyclic dimensions match the hand-derived oracle",
                {"algebra": spec.name, "cutoff": cutoff},
                hc_expected[: cutoff + 1],
                result.hc_dims,
            )
        report.add(
            f"engine/{spec.name}/degree-0",
            "HC_0 = HH_0 (degree-zero coincidence)",
            {"algebra": spec.name},
            result.hh_dims[0],
            result.hc_dims[0],
        )
        nodes = eg.sbi_exactness_check(result)
        for node in nodes:
            report.add_bool(
                f"engine/{spec.name}/exact/{node.node.replace(' ', '')}",
                "the S-B-I long sequence is exact at this node",
                {
                    "algebra": spec.name,
                    "node": node.node,
                    "rank_in": node.rank_in,
                    "rank_out": node.rank_out,
                    "dim": node.dim,
                },
                node.exact,
            )

        if spec.group_table is not None:
            indicator = {0: Fraction(1)}
            action = eg.class_function_action(spec, indicator, result._stack)
            report.add_bool(
                f"engine/{spec.name}/class-action-commutes",
                "the class-function idempotent commutes with every structure map",
                {"algebra": spec.name, "function": "indicator of the identity"},
                action.commutes_with_structure_maps(result._stack, cutoff),
            )
            everything = {g: Fraction(1) for g in range(spec.dim)}
            report.add_bool(
                f"engine/{spec.name}/idempotent-commutator",
                "[e, F]^2 = 0 on cyclic homology for class-function idempotents",
                {"algebra": spec.name},
                eg.idempotent_commutator_square_is_zero(result, everything, indicator),
            )
    return report


_SUITES = {
    "hecke": suite_hecke,
    "rpoly": suite_rpoly,
    "hh0": suite_hh0,
    "clozel": suite_clozel,
    "commutator": suite_commutator,
    "geomlemma": suite_geomlemma,
    "torus": suite_torus,
    "engine": suite_engine,
}


def run_suite(target: str, cfg: SuiteConfig) -> SuiteReport:
    cfg.validate()
    if target == "all":
        combined = SuiteReport("all", cfg.seed)
        for name in SUITE_TARGETS:
            combined.extend(_SUITES[name](cfg))
        return combined
    if target not in _SUITES:
        raise ConfigError(
            f"unknown suite {target!r}; choose from all, {', '.join(SUITE_TARGETS)}"
        )
    return _SUITES[target](cfg)
