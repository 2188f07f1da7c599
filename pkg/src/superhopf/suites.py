"""Exhaustive property suites shared by the CLI and the test-suite.

Each suite is a function ``(SuiteConfig) -> list[Check]``.  A check stops at
its first counterexample and records it so failures are reproducible.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from . import classical, oracle, slambda, snsym, squsym
from .combinatorics import (
    EMPTY,
    SuperPartition,
    compositions_up_to,
    dotted_compositions,
    partitions,
    superpartitions,
    superpartitions_up_to,
)
from .kernel import LinComb, TensorComb, map_legs, tensor, twist
from .slambda import element


@dataclass
class SuiteConfig:
    max_degree: int | None = None  # None means the suite default
    seed: int = 0
    sample: int | None = None  # cap on sampled cases for the slow checks


@dataclass
class Check:
    name: str
    passed: bool
    cases: int
    counterexample: object = None
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f"  first counterexample: {self.counterexample}"
        return f"[{status}] {self.name} ({self.cases} cases, {self.seconds:.2f}s){tail}"


def run_check(name: str, cases: Iterable, predicate: Callable) -> Check:
    t0 = time.perf_counter()
    n = 0
    for case in cases:
        n += 1
        if not predicate(case):
            return Check(name, False, n, case, time.perf_counter() - t0)
    return Check(name, True, n, None, time.perf_counter() - t0)


def _maybe_sample(cases: list, cfg: SuiteConfig) -> list:
    if cfg.sample is None or len(cases) <= cfg.sample:
        return cases
    return random.Random(cfg.seed).sample(cases, cfg.sample)


def _pairs_up_to(items: list, total: int):
    for a in items:
        for b in items:
            if a.n + a.m + b.n + b.m <= total:
                yield a, b


# ----------------------------------------------------------------------------
# sQSym


def _mu_S_id(alpha):
    acc = LinComb()
    for (a, b), c in squsym.comul_M(alpha).items():
        acc = acc + squsym.mul_M(squsym.antipode_M(a), LinComb.basis(b)).scale(c)
    return acc


def _mu_id_S(alpha):
    acc = LinComb()
    for (a, b), c in squsym.comul_M(alpha).items():
        acc = acc + squsym.mul_M(LinComb.basis(a), squsym.antipode_M(b)).scale(c)
    return acc


def _unit(alpha):
    return squsym.ONE if alpha == EMPTY else LinComb()


def _coassoc(alpha):
    left, right = {}, {}
    for (a, b), c in squsym.comul_M(alpha).items():
        for (a1, a2), d in squsym.comul_M(a).items():
            left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * d
        for (b1, b2), d in squsym.comul_M(b).items():
            right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * d
    return LinComb(left) == LinComb(right)


def _bialgebra(pair):
    a, b = pair
    lhs = squsym.comul_M(squsym.mul_M(a, b))
    rhs = squsym.tensor_product(squsym.comul_M(a), squsym.comul_M(b))
    return lhs == rhs


def hopf_qsym(cfg: SuiteConfig) -> list[Check]:
    D = cfg.max_degree if cfg.max_degree is not None else 5
    comps = list(compositions_up_to(D))
    out = [
        run_check("antipode axiom mu(S⊗id)Δ = ε", comps, lambda a: _mu_S_id(a) == _unit(a)),
        run_check("antipode axiom mu(id⊗S)Δ = ε", comps, lambda a: _mu_id_S(a) == _unit(a)),
        run_check("closed-form antipode = recursion", comps,
                  lambda a: squsym.antipode_M(a) == squsym.antipode_recursive(a)),
        run_check("coassociativity", comps, _coassoc),
        run_check("signed commutativity", _pairs_up_to(comps, D),
                  lambda p: squsym.mul_M(*p) == squsym.mul_M(p[1], p[0]).scale((-1) ** (p[0].m * p[1].m))),
        run_check("Δ is multiplicative", _pairs_up_to(list(compositions_up_to(D - 1)), D - 1), _bialgebra),
    ]
    return out


# ----------------------------------------------------------------------------
# oracle


def _oracle_product(pair):
    a, b = pair
    N = a.n + b.n + a.m + b.m + 1
    p = oracle.mul(oracle.expand_M(a, N), oracle.expand_M(b, N))
    return oracle.extract_M(p) == squsym.mul_M(a, b)


def _oracle_coproduct(alpha):
    N = max(len(alpha), 1)
    p = oracle.expand_M(alpha, 2 * N)
    return oracle.extract_M_tensor(p, N) == squsym.comul_M(alpha)


def _oracle_iota(lam):
    N = lam.n + lam.m + 1
    return oracle.extract_M(oracle.expand_m(lam, N)) == squsym.iota(lam)


def _expand_gen(family: str, k: int, fermionic: bool, N: int):
    return oracle.expand_lincomb(slambda.generator_in_m(family, k, fermionic), N,
                                 lambda lam, n: oracle.expand_m(lam, n) if len(lam) <= n else oracle.SuperPolynomial(n))


def _opd(case):
    family, k, N = case
    lhs = _expand_gen(family, k, True, N)
    rhs = oracle.act_d(_expand_gen(family, k + 1, False, N))
    if family == "p":
        direct = oracle.power_sum(k, N, fermionic=True)
        return direct == lhs and rhs == lhs.scale(k + 1)
    return rhs == lhs


def oracle_suite(cfg: SuiteConfig) -> list[Check]:
    D = cfg.max_degree if cfg.max_degree is not None else 4
    comps = list(compositions_up_to(D))
    opd_cases = [(f, k, 6) for f in ("p", "e", "h") for k in range(D + 1)]
    return [
        run_check("product: extract_M(expand·expand) = mul_M", _pairs_up_to(comps, D), _oracle_product),
        run_check("coproduct: two-alphabet split = comul_M", comps, _oracle_coproduct),
        run_check("inclusion: m expansion = iota", list(superpartitions_up_to(D)), _oracle_iota),
        run_check("d identities on p, e, h", opd_cases, _opd),
    ]


# ----------------------------------------------------------------------------
# Lambda


def _delta(a, b):
    return Fraction(1 if a == b else 0)


def _gen(family, k, fermionic):
    if not fermionic and k == 0:
        return SuperPartition((), ())
    return SuperPartition((k,), ()) if fermionic else SuperPartition((), (k,))


def _generator_comul_expected(family, i, fermionic):
    acc = {}
    for k in range(i + 1):
        ell = i - k
        if fermionic:
            terms = [((_gen(family, k, True), _gen(family, ell, False)), 1),
                     ((_gen(family, ell, False), _gen(family, k, True)), 1)]
        else:
            terms = [((_gen(family, k, False), _gen(family, ell, False)), 1)]
        for key, c in terms:
            acc[key] = acc.get(key, 0) + c
    return TensorComb(acc)


def _generator_case(case):
    family, i, fermionic = case
    f = element(family, _gen(family, i, fermionic))
    return slambda.comul(f, legs=family) == _generator_comul_expected(family, i, fermionic)


def hopf_sym(cfg: SuiteConfig) -> list[Check]:
    D = cfg.max_degree if cfg.max_degree is not None else 5
    sps = list(superpartitions_up_to(D))
    same = [(L, O) for L in sps for O in superpartitions(L.n, L.m)]

    def sign(L):
        return (-1) ** (L.n + L.m)

    gens = [(f, i, ferm) for f in ("e", "h") for ferm in (False, True) for i in range(0 if ferm else 1, D + 1)
            if i + ferm <= D]
    return [
        run_check("<<h, m>> = δ", same,
                  lambda p: slambda.hall_scalar(element("h", p[0]), element("m", p[1])) == _delta(*p)),
        run_check("ω(e) = h", sps, lambda L: slambda.convert(slambda.omega(element("e", L)), "h") == element("h", L)),
        run_check("S = (-1)^{n+m} ω on m", sps,
                  lambda L: slambda.antipode(element("m", L)) == slambda.omega(element("m", L)).scale(sign(L))),
        run_check("S(e) = (-1)^{n+m} h", sps,
                  lambda L: slambda.convert(slambda.antipode(element("e", L)), "h") == element("h", L).scale(sign(L))),
        run_check("Δ on e and h generators", gens, _generator_case),
        run_check("cocommutativity on p", sps,
                  lambda L: twist(slambda.comul(element("p", L))) == slambda.comul(element("p", L))),
        run_check("Λ ⊂ sQSym respects Δ", sps,
                  lambda L: map_legs(slambda.comul(element("m", L)), squsym.iota)
                  == squsym.comul_M(squsym.iota(L))),
        run_check("Λ ⊂ sQSym respects S", sps,
                  lambda L: squsym.iota(slambda.antipode(element("m", L)).terms)
                  == squsym.antipode_M(squsym.iota(L))),
    ]


# ----------------------------------------------------------------------------
# Schur functions


def _gram_schmidt(case):
    n, m = case
    block = slambda.macdonald_block(n, m)
    return all(slambda.is_unitriangular(L, P) for L, P in block.items())


def _limits(L):
    slambda.schur(L)
    slambda.schur_bar(L)
    return True


def _dual_pairs(p):
    L, O = p
    return (slambda.hall_scalar(slambda.dual_schur(L), slambda.schur(O)) == _delta(L, O)
            and slambda.hall_scalar(slambda.dual_schur_bar(L), slambda.schur_bar(O)) == _delta(L, O))


def _lr_triples(sps, D):
    for O in sps:
        for G in sps:
            if O.n + G.n + O.m + G.m > D:
                continue
            for L in superpartitions(O.n + G.n, O.m + G.m):
                yield L, O, G


def _lr_symmetry(t):
    L, O, G = t
    return slambda.lr_coefficient("s", L, O, G) == slambda.lr_coefficient(
        "s", L.conjugate(), G.conjugate(), O.conjugate())


def _schur_triples(sps, D):
    for L in sps:
        for G in superpartitions_up_to(L.n + L.m):
            if G.n > L.n or G.m > L.m:
                continue
            for H in superpartitions(L.n - G.n, L.m - G.m):
                yield L, G, H


def _self_duality(t, convention="unsigned"):
    L, G, H = t
    out = True
    for fam, ctor in (("s", slambda.schur), ("sb", slambda.schur_bar)):
        D_ = slambda.comul(ctor(L), legs="m")
        g, h = ctor(G), ctor(H)
        lhs = slambda.hall_tensor(D_, tensor(g.terms, h.terms), "m", "m", convention)
        out &= lhs == slambda.hall_scalar(ctor(L), slambda.mul(g, h))
    return out


def _classical(n):
    for lam in partitions(n):
        L = SuperPartition((), lam)
        s = slambda.schur(L).terms
        sb = slambda.schur_bar(L).terms
        for mu in partitions(n):
            k = classical.kostka(lam, mu)
            M = SuperPartition((), mu)
            if s.get(M, 0) != k or sb.get(M, 0) != k:
                return False
    for j in range(n + 1):
        for lam in partitions(j):
            for mu in partitions(n - j):
                ref = classical.lr(lam, mu)
                got = slambda.lr_coeffs("s", SuperPartition((), lam), SuperPartition((), mu))
                got_b = slambda.lr_coeffs("sb", SuperPartition((), lam), SuperPartition((), mu))
                want = LinComb({SuperPartition((), nu): c for nu, c in ref.items()})
                if got != want or got_b != want:
                    return False
    return True


def skew_coproduct_literal(L: SuperPartition) -> bool:
    """The unsigned statement ``Δ s_Λ = sum s_{Λ/Ω} ⊗ s_Ω`` for both families."""
    return all(slambda.comul_schur(fam, L, literal=True) == slambda.comul(element(fam, L))
               for fam in ("s", "sb"))


def schur_suite(cfg: SuiteConfig) -> list[Check]:
    D = cfg.max_degree if cfg.max_degree is not None else 4
    sps = list(superpartitions_up_to(D))
    bidegrees = [(s - m, m) for s in range(D + 1) for m in range(s + 1)]
    return [
        run_check("Gram-Schmidt unitriangular", bidegrees, _gram_schmidt),
        run_check("u -> 0 and u -> oo limits exist", sps, _limits),
        run_check("<<s*, s>> = <<s̄*, s̄>> = δ", [(L, O) for L in sps for O in superpartitions(L.n, L.m)], _dual_pairs),
        run_check("c^Λ_{ΩΓ} = c^{Λ'}_{Γ'Ω'}", _lr_triples(sps, D), _lr_symmetry),
        run_check("skew coproduct (sign-corrected) = Δ", sps,
                  lambda L: all(slambda.comul_schur(f, L) == slambda.comul(element(f, L)) for f in ("s", "sb"))),
        run_check("self-duality on Schur triples", _maybe_sample(list(_schur_triples(sps, D)), cfg), _self_duality),
        run_check("m = 0 sector matches classical Kostka and LR", range(D + 1), _classical),
    ]


# ----------------------------------------------------------------------------
# sNSym duality triangle


def _pi_pairing(p):
    a, L = p
    return slambda.hall_scalar(snsym.pi(a), element("m", L)) == snsym.pair(snsym.H(a), squsym.iota(L))


def _comul_duality(t, convention="unsigned"):
    a, b, c = t
    lhs = snsym.pair_tensor(snsym.comul_H(a), TensorComb({(b, c): 1}), convention)
    return lhs == snsym.pair(snsym.H(a), squsym.mul_M(b, c))


def _product_duality(t, convention="unsigned"):
    a, b, c = t
    lhs = snsym.pair(snsym.mul_H(b, c), squsym.M(a))
    return lhs == snsym.pair_tensor(TensorComb({(b, c): 1}), squsym.comul_M(a), convention)


def _triples(D):
    comps = list(compositions_up_to(D))
    for a in comps:
        for b in comps:
            if b.n > a.n or b.m > a.m:
                continue
            for c in dotted_compositions(a.n - b.n, a.m - b.m):
                yield a, b, c


def _pi_algebra(p):
    a, b = p
    return snsym.pi(snsym.mul_H(a, b), "m") == slambda.mul(snsym.pi(a, "m"), snsym.pi(b, "m"))


def _pi_coalgebra(a):
    lhs = map_legs(snsym.comul_H(a), lambda x: snsym.pi(x, "m").terms)
    return lhs == slambda.comul(snsym.pi(a, "m"), legs="m")


def duality(cfg: SuiteConfig) -> list[Check]:
    D = cfg.max_degree if cfg.max_degree is not None else 5
    D4 = min(D, 4)
    comps = list(compositions_up_to(D))
    pi_cases = [(a, L) for a in comps for L in superpartitions(a.n, a.m)]
    small = list(compositions_up_to(D4))
    return [
        run_check("<<π(H), m>> = <H, ι(m)>", pi_cases, _pi_pairing),
        run_check("<ΔF, f⊗g> = <F, fg>", _triples(D4), _comul_duality),
        run_check("<FG, f> = <F⊗G, Δf>", _triples(D4), _product_duality),
        run_check("S' = transpose of S agrees with recursion", small,
                  lambda a: snsym.antipode_H(a) == snsym.antipode_recursive(a)),
        run_check("π is multiplicative", _pairs_up_to(small, D4), _pi_algebra),
        run_check("π is comultiplicative", small, _pi_coalgebra),
    ]


# ----------------------------------------------------------------------------
# Cauchy kernel (two alphabets of two variables each)


def cauchy_kernel(nx: int, ny: int, max_degree: int) -> oracle.SuperPolynomial:
    """``prod 1/(1 - x_i y_j - θ_i φ_j)`` truncated to x-side degree ``n + m <= max_degree``."""
    total = nx + ny

    def xdeg(key):
        th, ex = key
        return sum(ex[:nx]) + sum(1 for t in th if t < nx)

    def trunc(p):
        return oracle.SuperPolynomial(total, {k: c for k, c in p.terms.items() if xdeg(k) <= max_degree})

    out = oracle.SuperPolynomial.one(total)
    for i in range(nx):
        for j in range(nx, total):
            factor = oracle.SuperPolynomial(total)
            for k in range(max_degree + 1):
                ex = [0] * total
                ex[i] = ex[j] = k
                factor = factor + oracle.SuperPolynomial.monomial(total, (), ex)
                if k:
                    ex = [0] * total
                    ex[i] = ex[j] = k - 1
                    factor = factor + oracle.SuperPolynomial.monomial(total, (i, j), ex, k)
            out = trunc(oracle.mul(out, factor))
    return out


def _expand_sym(f: slambda.SymElement, nvars: int, offset: int, total: int) -> oracle.SuperPolynomial:
    out = oracle.SuperPolynomial(total)
    for lam, c in slambda.convert(f, "m").terms.items():
        if len(lam) <= nvars:
            out = out + oracle.expand_m(lam, nvars, offset, total).scale(c)
    return out


def cauchy_sum(nx: int, ny: int, max_degree: int, bar: bool = False, signed: bool = False):
    """``sum_Λ ε_Λ s_Λ(x) s*_Λ(y)``; ``signed`` puts ``ε_Λ = (-1)^{C(m,2)}``, else 1."""
    total = nx + ny
    out = oracle.SuperPolynomial(total)
    for L in superpartitions_up_to(max_degree):
        if bar:
            f, g = slambda.schur_bar(L), slambda.dual_schur_bar(L)
        else:
            f, g = slambda.schur(L), slambda.dual_schur(L)
        term = oracle.mul(_expand_sym(f, nx, 0, total), _expand_sym(g, ny, nx, total))
        out = out + term.scale((-1) ** comb(L.m, 2) if signed else 1)
    return out


def cauchy(cfg: SuiteConfig) -> list[Check]:
    D = cfg.max_degree if cfg.max_degree is not None else 3
    kernel = cauchy_kernel(2, 2, D)
    return [
        run_check("kernel = sum (-1)^{C(m,2)} s(x) s*(y)", [False, True],
                  lambda bar: cauchy_sum(2, 2, D, bar=bar, signed=True) == kernel),
    ]


SUITES = {
    "hopf-qsym": hopf_qsym,
    "oracle": oracle_suite,
    "hopf-sym": hopf_sym,
    "schur": schur_suite,
    "duality": duality,
    "cauchy": cauchy,
}

DEFAULT_DEGREE = {"hopf-qsym": 5, "oracle": 4, "hopf-sym": 5, "schur": 4, "duality": 5, "cauchy": 3}
# beyond these the exhaustive suites stop being desk-scale
DEGREE_LIMIT = {"hopf-qsym": 7, "oracle": 5, "hopf-sym": 7, "schur": 5, "duality": 6, "cauchy": 4}


def run_suite(name: str, cfg: SuiteConfig) -> list[Check]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key, cfg))
        return out
    D = cfg.max_degree if cfg.max_degree is not None else DEFAULT_DEGREE[name]
    if D > DEGREE_LIMIT[name]:
        raise slambda.DegreeGuardError(f"suite {name} is capped at max degree {DEGREE_LIMIT[name]}")
    return SUITES[name](SuiteConfig(D, cfg.seed, cfg.sample))
