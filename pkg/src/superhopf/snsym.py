"""Noncommutative symmetric functions in superspace on the ``H`` basis.

``H_α = H_{α_1} ... H_{α_ℓ}`` where a dotted part ``ṙ`` stands for the odd
generator ``H̃_r``.  The product is concatenation; the coproduct is the
generator rule extended multiplicatively into the twisted tensor square.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .combinatorics import EMPTY, DottedComposition, SuperPartition, dotted_compositions
from .kernel import LinComb, TensorComb, linear_extend, paired, tensor_mul
from . import squsym
from . import slambda

ONE = LinComb({EMPTY: Fraction(1)})


def H(alpha, coeff=1) -> LinComb:
    if isinstance(alpha, str):
        alpha = DottedComposition.parse(alpha)
    return LinComb({alpha: Fraction(coeff)})


def _concat(a: DottedComposition, b: DottedComposition) -> LinComb:
    return LinComb({a + b: Fraction(1)})


def mul_H(f, g) -> LinComb:
    """Concatenation product, no signs."""
    if isinstance(f, DottedComposition):
        f = LinComb.basis(f)
    if isinstance(g, DottedComposition):
        g = LinComb.basis(g)
    return linear_extend(_concat, f, g)


@lru_cache(maxsize=None)
def _generator_comul(part: tuple[int, bool]) -> TensorComb:
    r, dotted = part
    out = {}
    for k in range(r + 1):
        ell = r - k
        rest = DottedComposition(((ell, False),)) if ell else EMPTY
        if dotted:
            odd = DottedComposition(((k, True),))
            out[(odd, rest)] = out.get((odd, rest), 0) + 1
            out[(rest, odd)] = out.get((rest, odd), 0) + 1
        else:
            left = DottedComposition(((k, False),)) if k else EMPTY
            out[(left, rest)] = 1
    return TensorComb(out)


@lru_cache(maxsize=None)
def _comul_basis(alpha: DottedComposition) -> TensorComb:
    acc = TensorComb({(EMPTY, EMPTY): Fraction(1)})
    for part in alpha.parts:
        acc = tensor_mul(acc, _generator_comul(part), _concat)
    return acc


def comul_H(f) -> TensorComb:
    if isinstance(f, DottedComposition):
        return _comul_basis(f)
    acc = TensorComb()
    for alpha, c in f.items():
        acc = acc + _comul_basis(alpha).scale(c)
    return acc


def counit(F: LinComb):
    return F.get(EMPTY, 0)


def pair(F: LinComb, f: LinComb):
    """``<H_α, M_β> = δ_{αβ}``."""
    return sum((c * f.get(alpha, 0) for alpha, c in F.items()), Fraction(0))


def _delta(a, b):
    return 1 if a == b else 0


def pair_tensor(S: TensorComb, T: TensorComb, convention: str = "unsigned"):
    """Pairing of ``sNSym⊗sNSym`` with ``sQSym⊗sQSym``."""
    return paired(_delta, S, T, convention)


def tensor_product(s: TensorComb, t: TensorComb) -> TensorComb:
    return tensor_mul(s, t, _concat)


# per-bidegree transpose of the sQSym antipode
_lock = threading.Lock()
_antipode_cache: dict = {}


def _antipode_matrix(n: int, m: int) -> dict:
    key = (n, m)
    cached = _antipode_cache.get(key)
    if cached is not None:
        return cached
    rows: dict = {}
    for beta in dotted_compositions(n, m):
        for alpha, c in squsym.antipode_M(beta).items():
            rows.setdefault(alpha, {})[beta] = c
    table = {alpha: LinComb(row) for alpha, row in rows.items()}
    with _lock:
        _antipode_cache.setdefault(key, table)
    return _antipode_cache[key]


def _antipode_basis(alpha: DottedComposition) -> LinComb:
    return _antipode_matrix(alpha.n, alpha.m).get(alpha, LinComb())


def antipode_H(F) -> LinComb:
    """``<S'(H_α), M_β> = <H_α, S(M_β)>``."""
    if isinstance(F, DottedComposition):
        return _antipode_basis(F)
    return linear_extend(_antipode_basis, F)


@lru_cache(maxsize=None)
def _antipode_rec_basis(alpha: DottedComposition) -> LinComb:
    if not alpha.parts:
        return ONE
    acc = LinComb()
    for (a, b), c in _comul_basis(alpha).items():
        if b == EMPTY:
            continue
        acc = acc - mul_H(_antipode_rec_basis(a), LinComb.basis(b)).scale(c)
    return acc


def antipode_recursive(F) -> LinComb:
    """Antipode from ``mu (S ⊗ id) Δ = ε``, solved for the term ending in ``S(F) ⊗ 1``."""
    if isinstance(F, DottedComposition):
        return _antipode_rec_basis(F)
    return linear_extend(_antipode_rec_basis, F)


def _generator_h(part: tuple[int, bool]) -> slambda.SymElement:
    r, dotted = part
    lam = SuperPartition((r,), ()) if dotted else SuperPartition((), (r,))
    return slambda.element("h", lam)


@lru_cache(maxsize=None)
def _pi_basis(alpha: DottedComposition) -> LinComb:
    acc = slambda.element("h", SuperPartition((), ()))
    for part in alpha.parts:
        acc = slambda.mul(acc, _generator_h(part))
    return acc.terms


def pi(F, basis: str = "h") -> slambda.SymElement:
    """Projection onto Λ: ``H_α -> h_{α_1} ... h_{α_ℓ}`` (odd parts give ``h̃``)."""
    if isinstance(F, DottedComposition):
        F = LinComb.basis(F)
    out = slambda.SymElement("h", linear_extend(_pi_basis, F))
    return out if basis == "h" else slambda.convert(out, basis)
