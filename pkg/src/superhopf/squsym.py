"""Quasisymmetric functions in superspace on the monomial basis ``M_alpha``.

Elements are :class:`~superhopf.kernel.LinComb` objects keyed by
:class:`~superhopf.combinatorics.DottedComposition`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .combinatorics import (
    EMPTY,
    DottedComposition,
    SuperPartition,
    canonicalize_dotted,
    overlapping_shuffles,
    rearrangements,
    strong_refinements,
    weak_coarsenings,
    weak_refinements,
)
from .kernel import LinComb, TensorComb, linear_extend, tensor_mul


class NotSymmetricError(ValueError):
    pass


ONE = LinComb({EMPTY: Fraction(1)})


def M(alpha, coeff=1) -> LinComb:
    if isinstance(alpha, str):
        alpha = DottedComposition.parse(alpha)
    return LinComb({alpha: Fraction(coeff)})


@lru_cache(maxsize=None)
def _mul_basis(alpha: DottedComposition, beta: DottedComposition) -> LinComb:
    return LinComb((gamma, sign) for _, gamma, sign in overlapping_shuffles(alpha, beta))


def mul_M(f, g) -> LinComb:
    """Product on the M basis; accepts indices or linear combinations."""
    if isinstance(f, DottedComposition):
        f = LinComb.basis(f)
    if isinstance(g, DottedComposition):
        g = LinComb.basis(g)
    return linear_extend(_mul_basis, f, g)


def _comul_basis(alpha: DottedComposition) -> TensorComb:
    return TensorComb(((alpha[:k], alpha[k:]), 1) for k in range(len(alpha) + 1))


def comul_M(f) -> TensorComb:
    """Deconcatenation coproduct."""
    if isinstance(f, DottedComposition):
        return _comul_basis(f)
    acc = TensorComb()
    for alpha, c in f.items():
        acc = acc + _comul_basis(alpha).scale(c)
    return acc


def counit(f: LinComb):
    return f.get(EMPTY, 0)


def tensor_product(s: TensorComb, t: TensorComb) -> TensorComb:
    """Product in ``sQSym ⊗ sQSym`` with the fermionic sign twist."""
    return tensor_mul(s, t, _mul_basis)


@lru_cache(maxsize=None)
def _antipode_basis(alpha: DottedComposition) -> LinComb:
    sign = (-1) ** (len(alpha) + comb(alpha.m, 2))
    return LinComb((gamma, sign) for gamma in weak_coarsenings(alpha.reverse()))


def antipode_M(f) -> LinComb:
    """Closed-form antipode: signed sum over weak coarsenings of the reverse."""
    if isinstance(f, DottedComposition):
        return _antipode_basis(f)
    return linear_extend(_antipode_basis, f)


@lru_cache(maxsize=None)
def _antipode_rec_basis(alpha: DottedComposition) -> LinComb:
    if not alpha.parts:
        return ONE
    acc = LinComb()
    for k in range(len(alpha)):
        acc = acc - mul_M(_antipode_rec_basis(alpha[:k]), LinComb.basis(alpha[k:]))
    return acc


def antipode_recursive(f) -> LinComb:
    """Antipode from ``S(a) = -sum S(b_i) c_i`` over the reduced coproduct."""
    if isinstance(f, DottedComposition):
        return _antipode_rec_basis(f)
    return linear_extend(_antipode_rec_basis, f)


def fundamental_L(alpha: DottedComposition) -> LinComb:
    """Sum of M over strong refinements."""
    return LinComb((beta, 1) for beta in strong_refinements(alpha))


def fundamental_Lbar(alpha: DottedComposition) -> LinComb:
    """Sum of M over weak refinements."""
    return LinComb((beta, 1) for beta in weak_refinements(alpha))


@lru_cache(maxsize=None)
def _iota_basis(lam: SuperPartition) -> LinComb:
    out = {}
    for alpha in rearrangements(lam.as_composition()):
        _, sign = canonicalize_dotted(alpha)
        out[alpha] = Fraction(sign)
    return LinComb(out)


def iota(f) -> LinComb:
    """Inclusion of the m basis of Lambda into sQSym."""
    if isinstance(f, SuperPartition):
        return _iota_basis(f)
    return linear_extend(_iota_basis, f)


def to_m(f: LinComb) -> LinComb:
    """Inverse of :func:`iota` on its image; raises NotSymmetricError otherwise."""
    out = {}
    for alpha, c in f.items():
        canon = canonicalize_dotted(alpha)
        if canon is None:
            raise NotSymmetricError(f"M[{alpha}] has a repeated dotted part")
        lam, sign = canon
        if lam.as_composition() == alpha:
            out[lam] = c * sign
    result = LinComb(out)
    if iota(result) != f:
        raise NotSymmetricError("element is not in the image of Lambda")
    return result
