"""Symmetric functions in superspace.

Elements are :class:`SymElement` values: a basis tag plus a linear combination
over superpartitions.  The monomial basis is the hub; every other basis is
reached through per-bidegree transition matrices.  Products are computed in
sQSym through the inclusion ``iota``.

Macdonald polynomials are obtained by Gram-Schmidt along ``q = t = u`` with
coefficients in ``Q(u)``; ``s`` and ``s̄`` are the ``u -> 0`` and ``u -> oo``
limits of their coefficients.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .combinatorics import (
    SuperPartition,
    dominance_leq,
    superpartitions,
)
from .kernel import (
    LinComb,
    PoleError,
    RationalFunction,
    SingularMatrixError,
    TensorComb,
    invert_matrix,
    map_legs,
    paired,
    rf_limit_infinity,
    rf_limit_zero,
    solve_linear,
    tensor_mul,
)
from . import squsym

BASES = ("m", "p", "e", "h", "s", "sb", "s*", "sb*")
EMPTY_SP = SuperPartition((), ())

MAX_DEGREE = 8
MAX_MACDONALD_DEGREE = 6


class DegreeGuardError(ValueError):
    pass


def _guard(n: int, m: int, limit: int):
    if n + m > limit:
        raise DegreeGuardError(f"bidegree ({n}|{m}) exceeds the degree guard n+m <= {limit}")


@dataclass(frozen=True)
class SymElement:
    basis: str
    terms: LinComb = field(default_factory=LinComb)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")

    def _check(self, other):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "SymElement") -> "SymElement":
        self._check(other)
        return SymElement(self.basis, self.terms + other.terms)

    def __sub__(self, other: "SymElement") -> "SymElement":
        self._check(other)
        return SymElement(self.basis, self.terms - other.terms)

    def __neg__(self):
        return SymElement(self.basis, -self.terms)

    def scale(self, c) -> "SymElement":
        return SymElement(self.basis, self.terms.scale(c))

    def __mul__(self, other):
        if isinstance(other, SymElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{self.basis}[{k}]" for k, c in self.terms.sorted_items())


def element(basis: str, lam, coeff=1) -> SymElement:
    if isinstance(lam, str):
        lam = SuperPartition.parse(lam)
    return SymElement(basis, LinComb({lam: Fraction(coeff)}))


ONE_M = SymElement("m", LinComb({EMPTY_SP: Fraction(1)}))


# ----------------------------------------------------------------------------
# products


@lru_cache(maxsize=None)
def _mul_m_basis(a: SuperPartition, b: SuperPartition) -> LinComb:
    return squsym.to_m(squsym.mul_M(squsym.iota(a), squsym.iota(b)))


def mul_m(f: LinComb, g: LinComb) -> LinComb:
    acc = LinComb()
    for a, c in f.items():
        for b, d in g.items():
            acc = acc + _mul_m_basis(a, b).scale(c * d)
    return acc


def _sorted_fermionic(parts) -> tuple[int, tuple[int, ...]] | None:
    if len(set(parts)) != len(parts):
        return None
    inv = sum(1 for i in range(len(parts)) for j in range(i + 1, len(parts)) if parts[i] < parts[j])
    return (-1) ** inv, tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def _mul_multiplicative(a: SuperPartition, b: SuperPartition) -> LinComb:
    """Product in any of the multiplicative bases p, e, h."""
    res = _sorted_fermionic(a.fermionic + b.fermionic)
    if res is None:
        return LinComb()
    # even generators commute with everything: move b's fermions past a's bosons freely
    sign, ferm = res
    sym = tuple(sorted(a.symmetric + b.symmetric, reverse=True))
    return LinComb({SuperPartition(ferm, sym): Fraction(sign)})


def mul(f: SymElement, g: SymElement) -> SymElement:
    """Product; result in f's basis when that basis is multiplicative, else in m."""
    if f.basis == g.basis and f.basis in ("p", "e", "h"):
        acc = LinComb()
        for a, c in f.terms.items():
            for b, d in g.terms.items():
                acc = acc + _mul_multiplicative(a, b).scale(c * d)
        return SymElement(f.basis, acc)
    out = SymElement("m", mul_m(convert(f, "m").terms, convert(g, "m").terms))
    return out if f.basis == "m" else convert(out, f.basis)


# ----------------------------------------------------------------------------
# generators and multiplicative bases


@lru_cache(maxsize=None)
def generator_in_m(family: str, k: int, fermionic: bool) -> LinComb:
    """``p_r, p~_k, e_r, e~_k, h_r, h~_k`` in the m basis."""
    if family == "p":
        return LinComb({SuperPartition((k,), ()) if fermionic else SuperPartition((), (k,)): Fraction(1)})
    if family == "e":
        if fermionic:
            return LinComb({SuperPartition((0,), (1,) * k): Fraction(1)})
        return LinComb({SuperPartition((), (1,) * k): Fraction(1)})
    if family == "h":
        if fermionic:
            return LinComb((lam, Fraction(lam.fermionic[0] + 1)) for lam in superpartitions(k, 1))
        return LinComb((lam, Fraction(1)) for lam in superpartitions(k, 0))
    raise ValueError(f"unknown generator family {family!r}")


@lru_cache(maxsize=None)
def expand_in_m(basis: str, lam: SuperPartition) -> LinComb:
    """``p_Λ``, ``e_Λ`` or ``h_Λ`` in the m basis, fermionic factors first in listed order."""
    if basis not in ("p", "e", "h"):
        raise ValueError(f"{basis} is not a multiplicative basis")
    acc = LinComb({EMPTY_SP: Fraction(1)})
    for a in lam.fermionic:
        acc = mul_m(acc, generator_in_m(basis, a, True))
    for r in lam.symmetric:
        acc = mul_m(acc, generator_in_m(basis, r, False))
    return acc


# ----------------------------------------------------------------------------
# transition matrices

_cache_lock = threading.Lock()
_transition: dict = {}


def _columns_in_m(basis: str, n: int, m: int) -> list[LinComb]:
    sps = superpartitions(n, m)
    if basis == "m":
        return [LinComb({lam: Fraction(1)}) for lam in sps]
    if basis in ("p", "e", "h"):
        return [expand_in_m(basis, lam) for lam in sps]
    if basis == "s":
        return [schur(lam).terms for lam in sps]
    if basis == "sb":
        return [schur_bar(lam).terms for lam in sps]
    if basis == "s*":
        return [dual_schur(lam).terms for lam in sps]
    if basis == "sb*":
        return [dual_schur_bar(lam).terms for lam in sps]
    raise ValueError(basis)


def transition(basis: str, n: int, m: int) -> tuple[list, list]:
    """``(to_m, from_m)`` matrices for bidegree (n|m); columns indexed by ``superpartitions(n, m)``.

    Built once per key; concurrent readers see either nothing or the finished pair.
    """
    key = (basis, n, m)
    got = _transition.get(key)
    if got is not None:
        return got
    _guard(n, m, MAX_DEGREE)
    sps = superpartitions(n, m)
    cols = _columns_in_m(basis, n, m)
    to_m = [[cols[j].get(sps[i], Fraction(0)) for j in range(len(sps))] for i in range(len(sps))]
    from_m = invert_matrix(to_m) if sps else []
    with _cache_lock:
        _transition.setdefault(key, (to_m, from_m))
    return _transition[key]


def _apply(matrix, sps, f: LinComb) -> LinComb:
    idx = {lam: j for j, lam in enumerate(sps)}
    out = {}
    for lam, c in f.items():
        j = idx[lam]
        for i in range(len(sps)):
            if matrix[i][j]:
                out[sps[i]] = out.get(sps[i], 0) + matrix[i][j] * c
    return LinComb(out)


def convert(f: SymElement, to: str) -> SymElement:
    """Exact change of basis through the monomial basis."""
    if to not in BASES:
        raise ValueError(f"unknown basis {to!r}")
    if f.basis == to:
        return f
    in_m = LinComb()
    for (n, m), part in f.terms.homogeneous_parts().items():
        in_m = in_m + (part if f.basis == "m" else _apply(transition(f.basis, n, m)[0], superpartitions(n, m), part))
    if to == "m":
        return SymElement("m", in_m)
    out = LinComb()
    for (n, m), part in in_m.homogeneous_parts().items():
        out = out + _apply(transition(to, n, m)[1], superpartitions(n, m), part)
    return SymElement(to, out)


# ----------------------------------------------------------------------------
# coproduct, omega, antipode


def _mul_p(a, b) -> LinComb:
    return _mul_multiplicative(a, b)


@lru_cache(maxsize=None)
def _comul_p_basis(lam: SuperPartition) -> TensorComb:
    one = (EMPTY_SP, EMPTY_SP)
    acc = TensorComb({one: Fraction(1)})
    gens = [SuperPartition((a,), ()) for a in lam.fermionic] + [SuperPartition((), (r,)) for r in lam.symmetric]
    for g in gens:
        acc = tensor_mul(acc, TensorComb({(g, EMPTY_SP): 1, (EMPTY_SP, g): 1}), _mul_p)
    return acc


def comul(f: SymElement, legs: str | None = None) -> TensorComb:
    """Coproduct from primitivity of the power sums; legs expressed in ``legs`` (default: f's basis)."""
    legs = legs or f.basis
    fp = convert(f, "p")
    acc = TensorComb()
    for lam, c in fp.terms.items():
        acc = acc + _comul_p_basis(lam).scale(c)
    if legs == "p":
        return acc
    return map_legs(acc, lambda lam: convert(SymElement("p", LinComb({lam: 1})), legs).terms)


def tensor_product(s: TensorComb, t: TensorComb, basis: str = "p") -> TensorComb:
    """Twisted product in Λ⊗Λ with both tensors in the same basis."""
    def leg(a, b):
        return mul(SymElement(basis, LinComb({a: 1})), SymElement(basis, LinComb({b: 1}))).terms
    return tensor_mul(s, t, leg)


def omega(f: SymElement) -> SymElement:
    fp = convert(f, "p")
    out = LinComb((lam, c * (-1) ** (lam.n - len(lam.symmetric))) for lam, c in fp.terms.items())
    return convert(SymElement("p", out), f.basis)


def antipode(f: SymElement) -> SymElement:
    fp = convert(f, "p")
    out = LinComb((lam, c * (-1) ** len(lam)) for lam, c in fp.terms.items())
    return convert(SymElement("p", out), f.basis)


def counit(f: SymElement):
    return convert(f, "m").terms.get(EMPTY_SP, 0)


# ----------------------------------------------------------------------------
# scalar products


def z(partition: tuple[int, ...]) -> int:
    """``z_λ = prod_i i^{n_i} n_i!``."""
    out = 1
    for i in set(partition):
        k = partition.count(i)
        out *= i ** k * factorial(k)
    return out


def hall_scalar(f: SymElement, g: SymElement):
    """Hall-type scalar product, diagonal on power sums with weight ``z_{Λ^s}``."""
    fp, gp = convert(f, "p").terms, convert(g, "p").terms
    return sum((c * gp.get(lam, 0) * z(lam.symmetric) for lam, c in fp.items()), Fraction(0))


def hall_tensor(s: TensorComb, t: TensorComb, basis_s: str, basis_t: str, convention: str = "unsigned"):
    """Scalar product on Λ⊗Λ built leg by leg from :func:`hall_scalar`."""
    def phi(a, b):
        return hall_scalar(SymElement(basis_s, LinComb({a: 1})), SymElement(basis_t, LinComb({b: 1})))
    return paired(phi, s, t, convention)


# ----------------------------------------------------------------------------
# Macdonald polynomials along q = t = u


def _weight(lam: SuperPartition) -> RationalFunction:
    exp = sum(lam.fermionic)
    return RationalFunction((Fraction(0),) * exp + (Fraction(z(lam.symmetric)),))


@lru_cache(maxsize=None)
def macdonald_block(n: int, m: int) -> dict:
    """Gram-Schmidt over Q(u) for all of SPar(n|m); values are LinComb over RationalFunction."""
    _guard(n, m, MAX_MACDONALD_DEGREE)
    sps = superpartitions(n, m)
    to_m, from_m = transition("p", n, m)
    size = len(sps)
    weights = [_weight(lam) for lam in sps]
    # column j of from_m: m_j in the p basis
    gram = [[sum((weights[k] * (from_m[k][i] * from_m[k][j]) for k in range(size) if from_m[k][i] and from_m[k][j]),
                 RationalFunction())
             for j in range(size)] for i in range(size)]
    order = list(reversed(range(size)))  # smallest in the linear extension first
    out = {}
    for pos, k in enumerate(order):
        lower = order[:pos]
        coeffs = {sps[k]: RationalFunction.coerce(1)}
        if lower:
            A = [[gram[i][j] for j in lower] for i in lower]
            b = [-gram[i][k] for i in lower]
            try:
                x = solve_linear(A, b)
            except SingularMatrixError as exc:
                raise SingularMatrixError(f"Gram-Schmidt failed at {sps[k]}") from exc
            for j, c in zip(lower, x):
                if c:
                    coeffs[sps[j]] = c
        out[sps[k]] = LinComb(coeffs)
    return out


def macdonald_P(lam: SuperPartition) -> LinComb:
    """``P_Λ`` at ``q = t = u`` in the m basis (coefficients in Q(u))."""
    return macdonald_block(lam.n, lam.m)[lam]


def is_unitriangular(lam: SuperPartition, poly: LinComb) -> bool:
    """Leading coefficient 1 and support inside the dominance order ideal below lam."""
    return poly.get(lam) == 1 and all(dominance_leq(om, lam) for om in poly)


def _limit(poly: LinComb, lim) -> LinComb:
    out = {}
    for om, c in poly.items():
        try:
            out[om] = lim(c)
        except PoleError as exc:
            raise PoleError(f"coefficient of m[{om}] has no limit: {exc}") from exc
    return LinComb(out)


@lru_cache(maxsize=None)
def _schur(lam: SuperPartition, bar: bool) -> LinComb:
    return _limit(macdonald_P(lam), rf_limit_infinity if bar else rf_limit_zero)


def schur(lam: SuperPartition) -> SymElement:
    return SymElement("m", _schur(lam, False))


def schur_bar(lam: SuperPartition) -> SymElement:
    return SymElement("m", _schur(lam, True))


@lru_cache(maxsize=None)
def _dual(lam: SuperPartition, bar: bool) -> LinComb:
    sign = (-1) ** comb(lam.m, 2)
    base = schur(lam.conjugate()) if bar else schur_bar(lam.conjugate())
    return convert(omega(base), "m").terms.scale(sign)


def dual_schur(lam: SuperPartition) -> SymElement:
    """``s*_Λ = (-1)^{C(m,2)} ω s̄_{Λ'}``."""
    return SymElement("m", _dual(lam, False))


def dual_schur_bar(lam: SuperPartition) -> SymElement:
    """``s̄*_Λ = (-1)^{C(m,2)} ω s_{Λ'}``."""
    return SymElement("m", _dual(lam, True))


# ----------------------------------------------------------------------------
# Littlewood-Richardson coefficients, skew functions and Schur coproducts


def _family(bar: bool) -> str:
    return "sb" if bar else "s"


@lru_cache(maxsize=None)
def _lr(bar: bool, gamma: SuperPartition, omega_: SuperPartition) -> LinComb:
    fam = _family(bar)
    prod = mul(element(fam, gamma), element(fam, omega_))
    return convert(prod, fam).terms


def lr_coeffs(family: str, gamma: SuperPartition, omega_: SuperPartition) -> LinComb:
    """Structure constants: ``s_Γ s_Ω = sum_Λ c^Λ_{ΓΩ} s_Λ`` (``family`` is ``"s"`` or ``"sb"``)."""
    return _lr(family == "sb", gamma, omega_)


def lr_coefficient(family: str, lam, gamma, omega_):
    return lr_coeffs(family, gamma, omega_).get(lam, 0)


def skew(family: str, lam: SuperPartition, om: SuperPartition) -> SymElement:
    """``s_{Λ/Ω} = sum_Γ c̄^{Λ'}_{Γ'Ω'} s_Γ`` and ``s̄_{Λ/Ω} = sum_Γ c^Λ_{ΩΓ} s̄_Γ``."""
    n, m = lam.n - om.n, lam.m - om.m
    if n < 0 or m < 0:
        return SymElement(family)
    out = {}
    for gam in superpartitions(n, m):
        if family == "s":
            c = lr_coefficient("sb", lam.conjugate(), gam.conjugate(), om.conjugate())
        else:
            c = lr_coefficient("s", lam, om, gam)
        if c:
            out[gam] = c
    return SymElement(family, LinComb(out))


def comul_schur(family: str, lam: SuperPartition, literal: bool = False) -> TensorComb:
    """Coproduct of ``s_Λ`` (or ``s̄_Λ``) assembled from skew functions.

    Returns ``sum_Ω (-1)^{(m_Λ - m_Ω) m_Ω} s_{Λ/Ω} ⊗ s_Ω``, which equals
    ``sum_Ω s_Ω ⊗ s_{Λ/Ω}`` by cocommutativity.  The sign is only visible when
    both legs have odd fermionic degree.  ``literal=True`` drops it, giving the
    unsigned ``sum_Ω s_{Λ/Ω} ⊗ s_Ω``; that form does not agree with
    :func:`comul` once ``m >= 2``.
    """
    acc = {}
    for k in range(lam.n + 1):
        for j in range(lam.m + 1):
            sign = 1 if literal else (-1) ** ((lam.m - j) * j)
            for om in superpartitions(k, j):
                for gam, c in skew(family, lam, om).terms.items():
                    acc[(gam, om)] = acc.get((gam, om), 0) + sign * c
    return TensorComb(acc)


# ----------------------------------------------------------------------------
# bivariate validation mode


def macdonald_block_bivariate(n: int, m: int):
    """Gram-Schmidt over Q(q, t) with the full deformed norm (slow; validation only).

    Returns ``(block, q, t)``; block values map superpartitions to sympy
    expressions in the symbols ``q`` and ``t``.
    """
    import sympy
    from sympy.polys.matrices import DomainMatrix

    q, t = sympy.symbols("q t")
    K = sympy.QQ.frac_field(q, t)
    sps = superpartitions(n, m)
    _, from_m = transition("p", n, m)
    size = len(sps)

    def w(lam):
        val = K.convert(q ** sum(lam.fermionic) * z(lam.symmetric))
        for r in lam.symmetric:
            val = val * K.convert(1 - q ** r) / K.convert(1 - t ** r)
        return val

    weights = [w(lam) for lam in sps]
    gram = [[sum((weights[k] * K.convert(sympy.Rational(from_m[k][i] * from_m[k][j]))
                  for k in range(size) if from_m[k][i] and from_m[k][j]), K.zero)
             for j in range(size)] for i in range(size)]
    order = list(reversed(range(size)))
    out = {}
    for pos, k in enumerate(order):
        lower = order[:pos]
        coeffs = {sps[k]: sympy.Integer(1)}
        if lower:
            A = DomainMatrix([[gram[i][j] for j in lower] for i in lower], (pos, pos), K)
            b = DomainMatrix([[-gram[i][k]] for i in lower], (pos, 1), K)
            x = A.lu_solve(b)
            for j, row in zip(lower, x.to_list()):
                c = K.to_sympy(row[0])
                if c != 0:
                    coeffs[sps[j]] = c
        out[sps[k]] = coeffs
    return out, q, t
