"""Brute-force polynomials in commuting x's and anticommuting thetas.

Everything here is deliberately naive: elements are expanded in a finite
number of variables and multiplied monomial by monomial.  It is the
independent check for the combinatorial rules in :mod:`superhopf.squsym`.
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .combinatorics import DottedComposition, SuperPartition, multiset_permutations
from .kernel import LinComb, TensorComb


class TooFewVariablesError(ValueError):
    pass


class NotQuasisymmetricError(ValueError):
    pass


def theta_normalize(indices) -> tuple[int, tuple[int, ...]] | None:
    """Sort a theta word; returns ``(sign, sorted)`` or None if an index repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return None
    inv = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return (-1) ** inv, tuple(sorted(idx))


class SuperPolynomial:
    """Sparse polynomial; keys are ``(theta_indices, exponents)`` with 0-based variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms: dict = {}
        for k, c in (terms or {}).items():
            if c:
                self.terms[k] = self.terms.get(k, 0) + c
        self.terms = {k: c for k, c in self.terms.items() if c}

    @classmethod
    def one(cls, nvars: int) -> "SuperPolynomial":
        return cls(nvars, {((), (0,) * nvars): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, thetas, exponents, coeff=1) -> "SuperPolynomial":
        """``coeff * theta_{thetas[0]} theta_{thetas[1]} ... x^exponents`` (order matters)."""
        norm = theta_normalize(thetas)
        if norm is None:
            return cls(nvars)
        sign, th = norm
        return cls(nvars, {(th, tuple(exponents)): Fraction(coeff) * sign})

    def _add_term(self, key, c):
        v = self.terms.get(key, 0) + c
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        _same(self, other)
        out = SuperPolynomial(self.nvars, self.terms)
        for k, c in other.terms.items():
            out._add_term(k, c)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SuperPolynomial":
        return SuperPolynomial(self.nvars, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SuperPolynomial):
            return self.scale(other)
        return mul(self, other)

    def __eq__(self, other):
        return isinstance(other, SuperPolynomial) and self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for (th, ex), c in sorted(self.terms.items(), key=_term_order):
            mono = "".join(f"θ{i + 1}" for i in th) + "".join(
                f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(ex) if e
            )
            out.append(f"{c}*{mono or '1'}")
        return " + ".join(out)


def _term_order(item):
    # thetas first, then x1 before x2 and higher powers before lower
    (th, ex), _ = item
    return th, tuple(-e for e in ex)


def _same(p, q):
    if p.nvars != q.nvars:
        raise ValueError("superpolynomials over different variable counts")


def mul(p: SuperPolynomial, q: SuperPolynomial) -> SuperPolynomial:
    _same(p, q)
    out = SuperPolynomial(p.nvars)
    for (t1, e1), c1 in p.terms.items():
        s1 = set(t1)
        for (t2, e2), c2 in q.terms.items():
            if s1.intersection(t2):
                continue
            # moving each theta of q left past the larger thetas of p
            inv = sum(1 for a in t1 for b in t2 if a > b)
            key = (tuple(sorted(t1 + t2)), tuple(a + b for a, b in zip(e1, e2)))
            out._add_term(key, c1 * c2 * (-1 if inv % 2 else 1))
    return out


def act_d(p: SuperPolynomial) -> SuperPolynomial:
    """``d = sum_i theta_i d/dx_i`` acting from the left."""
    out = SuperPolynomial(p.nvars)
    for (th, ex), c in p.terms.items():
        for i, e in enumerate(ex):
            if not e or i in th:
                continue
            sign = -1 if sum(1 for t in th if t < i) % 2 else 1
            new_ex = ex[:i] + (e - 1,) + ex[i + 1:]
            out._add_term((tuple(sorted(th + (i,))), new_ex), c * e * sign)
    return out


def expand_M(alpha: DottedComposition, nvars: int, offset: int = 0, total: int | None = None) -> SuperPolynomial:
    """Monomial quasisymmetric function on variables ``offset .. offset+nvars-1``.

    ``total`` is the size of the ambient alphabet (defaults to ``offset + nvars``).
    """
    total = offset + nvars if total is None else total
    ell = len(alpha)
    if nvars < ell:
        raise TooFewVariablesError(f"{alpha} needs at least {ell} variables, got {nvars}")
    out = SuperPolynomial(total)
    for idx in itertools.combinations(range(offset, offset + nvars), ell):
        ex = [0] * total
        th = []
        for i, (v, d) in zip(idx, alpha.parts):
            ex[i] = v
            if d:
                th.append(i)
        out._add_term((tuple(th), tuple(ex)), Fraction(1))
    return out


def expand_m(lam: SuperPartition, nvars: int, offset: int = 0, total: int | None = None) -> SuperPolynomial:
    """Monomial symmetric function in superspace, summing distinct terms only."""
    total = offset + nvars if total is None else total
    if nvars < len(lam):
        raise TooFewVariablesError(f"{lam} needs at least {len(lam)} variables, got {nvars}")
    variables = range(offset, offset + nvars)
    m = lam.m
    sym = lam.symmetric + (0,) * (nvars - m - len(lam.symmetric))
    out = SuperPolynomial(total)
    for ferm_vars in itertools.permutations(variables, m):
        rest = [v for v in variables if v not in ferm_vars]
        for arrangement in multiset_permutations(sym):
            ex = [0] * total
            for v, a in zip(ferm_vars, lam.fermionic):
                ex[v] = a
            for v, a in zip(rest, arrangement):
                ex[v] = a
            sign, th = theta_normalize(ferm_vars)
            out._add_term((th, tuple(ex)), Fraction(sign))
    return out


def expand_lincomb(f: LinComb, nvars: int, expander) -> SuperPolynomial:
    out = SuperPolynomial(nvars)
    for k, c in f.items():
        out = out + expander(k, nvars).scale(c)
    return out


def _leading_composition(th, ex, start, stop):
    """Dotted composition whose leading term sits on variables ``start..``; None if not leading."""
    parts = []
    ths = set(th)
    used = [i for i in range(start, stop) if ex[i] or i in ths]
    if used != list(range(start, start + len(used))):
        return None
    for i in used:
        parts.append((ex[i], i in ths))
    return DottedComposition(tuple(parts))


def extract_M(p: SuperPolynomial) -> LinComb:
    """Read the M-expansion of a quasisymmetric polynomial from its leading terms."""
    coeffs = {}
    for (th, ex), c in p.terms.items():
        alpha = _leading_composition(th, ex, 0, p.nvars)
        if alpha is not None:
            coeffs[alpha] = c
    out = LinComb(coeffs)
    rebuilt = SuperPolynomial(p.nvars)
    for alpha, c in out.items():
        rebuilt = rebuilt + expand_M(alpha, p.nvars).scale(c)
    if rebuilt != p:
        raise NotQuasisymmetricError("polynomial is not quasisymmetric in its variables")
    return out


def extract_M_tensor(p: SuperPolynomial, nx: int) -> TensorComb:
    """Split a two-alphabet polynomial (x's first, then y's) into M ⊗ M.

    Anticommuting variables of the first alphabet precede those of the second,
    so a sorted theta word factors as (first alphabet)(second alphabet) with no sign.
    """
    coeffs = {}
    ny = p.nvars - nx
    for (th, ex), c in p.terms.items():
        a = _leading_composition(th, ex, 0, nx)
        b = _leading_composition(th, ex, nx, p.nvars)
        if a is not None and b is not None:
            coeffs[(a, b)] = c
    out = TensorComb(coeffs)
    rebuilt = SuperPolynomial(p.nvars)
    for (a, b), c in out.items():
        rebuilt = rebuilt + mul(expand_M(a, nx, 0, p.nvars), expand_M(b, ny, nx, p.nvars)).scale(c)
    if rebuilt != p:
        raise NotQuasisymmetricError("polynomial is not quasisymmetric in both alphabets")
    return out


def power_sum(r: int, nvars: int, fermionic: bool = False) -> SuperPolynomial:
    """``p_r`` or ``p~_r`` expanded directly from its defining sum."""
    out = SuperPolynomial(nvars)
    for i in range(nvars):
        ex = [0] * nvars
        ex[i] = r
        out._add_term(((i,) if fermionic else (), tuple(ex)), Fraction(1))
    return out
