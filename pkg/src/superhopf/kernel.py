"""Exact coefficients, sparse linear combinations and the sign-twisted tensor algebra.

Rational coefficients are :class:`fractions.Fraction`.  The Macdonald pipeline
uses :class:`RationalFunction`, a reduced quotient of univariate polynomials in
a parameter ``u`` over the rationals.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator, Mapping


class SingularMatrixError(ArithmeticError):
    pass


class PoleError(ArithmeticError):
    pass


def fmt_coeff(c) -> str:
    """Render a rational as ``p/q`` (denominator omitted when 1)."""
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_coeff(text: str) -> Fraction:
    return Fraction(text.strip())


def fermionic_degree(index) -> int:
    return index.m


# ----------------------------------------------------------------------------
# linear combinations


class LinComb(Mapping):
    """Sparse map index -> coefficient; zero coefficients are never stored."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for k, c in items:
                c = d.get(k, 0) + c
                if c:
                    d[k] = c
                else:
                    d.pop(k, None)
        self._terms = d

    @classmethod
    def basis(cls, index, coeff=1) -> "LinComb":
        return cls({index: coeff})

    def __getitem__(self, key):
        return self._terms[key]

    def get(self, key, default=0):
        return self._terms.get(key, default)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LinComb") -> "LinComb":
        out = dict(self._terms)
        for k, c in other.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return _raw(out)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + other.scale(-1)

    def __neg__(self) -> "LinComb":
        return self.scale(-1)

    def scale(self, c) -> "LinComb":
        if not c:
            return LinComb()
        return _raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, c):
        if isinstance(c, LinComb):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def map_coeffs(self, f: Callable) -> "LinComb":
        return LinComb((k, f(v)) for k, v in self._terms.items())

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def homogeneous_parts(self) -> dict:
        parts: dict = {}
        for k, c in self._terms.items():
            parts.setdefault((k.n, k.m), {})[k] = c
        return {b: _raw(t) for b, t in parts.items()}

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*[{k}]" for k, c in self.sorted_items())


def _raw(d: dict) -> LinComb:
    out = LinComb.__new__(LinComb)
    out._terms = d
    return out


def linear_extend(f: Callable[..., LinComb], *elements: LinComb) -> LinComb:
    """Multilinear extension of ``f`` defined on basis indices."""
    acc: dict = {}

    def add(lc, c):
        for k, v in lc.items():
            w = acc.get(k, 0) + v * c
            if w:
                acc[k] = w
            else:
                acc.pop(k, None)

    def rec(i, idx, coeff):
        if i == len(elements):
            add(f(*idx), coeff)
            return
        for k, c in elements[i].items():
            rec(i + 1, idx + (k,), coeff * c)

    rec(0, (), 1)
    return _raw(acc)


# ----------------------------------------------------------------------------
# tensors


class TensorComb(LinComb):
    """Linear combination over ordered index pairs ``(left, right)``."""

    __slots__ = ()

    def __add__(self, other):
        return _as_tensor(super().__add__(other))

    def scale(self, c):
        return _as_tensor(super().scale(c))

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*[{a}]⊗[{b}]" for (a, b), c in self.sorted_items())


def _as_tensor(lc: LinComb) -> TensorComb:
    out = TensorComb.__new__(TensorComb)
    out._terms = lc._terms
    return out


def tensor(f: LinComb, g: LinComb) -> TensorComb:
    """``f ⊗ g`` with no sign."""
    return _as_tensor(LinComb(((a, b), c * d) for a, c in f.items() for b, d in g.items()))


def tensor_mul(s: TensorComb, t: TensorComb, leg_product: Callable, degree=fermionic_degree) -> TensorComb:
    """``(f1⊗g1)(f2⊗g2) = (-1)^{deg g1 · deg f2} f1 f2 ⊗ g1 g2``, extended bilinearly."""
    acc: dict = {}
    for (f1, g1), c1 in s.items():
        for (f2, g2), c2 in t.items():
            c = c1 * c2
            if degree(g1) % 2 and degree(f2) % 2:
                c = -c
            left = leg_product(f1, f2)
            if not left:
                continue
            right = leg_product(g1, g2)
            for a, ca in left.items():
                for b, cb in right.items():
                    w = acc.get((a, b), 0) + c * ca * cb
                    if w:
                        acc[(a, b)] = w
                    else:
                        acc.pop((a, b), None)
    return _as_tensor(_raw(acc))


def twist(t: TensorComb, degree=fermionic_degree) -> TensorComb:
    """Topologist's twist ``g⊗h -> (-1)^{deg g · deg h} h⊗g``."""
    return _as_tensor(LinComb(
        ((b, a), -c if degree(a) % 2 and degree(b) % 2 else c) for (a, b), c in t.items()
    ))


def map_legs(t: TensorComb, left: Callable, right: Callable | None = None) -> TensorComb:
    """Apply linear maps (basis index -> LinComb) to each leg; no signs."""
    right = right or left
    acc = TensorComb()
    for (a, b), c in t.items():
        acc = acc + tensor(left(a), right(b)).scale(c)
    return acc


TWIST_CONVENTIONS = ("unsigned", "twist", "diagonal")


def paired(phi: Callable, s: TensorComb, t: TensorComb, convention: str = "unsigned", degree=fermionic_degree):
    """Bilinear pairing of tensors from single-index pairing ``phi``.

    ``convention="twist"`` inserts the sign ``(-1)^{deg g · deg a}`` for
    ``<f⊗g, a⊗b>`` coming from the twist of the middle legs;
    ``"diagonal"`` inserts ``(-1)^{deg f · deg a}``;
    ``"unsigned"`` pairs the legs independently.  Only ``"unsigned"`` makes
    the Hopf dualities hold (see ``scripts/pairing_conventions.py``).
    """
    if convention not in TWIST_CONVENTIONS:
        raise ValueError(f"unknown pairing convention {convention!r}")
    total = 0
    for (f, g), c1 in s.items():
        for (a, b), c2 in t.items():
            v = phi(f, a)
            if not v:
                continue
            w = phi(g, b)
            if not w:
                continue
            sign = 1
            if convention == "twist" and degree(g) % 2 and degree(a) % 2:
                sign = -1
            elif convention == "diagonal" and degree(f) % 2 and degree(a) % 2:
                sign = -1
            total += sign * c1 * c2 * v * w
    return total


# ----------------------------------------------------------------------------
# univariate polynomials over Q (coefficient tuples, constant term first)


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, q):
    n = max(len(p), len(q))
    return _trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def _pneg(p):
    return tuple(-a for a in p)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _pdivmod(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    p = list(p)
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    while len(p) >= len(q) and p:
        shift = len(p) - len(q)
        c = Fraction(p[-1]) / lead
        quot[shift] = c
        for i, b in enumerate(q):
            p[i + shift] -= c * b
        p = list(_trim(p))
    return _trim(quot), _trim(p)


def _pmonic(p):
    return tuple(Fraction(a) / p[-1] for a in p)


def _pgcd(p, q):
    while q:
        _, r = _pdivmod(p, q)
        p, q = q, r
    return _pmonic(p) if p else ()


def _peval(p, x):
    acc = Fraction(0)
    for a in reversed(p):
        acc = acc * x + a
    return acc


class RationalFunction:
    """Reduced quotient ``num/den`` in ``Q(u)`` with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(Fraction(1),), _reduced=False):
        if isinstance(num, (int, Fraction)):
            num = (Fraction(num),)
        num = _trim(Fraction(a) for a in num)
        den = _trim(Fraction(a) for a in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if not num:
                den = (Fraction(1),)
            else:
                g = _pgcd(num, den)
                if len(g) > 1:
                    num = _pdivmod(num, g)[0]
                    den = _pdivmod(den, g)[0]
                lead = den[-1]
                if lead != 1:
                    num = tuple(a / lead for a in num)
                    den = tuple(a / lead for a in den)
        self.num = num
        self.den = den

    @classmethod
    def u(cls) -> "RationalFunction":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        return x if isinstance(x, RationalFunction) else cls((Fraction(x),))

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = RationalFunction.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            return RationalFunction(_padd(self.num, other.num), self.den)
        return RationalFunction(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)), _pmul(self.den, other.den)
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RationalFunction()
            return RationalFunction(tuple(a * other for a in self.num), self.den, _reduced=True)
        other = RationalFunction.coerce(other)
        return RationalFunction(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __call__(self, x):
        d = _peval(self.den, Fraction(x))
        if not d:
            raise PoleError(f"pole at u={x}")
        return _peval(self.num, Fraction(x)) / d

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def __repr__(self):
        def ptxt(p):
            if not p:
                return "0"
            return " + ".join(f"{fmt_coeff(a)}*u^{i}" if i else fmt_coeff(a) for i, a in enumerate(p) if a)
        if self.den == (1,):
            return f"({ptxt(self.num)})"
        return f"({ptxt(self.num)})/({ptxt(self.den)})"


def rf_limit_zero(r: RationalFunction) -> Fraction:
    r = RationalFunction.coerce(r)
    if not r.num:
        return Fraction(0)
    if not r.den[0]:
        raise PoleError(f"{r} has a pole at u=0")
    return (r.num[0] if r.num else Fraction(0)) / r.den[0]


def rf_limit_infinity(r: RationalFunction) -> Fraction:
    r = RationalFunction.coerce(r)
    if not r.num:
        return Fraction(0)
    if len(r.num) > len(r.den):
        raise PoleError(f"{r} diverges as u -> infinity")
    if len(r.num) < len(r.den):
        return Fraction(0)
    return r.num[-1] / r.den[-1]


# ----------------------------------------------------------------------------
# exact linear algebra


def solve_linear(A, b):
    """Solve ``A x = b`` exactly by Gaussian elimination over the coefficient field."""
    n = len(A)
    if any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve_linear needs a square system")
    M = [list(row) + [b[i]] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            raise SingularMatrixError(f"singular matrix at column {col}")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col] if not isinstance(M[col][col], int) else Fraction(1, M[col][col])
        row = [x * inv for x in M[col]]
        M[col] = row
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], row)]
    return [M[i][n] for i in range(n)]


def invert_matrix(A):
    """Exact inverse (rows of the result are rows of ``A^{-1}``)."""
    n = len(A)
    cols = [solve_linear(A, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]
