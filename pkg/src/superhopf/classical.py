"""Classical Schur data from semistandard tableaux.

Used only as an independent reference for the ``m = 0`` sector; nothing
here touches the superspace machinery.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .combinatorics import dominates, partitions


def _ssyt(shape, nvars):
    """Yield SSYT of ``shape`` with entries in ``0..nvars-1`` as tuples of rows."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    filling = {}

    def rec(i):
        if i == len(cells):
            yield tuple(tuple(filling[(r, c)] for c in range(shape[r])) for r in range(len(shape)))
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = filling[(r, c - 1)]
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvars):
            filling[(r, c)] = v
            yield from rec(i + 1)
        filling.pop((r, c), None)

    yield from rec(0)


@lru_cache(maxsize=None)
def schur_poly(shape: tuple[int, ...], nvars: int) -> dict:
    """``s_λ(x_1..x_N)`` as ``{exponent tuple: coeff}``."""
    out: Counter = Counter()
    for t in _ssyt(shape, nvars):
        ex = [0] * nvars
        for row in t:
            for v in row:
                ex[v] += 1
        out[tuple(ex)] += 1
    return dict(out)


def kostka(shape, content) -> int:
    """Number of SSYT of the given shape and content."""
    n = len(content)
    return schur_poly(tuple(shape), n).get(tuple(content), 0) if n >= len(shape) else 0


def _poly_mul(p, q):
    out: Counter = Counter()
    for a, c in p.items():
        for b, d in q.items():
            out[tuple(x + y for x, y in zip(a, b))] += c * d
    return {k: v for k, v in out.items() if v}


def lr(lam, mu) -> dict:
    """``s_λ s_μ = sum c^ν_{λμ} s_ν`` by peeling dominant monomials."""
    n = sum(lam) + sum(mu)
    prod = _poly_mul(schur_poly(tuple(lam), n), schur_poly(tuple(mu), n))
    out = {}
    while prod:
        # the lexicographically largest exponent is a partition and leads its Schur
        lead = max(prod)
        c = prod[lead]
        nu = tuple(x for x in lead if x)
        out[nu] = c
        for k, v in schur_poly(nu, n).items():
            w = prod.get(k, 0) - c * v
            if w:
                prod[k] = w
            else:
                prod.pop(k, None)
    return out


def kostka_matrix(n: int) -> dict:
    return {(lam, mu): kostka(lam, mu) for lam in partitions(n) for mu in partitions(n) if dominates(lam, mu)}
