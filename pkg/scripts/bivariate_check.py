"""Check that q = t = u commutes with Gram-Schmidt for Macdonald polynomials.

Runs the Q(q, t) orthogonalization (needs sympy), substitutes q = t = u and
compares against the Q(u) computation used everywhere else.

    python3 scripts/bivariate_check.py [--degree D]
"""
import argparse
import time

import sympy

from superhopf import slambda


def to_sympy(r, u):
    def poly(cs):
        return sum(sympy.Rational(c.numerator, c.denominator) * u ** i for i, c in enumerate(cs))
    return poly(r.num) / poly(r.den)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=4)
    D = ap.parse_args().degree
    u = sympy.Symbol("u")
    bad_total = 0
    for s in range(1, D + 1):
        for m in range(s + 1):
            t0 = time.perf_counter()
            block, q, t = slambda.macdonald_block_bivariate(s - m, m)
            bad = 0
            for lam, coeffs in block.items():
                mine = slambda.macdonald_P(lam)
                for om in set(coeffs) | set(mine):
                    a = sympy.sympify(coeffs.get(om, 0)).subs({q: u, t: u})
                    b = to_sympy(mine[om], u) if om in mine else 0
                    bad += sympy.cancel(a - b) != 0
            bad_total += bad
            print(f"({s - m}|{m}): {len(block)} polynomials, {bad} mismatches, {time.perf_counter() - t0:.2f}s")
    print("all agree" if not bad_total else f"{bad_total} mismatches")


if __name__ == "__main__":
    main()
