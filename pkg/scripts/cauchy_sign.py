"""Compare the Cauchy kernel with the Schur sums, with and without (-1)^{C(m,2)}.

Prints the monomials where the unsigned sum disagrees with the kernel, then
the coproduct terms where the unsigned skew formula disagrees with Δ.

    python3 scripts/cauchy_sign.py [--degree D]
"""
import argparse

from superhopf import slambda, suites
from superhopf.combinatorics import superpartitions_up_to
from superhopf.slambda import element


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=3)
    D = ap.parse_args().degree
    kernel = suites.cauchy_kernel(2, 2, D)
    for bar in (False, True):
        fam = "s̄" if bar else "s"
        signed = suites.cauchy_sum(2, 2, D, bar=bar, signed=True)
        plain = suites.cauchy_sum(2, 2, D, bar=bar, signed=False)
        print(f"{fam}: signed sum == kernel: {signed == kernel}; unsigned sum == kernel: {plain == kernel}")
        diff = plain - kernel
        for line in repr(diff).split(" + "):
            print("    off by", line)
    print()
    for L in superpartitions_up_to(min(D + 1, 4)):
        for fam in ("s", "sb"):
            lit = slambda.comul_schur(fam, L, literal=True)
            true = slambda.comul(element(fam, L))
            if lit != true:
                bad = sorted(f"{a} ⊗ {b}" for a, b in set(lit) | set(true) if lit.get((a, b), 0) != true.get((a, b), 0))
                print(f"Δ{fam}[{L}]: unsigned skew formula wrong on {len(bad)} terms, e.g. {bad[0]}")


if __name__ == "__main__":
    main()
