"""Count failures of the duality identities under both tensor pairings.

"unsigned" pairs leg by leg, <a⊗b, c⊗d> = <a,c><b,d>.  "twist" adds the
Koszul sign (-1)^{deg b deg c}; "diagonal" adds (-1)^{deg a deg c}.  Only
the first makes the Hopf dualities hold.

    python3 scripts/pairing_conventions.py [--degree D]
"""
import argparse

from superhopf import suites
from superhopf.combinatorics import compositions_up_to, superpartitions_up_to
from superhopf.kernel import TWIST_CONVENTIONS


def failures(cases, pred, convention):
    return sum(1 for c in cases if not pred(c, convention))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=4)
    D = ap.parse_args().degree
    triples = list(suites._triples(D))
    schur = list(suites._schur_triples(list(superpartitions_up_to(D)), D))
    print(f"{len(list(compositions_up_to(D)))} dotted compositions, {len(schur)} Schur triples (n+m <= {D})")
    for conv in TWIST_CONVENTIONS:
        print(f"[{conv}]")
        print(f"  <ΔF, f⊗g> = <F, fg>      failures: {failures(triples, suites._comul_duality, conv)}/{len(triples)}")
        print(f"  <FG, f> = <F⊗G, Δf>      failures: {failures(triples, suites._product_duality, conv)}/{len(triples)}")
        print(f"  <<Δs, s⊗s>> = <<s, s s>> failures: {failures(schur, suites._self_duality, conv)}/{len(schur)}")


if __name__ == "__main__":
    main()
