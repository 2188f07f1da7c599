"""Wall-clock of every property suite, check by check.

    python3 scripts/bench_suites.py [--degree D] [--suite NAME]
"""
import argparse

from superhopf import suites


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--degree", type=int, default=None)
    ap.add_argument("--suite", default="all", choices=tuple(suites.SUITES) + ("all",))
    args = ap.parse_args()
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        checks = suites.run_suite(name, suites.SuiteConfig(args.degree))
        total = sum(c.seconds for c in checks)
        print(f"{name}: {total:.2f}s")
        for c in checks:
            print("   ", c.line())


if __name__ == "__main__":
    main()
