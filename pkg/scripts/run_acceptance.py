"""Run acceptance criteria 1-7 and print one PASS/FAIL line each.

    python3 scripts/run_acceptance.py [criterion ...]
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

import test_acceptance as acc  # noqa: E402


def main(argv):
    wanted = [int(a) for a in argv] or sorted(acc.CRITERIA)
    ok = True
    for k in wanted:
        passed, _, _ = acc.evaluate(k)
        ok &= passed
        print(acc.summary_lines()[-1], flush=True)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
