"""Run the check registry and print one line per check.

    python3 scripts/run_checks.py               # every check
    python3 scripts/run_checks.py V12 V35 -j 4  # selected checks, four at a time
"""
from __future__ import annotations

import argparse
import sys

from binmat.verify import check_ids, run_checks


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("ids", nargs="*", help="check ids; all when omitted")
    ap.add_argument("-j", "--jobs", type=int, default=1)
    ap.add_argument("--budget", type=float, default=None, help="seconds per check, overriding the defaults")
    args = ap.parse_args()
    reports = run_checks(args.ids or check_ids(), budget=args.budget, jobs=args.jobs)
    for r in reports:
        print(r.line(), flush=True)
        if r.note:
            print(f"    {r.note}")
    failed = [r.id for r in reports if not r.passed]
    print(f"{len(reports) - len(failed)}/{len(reports)} passed" + (f"; failed: {' '.join(failed)}" if failed else ""))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
