"""Run every verification suite at its default bounds and summarize.

    python3 scripts/reproduce.py [--json report.json] [--suite NAME ...]
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from planarmobiles.verify import SUITES, run_suite


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suite", action="append", choices=SUITES, help="restrict to these suites")
    ap.add_argument("--json", help="also write the full report here")
    args = ap.parse_args(argv)

    names = args.suite or list(SUITES)
    report = {}
    all_ok = True
    for name in names:
        start = time.perf_counter()
        checks = run_suite(name)
        elapsed = time.perf_counter() - start
        report[name] = {"seconds": round(elapsed, 1), "checks": [c.as_dict() for c in checks]}
        print(f"== {name} ({elapsed:.1f}s)")
        for c in checks:
            all_ok &= c.passed
            status = "ok  " if c.passed else "FAIL"
            print(f"  {status} {c.name}: {c.checked} cases, {c.failures} failures")
            if c.counterexample:
                print(f"       smallest counterexample: {c.counterexample}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(report, fh, indent=1, sort_keys=True)
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
