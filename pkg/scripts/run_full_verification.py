#!/usr/bin/env python3
"""Run every verification suite and write one JSON report per suite.

Usage:
    python scripts/run_full_verification.py [--config CONFIG] [--out DIR]
                                            [--jobs N]

Exit status mirrors the CLI: 0 all green, 1 failures, 2 erratum
candidates.
"""

import argparse
import os
import sys
import time

from simplexpoly import sweeps
from simplexpoly.operators import summarize


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--config", default=None)
    parser.add_argument("--out", default="reports")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = parser.parse_args()

    config = sweeps.load_config(args.config or sweeps.default_config_path())
    os.makedirs(args.out, exist_ok=True)

    exit_code = 0
    grand = {"pass": 0, "fail": 0, "not_applicable": 0}
    for suite in sweeps.SUITES:
        start = time.perf_counter()
        reports = sweeps.run_suite(suite, config, jobs=args.jobs)
        elapsed = time.perf_counter() - start
        summary = summarize(reports)
        sweeps.write_report(os.path.join(args.out, f"{suite}.json"), reports, summary)
        totals = summary["totals"]
        for key in grand:
            grand[key] += totals[key]
        flag = ""
        if summary["erratum_candidates"]:
            flag = "  ERRATUM: " + ", ".join(summary["erratum_candidates"])
            exit_code = 2
        elif totals["fail"]:
            flag = "  FAILURES"
            exit_code = max(exit_code, 1)
        print(
            f"{suite:<14} {totals['pass']:>6} pass "
            f"{totals['fail']:>4} fail {totals['not_applicable']:>5} n/a "
            f"{elapsed:7.1f}s{flag}"
        )
    print(
        f"{'total':<14} {grand['pass']:>6} pass "
        f"{grand['fail']:>4} fail {grand['not_applicable']:>5} n/a"
    )
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
