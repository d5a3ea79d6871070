#!/usr/bin/env python3
"""Run every verification suite and print one line per item.

Exit code 0 iff everything passes (same contract as `domdimlab verify`).
"""

import argparse
import sys
import time

from domdimlab.suites import SUITES


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", default="all", choices=sorted(SUITES))
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    started = time.perf_counter()
    items, failures = SUITES[args.suite](jobs=args.jobs)
    for item in items:
        mark = "PASS" if item["pass"] else "FAIL"
        print(f"{mark}  {item['name']}")
    print(f"\n{len(items) - len(failures)}/{len(items)} items passed "
          f"in {time.perf_counter() - started:.1f}s")
    if failures:
        print("failures:", ", ".join(failures))
        sys.exit(1)


if __name__ == "__main__":
    main()
