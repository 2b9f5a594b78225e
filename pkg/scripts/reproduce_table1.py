"""Recompute the d_BCH / d_HT / d columns of the 15 embedded reference rows.

Usage: python3 scripts/reproduce_table1.py [--rows 1,6,11] [--budget 24] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import time

from qtspec.oracle import OracleConfig, format_table1, report_dict, verify_table1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", help="comma-separated row numbers (default: all)")
    ap.add_argument("--budget", type=int, help="oracle budget exponent")
    ap.add_argument("--json", help="also write the reports to this file")
    args = ap.parse_args()
    rows = [int(r) for r in args.rows.split(",")] if args.rows else None
    t0 = time.perf_counter()
    reports = verify_table1(OracleConfig(args.budget) if args.budget else None, rows)
    print(format_table1(reports))
    print(f"{sum(r.passed for r in reports)}/{len(reports)} rows match in {time.perf_counter() - t0:.1f}s")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([report_dict(r) for r in reports], fh, indent=2)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
