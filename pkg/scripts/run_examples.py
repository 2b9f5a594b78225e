"""Run both worked examples end to end and print every check."""

from __future__ import annotations

import json
import sys

from qtspec.cli import run_examples


def main() -> int:
    reports = run_examples()
    for rep in reports:
        print(f"== {rep.name}: {'PASS' if rep.passed else 'FAIL'}")
        for c in rep.checks:
            print(f"  {c.name:<26} expected {str(c.expected):<12} got {str(c.got):<12} "
                  f"{'PASS' if c.passed else 'FAIL'}")
        for name, w in rep.witnesses.items():
            print(f"  witness {name}: {json.dumps(w['payload'])[:160]}")
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
