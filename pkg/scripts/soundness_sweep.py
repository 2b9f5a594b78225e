"""Random defining sets: every bound must sit below the exact distance and replay from its witness.

Usage: python3 scripts/soundness_sweep.py [--cases 300] [--max-m 31] [--seed 5]
"""

from __future__ import annotations

import argparse
import math
import random
import time
from collections import Counter

from qtspec.distance_bounds import (RoosCaps, bch_bound, generator_weight_hint, ht_bound, replay, roos_bound,
                                    shift_bound)
from qtspec.field_arith import root_system
from qtspec.oracle import BudgetExceeded, constacyclic_distance


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cases", type=int, default=300)
    ap.add_argument("--max-m", type=int, default=31)
    ap.add_argument("--seed", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    checked, failures = 0, []
    gaps: Counter = Counter()
    for _ in range(args.cases):
        q = rng.choice((2, 3))
        m = rng.choice([k for k in range(3, args.max_m + 1) if math.gcd(k, q) == 1])
        rs = root_system(q, m, rng.choice((1, q - 1)))
        L = sorted(set().union(*[set(o) for o in rs.orbits() if rng.random() < 0.5]))
        if not L or len(L) == m:
            continue
        try:
            d = constacyclic_distance(rs, L)
        except BudgetExceeded:
            continue
        fr = rs.frobenius_map()
        ws = {"bch": bch_bound(m, L), "bch_coprime": bch_bound(m, L, "coprime"), "ht": ht_bound(m, L),
              "ht_general": ht_bound(m, L, True), "roos": roos_bound(m, L),
              "roos_ht": roos_bound(m, L, RoosCaps(n_source="ht")),
              "shift": shift_bound(m, L, fr, weight_hint=generator_weight_hint(rs))}
        for name, w in ws.items():
            if w.value > d or replay(w, m, L, fr) != w.value:
                failures.append((q, m, rs.lam, L, name, w.value, d))
            gaps[name] += d - w.value
        checked += 1
    print(f"{checked} defining sets, {len(failures)} failures, {time.perf_counter() - t0:.1f}s")
    print("mean gap to the true distance: " + ", ".join(f"{k} {v / max(checked, 1):.2f}" for k, v in gaps.items()))
    for f in failures[:10]:
        print("FAIL", f)
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
