"""Largest independent sets on the binary Golay defining set under different choices of S.

Shows which q-closed supersets S of the defining set admit the 8-element set
{0, 1, 3, 4, 5, 6, 16, 18}, and the exact maximum for each S.
"""

from __future__ import annotations

from functools import lru_cache

from qtspec.cli import EXAMPLE1
from qtspec.distance_bounds import _mask, max_independent
from qtspec.field_arith import root_system

M = 23
A_PRINTED = frozenset({0, 1, 3, 4, 5, 6, 16, 18})


def is_independent(A: frozenset[int], S: frozenset[int]) -> bool:
    """Backward check: drop some a whose remaining set fits in S - t with a + t outside S."""
    @lru_cache(maxsize=None)
    def rec(B: frozenset[int]) -> bool:
        if len(B) <= 1:
            return len(B) == 0 or len(S) < M
        for a in B:
            rest = B - {a}
            for t in range(M):
                if (a + t) % M not in S and all((b + t) % M in S for b in rest) and rec(rest):
                    return True
        return False
    return rec(frozenset(A))


def main() -> None:
    rs = root_system(2, M, 1)
    L = frozenset(EXAMPLE1["L"])
    orbits = [frozenset(o) for o in rs.orbits()]
    supersets = {"L": L}
    for o in orbits:
        if not o <= L:
            supersets[f"L + orbit of {min(o)}"] = L | o
    supersets["all but 0"] = frozenset(range(1, M))
    for name, S in supersets.items():
        if len(S) == M:
            continue
        closed = rs.is_closed(S)
        v, _ = max_independent(M, _mask(S))
        print(f"{name:<18} |S|={len(S):>2} q-closed={closed!s:<5} max independent={v:>2} "
              f"printed set independent={is_independent(A_PRINTED, S)}")


if __name__ == "__main__":
    main()
