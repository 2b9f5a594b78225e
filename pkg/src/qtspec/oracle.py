"""Ground truth: constacyclic codes from defining sets, exhaustive minimum distance,
and the reference-table check."""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import numpy as np

from .field_arith import GF, RootSystem, build_root_system, embedding, field_of_order
from .poly_algebra import Poly, null_space

BUDGET_ENV = "QTSPEC_ORACLE_BUDGET"


class BudgetExceeded(RuntimeError):
    pass


class ZeroCodeError(ValueError):
    pass


@dataclass(frozen=True)
class OracleConfig:
    """Enumeration accepts q^dim <= 2^max_dim codewords."""

    max_dim: int = 22

    def __post_init__(self):
        if self.max_dim <= 0:
            raise ValueError("max_dim must be positive")

    @classmethod
    def from_env(cls) -> "OracleConfig":
        raw = os.environ.get(BUDGET_ENV)
        return cls(int(raw)) if raw else cls()

    def allows(self, q: int, dim: int) -> bool:
        return q**dim <= 2**self.max_dim


def constacyclic_from_defining_set(rs: RootSystem, L: Iterable[int]) -> Poly:
    """g(x) = prod_{k in L} (x - alpha xi^k), descended to GF(q)."""
    L = sorted(set(L))
    if any(not 0 <= k < rs.m for k in L):
        raise ValueError("defining set index out of range")
    if not rs.is_closed(L):
        raise ValueError(f"defining set {L} is not closed under x -> x^q")
    E = rs.ext
    g = Poly.const(E, 1)
    for k in L:
        g = g * Poly(E, [E.neg(rs.omega[k]), 1])
    back = {v: i for i, v in enumerate(embedding(rs.base, E))}
    try:
        coeffs = [back[c] for c in g.coeffs]
    except KeyError:
        raise ArithmeticError("generator coefficients do not lie in GF(q)") from None
    return Poly(rs.base, coeffs)


def constacyclic_generator_matrix(g: Poly, m: int) -> np.ndarray:
    """Rows x^t g(x), t < m - deg g."""
    k = m - g.degree
    out = np.zeros((k, m), dtype=np.int64)
    for t in range(k):
        out[t, t:t + len(g.coeffs)] = g.coeffs
    return out


def _tables(F: GF) -> tuple[np.ndarray, np.ndarray]:
    q = F.order
    add = np.array([[F.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    return add, mul


def _enumerate_weights(F: GF, G: np.ndarray) -> list[int]:
    """Number of codewords of each weight in the row space of G (rows independent)."""
    k, n = G.shape
    q = F.order
    prime = F.s == 1
    if not prime:
        add_t, mul_t = _tables(F)

    def combine(words: np.ndarray, row: np.ndarray) -> np.ndarray:
        if prime:
            return np.concatenate([(words + c * row) % q for c in range(q)])
        return np.concatenate([add_t[words, mul_t[c][row]] for c in range(q)])

    inner_k = k
    while q**inner_k > 1 << 16:
        inner_k -= 1
    inner = np.zeros((1, n), dtype=np.int64)
    for row in G[k - inner_k:]:
        inner = combine(inner, row)
    counts = np.zeros(n + 1, dtype=np.int64)
    outer_rows = G[:k - inner_k]
    for combo in itertools.product(range(q), repeat=len(outer_rows)):
        off = np.zeros(n, dtype=np.int64)
        for c, row in zip(combo, outer_rows):
            if c:
                off = (off + c * row) % q if prime else add_t[off, mul_t[c][row]]
        words = (inner + off) % q if prime else add_t[inner, off]
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    return [int(c) for c in counts]


def _krawtchouk(n: int, q: int, w: int, i: int) -> int:
    return sum((-1) ** j * (q - 1) ** (w - j) * math.comb(i, j) * math.comb(n - i, w - j)
               for j in range(w + 1))


def _dual_basis(F: GF, G: np.ndarray) -> np.ndarray:
    ns = null_space(F, G.tolist(), ncols=G.shape[1])
    return np.array(ns, dtype=np.int64).reshape(len(ns), G.shape[1])


def weight_distribution(F: GF, G, config: OracleConfig | None = None) -> list[int]:
    """Exact weight distribution A_0..A_n of the row space of G over F.

    Enumerates whichever of the code and its dual is smaller; in the second case
    the MacWilliams transform recovers the code's distribution with integer arithmetic.
    """
    config = config or OracleConfig.from_env()
    G = np.asarray(G, dtype=np.int64)
    if G.ndim != 2:
        raise ValueError("generator matrix must be two-dimensional")
    k, n = G.shape
    q = F.order
    if k <= n - k:
        if not config.allows(q, k):
            raise BudgetExceeded(f"{q}^{k} codewords exceed the budget 2^{config.max_dim}")
        return _enumerate_weights(F, G)
    if not config.allows(q, n - k):
        raise BudgetExceeded(f"{q}^{n - k} dual codewords exceed the budget 2^{config.max_dim}")
    if k == n:
        B = [1] + [0] * n
    else:
        B = _enumerate_weights(F, _dual_basis(F, G))
    size = q ** (n - k)
    out = []
    for w in range(n + 1):
        total = sum(B[i] * _krawtchouk(n, q, w, i) for i in range(n + 1) if B[i])
        if total % size:
            raise ArithmeticError("MacWilliams transform is not integral; rows are dependent")
        out.append(total // size)
    return out


def min_distance(F: GF, G, config: OracleConfig | None = None) -> int:
    """Exact minimum weight of the row space of G over F (rows linearly independent)."""
    G = np.asarray(G, dtype=np.int64)
    if G.ndim != 2 or G.shape[0] == 0:
        raise ZeroCodeError("minimum distance of the zero code is undefined")
    dist = weight_distribution(F, G, config)
    return next(w for w in range(1, len(dist)) if dist[w])


def qt_min_distance(code, config: OracleConfig | None = None) -> int:
    return min_distance(code.field, code.generator_matrix(), config)


def constacyclic_distance(rs: RootSystem, L: Iterable[int], config: OracleConfig | None = None) -> int:
    g = constacyclic_from_defining_set(rs, L)
    return min_distance(rs.base, constacyclic_generator_matrix(g, rs.m), config)


# -- reference table ---------------------------------------------------------------------

def _expand(text: str) -> tuple[int, ...]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            a, b = part.split("-")
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return tuple(out)


@dataclass(frozen=True)
class TableRow:
    no: int
    q: int
    lam: int
    m: int
    ell: int
    d_bch: int
    d_ht: int
    d_sp: int
    indices: tuple[int, ...]


TABLE1_VERSION = 1
# index sets transcribed as printed (ranges inclusive); lam = -1 is stored as q - 1
TABLE1 = tuple(TableRow(no, q, lam % q, m, ell, b, h, s, _expand(I)) for no, q, lam, m, ell, b, h, s, I in [
    (1, 2, 1, 23, 2, 5, 5, 7, "1-4, 6, 8, 9, 12, 13, 16, 18"),
    (2, 2, 1, 33, 2, 8, 10, 12, "0, 3, 5-7, 9-15, 18-24, 26-28, 30"),
    (3, 2, 1, 39, 2, 7, 8, 12, "3, 6, 7, 9, 12-15, 17-19, 21, 23, 24, 26-31, 33-38"),
    (4, 2, 1, 21, 3, 5, 6, 8, "3, 5-7, 9, 10, 12-15, 17-20"),
    (5, 2, 1, 33, 3, 5, 8, 11, "1-4, 6, 8, 9, 11, 12, 15-18, 21, 22, 24, 25, 27, 29-32"),
    (6, 3, 1, 13, 2, 4, 5, 6, "0, 2, 4-6, 10, 12"),
    (7, 3, 1, 20, 2, 5, 5, 8, "0, 1, 3-5, 7-10, 12, 15, 16"),
    (8, 3, 1, 40, 2, 11, 17, 20, "0, 2, 4-8, 11-19, 21-26, 28, 29, 31-39"),
    (9, 3, 1, 26, 3, 5, 8, 10, "1-4, 6, 8-10, 12, 13, 17, 18, 20, 23-25"),
    (10, 3, 1, 44, 3, 10, 11, 18, "0-7, 9-13, 15-23, 25, 27, 29-31, 33, 35-37, 39, 41, 43"),
    (11, 3, -1, 20, 2, 4, 5, 6, "3, 6, 10-12, 14, 15, 17-19"),
    (12, 3, -1, 28, 2, 4, 6, 9, "0-2, 4, 6, 7, 9, 11-13, 17, 19, 22, 24"),
    (13, 3, -1, 41, 2, 11, 13, 20, "0-4, 6, 7, 9-14, 17-19, 21-23, 26-31, 33, 34, 36-40"),
    (14, 3, -1, 28, 3, 3, 4, 6, "3, 10, 14, 15, 17, 18, 23, 24, 26, 27"),
    (15, 3, -1, 28, 3, 7, 9, 11, "0-2, 4-9, 11-13, 16, 17, 19-22, 24, 25"),
])


@dataclass
class RowReport:
    no: int
    q: int
    lam: int
    m: int
    closed: bool
    printed: tuple[int, int, int]
    computed: tuple[int | None, int | None, int | None]
    passed: bool
    note: str = ""


def verify_table_row(row: TableRow, config: OracleConfig | None = None) -> RowReport:
    from .distance_bounds import bch_bound, ht_bound

    F = field_of_order(row.q)
    rs = build_root_system(F, row.m, row.lam)
    L = frozenset(row.indices)
    closed = rs.is_closed(L)
    printed = (row.d_bch, row.d_ht, row.d_sp)
    if not closed:
        return RowReport(row.no, row.q, row.lam, row.m, False, printed, (None, None, None), False,
                         "index set is not q-closed")
    b = bch_bound(row.m, L, "unit").value
    h = ht_bound(row.m, L).value
    d = constacyclic_distance(rs, L, config)
    computed = (b, h, d)
    return RowReport(row.no, row.q, row.lam, row.m, True, printed, computed, computed == printed)


TABLE1_BUDGET = 24  # row 12 needs 3^14 > 2^22 codewords on its smaller side


def verify_table1(config: OracleConfig | None = None, rows: Sequence[int] | None = None) -> list[RowReport]:
    config = config or OracleConfig(max(TABLE1_BUDGET, OracleConfig.from_env().max_dim))
    return [verify_table_row(r, config) for r in TABLE1 if rows is None or r.no in rows]


def format_table1(reports: Sequence[RowReport]) -> str:
    lines = [f"{'No':>3} {'q':>2} {'lam':>4} {'m':>3}  {'printed':>12}  {'computed':>12}  result"]
    for r in reports:
        lam = "-1" if r.lam == r.q - 1 and r.q > 2 else str(r.lam)
        pr = "/".join(str(x) for x in r.printed)
        co = "/".join("-" if x is None else str(x) for x in r.computed)
        lines.append(f"{r.no:>3} {r.q:>2} {lam:>4} {r.m:>3}  {pr:>12}  {co:>12}  {'PASS' if r.passed else 'FAIL'}"
                     + (f"  ({r.note})" if r.note else ""))
    return "\n".join(lines)


def report_dict(r: RowReport) -> dict:
    d = asdict(r)
    d["printed"] = dict(zip(("d_bch", "d_ht", "d_sp"), r.printed))
    d["computed"] = dict(zip(("d_bch", "d_ht", "d_sp"), r.computed))
    return d
