"""Acceptance criteria, one PASS/FAIL line each.

Run with pytest (lines appear in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import numpy as np
import pytest

from qtspec.cli import EXAMPLE1, EXAMPLE2, diagonal_code
from qtspec.distance_bounds import (RoosCaps, bch_bound, generator_weight_hint, replay, roos_bound, shift_bound,
                                    spectral_bound, spectral_roos, spectral_shift)
from qtspec.field_arith import build_root_system, embedding, field_of_order
from qtspec.oracle import BudgetExceeded, OracleConfig, constacyclic_distance, qt_min_distance, verify_table1
from qtspec.poly_algebra import mat_vec, rank, rref
from qtspec.qt_module import QtCode, random_corpus
from qtspec.spectral_core import (INFINITY, common_eigenspace, eigencode, eigenspace, eigenvalues,
                                  parity_check)

CORPUS_SIZE = 200
CORPUS_SEED = 2024
SOUNDNESS_BUDGET = OracleConfig(22)
D_SOURCES = (("bch", "unit"), ("bch", "coprime"), ("ht", "unit"), ("roos", "unit"), ("shift", "unit"),
             ("oracle", "unit"))


@dataclass
class Result:
    no: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return (f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.no} {self.name}: {self.detail} "
                f"({self.seconds:.1f}s)")


RESULTS: dict[int, Result] = {}


def summary_lines() -> list[str]:
    return [RESULTS[k].line() for k in sorted(RESULTS)]


def _record(no: int, name: str, fn) -> Result:
    t0 = time.perf_counter()
    passed, detail = fn()
    res = Result(no, name, passed, detail, time.perf_counter() - t0)
    RESULTS[no] = res
    print(res.line())
    return res


_corpus_cache: list[QtCode] = []


def corpus() -> list[QtCode]:
    if not _corpus_cache:
        _corpus_cache.extend(random_corpus(CORPUS_SIZE, seed=CORPUS_SEED))
    return _corpus_cache


def _fmt(v):
    return "inf" if v == INFINITY else str(v)


# -- criteria -----------------------------------------------------------------------

def criterion_table1():
    reports = verify_table1()
    bad = [f"row {r.no}: printed {'/'.join(map(str, r.printed))} computed "
           f"{'/'.join(str(x) for x in r.computed)}" for r in reports if not r.passed]
    ok = len(reports) == 15 and not bad
    return ok, (f"{15 - len(bad)}/15 rows exact" + (f"; {'; '.join(bad)}" if bad else ""))


def _example_values(ex):
    q, m, lam, L = ex["q"], ex["m"], ex["lam"], ex["L"]
    rs = build_root_system(field_of_order(q), m, lam)
    fr = rs.frobenius_map()
    code = diagonal_code(q, m, lam, L, ex["ell"])
    roos = roos_bound(m, L)
    got = {
        "bch": bch_bound(m, L).value,
        "roos": roos.value,
        "shift": shift_bound(m, L, fr, weight_hint=generator_weight_hint(rs)).value,
        "oracle": constacyclic_distance(rs, L),
        "spectral": spectral_bound(code).value,
        "eigencode": eigencode(code, common_eigenspace(code, L)).distance,
    }
    return got, roos, code


def _compare(want: dict, got: dict) -> tuple[bool, str]:
    parts, ok = [], True
    for k, v in want.items():
        good = got[k] == v
        ok &= good
        parts.append(f"{k} {_fmt(got[k])}" + ("" if good else f" (want {_fmt(v)})"))
    return ok, ", ".join(parts)


def criterion_example1():
    got, _, code = _example_values(EXAMPLE1)
    want = dict(shift=7, roos=5, bch=5, oracle=7, eigencode=INFINITY, spectral=7)
    ok, detail = _compare(want, got)
    ok &= all(len(eigenspace(code, k)) == 4 for k in EXAMPLE1["L"])
    return ok, detail


def criterion_example2():
    got, roos, code = _example_values(EXAMPLE2)
    want = dict(roos=6, shift=5, oracle=6, spectral=6)
    ok, detail = _compare(want, got)
    p = roos.payload
    size_ok = p["M_prime"]["size"] <= len(p["M"]) + p["N"]["d_N"] - 2
    replay_ok = replay(roos, 26, EXAMPLE2["L"]) == roos.value
    ok &= size_ok and replay_ok
    detail += (f"; witness |M'|={p['M_prime']['size']} <= {len(p['M'])}+{p['N']['d_N']}-2: "
               f"{'yes' if size_ok else 'no'}, replay {'ok' if replay_ok else 'mismatch'}")
    return ok, detail


def criterion_multiplicity():
    checked, bad = 0, []
    for i, code in enumerate(corpus()):
        for e in eigenvalues(code).eigenvalues:
            checked += 1
            if len(eigenspace(code, e.index)) != e.multiplicity:
                bad.append((i, e.index))
    return not bad and len(corpus()) >= 200, f"{checked} eigenvalues on {len(corpus())} codes, {len(bad)} failures"


def criterion_parity_check():
    rng = random.Random(CORPUS_SEED)
    bad = 0
    words = 0
    for code in corpus():
        E = code.roots.ext
        H = parity_check(code)
        if (rank(E, H) if H else 0) != code.length - code.dimension():
            bad += 1
            continue
        emb = embedding(code.field, E)
        for _ in range(20):
            c = np.asarray(code.random_codeword(rng)).reshape(-1)
            words += 1
            if H and any(mat_vec(E, H, [emb[int(v)] for v in c])):
                bad += 1
                break
    return bad == 0, f"{len(corpus())} codes, {words} codewords, {bad} failures"


def _soundness_bounds(code: QtCode):
    out = []
    for src, policy in D_SOURCES:
        out.append((f"spectral[{src}/{policy}]", spectral_bound(code, d_source=src, stride_policy=policy,
                                                                config=SOUNDNESS_BUDGET).value))
    out.append(("spectral_roos", spectral_roos(code, config=SOUNDNESS_BUDGET).value))
    out.append(("spectral_shift", spectral_shift(code, config=SOUNDNESS_BUDGET).value))
    return out


def criterion_soundness():
    codes, bounds, bad, skipped = 0, 0, [], 0
    for i, code in enumerate(corpus()):
        bar = eigenvalues(code).omega_bar
        if not bar or code.dimension() == 0:
            continue
        try:
            d = qt_min_distance(code, SOUNDNESS_BUDGET)
            values = _soundness_bounds(code)
        except BudgetExceeded:
            skipped += 1
            continue
        codes += 1
        for name, v in values:
            bounds += 1
            if v > d:
                bad.append(f"code {i} {name} {v} > {d}")
    return (not bad and codes > 0,
            f"{bounds} bounds on {codes} oracle-feasible codes ({skipped} over budget), {len(bad)} violations"
            + (f": {bad[:3]}" if bad else ""))


def _is_identity_rref(E, H, n):
    if not H:
        return False
    R, piv = rref(E, H)
    return len(piv) == n and all(R[i][j] == int(i == j) for i in range(n) for j in range(n))


def criterion_degenerate():
    bad = []
    extra = []
    for q, m, lam, ell in ((2, 7, 1, 2), (3, 4, 2, 3), (3, 5, 1, 1), (4, 3, 1, 2)):
        F = field_of_order(q)
        extra += [QtCode.zero(F, m, lam, ell), QtCode.full(F, m, lam, ell)]
    for i, code in enumerate(corpus() + extra):
        data = eigenvalues(code)
        E = code.roots.ext
        zero = code.dimension() == 0
        all_roots = len(data.omega_bar) == code.m and all(mu == code.ell for mu in data.multiplicities.values())
        h_ident = _is_identity_rref(E, parity_check(code), code.length)
        if not (zero == all_roots == h_ident):
            bad.append(f"code {i}: zero {zero}, full spectrum {all_roots}, H=I {h_ident}")
        if (code.dimension() == code.length) != (data.omega_bar == ()):
            bad.append(f"code {i}: full-code equivalence")
        ec = eigencode(code, [])
        if ec.dimension != code.ell or ec.distance != 1:
            bad.append(f"code {i}: empty-basis eigencode")
    for ex in (EXAMPLE1, EXAMPLE2):
        code = diagonal_code(ex["q"], ex["m"], ex["lam"], ex["L"], ex["ell"])
        w = spectral_bound(code, d_source="bch")
        if w.payload["eigencode_distance"] != "inf" or w.value != w.payload["d_P"]:
            bad.append(f"min(d_P, inf) on m={ex['m']}")
    n = len(corpus()) + len(extra)
    return not bad, f"{n} codes plus 2 infinite-eigencode checks, {len(bad)} failures" + (f": {bad[:3]}" if bad else "")


def criterion_reduction():
    bad = []
    for i, code in enumerate(corpus()):
        if code.violations():
            bad.append(f"code {i}: {code.violations()}")
        G = code.generator_matrix()
        r = rank(code.field, G.tolist()) if len(G) else 0
        if r != code.dimension():
            bad.append(f"code {i}: rank {r} != {code.dimension()}")
    return not bad, f"{len(corpus())} reduced matrices, {len(bad)} failures" + (f": {bad[:3]}" if bad else "")


CRITERIA = [
    (1, "reference table reproduction", criterion_table1),
    (2, "Golay example", criterion_example1),
    (3, "ternary length-26 example", criterion_example2),
    (4, "multiplicity equals eigenspace dimension", criterion_multiplicity),
    (5, "parity-check rank and annihilation", criterion_parity_check),
    (6, "bound soundness against the oracle", criterion_soundness),
    (7, "degenerate cases", criterion_degenerate),
    (8, "reduced form and dimension formula", criterion_reduction),
]


@pytest.mark.parametrize("no,name,fn", CRITERIA, ids=[f"criterion{n}" for n, _, _ in CRITERIA])
def test_criterion(no, name, fn):
    res = _record(no, name, fn)
    assert res.passed, res.line()


if __name__ == "__main__":
    for no, name, fn in CRITERIA:
        _record(no, name, fn)
    print()
    print("\n".join(summary_lines()))
