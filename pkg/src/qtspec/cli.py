"""Command-line front end: ``qtspec {bounds,eigen,mindist,constacyclic,table1,examples}``.

Every subcommand writes one JSON document to stdout; diagnostics go to stderr.
The exit code is 0 only when the computation succeeded and every check passed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Callable

from .distance_bounds import (BoundWitness, RoosCaps, SearchCapExceeded, ShiftCaps, bch_bound,
                              generator_weight_hint, ht_bound, replay, roos_bound, shift_bound, spectral_bound,
                              spectral_roos, spectral_shift)
from .field_arith import build_root_system, field_of_order
from .oracle import (BudgetExceeded, OracleConfig, ZeroCodeError, constacyclic_distance,
                     constacyclic_from_defining_set, format_table1, qt_min_distance, report_dict,
                     verify_table1)
from .poly_algebra import Poly
from .qt_module import CodeFileError, QtCode, load_code
from .spectral_core import INFINITY, common_eigenspace, eigencode, eigenspace, eigenvalues

log = logging.getLogger("qtspec")

METHODS = ("bch", "ht", "roos", "shift", "spectral", "spectral_roos", "spectral_shift")
DP_SOURCES = ("bch", "ht", "roos", "shift", "oracle")


def _num(v):
    return "inf" if v == INFINITY else int(v)


def parse_code_file(path: str) -> QtCode:
    return load_code(path)


# -- worked examples -----------------------------------------------------------------

@dataclass
class Check:
    name: str
    expected: object
    got: object

    @property
    def passed(self) -> bool:
        return self.expected == self.got

    def to_dict(self) -> dict:
        return {"check": self.name, "expected": self.expected, "got": self.got,
                "result": "PASS" if self.passed else "FAIL"}


@dataclass
class ExampleReport:
    name: str
    checks: list[Check] = field(default_factory=list)
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"example": self.name, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks], "witnesses": self.witnesses}


EXAMPLE1 = dict(q=2, m=23, lam=1, ell=4, L=(1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18),
                expect=dict(shift=7, roos=5, bch=5, oracle=7, spectral=7))
EXAMPLE2 = dict(q=3, m=26, lam=1, ell=4, L=(0, 13, 14, 16, 17, 22, 23, 25),
                expect=dict(roos=6, shift=5, oracle=6, spectral=6),
                certificate=dict(N=(13, 14), M=(0, 3, 9, 12), M_prime_stride=3, M_prime_size=5))


def diagonal_code(q: int, m: int, lam: int, L, ell: int) -> QtCode:
    """QT code with reduced matrix diag(g, ..., g), g the constacyclic generator of L."""
    F = field_of_order(q)
    rs = build_root_system(F, m, F.elem(lam))
    g = constacyclic_from_defining_set(rs, L)
    zero = Poly(F)
    rows = [[g if i == j else zero for j in range(ell)] for i in range(ell)]
    return QtCode.from_generators(F, m, lam, ell, rows)


def _certificate_value(m: int, L, cert: dict) -> tuple[int, bool]:
    """Check a printed (N, M, M') triple: N consecutive, MN inside L, |M'| <= |M| + d_N - 2."""
    N, M = set(cert["N"]), set(cert["M"])
    dN = bch_bound(m, N).value if len(N) < m else 0
    Mp = {(min(M) + z * cert["M_prime_stride"]) % m for z in range(cert["M_prime_size"])}
    MN = {(u + v) % m for u in N for v in M}
    ok = M <= Mp and len(Mp) <= len(M) + dN - 2 and MN <= set(L)
    return len(M) + dN - 1, ok


def run_example(ex: dict, name: str, config: OracleConfig | None = None) -> ExampleReport:
    q, m, lam, L = ex["q"], ex["m"], ex["lam"], ex["L"]
    exp = ex["expect"]
    rs = build_root_system(field_of_order(q), m, lam)
    rep = ExampleReport(name)
    fr = rs.frobenius_map()
    values = {}
    ws = {"bch": lambda: bch_bound(m, L), "roos": lambda: roos_bound(m, L),
          "shift": lambda: shift_bound(m, L, fr, weight_hint=generator_weight_hint(rs))}
    for key in ("shift", "roos", "bch"):
        if key in exp:
            w = ws[key]()
            values[key] = w.value
            rep.witnesses[key] = w.to_dict()
    values["oracle"] = constacyclic_distance(rs, L, config)
    code = diagonal_code(q, m, lam, L, ex["ell"])
    ec = eigencode(code, common_eigenspace(code, L), config)
    values["spectral"] = spectral_bound(code, d_source="oracle", config=config).value
    for key, want in exp.items():
        rep.checks.append(Check(key, want, _num(values[key])))
    rep.checks.append(Check("omega_bar", sorted(L), sorted(eigenvalues(code).omega_bar)))
    rep.checks.append(Check("eigencode_distance", "inf", _num(ec.distance)))
    rep.checks.append(Check("eigenspace_is_identity", True,
                            all(len(eigenspace(code, k)) == ex["ell"] for k in L)))
    if "certificate" in ex:
        value, ok = _certificate_value(m, L, ex["certificate"])
        rep.checks.append(Check("printed_roos_certificate", [exp["roos"], True], [value, ok]))
    return rep


def run_examples(config: OracleConfig | None = None) -> list[ExampleReport]:
    return [run_example(EXAMPLE1, "example1", config), run_example(EXAMPLE2, "example2", config)]


# -- subcommands -----------------------------------------------------------------------

def _config(args) -> OracleConfig:
    return OracleConfig(args.budget) if getattr(args, "budget", None) else OracleConfig.from_env()


def _guard(fn: Callable[[], BoundWitness]) -> dict:
    try:
        return fn().to_dict()
    except (SearchCapExceeded, BudgetExceeded, ValueError) as exc:
        log.warning("%s", exc)
        return {"error": f"{type(exc).__name__}: {exc}"}


def cmd_bounds(args) -> tuple[dict, bool]:
    code = parse_code_file(args.code)
    cfg = _config(args)
    methods = [s.strip() for s in args.methods.split(",") if s.strip()]
    bad = [s for s in methods if s not in METHODS]
    if bad:
        raise SystemExit(f"unknown method(s): {', '.join(bad)}")
    caps = RoosCaps(args.max_m_prime, args.n_source)
    bar = sorted(eigenvalues(code).omega_bar)
    rs = code.roots
    out: dict = {"omega_bar": bar, "bounds": {}}
    for meth in methods:
        if meth in ("bch", "ht", "roos", "shift"):
            if not bar or len(bar) == code.m:
                out["bounds"][meth] = {"error": "eigenvalue set is empty or all of Omega"}
                continue
            L = sorted(rs.closure(bar))
            fn = {"bch": lambda: bch_bound(code.m, L, args.stride_policy),
                  "ht": lambda: ht_bound(code.m, L), "roos": lambda: roos_bound(code.m, L, caps),
                  "shift": lambda: shift_bound(code.m, L, rs.frobenius_map(), ShiftCaps(args.max_free_orbits),
                                                generator_weight_hint(rs))}[meth]
            out["bounds"][meth] = _guard(fn)
        elif meth == "spectral":
            P = [int(k) for k in args.P.split(",")] if args.P else None
            out["bounds"][meth] = _guard(lambda: spectral_bound(code, P, args.dp_source, args.stride_policy,
                                                                caps, cfg))
        elif meth == "spectral_roos":
            out["bounds"][meth] = _guard(lambda: spectral_roos(code, caps, cfg))
        else:
            out["bounds"][meth] = _guard(lambda: spectral_shift(code, ShiftCaps(args.max_free_orbits), config=cfg))
    ok = all("error" not in v for v in out["bounds"].values())
    return out, ok


def cmd_eigen(args) -> tuple[dict, bool]:
    code = parse_code_file(args.code)
    cfg = _config(args)
    rows = []
    for e in eigenvalues(code).eigenvalues:
        basis = eigenspace(code, e.index)
        try:
            d = _num(eigencode(code, basis, cfg).distance)
        except BudgetExceeded as exc:
            log.warning("%s", exc)
            d = None
        rows.append({"index": e.index, "multiplicity": e.multiplicity,
                     "eigenspace_dim": len(basis), "eigencode_distance": d})
    bar = [r["index"] for r in rows]
    out = {"q": code.q, "m": code.m, "ell": code.ell, "dimension": code.dimension(),
           "omega_bar": bar, "eigenvalues": rows}
    if bar:
        try:
            out["common_eigencode_distance"] = _num(eigencode(code, common_eigenspace(code, bar), cfg).distance)
        except BudgetExceeded as exc:
            log.warning("%s", exc)
    return out, all(r["eigencode_distance"] is not None for r in rows)


def cmd_mindist(args) -> tuple[dict, bool]:
    code = parse_code_file(args.code)
    out = {"length": code.length, "dimension": code.dimension()}
    try:
        out["min_distance"] = qt_min_distance(code, _config(args))
    except (BudgetExceeded, ZeroCodeError) as exc:
        out["error"] = f"{type(exc).__name__}: {exc}"
        return out, False
    return out, True


def cmd_constacyclic(args) -> tuple[dict, bool]:
    F = field_of_order(args.q)
    lam = F.parse(args.lam)
    rs = build_root_system(F, args.m, lam)
    L = sorted({int(k) % args.m for k in args.defset.split(",") if k.strip()})
    g = constacyclic_from_defining_set(rs, L)
    out: dict = {"q": args.q, "m": args.m, "lambda": F.format(lam), "defining_set": L,
                 "generator": g.format(), "dimension": args.m - g.degree, "bounds": {}}
    if L and len(L) < args.m:
        fr = rs.frobenius_map()
        out["bounds"] = {
            "bch": _guard(lambda: bch_bound(args.m, L, args.stride_policy)),
            "ht": _guard(lambda: ht_bound(args.m, L)),
            "roos": _guard(lambda: roos_bound(args.m, L)),
            "shift": _guard(lambda: shift_bound(args.m, L, fr, weight_hint=generator_weight_hint(rs))),
        }
        for w in out["bounds"].values():
            if "error" not in w and replay(w, args.m, L, fr) != w["value"]:
                raise AssertionError("witness replay mismatch")
    ok = True
    if len(L) < args.m:
        try:
            out["min_distance"] = constacyclic_distance(rs, L, _config(args))
        except BudgetExceeded as exc:
            out["error"] = str(exc)
            ok = False
    return out, ok


def cmd_table1(args) -> tuple[dict, bool]:
    rows = [int(r) for r in args.rows.split(",")] if args.rows else None
    cfg = OracleConfig(args.budget) if args.budget else None
    reports = verify_table1(cfg, rows)
    print(format_table1(reports), file=sys.stderr)
    return {"rows": [report_dict(r) for r in reports]}, all(r.passed for r in reports)


def cmd_examples(args) -> tuple[dict, bool]:
    reports = run_examples(_config(args))
    for r in reports:
        for c in r.checks:
            print(f"{r.name} {c.name}: expected {c.expected}, got {c.got} -> "
                  f"{'PASS' if c.passed else 'FAIL'}", file=sys.stderr)
    return {"examples": [r.to_dict() for r in reports]}, all(r.passed for r in reports)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtspec", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def with_budget(sp):
        sp.add_argument("--budget", type=int, help="oracle budget exponent: accept q^dim <= 2^BUDGET")
        return sp

    b = with_budget(sub.add_parser("bounds", help="distance bounds for a QT code file"))
    b.add_argument("--code", required=True)
    b.add_argument("--methods", default="bch,ht,roos,shift,spectral")
    b.add_argument("--stride-policy", choices=("unit", "coprime"), default="unit")
    b.add_argument("--dp-source", choices=DP_SOURCES, default="oracle")
    b.add_argument("--P", help="comma-separated eigenvalue indices for the spectral bound")
    b.add_argument("--max-m-prime", type=int, default=20)
    b.add_argument("--n-source", choices=("bch", "ht"), default="bch")
    b.add_argument("--max-free-orbits", type=int, default=16)
    b.set_defaults(func=cmd_bounds)

    e = with_budget(sub.add_parser("eigen", help="eigenvalues, eigenspaces and eigencodes"))
    e.add_argument("--code", required=True)
    e.set_defaults(func=cmd_eigen)

    d = with_budget(sub.add_parser("mindist", help="exact minimum distance of a QT code file"))
    d.add_argument("--code", required=True)
    d.set_defaults(func=cmd_mindist)

    c = with_budget(sub.add_parser("constacyclic", help="constacyclic code from a defining set"))
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--lambda", dest="lam", required=True, help="lambda as a coefficient list")
    c.add_argument("--defset", required=True, help="comma-separated root indices")
    c.add_argument("--stride-policy", choices=("unit", "coprime"), default="unit")
    c.set_defaults(func=cmd_constacyclic)

    t = with_budget(sub.add_parser("table1", help="verify the 15 embedded reference-table rows"))
    t.add_argument("--rows", help="comma-separated row numbers")
    t.set_defaults(func=cmd_table1)

    x = with_budget(sub.add_parser("examples", help="run the two worked examples"))
    x.set_defaults(func=cmd_examples)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        out, ok = args.func(args)
    except (CodeFileError, FileNotFoundError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
