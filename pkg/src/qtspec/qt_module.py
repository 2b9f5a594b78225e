"""Quasi-twisted codes as F_q[x]-submodules of R^ell, R = F_q[x]/(x^m - lambda).

A codeword of length m*ell is handled either as an m x ell array (row k holds
coordinates k*ell .. k*ell + ell - 1) or as a vector of ell polynomials, one
per column. The flat vector is the array read row by row.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from pathlib import Path
from typing import Sequence

import numpy as np

from .field_arith import GF, RootSystem, build_root_system, field_of_order
from .poly_algebra import Poly, PolyMatrix, rank, reduce_generating_set, reduced_form_violations


def phi(F: GF, vec: Sequence[int], m: int | None = None) -> Poly:
    """(a_0, ..., a_{m-1}) -> a_0 + a_1 x + ... + a_{m-1} x^{m-1}."""
    if m is not None and len(vec) != m:
        raise ValueError(f"vector of length {len(vec)}, expected {m}")
    return Poly(F, [int(a) for a in vec])


def phi_inv(p: Poly, m: int) -> list[int]:
    if p.degree >= m:
        raise ValueError(f"degree {p.degree} >= m = {m}")
    return list(p.coeffs) + [0] * (m - len(p.coeffs))


def big_phi(F: GF, array) -> list[Poly]:
    """m x ell array -> (c_0(x), ..., c_{ell-1}(x)), one polynomial per column."""
    a = np.asarray(array, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("expected an m x ell array")
    return [phi(F, a[:, j]) for j in range(a.shape[1])]


def big_phi_inv(polys: Sequence[Poly], m: int) -> np.ndarray:
    cols = [phi_inv(p, m) for p in polys]
    return np.array(cols, dtype=np.int64).T.reshape(m, len(polys))


def constashift(F: GF, lam: int, array) -> np.ndarray:
    """Row lambda-constashift: row k moves to k+1 and lam times the last row becomes row 0."""
    a = np.asarray(array, dtype=np.int64)
    out = np.empty_like(a)
    out[1:] = a[:-1]
    out[0] = [F.mul(lam, int(v)) for v in a[-1]]
    return out


@dataclass(frozen=True)
class QtCode:
    """lambda-QT code of index ell and co-index m over GF(q), stored by its reduced basis."""

    field: GF
    lam: int
    m: int
    ell: int
    gmatrix: PolyMatrix
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if gcd(self.m, self.field.order) != 1:
            raise ValueError(f"gcd(m, q) = gcd({self.m}, {self.field.order}) != 1")
        if not self.lam:
            raise ValueError("lambda must be nonzero")
        if self.gmatrix.shape != (self.ell, self.ell):
            raise ValueError("reduced matrix must be ell x ell")

    @classmethod
    def from_generators(cls, F: GF, m: int, lam: int, ell: int,
                        generators: Sequence[Sequence[Poly]] = ()) -> "QtCode":
        lam = F.elem(lam)
        if gcd(m, F.order) != 1:
            raise ValueError(f"gcd(m, q) = gcd({m}, {F.order}) != 1")
        if not lam:
            raise ValueError("lambda must be nonzero")
        return cls(F, lam, m, ell, reduce_generating_set(F, m, lam, ell, generators))

    @classmethod
    def zero(cls, F: GF, m: int, lam: int, ell: int) -> "QtCode":
        return cls.from_generators(F, m, lam, ell, [])

    @classmethod
    def full(cls, F: GF, m: int, lam: int, ell: int) -> "QtCode":
        one, zero = Poly.const(F, 1), Poly(F)
        return cls.from_generators(F, m, lam, ell, [[one if k == j else zero for k in range(ell)] for j in range(ell)])

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def length(self) -> int:
        return self.m * self.ell

    @cached_property
    def roots(self) -> RootSystem:
        return build_root_system(self.field, self.m, self.lam)

    @property
    def modulus(self) -> Poly:
        return Poly.binomial(self.field, self.m, self.lam)

    def dimension(self) -> int:
        return sum(self.m - self.gmatrix[j, j].degree for j in range(self.ell))

    def violations(self) -> list[str]:
        return reduced_form_violations(self.gmatrix, self.m, self.lam)

    def contains(self, word) -> bool:
        """Membership by division against the reduced basis."""
        a = np.asarray(word, dtype=np.int64)
        if a.shape != (self.m, self.ell):
            if a.size == self.length:
                a = a.reshape(self.m, self.ell)
            else:
                raise ValueError(f"word of shape {a.shape}, expected ({self.m}, {self.ell})")
        c = big_phi(self.field, a)
        mod = self.modulus
        G = self.gmatrix
        for j in range(self.ell):
            t, r = divmod(c[j], G[j, j])
            if not r.is_zero():
                return False
            if not t.is_zero():
                c = [(c[k] - t * G[j, k]) % mod if k > j else c[k] for k in range(self.ell)]
                c[j] = Poly(self.field)
        return True

    def generator_matrix(self) -> np.ndarray:
        """dim x (m*ell) scalar generator matrix: x^t times row j for t < m - deg g_jj."""
        if "gen" in self._cache:
            return self._cache["gen"].copy()
        mod = self.modulus
        rows = []
        for j in range(self.ell):
            row = list(self.gmatrix.rows[j])
            for t in range(self.m - row[j].degree):
                shifted = [(e.shift(t)) % mod for e in row]
                rows.append(big_phi_inv(shifted, self.m).reshape(-1))
        out = np.array(rows, dtype=np.int64).reshape(len(rows), self.length)
        self._cache["gen"] = out
        return out.copy()

    def random_codeword(self, rng: random.Random) -> np.ndarray:
        G = self.generator_matrix()
        F = self.field
        word = [0] * self.length
        for row in G:
            c = rng.randrange(F.order)
            if c:
                word = [F.add(w, F.mul(c, int(g))) for w, g in zip(word, row)]
        return np.array(word, dtype=np.int64).reshape(self.m, self.ell)

    def is_minimal_index(self) -> bool:
        """False if the code is also invariant under the constashift by a proper divisor of ell."""
        G = self.generator_matrix()
        if len(G) == 0:
            return self.ell == 1
        F = self.field
        r0 = rank(F, G.tolist())
        n = self.length
        for d in range(1, self.ell):
            if self.ell % d:
                continue
            shifted = []
            for row in G.tolist():
                shifted.append([F.mul(self.lam, v) for v in row[n - d:]] + row[:n - d])
            if rank(F, G.tolist() + shifted) == r0:
                return False
        return True

    def dumps(self) -> str:
        F = self.field
        lines = [f"q {F.order}", f"lambda {F.format(self.lam)}", f"m {self.m}", f"ell {self.ell}"]
        for row in self.gmatrix.rows:
            lines.append("gen " + " ".join(e.format() for e in row))
        return "\n".join(lines) + "\n"


def dimension(code: QtCode) -> int:
    return code.dimension()


def contains(code: QtCode, word) -> bool:
    return code.contains(word)


def scalar_generator_matrix(code: QtCode) -> np.ndarray:
    return code.generator_matrix()


class CodeFileError(ValueError):
    pass


def _parse_entry(F: GF, tok: str, lineno: int) -> Poly:
    # over GF(p^a) with a > 1 each coefficient is written as p-adic digits joined by ':'
    coeffs = []
    for part in tok.split(","):
        try:
            coeffs.append(F.from_coeffs(int(t) for t in part.split(":")) if F.s > 1 else int(part))
        except ValueError:
            raise CodeFileError(f"line {lineno}: malformed coefficient {part!r} in {tok!r}") from None
    return Poly(F, coeffs)


def parse_code(text: str) -> QtCode:
    """Parse the line-oriented code format (``q``, ``lambda``, ``m``, ``ell``, ``gen`` lines)."""
    header: dict[str, tuple[str, int]] = {}
    gens: list[tuple[list[str], int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key in ("q", "lambda", "m", "ell"):
            if key in header:
                raise CodeFileError(f"line {lineno}: duplicate '{key}'")
            header[key] = (rest, lineno)
        elif key == "gen":
            gens.append((rest.split(), lineno))
        else:
            raise CodeFileError(f"line {lineno}: unknown keyword {key!r}")
    for key in ("q", "lambda", "m", "ell"):
        if key not in header:
            raise CodeFileError(f"missing '{key}' line")

    def as_int(key: str) -> int:
        val, ln = header[key]
        try:
            return int(val)
        except ValueError:
            raise CodeFileError(f"line {ln}: '{key}' expects an integer, got {val!r}") from None

    q, m, ell = as_int("q"), as_int("m"), as_int("ell")
    try:
        F = field_of_order(q)
    except ValueError as exc:
        raise CodeFileError(f"line {header['q'][1]}: {exc}") from None
    lam_txt, lam_line = header["lambda"]
    try:
        lam = F.parse(lam_txt)
    except ValueError:
        raise CodeFileError(f"line {lam_line}: malformed lambda {lam_txt!r}") from None
    if not lam:
        raise CodeFileError(f"line {lam_line}: lambda must be nonzero")
    if m < 1 or ell < 1:
        raise CodeFileError("m and ell must be positive")
    if gcd(m, q) != 1:
        raise CodeFileError(f"line {header['m'][1]}: gcd(m, q) = gcd({m}, {q}) != 1")
    rows = []
    for toks, ln in gens:
        if len(toks) != ell:
            raise CodeFileError(f"line {ln}: expected {ell} entries, got {len(toks)}")
        rows.append([_parse_entry(F, t, ln) for t in toks])
    return QtCode.from_generators(F, m, lam, ell, rows)


def load_code(path: str | Path) -> QtCode:
    return parse_code(Path(path).read_text())


def random_qt_code(F: GF, m: int, lam: int, ell: int, rng: random.Random,
                   n_generators: int | None = None, divisor_bias: bool = False) -> QtCode:
    """Reduce r <= ell random generator vectors of degree < m.

    With ``divisor_bias`` each generator is multiplied by a random divisor of
    x^m - lam, which produces low-dimensional codes with nontrivial eigenvalues.
    """
    lam = F.elem(lam)
    r = n_generators if n_generators is not None else rng.randint(1, ell)
    factors = _irreducible_factors(F, m, lam) if divisor_bias else []
    gens = []
    for _ in range(r):
        vec = [Poly(F, [rng.randrange(F.order) for _ in range(m)]) for _ in range(ell)]
        if divisor_bias:
            d = Poly.const(F, 1)
            for f in factors:
                if rng.random() < 0.5:
                    d = d * f
            vec = [d * v for v in vec]
        gens.append(vec)
    return QtCode.from_generators(F, m, lam, ell, gens)


def _irreducible_factors(F: GF, m: int, lam: int) -> list[Poly]:
    from .oracle import constacyclic_from_defining_set  # local: oracle imports this module

    rs = build_root_system(F, m, lam)
    return [constacyclic_from_defining_set(rs, orb) for orb in rs.orbits()]


def corpus_parameters(qs=(2, 3), max_m: int = 15) -> list[tuple[int, int, int]]:
    """(q, m, lambda) triples with gcd(m, q) = 1; lambda = -1 only where it differs from 1."""
    out = []
    for q in qs:
        for m in range(2, max_m + 1):
            if gcd(m, q) != 1:
                continue
            out.append((q, m, 1))
            if q > 2:
                out.append((q, m, q - 1))
    return out


def random_corpus(n: int, seed: int = 0, max_ell: int = 3, max_m: int = 15) -> list[QtCode]:
    """Seeded list of random QT codes; every other code uses divisor-biased generators."""
    rng = random.Random(seed)
    params = corpus_parameters(max_m=max_m)
    codes = []
    for i in range(n):
        q, m, lam = rng.choice(params)
        ell = rng.randint(1, max_ell)
        codes.append(random_qt_code(field_of_order(q), m, lam, ell, rng, divisor_bias=bool(i % 2)))
    return codes
