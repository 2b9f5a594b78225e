"""Eigenvalues, eigenspaces, eigencodes and the spectral parity-check matrix of a QT code."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .field_arith import SubfieldCoords
from .oracle import OracleConfig, min_distance
from .poly_algebra import determinant, null_space, root_multiplicity
from .qt_module import QtCode

INFINITY = math.inf


@dataclass(frozen=True)
class Eigenvalue:
    index: int  # beta = alpha * xi^index
    beta: int
    multiplicity: int
    basis: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class SpectralData:
    eigenvalues: tuple[Eigenvalue, ...]

    @property
    def omega_bar(self) -> tuple[int, ...]:
        return tuple(e.index for e in self.eigenvalues)

    @property
    def multiplicities(self) -> dict[int, int]:
        return {e.index: e.multiplicity for e in self.eigenvalues}


@dataclass(frozen=True)
class Eigencode:
    basis: tuple[tuple[int, ...], ...]  # over GF(q)
    distance: float  # int, or INFINITY when the eigencode is {0}

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _evaluated(code: QtCode, k: int) -> list[list[int]]:
    cache = code._cache.setdefault("geval", {})
    if k not in cache:
        rs = code.roots
        cache[k] = code.gmatrix.evaluate(rs.omega[k], rs.ext)
    return cache[k]


def eigenvalues(code: QtCode) -> SpectralData:
    """Roots of det G(x) among the m-th roots of lambda, with algebraic multiplicities."""
    if "eigs" in code._cache:
        return code._cache["eigs"]
    rs = code.roots
    det = determinant(code.gmatrix).embed(rs.ext)
    out = []
    for k, w in enumerate(rs.omega):
        if det(w) == 0:
            out.append(Eigenvalue(k, w, root_multiplicity(det, w)))
    data = SpectralData(tuple(out))
    code._cache["eigs"] = data
    return data


def omega_bar(code: QtCode) -> tuple[int, ...]:
    return eigenvalues(code).omega_bar


def eigenspace(code: QtCode, k: int) -> list[list[int]]:
    """Basis of the null space of G(beta), beta = alpha xi^k, over the splitting field."""
    if not 0 <= k < code.m:
        raise ValueError(f"{k} does not index an m-th root of lambda")
    return null_space(code.roots.ext, _evaluated(code, k), ncols=code.ell)


def common_eigenspace(code: QtCode, P: Iterable[int]) -> list[list[int]]:
    P = sorted(set(P))
    if not P:
        raise ValueError("common eigenspace of an empty eigenvalue set")
    bar = set(omega_bar(code))
    if not set(P) <= bar:
        raise ValueError(f"{sorted(set(P) - bar)} are not eigenvalue indices")
    key = tuple(P)
    cache = code._cache.setdefault("common", {})
    if key not in cache:
        rows = [r for k in P for r in _evaluated(code, k)]
        cache[key] = null_space(code.roots.ext, rows, ncols=code.ell)
    return cache[key]


def spectral_data(code: QtCode) -> SpectralData:
    data = eigenvalues(code)
    return SpectralData(tuple(
        Eigenvalue(e.index, e.beta, e.multiplicity, tuple(tuple(v) for v in eigenspace(code, e.index)))
        for e in data.eigenvalues))


def eigencode(code: QtCode, basis: Sequence[Sequence[int]], config: OracleConfig | None = None) -> Eigencode:
    """Vectors u over GF(q) with sum_j v_j u_j = 0 for every basis vector v of the eigenspace.

    Each constraint over the splitting field is split into its coordinates over
    GF(q), giving a linear system over GF(q).
    """
    F, ell = code.field, code.ell
    if not basis:
        ident = tuple(tuple(int(i == j) for j in range(ell)) for i in range(ell))
        return Eigencode(ident, 1)
    if any(len(v) != ell for v in basis):
        raise ValueError(f"eigenspace vectors must have length {ell}")
    coords = code._cache.get("coords")
    if coords is None:
        coords = code._cache["coords"] = SubfieldCoords(F, code.roots.ext)
    rows = []
    for v in basis:
        cv = [coords(x) for x in v]
        for i in range(coords.degree):
            rows.append([c[i] for c in cv])
    ec = null_space(F, rows, ncols=ell)
    if not ec:
        return Eigencode((), INFINITY)
    return Eigencode(tuple(tuple(v) for v in ec), min_distance(F, ec, config))


def parity_check(code: QtCode) -> list[list[int]]:
    """Stacked blocks (1, beta, ..., beta^{m-1}) (x) V_beta over the splitting field.

    Columns follow the row-major layout of the m x ell array. The full code has
    no eigenvalues and gets the empty constraint matrix.
    """
    E = code.roots.ext
    m, ell = code.m, code.ell
    rows = []
    for e in eigenvalues(code).eigenvalues:
        powers = [E.pow(e.beta, k) for k in range(m)]
        for v in eigenspace(code, e.index):
            rows.append([E.mul(pk, vj) for pk in powers for vj in v])
    return rows


def eigencode_distance(code: QtCode, P: Iterable[int], config: OracleConfig | None = None) -> float:
    return eigencode(code, common_eigenspace(code, P), config).distance
