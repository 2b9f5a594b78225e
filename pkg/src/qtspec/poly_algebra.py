"""Univariate polynomials and polynomial matrices over a GF, plus dense linear algebra.

The reduction of a generating set to the upper-triangular reduced basis lives
here too, since it is nothing but row operations over GF(q)[x].
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field_arith import GF, embedding


class Poly:
    """Immutable polynomial with coefficients (ascending) in ``field``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Iterable[int] = ()):
        c = [field.elem(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, field: GF, coeffs: list[int]) -> "Poly":
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        p = cls.__new__(cls)
        p.field = field
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def x(cls, field: GF) -> "Poly":
        return cls._raw(field, [0, 1])

    @classmethod
    def const(cls, field: GF, c: int) -> "Poly":
        return cls._raw(field, [field.elem(c)])

    @classmethod
    def monomial(cls, field: GF, n: int, c: int = 1) -> "Poly":
        return cls._raw(field, [0] * n + [field.elem(c)])

    @classmethod
    def binomial(cls, field: GF, m: int, lam: int) -> "Poly":
        """x^m - lam."""
        return cls._raw(field, [field.neg(lam)] + [0] * (m - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def _check(self, other: "Poly") -> None:
        if other.field is not self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, bi in enumerate(b):
            out[i] = F.add(out[i], bi)
        return Poly._raw(F, out)

    def __neg__(self) -> "Poly":
        return Poly._raw(self.field, [self.field.neg(a) for a in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly._raw(F, [F.mul(c, a) for a in self.coeffs])

    def shift(self, n: int) -> "Poly":
        """Multiply by x^n."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, [0] * n + list(self.coeffs))

    def __mul__(self, other: "Poly") -> "Poly":
        if isinstance(other, int):
            return self.scale(self.field.elem(other))
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(F, [])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly._raw(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        db = other.degree
        inv = F.inv(other.lead)
        if len(rem) <= db:
            return Poly._raw(F, []), self
        quo = [0] * (len(rem) - db)
        b = other.coeffs
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c:
                t = F.mul(c, inv)
                quo[k - db] = t
                for i, bi in enumerate(b):
                    if bi:
                        rem[k - db + i] = F.sub(rem[k - db + i], F.mul(t, bi))
        return Poly._raw(F, quo), Poly._raw(F, rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.lead))

    def derivative(self) -> "Poly":
        F = self.field
        return Poly._raw(F, [F.mul(F.elem(i % F.p), a) for i, a in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def embed(self, ext: GF) -> "Poly":
        """The same polynomial with coefficients mapped into the extension ``ext``."""
        if ext is self.field:
            return self
        table = embedding(self.field, ext)
        return Poly._raw(ext, [table[a] for a in self.coeffs])

    def at(self, x: int, ext: GF | None = None) -> int:
        """Evaluate at ``x``; if ``ext`` is given, ``x`` lives in that extension."""
        return self.embed(ext)(x) if ext is not None else self(x)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and other.field is self.field and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.field}, {list(self.coeffs)})"

    def format(self) -> str:
        if not self.coeffs:
            return "0"
        F = self.field
        if F.s == 1:
            return ",".join(str(c) for c in self.coeffs)
        return ",".join(":".join(str(d) for d in F.to_coeffs(c)) for c in self.coeffs)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def root_multiplicity(f: Poly, beta: int) -> int:
    """Largest a with (x - beta)^a | f; beta must lie in ``f.field``."""
    if f.is_zero():
        raise ValueError("root multiplicity of the zero polynomial")
    F = f.field
    count = 0
    coeffs = list(f.coeffs)
    while len(coeffs) > 1:
        # synthetic division by (x - beta)
        quo = [0] * (len(coeffs) - 1)
        acc = 0
        for k in range(len(coeffs) - 1, 0, -1):
            acc = F.add(F.mul(acc, beta), coeffs[k])
            quo[k - 1] = acc
        rem = F.add(F.mul(acc, beta), coeffs[0])
        if rem:
            break
        count += 1
        coeffs = quo
    return count


class PolyMatrix:
    """Rectangular grid of polynomials over one field."""

    def __init__(self, field: GF, rows: Sequence[Sequence[Poly]]):
        self.field = field
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows:
            n = len(self.rows[0])
            if any(len(r) != n for r in self.rows):
                raise ValueError("ragged polynomial matrix")
            for r in self.rows:
                for e in r:
                    if e.field is not field:
                        raise ValueError("entries must share the matrix field")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self.rows[i][j]

    def diagonal(self) -> list[Poly]:
        return [self.rows[i][i] for i in range(min(self.shape))]

    def is_upper_triangular(self) -> bool:
        return all(self.rows[i][j].is_zero() for i in range(len(self.rows)) for j in range(min(i, len(self.rows[i]))))

    def evaluate(self, beta: int, ext: GF | None = None) -> list[list[int]]:
        """Scalar matrix G(beta) over ``ext`` (or the matrix field)."""
        return [[e.at(beta, ext) for e in row] for row in self.rows]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyMatrix) and other.field is self.field and other.rows == self.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "PolyMatrix(\n" + "\n".join("  " + " ".join(e.format() for e in r) for r in self.rows) + "\n)"

    def format(self) -> str:
        return "\n".join(" ".join(e.format() for e in r) for r in self.rows)


def determinant(M: PolyMatrix, method: str = "auto") -> Poly:
    """det(M). Upper-triangular input takes the product of the diagonal unless
    ``method='bareiss'``, which always runs fraction-free elimination."""
    n, k = M.shape
    if n != k:
        raise ValueError(f"determinant of a non-square {n}x{k} matrix")
    F = M.field
    if method not in ("auto", "bareiss", "triangular"):
        raise ValueError(f"unknown method {method!r}")
    if method == "triangular" or (method == "auto" and M.is_upper_triangular()):
        if not M.is_upper_triangular():
            raise ValueError("matrix is not upper triangular")
        out = Poly.const(F, 1)
        for d in M.diagonal():
            out = out * d
        return out
    return _bareiss(M)


def _bareiss(M: PolyMatrix) -> Poly:
    F = M.field
    n = M.shape[0]
    if n == 0:
        return Poly.const(F, 1)
    a = [list(r) for r in M.rows]
    sign = 1
    prev = Poly.const(F, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return Poly(F)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                quo, rem = divmod(num, prev)
                if not rem.is_zero():
                    raise ArithmeticError("inexact Bareiss division")  # pragma: no cover
                a[i][j] = quo
            a[i][k] = Poly(F)
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


# -- dense linear algebra over a field ---------------------------------------------

def rref(F: GF, M: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form (pivots normalised to 1) and pivot columns."""
    a = [list(r) for r in M]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        a[r] = [F.mul(inv, x) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                row_r = a[r]
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(F: GF, M: Sequence[Sequence[int]]) -> int:
    return len(rref(F, M)[1])


def null_space(F: GF, M: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Basis of {v : M v^T = 0}, one vector per free column in ascending order."""
    if ncols is None:
        if not M:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(M[0])
    R, pivots = rref(F, M) if M else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[f])
        basis.append(v)
    return basis


def mat_vec(F: GF, M: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


# -- reduction to the upper-triangular reduced basis --------------------------------

def reduce_generating_set(F: GF, m: int, lam: int, ell: int,
                          generators: Sequence[Sequence[Poly]] = ()) -> PolyMatrix:
    """Reduced upper-triangular basis of the F[x]-module spanned by ``generators``
    and the rows (x^m - lam) e_j.

    Column-by-column Euclidean elimination followed by reduction of each
    off-diagonal entry modulo the diagonal entry of its column. Diagonal entries
    are monic; a row whose pivot is x^m - lam is replaced by (x^m - lam) e_j.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    lam = F.elem(lam)
    mod = Poly.binomial(F, m, lam)
    zero = Poly(F)
    pool: list[list[Poly]] = []
    for g in generators:
        if len(g) != ell:
            raise ValueError(f"generator of length {len(g)}, expected {ell}")
        row = [(e if isinstance(e, Poly) else Poly(F, e)) % mod for e in g]
        if any(not e.is_zero() for e in row):
            pool.append(row)
    for j in range(ell):
        pool.append([mod if k == j else zero for k in range(ell)])

    result: list[list[Poly]] = []
    for j in range(ell):
        active = [r for r in pool if not r[j].is_zero()]
        rest = [r for r in pool if r[j].is_zero()]
        while len(active) > 1:
            active.sort(key=lambda r: r[j].degree)
            piv = active[0]
            survivors = [piv]
            for r in active[1:]:
                t = r[j] // piv[j]
                new = [(r[k] - t * piv[k]) % mod if k > j else (r[k] - t * piv[k]) for k in range(ell)]
                if new[j].is_zero():
                    if any(not e.is_zero() for e in new):
                        rest.append(new)
                else:
                    survivors.append(new)
            active = survivors
        piv = active[0]
        inv = F.inv(piv[j].lead)
        piv = [e.scale(inv) for e in piv]
        if piv[j] == mod:
            piv = [mod if k == j else zero for k in range(ell)]
        result.append(piv)
        pool = rest

    # condition 2: deg g_{i,j} < deg g_{j,j} for i < j
    for j in range(1, ell):
        gjj = result[j][j]
        for i in range(j):
            t, r = divmod(result[i][j], gjj)
            if not t.is_zero():
                result[i] = [result[i][k] - t * result[j][k] if k >= j else result[i][k] for k in range(ell)]
                result[i][j] = r
    return PolyMatrix(F, result)


def reduced_form_violations(G: PolyMatrix, m: int, lam: int) -> list[str]:
    """Check the four conditions of a reduced basis; returns human-readable violations.

    Condition 4 is checked row-wise: a diagonal entry equal to x^m - lam forces
    the rest of its row to vanish. (The column-wise reading cannot hold in
    general: the module spanned by (1, x) has g_11 = x^m - lam and g_01 = x.)
    """
    F = G.field
    mod = Poly.binomial(F, m, F.elem(lam))
    n, k = G.shape
    out = []
    if n != k:
        out.append(f"not square: {n}x{k}")
        return out
    for i in range(n):
        for j in range(n):
            g = G[i, j]
            if j < i and not g.is_zero():
                out.append(f"(1) g[{i},{j}] != 0")
            if i < j and g.degree >= G[j, j].degree:
                out.append(f"(2) deg g[{i},{j}] >= deg g[{j},{j}]")
        d = G[i, i]
        if d.is_zero() or not (mod % d).is_zero():
            out.append(f"(3) g[{i},{i}] does not divide x^m - lambda")
        elif d.lead != 1:
            out.append(f"(3) g[{i},{i}] not monic")
        if d == mod and any(not G[i, j].is_zero() for j in range(n) if j != i):
            out.append(f"(4) row {i} has pivot x^m - lambda but nonzero off-diagonal entries")
    return out
