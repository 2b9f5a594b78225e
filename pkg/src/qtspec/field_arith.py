"""Finite fields GF(p^s), subfield embeddings and the root system of x^m - lambda.

Elements are plain ints: the base-p digits of an element are its
coefficients in the power basis of the field modulus, lowest degree first.
So over GF(3^2) the int 7 = 1 + 2*3 stands for 1 + 2y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

# Above this size exp/log tables are not built and arithmetic falls back to
# direct polynomial multiplication.
TABLE_LIMIT = 1 << 20


class GF:
    """The field GF(p^s) with a fixed modulus and primitive element.

    Use :func:`make_field` rather than constructing this directly; it picks the
    modulus and generator deterministically and caches the result.
    """

    def __init__(self, p: int, s: int, modulus: Sequence[int], generator: int | None = None):
        self.p = p
        self.s = s
        self.modulus = tuple(int(c) % p for c in modulus)
        if len(self.modulus) != s + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree s")
        self.order = p**s
        self._pow = [p**i for i in range(s)]
        self._tables = self.order <= TABLE_LIMIT
        self._exp: list[int] = []
        self._log: list[int] = []
        self._zech: list[int] = []
        if generator is None:
            generator = self._find_generator()
        self.generator = generator
        if self._tables:
            self._build_tables()

    # -- encoding -----------------------------------------------------------------
    def to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.s):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.s:
            raise ValueError(f"too many coefficients for GF({self.p}^{self.s})")
        return sum(ci * self._pow[i] for i, ci in enumerate(c))

    def format(self, a: int) -> str:
        """Ascending comma-separated coefficients, e.g. ``"1,0,2"``."""
        c = self.to_coeffs(a)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        return ",".join(str(x) for x in c)

    def parse(self, text: str) -> int:
        try:
            coeffs = [int(t) for t in text.strip().split(",") if t.strip() != ""]
        except ValueError as exc:
            raise ValueError(f"malformed field element {text!r}") from exc
        if not coeffs:
            raise ValueError(f"malformed field element {text!r}")
        while len(coeffs) > self.s and coeffs[-1] % self.p == 0:
            coeffs.pop()
        return self.from_coeffs(coeffs)

    def elem(self, n: int) -> int:
        """Coerce an int to an element code. Negative ints are read in the prime field."""
        n = int(n)
        if self.s == 1 or n < 0:
            return self.from_coeffs([n % self.p])
        if n >= self.order:
            raise ValueError(f"{n} is not an element code of GF({self.order})")
        return n

    # -- raw polynomial arithmetic (table construction / large fields) -------------
    def _raw_mul(self, a: int, b: int) -> int:
        p, s = self.p, self.s
        x, y = self.to_coeffs(a), self.to_coeffs(b)
        prod = [0] * (2 * s - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        prod[i + j] += xi * yj
        mod = self.modulus
        for k in range(2 * s - 2, s - 1, -1):
            c = prod[k] % p
            if c:
                for t in range(s):
                    prod[k - s + t] -= c * mod[t]
            prod[k] = 0
        return self.from_coeffs(prod[:s])

    def _raw_pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _digit_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        x, y = self.to_coeffs(a), self.to_coeffs(b)
        return self.from_coeffs(xi + yi for xi, yi in zip(x, y))

    def _find_generator(self) -> int:
        n = self.order - 1
        if n == 1:
            return 1
        cofactors = [n // r for r in factorint(n)]
        for g in range(1, self.order):
            if all(self._raw_pow(g, c) != 1 for c in cofactors):
                return g
        raise RuntimeError("no primitive element found")  # pragma: no cover

    def _build_tables(self) -> None:
        n = self.order - 1
        p, s = self.p, self.s
        # multiplication by the generator as an s x s matrix over GF(p)
        cols = [self.to_coeffs(self._raw_mul(self.generator, self.from_coeffs([0] * i + [1])))
                for i in range(s)]
        mat = np.array(cols, dtype=np.int64).T
        weights = np.array(self._pow, dtype=np.int64)
        exp = [0] * n
        log = [-1] * self.order
        v = np.zeros(s, dtype=np.int64)
        v[0] = 1
        for i in range(n):
            code = int(v @ weights)
            exp[i] = code
            log[code] = i
            v = (mat @ v) % p
        self._exp, self._log = exp, log
        if p != 2:
            zech = [-1] * n
            for i in range(n):
                e = exp[i]
                one_more = e - e % p + (e % p + 1) % p
                zech[i] = log[one_more] if one_more else -1
            self._zech = zech

    # -- arithmetic ---------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.s == 1:
            return (a + b) % self.p
        if not a:
            return b
        if not b:
            return a
        if not self._tables:
            return self._digit_add(a, b)
        n = self.order - 1
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % n]
        return 0 if z < 0 else self._exp[(la + z) % n]

    def neg(self, a: int) -> int:
        if self.p == 2 or not a:
            return a
        if self.s == 1:
            return self.p - a
        return self.from_coeffs(-c for c in self.to_coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.s == 1:
            return (a * b) % self.p
        if not self._tables:
            return self._raw_mul(a, b)
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.s == 1:
            return pow(a, self.p - 2, self.p)
        if not self._tables:
            return self._raw_pow(a, self.order - 2)
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if not a:
            return 0
        if not self._tables:
            return self._raw_pow(a, e % (self.order - 1)) if e > 0 else self._raw_pow(self.inv(a), -e)
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log to base ``generator``."""
        if not a:
            raise ValueError("log of zero")
        if not self._tables:
            return self._bsgs_log(a)
        return self._log[a]

    def _bsgs_log(self, a: int) -> int:
        # baby-step giant-step inside the cyclic subgroup of order ord(a)
        n = self.order - 1
        r = self.mult_order(a)
        h = self.gen_pow(n // r)
        step = isqrt(r) + 1
        baby = {}
        x = 1
        for j in range(step):
            baby.setdefault(x, j)
            x = self.mul(x, h)
        giant = self.inv(self.pow(h, step))
        y = a
        for i in range(step + 1):
            if y in baby:
                return ((i * step + baby[y]) % r) * (n // r)
            y = self.mul(y, giant)
        raise ArithmeticError("discrete log failed")

    def gen_pow(self, e: int) -> int:
        return self.pow(self.generator, e % (self.order - 1))

    def mult_order(self, a: int) -> int:
        if not a:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        for r, k in factorint(n).items():
            for _ in range(k):
                if n % r == 0 and self.pow(a, n // r) == 1:
                    n //= r
        return n

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.s})" if self.s > 1 else f"GF({self.p})"


def _lex_first_irreducible(p: int, s: int) -> tuple[int, ...]:
    if s == 1:
        return (0, 1)
    for n in range(p**s):
        low = [(n // p**i) % p for i in range(s)]
        if low[0] == 0:
            continue
        desc = [1] + low[::-1]
        if gf_irreducible_p([ZZ(c) for c in desc], p, ZZ):
            return tuple(low) + (1,)
    raise RuntimeError(f"no irreducible polynomial of degree {s} over GF({p})")  # pragma: no cover


@lru_cache(maxsize=None)
def make_field(p: int, s: int = 1) -> GF:
    """GF(p^s) with the lexicographically first monic irreducible modulus
    and the smallest primitive element."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if s < 1:
        raise ValueError("extension degree must be >= 1")
    return GF(p, s, _lex_first_irreducible(p, s))


def field_of_order(q: int) -> GF:
    """GF(q) for a prime power q."""
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    (p, s), = f.items()
    return make_field(int(p), int(s))


@lru_cache(maxsize=None)
def embedding(sub: GF, sup: GF) -> tuple[int, ...]:
    """Table mapping each element code of ``sub`` to its image in ``sup``.

    The root of ``sub.modulus`` inside ``sup`` is the first one found among the
    powers of ``sup.generator`` lying in the subfield.
    """
    if sub is sup:
        return tuple(range(sub.order))
    if sub.p != sup.p or sup.s % sub.s:
        raise ValueError(f"{sub} is not a subfield of {sup}")
    if sub.s == 1:
        return tuple(range(sub.order))
    step = (sup.order - 1) // (sub.order - 1)
    root = None
    for k in range(sub.order - 1):
        r = sup.gen_pow(k * step)
        acc = 0
        for c in reversed(sub.modulus):
            acc = sup.add(sup.mul(acc, r), c)
        if acc == 0:
            root = r
            break
    if root is None:
        raise RuntimeError("subfield modulus has no root")  # pragma: no cover
    powers = [sup.pow(root, i) for i in range(sub.s)]
    table = []
    for a in range(sub.order):
        acc = 0
        for c, rp in zip(sub.to_coeffs(a), powers):
            if c:
                acc = sup.add(acc, sup.mul(c, rp))
        table.append(acc)
    return tuple(table)


class SubfieldCoords:
    """Coordinates of elements of ``sup`` over the subfield ``sub``.

    For a prime subfield these are the digits of the element code; otherwise
    the basis 1, t, ..., t^(d-1) with t = ``sup.generator`` is used.
    """

    def __init__(self, sub: GF, sup: GF):
        self.sub, self.sup = sub, sup
        self.degree = sup.s // sub.s
        self._solve = None
        if sub.s > 1:
            emb = embedding(sub, sup)
            p = sup.p
            basis = []
            for i in range(self.degree):
                ti = sup.gen_pow(i)
                for r in range(sub.s):
                    basis.append(sup.mul(emb[sub.from_coeffs([0] * r + [1])], ti))
            mat = [[sup.to_coeffs(b)[row] for b in basis] for row in range(sup.s)]
            self._solve = _inverse_mod_p(mat, p)

    def __call__(self, a: int) -> list[int]:
        if self._solve is None:
            return self.sup.to_coeffs(a)
        digits = self.sup.to_coeffs(a)
        p = self.sup.p
        flat = [sum(row[j] * digits[j] for j in range(len(digits))) % p for row in self._solve]
        k = self.sub.s
        return [self.sub.from_coeffs(flat[i * k:(i + 1) * k]) for i in range(self.degree)]


def _inverse_mod_p(mat: list[list[int]], p: int) -> list[list[int]]:
    n = len(mat)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def splitting_field_degree(base: GF, m: int, lam: int) -> int:
    """Least s with m * ord(lam) | q^s - 1, so every m-th root of lam lies in GF(q^s)."""
    q = base.order
    if gcd(m, q) != 1:
        raise ValueError(f"gcd(m, q) = gcd({m}, {q}) != 1")
    if not lam:
        raise ValueError("lambda must be nonzero")
    n = m * base.mult_order(lam)
    s, acc = 1, q % n
    while acc != 1 % n:
        acc = (acc * q) % n
        s += 1
    return s


@dataclass(frozen=True)
class RootSystem:
    """The m-th roots of lambda, written omega[k] = alpha * xi^k, inside the splitting field."""

    base: GF
    ext: GF
    m: int
    lam: int
    alpha: int
    xi: int
    omega: tuple[int, ...]
    index: dict = field(compare=False, repr=False)

    @property
    def q(self) -> int:
        return self.base.order

    @property
    def emb(self) -> tuple[int, ...]:
        return embedding(self.base, self.ext)

    def frobenius_map(self) -> list[int]:
        """perm[k] = j with (alpha xi^k)^q = alpha xi^j."""
        return _frobenius_map(self)

    def orbits(self) -> list[tuple[int, ...]]:
        perm = self.frobenius_map()
        seen, out = set(), []
        for k in range(self.m):
            if k not in seen:
                orb = frobenius_orbit(self, k, perm)
                seen |= orb
                out.append(tuple(sorted(orb)))
        return out

    def closure(self, indices: Iterable[int]) -> frozenset[int]:
        perm = self.frobenius_map()
        out: set[int] = set()
        for k in indices:
            out |= frobenius_orbit(self, k, perm)
        return frozenset(out)

    def is_closed(self, indices: Iterable[int]) -> bool:
        idx = frozenset(indices)
        return self.closure(idx) == idx


@lru_cache(maxsize=256)
def _frobenius_cache(rs: RootSystem) -> tuple[int, ...]:
    q = rs.q
    return tuple(rs.index[rs.ext.pow(w, q)] for w in rs.omega)


def _frobenius_map(rs: RootSystem) -> list[int]:
    return list(_frobenius_cache(rs))


def build_root_system(base: GF, m: int, lam: int) -> RootSystem:
    lam = base.elem(lam)
    s = splitting_field_degree(base, m, lam)
    ext = make_field(base.p, base.s * s)
    lam_e = embedding(base, ext)[lam]
    n = ext.order - 1
    lam_log = ext.log(lam_e)
    # first generator power g^t with (g^t)^m = lam
    d = gcd(m, n)
    t = (lam_log // d) * pow(m // d, -1, n // d) % (n // d)
    alpha = ext.gen_pow(t)
    xi = ext.gen_pow(n // m)
    omega = tuple(ext.mul(alpha, ext.pow(xi, k)) for k in range(m))
    index = {w: k for k, w in enumerate(omega)}
    return RootSystem(base, ext, m, lam, alpha, xi, omega, index)


def root_system(q: int, m: int, lam: int | Sequence[int]) -> RootSystem:
    """Convenience wrapper: q as an int, lambda as an int (prime field) or coefficient list."""
    base = field_of_order(q)
    if isinstance(lam, (list, tuple)):
        lam = base.from_coeffs(lam)
    return build_root_system(base, m, base.elem(lam))


def frobenius_orbit(rs: RootSystem, k: int, perm: Sequence[int] | None = None) -> set[int]:
    """Indices j with alpha xi^j in the orbit of alpha xi^k under x -> x^q."""
    if not 0 <= k < rs.m:
        raise ValueError(f"index {k} out of range for m={rs.m}")
    if perm is None:
        q = rs.q
        out, w = set(), rs.omega[k]
        while True:
            j = rs.index[w]
            if j in out:
                return out
            out.add(j)
            w = rs.ext.pow(w, q)
    out, j = set(), k
    while j not in out:
        out.add(j)
        j = perm[j]
    return out
