"""Defining-set distance bounds for constacyclic codes and their spectral versions for QT codes.

Everything below works on index sets: k stands for the root alpha xi^k, so a
consecutive set is an arithmetic progression of indices mod m and the
"product" MN of two root sets is the sumset of their indices.
Sets are passed around as Python ints used as bit masks (m <= 64).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .oracle import OracleConfig, constacyclic_distance
from .qt_module import QtCode
from .spectral_core import INFINITY, common_eigenspace, eigencode, omega_bar

MAX_M = 64


class SearchCapExceeded(RuntimeError):
    """A search limit would have truncated the result."""


@dataclass(frozen=True)
class ConsecutiveSet:
    m: int
    e: int
    n: int
    delta: int  # the set has delta - 1 elements

    @property
    def indices(self) -> list[int]:
        return [(self.e + z * self.n) % self.m for z in range(self.delta - 1)]


@dataclass
class BoundWitness:
    method: str  # BCH | HT | ROOS | SHIFT | SPECTRAL | SPECTRAL_ROOS | SPECTRAL_SHIFT
    value: float
    payload: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"method": self.method, "value": _json_value(self.value), "payload": self.payload}


def _json_value(v):
    return "inf" if v == INFINITY else int(v)


# -- bit mask helpers ------------------------------------------------------------

def _mask(idx: Iterable[int]) -> int:
    out = 0
    for k in idx:
        out |= 1 << k
    return out


def _members(mask: int) -> list[int]:
    out, k = [], 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def _rot(mask: int, j: int, m: int, full: int) -> int:
    j %= m
    if not j:
        return mask
    return ((mask << j) | (mask >> (m - j))) & full


def _canon(mask: int, m: int, full: int) -> int:
    best = mask
    for j in range(1, m):
        r = ((mask << j) | (mask >> (m - j))) & full
        if r < best:
            best = r
    return best


def _prepare(m: int, L: Iterable[int]) -> frozenset[int]:
    if m < 1:
        raise ValueError("m must be positive")
    S = frozenset(int(k) % m for k in L)
    if not S:
        raise ValueError("defining set is empty")
    if len(S) == m:
        raise ValueError("defining set is all of Omega")
    return S


def _coprime(m: int) -> list[int]:
    return [n for n in range(1, m) if math.gcd(n, m) == 1]


# -- BCH ---------------------------------------------------------------------------

def bch_bound(m: int, L: Iterable[int], stride_policy: str = "unit") -> BoundWitness:
    """Longest consecutive run in L, plus one.

    ``unit`` only allows stride 1 (the convention of the reference table);
    ``coprime`` allows every stride n with gcd(m, n) = 1.
    """
    S = _prepare(m, L)
    if stride_policy == "unit":
        strides = [1]
    elif stride_policy == "coprime":
        strides = _coprime(m) or [1]
    else:
        raise ValueError(f"unknown stride policy {stride_policy!r}")
    best = None
    for n in strides:
        for e in sorted(S):
            if (e - n) % m in S:
                continue
            run = 0
            while (e + run * n) % m in S:
                run += 1
            key = (-(run + 1), e, n)
            if best is None or key < best:
                best = key
    delta, e, n = -best[0], best[1], best[2]
    cs = ConsecutiveSet(m, e, n, delta)
    return BoundWitness("BCH", delta, {"e": e, "n": n, "delta": delta, "set": cs.indices,
                                       "stride_policy": stride_policy})


# -- Hartmann-Tzeng ------------------------------------------------------------------

def ht_bound(m: int, L: Iterable[int], general_n1: bool = False) -> BoundWitness:
    """max delta + s over sets {e + z n1 + y n2 : z <= delta - 2, y <= s} inside L
    with gcd(m, n1) = 1 and gcd(m, n2) < delta. By default n1 = 1."""
    S = _prepare(m, L)
    full = (1 << m) - 1
    Lm = _mask(S)
    n1s = (_coprime(m) or [1]) if general_n1 else [1]
    best = None
    for n1 in n1s:
        for e in range(m):
            R = 0
            for z in range(m):
                k = (e + z * n1) % m
                if not (Lm >> k) & 1:
                    break
                R |= 1 << k
                delta = z + 2
                for n2 in range(1, m):
                    if math.gcd(m, n2) >= delta:
                        continue
                    s = 0
                    while s + 1 < m and not _rot(R, (s + 1) * n2, m, full) & ~Lm:
                        s += 1
                    key = (-(delta + s), e, n1, delta, n2, s)
                    if best is None or key < best:
                        best = key
    value, e, n1, delta, n2, s = -best[0], *best[1:]
    D = sorted({(e + z * n1 + y * n2) % m for z in range(delta - 1) for y in range(s + 1)})
    return BoundWitness("HT", value, {"e": e, "n1": n1, "delta": delta, "n2": n2, "s": s, "set": D})


# -- Roos ------------------------------------------------------------------------------

@dataclass(frozen=True)
class RoosCaps:
    max_m_prime: int = 20
    n_source: str = "bch"  # how d_N is obtained: "bch" (N consecutive) or "ht" (N an HT set)


def _roos_n_sets(m: int, Lm: int, source: str):
    """Candidate N (normalised to contain index 0) with their d_N lower bounds.

    Yields (payload, mask, d_N, good) where good is the mask of v with v + N inside L.
    """
    full = (1 << m) - 1
    seen = set()

    def good_of(N: int) -> int:
        g = full
        for u in _members(N):
            g &= _rot(Lm, -u, m, full)
        return g

    strides = [n for n in _coprime(m) if n <= m // 2] or [1]
    if source == "bch":
        for n in strides:
            N = 0
            for r in range(1, m):
                N |= 1 << ((r - 1) * n % m)
                g = good_of(N)
                if not g:
                    break
                if N in seen:
                    continue
                seen.add(N)
                yield {"kind": "consecutive", "start": 0, "stride": n, "size": r}, N, r + 1, g
    elif source == "ht":
        found: dict[int, tuple[int, dict, int]] = {}
        for n1 in strides:
            for delta in range(2, m + 1):
                R = _mask((z * n1) % m for z in range(delta - 1))
                if not good_of(R):
                    break
                for n2 in range(1, m):
                    if math.gcd(m, n2) >= delta:
                        continue
                    N = R
                    for s in range(0, m):
                        if s:
                            N |= _rot(R, s * n2, m, full)
                        g = good_of(N)
                        if not g:
                            break
                        if N not in found or found[N][0] < delta + s:
                            found[N] = (delta + s, {"kind": "ht", "n1": n1, "delta": delta, "n2": n2, "s": s}, g)
        # one entry per N, keeping its largest d_N; larger d_N first
        for N, (dN, pay, g) in sorted(found.items(), key=lambda kv: (-kv[1][0], kv[0])):
            yield pay, N, dN, g
    else:
        raise ValueError(f"unknown d_N source {source!r}")


def _windows(m: int, n2: int, good: int, max_bad: int, cap: int):
    """Windows M' = {e + z n2 : z < t} starting and ending on good indices with at
    most ``max_bad`` non-good members. Yields (e, t, M mask, within_cap)."""
    order = [(z * n2) % m for z in range(m)]
    flags = [(good >> k) & 1 for k in order]
    for i in range(m):
        if not flags[i]:
            continue
        bad = 0
        M = 0
        for t in range(1, m + 1):
            pos = (i + t - 1) % m
            if flags[pos]:
                M |= 1 << order[pos]
                yield order[i], t, M, t <= cap
            else:
                bad += 1
                if bad > max_bad:
                    break


def _roos_candidates(m: int, Lm: int, caps: RoosCaps):
    for npay, N, dN, good in _roos_n_sets(m, Lm, caps.n_source):
        for n2 in _coprime(m) or [1]:
            for e, t, M, ok in _windows(m, n2, good, dN - 2, caps.max_m_prime):
                yield npay, N, dN, n2, e, t, M, ok


def _best_windows(m: int, n2: int, good: int, max_bad: int, cap: int):
    """For every good start, the longest admissible window along stride n2, trimmed
    to end on a good index. Yields (e, t, good count) within the cap and the
    uncapped good count."""
    order = [(z * n2) % m for z in range(m)]
    flags = [(good >> k) & 1 for k in order] * 2
    pre = [0]
    for f in flags:
        pre.append(pre[-1] + f)
    last_good = []
    lg = -1
    for j, f in enumerate(flags):
        if f:
            lg = j
        last_good.append(lg)
    j = 0
    for i in range(m):
        if j < i:
            j = i
        while j + 1 < i + m and (j + 2 - i) - (pre[j + 2] - pre[i]) <= max_bad:
            j += 1
        if not flags[i]:
            continue
        full_cnt = pre[last_good[j] + 1] - pre[i]
        jc = last_good[min(j, i + cap - 1)]
        yield order[i], jc - i + 1, pre[jc + 1] - pre[i], full_cnt


def _window_mask(m: int, n2: int, good: int, e: int, t: int) -> int:
    return _mask(k for k in ((e + z * n2) % m for z in range(t)) if (good >> k) & 1)


def _roos_payload(m, npay, N, dN, n2, e, t, M):
    Nidx, Midx = _members(N), _members(M)
    MN = sorted({(u + v) % m for u in Nidx for v in Midx})
    return {"N": dict(npay, set=Nidx, d_N=dN), "M_prime": {"start": e, "stride": n2, "size": t},
            "M": Midx, "MN": MN}


def roos_bound(m: int, L: Iterable[int], caps: RoosCaps | None = None) -> BoundWitness:
    """max |M| + d_N - 1 over N, M with MN inside L and a consecutive M' containing M,
    |M'| <= |M| + d_N - 2."""
    caps = caps or RoosCaps()
    S = _prepare(m, L)
    if m > MAX_M:
        raise SearchCapExceeded(f"m = {m} exceeds {MAX_M}")
    Lm = _mask(S)
    best = None
    best_uncapped = 0
    singleton = len(S) + 1  # no sound bound exceeds |L| + 1
    for npay, N, dN, good in _roos_n_sets(m, Lm, caps.n_source):
        if best is not None and (-best[0][0] >= singleton or bin(good).count("1") + dN - 1 < -best[0][0]):
            if -best[0][0] >= singleton:
                break
            continue
        for n2 in _coprime(m) or [1]:
            for e, t, cnt, full_cnt in _best_windows(m, n2, good, dN - 2, caps.max_m_prime):
                best_uncapped = max(best_uncapped, full_cnt + dN - 1)
                key = (-(cnt + dN - 1), t, e, n2)
                if best is None or key < best[0]:
                    best = (key, (npay, N, dN, n2, e, t, good))
    value = -best[0][0]
    if best_uncapped > value:
        raise SearchCapExceeded(f"|M'| cap {caps.max_m_prime} truncates the Roos search "
                                f"({best_uncapped} > {value})")
    npay, N, dN, n2, e, t, good = best[1]
    M = _window_mask(m, n2, good, e, t)
    return BoundWitness("ROOS", value, _roos_payload(m, npay, N, dN, n2, e, t, M))


# -- shift bound ---------------------------------------------------------------------------

_INDEP_CACHE: dict[tuple[int, int], tuple[int, bool, tuple]] = {}
_INDEP_CACHE_LIMIT = 4096


def max_independent(m: int, S: int, target: int | None = None,
                    max_states: int = 2_000_000) -> tuple[int, list[dict]]:
    """Size of the largest set independent with respect to S (a bit mask of indices)
    within Z_m, capped at ``target``, and a construction trace for it.

    Rules: the empty set is independent; if A is contained in S then A + {b} is
    independent for b outside S; rotations of independent sets are independent.
    Equivalently A = {a_1, ..., a_k} is independent when for every i some shift t
    puts {a_1, ..., a_{i-1}} inside S and a_i outside S. The search runs over such
    prefixes P (up to rotation) with T(P) = shifts putting P inside S and
    Z(P) = intersection of S - t over t in T(P): the next element may be anything
    outside Z(P), and T shrinks while Z grows as P grows, which gives the bound
    |P| + 1 + max_t |(S - t) minus Z(P)| used for pruning.
    """
    full = (1 << m) - 1
    if S & ~full or S == full:
        raise ValueError("S must be a proper subset of Z_m")
    cap = bin(S).count("1") + 1
    if target is None or target > cap:
        target = cap
    shifted = [_rot(S, -t, m, full) for t in range(m)]  # S - t

    def closure(T: int) -> int:
        Z = full
        for t in _members(T):
            Z &= shifted[t]
        return Z

    best = [1, [0]]  # any singleton is independent
    seen: set[int] = set()
    path: list[int] = []

    def dfs(P: int, T: int, size: int) -> bool:
        # P is a prefix inside S - t for every t in T (T nonempty); one more element fits
        Z = closure(T)
        free = full & ~Z
        if size + 1 > best[0]:
            best[0] = size + 1
            best[1] = [0] + path + [_members(free)[0]]
            if best[0] >= target:
                return True
        bound = size + 1 + max(bin(shifted[t] & free).count("1") for t in _members(T))
        if bound <= best[0]:
            return False
        for a in _members(free):
            T2 = T & shifted[a]
            if not T2:
                continue
            P2 = P | (1 << a)
            key = _canon(P2, m, full)
            if key in seen:
                continue
            seen.add(key)
            if len(seen) > max_states:
                raise SearchCapExceeded(f"independent-set search exceeded {max_states} states")
            path.append(a)
            done = dfs(P2, T2, size + 1)
            path.pop()
            if done:
                return True
        return False

    # by rotation symmetry the first element is 0; {0} is a valid prefix under the shifts in S
    if S:
        dfs(1, S, 1)
    value = min(best[0], target)
    return value, _trace_from_order(m, S, best[1][:value])


def _trace_from_order(m: int, S: int, order: Sequence[int]) -> list[dict]:
    """Turn an ordering a_1..a_k into rotate/add steps replayable by :func:`replay_independent`."""
    full = (1 << m) - 1
    trace = []
    prefix = 0
    off = 0
    for a in order:
        t = next(t for t in range(m)
                 if not _rot(prefix, t, m, full) & ~S and not (S >> ((a + t) % m)) & 1)
        trace.append({"rotate": (t - off) % m, "add": (a + t) % m})
        prefix |= 1 << a
        off = t
    return trace


def replay_independent(m: int, S: Iterable[int], trace: Sequence[dict]) -> list[int]:
    """Rebuild an independent set from its trace, checking every rule application."""
    full = (1 << m) - 1
    Sm = _mask(S)
    A = 0
    for step in trace:
        A = _rot(A, step["rotate"], m, full)
        if A & ~Sm:
            raise ValueError("rotated set is not inside S before adding a new element")
        b = step["add"]
        if (Sm >> b) & 1:
            raise ValueError(f"added element {b} lies in S")
        A |= 1 << b
    return _members(A)


def _maxindep_cached(m: int, S: int, target: int, max_states: int) -> tuple[int, list[dict]]:
    hit = _INDEP_CACHE.get((m, S))
    if hit is not None:
        value, exact, trace = hit
        if exact or value >= target:
            return min(value, target), list(trace)[:target]
    value, trace = max_independent(m, S, target, max_states)
    if len(_INDEP_CACHE) >= _INDEP_CACHE_LIMIT:
        _INDEP_CACHE.clear()
    _INDEP_CACHE[(m, S)] = (value, value < target, tuple(trace))
    return value, trace


@dataclass(frozen=True)
class ShiftCaps:
    max_free_orbits: int = 16
    max_states: int = 2_000_000  # distinct prefixes per independent-set search


def _orbits_from_perm(m: int, frob: Sequence[int]) -> list[frozenset[int]]:
    seen, out = set(), []
    for k in range(m):
        if k in seen:
            continue
        orb, j = set(), k
        while j not in orb:
            orb.add(j)
            j = frob[j]
        seen |= orb
        out.append(frozenset(orb))
    return out


def shift_bound(m: int, L: Iterable[int], frob: Sequence[int], caps: ShiftCaps | None = None,
                weight_hint: Callable[[frozenset[int]], int] | None = None) -> BoundWitness:
    """min over q-closed S with L <= S < Omega of the largest independent set w.r.t. S.

    A nonzero codeword vanishes on exactly such an S, and its weight is at least
    the size of any set independent with respect to S. ``frob`` is the index map
    of x -> x^q on the roots. ``weight_hint(S)``, when given, must return the
    weight of some polynomial whose zero set in Omega is exactly S; it caps the
    search for S without changing the result (see :func:`generator_weight_hint`).
    """
    caps = caps or ShiftCaps()
    S0 = _prepare(m, L)
    if m > MAX_M:
        raise SearchCapExceeded(f"m = {m} exceeds {MAX_M}")
    orbits = _orbits_from_perm(m, frob)
    if any(o & S0 and not o <= S0 for o in orbits):
        raise ValueError("defining set is not closed under x -> x^q")
    free = [o for o in orbits if not o <= S0]
    if len(free) > caps.max_free_orbits:
        raise SearchCapExceeded(f"{len(free)} free orbits exceed the cap {caps.max_free_orbits}")
    base = _mask(S0)
    candidates = []
    for r in range(len(free)):
        for combo in itertools.combinations(free, r):
            candidates.append(base | _mask(set().union(*combo)) if combo else base)
    candidates.sort(key=lambda s: (bin(s).count("1"), s))
    best_value, best_S, best_trace = m + 1, None, []
    for S in candidates:
        target = best_value
        if weight_hint is not None:
            target = min(target, weight_hint(frozenset(_members(S))))
        v, trace = _maxindep_cached(m, S, target, caps.max_states)
        if v < best_value:
            best_value, best_S, best_trace = v, S, trace
    A = replay_independent(m, _members(best_S), best_trace)
    return BoundWitness("SHIFT", best_value, {"S": _members(best_S), "A": A, "trace": best_trace,
                                              "supersets_checked": len(candidates)})


def generator_weight_hint(rs) -> Callable[[frozenset[int]], int]:
    """Weight of prod_{k in S} (x - alpha xi^k), a polynomial vanishing on Omega exactly at S."""
    from .oracle import constacyclic_from_defining_set

    def hint(S: frozenset[int]) -> int:
        return sum(1 for c in constacyclic_from_defining_set(rs, S).coeffs if c)
    return hint


# -- spectral bounds -------------------------------------------------------------------------

def _check_spectral(code: QtCode) -> frozenset[int]:
    bar = frozenset(omega_bar(code))
    if not bar:
        raise ValueError("the code has no eigenvalues (full space)")
    return bar


def constacyclic_bound(rs, L: Iterable[int], source: str, stride_policy: str = "unit",
                       roos_caps: RoosCaps | None = None, config: OracleConfig | None = None) -> BoundWitness:
    """Lower bound on every constacyclic code whose defining set contains L.

    When L covers all of Omega that code is {0} and the bound is infinite.
    """
    m = rs.m
    if len(rs.closure(L)) == m:
        return BoundWitness(source.upper(), INFINITY, {"defining_set": list(range(m))})
    if source == "bch":
        return bch_bound(m, L, stride_policy)
    if source == "ht":
        return ht_bound(m, L)
    if source == "roos":
        return roos_bound(m, L, roos_caps)
    if source == "shift":
        return shift_bound(m, rs.closure(L), rs.frobenius_map(), weight_hint=generator_weight_hint(rs))
    if source == "oracle":
        Lc = sorted(rs.closure(L))
        return BoundWitness("ORACLE", constacyclic_distance(rs, Lc, config), {"defining_set": Lc})
    raise ValueError(f"unknown d_P source {source!r}")


def spectral_bound(code: QtCode, P: Iterable[int] | None = None, d_source: str = "oracle",
                   stride_policy: str = "unit", roos_caps: RoosCaps | None = None,
                   config: OracleConfig | None = None) -> BoundWitness:
    """d(C) >= min(d_P, d(eigencode of the common eigenspace of P)).

    P is replaced by its closure under x -> x^q (still inside the eigenvalue set)
    for both terms.
    """
    bar = _check_spectral(code)
    P = bar if P is None else frozenset(P)
    if not P:
        raise ValueError("P must be nonempty")
    if not P <= bar:
        raise ValueError(f"{sorted(P - bar)} are not eigenvalue indices")
    rs = code.roots
    Pc = rs.closure(P)
    dP = constacyclic_bound(rs, Pc, d_source, stride_policy, roos_caps, config)
    ec = eigencode(code, common_eigenspace(code, Pc), config)
    value = min(dP.value, ec.distance)
    return BoundWitness("SPECTRAL", value, {
        "P": sorted(P), "P_closure": sorted(Pc), "d_P": _json_value(dP.value), "d_P_source": d_source,
        "d_P_witness": dP.to_dict(), "eigencode_dim": ec.dimension,
        "eigencode_distance": _json_value(ec.distance)})


def spectral_roos(code: QtCode, caps: RoosCaps | None = None,
                  config: OracleConfig | None = None) -> BoundWitness:
    """max over Roos configurations with MN inside the eigenvalue set of
    min(|M| + d_N - 1, d(eigencode of MN))."""
    caps = caps or RoosCaps()
    bar = _check_spectral(code)
    m = code.m
    if m > MAX_M:
        raise SearchCapExceeded(f"m = {m} exceeds {MAX_M}")
    Lm = _mask(bar)
    ec_cache: dict[int, float] = {}
    best = None
    best_uncapped = 0
    for cand in _roos_candidates(m, Lm, caps):
        npay, N, dN, n2, e, t, M, ok = cand
        roos_value = bin(M).count("1") + dN - 1
        if best is not None and roos_value < -best[0][0]:
            continue
        MN = 0
        for u in _members(N):
            MN |= _rot(M, u, m, (1 << m) - 1)
        if MN not in ec_cache:
            ec_cache[MN] = eigencode(code, common_eigenspace(code, _members(MN)), config).distance
        value = min(roos_value, ec_cache[MN])
        if not ok:
            best_uncapped = max(best_uncapped, value)
            continue
        key = (-value, t, e, n2)
        if best is None or key < best[0]:
            best = (key, cand[:-1], ec_cache[MN])
    value = -best[0][0]
    if best_uncapped > value:
        raise SearchCapExceeded(f"|M'| cap {caps.max_m_prime} truncates the spectral Roos search")
    payload = _roos_payload(m, *best[1])
    payload["roos_value"] = len(payload["M"]) + payload["N"]["d_N"] - 1
    payload["eigencode_distance"] = _json_value(best[2])
    return BoundWitness("SPECTRAL_ROOS", value, payload)


def spectral_shift(code: QtCode, caps: ShiftCaps | None = None, max_subsets: int = 4096,
                   config: OracleConfig | None = None) -> BoundWitness:
    """max over nonempty q-closed T inside the eigenvalue set of min(shift bound of T, d(eigencode of T))."""
    bar = _check_spectral(code)
    rs = code.roots
    frob = rs.frobenius_map()
    orbits = [o for o in _orbits_from_perm(code.m, frob) if o <= bar]
    hint = generator_weight_hint(rs)
    if 2 ** len(orbits) - 1 > max_subsets:
        raise SearchCapExceeded(f"{2 ** len(orbits) - 1} eigenvalue subsets exceed the cap {max_subsets}")
    subsets = []
    for r in range(len(orbits), 0, -1):
        for combo in itertools.combinations(orbits, r):
            subsets.append(frozenset().union(*combo))
    best = None
    for T in subsets:
        d_ec = eigencode(code, common_eigenspace(code, T), config).distance
        if best is not None and d_ec <= best[0]:
            continue
        if len(T) == code.m:
            sw = BoundWitness("SHIFT", INFINITY, {"S": sorted(T)})
        else:
            sw = shift_bound(code.m, T, frob, caps, hint)
        value = min(sw.value, d_ec)
        if best is None or value > best[0]:
            best = (value, T, sw, d_ec)
    value, T, sw, d_ec = best
    return BoundWitness("SPECTRAL_SHIFT", value, {
        "T": sorted(T), "shift": sw.to_dict(), "eigencode_distance": _json_value(d_ec)})


# -- witness replay ------------------------------------------------------------------------

def replay(w: BoundWitness | dict, m: int, L: Iterable[int], frob: Sequence[int] | None = None,
           code: QtCode | None = None) -> float:
    """Recompute a bound value from its witness, checking every hypothesis against L."""
    d = w.to_dict() if isinstance(w, BoundWitness) else w
    method, p = d["method"], d["payload"]
    S = frozenset(int(k) % m for k in L)
    if method == "BCH":
        if math.gcd(p["n"], m) != 1:
            raise ValueError("stride not coprime to m")
        idx = ConsecutiveSet(m, p["e"], p["n"], p["delta"]).indices
        if not set(idx) <= S:
            raise ValueError("consecutive set not inside L")
        return p["delta"]
    if method == "HT":
        if math.gcd(p["n1"], m) != 1 or math.gcd(p["n2"], m) >= p["delta"]:
            raise ValueError("HT stride conditions violated")
        D = {(p["e"] + z * p["n1"] + y * p["n2"]) % m for z in range(p["delta"] - 1) for y in range(p["s"] + 1)}
        if not D <= S:
            raise ValueError("HT set not inside L")
        return p["delta"] + p["s"]
    if method in ("ROOS", "SPECTRAL_ROOS"):
        return _replay_roos(m, S, p, code)
    if method == "SHIFT":
        if frob is None:
            raise ValueError("shift witness replay needs the Frobenius index map")
        Sw = frozenset(p["S"])
        if not S <= Sw or len(Sw) == m or any(frob[k] not in Sw for k in Sw):
            raise ValueError("S is not a proper q-closed superset of L")
        return len(replay_independent(m, Sw, p["trace"]))
    raise ValueError(f"cannot replay method {method!r}")


def _replay_roos(m: int, S: frozenset[int], p: dict, code: QtCode | None) -> float:
    N, Mp, M = p["N"], p["M_prime"], set(p["M"])
    if N["kind"] == "consecutive":
        Nset = {(N["start"] + z * N["stride"]) % m for z in range(N["size"])}
        dN = N["size"] + 1
        if math.gcd(N["stride"], m) != 1:
            raise ValueError("N stride not coprime to m")
    else:
        Nset = {(z * N["n1"] + y * N["n2"]) % m for z in range(N["delta"] - 1) for y in range(N["s"] + 1)}
        dN = N["delta"] + N["s"]
        if math.gcd(N["n1"], m) != 1 or math.gcd(N["n2"], m) >= N["delta"]:
            raise ValueError("HT conditions on N violated")
    if Nset != set(N["set"]):
        raise ValueError("N does not match its parameters")
    if math.gcd(Mp["stride"], m) != 1:
        raise ValueError("M' stride not coprime to m")
    Mprime = {(Mp["start"] + z * Mp["stride"]) % m for z in range(Mp["size"])}
    if len(Mprime) != Mp["size"] or not M or not M <= Mprime:
        raise ValueError("M is not inside the consecutive set M'")
    if len(Mprime) > len(M) + dN - 2:
        raise ValueError("|M'| > |M| + d_N - 2")
    MN = {(u + v) % m for u in Nset for v in M}
    if not MN <= S:
        raise ValueError("MN not inside the defining set")
    value = len(M) + dN - 1
    if "eigencode_distance" in p:
        if code is None:
            raise ValueError("spectral Roos replay needs the code")
        value = min(value, eigencode(code, common_eigenspace(code, MN)).distance)
    return value
