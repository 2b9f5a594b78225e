from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from qtspec.field_arith import field_of_order, make_field, root_system
from qtspec.poly_algebra import (Poly, PolyMatrix, determinant, mat_vec, null_space, poly_gcd, rank,
                                 reduce_generating_set, reduced_form_violations, root_multiplicity, rref)

F2, F3, F4 = field_of_order(2), field_of_order(3), field_of_order(4)


def polys(F, max_deg=8):
    return st.lists(st.integers(0, F.order - 1), max_size=max_deg + 1).map(lambda c: Poly(F, c))


def test_zero_poly_has_empty_coefficients():
    z = Poly(F3, [0, 0, 0])
    assert z.coeffs == () or list(z.coeffs) == []
    assert z.degree == -1 and z.is_zero()


def test_geometric_division():
    q, r = divmod(Poly.binomial(F2, 23, 1), Poly(F2, [1, 1]))
    assert r.is_zero()
    assert q == Poly(F2, [1] * 23)


@pytest.mark.parametrize("q,m,lam", [(2, 7, 1), (3, 20, 2), (4, 5, 3), (3, 13, 1)])
def test_binomial_is_squarefree(q, m, lam):
    F = field_of_order(q)
    f = Poly.binomial(F, m, lam)
    assert poly_gcd(f, f.derivative()) == Poly.const(F, 1)


def test_eval_at_26th_root():
    rs = root_system(3, 26, 1)
    f = Poly.binomial(F3, 26, 1)
    eta13 = rs.ext.pow(rs.xi, 13)
    assert f.at(eta13, rs.ext) == 0


@pytest.mark.parametrize("F", [F2, F3, F4])
@given(data=st.data())
def test_division_identity(F, data):
    a = data.draw(polys(F))
    b = data.draw(polys(F, 5))
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            divmod(a, b)
        return
    t, r = divmod(a, b)
    assert t * b + r == a
    assert r.degree < b.degree


@given(a=polys(F3), b=polys(F3))
def test_gcd_divides_both(a, b):
    if a.is_zero() and b.is_zero():
        return
    g = poly_gcd(a, b)
    assert g.lead == 1
    assert (a % g).is_zero() and (b % g).is_zero()


def test_root_multiplicity():
    rs = root_system(2, 23, 1)
    E = rs.ext
    f = Poly.binomial(F2, 23, 1).embed(E)
    for w in rs.omega:
        assert root_multiplicity(f, w) == 1
    beta, gamma = rs.omega[1], rs.omega[5]
    lin = lambda r: Poly(E, [E.neg(r), 1])
    g = lin(beta) * lin(beta) * lin(beta) * lin(gamma)
    assert root_multiplicity(g, beta) == 3
    assert root_multiplicity(g, gamma) == 1
    with pytest.raises(ValueError):
        root_multiplicity(Poly(E), beta)


def test_null_space_trivial_cases():
    assert null_space(F3, [[0, 0], [0, 0]]) == [[1, 0], [0, 1]]
    assert null_space(F3, [[1, 0], [0, 1]]) == []
    assert null_space(F3, [], ncols=3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


@pytest.mark.parametrize("F", [F2, F3, F4])
@given(data=st.data())
def test_rank_nullity(F, data):
    rows = data.draw(st.integers(1, 5))
    cols = data.draw(st.integers(1, 6))
    M = [[data.draw(st.integers(0, F.order - 1)) for _ in range(cols)] for _ in range(rows)]
    ns = null_space(F, M)
    assert rank(F, M) + len(ns) == cols
    for v in ns:
        assert all(x == 0 for x in mat_vec(F, M, v))
    R, piv = rref(F, M)
    assert len(piv) == rank(F, M)


def test_reduction_of_repeated_generator():
    # (g, g) with g = x + 1, m = 3 over GF(2), reduced by hand:
    # row (1+x, 1+x); the second pivot is x^3 + 1 since (x^3+1)e_0 is absorbed.
    g = Poly(F2, [1, 1])
    G = reduce_generating_set(F2, 3, 1, 2, [[g, g]])
    assert G[0, 0] == g and G[0, 1] == g
    assert G[1, 0].is_zero() and G[1, 1] == Poly.binomial(F2, 3, 1)
    assert determinant(G) == g * Poly.binomial(F2, 3, 1)


def test_empty_generators_give_zero_code():
    G = reduce_generating_set(F3, 4, 2, 3, [])
    mod = Poly.binomial(F3, 4, 2)
    assert G.diagonal() == [mod] * 3
    assert determinant(G) == mod * mod * mod


def test_identity_generators_give_full_code():
    one, zero = Poly.const(F2, 1), Poly(F2)
    G = reduce_generating_set(F2, 7, 1, 2, [[one, zero], [zero, one]])
    assert G.diagonal() == [one, one]
    assert determinant(G) == one


def test_literal_column_condition_is_not_attainable():
    # the module spanned by (1, x) has g_11 = x^m - lam while g_01 = x stays nonzero
    G = reduce_generating_set(F2, 5, 1, 2, [[Poly.const(F2, 1), Poly.x(F2)]])
    assert G[1, 1] == Poly.binomial(F2, 5, 1)
    assert G[0, 1] == Poly.x(F2)
    assert reduced_form_violations(G, 5, 1) == []


def _random_generators(F, m, ell, rng, r):
    return [[Poly(F, [rng.randrange(F.order) for _ in range(m)]) for _ in range(ell)] for _ in range(r)]


@pytest.mark.parametrize("seed", range(12))
def test_reduction_invariants(seed):
    rng = random.Random(seed)
    F = rng.choice([F2, F3, F4])
    m = rng.choice([k for k in range(2, 12) if k % F.p])
    lam = rng.randrange(1, F.order)
    ell = rng.randint(1, 3)
    gens = _random_generators(F, m, ell, rng, rng.randint(1, ell + 1))
    G = reduce_generating_set(F, m, lam, ell, gens)
    assert reduced_form_violations(G, m, lam) == []
    # idempotent
    assert reduce_generating_set(F, m, lam, ell, G.rows) == G
    # row space: the determinant paths agree and reduction of G plus the inputs changes nothing
    assert determinant(G, "bareiss") == determinant(G, "triangular")
    assert reduce_generating_set(F, m, lam, ell, list(G.rows) + gens) == G


def test_bareiss_on_full_matrix():
    x = Poly.x(F3)
    one = Poly.const(F3, 1)
    M = PolyMatrix(F3, [[x, one], [one, x]])
    assert determinant(M) == x * x - one
    with pytest.raises(ValueError):
        determinant(PolyMatrix(F3, [[x, one]]))
