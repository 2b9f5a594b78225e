from __future__ import annotations

import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qtspec.field_arith import field_of_order
from qtspec.poly_algebra import Poly, rank
from qtspec.qt_module import (CodeFileError, QtCode, big_phi, big_phi_inv, constashift, parse_code, phi,
                              phi_inv, random_corpus, random_qt_code)

F2, F3 = field_of_order(2), field_of_order(3)


def test_phi_units():
    assert phi(F2, [1, 0, 0, 0]) == Poly.const(F2, 1)
    assert phi(F2, [0, 1, 0, 0]) == Poly.x(F2)
    with pytest.raises(ValueError):
        phi(F2, [1, 0], m=3)
    with pytest.raises(ValueError):
        phi_inv(Poly.monomial(F2, 5), 5)


@given(st.lists(st.integers(0, 2), min_size=1, max_size=20))
def test_phi_round_trip(v):
    assert phi_inv(phi(F3, v), len(v)) == v


@given(st.integers(1, 8), st.integers(1, 4), st.data())
def test_big_phi_round_trip(m, ell, data):
    a = np.array(data.draw(st.lists(st.integers(0, 2), min_size=m * ell, max_size=m * ell))).reshape(m, ell)
    assert np.array_equal(big_phi_inv(big_phi(F3, a), m), a)


def test_constashift_cyclic_rotation():
    a = np.arange(6).reshape(3, 2) % 2
    assert np.array_equal(constashift(F2, 1, a), np.roll(a, 1, axis=0))


def test_negacyclic_shift_period():
    m = 5
    a = np.zeros((m, 1), dtype=np.int64)
    a[0, 0] = 1
    b = a
    for _ in range(m):
        b = constashift(F3, 2, b)
    assert np.array_equal(b, (2 * a) % 3)
    for _ in range(m):
        b = constashift(F3, 2, b)
    assert np.array_equal(b, a)


@given(st.integers(2, 9), st.integers(1, 3), st.integers(1, 2), st.data())
def test_constashift_is_multiplication_by_x(m, ell, lam, data):
    a = np.array(data.draw(st.lists(st.integers(0, 2), min_size=m * ell, max_size=m * ell))).reshape(m, ell)
    mod = Poly.binomial(F3, m, lam)
    lhs = big_phi(F3, constashift(F3, lam, a))
    rhs = [(Poly.x(F3) * c) % mod for c in big_phi(F3, a)]
    assert lhs == rhs


def test_hamming_file():
    code = parse_code("q 2\nlambda 1\nm 7\nell 1\ngen 1,1,0,1\n")
    assert code.dimension() == 4 and code.length == 7


def test_file_without_generators_is_zero_code():
    code = parse_code("q 3\nlambda 2\nm 4\nell 2\n")
    assert code.dimension() == 0
    assert code.generator_matrix().shape == (0, 8)


@pytest.mark.parametrize("text,needle", [
    ("q 2\nlambda 1\nm 7\nell 1\ngen 1,x,1\n", "line 5"),
    ("q 2\nlambda 1\nm 6\nell 1\n", "gcd"),
    ("q 3\nlambda 0\nm 4\nell 1\n", "nonzero"),
    ("q 2\nlambda 1\nm 7\n", "ell"),
    ("q 2\nlambda 1\nm 7\nell 2\ngen 1\n", "expected 2"),
    ("q 2\nlambda 1\nm 7\nell 1\nfoo 3\n", "unknown"),
])
def test_file_errors(text, needle):
    with pytest.raises(CodeFileError, match=needle):
        parse_code(text)


def test_extension_field_file():
    # GF(4) coefficients as ':'-joined digits; y + x divides x^3 - 1
    code = parse_code("q 4\nlambda 1\nm 3\nell 1\ngen 0:1,1\n")
    assert code.q == 4 and code.dimension() == 2
    assert parse_code(code.dumps()).gmatrix == code.gmatrix
    # x^3 - y is irreducible over GF(4), so 1 + y x generates the full module
    full = parse_code("q 4\nlambda 0,1\nm 3\nell 1\ngen 1,0:1\n")
    assert full.dimension() == 3


def test_full_and_zero_dimension():
    assert QtCode.full(F2, 7, 1, 3).dimension() == 21
    assert QtCode.zero(F2, 7, 1, 3).dimension() == 0
    G = QtCode.full(F2, 5, 1, 2).generator_matrix()
    assert G.shape == (10, 10) and rank(F2, G.tolist()) == 10


def test_golay_dimension():
    g = Poly(F2, [1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1])  # x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
    code = QtCode.from_generators(F2, 23, 1, 1, [[g]])
    assert code.dimension() == 12


CORPUS = random_corpus(60, seed=7)


@pytest.mark.parametrize("code", CORPUS, ids=lambda c: f"q{c.q}m{c.m}l{c.ell}")
def test_corpus_code_invariants(code):
    rng = random.Random(code.m * 31 + code.ell)
    G = code.generator_matrix()
    assert rank(code.field, G.tolist()) == code.dimension() if len(G) else code.dimension() == 0
    assert code.violations() == []
    assert code.contains(np.zeros((code.m, code.ell), dtype=np.int64))
    for row in G[:3]:
        assert code.contains(row)
    for _ in range(5):
        c = code.random_codeword(rng)
        assert code.contains(c)
        assert code.contains(constashift(code.field, code.lam, c))


def test_zero_code_rejects_nonzero_words():
    code = QtCode.zero(F3, 4, 1, 2)
    w = np.zeros((4, 2), dtype=np.int64)
    w[1, 0] = 1
    assert not code.contains(w)


def test_non_member_detected_by_rank():
    rng = random.Random(3)
    for _ in range(20):
        code = random_qt_code(F2, 7, 1, 2, rng, divisor_bias=True)
        w = np.array([rng.randrange(2) for _ in range(14)])
        G = code.generator_matrix().tolist()
        in_span = rank(F2, G + [w.tolist()]) == rank(F2, G) if G else not w.any()
        assert code.contains(w) == in_span


def test_minimal_index_diagnostic():
    g = Poly(F2, [1, 1])
    same = QtCode.from_generators(F2, 5, 1, 2, [[g, Poly(F2)], [Poly(F2), g]])
    assert not same.is_minimal_index()
    twisted = QtCode.from_generators(F2, 5, 1, 2, [[g, Poly(F2, [0, 1])]])
    assert twisted.is_minimal_index()
