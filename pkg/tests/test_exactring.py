from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from zxlat.exactring import (
    GF, QQ, ZZ, DomainMatrix, DomainPoly, PolyRing, QuotientField, factor_over_Q, hnf,
    hnf_solve, kernel, prime_factors, zdivexact, zformat, zmul, zparse, zsub, ztrim,
)

zpolys = st.lists(st.integers(-9, 9), max_size=5).map(ztrim)


def test_parse_and_format():
    assert zparse("2*x^2-1") == (-1, 0, 2)
    assert zparse("-x + 3") == (3, -1)
    assert zparse("x") == (0, 1)
    assert zparse("0") == ()
    assert zformat((-1, 0, 2)) == "2*x^2-1"
    assert zformat(()) == "0"
    with pytest.raises(ValueError):
        zparse("2y")
    with pytest.raises(ValueError):
        zparse("")


@given(zpolys)
def test_format_round_trip(a):
    assert zparse(zformat(a)) == a


@given(zpolys, zpolys)
def test_exact_division(a, b):
    if b:
        assert zdivexact(zmul(a, b), b) == a


def test_inexact_division():
    assert zdivexact((1, 1), (2,)) is None
    assert zdivexact((1,), (1, 1)) is None


def test_integer_hnf_and_kernel():
    A = DomainMatrix.from_rows(ZZ, [[2, 2, 4], [3, 3, 6]])
    H, U = hnf(A)
    for h, u in zip(H.cols, U.cols):
        assert A.apply(u) == h
    K = kernel(A)
    assert len(K) == 2
    for v in K:
        assert A.apply(v) == (0, 0)
    # span comparison against sympy's nullspace over Q
    ns = sympy.Matrix([[2, 2, 4], [3, 3, 6]]).nullspace()
    assert sympy.Matrix.hstack(*[sympy.Matrix(v) for v in K]).rank() == len(ns)


def test_polynomial_kernel_mod_p():
    R = PolyRing(GF(2))
    A = DomainMatrix.from_columns(R, 2, [[(0, 0, 1), ()], [(1, 1), (0, 0, 0, 1)]])
    K = kernel(A)
    assert K == []
    B = DomainMatrix.from_columns(R, 1, [[(0, 1)], [(1,)]])
    (v,) = kernel(B)
    assert B.apply(v) == ((),)


def test_hnf_solve():
    R = PolyRing(QQ)
    A = DomainMatrix.from_columns(R, 2, [[(0, 1), ()], [(2,), (2,)]])
    H, _ = hnf(A)
    assert hnf_solve(H, [(2,), (2,)]) is not None
    B = DomainMatrix.from_columns(ZZ, 1, [[2]])
    H, _ = hnf(B)
    assert hnf_solve(H, [1]) is None
    assert hnf_solve(H, [4]) == (2,)


def test_quotient_field():
    K = QuotientField((1, 0, 2))
    a = K.convert((0, 1))
    assert K.mul(a, K.inv(a)) == K.one
    assert K.mul(a, a) == (Fraction(-1, 2),)
    with pytest.raises(ValueError):
        QuotientField((-1, 0, 1)).inv((1, 1))


def test_factorization():
    cont, facs = factor_over_Q((-2, 0, 2))
    assert cont == 2
    assert facs == [((-1, 1), 1), ((1, 1), 1)]
    _, facs = factor_over_Q((1, 0, 2))
    assert facs == [((1, 0, 2), 1)]
    assert prime_factors(12) == [(2, 2), (3, 1)]
    assert prime_factors(1) == []


@settings(max_examples=60)
@given(zpolys.filter(lambda p: len(p) > 1))
def test_factorization_multiplies_back(f):
    cont, facs = factor_over_Q(f)
    prod = (cont,)
    for g, m in facs:
        for _ in range(m):
            prod = zmul(prod, g)
    assert zsub(prod, f) == ()


def test_domain_poly_arith():
    R = PolyRing(GF(3))
    a = DomainPoly(R.K, (1, 1))
    b = DomainPoly(R.K, (2, 1))
    assert (a * b).coeffs == (2, 0, 1)
    assert (a - a).coeffs == ()
