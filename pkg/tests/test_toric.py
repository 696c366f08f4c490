import itertools
import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from cases import M2, N1, N2, N3, TV1_LATTICE, TV2
from zxlat.coeffgroup import ONE
from zxlat.exactring import zparse, ztrim
from zxlat.lattice import groebner, same_lattice, vec
from zxlat.toric import NEG_INF, implicitize, is_toric_lattice, jacobi_number, order_bound, parametrize

FIXTURES = Path(__file__).parent / "fixtures"


def support(P):
    return [g.support for g in P.generators]


def test_implicitize_m2():
    P = implicitize(M2)
    assert P.n == 4 and all(g.coeff == ONE for g in P.generators)
    assert same_lattice(support(P), TV1_LATTICE, 4)


def test_implicitize_single_binomial():
    P = implicitize(TV2)
    assert same_lattice(support(P), [vec("-x", 1, 0)], 3)


def test_three_matrices_of_one_column_lattice():
    assert all(same_lattice(A, [vec(1, 0), vec(0, 1)], 2) for A in (N1, N2, N3))
    lattices = [groebner(support(implicitize(A)), 3) for A in (N1, N2)]
    assert same_lattice(support(implicitize(N1)), [vec(1, "-2*x", 1)], 3)
    assert same_lattice(support(implicitize(N2)), [vec(1, 0, 1)], 3)
    with pytest.warns(UserWarning):
        P3 = implicitize(N3)
    lattices.append(groebner(support(P3), 3))
    assert same_lattice(support(P3), [vec(1, 0, 0)], 3)
    assert len(set(lattices)) == 3
    assert {L.rank for L in lattices} == {1}


def test_zero_row_is_rejected():
    with pytest.raises(ValueError):
        implicitize([vec(1, 0), vec(2, 0)])
    with pytest.raises(ValueError):
        order_bound([vec(0, 1), vec(0, 0)])


def test_parametrize():
    A = parametrize(TV1_LATTICE, 4)
    assert same_lattice(support(implicitize(A)), TV1_LATTICE, 4)
    assert same_lattice(list(zip(*A)), list(zip(*M2)), 4)
    assert same_lattice(list(zip(*parametrize([vec(1, -1)]))), [vec(1, 1)], 2)
    assert parametrize(groebner([], 2)) == [vec(1, 0), vec(0, 1)]


def test_is_toric_lattice():
    assert is_toric_lattice(TV1_LATTICE)
    assert is_toric_lattice([vec(1, -1)])
    assert not is_toric_lattice([vec(2, 0)])
    assert not is_toric_lattice([vec("x", "x")])
    with pytest.raises(ValueError):
        parametrize([vec(2, 0)])


def test_order_bound_examples():
    assert order_bound(M2) == 2
    assert order_bound([vec(2), vec("x")]) == 1
    assert order_bound([vec(1, -2), vec(3, 0)]) == 0


def test_order_bound_fixture():
    for case in json.loads((FIXTURES / "order_bound.json").read_text()):
        cols = [tuple(zparse(a) for a in c) for c in case["columns"]]
        assert order_bound(cols) == case["order_bound"] == sum(o - lo for o, lo in case["rows"])


def brute_jacobi(M):
    return max(sum(M[i][p[i]] for i in range(len(M))) for p in itertools.permutations(range(len(M))))


def test_jacobi_examples():
    assert jacobi_number([[1, 2], [3, 1]]) == 5
    assert jacobi_number([[NEG_INF, 0], [NEG_INF, 4]]) == NEG_INF
    assert jacobi_number([[2, 2, 2]] * 3) == 6
    assert jacobi_number([]) == 0
    with pytest.raises(ValueError):
        jacobi_number([[1, 2]])


@settings(max_examples=60)
@given(st.integers(1, 5).flatmap(lambda m: st.lists(
    st.lists(st.one_of(st.integers(0, 6), st.just(NEG_INF)), min_size=m, max_size=m), min_size=m, max_size=m)))
def test_jacobi_matches_permutation_oracle(M):
    assert jacobi_number(M) == brute_jacobi(M)


def random_matrix(rng, m, k):
    def entry():
        return ztrim(rng.randint(-2, 2) for _ in range(rng.randint(0, 4)))
    while True:
        cols = [tuple(entry() for _ in range(m)) for _ in range(k)]
        if all(any(c[i] for c in cols) for i in range(m)) and all(any(c) for c in cols):
            return cols


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 2), st.integers(1, 3))
def test_order_bound_is_a_jacobi_number(seed, m, k):
    A = random_matrix(random.Random(seed), m, k)
    bounds = []
    for i in range(m):
        row = [c[i] for c in A]
        hi = max(len(a) - 1 for a in row if a)
        lo = min(next((j for j, x in enumerate(a) if x), 0) for a in row)
        bounds.append(hi - lo)
    # every row of O equal to the per-row bounds gives the same diagonal sum
    assert order_bound(A) == jacobi_number([bounds] * m) == brute_jacobi([bounds] * m)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 2), st.integers(1, 3))
def test_rank_accounting_and_round_trip(seed, m, k):
    A = random_matrix(random.Random(seed), m, k)
    P = implicitize(A)
    L = groebner(support(P), k)
    assert L.rank == k - groebner(A, m).rank
    assert is_toric_lattice(L)
    B = parametrize(L)
    assert same_lattice(support(implicitize(B)), L.columns, k)
