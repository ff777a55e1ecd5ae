import itertools

import pytest
from hypothesis import given, strategies as st

from hallforge import field_linalg as fl
from hallforge.errors import ResourceLimitError, ValidationError

from oracles import all_subspaces, gl_order


# -- rref -----------------------------------------------------------------

def test_rref_identity():
    assert fl.rref([[1, 0], [0, 1]], 2) == ([[1, 0], [0, 1]], 2)


def test_rref_duplicate_rows():
    assert fl.rref([[1, 1], [1, 1]], 2) == ([[1, 1], [0, 0]], 1)


def test_rref_mod3():
    assert fl.rref([[2, 4], [1, 2]], 3) == ([[1, 2], [0, 0]], 1)


primes = st.sampled_from([2, 3, 5])


@st.composite
def matrices(draw, max_rows=4, max_cols=4):
    p = draw(primes)
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    m = [[draw(st.integers(0, p - 1)) for _ in range(c)] for _ in range(r)]
    return m, p


@given(matrices())
def test_rref_idempotent(mp):
    m, p = mp
    once, r = fl.rref(m, p)
    twice, r2 = fl.rref(once, p)
    assert once == twice and r == r2


@given(matrices())
def test_rref_preserves_row_space(mp):
    m, p = mp
    red, _ = fl.rref(m, p)
    cols = len(m[0])
    assert fl.span(m, cols, p) == fl.span(red, cols, p)


# -- nullspace ---------------------------------------------------------------

def test_nullspace_single_relation():
    assert fl.nullspace_basis([[1, 1]], 2) == [[1, 1]]


def test_nullspace_injective():
    assert fl.nullspace_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3) == []


def test_nullspace_zero_map():
    assert len(fl.nullspace_basis([[0, 0]], 2)) == 2


@given(matrices())
def test_nullspace_kills_and_has_right_size(mp):
    m, p = mp
    cols = len(m[0])
    basis = fl.nullspace_basis(m, p)
    for v in basis:
        assert all(x == 0 for x in fl.mat_vec(m, v, p))
    assert len(basis) == cols - fl.rank(m, p)
    assert fl.rank(basis, p) == len(basis) if basis else True


# -- subspace enumeration ----------------------------------------------------

def test_subspaces_of_plane():
    subs = fl.enumerate_subspaces(2, 2)
    assert len(subs) == 5
    assert sorted(s.dim for s in subs) == [0, 1, 1, 1, 2]


def test_subspaces_of_zero_space():
    assert len(fl.enumerate_subspaces(0, 2)) == 1


def test_subspaces_of_3space():
    subs = fl.enumerate_subspaces(3, 2)
    assert len(subs) == 16
    assert [sum(1 for s in subs if s.dim == d) for d in range(4)] == [1, 7, 7, 1]


@pytest.mark.parametrize("n,p", [(1, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_subspaces_match_closure_oracle(n, p):
    mine = {frozenset(_elements(s, p)) for s in fl.enumerate_subspaces(n, p)}
    assert mine == all_subspaces(n, p)


def _elements(sub, p):
    n = sub.ambient_dim
    out = set()
    for cs in itertools.product(range(p), repeat=sub.dim):
        v = [0] * n
        for c, row in zip(cs, sub.basis):
            v = [(a + c * b) % p for a, b in zip(v, row)]
        out.add(tuple(v))
    return out


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("p", [2, 3])
def test_gaussian_binomial_counts_subspaces(n, p):
    for d in range(n + 1):
        count = len(fl.enumerate_subspaces(n, p, d)) if p**n <= 81 else None
        if count is not None:
            assert count == fl.gaussian_binomial(n, d, p)


@given(st.integers(0, 6), st.integers(0, 6), primes)
def test_gaussian_binomial_symmetry_and_pascal(n, d, q):
    if d > n:
        assert fl.gaussian_binomial(n, d, q) == 0
        return
    assert fl.gaussian_binomial(n, d, q) == fl.gaussian_binomial(n, n - d, q)
    if 0 < d < n:
        # q-Pascal rule
        lhs = fl.gaussian_binomial(n, d, q)
        rhs = fl.gaussian_binomial(n - 1, d - 1, q) + q**d * fl.gaussian_binomial(n - 1, d, q)
        assert lhs == rhs


def test_subspaces_within_and_superspaces():
    plane = fl.span([[1, 0, 0], [0, 1, 0]], 3, 2)
    inside = fl.subspaces_within(plane, 2)
    assert len(inside) == 5
    line = fl.span([[1, 0, 0]], 3, 2)
    above = fl.superspaces_of(line, 2)
    # superspaces of a line in F_2^3 correspond to subspaces of F_2^2
    assert len(above) == 5
    assert all(fl.span(list(line.basis) + list(s.basis), 3, 2) == s for s in above)


# -- units ------------------------------------------------------------------

def test_count_units_field():
    assert fl.count_units([[[1]]], 2) == 1


def _all_2x2():
    return [[[int(i == r and j == c) for j in range(2)] for i in range(2)] for r in range(2) for c in range(2)]


def test_count_units_gl2():
    assert fl.count_units(_all_2x2(), 2) == 6 == gl_order(2, 2)
    assert fl.count_units(_all_2x2(), 3) == 48 == gl_order(2, 3)


@pytest.mark.parametrize("n,p", [(1, 5), (2, 5), (3, 2)])
def test_gl_order_matches_oracle(n, p):
    assert fl.PrimeField(p).gl_order(n) == gl_order(n, p)


# -- errors and limits -----------------------------------------------------

@pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, -3])
def test_non_prime_rejected(bad):
    with pytest.raises(ValidationError):
        fl.PrimeField(bad)


def test_enumeration_limit():
    with fl.enumeration_limit(10):
        with pytest.raises(ResourceLimitError):
            fl.enumerate_subspaces(4, 3)
    assert len(fl.enumerate_subspaces(2, 2)) == 5


def test_limit_from_environment(monkeypatch):
    monkeypatch.setenv("HALLFORGE_LIMIT", "7")
    assert fl.default_limit() == 7
