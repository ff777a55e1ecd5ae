import pytest
from hypothesis import given, strategies as st

from hallforge import field_linalg as fl
from hallforge import rep as R
from hallforge.catalog import get_catalog
from hallforge.errors import ParseError, ResourceLimitError, ValidationError
from hallforge.quiver import parse_quiver
from hallforge.rep import ZERO, IsoClass, parse_isoclass

from oracles import brute_aut, brute_homs, brute_subreps, log_p

A1, A2, A2L = parse_quiver("a1"), parse_quiver("a2:>"), parse_quiver("a2:<")
S1, S2, P = IsoClass.interval(1, 1), IsoClass.interval(2, 2), IsoClass.interval(1, 2)
k = IsoClass.interval(1, 1)
k2 = IsoClass.interval(1, 1, 2)


# -- iso-class literals ------------------------------------------------------

def test_literal_round_trip():
    for text in ["0", "(1-1)x1", "(1-1)x2+(1-2)x1", "(2-3)x1+(1-1)x3"]:
        c = parse_isoclass(text)
        assert parse_isoclass(str(c)) == c
    assert str(ZERO) == "0"


def test_literal_merges_and_sorts():
    assert parse_isoclass("(1-2)x1+(1-1)x1+(1-1)x2") == parse_isoclass("(1-1)x3+(1-2)x1")


@pytest.mark.parametrize("bad", ["(1-)x1", "(2-1)x1", "(1-1)x0", "(1-1)", "1-1x1", "(1-1)x1+", "(0-1)x1"])
def test_literal_rejects(bad):
    with pytest.raises(ParseError):
        parse_isoclass(bad)


def test_literal_vertex_bound():
    with pytest.raises((ParseError, ValidationError)):
        parse_isoclass("(1-3)x1", n=2)


def test_json_round_trip():
    c = parse_isoclass("(1-1)x2+(2-3)x1")
    assert IsoClass.from_json(c.to_json()) == c


# -- realize, hom, ext, aut --------------------------------------------------

def test_realize_examples():
    z = R.realize(ZERO, A2, 2)
    assert z.dim == (0, 0)
    p = R.realize(P, A2, 2)
    assert p.dim == (1, 1) and p.mats == ([[1]],)
    s = R.realize(S1 + S2, A2, 2)
    assert s.dim == (1, 1) and s.mats == ([[0]],)


def test_hom_examples():
    p, s1 = R.realize(P, A2, 2), R.realize(S1, A2, 2)
    assert R.hom_dim(p, s1) == 1
    assert R.hom_dim(s1, p) == 0


def test_ext_examples():
    s1, s2 = R.realize(S1, A2, 2), R.realize(S2, A2, 2)
    assert R.ext1_dim(s1, s2) == 1
    assert R.ext1_dim(s2, s1) == 0


@pytest.mark.parametrize("spec", ["a1", "a2:>", "a2:<", "a3:><", "a4:<>>"])
def test_intervals_are_bricks_without_self_extensions(spec):
    q = parse_quiver(spec)
    for iv in R.intervals(q):
        m = R.realize(IsoClass.interval(iv.lo, iv.hi), q, 3)
        assert R.hom_dim(m, m) == 1
        assert R.ext1_dim(m, m) == 0


def test_aut_examples():
    assert R.aut_count(R.realize(k, A1, 2)) == 1
    assert R.aut_count(R.realize(k2, A1, 2)) == 6
    assert R.aut_count(R.realize(S1 + S2, A2, 2)) == 1


@pytest.mark.parametrize("spec,p", [("a1", 2), ("a1", 3), ("a2:>", 2), ("a2:<", 2), ("a2:>", 3)])
def test_aut_methods_and_brute_oracle(spec, p):
    q = parse_quiver(spec)
    dmax = (2,) if q.n == 1 else (2, 1)
    for c in R.isoclasses_up_to(q, dmax):
        m = R.realize(c, q, p)
        closed = R.aut_count(m, "closed")
        assert R.aut_count(m, "brute") == closed
        if p**sum(x * x for x in m.dim) <= 4096:
            assert brute_aut(m) == closed


@pytest.mark.parametrize("spec,dmax", [("a2:>", (2, 2)), ("a2:<", (1, 2)), ("a3:><", (1, 1, 1))])
def test_hom_dim_against_brute_force(spec, dmax):
    q = parse_quiver(spec)
    cls = R.isoclasses_up_to(q, dmax)
    for a in cls:
        for b in cls:
            m, n = R.realize(a, q, 2), R.realize(b, q, 2)
            if 2 ** sum(x * y for x, y in zip(m.dim, n.dim)) > 512:
                continue
            assert R.hom_dim(m, n) == log_p(len(brute_homs(m, n)), 2)


# -- subreps ----------------------------------------------------------------

def test_subreps_of_projective():
    subs = R.subreps(R.realize(P, A2, 2))
    assert len(subs) == 3
    assert sorted(s.dim for s in subs) == [(0, 0), (0, 1), (1, 1)]


def test_subreps_of_zero():
    assert len(R.subreps(R.zero_rep(A2, 2))) == 1


def test_subreps_of_plane():
    assert len(R.subreps(R.realize(k2, A1, 2))) == 5


@pytest.mark.parametrize("spec,p,dmax", [
    ("a2:>", 2, (2, 2)), ("a2:<", 2, (2, 2)), ("a2:>", 3, (2, 1)), ("a3:><", 2, (1, 2, 1)), ("a3:<<", 2, (1, 1, 2)),
])
def test_subrep_counts_match_closure_oracle(spec, p, dmax):
    q = parse_quiver(spec)
    for c in R.isoclasses_up_to(q, dmax):
        m = R.realize(c, q, p)
        assert len(R.subreps(m)) == len(brute_subreps(m.dim, q.arrows, m.mats, p))


def test_subreps_by_dimension_partition_the_total():
    m = R.realize(parse_isoclass("(1-1)x1+(1-2)x1+(2-2)x1"), A2, 2)
    total = len(R.subreps(m))
    per_dim = sum(len(R.subreps(m, (a, b))) for a in range(3) for b in range(3))
    assert total == per_dim


def test_subreps_respect_limit():
    m = R.realize(IsoClass.interval(1, 1, 4), A1, 3)
    with fl.enumeration_limit(50):
        with pytest.raises(ResourceLimitError):
            R.subreps(m)


# -- classification -----------------------------------------------------------

def test_classify_examples():
    from hallforge.rep import Representation
    assert R.iso_class(Representation(A2, 2, (1, 1), ([[0]],))) == S1 + S2
    assert R.iso_class(Representation(A2, 2, (1, 1), ([[1]],))) == P
    assert R.iso_class(R.zero_rep(A2, 2)) == ZERO


ORIENTED = ["a2:>", "a2:<", "a3:>>", "a3:<<", "a3:><", "a3:<>"]


@pytest.mark.parametrize("spec", ORIENTED)
def test_three_classifiers_agree(spec):
    q = parse_quiver(spec)
    dmax = (2, 2) if q.n == 2 else (2, 2, 1)
    for c in R.isoclasses_up_to(q, dmax):
        m = R.realize(c, q, 2)
        assert R.iso_class_hom(m) == c
        assert R.iso_class_search(m) == c
        if q.is_equioriented():
            assert R.iso_class_ranks(m) == c


def _random_invertible(draw, n, p):
    while True:
        m = [[draw(st.integers(0, p - 1)) for _ in range(n)] for _ in range(n)]
        if fl.is_invertible(m, p):
            return m


def _inverse(m, p):
    n = len(m)
    aug = [row[:] + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    red, _ = fl.rref(aug, p)
    return [row[n:] for row in red]


@st.composite
def conjugated(draw):
    """A realized class transported along random base changes at each vertex."""
    q = parse_quiver(draw(st.sampled_from(ORIENTED)))
    p = draw(st.sampled_from([2, 3]))
    dmax = (2,) * q.n
    c = draw(st.sampled_from(R.isoclasses_up_to(q, dmax)))
    m = R.realize(c, q, p)
    g = [_random_invertible(draw, d, p) if d else [] for d in m.dim]
    mats = []
    for (s, t), a in zip(q.arrows, m.mats):
        if not m.dim[s - 1] or not m.dim[t - 1]:
            mats.append(a)
            continue
        ginv = _inverse(g[s - 1], p)
        mats.append(fl.mat_mul(fl.mat_mul(g[t - 1], a, p), ginv, p))
    return c, R.Representation(q, p, m.dim, tuple(mats))


@given(conjugated())
def test_classification_invariant_under_base_change(case):
    c, m = case
    assert R.iso_class(m) == c
    assert R.iso_class_hom(m) == c


@given(conjugated())
def test_subrep_count_invariant_under_base_change(case):
    c, m = case
    base = R.realize(c, m.quiver, m.p)
    assert len(R.subreps(m)) == len(R.subreps(base))


def test_find_isomorphism_maps_between_realizations():
    q = A2
    a = R.Representation(q, 3, (2, 1), ([[1, 2]],))
    b = R.realize(R.iso_class(a), q, 3)
    f = R.find_isomorphism(b, a)
    assert f is not None and R.is_isomorphism(f, 3)
    assert R.find_isomorphism(R.realize(S1 + S2, q, 3), R.realize(P, q, 3)) is None


# -- catalog sizes --------------------------------------------------------------

def test_catalog_sizes():
    assert [str(c) for c in R.isoclasses_up_to(A1, (2,))] == ["0", "(1-1)x1", "(1-1)x2"]
    assert len(R.isoclasses_up_to(A2, (1, 1))) == 5
    # {(1-1)x a, (2-2)x b, (1-2)x c} with a+c <= 2, b+c <= 2: 9 + 4 + 1
    assert len(R.isoclasses_up_to(A2, (2, 2))) == 14


@pytest.mark.parametrize("spec,dmax", [("a2:>", (2, 2)), ("a3:><", (2, 1, 2)), ("a4:>>>", (1, 2, 2, 1))])
def test_catalog_count_matches_multiset_oracle(spec, dmax):
    import itertools
    q = parse_quiver(spec)
    ivs = R.intervals(q)
    count = 0
    for mult in itertools.product(range(max(dmax) + 1), repeat=len(ivs)):
        d = [0] * q.n
        for iv, m in zip(ivs, mult):
            for i in range(iv.lo, iv.hi + 1):
                d[i - 1] += m
        count += all(x <= y for x, y in zip(d, dmax))
    assert len(R.isoclasses_up_to(q, dmax)) == count == R.count_isoclasses_up_to(q, dmax)


def test_catalog_tables_match_direct_computation():
    cat = get_catalog(A2L, 3, (2, 1))
    for a in cat.classes:
        ma = cat.realize(a)
        assert cat.aut[a] == R.aut_count_bruteforce(ma)
        for b in cat.classes:
            mb = cat.realize(b)
            assert cat.hom[(a, b)] == R.hom_dim(ma, mb)
            assert cat.ext[(a, b)] == R.ext1_dim(ma, mb)
