"""The 1-periodic derived Hall algebras and the isomorphism between them.

Both algebras have basis indexed by iso classes of the abelian category.
The u-presentation multiplies through H-numbers of the window
I[1] + A, B + I[-1]; the mu-presentation uses G-numbers built from
classical Hall numbers.  ``phi`` rescales u_M to v^{-<M,M>} a_M mu_M.
"""

from __future__ import annotations

from fractions import Fraction

from .catalog import Catalog
from .coeff import Coeff, v_pow
from .element import LinComb, bilinear
from .hall_derived import h_mixed_dist
from .rep import ZERO


def dh1_monomial(cat: Catalog, m=ZERO, coeff=1) -> LinComb:
    cat.require(m)
    return LinComb.monomial(cat.p, m, coeff)


def dh1_unit(cat: Catalog) -> LinComb:
    return dh1_monomial(cat)


def _dh1_basis(cat: Catalog, A, B) -> LinComb:
    memo = cat.__dict__.setdefault("_dh1", {})
    hit = memo.get((A, B))
    if hit is not None:
        return hit
    out = LinComb(cat.p)
    lead = v_pow(cat.euler(A, B), cat.p)
    for I in sorted(cat.quotients(A) & cat.subs(B)):
        for M, h in h_mixed_dist(cat, A, I, I, B).items():
            out.add_term(M, lead * (h / cat.aut[I]))
    memo[(A, B)] = out
    return out


def dh1_product(cat: Catalog, x: LinComb, y: LinComb) -> LinComb:
    return bilinear(lambda a, b: _dh1_basis(cat, a, b), x, y)


def _h_over_a(cat: Catalog, A, B) -> list:
    """[(I, X, H^X_{I[1]+A, B+I[-1]} / a_I)] over the classes that can contribute."""
    out = []
    for I in sorted(cat.quotients(A) & cat.subs(B)):
        for X, h in h_mixed_dist(cat, A, I, I, B).items():
            out.append((I, X, h / cat.aut[I]))
    return out


def associativity_sums(cat: Catalog, A, B, C) -> tuple[dict, dict]:
    """Both sides of the H-number identity equivalent to associativity of u_A u_B u_C.

    The common factor v^{<A,B>+<A,C>+<B,C>} is stripped; what is left is
    sum q^{-<I1,C>} H^X_{I1[1]+A,B+I1[-1]} H^M_{I2[1]+X,C+I2[-1]} / a_I1 a_I2
    against sum q^{-<A,I2>} H^M_{I1[1]+A,X+I1[-1]} H^X_{I2[1]+B,C+I2[-1]} / a_I1 a_I2,
    as {M: rational}.
    """
    p = Fraction(cat.p)
    lhs: dict = {}
    for I1, X, h1 in _h_over_a(cat, A, B):
        w = p ** -cat.euler(I1, C) * h1
        for _, M, h2 in _h_over_a(cat, X, C):
            lhs[M] = lhs.get(M, 0) + w * h2
    rhs: dict = {}
    for I2, X, h2 in _h_over_a(cat, B, C):
        w = p ** -cat.euler(A, I2) * h2
        for _, M, h1 in _h_over_a(cat, A, X):
            rhs[M] = rhs.get(M, 0) + w * h1
    clean = lambda d: {m: c for m, c in d.items() if c}
    return clean(lhs), clean(rhs)


def G_number(cat: Catalog, A, B, M) -> Coeff:
    """G^M_{A,B} = sum_{L,I,N} v^{<I,N>+<I,I>+<L,I>-<L,N>} (a_L a_I a_N / a_A a_B)
    g^M_{N,L} g^A_{I,N} g^B_{L,I}."""
    cat.require(M)
    return _g_dist(cat, A, B).coeff(M)


def _g_dist(cat: Catalog, A, B) -> LinComb:
    memo = cat.__dict__.setdefault("_dhz1", {})
    hit = memo.get((A, B))
    if hit is not None:
        return hit
    cat.require(A, B)
    a = cat.aut
    out = LinComb(cat.p)
    den = a[A] * a[B]
    # g^A_{I,N}: N sub of A, I its quotient; g^B_{L,I}: I sub of B, L its quotient
    for (I, N), gA in cat.hall_pairs(A).items():
        for (L, I2), gB in cat.hall_pairs(B, cat.dim(I)).items():
            if I2 != I:
                continue
            e = cat.euler(I, N) + cat.euler(I, I) + cat.euler(L, I) - cat.euler(L, N)
            w = v_pow(e, cat.p) * Fraction(a[L] * a[I] * a[N] * gA * gB, den)
            for M, gM in cat.extensions(N, L).items():
                out.add_term(M, w * gM)
    memo[(A, B)] = out
    return out


def dhz1_product(cat: Catalog, x: LinComb, y: LinComb) -> LinComb:
    return bilinear(lambda a, b: _g_dist(cat, a, b), x, y)


def tilde_aut(cat: Catalog, A) -> int:
    cat.require(A)
    return cat.aut[A] * cat.p ** cat.ext[(A, A)]


def phi(cat: Catalog, x: LinComb) -> LinComb:
    """u_M -> v^{-<M,M>} a_M mu_M."""
    out = LinComb(cat.p)
    for M, c in x.terms.items():
        out.add_term(M, c * v_pow(-cat.euler(M, M), cat.p) * cat.aut[M])
    return out


def phi_inverse(cat: Catalog, x: LinComb) -> LinComb:
    out = LinComb(cat.p)
    for M, c in x.terms.items():
        out.add_term(M, c * v_pow(cat.euler(M, M), cat.p) / cat.aut[M])
    return out


def phi_sides(cat: Catalog, A, B) -> tuple[LinComb, LinComb]:
    ua, ub = dh1_monomial(cat, A), dh1_monomial(cat, B)
    lhs = phi(cat, dh1_product(cat, ua, ub))
    rhs = dhz1_product(cat, phi(cat, ua), phi(cat, ub))
    return lhs, rhs


def phi_check(cat: Catalog, A, B) -> bool:
    lhs, rhs = phi_sides(cat, A, B)
    return lhs == rhs

