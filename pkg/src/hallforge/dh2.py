"""The 2-periodic extended derived Hall algebra.

Basis keys are ``(alpha, beta, m0, m1)`` denoting K_alpha K*_beta
u_{m0 + m1[1]}.  The product of two basis keys sums over classes I0, I1
with I0 a sub of B0 and a quotient of A1, I1 a quotient of A0 and a sub
of B1; outside those ranges the H-numbers vanish.
"""

from __future__ import annotations

from fractions import Fraction

from . import hall_classical as HC
from .catalog import Catalog
from .coeff import v_pow
from .element import LinComb, bilinear
from .errors import InternalError
from .hall_derived import h_mixed_dist
from .quiver import euler_form, symmetric_form, vadd, vsub
from .rep import ZERO


def dh2_key(cat: Catalog, alpha=None, beta=None, m0=ZERO, m1=ZERO) -> tuple:
    z = cat.quiver.zero()
    cat.require(m0, m1)
    return (z if alpha is None else tuple(alpha), z if beta is None else tuple(beta), m0, m1)


def dh2_monomial(cat: Catalog, alpha=None, beta=None, m0=ZERO, m1=ZERO, coeff=1) -> LinComb:
    return LinComb.monomial(cat.p, dh2_key(cat, alpha, beta, m0, m1), coeff)


def dh2_unit(cat: Catalog) -> LinComb:
    return dh2_monomial(cat)


def grade(cat: Catalog, key) -> tuple:
    _, _, m0, m1 = key
    return vsub(cat.dim(m0), cat.dim(m1))


def _core(cat: Catalog, A0, A1, B0, B1) -> list:
    """Terms (I0^, I1^, M0, M1, coeff) of u_{A0+A1[1]} u_{B0+B1[1]} without v^{a0}."""
    memo = cat.__dict__.setdefault("_dh2_core", {})
    key = (A0, A1, B0, B1)
    hit = memo.get(key)
    if hit is not None:
        return hit
    p = cat.p
    q = cat.quiver
    i0s = sorted(cat.subs(B0) & cat.quotients(A1))
    i1s = sorted(cat.quotients(A0) & cat.subs(B1))
    w = vadd(vsub(cat.dim(A0), cat.dim(A1)), vsub(cat.dim(B0), cat.dim(B1)))
    acc: dict = {}
    for I0 in i0s:
        d0 = cat.dim(I0)
        for I1 in i1s:
            d1 = cat.dim(I1)
            h0 = h_mixed_dist(cat, A0, I0, I1, B0)
            if not h0:
                continue
            h1 = h_mixed_dist(cat, A1, I1, I0, B1)
            if not h1:
                continue
            twist = v_pow(euler_form(q, vsub(d1, d0), w), p)
            den = cat.aut[I0] * cat.aut[I1]
            for M0, x in h0.items():
                for M1, y in h1.items():
                    k = (d0, d1, M0, M1)
                    c = twist * (x * y / den)
                    acc[k] = acc[k] + c if k in acc else c
    out = [(d0, d1, M0, M1, c) for (d0, d1, M0, M1), c in sorted(acc.items(), key=lambda t: t[0]) if c]
    memo[key] = out
    return out


def _basis_product(cat: Catalog, kx, ky) -> LinComb:
    (a0, a1, A0, A1), (b0, b1, B0, B1) = kx, ky
    q = cat.quiver
    da = vsub(cat.dim(A0), cat.dim(A1))
    e = symmetric_form(q, vsub(b1, b0), da) + cat.euler(A0, B0) + cat.euler(A1, B1)
    lead = v_pow(e, cat.p)
    k0, k1 = vadd(a0, b0), vadd(a1, b1)
    out = LinComb(cat.p)
    for d0, d1, M0, M1, c in _core(cat, A0, A1, B0, B1):
        out.add_term((vadd(k0, d0), vadd(k1, d1), M0, M1), lead * c)
    return out


def dh2_product(cat: Catalog, x: LinComb, y: LinComb) -> LinComb:
    return bilinear(lambda a, b: _basis_product(cat, a, b), x, y)


def dh2_power_product(cat: Catalog, *xs: LinComb) -> LinComb:
    out = dh2_unit(cat)
    for x in xs:
        out = dh2_product(cat, out, x)
    return out


# -- embeddings -------------------------------------------------------------

def embed_plus(cat: Catalog, x: LinComb) -> LinComb:
    """u_M K_alpha -> the product u_{M+0[1]} K_alpha inside the algebra."""
    q = cat.quiver
    out = LinComb(cat.p)
    for (M, alpha), c in x.terms.items():
        e = -symmetric_form(q, alpha, cat.dim(M))
        out.add_term((tuple(alpha), q.zero(), M, ZERO), c * v_pow(e, cat.p))
    return out


def embed_minus(cat: Catalog, x: LinComb) -> LinComb:
    """u_M K_alpha -> the product u_{0+M[1]} K*_alpha inside the algebra."""
    q = cat.quiver
    out = LinComb(cat.p)
    for (M, alpha), c in x.terms.items():
        e = -symmetric_form(q, alpha, cat.dim(M))
        out.add_term((q.zero(), tuple(alpha), ZERO, M), c * v_pow(e, cat.p))
    return out


# -- triangular basis -------------------------------------------------------

def delta(cat: Catalog, A0, B1) -> int:
    """dim Ext^1 of A0 + B1[1] in the root category."""
    return cat.ext[(A0, A0)] + cat.hom[(A0, B1)] + cat.ext[(B1, B1)] + cat.hom[(B1, A0)]


def _triangular_expansion(cat: Catalog, A0, B1) -> LinComb:
    """u_{A0+B1[1]} over triangular monomials; keys (beta_shift, A0', B1')."""
    memo = cat.__dict__.setdefault("_dh2_tri", {})
    hit = memo.get((A0, B1))
    if hit is not None:
        return hit
    z = cat.quiver.zero()
    top = delta(cat, A0, B1)
    out = LinComb.monomial(cat.p, (z, A0, B1))
    prod = _basis_product(cat, (z, z, A0, ZERO), (z, z, ZERO, B1))
    lead = prod.coeff((z, z, A0, B1))
    if lead != 1:
        raise InternalError(f"triangular monomial for {A0}, {B1} has leading coefficient {lead}")
    for (alpha, beta, M0, M1), c in prod.items():
        if (beta, M0, M1) == (z, A0, B1):
            continue
        if alpha != z:
            raise InternalError("unexpected K-part in triangular correction term")
        if not delta(cat, M0, M1) < top:
            raise InternalError(f"delta does not decrease: {A0},{B1} -> {M0},{M1}")
        for (shift, X0, X1), d in _triangular_expansion(cat, M0, M1).items():
            out.add_term((vadd(beta, shift), X0, X1), -c * d)
    memo[(A0, B1)] = out
    return out


def to_triangular(cat: Catalog, x: LinComb) -> LinComb:
    """Coefficients of x on K_alpha K*_beta u_{A0} u_{B1[1]}, keyed (alpha, beta, A0, B1)."""
    out = LinComb(cat.p)
    for (alpha, beta, M0, M1), c in x.terms.items():
        for (shift, A0, B1), d in _triangular_expansion(cat, M0, M1).items():
            out.add_term((alpha, vadd(beta, shift), A0, B1), c * d)
    return out


def from_triangular(cat: Catalog, coeffs: LinComb) -> LinComb:
    z = cat.quiver.zero()
    out = LinComb(cat.p)
    for (alpha, beta, A0, B1), c in coeffs.terms.items():
        for k, d in _basis_product(cat, (alpha, beta, A0, ZERO), (z, z, ZERO, B1)).terms.items():
            out.add_term(k, c * d)
    return out


# -- Drinfeld relation --------------------------------------------------------

def drinfeld_sides(cat: Catalog, X0, alpha, X1, beta) -> tuple[LinComb, LinComb]:
    alpha, beta = tuple(alpha), tuple(beta)
    da = HC.comult(cat, X0, alpha)
    db = HC.comult(cat, X1, beta)
    lhs = LinComb(cat.p)
    rhs = LinComb(cat.p)
    p = cat.p
    for a1, a2, ca in da:
        for b1, b2, cb in db:
            c = ca * cb
            phi = HC.pairing_basis(cat, a2, b1)
            if phi:
                t = dh2_product(cat, embed_plus(cat, LinComb.monomial(p, a1)),
                                embed_minus(cat, LinComb.monomial(p, b2)))
                lhs = lhs + t.scale(c * phi)
            phi = HC.pairing_basis(cat, a1, b2)
            if phi:
                t = dh2_product(cat, embed_minus(cat, LinComb.monomial(p, b1)),
                                embed_plus(cat, LinComb.monomial(p, a2)))
                rhs = rhs + t.scale(c * phi)
    return lhs, rhs


def drinfeld_check(cat: Catalog, X0, alpha, X1, beta) -> tuple[bool, LinComb, LinComb]:
    lhs, rhs = drinfeld_sides(cat, X0, alpha, X1, beta)
    return lhs == rhs, lhs, rhs


# -- reduced algebra --------------------------------------------------------

def reduce(x: LinComb) -> LinComb:
    """Quotient by K_a K*_a - 1: (alpha, beta, m0, m1) -> (alpha - beta, m0, m1)."""
    return x.map_keys(lambda k: (vsub(k[0], k[1]), k[2], k[3]))


def lift_reduced(cat: Catalog, x: LinComb) -> LinComb:
    z = cat.quiver.zero()
    return x.map_keys(lambda k: (k[0], z, k[1], k[2]))


def reduced_product(cat: Catalog, x: LinComb, y: LinComb) -> LinComb:
    return reduce(dh2_product(cat, lift_reduced(cat, x), lift_reduced(cat, y)))


# -- aggregate Ext count --------------------------------------------------------

def prop32_sides(cat: Catalog, A0, A1, B0, B1) -> tuple[Fraction, int]:
    """Middle-term sum of Ext counts against q^{ext+hom+ext+hom}."""
    i0s = sorted(cat.subs(B0) & cat.quotients(A1))
    i1s = sorted(cat.quotients(A0) & cat.subs(B1))
    p = cat.p
    h00 = p ** cat.hom[(A0, B0)]
    h11 = p ** cat.hom[(A1, B1)]
    total = Fraction(0)
    for I0 in i0s:
        for I1 in i1s:
            s0 = sum(h_mixed_dist(cat, A0, I0, I1, B0).values())
            s1 = sum(h_mixed_dist(cat, A1, I1, I0, B1).values())
            total += s0 * h00 * s1 * h11 / (cat.aut[I0] * cat.aut[I1])
    e = cat.ext[(A0, B0)] + cat.hom[(A0, B1)] + cat.ext[(A1, B1)] + cat.hom[(A1, B0)]
    return total, p**e


def prop32_aggregate_check(cat: Catalog, A0, A1, B0, B1) -> bool:
    lhs, rhs = prop32_sides(cat, A0, A1, B0, B1)
    return lhs == rhs


def generator(cat: Catalog, A0=ZERO, A1=ZERO) -> LinComb:
    return dh2_monomial(cat, m0=A0, m1=A1)

