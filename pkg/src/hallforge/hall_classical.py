"""Twisted extended Ringel-Hall algebra over a catalog.

Monomials are keys ``(M, alpha)`` denoting u_M K_alpha.  The product sums
over middle terms L using |Ext^1(M,N)_L| / |Hom(M,N)|, which by the
Riedtmann-Peng formula equals g^L_{M,N} a_M a_N / a_L.
"""

from __future__ import annotations

from fractions import Fraction

from .catalog import Catalog
from .coeff import Coeff, v_pow
from .element import LinComb, bilinear
from .errors import InternalError
from .quiver import euler_form, symmetric_form, vadd
from .rep import ZERO


def rh_key(m, alpha) -> tuple:
    return (m, tuple(alpha))


def rh_monomial(cat: Catalog, m=ZERO, alpha=None, coeff=1) -> LinComb:
    alpha = cat.quiver.zero() if alpha is None else tuple(alpha)
    cat.require(m)
    return LinComb.monomial(cat.p, rh_key(m, alpha), coeff)


def rh_unit(cat: Catalog) -> LinComb:
    return rh_monomial(cat)


def hall_g(cat: Catalog, L, M, N) -> int:
    return cat.hall(L, M, N)


def ext_middle_count(cat: Catalog, M, N, L) -> int:
    """|Ext^1(M,N)_L| = g^L_{M,N} |Hom(M,N)| a_M a_N / a_L."""
    g = cat.hall(L, M, N)
    if not g:
        return 0
    num = g * cat.p ** cat.hom[(M, N)] * cat.aut[M] * cat.aut[N]
    val, rem = divmod(num, cat.aut[L])
    if rem:
        raise InternalError(f"|Ext(M,N)_L| not integral for M={M}, N={N}, L={L}")
    return val


def structure_constant(cat: Catalog, M, N, L) -> Fraction:
    """|Ext^1(M,N)_L| / |Hom(M,N)| without the twist."""
    g = cat.hall(L, M, N)
    if not g:
        return Fraction(0)
    return Fraction(g * cat.aut[M] * cat.aut[N], cat.aut[L])


def _check_product_fits(cat: Catalog, M, N):
    cat.require_dim(vadd(cat.dim(M), cat.dim(N)))


def _basis_product(cat: Catalog, kx, ky) -> LinComb:
    (M, alpha), (N, beta) = kx, ky
    q = cat.quiver
    _check_product_fits(cat, M, N)
    e = symmetric_form(q, alpha, cat.dim(N)) + cat.euler(M, N)
    twist = v_pow(e, cat.p)
    out = LinComb(cat.p)
    ab = vadd(alpha, beta)
    for L, g in cat.extensions(M, N).items():
        out.add_term((L, ab), twist * Fraction(g * cat.aut[M] * cat.aut[N], cat.aut[L]))
    return out


def rh_product(cat: Catalog, x: LinComb, y: LinComb) -> LinComb:
    return bilinear(lambda a, b: _basis_product(cat, a, b), x, y)


def comult(cat: Catalog, L, alpha=None) -> list:
    """Delta(u_L K_alpha) as [((M, alpha+N), (N, alpha), coeff)], sorted.

    Every sub-object of a catalog class is again in the catalog, so the
    sum is finite; the assertion below is the guard for that.
    """
    alpha = cat.quiver.zero() if alpha is None else tuple(alpha)
    out = []
    for (M, N), g in sorted(cat.hall_pairs(L).items()):
        if M not in cat or N not in cat:
            raise InternalError("comultiplication left the catalog")
        c = v_pow(cat.euler(M, N), cat.p) * g
        out.append(((M, vadd(alpha, cat.dim(N))), (N, alpha), c))
    return out


def comult_element(cat: Catalog, x: LinComb) -> LinComb:
    """Delta as a linear combination over pairs of keys."""
    out = LinComb(cat.p)
    for (L, alpha), c in x.terms.items():
        for left, right, d in comult(cat, L, alpha):
            out.add_term((left, right), c * d)
    return out


def counit(key) -> int:
    m, _ = key
    return 1 if not m else 0


def pairing_basis(cat: Catalog, kx, ky) -> Coeff:
    (M, alpha), (N, beta) = kx, ky
    if M != N:
        return Coeff(0, 0, cat.p)
    return v_pow(symmetric_form(cat.quiver, alpha, beta), cat.p) * cat.aut[M]


def pairing(cat: Catalog, x: LinComb, y: LinComb) -> Coeff:
    out = Coeff(0, 0, cat.p)
    for kx, cx in x.terms.items():
        for ky, cy in y.terms.items():
            out = out + cx * cy * pairing_basis(cat, kx, ky)
    return out


def mu_to_u(cat: Catalog, x: LinComb) -> LinComb:
    """Rewrite mu_M = u_M / a_M into u-generators."""
    return LinComb(cat.p, [(k, c / cat.aut[k[0]]) for k, c in x.terms.items()])


def u_to_mu(cat: Catalog, x: LinComb) -> LinComb:
    return LinComb(cat.p, [(k, c * cat.aut[k[0]]) for k, c in x.terms.items()])


def green_sides(cat: Catalog, M, N, M2, N2) -> tuple[Fraction, Fraction]:
    """Both sides of Green's formula for (M, N, M', N') as rationals."""
    cat.require(M, N, M2, N2)
    q = cat.p
    a = cat.aut
    lhs = Fraction(0)
    dl = vadd(cat.dim(M), cat.dim(N))
    if dl == vadd(cat.dim(M2), cat.dim(N2)):
        cat.require_dim(dl)
        for L in cat.classes_with_dim(dl):
            g1 = cat.hall(L, M, N)
            if g1:
                g2 = cat.hall(L, M2, N2)
                if g2:
                    lhs += Fraction(g1 * g2, a[L])
        lhs *= a[M] * a[N] * a[M2] * a[N2]
    rhs = Fraction(0)
    pm = cat.hall_pairs(M)
    pn = cat.hall_pairs(N)
    for (A, A2), gm in pm.items():
        for (B, B2), gn in pn.items():
            g3 = cat.hall(M2, A, B) if vadd(cat.dim(A), cat.dim(B)) == cat.dim(M2) else 0
            if not g3:
                continue
            g4 = cat.hall(N2, A2, B2) if vadd(cat.dim(A2), cat.dim(B2)) == cat.dim(N2) else 0
            if not g4:
                continue
            e = euler_form(cat.quiver, cat.dim(A), cat.dim(B2))
            rhs += Fraction(q) ** (-e) * gm * gn * g3 * g4 * a[A] * a[A2] * a[B] * a[B2]
    return lhs, rhs


def green_check(cat: Catalog, M, N, M2, N2) -> tuple[bool, Coeff, Coeff]:
    lhs, rhs = green_sides(cat, M, N, M2, N2)
    return lhs == rhs, Coeff(lhs, 0, cat.p), Coeff(rhs, 0, cat.p)


def rp_sum(cat: Catalog, M, N) -> tuple[int, int]:
    """(sum_L |Ext^1(M,N)_L|, q^ext1(M,N))."""
    total = sum(ext_middle_count(cat, M, N, L) for L in cat.extensions(M, N))
    return total, cat.p ** cat.ext[(M, N)]
