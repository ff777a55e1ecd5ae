"""sl2 from the single-vertex quiver.

Over one vertex every representation is k^n.  The 2-periodic algebra has
E = u_k in degree 0 and F = u_{k[1]} in degree 1, and their commutator
lands in the K-part.  Run with ``python3 demos/01_sl2_from_a1.py``.
"""

# %%
from hallforge import dh2 as D2
from hallforge import expr
from hallforge.catalog import get_catalog
from hallforge.quiver import parse_quiver
from hallforge.rep import IsoClass

a1 = parse_quiver("a1")
k = IsoClass.interval(1, 1)

# %% the two products and their difference
for q in (2, 3, 5):
    cat = get_catalog(a1, q, (2,))
    E = D2.dh2_monomial(cat, m0=k)
    F = D2.dh2_monomial(cat, m1=k)
    ef, fe = D2.dh2_product(cat, E, F), D2.dh2_product(cat, F, E)
    print(f"q={q}")
    print("  EF      =", expr.format_element("dh2", ef))
    print("  FE      =", expr.format_element("dh2", fe))
    print("  [E, F]  =", expr.format_element("dh2", ef - fe))

# %% the same thing after setting K K* = 1
cat = get_catalog(a1, 2, (2,))
E, F = D2.dh2_monomial(cat, m0=k), D2.dh2_monomial(cat, m1=k)
comm = D2.dh2_product(cat, E, F) - D2.dh2_product(cat, F, E)
print("reduced [E, F] =", expr.format_element("dh2red", D2.reduce(comm)))

# %% u_{k + k[1]} rewritten over products u_A u_{B[1]}
tri = D2.to_triangular(cat, D2.dh2_monomial(cat, m0=k, m1=k))
for (alpha, beta, a0, b1), c in tri.items():
    print(f"  {c} * K{alpha} K*{beta} u[{a0}] u[{b1}][1]")
print("delta of k + k[1]:", D2.delta(cat, k, k))
