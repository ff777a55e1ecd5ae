"""Two presentations of the 1-periodic derived Hall algebra.

The u-basis multiplies through H-numbers of shifted windows, the mu-basis
through G-numbers built only from classical Hall numbers.  Rescaling
u_M to v^{-<M,M>} a_M mu_M turns one product into the other.
"""

# %%
from hallforge import dh1 as D1
from hallforge import expr
from hallforge.catalog import get_catalog
from hallforge.quiver import parse_quiver
from hallforge.rep import IsoClass

k = IsoClass.interval(1, 1)

# %% squares of the simple in both presentations
for q in (2, 3):
    cat = get_catalog(parse_quiver("a1"), q, (2,))
    u = D1.dh1_monomial(cat, k)
    print(f"q={q}")
    print("  u_k u_k   =", expr.format_element("dh1", D1.dh1_product(cat, u, u)))
    print("  mu_k mu_k =", expr.format_element("dhz1", D1.dhz1_product(cat, u, u)))
    lhs, rhs = D1.phi_sides(cat, k, k)
    print("  Phi(u_k u_k) == Phi(u_k) Phi(u_k):", lhs == rhs)

# %% every pair on A_2 with the other orientation
from hallforge.verify import run_suite
for suite in ("phi", "assoc-dh1", "assoc-dhz1"):
    print(run_suite(suite, parse_quiver("a2:<"), 3, (2, 2)).summary())
