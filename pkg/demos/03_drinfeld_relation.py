"""The commutator relation between the two halves on A_2.

The Hall algebra embeds twice into the 2-periodic algebra, once in degree
0 and once in degree 1.  The Drinfeld relation ties products across the
two copies through the coproduct and the Hopf pairing.
"""

# %%
from hallforge import dh2 as D2
from hallforge import expr
from hallforge import hall_classical as HC
from hallforge.catalog import get_catalog
from hallforge.quiver import parse_quiver
from hallforge.rep import IsoClass

q = parse_quiver("a2:>")
cat = get_catalog(q, 2, (1, 1))
S1, S2, P = IsoClass.interval(1, 1), IsoClass.interval(2, 2), IsoClass.interval(1, 2)

# %% both embeddings of u_S1
x = HC.rh_monomial(cat, S1)
print("i+(u_S1) =", expr.format_element("dh2", D2.embed_plus(cat, x)))
print("i-(u_S1) =", expr.format_element("dh2", D2.embed_minus(cat, x)))

# %% E_1 and F_2 commute
e1 = D2.dh2_monomial(cat, m0=S1)
f2 = D2.dh2_monomial(cat, m1=S2)
print("E1 F2 =", expr.format_element("dh2", D2.dh2_product(cat, e1, f2)))
print("F2 E1 =", expr.format_element("dh2", D2.dh2_product(cat, f2, e1)))

# %% the full relation for P against itself
ok, lhs, rhs = D2.drinfeld_check(cat, P, (0, 0), P, (0, 0))
print("relation holds:", ok)
print("  both sides:", expr.format_element("dh2", lhs))

# %% the whole suite
from hallforge.verify import run_suite
print(run_suite("drinfeld", q, 2, (1, 1)).summary())
