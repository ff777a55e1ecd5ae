"""Hall numbers, the coproduct, and Green's formula on A_2.

A_2 with arrow 1 -> 2 has three indecomposables: the simples S1, S2 and
the projective P = (1-2).  This script counts subrepresentations by hand,
builds the coproduct of u_P and checks Green's formula on every quadruple
of the (1,1) catalog.
"""

# %%
import itertools

from hallforge import hall_classical as HC
from hallforge import rep as R
from hallforge.catalog import get_catalog
from hallforge.quiver import parse_quiver

q = parse_quiver("a2:>")
cat = get_catalog(q, 2, (2, 2))
print(cat)
S1, S2, P = R.IsoClass.interval(1, 1), R.IsoClass.interval(2, 2), R.IsoClass.interval(1, 2)

# %% subrepresentations of P
for sub in R.subreps(cat.realize(P)):
    print("sub of dim", sub.dim, "->", R.iso_class(sub.sub), "with quotient", R.iso_class(sub.quotient))

# %% the Hall product u_S1 u_S2 has two middle terms
x = HC.rh_product(cat, HC.rh_monomial(cat, S1), HC.rh_monomial(cat, S2))
for (L, _), c in x.items():
    print(f"  {c} * u[{L}]")

# %% coproduct of u_P
for (m, a), (n, b), c in HC.comult(cat, P):
    print(f"  {c} * u[{m}]K{a} (x) u[{n}]K{b}")

# %% Green's formula on all quadruples drawn from the (1,1) catalog
small = get_catalog(q, 2, (1, 1))
count = 0
for quad in itertools.product(small.classes, repeat=4):
    lhs, rhs = HC.green_sides(cat, *quad)
    assert lhs == rhs, quad
    count += 1
print(count, "quadruples checked")
