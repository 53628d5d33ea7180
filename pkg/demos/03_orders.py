"""
Geometric orders across the chambers
====================================

The geometric order changes from chamber to chamber. In the asymptotic chamber
it is dominance; everywhere it is refined by the c-order, and for h > 0 by the
a-order. On a wall, labels collapse into J-classes.
"""

from fractions import Fraction

from cyclotomic_orders.chambers import chamber_points
from cyclotomic_orders.orders import (
    a_value, c_value, dominance_order, geometric_order, hasse, j_classes)
from cyclotomic_orders.params import ParamPoint

ell, n = 2, 2

asymptotic = ParamPoint(ell, -1, [n])
geo = geometric_order(asymptotic, n)
print("asymptotic chamber equals dominance:", geo.table == dominance_order(ell, n).table)

# distinct orders met on the two slices
seen = {}
for pts in chamber_points(ell, n).values():
    rel = geometric_order(pts[0], n)
    seen.setdefault(tuple(sorted(rel.table.items())), (pts[0], rel))
print(f"{len(seen)} distinct geometric orders on P({ell},{n})")

for p, rel in seen.values():
    covers = [f"{rel.ground[j]} > {rel.ground[i]}" for i, j in hasse(rel)]
    print(f"\n{p}")
    print("  covers:", "; ".join(covers))
    cs = {str(x): str(c_value(p, x)) for x in rel.ground}
    print("  c:", cs)
    if p.h > 0:
        print("  a:", {str(x): str(a_value(p, x)) for x in rel.ground})

# on the wall H1 + h = 0 some labels merge
wall = ParamPoint(ell, -1, [Fraction(1)])
print("\nJ-classes on", wall, ":", [[str(x) for x in c] for c in j_classes(wall, n)])
