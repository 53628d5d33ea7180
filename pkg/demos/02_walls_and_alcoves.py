"""
Walls, chambers and alcoves
===========================

The G.I.T. arrangement sits inside the arrangement of c-walls. Every parameter
point with h != 0 is classified by an alcove label (sign, charge s, permutation w)
and its position psi in the fundamental alcove.
"""

from fractions import Fraction

from cyclotomic_orders.chambers import chamber_points, expected_region_count
from cyclotomic_orders.params import ParamPoint, c_wall_forms, git_walls, walls_through
from cyclotomic_orders.weyl import alcove_data

ell, n = 2, 3
print("G.I.T. walls:", ", ".join(str(w) for w in sorted(git_walls(ell, n))))
print("c-walls     :", ", ".join(str(w) for w in sorted(c_wall_forms(ell, n))))
print("every G.I.T. wall is a c-wall:", git_walls(ell, n) <= c_wall_forms(ell, n))

# each slice h = -1 and h = 1 is cut into 2n regions
cells = chamber_points(ell, n)
print(f"\n{len(cells)} chambers (expected {2 * expected_region_count(ell, n)})")
for key, pts in list(cells.items())[:4]:
    p = pts[0]
    d = alcove_data(p, n)
    print(f"  {p}: sign {d.sign} s={list(d.s)} w={list(d.w)}")

# a point on a wall picks up a nonempty facet type J
for H in (Fraction(1, 3), Fraction(1), Fraction(2)):
    p = ParamPoint(ell, -1, [H])
    d = alcove_data(p, n)
    walls = [str(w) for w in walls_through(p, n)]
    print(f"\n{p}: psi={[str(x) for x in d.psi]} J={list(d.J)} walls={walls}")
