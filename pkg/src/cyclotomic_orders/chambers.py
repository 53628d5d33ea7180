"""Sample points for the chambers and wall facets of the G.I.T. arrangement.

Every chamber is a union of alcoves on each of the slices ``h = -1`` and
``h = 1``, so chambers are found by walking alcove labels ``(s, w)`` outwards
until every region of the arrangement has been hit. For ``l <= 3`` the number
of regions is known independently from the intersection pattern of the walls.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .multipartitions import Charge, inverse_perm
from .params import ParamPoint, WallForm, bar_param, git_walls, h_of_theta, on_c_wall
from .weyl import charge_shift, one, perm_act, positive_roots

Key = tuple[int, ...]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@lru_cache(maxsize=None)
def _walls(ell: int, n: int) -> list[WallForm]:
    return sorted(git_walls(ell, n))


def cell_key(p: ParamPoint, n: int) -> Key:
    """Signs of all G.I.T. forms at ``p``; equal keys mean the same cell."""
    return tuple(_sign(w(p)) for w in _walls(p.ell, n))


def charges(ell: int, bound: int) -> list[Charge]:
    out = []
    for head in itertools.product(range(-bound, bound + 1), repeat=ell - 1):
        last = -sum(head)
        if abs(last) <= bound:
            out.append(Charge(head + (last,)))
    return out


def alcove_point(s, w, interior) -> tuple[Fraction, ...]:
    """``w^{-1}(interior + charge_shift(s))``: a point of the alcove ``(s, w)``
    for any ``interior`` point of the closed fundamental alcove."""
    pt = tuple(x + d for x, d in zip(interior, charge_shift(s)))
    return perm_act(inverse_perm(w), pt)


def interior_points(ell: int, count: int) -> list[tuple[Fraction, ...]]:
    """``count`` distinct points of the open fundamental alcove, barycentre first."""
    pts = [one(ell)]
    k = 1
    while len(pts) < count:
        for i in range(ell):
            weights = [1] * ell
            weights[i] += k
            total = sum(weights)
            pts.append(tuple(Fraction(x, total) for x in weights))
        k += 1
    return pts[:count]


def expected_region_count(ell: int, n: int) -> int | None:
    """Regions of the arrangement on one slice, from its intersection pattern
    (line arrangements only, so ``l <= 3``)."""
    if ell == 1:
        return 1
    if ell == 2:
        return 2 * n
    if ell > 3:
        return None
    # lines a . x = m in the plane of weight coordinates
    lines = [(tuple(1 if i <= k <= j else 0 for k in (1, 2)), m)
             for (i, j) in positive_roots(3) for m in range(1 - n, n)]
    points: Counter = Counter()
    for (a, m), (b, k) in itertools.combinations(lines, 2):
        det = a[0] * b[1] - a[1] * b[0]
        if det == 0:
            continue
        x = Fraction(m * b[1] - k * a[1], det)
        y = Fraction(a[0] * k - b[0] * m, det)
        points[x, y] += 1
    # a point on r lines is counted r(r-1)/2 times above
    extra = 0
    for pairs in points.values():
        r = (1 + math.isqrt(1 + 8 * pairs)) // 2
        extra += r - 1
    return 1 + len(lines) + extra


def _slice_point(theta, sign: str) -> ParamPoint:
    p = h_of_theta(theta)
    return p if sign == "+" else bar_param(p)


@lru_cache(maxsize=None)
def chamber_points(ell: int, n: int, per_chamber: int = 3, avoid_c_walls: bool = True
                   ) -> dict[Key, list[ParamPoint]]:
    """At least ``per_chamber`` regular points in every G.I.T. chamber.

    Points off every c-wall are preferred when ``avoid_c_walls`` is set.
    """
    if ell == 1:
        pts = {(-1,): [ParamPoint(1, -k, ()) for k in range(1, per_chamber + 1)],
               (1,): [ParamPoint(1, k, ()) for k in range(1, per_chamber + 1)]}
        return pts
    target = expected_region_count(ell, n)
    previous = None
    for bound in range(1, 4 * n + 8):
        found: dict[Key, list[tuple]] = {}
        for sign in "+-":
            for s in charges(ell, bound):
                for w in itertools.permutations(range(1, ell + 1)):
                    theta = alcove_point(s, w, one(ell))
                    key = cell_key(_slice_point(theta, sign), n)
                    found.setdefault(key, []).append((sign, s, w))
        count = len(found)
        if target is not None and count == 2 * target:
            break
        if target is None and count == previous:
            break
        previous = count
    else:
        raise RuntimeError(f"chamber search did not converge for ({ell}, {n})")
    return {key: _pick_points(labels, n, per_chamber, avoid_c_walls)
            for key, labels in sorted(found.items())}


def _pick_points(labels, n: int, per_chamber: int, avoid_c_walls: bool) -> list[ParamPoint]:
    labels = sorted(labels, key=lambda t: (sum(abs(x) for x in t[1]), t))
    ell = len(labels[0][1])
    chosen: list[ParamPoint] = []
    spare: list[ParamPoint] = []
    for interior in interior_points(ell, 4 * per_chamber + 1):
        for sign, s, w in labels[:per_chamber]:
            p = _slice_point(alcove_point(s, w, interior), sign)
            if p in chosen or p in spare:
                continue
            if avoid_c_walls and on_c_wall(p, n):
                spare.append(p)
            else:
                chosen.append(p)
            if len(chosen) == per_chamber:
                return chosen
    return (chosen + spare)[:per_chamber]


@lru_cache(maxsize=None)
def wall_points(ell: int, n: int, bound: int | None = None) -> dict[Key, ParamPoint]:
    """One point on each wall facet met by the closures of nearby alcoves,
    keyed by the sign pattern of the G.I.T. forms (zeros mark the walls)."""
    if ell == 1:
        return {}
    if bound is None:
        bound = n + 1
    out: dict[Key, ParamPoint] = {}
    subsets = [J for r in range(1, ell) for J in itertools.combinations(range(ell), r)]
    for sign in "+-":
        for s in charges(ell, bound):
            for w in itertools.permutations(range(1, ell + 1)):
                for J in subsets:
                    rest = [i for i in range(ell) if i not in J]
                    psi = tuple(Fraction(0) if i in J else Fraction(1, len(rest))
                                for i in range(ell))
                    p = _slice_point(alcove_point(s, w, psi), sign)
                    key = cell_key(p, n)
                    if 0 in key and key not in out:
                        out[key] = p
    return dict(sorted(out.items()))
