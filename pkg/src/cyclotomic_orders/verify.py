"""Exhaustive checks of the identities and order refinements at small (l, n).

Each check returns a ``CheckReport``. A failing report carries the first
counterexample met when walking the ground set in canonical order.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .chambers import chamber_points, charges, wall_points
from .multipartitions import (
    MultiPartition,
    bar,
    core_of_charge,
    enumerate_multipartitions,
    inverse_perm,
    sym_act,
    tau,
    tau_inverse,
)
from .orders import (
    A_value,
    a_value,
    c_value,
    compare_alcove_modes,
    closure_additions,
    dominance_order,
    f_value,
    facet_order,
    geometric_order,
    j_classes,
)
from .params import (
    ParamPoint,
    bar_param,
    c_wall_forms,
    format_param,
    git_walls,
    h_of_theta,
    is_git_regular,
    on_c_wall,
)
from .partitions import Relation
from .weyl import CANONICAL, perm_act

MAX_GROUND = 10_000

CFunction = Callable[[ParamPoint, MultiPartition], Fraction]


@dataclass
class CheckReport:
    name: str
    grid: dict
    passed: bool = True
    witness: str | None = None
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    def fail(self, witness: str) -> "CheckReport":
        if self.passed:
            self.passed = False
            self.witness = witness
        return self

    def to_dict(self) -> dict:
        return {"check": self.name, "grid": self.grid, "pass": self.passed,
                "witness": self.witness, "seconds": round(self.elapsed, 4),
                **({"details": self.details} if self.details else {})}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _timed(fn):
    def run(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


def _guard(ell: int, n: int) -> list[MultiPartition]:
    ground = enumerate_multipartitions(ell, n)
    if len(ground) > MAX_GROUND:
        raise ValueError(f"P({ell},{n}) has {len(ground)} elements, over the {MAX_GROUND} limit")
    return ground


def _grid(p: ParamPoint, n: int, **extra) -> dict:
    return {"l": p.ell, "n": n, "point": format_param(p), **extra}


def _constant_difference(name: str, p: ParamPoint, n: int,
                         left: CFunction, right: CFunction) -> CheckReport:
    report = CheckReport(name, _grid(p, n))
    offset = None
    for lam in _guard(p.ell, n):
        diff = left(p, lam) - right(p, lam)
        if offset is None:
            offset = diff
        elif diff != offset:
            return report.fail(f"{lam}: difference {diff} != {offset}")
    report.details["offset"] = str(offset)
    return report


def _require_regular(p: ParamPoint, n: int) -> None:
    if not is_git_regular(p, n):
        raise ValueError(f"{format_param(p)} lies on a wall")


@_timed
def check_wall_refinement(ell: int, n: int) -> CheckReport:
    """Every G.I.T. wall is also a c-wall."""
    if ell > 4 or n > 5:
        raise ValueError("grid limited to l <= 4, n <= 5")
    report = CheckReport("git walls among c-walls", {"l": ell, "n": n})
    cw = c_wall_forms(ell, n)
    for wall in sorted(git_walls(ell, n)):
        if wall not in cw:
            return report.fail(str(wall))
    return report


@_timed
def check_f_eq_c(p: ParamPoint, n: int, c: CFunction = c_value) -> CheckReport:
    _require_regular(p, n)
    return _constant_difference("f - c constant", p, n, f_value, c)


@_timed
def check_a_eq_A(p: ParamPoint, n: int) -> CheckReport:
    _require_regular(p, n)
    if p.h <= 0:
        raise ValueError("the a-function needs h > 0")
    return _constant_difference("a - A constant", p, n, a_value, A_value)


@_timed
def check_order_refinements(p: ParamPoint, n: int, c: CFunction = c_value) -> CheckReport:
    """Geometric order is refined by the c-order and, for h > 0, by the a-order.

    On a c-wall only the weak inequality is required.
    """
    _require_regular(p, n)
    strict = not on_c_wall(p, n)
    report = CheckReport("order refinements", _grid(p, n, strict_c=strict))
    geo = geometric_order(p, n)
    cv = [c(p, x) for x in geo.ground]
    av = [a_value(p, x) for x in geo.ground] if p.h > 0 else None
    for i, j in geo.less_pairs():
        lo, hi = geo.ground[i], geo.ground[j]
        if not (cv[j] < cv[i] if strict else cv[j] <= cv[i]):
            return report.fail(f"{lo} below {hi} but c = {cv[i]}, {cv[j]}")
        if av is not None and not av[i] < av[j]:
            return report.fail(f"{lo} below {hi} but a = {av[i]}, {av[j]}")
    report.details["pairs"] = len(geo.less_pairs())
    return report


@_timed
def check_asymptotic(ell: int, n: int) -> CheckReport:
    """At ``h = -1, H_i = n`` the geometric order is dominance."""
    p = ParamPoint(ell, -1, [n] * (ell - 1))
    report = CheckReport("asymptotic chamber is dominance", _grid(p, n))
    _guard(ell, n)
    geo, dom = geometric_order(p, n), dominance_order(ell, n)
    for key in sorted(geo.table):
        if geo.table[key] is not dom.table[key]:
            i, j = key
            return report.fail(f"{geo.ground[i]} vs {geo.ground[j]}: "
                               f"{geo.table[key].value} but dominance {dom.table[key].value}")
    return report


@_timed
def check_bar_duality(p: ParamPoint, n: int) -> CheckReport:
    """The order at ``p`` matches the order at its bar on barred elements, and
    the c-values differ by ``l (n(n-1)h + n H_0)``."""
    _require_regular(p, n)
    report = CheckReport("bar duality", _grid(p, n))
    q = bar_param(p)
    geo, geo_bar = geometric_order(p, n), geometric_order(q, n)
    shift = p.ell * (n * (n - 1) * p.h + n * p.H0)
    for lam in geo.ground:
        if c_value(q, bar(lam)) != c_value(p, lam) + shift:
            return report.fail(f"c offset fails at {lam}")
    for lam, mu in itertools.combinations(geo.ground, 2):
        if geo.compare(lam, mu) is not geo_bar.compare(bar(lam), bar(mu)):
            return report.fail(f"{lam} vs {mu}")
    return report


def act_on_param(w, p: ParamPoint) -> ParamPoint:
    """The finite symmetric group acting on parameters through theta."""
    return h_of_theta(perm_act(w, p.theta))


@_timed
def check_equivariance(p: ParamPoint, n: int) -> CheckReport:
    """For every permutation ``w``: the order at ``w.p`` is the ``w``-translate of
    the order at ``p``, and up to additive constants ``c_{w.p}(w.lam) = c_p(lam)``,
    ``f_{w.p}(w.lam) = f_p(lam)`` and, for h > 0, ``a_{w.p}(lam) = a_p(w^{-1}.lam)``.

    The constants vanish when ``w`` avoids the first simple transposition;
    the offsets found are listed in the details.
    """
    _require_regular(p, n)
    report = CheckReport("symmetric group equivariance", _grid(p, n))
    geo = geometric_order(p, n)
    ground = geo.ground
    for w in itertools.permutations(range(1, p.ell + 1)):
        q = act_on_param(w, p)
        if not is_git_regular(q, n):
            return report.fail(f"w={w}: image {format_param(q)} not regular")
        moved = geometric_order(q, n)
        found = {"c": set(), "f": set(), "a": set()}
        for lam in ground:
            wl = sym_act(w, lam)
            found["c"].add(c_value(q, wl) - c_value(p, lam))
            found["f"].add(f_value(q, wl) - f_value(p, lam))
            if p.h > 0:
                found["a"].add(a_value(q, lam) - a_value(p, sym_act(inverse_perm(w), lam)))
        for key, values in found.items():
            if len(values) > 1:
                return report.fail(f"w={w}: {key} values not related by a constant")
        report.details["".join(map(str, w))] = {k: str(v.pop()) for k, v in found.items() if v}
        for lam, mu in itertools.combinations(ground, 2):
            if geo.compare(lam, mu) is not moved.compare(sym_act(w, lam), sym_act(w, mu)):
                return report.fail(f"w={w}: {lam} vs {mu}")
    return report


def transpose_reading(lam: MultiPartition) -> MultiPartition:
    """The reading of the transpose of a multipartition under which the a/c
    identity at level two holds: reverse the components and transpose them."""
    return bar(lam)


@_timed
def check_broue_michel(n: int, points: Iterable[ParamPoint] | None = None,
                       reading: Callable[[MultiPartition], MultiPartition] = transpose_reading
                       ) -> CheckReport:
    """``c_h(lam) = a_h(t lam) + n H_1 - n(n-1)h - a_h(lam)`` on P(2, n), h > 0."""
    if points is None:
        points = [p for pts in chamber_points(2, n).values() for p in pts if p.h > 0]
    points = list(points)
    report = CheckReport("level-two a/c identity", {"l": 2, "n": n, "points": len(points)})
    for p in points:
        if p.h <= 0 or p.ell != 2:
            raise ValueError("needs level 2 and h > 0")
        for lam in _guard(2, n):
            rhs = a_value(p, reading(lam)) + n * p.H[0] - n * (n - 1) * p.h - a_value(p, lam)
            if c_value(p, lam) != rhs:
                return report.fail(f"{format_param(p)}: {lam}")
    return report


@_timed
def check_wall_monotonicity(p: ParamPoint, n: int, mode: str = CANONICAL) -> CheckReport:
    """At a wall point, ``lam`` below ``mu`` in the facet order forces
    ``c(lam) >= c(mu)``; c is also constant on each J-class."""
    report = CheckReport("wall monotonicity", _grid(p, n, mode=mode))
    fo = facet_order(p, n, mode)
    cv = [c_value(p, x) for x in fo.ground]
    for i, j in fo.less_pairs():
        if not cv[i] >= cv[j]:
            return report.fail(f"{fo.ground[i]} below {fo.ground[j]} but c = {cv[i]} < {cv[j]}")
    for cls in j_classes(p, n, mode):
        if len({c_value(p, x) for x in cls}) != 1:
            return report.fail(f"c not constant on the class {[str(x) for x in cls]}")
    return report


@_timed
def check_tau_bijection(ell: int, n: int, bound: int = 3) -> CheckReport:
    report = CheckReport("charge bijection", {"l": ell, "n": n, "bound": bound})
    ground = _guard(ell, n)
    for s in charges(ell, bound):
        core = core_of_charge(s)
        seen = set()
        for lam in ground:
            nu = tau(s, lam)
            if nu.degree != ell * n + core.degree:
                return report.fail(f"s={s}: degree of tau({lam})")
            if tau_inverse(s, nu) != lam:
                return report.fail(f"s={s}: roundtrip fails at {lam}")
            seen.add(nu)
        if len(seen) != len(ground):
            return report.fail(f"s={s}: not injective")
    return report


@_timed
def check_alcove_modes(p: ParamPoint, n: int) -> CheckReport:
    """Records whether the wall order depends on which adjacent alcove is used.

    Passes when the J-classes and the order induced on them agree; the
    element-level comparison is reported in the details.
    """
    report = CheckReport("alcove mode independence", _grid(p, n))
    cmp = compare_alcove_modes(p, n)
    report.details = {"same_alcove": cmp.same_alcove, "same_order": cmp.same_order,
                      "same_classes": cmp.same_classes, "same_class_order": cmp.same_class_order}
    if not (cmp.same_classes and cmp.same_class_order):
        report.fail("class-level orders differ")
    return report


@_timed
def check_closure_probe(p: ParamPoint, n: int, mode: str = CANONICAL) -> CheckReport:
    """Lists pairs that need the transitive closure; never fails."""
    report = CheckReport("closure probe", _grid(p, n, mode=mode))
    added = closure_additions(p, n, mode)
    report.details = {"added": [f"{a} < {b}" for a, b in added]}
    return report


def chamber_grid(ell: int, n: int, per_chamber: int = 3) -> list[ParamPoint]:
    return [p for pts in chamber_points(ell, n, per_chamber).values() for p in pts]


CHECK_NAMES = ("walls", "f-c", "a-A", "refinements", "asymptotic", "bar", "equivariance",
               "level-two", "wall-monotonicity", "tau", "alcove-modes")


def run_grid(ell: int, n: int, names: Iterable[str] = CHECK_NAMES,
             c: CFunction = c_value) -> list[CheckReport]:
    """Run the named checks at one ``(l, n)``, over one point per chamber."""
    names = set(names)
    unknown = names - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    reports = []
    points = chamber_grid(ell, n, per_chamber=1)
    if "walls" in names:
        reports.append(check_wall_refinement(ell, n))
    if "asymptotic" in names:
        reports.append(check_asymptotic(ell, n))
    if "tau" in names:
        reports.append(check_tau_bijection(ell, n))
    for p in points:
        if "f-c" in names:
            reports.append(check_f_eq_c(p, n, c))
        if "a-A" in names and p.h > 0:
            reports.append(check_a_eq_A(p, n))
        if "refinements" in names:
            reports.append(check_order_refinements(p, n, c))
        if "bar" in names:
            reports.append(check_bar_duality(p, n))
        if "equivariance" in names:
            reports.append(check_equivariance(p, n))
    if "level-two" in names and ell == 2:
        reports.append(check_broue_michel(n))
    for p in wall_points(ell, n).values():
        if "wall-monotonicity" in names:
            reports.append(check_wall_monotonicity(p, n))
        if "alcove-modes" in names:
            reports.append(check_alcove_modes(p, n))
    return reports


DEFAULT_GRID = ((1, 3), (2, 2), (2, 3), (3, 2))
