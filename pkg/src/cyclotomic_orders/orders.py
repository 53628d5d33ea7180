"""Ordering functions on multipartitions and the orders they induce.

Four scalar functions are provided: ``c_value``, ``a_value`` (for ``h > 0``),
``A_value`` and ``f_value``. The last two are weighted sums over the diagram
of the partition labelling the multipartition in the alcove of the point.
The orders are the c-order, the a-order, the geometric order at regular
points, and its extension to wall points.

Comparison functions return a ``Relation`` describing the left argument:
``GREATER`` means the left argument is the larger one in that order.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .multipartitions import (
    MultiPartition,
    bar,
    componentwise_transpose,
    enumerate_multipartitions,
    format_multipartition,
    sym_act,
    tau,
    top,
)
from .params import ParamPoint, c_coefficients, format_param, is_git_regular
from .partitions import Partition, Relation, dominates, format_partition, j_heart
from .weyl import CANONICAL, AlcoveData, alcove_data


@lru_cache(maxsize=None)
def _ground(ell: int, n: int) -> tuple[MultiPartition, ...]:
    return tuple(enumerate_multipartitions(ell, n))


@lru_cache(maxsize=4096)
def _alcove(p: ParamPoint, n: int | None, mode: str) -> AlcoveData:
    return alcove_data(p, n, mode)


def _compare_values(x, y) -> Relation:
    if x < y:
        return Relation.LESS
    if x > y:
        return Relation.GREATER
    return Relation.EQUAL


# scalar functions

def c_value(p: ParamPoint, lam: MultiPartition) -> Fraction:
    if lam.level != p.ell:
        raise ValueError("level mismatch")
    coeffs = c_coefficients(lam)
    return coeffs[0] * p.h + sum((a * x for a, x in zip(coeffs[1:], p.H)), Fraction(0))


def c_compare(p: ParamPoint, lam: MultiPartition, mu: MultiPartition) -> Relation:
    """The c-order: ``lam`` is above ``mu`` when ``c(mu) > c(lam)``."""
    return _compare_values(c_value(p, mu), c_value(p, lam))


def _a_prime(p: ParamPoint, lam: MultiPartition, n: int) -> Fraction:
    ell, h = p.ell, p.h
    prefix = [p.H_prefix(i) for i in range(1, ell + 1)]
    B = [[h * (n + lam[i].part(u) - u) + prefix[i] for u in range(1, n + 1)]
         for i in range(ell)]
    total = Fraction(0)
    for i in range(ell):
        for j in range(i, ell):
            for u in range(n):
                for v in range(u + 1 if i == j else 0, n):
                    total += min(B[i][u], B[j][v])
    for i in range(ell):
        for u in range(1, n + 1):
            for k in range(1, lam[i].part(u) + 1):
                x = h * (n + k - u) + prefix[i]
                total -= sum(min(x, prefix[j]) for j in range(ell))
    return total


def a_value(p: ParamPoint, lam: MultiPartition) -> Fraction:
    """The a-function, normalized to vanish on ``((n), (), ...)``. Needs ``h > 0``."""
    if p.h <= 0:
        raise ValueError("the a-function is only defined for h > 0")
    if lam.level != p.ell:
        raise ValueError("level mismatch")
    n = lam.degree
    return _a_prime(p, lam, n) - _a_prime(p, top(p.ell, n), n)


def a_compare(p: ParamPoint, lam: MultiPartition, mu: MultiPartition) -> Relation:
    return _compare_values(a_value(p, lam), a_value(p, mu))


def label(d: AlcoveData, lam: MultiPartition) -> Partition:
    """The partition ``tau_s(t(w . lam'))`` labelling ``lam`` in the alcove
    ``d``, where ``lam'`` is ``lam`` or its bar according to the sign."""
    if lam.level != d.ell:
        raise ValueError("level mismatch")
    if d.sign == "-":
        lam = bar(lam)
    return tau(d.s, componentwise_transpose(sym_act(d.w, lam)))


def _diagram_sum(d: AlcoveData, lam: MultiPartition, weight: Callable[[int, int], int]) -> Fraction:
    ell, psi = d.ell, d.psi
    total = Fraction(0)
    for p, q in label(d, lam).nodes():
        total += psi[(p - q) % ell] * weight(p, q)
    return d.scale * total


def A_value(p: ParamPoint, lam: MultiPartition, mode: str = CANONICAL) -> Fraction:
    return _diagram_sum(_alcove(p, None, mode), lam, lambda col, row: row - 1)


def f_value(p: ParamPoint, lam: MultiPartition, mode: str = CANONICAL) -> Fraction:
    return _diagram_sum(_alcove(p, None, mode), lam, lambda col, row: col - row)


# relations

class OrderRelation:
    """A relation table on a finite ground set.

    ``table[i, j]`` describes ``ground[i]`` against ``ground[j]``. Distinct
    elements may be tied (``EQUAL``) in a preorder such as the c-order.
    """

    def __init__(self, ground: Sequence[Hashable], table: dict[tuple[int, int], Relation],
                 name: str = "", point: ParamPoint | None = None, note: str = ""):
        self.ground = list(ground)
        self.table = table
        self.name = name
        self.point = point
        self.note = note
        self.index = {x: i for i, x in enumerate(self.ground)}
        self._validate()

    @classmethod
    def from_less(cls, ground: Sequence[Hashable], less: Callable[[int, int], bool],
                  tie: Callable[[int, int], bool] | None = None, **kwargs) -> "OrderRelation":
        """Build from a strict relation ``less(i, j)``: ``ground[i] < ground[j]``."""
        N = len(ground)
        table = {}
        for i in range(N):
            for j in range(N):
                if i == j:
                    table[i, j] = Relation.EQUAL
                elif less(i, j):
                    table[i, j] = Relation.LESS
                elif less(j, i):
                    table[i, j] = Relation.GREATER
                elif tie is not None and tie(i, j):
                    table[i, j] = Relation.EQUAL
                else:
                    table[i, j] = Relation.INCOMPARABLE
        return cls(ground, table, **kwargs)

    def _validate(self) -> None:
        N = len(self.ground)
        less = [set() for _ in range(N)]
        for (i, j), r in self.table.items():
            if self.table[j, i] is not r.flip():
                raise ValueError(f"relation not antisymmetric at {i}, {j}")
            if r is Relation.LESS:
                less[i].add(j)
        for i in range(N):
            if i in less[i]:
                raise ValueError("relation has a cycle")
            for j in less[i]:
                if not less[j] <= less[i]:
                    raise ValueError(f"relation not transitive at {i}, {j}")
        self._above = less

    def compare(self, a, b) -> Relation:
        return self.table[self.index[a], self.index[b]]

    def less_pairs(self) -> list[tuple[int, int]]:
        return sorted((i, j) for (i, j), r in self.table.items() if r is Relation.LESS)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderRelation):
            return NotImplemented
        return self.ground == other.ground and self.table == other.table

    def to_dict(self) -> dict:
        fmt = _formatter(self.ground)
        return {
            "order": self.name,
            "point": format_param(self.point) if self.point is not None else None,
            "note": self.note,
            "ground": [fmt(x) for x in self.ground],
            "pairs": [[fmt(self.ground[i]), r.value, fmt(self.ground[j])]
                      for (i, j), r in sorted(self.table.items())
                      if i < j and r is not Relation.INCOMPARABLE],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _formatter(ground) -> Callable:
    if not ground or isinstance(ground[0], Partition):
        return format_partition
    if isinstance(ground[0], MultiPartition):
        return format_multipartition
    # a J-class: a plain tuple of multipartitions
    return lambda c: "{" + "|".join(format_multipartition(x) for x in c) + "}"


def hasse(rel: OrderRelation) -> list[tuple[int, int]]:
    """Cover pairs ``(i, j)`` with ``ground[i] < ground[j]`` and nothing between."""
    above = rel._above
    covers = []
    for i in range(len(rel.ground)):
        for j in sorted(above[i]):
            if not any(j in above[k] for k in above[i]):
                covers.append((i, j))
    return covers


def to_dot(rel: OrderRelation, name: str = "order") -> str:
    """Hasse diagram as DOT, edges pointing from the larger to the smaller element."""
    fmt = _formatter(rel.ground)
    lines = [f"digraph {name} {{"]
    for x in rel.ground:
        lines.append(f'  "{fmt(x)}";')
    for i, j in hasse(rel):
        lines.append(f'  "{fmt(rel.ground[j])}" -> "{fmt(rel.ground[i])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dominance_order(ell: int, n: int) -> OrderRelation:
    from .multipartitions import multi_dominates
    ground = _ground(ell, n)
    return OrderRelation.from_less(
        ground, lambda i, j: multi_dominates(ground[i], ground[j]) is Relation.LESS,
        name="dominance")


def partition_dominance_order(parts: Sequence[Partition]) -> OrderRelation:
    parts = list(parts)
    return OrderRelation.from_less(
        parts, lambda i, j: dominates(parts[i], parts[j]) is Relation.LESS, name="dominance")


def c_order(p: ParamPoint, n: int) -> OrderRelation:
    ground = _ground(p.ell, n)
    vals = [c_value(p, x) for x in ground]
    return OrderRelation.from_less(ground, lambda i, j: vals[i] > vals[j],
                                   tie=lambda i, j: vals[i] == vals[j], name="c", point=p)


def a_order(p: ParamPoint, n: int) -> OrderRelation:
    ground = _ground(p.ell, n)
    vals = [a_value(p, x) for x in ground]
    return OrderRelation.from_less(ground, lambda i, j: vals[i] < vals[j],
                                   tie=lambda i, j: vals[i] == vals[j], name="a", point=p)


def geometric_order(p: ParamPoint, n: int) -> OrderRelation:
    if not is_git_regular(p, n):
        raise ValueError(f"{format_param(p)} lies on a wall; use facet_order")
    d = _alcove(p, n, CANONICAL)
    ground = _ground(p.ell, n)
    labels = [label(d, x) for x in ground]
    # mu below lam exactly when label(lam) is strictly dominated by label(mu)
    return OrderRelation.from_less(
        ground, lambda i, j: dominates(labels[j], labels[i]) is Relation.LESS,
        name="geometric", point=p)


def geometric_compare(p: ParamPoint, lam: MultiPartition, mu: MultiPartition) -> Relation:
    n = lam.degree
    if not is_git_regular(p, n):
        raise ValueError(f"{format_param(p)} lies on a wall; use facet_compare")
    d = _alcove(p, n, CANONICAL)
    return dominates(label(d, mu), label(d, lam))


@dataclass(frozen=True)
class FacetStructure:
    """Wall data at a point: alcove used, labels, hearts and the closed relation."""

    data: AlcoveData
    ground: tuple[MultiPartition, ...]
    labels: tuple[Partition, ...]
    hearts: tuple[Partition, ...]
    generated: frozenset[tuple[int, int]]
    closed: frozenset[tuple[int, int]]


@lru_cache(maxsize=256)
def facet_structure(p: ParamPoint, n: int, mode: str = CANONICAL) -> FacetStructure:
    d = _alcove(p, n, mode)
    ground = _ground(p.ell, n)
    labels = tuple(label(d, x) for x in ground)
    hearts = tuple(j_heart(nu, d.J, d.ell) for nu in labels)
    N = len(ground)
    # (a, b): label[a] strictly dominated by label[b] and their hearts differ
    gen = {(a, b) for a in range(N) for b in range(N)
           if a != b and hearts[a] != hearts[b]
           and dominates(labels[a], labels[b]) is Relation.LESS}
    reach = [set(b for (x, b) in gen if x == a) for a in range(N)]
    for k in range(N):
        for a in range(N):
            if k in reach[a]:
                reach[a] |= reach[k]
    closed = {(a, b) for a in range(N) for b in reach[a]}
    return FacetStructure(d, ground, labels, hearts, frozenset(gen), frozenset(closed))


def facet_order(p: ParamPoint, n: int, mode: str = CANONICAL) -> OrderRelation:
    """The order at a possibly non-regular point. ``lam`` is below ``mu`` when
    the label of ``mu`` lies below the label of ``lam`` in the closed relation;
    distinct members of one J-class that are not related are tied."""
    fs = facet_structure(p, n, mode)
    return OrderRelation.from_less(
        fs.ground, lambda i, j: (j, i) in fs.closed,
        tie=lambda i, j: fs.hearts[i] == fs.hearts[j],
        name="facet", point=p, note=f"{fs.data.mode} alcove {fs.data.to_json()}")


def facet_compare(p: ParamPoint, n: int, lam: MultiPartition, mu: MultiPartition,
                  mode: str = CANONICAL) -> Relation:
    return facet_order(p, n, mode).compare(lam, mu)


def j_classes(p: ParamPoint, n: int, mode: str = CANONICAL) -> list[list[MultiPartition]]:
    """Fibres of the J-heart map, in order of first appearance."""
    fs = facet_structure(p, n, mode)
    classes: dict[Partition, list[MultiPartition]] = defaultdict(list)
    for x, heart in zip(fs.ground, fs.hearts):
        classes[heart].append(x)
    return list(classes.values())


def closure_additions(p: ParamPoint, n: int, mode: str = CANONICAL) -> list[tuple[MultiPartition, MultiPartition]]:
    """Pairs ``(lam, mu)``, ``lam`` below ``mu``, that are related only after
    taking the transitive closure."""
    fs = facet_structure(p, n, mode)
    return [(fs.ground[b], fs.ground[a]) for (a, b) in sorted(fs.closed - fs.generated)]


def class_order(p: ParamPoint, n: int, mode: str = CANONICAL) -> OrderRelation:
    """The facet order pushed down to J-classes: one class is below another
    when some member of the first is below some member of the second."""
    fo = facet_order(p, n, mode)
    classes = sorted(tuple(c) for c in j_classes(p, n, mode))
    where = {x: k for k, c in enumerate(classes) for x in c}
    below = {(where[fo.ground[i]], where[fo.ground[j]])
             for (i, j), r in fo.table.items() if r is Relation.LESS}
    return OrderRelation.from_less(classes, lambda a, b: (a, b) in below,
                                   name="facet classes", point=p)


@dataclass(frozen=True)
class ModeComparison:
    same_alcove: bool
    same_order: bool
    same_classes: bool
    same_class_order: bool


def compare_alcove_modes(p: ParamPoint, n: int) -> ModeComparison:
    """Compare the wall order computed from the canonical alcove with the one
    from the alcove whose upper closure contains ``p``."""
    from .weyl import UPPER_CLOSURE
    a, b = _alcove(p, n, CANONICAL), _alcove(p, n, UPPER_CLOSURE)
    ca, cb = class_order(p, n, CANONICAL), class_order(p, n, UPPER_CLOSURE)
    return ModeComparison(
        same_alcove=(a.s, a.w) == (b.s, b.w),
        same_order=facet_order(p, n, CANONICAL) == facet_order(p, n, UPPER_CLOSURE),
        same_classes=ca.ground == cb.ground,
        same_class_order=ca == cb,
    )


# The a-function splits, at h = 1, into a sum over boxes and a sum over beads
# on the runners of the charge; the two agree up to a constant.

def _unit_point(p: ParamPoint) -> tuple[list[Fraction], int]:
    if p.h <= 0:
        raise ValueError("needs h > 0")
    return [p.H_prefix(i) / p.h for i in range(1, p.ell + 1)], p.ell


def a_box_sum(p: ParamPoint, lam: MultiPartition) -> Fraction:
    M, ell = _unit_point(p)
    n = lam.degree
    return -sum((min(n + k - u + M[i], M[j])
                 for i in range(ell) for j in range(ell)
                 for u in range(1, n + 1) for k in range(1, lam[i].part(u) + 1)),
                Fraction(0))


def a_runner_sum(p: ParamPoint, lam: MultiPartition) -> Fraction:
    """Uses the charge of the alcove of ``p`` read as ``s_{w(l+1-i)}`` on
    component ``i``."""
    M, ell = _unit_point(p)
    n = lam.degree
    d = _alcove(ParamPoint(ell, 1, [x / p.h for x in p.H]), None, CANONICAL)
    s = [d.s[d.w[ell - i] - 1] for i in range(1, ell + 1)]
    low = min(s)

    def B(i, u):
        return n + lam[i].part(u) - u + M[i]

    total = Fraction(0)
    for i in range(ell):
        for j in range(ell):
            for u in range(1, n + 1):
                for v in range(n + 1, n + s[j] - low + 1):
                    total += min(B(i, u), B(j, v))
    return total
