import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclotomic_orders.chambers import chamber_points, wall_points
from cyclotomic_orders.multipartitions import (
    Charge,
    MultiPartition,
    bar,
    componentwise_transpose,
    empty,
    enumerate_multipartitions,
    tau,
    top,
)
from cyclotomic_orders.orders import (
    A_value,
    OrderRelation,
    a_box_sum,
    a_compare,
    a_runner_sum,
    a_value,
    c_compare,
    c_order,
    c_value,
    class_order,
    closure_additions,
    dominance_order,
    f_value,
    facet_compare,
    facet_order,
    geometric_compare,
    geometric_order,
    hasse,
    j_classes,
    partition_dominance_order,
    to_dot,
)
from cyclotomic_orders.params import ParamPoint, c_coefficients, h_of_theta, is_git_regular
from cyclotomic_orders.partitions import Partition, Relation, n_statistic, partitions_of, transpose
from cyclotomic_orders.weyl import alcove_data, base_point, one

from oracles import a_direct, c_direct
from strategies import rationals

F = Fraction


def mp(*components):
    return MultiPartition(Partition(c) for c in components)


def constant(values):
    return len(set(values)) == 1


def points_of(ell, n, sign=None):
    pts = [p for ps in chamber_points(ell, n).values() for p in ps]
    if sign == "+":
        pts = [p for p in pts if p.h > 0]
    return pts


# c-function

def test_c_top_is_zero():
    for ell in range(1, 5):
        for n in range(1, 6):
            assert c_coefficients(top(ell, n)) == (0,) * ell


def test_c_on_two_row_elements():
    # lam(a, b, j) has (a) in slot 1 and (b) in slot j; c = l b [(H_1 + ... + H_{j-1}) - a h]
    for ell in range(2, 5):
        for n in range(1, 6):
            for b in range(1, n + 1):
                a = n - b
                for j in range(2, ell + 1):
                    comps = [()] * ell
                    comps[0] = (a,) if a else ()
                    comps[j - 1] = (b,)
                    expected = [-ell * b * a] + [ell * b if i < j else 0 for i in range(1, ell)]
                    assert c_coefficients(mp(*comps)) == tuple(expected)


def test_c_level_one():
    for n in range(1, 7):
        for lam in partitions_of(n):
            p = ParamPoint(1, F(3, 7), [])
            expected = -(F(n * (n - 1), 2) + n_statistic(lam) - n_statistic(transpose(lam))) * p.h
            assert c_value(p, mp(lam)) == expected


def test_c_compare_examples():
    p = ParamPoint(2, -1, [10])
    a, b, c = mp((3,), ()), mp((2, 1), ()), mp((), (3,))
    assert [c_value(p, x) for x in (a, b, c)] == [0, 6, 60]
    assert c_compare(p, a, b) is Relation.GREATER
    assert c_compare(p, c, b) is Relation.LESS
    assert c_compare(p, b, b) is Relation.EQUAL
    # on the c-wall H1 = 0 the pair ((1),()) and ((),(1)) ties
    assert c_compare(ParamPoint(2, -1, [0]), mp((1,), ()), mp((), (1,))) is Relation.EQUAL


def test_c_order_is_total_off_c_walls():
    p = ParamPoint(2, -1, [F(1, 3)])
    rel = c_order(p, 3)
    assert all(r is not Relation.INCOMPARABLE for r in rel.table.values())


# a-function

def test_a_examples():
    p = ParamPoint(1, 1, [])
    assert a_value(p, mp((1, 1))) == 1
    assert a_value(p, mp((2,))) == 0
    assert a_value(ParamPoint(3, 2, [1, 5]), top(3, 3)) == 0
    with pytest.raises(ValueError):
        a_value(ParamPoint(1, 0, []), mp((2,)))
    with pytest.raises(ValueError):
        a_value(ParamPoint(2, -1, [1]), mp((2,), ()))


def test_a_level_one_is_n_statistic():
    for n in range(1, 7):
        for h in (F(1), F(5, 3)):
            p = ParamPoint(1, h, [])
            for lam in partitions_of(n):
                assert a_value(p, mp(lam)) == h * n_statistic(lam)


def test_a_matches_sorted_pair_oracle():
    for ell, n in [(2, 3), (3, 2)]:
        for p in points_of(ell, n, "+"):
            for lam in enumerate_multipartitions(ell, n):
                assert a_value(p, lam) == a_direct(p, lam)


def test_a_compare():
    p = ParamPoint(1, 1, [])
    assert a_compare(p, mp((1, 1, 1)), mp((3,))) is Relation.GREATER


# A- and f-functions

def test_A_at_the_barycentre():
    for ell, n in [(2, 3), (3, 2)]:
        p = h_of_theta(one(ell))
        for lam in enumerate_multipartitions(ell, n):
            nu = tau(Charge((0,) * ell), componentwise_transpose(lam))
            assert A_value(p, lam) == F(n_statistic(nu), ell)


def test_empty_diagram():
    p = ParamPoint(2, -1, [F(1, 3)])
    assert A_value(p, empty(2)) == 0 and f_value(p, empty(2)) == 0


def test_f_minus_c_constant_example():
    p = ParamPoint(2, -1, [F(1, 3)])
    assert constant([f_value(p, x) - c_direct(p, x) for x in enumerate_multipartitions(2, 3)])


def test_f_minus_c_constant_per_chamber():
    for ell, n in [(1, 4), (2, 3), (3, 2)]:
        for p in points_of(ell, n):
            assert constant([f_value(p, x) - c_value(p, x) for x in enumerate_multipartitions(ell, n)])


def test_a_minus_A_constant_per_chamber():
    for ell, n in [(1, 4), (2, 3), (3, 2)]:
        for p in points_of(ell, n, "+"):
            assert constant([a_value(p, x) - A_value(p, x) for x in enumerate_multipartitions(ell, n)])


def test_A_is_linear_on_an_alcove_cone():
    for ell in (2, 3):
        for s in [(0,) * ell, (1,) + (0,) * (ell - 2) + (-1,)]:
            w = tuple(range(ell, 0, -1))
            base = base_point(s, w)
            nudge = tuple(F(1, 7 * ell) * (1 if i == 0 else -F(1, ell - 1)) for i in range(ell))
            t1 = base
            t2 = tuple(2 * x + e for x, e in zip(base, nudge))
            p1, p2 = h_of_theta(t1), h_of_theta(t2)
            p12 = h_of_theta([x + y for x, y in zip(t1, t2)])
            assert alcove_data(p1).s == alcove_data(p2).s == alcove_data(p12).s
            for lam in enumerate_multipartitions(ell, 2):
                assert A_value(p12, lam) == A_value(p1, lam) + A_value(p2, lam)
                assert A_value(h_of_theta([3 * x for x in t1]), lam) == 3 * A_value(p1, lam)


# the two halves of the f/c identity, straight on beta-sets

def _charges(ell, bound=2):
    for head in itertools.product(range(-bound, bound + 1), repeat=ell - 1):
        yield Charge(head + (-sum(head),))


def test_residue_sum_identity():
    # (1/l) sum of residues over tau_s(lam) versus the c-type expression in s
    for ell, n in [(2, 3), (3, 2), (3, 3)]:
        ground = enumerate_multipartitions(ell, n)
        for s in _charges(ell):
            diffs = []
            for lam in ground:
                lhs = F(sum(p - q for p, q in tau(s, lam).nodes()), ell)
                rhs = sum(transpose(lam[r - 1]).degree * (ell * s[r - 1] - ell * s[0] + r - 1)
                          for r in range(2, ell + 1))
                rhs += ell * (F(n * (n - 1), 2) + sum(n_statistic(transpose(x)) - n_statistic(x)
                                                      for x in lam))
                diffs.append(lhs - rhs)
            assert constant(diffs), s


def test_traceless_residue_identity():
    for ell, n in [(2, 3), (3, 2), (3, 3)]:
        ground = enumerate_multipartitions(ell, n)
        for s in _charges(ell):
            for tail in itertools.product(range(-2, 3), repeat=ell - 1):
                eps = (-sum(tail),) + tail
                diffs = []
                for lam in ground:
                    lhs = sum(eps[(p - q) % ell] * (p - q) for p, q in tau(s, lam).nodes())
                    rhs = ell * sum(lam[r - 1].degree * sum(eps[1:r]) for r in range(2, ell + 1))
                    diffs.append(lhs - rhs)
                assert constant(diffs), (s, eps)


def test_box_and_runner_sums_differ_by_a_constant():
    for ell, n in [(2, 1), (2, 2), (2, 3), (3, 2)]:
        for p in points_of(ell, n, "+"):
            ground = enumerate_multipartitions(ell, n)
            assert constant([a_box_sum(p, x) - a_runner_sum(p, x) for x in ground]), p


# geometric order

def test_geometric_examples():
    p = ParamPoint(2, -1, [10])
    assert geometric_compare(p, mp((), (1, 1)), mp((2,), ())) is Relation.LESS
    lam = mp((1,), (1,))
    assert geometric_compare(p, lam, lam) is Relation.EQUAL
    with pytest.raises(ValueError):
        geometric_order(ParamPoint(2, -1, [1]), 2)


def test_level_one_geometric_order():
    for n in range(1, 7):
        dom = partition_dominance_order(list(partitions_of(n)))
        neg = geometric_order(ParamPoint(1, -1, []), n)
        pos = geometric_order(ParamPoint(1, 1, []), n)
        for (i, j), r in dom.table.items():
            assert neg.table[i, j] is r
            assert pos.table[i, j] is r.flip()


def test_asymptotic_chamber_is_dominance():
    for ell, n in [(2, 3), (3, 2)]:
        assert geometric_order(ParamPoint(ell, -1, [n] * (ell - 1)), n).table == \
            dominance_order(ell, n).table


def test_order_constant_on_chambers():
    for ell, n in [(2, 3), (3, 2)]:
        for pts in chamber_points(ell, n).values():
            tables = [geometric_order(p, n).table for p in pts]
            assert all(t == tables[0] for t in tables)


def test_order_differs_between_some_chambers():
    tables = {tuple(sorted(geometric_order(pts[0], 3).table.items()))
              for pts in chamber_points(2, 3).values()}
    assert len(tables) > 1


def test_bar_duality_of_orders():
    for p in points_of(2, 3)[:6]:
        from cyclotomic_orders.params import bar_param
        a, b = geometric_order(p, 3), geometric_order(bar_param(p), 3)
        for x, y in itertools.combinations(a.ground, 2):
            assert a.compare(x, y) is b.compare(bar(x), bar(y))


# walls

def test_facet_examples():
    p = h_of_theta((F(2), F(0)))
    assert alcove_data(p, 1).J == (1,)
    classes = j_classes(p, 1)
    assert len(classes) == 1 and len(classes[0]) == 2
    assert facet_compare(p, 1, mp((1,), ()), mp((), (1,))) is Relation.EQUAL
    q = ParamPoint(2, -1, [F(1, 3)])
    assert facet_order(q, 3).table == geometric_order(q, 3).table
    assert all(len(c) == 1 for c in j_classes(q, 3))


def test_class_count_constant_along_a_facet():
    # two points on the wall H1 + h = 0 between the same pair of neighbours
    a, b = ParamPoint(2, -1, [1]), ParamPoint(2, -2, [2])
    for n in (2, 3):
        assert sorted(map(len, j_classes(a, n))) == sorted(map(len, j_classes(b, n)))


def test_wall_monotonicity_and_constant_c_on_classes():
    for ell, n in [(2, 2), (2, 3)]:
        for p in wall_points(ell, n).values():
            fo = facet_order(p, n)
            for i, j in fo.less_pairs():
                assert c_value(p, fo.ground[i]) >= c_value(p, fo.ground[j])
            for cls in j_classes(p, n):
                assert constant([c_value(p, x) for x in cls])


def test_closure_adds_nothing_at_small_grids():
    for ell, n in [(2, 2), (2, 3), (3, 2)]:
        for p in wall_points(ell, n).values():
            assert closure_additions(p, n) == []


def test_class_order_labels():
    rel = class_order(ParamPoint(2, -1, [0]), 2)
    assert "{[[2],[]]|[[],[2]]}" in rel.to_json()


# relations and Hasse diagrams

def test_hasse_examples():
    chain = OrderRelation.from_less([0, 1, 2], lambda a, b: a < b)
    assert hasse(chain) == [(0, 1), (1, 2)]
    anti = OrderRelation.from_less([0, 1, 2], lambda a, b: False)
    assert hasse(anti) == []
    dom = partition_dominance_order(list(partitions_of(4)))
    covers = {(dom.ground[i], dom.ground[j]) for i, j in hasse(dom)}
    assert covers == {((3, 1), (4,)), ((2, 2), (3, 1)), ((2, 1, 1), (2, 2)),
                      ((1, 1, 1, 1), (2, 1, 1))}


def test_relation_validation():
    with pytest.raises(ValueError):
        OrderRelation.from_less([0, 1, 2], lambda a, b: (a, b) in {(0, 1), (1, 2), (2, 0)})
    with pytest.raises(ValueError):
        OrderRelation.from_less([0, 1, 2], lambda a, b: (a, b) in {(0, 1), (1, 2)})


def test_dot_output_is_deterministic():
    rel = geometric_order(ParamPoint(2, -1, [10]), 1)
    assert to_dot(rel) == ('digraph order {\n  "[[1],[]]";\n  "[[],[1]]";\n'
                           '  "[[1],[]]" -> "[[],[1]]";\n}\n')


@given(st.sampled_from(enumerate_multipartitions(2, 3)), st.sampled_from(enumerate_multipartitions(2, 3)),
       rationals, rationals)
def test_refinement_by_c_property(lam, mu, h, H1):
    p = ParamPoint(2, h, [H1])
    if not is_git_regular(p, 3):
        return
    if geometric_compare(p, mu, lam) is Relation.LESS:
        assert c_value(p, lam) <= c_value(p, mu)
        if p.h > 0:
            assert a_value(p, mu) < a_value(p, lam)
