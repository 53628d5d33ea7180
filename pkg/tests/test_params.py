import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclotomic_orders.multipartitions import MultiPartition, enumerate_multipartitions
from cyclotomic_orders.params import (
    ParamPoint,
    WallForm,
    bar_param,
    c_wall_forms,
    format_param,
    git_walls,
    h_of_theta,
    is_git_regular,
    on_c_wall,
    parse_param,
    parse_wall,
    theta_of_h,
    walls_through,
)
from cyclotomic_orders.partitions import Partition

from oracles import c_direct, primitive
from strategies import rationals

F = Fraction


def walls(ell, *names):
    return {parse_wall(x, ell) for x in names}


def test_point_invariants():
    p = ParamPoint(3, F(-1, 2), [F(1, 3), F(2, 5)])
    assert sum(p.H_full()) == 0
    assert sum(p.theta) == -p.h
    assert p.H_prefix(1) == 0 and p.H_prefix(3) == F(11, 15)
    with pytest.raises(TypeError):
        ParamPoint(2, -1.0, [0])
    with pytest.raises(ValueError):
        ParamPoint(3, -1, [0])


def test_text_forms():
    p = ParamPoint(3, -1, [F(1, 3), F(2, 5)])
    assert format_param(p) == "h=-1 H=1/3,2/5"
    assert parse_param("h=-1 H=1/3,2/5") == p
    assert str(parse_wall("H1+2h", 2)) == "H1+2h"
    assert str(WallForm.from_vector([-2, -4, 0])) == "2H1+h"
    assert str(WallForm.from_vector([F(1, 2), 0, F(-1, 3)])) == "-2H2+3h"


def test_theta_examples():
    assert theta_of_h(ParamPoint(2, -1, [0])) == (1, 0)
    assert theta_of_h(ParamPoint(3, -1, [0, 0])) == (1, 0, 0)


def test_git_wall_examples():
    assert git_walls(1, 4) == walls(1, "h")
    assert git_walls(2, 3) == walls(2, "h", "H1", "H1+h", "H1-h", "H1+2h", "H1-2h")
    assert git_walls(2, 1) == walls(2, "h", "H1")


def test_git_wall_counts():
    for n in range(1, 7):
        assert len(git_walls(2, n)) == 2 * n
    # three root sums, 2n - 1 shifts each, plus h
    for n in range(1, 5):
        assert len(git_walls(3, n)) == 3 * (2 * n - 1) + 1


def test_c_wall_examples():
    assert c_wall_forms(1, 2) == walls(1, "h")
    assert c_wall_forms(2, 1) == walls(2, "H1")
    assert git_walls(2, 3) <= c_wall_forms(2, 3)


def test_c_walls_match_direct_formula():
    # oracle: the difference of two c-values is linear, so three evaluations
    # recover its coefficients
    for ell, n in [(1, 4), (2, 3), (3, 2)]:
        basis = [ParamPoint(ell, 1, [0] * (ell - 1))] + [
            ParamPoint(ell, 0, [1 if k == i else 0 for k in range(ell - 1)]) for i in range(ell - 1)]
        forms = set()
        for lam, mu in itertools.combinations(enumerate_multipartitions(ell, n), 2):
            vec = [c_direct(b, lam) - c_direct(b, mu) for b in basis]
            if any(vec):
                forms.add(primitive(vec))
        assert {w.coefficients for w in c_wall_forms(ell, n)} == forms


def test_git_refines_into_c_walls():
    for ell in (1, 2, 3):
        for n in range(2, 5):
            assert git_walls(ell, n) <= c_wall_forms(ell, n)


def test_degree_one_has_no_h_wall():
    # with n = 1 every c-value is free of h, so the form h is not a c-wall
    for ell in (1, 2, 3, 4):
        assert git_walls(ell, 1) - c_wall_forms(ell, 1) == walls(ell, "h")


def test_regularity_examples():
    assert is_git_regular(ParamPoint(2, -1, [F(1, 3)]), 3)
    assert not is_git_regular(ParamPoint(2, 0, [F(1, 3)]), 3)
    p = ParamPoint(2, -1, [2])
    assert walls_through(p, 3) == walls(2, "H1+2h")
    assert on_c_wall(p, 3)


def test_bar_param_examples():
    assert bar_param(ParamPoint(2, F(1, 3), [5])) == ParamPoint(2, F(-1, 3), [-5])
    p = ParamPoint(3, 2, [1, 7])
    assert bar_param(p) == ParamPoint(3, -2, [-7, -1])
    assert bar_param(bar_param(p)) == p


def test_bar_preserves_wall_sets():
    for ell, n in [(2, 3), (3, 3)]:
        for form in git_walls(ell, n):
            a_h, *a = form.coefficients
            image = WallForm.from_vector([-a_h] + [-x for x in reversed(a)])
            assert image in git_walls(ell, n)


@given(st.integers(1, 4).flatmap(
    lambda ell: st.lists(rationals, min_size=ell, max_size=ell)))
def test_theta_roundtrip(theta):
    p = h_of_theta(theta)
    assert p.theta == tuple(theta)
    assert sum(p.theta) == -p.h
    assert h_of_theta(theta_of_h(p)) == p


@given(rationals, rationals)
def test_bar_preserves_regularity(h, H1):
    p = ParamPoint(2, h, [H1])
    assert is_git_regular(p, 3) == is_git_regular(bar_param(p), 3)
    assert bar_param(bar_param(p)) == p


@given(st.lists(st.integers(-9, 9), min_size=3, max_size=3).filter(any))
def test_wall_form_normalization(vec):
    w = WallForm.from_vector(vec)
    assert WallForm.from_vector([-3 * x for x in vec]) == w
    assert next(x for x in w.coefficients if x) > 0
    assert parse_wall(str(w), 3) == w


@given(st.sampled_from(enumerate_multipartitions(3, 3)), rationals, rationals, rationals)
def test_c_value_is_the_displayed_formula(lam, h, H1, H2):
    from cyclotomic_orders.orders import c_value
    p = ParamPoint(3, h, [H1, H2])
    assert c_value(p, lam) == c_direct(p, lam)
