import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from combint.errors import InvalidSpec, ZeroPoint
from combint.graph import core
from combint.scalars import EllPoly, Padic, padic_log
from combint.tate import (
    TateCurveSpec,
    tate_delta,
    tate_expected,
    tate_graph,
    tate_loop_edges,
    tate_path_edges,
    tate_periods,
)
from combint.tensor import TruncatedTensor, is_grouplike
from combint.vologodsky import vologodsky, vologodsky_single

ELL = EllPoly.ell()


def test_one_component_is_a_petal():
    g = tate_graph(1)
    assert list(g.vertices) == ["v0"]
    assert g.closed == {"e0": ("v0", "v0")}
    assert g.betti == 1


@pytest.mark.parametrize("m", [1, 2, 3, 6])
def test_cycle_shape(m):
    g = tate_graph(m)
    assert len(g.vertices) == m == len(g.closed)
    assert g.betti == 1 and g.is_proper and core(g) == g


def test_triangle():
    g = tate_graph(3)
    assert sorted(g.closed.values()) == [("v0", "v1"), ("v1", "v2"), ("v2", "v0")]


def test_path_and_loop_edges():
    assert tate_path_edges(3, 0, 4) == ("e0", "e1", "e2", "e0")
    assert tate_path_edges(3, 2, -1) == ("-e1", "-e0", "-e2")
    assert tate_path_edges(2, 5, 5) == ()
    assert tate_loop_edges(3, 2) == ("e2", "e0", "e1")


def test_loop_periods():
    spec = TateCurveSpec.from_rationals(5, 2, 1, 7, 3)
    gamma = tate_periods(spec).loops["gamma"]
    assert gamma[(0,)] == ELL * 2
    assert gamma[(0, 0)] == EllPoly([0, 0, 2])
    assert gamma[(0, 0, 0)] == EllPoly([0, 0, 0, Fraction(8, 6)])


def test_equal_points_give_identity_path_periods():
    spec = TateCurveSpec.from_rationals(7, 3, Fraction(14, 3), Fraction(14, 3), 4)
    table = tate_periods(spec)
    assert table.path.periods == TruncatedTensor.one(1, 4, ("nu",))
    assert table.path.edges == ()
    assert table.check_grouplike(strict=True)


def test_path_follows_the_valuations():
    spec = TateCurveSpec.from_rationals(3, 2, Fraction(1, 9), 27, 1)
    assert (spec.a_lift, spec.b_lift) == (-2, 3)
    assert (spec.start, spec.end) == ("v0", "v1")
    assert tate_periods(spec).path.edges == ("e0", "e1", "e0", "e1", "e0")


@pytest.mark.parametrize("m", [1, 2, 3])
def test_one_to_p_has_no_vologodsky_integral(m):
    spec = TateCurveSpec.from_rationals(5, m, 1, 5, 4)
    assert tate_delta(spec) == 0
    assert tate_expected(spec) == TruncatedTensor.one(1, 4, ("nu",))
    assert vologodsky(tate_graph(m), tate_periods(spec)) == tate_expected(spec)


def test_unit_ratio_gives_plain_log():
    spec = TateCurveSpec.from_rationals(5, 2, 1, 30, 3)
    delta = tate_delta(spec)
    assert delta.degree == 0
    assert delta == padic_log(Padic.from_rational(6, 5, 20))
    assert tate_expected(spec)[(0, 0)] == delta * delta / 2


def random_point(rng, p):
    u = rng.randint(1, p ** 5)
    while u % p == 0:
        u += 1
    return Fraction(u, rng.choice([1, 2, 4])) * Fraction(p) ** rng.randint(-3, 3)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_delta_at_zero_is_log_of_unit_ratio(p, m, seed):
    rng = random.Random(seed)
    a, b = random_point(rng, p), random_point(rng, p)
    spec = TateCurveSpec.from_rationals(p, m, a, b, 1)
    ratio = Fraction(b / a) / Fraction(p) ** (spec.b_lift - spec.a_lift)
    assert tate_delta(spec).at_zero() == padic_log(Padic.from_rational(ratio, p, 20))
    assert tate_delta(spec).degree <= 0


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 3), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_engine_matches_closed_form_and_single(p, m, n, seed):
    rng = random.Random(seed)
    spec = TateCurveSpec.from_rationals(p, m, random_point(rng, p), random_point(rng, p), n)
    g, table = tate_graph(m), tate_periods(spec)
    got = vologodsky(g, table)
    assert got == tate_expected(spec)
    assert vologodsky_single(g, table) == [got[(0,)]]
    assert is_grouplike(got)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(1, 3), st.integers(0, 10 ** 6))
def test_changing_the_lift_changes_nothing(p, m, seed):
    rng = random.Random(seed)
    a, b = random_point(rng, p), random_point(rng, p)
    q = Fraction(p) ** m
    spec = TateCurveSpec.from_rationals(p, m, a, b, 3)
    moved = TateCurveSpec.from_rationals(p, m, a * q, b, 3)
    assert moved.a_lift == spec.a_lift + m
    assert moved.start == spec.start
    assert tate_expected(moved) == tate_expected(spec)
    assert vologodsky(tate_graph(m), tate_periods(moved)) == vologodsky(tate_graph(m), tate_periods(spec))


def test_spec_validation():
    one = Padic.from_rational(1, 5, 20)
    with pytest.raises(InvalidSpec):
        TateCurveSpec(5, 0, one, one, 2)
    with pytest.raises(InvalidSpec):
        TateCurveSpec(5, 1, one, one, -1)
    with pytest.raises(InvalidSpec):
        TateCurveSpec(5, 1, one, Padic.from_rational(1, 7, 20), 2)
    with pytest.raises(InvalidSpec):
        TateCurveSpec(5, 1, one, one, 2, a_lift=1)
    with pytest.raises(ZeroPoint):
        TateCurveSpec(5, 1, Padic.zero(5), one, 2)
    with pytest.raises(ZeroPoint):
        TateCurveSpec.from_rationals(5, 1, 1, 0, 2)
    with pytest.raises(ZeroPoint):
        TateCurveSpec(5, 1, one, Fraction(1), 2)
