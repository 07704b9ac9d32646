import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from presto import (
    ApproximationGoal,
    bennett_sample_size_a,
    bennett_sample_size_e,
    bennett_tail,
    hoeffding_sample_size_a,
    variance_bound_factor,
)
from presto.bounds import bennett_h
from presto.errors import InfeasibleBudget, InvalidGoal

GOAL = ApproximationGoal(0.5, 0.1)
mpmath.mp.dps = 50


def _mp_hoeffding(ratio, eps, eta):
    return mpmath.ceil(mpmath.mpf(ratio) ** 2 / (2 * mpmath.mpf(eps) ** 2) * mpmath.log(2 / mpmath.mpf(eta)))


def _mp_bennett(ratio, eps, eta):
    e = mpmath.mpf(eps)
    h = (1 + e) * mpmath.log(1 + e) - e
    return mpmath.ceil((mpmath.mpf(ratio) - 1) / h * mpmath.log(2 / mpmath.mpf(eta)))


def test_reference_values():
    # ratio delta_T1 / ((c-1) delta) = 101 with c = 2, delta = 1
    assert hoeffding_sample_size_a(GOAL, 101.0, 2.0, 1.0) == 61119
    assert bennett_sample_size_a(GOAL, 101.0, 2.0, 1.0) == 2769
    assert bennett_sample_size_e(GOAL, 101) == 2769
    assert int(_mp_hoeffding(101, 0.5, 0.1)) == 61119
    assert int(_mp_bennett(101, 0.5, 0.1)) == 2769


@settings(max_examples=200, deadline=None)
@given(st.floats(1.5, 1e4), st.floats(0.05, 2.0), st.floats(0.001, 0.9))
def test_against_extended_precision(ratio, eps, eta):
    goal = ApproximationGoal(eps, eta)
    exact_h = _mp_hoeffding(ratio, eps, eta)
    exact_b = _mp_bennett(ratio, eps, eta)
    # one unit of slack covers values that land within rounding of an integer
    assert abs(hoeffding_sample_size_a(goal, ratio, 2.0, 1.0) - int(exact_h)) <= 1
    assert abs(bennett_sample_size_a(goal, ratio, 2.0, 1.0) - max(1, int(exact_b))) <= 1


def test_bennett_beats_hoeffding_for_wide_ranges():
    # at eps = 0.5 the two closed forms cross near ratio 3.16
    for ratio in (4, 10, 101, 1e4):
        for eps in (0.05, 0.1, 0.5, 1.0):
            goal = ApproximationGoal(eps, 0.1)
            assert bennett_sample_size_a(goal, ratio, 2.0, 1.0) <= hoeffding_sample_size_a(goal, ratio, 2.0, 1.0)


def test_e_edge_cases():
    assert bennett_sample_size_e(GOAL, 1) == 1
    with pytest.raises(InvalidGoal):
        bennett_sample_size_e(GOAL, 0)


def test_monotone_in_eta_and_eps():
    a = bennett_sample_size_e(ApproximationGoal(0.5, 0.05), 1000)
    b = bennett_sample_size_e(ApproximationGoal(0.5, 0.1), 1000)
    c = bennett_sample_size_e(ApproximationGoal(0.25, 0.1), 1000)
    assert a > b and c > b


def test_eps_scaling_hoeffding():
    r = 1000.0
    small = r**2 / (2 * 0.1**2) * math.log(20)
    big = r**2 / (2 * 0.2**2) * math.log(20)
    assert big / small == pytest.approx(0.25)
    assert hoeffding_sample_size_a(ApproximationGoal(0.2, 0.1), r, 2.0, 1.0) == math.ceil(big)


def test_infeasible():
    with pytest.raises(InfeasibleBudget):
        hoeffding_sample_size_a(ApproximationGoal(1e-6, 0.1), 1e6, 2.0, 1.0)


@pytest.mark.parametrize("eps, eta", [(0, 0.1), (-1, 0.1), (0.5, 0), (0.5, 1), (math.nan, 0.1)])
def test_invalid_goal(eps, eta):
    with pytest.raises(InvalidGoal):
        ApproximationGoal(eps, eta)


def test_bennett_h_small_values():
    for x in (1e-8, 1e-6, 5e-5, 2e-4, 0.3):
        assert bennett_h(x) == pytest.approx(float((1 + mpmath.mpf(x)) * mpmath.log1p(x) - x), rel=1e-9)


def test_variance_factor():
    assert variance_bound_factor("A", 101.0, 2.0, 1.0, s=100) == pytest.approx(1.0)
    assert variance_bound_factor("E", 1, s=7) == 0
    assert variance_bound_factor("E", 51, s=10) == 2 * variance_bound_factor("E", 51, s=20)


@settings(max_examples=200, deadline=None)
@given(st.floats(1, 1e4), st.floats(1, 1e4), st.floats(0.01, 100), st.floats(0.1, 10),
       st.floats(0.01, 10))
def test_tail_monotone(s1, s2, v1, B, t):
    lo, hi = sorted((s1, s2))
    assert bennett_tail(hi, v1, B, t) <= bennett_tail(lo, v1, B, t) * (1 + 1e-12)
    assert bennett_tail(s1, v1, B, t) <= bennett_tail(s1, v1 * 1.5, B, t) * (1 + 1e-12)


def test_tail_at_sample_size_meets_eta():
    # with v = C**2 (R - 1), B = C (R - 1) and t = eps C, the derived s drives the tail below eta
    for ratio in (2.0, 10.0, 101.0):
        s = bennett_sample_size_a(GOAL, ratio, 2.0, 1.0)
        assert bennett_tail(s, ratio - 1, ratio - 1, 0.5) <= 0.1 + 1e-12
