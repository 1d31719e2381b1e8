import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibfreeze.thermo import (
    GAMMA,
    PotentialParams,
    beta_c_exclusion,
    hofbauer_beta_c,
    levels_PQ,
    lower_bound,
    zeta,
)
from fibfreeze.thermo.zeta import zeta_tail

N10 = PotentialParams(10, 1.0)


def test_basel_values():
    assert abs(zeta(2.0) - math.pi ** 2 / 6) < 1e-10
    assert abs(zeta(4.0) - math.pi ** 4 / 90) < 1e-10


@pytest.mark.parametrize("beta", [1.0, 0.5, -1.0])
def test_zeta_diverges_at_or_below_one(beta):
    assert zeta(beta) == math.inf


@settings(max_examples=80, deadline=None)
@given(st.floats(min_value=1.001, max_value=30.0))
def test_zeta_against_mpmath(beta):
    ref = float(mpmath.zeta(beta))
    assert zeta(beta) == pytest.approx(ref, rel=1e-11, abs=1e-12)


def test_zeta_near_pole():
    for eps in (1e-3, 1e-5):
        assert zeta(1 + eps) == pytest.approx(float(mpmath.zeta(1 + eps)), rel=1e-11)


def test_zeta_tail_error_is_small():
    tail, err = zeta_tail(3.0, 8)
    assert err <= 1e-12
    assert tail == pytest.approx(float(mpmath.zeta(3.0) - sum(mpmath.mpf(k) ** -3 for k in range(1, 8))), rel=1e-12)


def test_zeta_is_decreasing():
    vals = [zeta(b) for b in (1.1, 1.5, 2.0, 3.0, 5.0, 10.0)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize(
    "A, expected", [(math.log(math.pi ** 2 / 6), 2.0), (math.log(math.pi ** 4 / 90), 4.0)]
)
def test_hofbauer_inverts_basel(A, expected):
    assert abs(hofbauer_beta_c(A) - expected) < 1e-8


@pytest.mark.parametrize("A", [0.7, 0.05, 3.0])
def test_hofbauer_forward_check(A):
    b = hofbauer_beta_c(A)
    assert b > 1
    assert zeta(b) == pytest.approx(math.exp(A), rel=1e-8)


def test_hofbauer_rejects_nonpositive():
    with pytest.raises(ValueError):
        hofbauer_beta_c(0.0)


@pytest.mark.parametrize("N, P, Q", [(5, 4, 3), (10, 5, 4), (30, 8, 7)])
def test_levels(N, P, Q):
    lv = levels_PQ(PotentialParams(N, 1.0))
    assert (lv.P, lv.Q) == (P, Q)
    assert GAMMA ** lv.Q < N <= GAMMA ** lv.P


def test_levels_alternative_reading_at_five():
    lv = levels_PQ(PotentialParams(5, 1.0))
    assert lv.q_le == 2
    assert lv.discrepancies()


def test_levels_consistent_at_ten():
    assert levels_PQ(N10).consistent


@pytest.mark.parametrize("beta", [1.1, 1.5, 2.0])
def test_bound_is_infinite_up_to_two(beta):
    r = lower_bound(beta, N10)
    assert r.bound == math.inf
    assert r.divergent and not r.vacuous


def test_bound_grows_as_beta_approaches_two():
    vals = [lower_bound(2 + eps, N10).bound for eps in (0.1, 0.01, 0.001)]
    assert all(math.isfinite(v) for v in vals)
    assert vals[0] < vals[1] < vals[2]


def test_bound_closed_form():
    beta = 2.5
    r = lower_bound(beta, N10)
    zb, zb1 = float(mpmath.zeta(beta)), float(mpmath.zeta(beta - 1))
    expected = math.exp(-10) * (zb - 1) ** 2 * (zb1 - 2 * zb) / (GAMMA ** beta - 1)
    assert r.bound == pytest.approx(expected, rel=1e-10)
    assert (r.P, r.Q) == (5, 4)


def test_bound_vacuous_for_large_beta():
    r = lower_bound(3.5, N10)
    assert r.vacuous and r.bound < 0


def test_bound_rejects_beta_at_most_one():
    with pytest.raises(ValueError):
        lower_bound(1.0, N10)


def test_exclusion_report():
    rep = beta_c_exclusion(N10, max_len=12)
    assert rep.all_divergent
    assert rep.monotone
    assert rep.excluded


def test_exclusion_rejects_beta_outside_interval():
    with pytest.raises(ValueError):
        beta_c_exclusion(N10, betas=(2.5,))


def test_bound_finite_and_informative_just_above_two():
    r = lower_bound(2.1, N10)
    assert math.isfinite(r.bound) and r.bound > 0
    assert not r.vacuous


def test_bound_at_four_is_vacuous():
    # zeta(3) < 2 zeta(4)
    r = lower_bound(4.0, N10)
    assert r.vacuous and r.tw_lower < 0
