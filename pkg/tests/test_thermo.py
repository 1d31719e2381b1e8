import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibfreeze.rauzy import bispecial_level, classify_word, purely_left_special
from fibfreeze.thermo import (
    EXCURSION,
    FREE,
    InvalidParameters,
    NotAReturnWord,
    PotentialParams,
    annotate_trajectory,
    annotation_violations,
    birkhoff_sum,
    classify_DW,
    depth_words,
    entry_exit_words,
    enumerate_return_words,
    find_DW_members,
    is_return_word,
    lambda_truncated,
    potential_value,
    trajectory_deltas,
    validate_params,
)
from fibfreeze.words import FactorOracle
from helpers import all_words, brute_delta, literal_return_word

N10 = PotentialParams(10, 1.0)
N5 = PotentialParams(5, 1.0)


@pytest.fixture(scope="module")
def oracle200():
    return FactorOracle.build(200)


@pytest.mark.parametrize(
    "u, expected",
    [("0", True), ("0001", True), ("00", False), ("00010001", False), ("0001000", False), ("", False)],
)
def test_is_return_word(u, expected):
    assert is_return_word(u) is expected


@given(st.text(alphabet="01", min_size=1, max_size=16))
def test_is_return_word_matches_literal_conditions(u):
    assert is_return_word(u) == literal_return_word(u)


def test_enumerate_return_words_small():
    assert list(enumerate_return_words(6)) == ["0", "0001", "00011", "000101", "000111"]


@pytest.mark.parametrize("L", range(1, 15))
def test_enumerate_agrees_with_brute_filter(L):
    got = [u for u in enumerate_return_words(L) if len(u) == L]
    assert got == [u for u in all_words(L) if literal_return_word(u)]


def test_enumerate_rejects_nonpositive():
    with pytest.raises(ValueError):
        list(enumerate_return_words(0))


@pytest.mark.parametrize(
    "N, A",
    [(4, 1.0), (12, 1.0), (7, 1.0), (10, 0.0), (10, -1.0), (10, math.inf), (10, math.nan), (True, 1.0), (10.0, 1.0)],
)
def test_invalid_parameters(N, A):
    with pytest.raises(InvalidParameters):
        PotentialParams(N, A)


def test_validate_params_coerces_A():
    assert validate_params(10, 2) == PotentialParams(10, 2.0)


def test_potential_value():
    assert potential_value(9, N10) == -1.0
    assert potential_value(10, N10) == -math.log1p(0.1)
    assert potential_value(20, N10) == pytest.approx(-math.log(21 / 20), rel=1e-15)
    with pytest.raises(ValueError):
        potential_value(-1, N10)


def test_trajectory_example(oracle200):
    u = "0001001010010010100101"
    ann = annotate_trajectory(u, N5, oracle200)
    assert ann.deltas[:3] == (2, 23, 22)
    assert ann.fe_transitions == (1,)
    assert ann.entry_bispecials == ("0",)
    assert ann.ef_transitions == (20,)
    assert ann.exit_word == "0100"
    assert ann.zones[0] == FREE and ann.zones[1] == EXCURSION


def test_annotate_rejects_non_return_word():
    with pytest.raises(NotAReturnWord):
        annotate_trajectory("0100", N10)


def test_trajectory_deltas_match_brute_force(oracle200):
    for u in enumerate_return_words(14):
        s = u + "000"
        assert trajectory_deltas(u, oracle200) == [brute_delta(s[k:]) for k in range(len(u))]


@pytest.mark.parametrize("params", [N5, N10, PotentialParams(8, 0.5)])
def test_annotation_invariants(params, oracle200):
    for u in enumerate_return_words(17):
        ann = annotate_trajectory(u, params, oracle200, check=False)
        assert annotation_violations(ann, params, oracle200) == []
        for k, w in zip(ann.fe_transitions, ann.entry_bispecials):
            assert w in entry_exit_words(params, oracle200)["entry"] or w == ""
        for w in ann.exit_words:
            assert w in entry_exit_words(params, oracle200)["exit"]


def test_empty_entry_word_is_possible(oracle200):
    # "11" before the excursion gives delta = 1, so the entry word is empty
    entries = set()
    for u in enumerate_return_words(16):
        entries.update(annotate_trajectory(u, N10, oracle200).entry_bispecials)
    assert "" in entries
    assert classify_word("", oracle200).kind == "bispecial"


def test_entry_exit_words(oracle200):
    ee = entry_exit_words(N10, oracle200)
    assert ee["entry"] == ["0", "010", "010010"]
    assert len(ee["exit"]) == 9
    assert purely_left_special(9, oracle200) in ee["exit"]


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=400), st.text(alphabet="01", min_size=12, max_size=12))
def test_birkhoff_sum_ignores_continuation(i, x):
    # delta over u.000.x, computed by brute force, never sees x
    u = list(enumerate_return_words(14))[i]
    s = u + "000" + x
    direct = math.fsum(potential_value(brute_delta(s[k:]), N10) for k in range(len(u)))
    assert birkhoff_sum(u, N10) == direct


def test_lambda_small_value():
    est = lambda_truncated(1.0, N10, 5)
    assert abs(est.partial_sum - (math.exp(-1) + math.exp(-4) + math.exp(-5))) <= 1e-15
    assert est.per_length_counts == (1, 0, 0, 1, 1)
    assert est.num_return_words == 3


def test_lambda_empty_and_errors():
    assert lambda_truncated(1.0, N10, 0).partial_sum == 0.0
    with pytest.raises(ValueError):
        lambda_truncated(0.0, N10, 5)
    with pytest.raises(ValueError):
        lambda_truncated(1.0, N10, -1)


def test_lambda_matches_direct_sum():
    terms = [math.exp(0.7 * birkhoff_sum(u, N10)) for u in enumerate_return_words(13)]
    assert lambda_truncated(0.7, N10, 13).partial_sum == math.fsum(terms)


def test_cumulative_sums_agree_with_shorter_runs():
    est = lambda_truncated(1.5, N10, 14)
    for L in (1, 4, 9, 13):
        assert est.partial_sum_upto(L) == lambda_truncated(1.5, N10, L).partial_sum


@pytest.mark.slow
def test_lambda_is_independent_of_worker_count():
    serial = lambda_truncated(1.0, N10, 19, workers=1)
    parallel = lambda_truncated(1.0, N10, 19, workers=3)
    assert serial == parallel


def test_workers_env(monkeypatch):
    from fibfreeze.thermo.returns import default_workers

    monkeypatch.setenv("FIBFREEZE_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("FIBFREEZE_WORKERS", "0")
    with pytest.raises(ValueError):
        default_workers()


def test_dw_members_and_depth_words(oracle200):
    lv = bispecial_level(4, oracle200)
    v = purely_left_special(4, oracle200)
    members = find_DW_members(lv, N5, oracle200, 60)
    assert members
    for u in members:
        dw = depth_words(annotate_trajectory(u, N5, oracle200), N5)
        assert dw.U0.startswith("0") and dw.U0.endswith(lv.W)
        assert dw.U1.startswith(lv.W) and dw.U1.endswith(lv.W)
        assert dw.U2.startswith(lv.W) and dw.U2.endswith(v)
        assert 1 < dw.l < dw.l_prime


@pytest.mark.parametrize("p", [4, 5])
def test_dw_candidates_are_complete(p, oracle200):
    lv = bispecial_level(p, oracle200)
    brute = [u for u in enumerate_return_words(20) if classify_DW(u, lv, N5, oracle200)]
    assert find_DW_members(lv, N5, oracle200, 21) == brute


def test_classify_dw_rejects_bad_input(oracle200):
    lv = bispecial_level(4, oracle200)
    with pytest.raises(ValueError):
        classify_DW("0100", lv, N5, oracle200)
    with pytest.raises(ValueError):
        classify_DW("0001", bispecial_level(3, oracle200), N5, oracle200)


def test_random_long_return_words_pass_invariants(oracle200):
    rng = random.Random(7)
    for _ in range(300):
        body = "".join(rng.choice("01") for _ in range(rng.randint(0, 60)))
        u = "0001" + body.replace("000", "010") + "1"
        if not is_return_word(u):
            continue
        ann = annotate_trajectory(u, N10, oracle200, check=False)
        assert annotation_violations(ann, N10, oracle200) == []
