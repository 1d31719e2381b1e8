import csv
import io
import json
import subprocess
import sys

import pytest

from fibfreeze.cli import BOUND_FIELDS, LAMBDA_FIELDS, fmt, main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_word_by_level_and_length():
    assert run("word", "--level", "5") == (0, "0100101001001\n")
    assert run("word", "--length", "8") == (0, "01001010\n")


def test_factors_json_and_classify():
    code, text = run("factors", "--length", "2", "--json")
    assert code == 0 and json.loads(text) == ["00", "01", "10"]
    code, text = run("factors", "--length", "3", "--classify")
    assert "010  bispecial" in text


def test_rauzy_json():
    code, text = run("rauzy", "--order", "2", "--json")
    data = json.loads(text)
    assert code == 0
    assert data["branching"] == "10" and data["merging"] == "01"
    assert len(data["edges"]) == 4


def test_rauzy_dot():
    code, text = run("rauzy", "--order", "3", "--dot")
    assert code == 0 and text.startswith("digraph")


def test_bispecial_and_loops():
    code, text = run("bispecial", "--p", "3", "--json")
    assert json.loads(text) == {"p": 3, "W": "010", "R1": "010", "R2": "10"}
    code, text = run("loops", "--p", "2", "--n", "3", "--json")
    assert json.loads(text) == ["001", "010", "100", "101"]


def test_returns_csv():
    code, text = run("returns", "--max-len", "5", "--csv")
    assert text.splitlines() == ["length,word", "1,0", "4,0001", "5,00011"]


def test_annotate_table():
    code, text = run("annotate", "--word", "0001", "--N", "10", "--A", "1")
    assert code == 0
    assert "accident" in text


def test_annotate_rejects_non_return_word():
    code, _ = run("annotate", "--word", "0100", "--N", "10", "--A", "1")
    assert code == 2


def test_lambda_csv_schema():
    code, text = run("lambda", "--beta", "1", "--N", "10", "--A", "1", "--max-len", "5", "--csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0
    assert list(rows[0]) == LAMBDA_FIELDS
    assert rows[0]["partial_sum"] == "0.39293302705926197"
    assert rows[0]["num_return_words"] == "3"


def test_lambda_sweep():
    code, text = run("lambda", "--sweep", "1:2:0.5", "--N", "10", "--A", "1", "--max-len", "5", "--csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [r["beta"] for r in rows] == ["1", "1.5", "2"]
    sums = [float(r["partial_sum"]) for r in rows]
    assert sums == sorted(sums, reverse=True)


def test_bound_csv_schema_and_inf_token():
    code, text = run("bound", "--beta", "1.5", "--N", "10", "--A", "1", "--csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == BOUND_FIELDS
    assert rows[0]["bound"] == "inf"
    assert rows[0]["zeta_beta_minus_1"] == "inf"


def test_bound_vacuous_flag():
    code, text = run("bound", "--beta", "2.5", "--N", "10", "--A", "1", "--csv")
    row = next(csv.DictReader(io.StringIO(text)))
    assert row["vacuous"] == "true"
    assert (row["P"], row["Q"]) == ("5", "4")


def test_exclusion_verdict():
    code, text = run("exclusion", "--N", "10", "--A", "1", "--max-len", "10")
    assert code == 0
    assert "verdict: beta_c not in (0, 2]" in text


@pytest.mark.parametrize(
    "argv",
    [
        ("bound", "--beta", "2.5", "--N", "12", "--A", "1"),
        ("bound", "--beta", "2.5", "--N", "10", "--A", "0"),
        ("lambda", "--beta", "1", "--N", "10", "--A", "1"),
        ("word", "--level", "-1"),
        ("factors", "--length", "0"),
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    try:
        code, _ = run(*argv)
    except SystemExit as e:
        code = e.code
    assert code == 2


def test_outputs_are_deterministic():
    args = ("lambda", "--sweep", "0.5:1.5:0.25", "--N", "10", "--A", "0.5", "--max-len", "12", "--csv")
    assert run(*args) == run(*args)


def test_fmt():
    assert fmt(float("inf")) == "inf"
    assert fmt(True) == "true"
    assert fmt(0.1) == "0.10000000000000001"
    assert fmt(5) == "5"


def test_verify_suite_json():
    code, text = run("verify", "--suite", "bicephalic")
    data = json.loads(text)
    assert code == 0
    assert data["failures"] == [] and data["cases_run"] > 0


def test_console_script_runs():
    res = subprocess.run(
        [sys.executable, "-m", "fibfreeze.cli", "word", "--level", "3"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and res.stdout == "01001\n"
