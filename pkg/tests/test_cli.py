import json
import subprocess
import sys

import pytest

from catalan_census.cli import format_decimal, main, parse_n_values, parse_range, UsageError
from fractions import Fraction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_rows(text):
    lines = text.strip().splitlines()
    header = lines[0].split(",")
    return [dict(zip(header, line.split(","))) for line in lines[1:]]


@pytest.mark.parametrize(
    "q, text",
    [
        (Fraction(4, 9), "0.444444444444"),
        (Fraction(0), "0.000000000000"),
        (Fraction(99998, 100000), "0.999980000000"),
        (Fraction(1), "1.00000000000"),
        (1 - Fraction(1, 10**15), "1.00000000000"),
        (Fraction(1, 3000), "0.000333333333333"),
    ],
)
def test_format_decimal(q, text):
    assert format_decimal(q) == text


def test_parse_range():
    assert parse_range("0..8") == (0, 8)
    for bad in ["5..3", "3..3", "a..b", "1..2..3", f"0..{2**62 + 1}"]:
        with pytest.raises(UsageError):
            parse_range(bad)


def test_parse_n_values():
    assert parse_n_values("pow2:1..4") == [2, 4, 8]
    assert parse_n_values("pow3:0..3") == [1, 3, 9]
    assert parse_n_values("9, 10,11") == [9, 10, 11]
    for bad in ["pow2:3..1", "1,,2", "x", "0"]:
        with pytest.raises(UsageError):
            parse_n_values(bad)


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "0..8")
    rows = csv_rows(out)
    assert code == 0 and len(rows) == 8
    assert rows[6]["valuation"] == "2" and rows[6]["mod3_residue"] == "0"
    code, out, _ = run(capsys, "classify", "0..1")
    assert csv_rows(out) == [
        {"n": "0", "alpha": "0", "valuation": "0", "mod3_residue": "1", "in_tstar_shifted": "true"}
    ]


def test_classify_with_k(capsys):
    code, out, _ = run(capsys, "classify", "4..7", "--k", "2")
    rows = csv_rows(out)
    assert [(r["divisible_2k"], r["half_residue_2k"]) for r in rows] == [
        ("false", "true"),
        ("false", "true"),
        ("true", "false"),
    ]


def test_classify_large_values(capsys):
    hi = 2**62
    code, out, _ = run(capsys, "classify", f"{hi - 2}..{hi}")
    assert code == 0 and len(csv_rows(out)) == 2


@pytest.mark.parametrize("rng", ["5..3", "x", f"0..{2**62 + 1}"])
def test_classify_bad_range(capsys, rng):
    code, out, err = run(capsys, "classify", rng)
    assert code == 2 and out == "" and "error" in err


def test_census_enumerate(capsys):
    code, out, err = run(capsys, "census", "--t", "3", "--enumerate")
    rows = csv_rows(out)
    assert code == 0
    assert rows[0]["k"] == "0"
    assert (rows[0]["formula_valuation"], rows[0]["enumerated_valuation"], rows[0]["agrees"]) == ("3", "4", "false")
    assert all(r["agrees"] == "true" for r in rows[1:])
    assert "1 of 4 rows disagree" in err


def test_census_formula_only(capsys):
    code, out, _ = run(capsys, "census", "--t", "4")
    rows = csv_rows(out)
    assert "enumerated_valuation" not in rows[0]
    assert rows[1]["formula_divisible"] == "11"


def test_census_t1(capsys):
    code, out, _ = run(capsys, "census", "--t", "1", "--enumerate")
    assert csv_rows(out)[0]["enumerated_valuation"] == "2"


def test_census_k_range(capsys):
    code, out, _ = run(capsys, "census", "--t", "6", "--k", "2..4")
    assert [r["k"] for r in csv_rows(out)] == ["2", "3"]


@pytest.mark.parametrize("argv", [["--t", "0"], ["--t", "12", "--enumerate", "--max-t", "10"]])
def test_census_errors(capsys, argv):
    code, _, _ = run(capsys, "census", *argv)
    assert code == 2


def test_density_pow2(capsys):
    code, out, _ = run(capsys, "density", "--k", "1", "pow2:1..12")
    rows = csv_rows(out)
    assert code == 0 and len(rows) == 11
    for t, r in enumerate(rows, start=1):
        assert Fraction(r["density_exact"]) == 1 - Fraction(t + 1, 2**t)
        assert r["density"] == format_decimal(1 - Fraction(t + 1, 2**t))


def test_density_mod3(capsys):
    code, out, _ = run(capsys, "density", "--mod3", "9")
    (row,) = csv_rows(out)
    assert (row["count"], row["density"], row["density_exact"]) == ("3", "0.333333333333", "1/3")


def test_density_one(capsys):
    code, out, _ = run(capsys, "density", "--k", "1", "1")
    assert csv_rows(out)[0]["density"] == "0.000000000000"


@pytest.mark.parametrize(
    "argv",
    [["--k", "1", "pow2:a..b"], ["--k", "1", "pow5:1..3"], ["--mod3", "--k", "1", "9"], ["9"],
     ["--k", "1", "--max-n-guard", "100", "101"], ["--k", "0", "8"]],
)
def test_density_errors(capsys, argv):
    code, _, _ = run(capsys, "density", *argv)
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n-max", "1", "--k-max", "1")
    assert code == 0 and csv_rows(out)[0]["n_checked"] == "1"
    code, out, _ = run(capsys, "verify", "--n-max", "2^14", "--k-max", "6")
    assert code == 0 and csv_rows(out)[0]["mismatches"] == "0"
    code, _, err = run(capsys, "verify", "--n-max", "10^9")
    assert code == 2 and "oracle bound" in err


def test_verify_mismatch_exit_1(capsys, monkeypatch):
    from catalan_census import oracle
    from catalan_census.classifier import Mod3Residue

    monkeypatch.setattr(oracle, "catalan_mod3", lambda n: Mod3Residue(n, 1, True, 0))
    code, out, _ = run(capsys, "verify", "--n-max", "10", "--k-max", "1")
    assert code == 1 and csv_rows(out)[0]["mismatches"] != "0"


@pytest.mark.parametrize(
    "argv",
    [["classify", "0..40"], ["census", "--t", "6", "--enumerate"], ["density", "--k", "2", "pow2:1..10"],
     ["density", "--mod3", "pow3:1..6"], ["verify", "--n-max", "50"]],
)
def test_json_lines_carry_same_values(capsys, argv):
    _, csv_out, _ = run(capsys, *argv)
    _, json_out, _ = run(capsys, *argv, "--format", "json-lines")
    csv_data = csv_rows(csv_out)
    json_data = [json.loads(line) for line in json_out.strip().splitlines()]
    assert len(csv_data) == len(json_data)
    for c, j in zip(csv_data, json_data):
        assert list(c) == list(j)
        for key, value in j.items():
            if value is None:
                assert c[key] == ""
            elif isinstance(value, bool):
                assert c[key] == ("true" if value else "false")
            else:
                assert c[key] == str(value)


def test_threads_do_not_change_output(capsys):
    _, a, _ = run(capsys, "density", "--k", "3", "pow2:10..17")
    _, b, _ = run(capsys, "density", "--k", "3", "pow2:10..17", "--threads", "4")
    assert a == b


def test_cli_subprocess_byte_identical():
    cmd = [sys.executable, "-m", "catalan_census", "census", "--t", "10", "--enumerate"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout.startswith(b"t,k,")
    bad = subprocess.run([sys.executable, "-m", "catalan_census", "classify", "5..3"], capture_output=True)
    assert bad.returncode == 2


def test_global_flags_before_or_after_subcommand(capsys):
    _, before, _ = run(capsys, "--format", "json-lines", "classify", "0..3")
    _, after, _ = run(capsys, "classify", "0..3", "--format", "json-lines")
    assert before == after and before.startswith("{")
    code, _, _ = run(capsys, "--max-n-guard", "2", "classify", "0..3")
    assert code == 2
