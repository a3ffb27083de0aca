import json

import pytest

from spechtex.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_both_agreement(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--p", "3", "--lambda", "1,1,1,1", "--method", "both"
    )
    assert code == 0
    assert "h0 = 0" in out
    assert "ext1_B = 1" in out
    assert "oracle ext1_B = 1" in out


def test_classify_json_schema_and_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--p", "3", "--lambda", "1,1,1,1", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert list(payload.keys()) == ["p", "lambda", "h0", "ext1_B", "h1", "case", "witness"]
    assert payload["p"] == 3
    assert payload["lambda"] == [1, 1, 1, 1]
    assert payload["h0"] == 0
    assert payload["ext1_B"] == 1
    assert payload["h1"] == {"value": 1, "exact": True}
    assert payload["witness"] and all(
        set(w) == {"r", "s", "i", "v"} for w in payload["witness"]
    )
    assert json.dumps(payload) == out.strip()


def test_classify_p2_reports_lower_bound(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--p", "2", "--lambda", "2,1,1", "--method", "closed"
    )
    assert code == 0
    assert "h1 >= 1" in out

    code, out, _ = run_cli(
        capsys, "classify", "--p", "2", "--lambda", "2,1,1", "--json"
    )
    payload = json.loads(out)
    assert payload["h1"] == {"value": 1, "exact": False}


def test_classify_single_row(capsys):
    code, out, _ = run_cli(capsys, "classify", "--p", "3", "--lambda", "7")
    assert code == 0
    assert "h0 = 1" in out and "ext1_B = 0" in out


def test_classify_trailing_zeros_tolerated(capsys):
    code, out, _ = run_cli(capsys, "classify", "--p", "3", "--lambda", "4,2,1,0,0", "--json")
    assert code == 0
    assert json.loads(out)["lambda"] == [4, 2, 1]


def test_classify_oracle_method(capsys):
    code, out, _ = run_cli(
        capsys, "classify", "--p", "2", "--lambda", "2,1,1,1", "--method", "oracle", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ext1_B"] == 0 and payload["case"] == "oracle"


def test_usage_error_bad_partition(capsys):
    code, _, err = run_cli(capsys, "classify", "--p", "3", "--lambda", "1,2")
    assert code == 2
    assert "error" in err


def test_usage_error_bad_prime(capsys):
    code, _, err = run_cli(capsys, "classify", "--p", "4", "--lambda", "2,1")
    assert code == 2
    assert "error" in err


def test_usage_error_unparseable(capsys):
    code, _, err = run_cli(capsys, "classify", "--p", "3", "--lambda", "1,x")
    assert code == 2


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_sweep_check_clean(capsys):
    code, out, err = run_cli(
        capsys, "sweep", "--p", "3", "--d-max", "6", "--check"
    )
    assert code == 0
    lines = out.strip().splitlines()
    report = json.loads(lines[-1])
    assert report["mismatches"] == []
    assert report["p"] == 3 and report["d_max"] == 6
    # p(0) + ... + p(6) = 1+1+2+3+5+7+11.
    assert report["instances"] == 30
    # Mismatch lines would precede the report; none expected.
    assert len(lines) == 1
    assert json.dumps(report) == lines[-1]


def test_sweep_parts_max(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--p", "5", "--d-max", "5", "--parts-max", "2", "--check"
    )
    assert code == 0
    report = json.loads(out.strip().splitlines()[-1])
    assert report["parts_max"] == 2
    # Partitions into at most two parts: 1 + sum_{d=1..5} (1 + floor(d/2)).
    assert report["instances"] == 12


def test_basis_pointed_pair(capsys):
    code, out, _ = run_cli(capsys, "basis", "--p", "3", "--lambda", "9,3")
    assert code == 0
    assert out.startswith("dim E = 2")
    assert "y(1,2)_3 = " in out


def test_basis_dimension_zero(capsys):
    code, out, _ = run_cli(capsys, "basis", "--p", "3", "--lambda", "5")
    assert code == 0
    assert out.strip() == "dim E = 0"


def test_basis_james_line(capsys):
    code, out, _ = run_cli(capsys, "basis", "--p", "3", "--lambda", "8,1")
    assert code == 0
    assert out.startswith("dim E = 1")


def test_sl2_parity_and_zero(capsys):
    code, out, _ = run_cli(capsys, "sl2", "--p", "3", "--r", "5", "--s", "2")
    assert code == 0 and "parity" in out
    code, out, _ = run_cli(capsys, "sl2", "--p", "3", "--r", "4", "--s", "4")
    assert code == 0 and "dim = 0" in out


def test_classify_both_agrees_over_small_sweep(capsys):
    from spechtex.partitions import enumerate_partitions

    for p in (2, 3, 5):
        for d in range(0, 13):
            for lam in enumerate_partitions(d, max(d, 1)):
                text = ",".join(str(x) for x in lam.parts) or "0"
                code = main(
                    ["classify", "--p", str(p), "--lambda", text, "--method", "both", "--json"]
                )
                assert code == 0, (p, lam.parts)
    capsys.readouterr()


def test_sl2_json(capsys):
    code, out, _ = run_cli(capsys, "sl2", "--p", "2", "--r", "4", "--s", "0", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim"] == 1 and payload["reason"] == "pointed-window"
    assert json.dumps(payload) == out.strip()
