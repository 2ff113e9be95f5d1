import json

import pytest

from kronkit.cli import main

OUTSIDE = {"lambda_A": [2], "lambda_B": [2], "lambda_C": [1, 1], "k": 2}
INSIDE = {"lambda_A": [1, 1], "lambda_B": [1, 1], "lambda_C": [1, 1], "k": 2}
BELL_TARGET = {"lambda_A": [1, 1], "lambda_B": [1, 1], "lambda_C": [2], "k": 2}
CORNER = {"lambda_A": [2], "lambda_B": [2], "lambda_C": [2], "k": 2, "m": 2}

WORKED_CERT = {"H": [[-1, 1], [-1, 1], [1, -1]], "z": -1, "p": [1, 0, 0]}
GHZ_CERT = {
    "m": 2,
    "entries": [
        {"idx": [1, 1, 1], "re": "1/1", "im": "0/1"},
        {"idx": [2, 2, 2], "re": "1/1", "im": "0/1"},
    ],
}
BELL_CERT = {
    "m": 2,
    "entries": [
        {"idx": [1, 1, 1], "re": "1/1", "im": "0/1"},
        {"idx": [2, 2, 1], "re": "1/1", "im": "0/1"},
    ],
}


def jfile(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def test_verify_nonmembership_accept(tmp_path, capsys):
    code = main([
        "verify-nonmembership",
        jfile(tmp_path, "inst.json", OUTSIDE),
        jfile(tmp_path, "cert.json", WORKED_CERT),
    ])
    out = capsys.readouterr().out
    assert code == 0
    assert "Accept" in out and "H·lambda = -4 < k·z = -2" in out


def test_verify_nonmembership_reject(tmp_path, capsys):
    code = main([
        "verify-nonmembership",
        jfile(tmp_path, "inst.json", INSIDE),
        jfile(tmp_path, "cert.json", WORKED_CERT),
    ])
    assert code == 1
    assert "InequalityNotViolated" in capsys.readouterr().out


def test_verify_nonmembership_json_output(tmp_path, capsys):
    code = main([
        "verify-nonmembership",
        jfile(tmp_path, "inst.json", OUTSIDE),
        jfile(tmp_path, "cert.json", WORKED_CERT),
        "--json",
    ])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "Accept"
    assert payload["violated_inequality"] == {"H.lambda": -4, "k.z": -2}


def test_verify_nonmembership_malformed_json(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code = main([
        "verify-nonmembership",
        str(bad),
        jfile(tmp_path, "cert.json", WORKED_CERT),
    ])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_verify_nonmembership_inconsistent_instance(tmp_path, capsys):
    unbalanced = {"lambda_A": [3], "lambda_B": [2], "lambda_C": [2], "k": 2}
    code = main([
        "verify-nonmembership",
        jfile(tmp_path, "inst.json", unbalanced),
        jfile(tmp_path, "cert.json", WORKED_CERT),
    ])
    assert code == 2


def test_verify_nonmembership_rank_mismatch_is_malformed(tmp_path):
    inst3 = {
        "lambda_A": [1, 1, 1],
        "lambda_B": [1, 1, 1],
        "lambda_C": [1, 1, 1],
        "k": 3,
    }
    code = main([
        "verify-nonmembership",
        jfile(tmp_path, "inst.json", inst3),
        jfile(tmp_path, "cert.json", WORKED_CERT),
    ])
    assert code == 2


def test_verify_membership_accept(tmp_path, capsys):
    code = main([
        "verify-membership",
        jfile(tmp_path, "inst.json", INSIDE),
        jfile(tmp_path, "cert.json", GHZ_CERT),
        "--json",
    ])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "Accept(InThreshold)"
    assert payload["gap2"] == "0/1"
    assert payload["threshold2"] == f"1/{2**52}"


def test_verify_membership_reject(tmp_path, capsys):
    code = main([
        "verify-membership",
        jfile(tmp_path, "inst.json", CORNER),
        jfile(tmp_path, "cert.json", BELL_CERT),
        "--json",
    ])
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "Reject(OutOfThreshold)"
    assert payload["gap2"] == "1/1"


def test_find_witness_then_verify(tmp_path, capsys):
    inst = jfile(tmp_path, "inst.json", INSIDE)
    out_path = str(tmp_path / "witness.json")
    assert main(["find-witness", inst, "--out", out_path]) == 0
    assert main(["verify-membership", inst, out_path]) == 0
    assert "Accept" in capsys.readouterr().out


def test_find_witness_not_found(tmp_path, capsys):
    inst = jfile(tmp_path, "inst.json", OUTSIDE)
    out_path = tmp_path / "witness.json"
    code = main(["find-witness", inst, "--out", str(out_path)])
    assert code == 1
    assert "NotFound" in capsys.readouterr().out
    assert not out_path.exists()


def test_facets_rank_one_stdout(capsys):
    assert main(["facets", "--m", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["m"] == 1 and payload["nontrivial"] == []


def test_facets_irredundant_writes_file(tmp_path, capsys):
    out_path = tmp_path / "facets.json"
    code = main(["facets", "--m", "2", "--irredundant", "--out", str(out_path)])
    assert code == 0
    first = out_path.read_bytes()
    payload = json.loads(first)
    assert len(payload["nontrivial"]) == 3
    assert len(payload["chamber"]["inequalities"]) == 3
    capsys.readouterr()
    # reruns are byte-identical
    assert main(["facets", "--m", "2", "--irredundant", "--out", str(out_path)]) == 0
    assert out_path.read_bytes() == first


def test_facets_rank_cap(capsys):
    assert main(["facets", "--m", "9"]) == 2
    assert "error:" in capsys.readouterr().err


def test_facets_budget_exceeded(capsys):
    assert main(["facets", "--m", "2", "--budget", "5"]) == 2
    capsys.readouterr()


def test_kron_positive(capsys):
    assert main(["kron", "2,1", "2,1", "2,1"]) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_kron_zero(capsys):
    assert main(["kron", "2", "2", "1,1"]) == 1
    assert capsys.readouterr().out.strip() == "0"


def test_kron_malformed(capsys):
    assert main(["kron", "2,x", "2", "2"]) == 2
    assert main(["kron", "1,2", "3", "3"]) == 2  # rows must be non-increasing
    assert main(["kron", "2", "2", "3"]) == 2  # box counts differ
    capsys.readouterr()


def test_kron_cap(capsys):
    assert main(["kron", "13", "13", "13"]) == 2
    assert main(["kron", "5", "5", "5", "--cap", "4"]) == 2
    assert main(["kron", "5", "5", "5", "--cap", "5"]) == 0
    capsys.readouterr()


def test_member_bruteforce(tmp_path, capsys):
    triple = {"lambda_A": [2, 1], "lambda_B": [2, 1], "lambda_C": [2, 1], "k": 3}
    assert main(["member-bruteforce", jfile(tmp_path, "a.json", triple)]) == 0
    assert capsys.readouterr().out.strip() == "Yes(1)"

    inst = jfile(tmp_path, "b.json", INSIDE)
    assert main(["member-bruteforce", inst, "--lmax", "1"]) == 1
    assert capsys.readouterr().out.strip() == "Unknown"
    assert main(["member-bruteforce", inst, "--lmax", "2"]) == 0
    assert capsys.readouterr().out.strip() == "Yes(2)"

    assert main(["member-bruteforce", jfile(tmp_path, "c.json", OUTSIDE)]) == 1
    capsys.readouterr()


def test_member_bruteforce_cap(tmp_path, capsys):
    inst = jfile(tmp_path, "inst.json", INSIDE)
    assert main(["member-bruteforce", inst, "--lmax", "7"]) == 2
    assert main(["member-bruteforce", inst, "--lmax", "7", "--cap", "14"]) == 0
    capsys.readouterr()


def test_sample_stdout_and_determinism(tmp_path, capsys):
    assert main(["sample", "--m", "1", "--n", "5"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == 5
    for line in lines:
        values = [float(tok) for tok in line.split(",")]
        assert values == pytest.approx([1.0, 1.0, 1.0], abs=1e-12)

    out_path = tmp_path / "spectra.csv"
    assert main(["sample", "--m", "2", "--n", "10", "--seed", "3",
                 "--out", str(out_path)]) == 0
    first = out_path.read_bytes()
    capsys.readouterr()
    assert main(["sample", "--m", "2", "--n", "10", "--seed", "3",
                 "--out", str(out_path)]) == 0
    assert out_path.read_bytes() == first
    capsys.readouterr()


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
