import json

import pytest

from sgdouble import classify, enumerate_even_doubles
from sgdouble.cli import main
from sgdouble import jsonio

from cases import S1, T1


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "--gens", "9,10,14,15")
    assert code == 0
    assert "frobenius           31" in out
    assert "pseudo-frobenius    5, 26, 31" in out
    assert "type                3" in out


def test_info_json_matches_library(capsys):
    code, data, _ = run_json(capsys, "info", "--gens", "3,5,7")
    assert code == 0
    assert jsonio.semigroup_from_dict(data["semigroup"]) == S1
    assert data["pseudo_frobenius"] == [2, 4]
    assert data["minimal_generators"] == [3, 5, 7]


def test_classify_small_elements_input(capsys):
    code, out, _ = run(
        capsys, "classify", "--small", "0,8,9,10,11,12,13", "--conductor", "16"
    )
    assert code == 0
    assert "symmetry class      none" in out


def test_classify_method_flag(capsys):
    code, data, _ = run_json(capsys, "classify", "--gens", "3,5,7", "--method", "pairing")
    assert code == 0
    assert data["report"]["symmetry_class"] == "pseudo-symmetric"


def test_double(capsys):
    code, data, _ = run_json(
        capsys, "double", "--gens", "3,5,7",
        "--ideal", "0,2", "--ideal-conductor", "3", "--b", "3",
    )
    assert code == 0
    assert data["double"] == {"small": [0, 3, 6, 7], "conductor": 9}
    assert jsonio.report_from_dict(data["report"]).pseudo_symmetric


def test_half(capsys):
    code, data, _ = run_json(capsys, "half", "--gens", "9,10,14,15")
    assert code == 0
    assert data["semigroup"] == {"small": [0, 5, 7, 9, 10, 12], "conductor": 14}


def test_decompose(capsys):
    code, data, _ = run_json(capsys, "decompose", "--gens", "9,10,14,15", "--b", "5")
    assert code == 0
    spec = jsonio.spec_from_dict(data["spec"])
    assert spec.odd_offset == 5
    assert spec.ideal.elements_below == (2, 5, 7, 9, 10, 11, 12)


def test_enumerate_even_round_trips(capsys):
    code, data, _ = run_json(
        capsys, "enumerate-doubles", "--gens", "3,5,7", "--parity", "even"
    )
    assert code == 0
    fam = jsonio.family_from_dict(data)
    assert fam == enumerate_even_doubles(S1)
    assert data["exhaustive"] is True
    assert [m["class"] for m in data["members"]] == ["even-almost-symmetric"] * 3
    assert [m["type"] for m in data["members"]] == [2, 2, 4]


def test_enumerate_symmetric(capsys):
    code, data, _ = run_json(
        capsys, "enumerate-doubles", "--gens", "3,5,7",
        "--parity", "symmetric", "--max-frobenius", "15",
    )
    assert code == 0
    assert len(data["members"]) == 3  # f(T) = 11, 13, 15


def test_enumerate_requires_bound_for_odd(capsys):
    code, _, err = run(capsys, "enumerate-doubles", "--gens", "3,5,7", "--parity", "odd")
    assert code == 2
    assert "max-frobenius" in err


def test_witness_even(capsys):
    code, data, _ = run_json(capsys, "witness-even", "--gens", "3,5,7")
    assert code == 0
    assert data["spec"]["b"] == 5
    assert data["double"] == {"small": [0, 5, 6, 7], "conductor": 9}


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "enumerate-doubles", "--gens", "3,5,7", "--parity", "even")
    _, second, _ = run(capsys, "enumerate-doubles", "--gens", "3,5,7", "--parity", "even")
    assert first == second


def test_domain_error_exit_code(capsys):
    code, _, err = run(capsys, "double", "--gens", "3,5,7",
                       "--ideal", "0,2", "--ideal-conductor", "3", "--b", "4")
    assert code == 1
    assert "error" in err


def test_domain_error_json_payload(capsys):
    code, data, _ = run_json(capsys, "decompose", "--gens", "9,10,14,15", "--b", "11")
    assert code == 1
    assert data["error"]["type"] == "InvalidB"


def test_usage_error_missing_semigroup(capsys):
    code, _, err = run(capsys, "info")
    assert code == 2
    assert "usage error" in err


def test_usage_error_unknown_command(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-frobenius", "5")
    assert code == 0
    assert "all checks passed" in out


def test_verify_json(capsys):
    code, data, _ = run_json(capsys, "verify", "--max-frobenius", "4", "--seed", "7")
    assert code == 0
    assert data["ok"] is True
    assert {c["name"] for c in data["checks"]} == {
        "classifier-agreement", "ideal-duality", "duplication-roundtrip",
        "theorem-checkers", "families-vs-oracle",
    }


def test_negative_ideal_elements_parse(capsys):
    # decompose T1 at b=15 gives an ideal reaching -3; feed it back through double
    code, data, _ = run_json(capsys, "decompose", "--gens", "9,10,14,15", "--b", "15")
    assert code == 0
    elements = ",".join(map(str, data["spec"]["e"]["elements"]))
    cond = str(data["spec"]["e"]["conductor"])
    small = ",".join(map(str, data["spec"]["s"]["small"]))
    code2, data2, _ = run_json(
        capsys, "double", "--small", small, "--conductor", str(data["spec"]["s"]["conductor"]),
        f"--ideal={elements}", "--ideal-conductor", cond, "--b", "15",
    )
    assert code2 == 0
    assert jsonio.semigroup_from_dict(data2["double"]) == T1
