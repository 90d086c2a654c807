import json
import subprocess
import sys
from fractions import Fraction

from conedual import ExtVec, parse_extreal, verify_meets_corner, verify_separated
from conedual.cli import main


def run_cli(tmp_path, command, payload=None, extra=()):
    argv = [command]
    if payload is not None:
        inp = tmp_path / "in.json"
        inp.write_text(json.dumps(payload))
        argv += ["--input", str(inp)]
    out = tmp_path / "out.json"
    argv += ["--output", str(out)]
    argv += list(extra)
    code = main(argv)
    return code, out.read_bytes()


def test_sep_separated(tmp_path):
    code, out = run_cli(
        tmp_path, "sep", {"dim": 2, "generators": [["2", "0"], ["0", "2"]]}
    )
    assert code == 0
    doc = json.loads(out)
    assert doc == {"outcome": "separated", "weights": ["1/2", "1/2"]}
    # round trip: the reported weights verify against the original input
    weights = [Fraction(w) for w in doc["weights"]]
    assert verify_separated([ExtVec([2, 0]), ExtVec([0, 2])], weights, 2)


def test_sep_meets_corner_is_a_domain_error(tmp_path):
    code, out = run_cli(
        tmp_path, "sep", {"dim": 2, "generators": [["3", "0"], ["0", "3"]]}
    )
    assert code == 2
    doc = json.loads(out)
    assert doc["error"] == "meets_v"
    assert doc["witness"] == [[0, "1/2"], [1, "1/2"]]
    witness = [(i, Fraction(c)) for i, c in doc["witness"]]
    assert verify_meets_corner([ExtVec([3, 0]), ExtVec([0, 3])], witness)


def test_sep_with_infinite_entries(tmp_path):
    code, out = run_cli(tmp_path, "sep", {"dim": 2, "generators": [["inf", "0"]]})
    assert code == 0
    assert json.loads(out) == {"outcome": "separated", "weights": ["0", "1"]}


def test_malformed_input_exits_one(tmp_path):
    code, out = run_cli(tmp_path, "sep", {"dim": 2, "generators": [["-1", "0"]]})
    assert code == 1
    doc = json.loads(out)
    assert doc["error"] == "malformed_input"
    assert "generators[0][0]" in doc["message"]

    code, out = run_cli(tmp_path, "sep", {"generators": [["1", "0"]]})
    assert code == 1
    assert "dim" in json.loads(out)["message"]

    inp = tmp_path / "bad.json"
    inp.write_text("{not json")
    out_path = tmp_path / "out.json"
    code = main(["sep", "--input", str(inp), "--output", str(out_path)])
    assert code == 1


def test_interpolate_command(tmp_path):
    payload = {
        "c_gens": [["2", "0"], ["0", "2"]],
        "clauses": [[0, 1]],
        "phi": {"kind": "max", "branches": [["1", "1"]]},
    }
    code, out = run_cli(tmp_path, "interpolate", payload)
    assert code == 0
    doc = json.loads(out)
    assert doc["witnesses"] == [{"a": ["1/2", "1/2"], "x": ["1", "1"]}]
    assert doc["certificates"] == [["1"]]


def test_interpolate_output_reverifies(tmp_path):
    from conedual import LinFun, SublinFun, dominated_by_max, parse_extreal

    payload = {
        "c_gens": [["4", "0"], ["0", "4"], ["2", "2"]],
        "clauses": [[0, 1, 2], [2]],
        "phi": {"kind": "max", "branches": [["3", "1"], ["1", "3"]]},
    }
    code, out = run_cli(tmp_path, "interpolate", payload)
    assert code == 0
    doc = json.loads(out)
    phi = SublinFun([[3, 1], [1, 3]])
    for entry, cert in zip(doc["witnesses"], doc["certificates"]):
        x = LinFun([parse_extreal(v) for v in entry["x"]])
        weights = [Fraction(a) for a in entry["a"]]
        assert sum(weights) == 1 and all(w >= 0 for w in weights)
        ok, _ = dominated_by_max(x, phi)
        assert ok
        lam = [Fraction(c) for c in cert]
        assert sum(lam) == 1 and all(v >= 0 for v in lam)


def test_interpolate_precondition_violation(tmp_path):
    payload = {
        "c_gens": [["5", "5"]],
        "clauses": [[0]],
        "phi": {"kind": "max", "branches": [["1", "1"]]},
    }
    code, out = run_cli(tmp_path, "interpolate", payload)
    assert code == 2
    doc = json.loads(out)
    assert doc["error"] == "precondition_violated"
    assert doc["clause"] == 0
    assert len(doc["witness"]) == 2


def test_dominates_command(tmp_path):
    payload = {"f": ["1", "1"], "phi": {"kind": "max", "branches": [["2", "0"], ["0", "2"]]}}
    code, out = run_cli(tmp_path, "dominates", payload)
    assert code == 0
    assert json.loads(out) == {"certificate": ["1/2", "1/2"], "dominated": True}
    payload["f"] = ["2", "1"]
    code, out = run_cli(tmp_path, "dominates", payload)
    assert code == 0
    assert json.loads(out) == {"certificate": None, "dominated": False}


def test_minkowski_command(tmp_path):
    payload = {"blocks": [[["2", "0"], ["0", "2"]]], "y": ["1", "4"]}
    code, out = run_cli(tmp_path, "minkowski", payload)
    assert code == 0
    assert json.loads(out) == {"value": "2"}


def test_spec_order_command(tmp_path):
    payload = {"c_gens": [["1", "0"], ["1", "1"]], "y": ["1", "1"], "y_prime": ["2", "0"]}
    code, out = run_cli(tmp_path, "spec-order", payload)
    assert code == 0
    assert json.loads(out) == {"leq": True}


def test_ss_recover_command(tmp_path):
    payload = {"size": 2, "leq": [[0, 1]], "coeffs": ["1", "2"]}
    code, out = run_cli(tmp_path, "ss-recover", payload)
    assert code == 0
    assert json.loads(out) == {"f": ["1", "2"]}

    payload["coeffs"] = ["2", "1"]
    code, out = run_cli(tmp_path, "ss-recover", payload)
    assert code == 2
    assert json.loads(out) == {"error": "not_lsc", "witness": [0, 1]}


def test_mobius_commands(tmp_path):
    payload = {"size": 2, "leq": [[0, 1]], "direction": "to_opens", "weights": ["3", "2"]}
    code, out = run_cli(tmp_path, "mobius", payload)
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "opens": [
            {"open": [], "value": "0"},
            {"open": [1], "value": "2"},
            {"open": [0, 1], "value": "5"},
        ]
    }
    back = {
        "size": 2,
        "leq": [[0, 1]],
        "direction": "from_opens",
        "table": doc["opens"],
    }
    code, out = run_cli(tmp_path, "mobius", back)
    assert code == 0
    assert json.loads(out) == {"weights": ["3", "2"]}

    bad = dict(back)
    bad["table"] = [
        {"open": [], "value": "0"},
        {"open": [1], "value": "inf"},
        {"open": [0, 1], "value": "inf"},
    ]
    code, out = run_cli(tmp_path, "mobius", bad)
    assert code == 2
    assert json.loads(out)["error"] == "undefined_difference"


def test_check_command_reports_pass_counts(tmp_path):
    code, out = run_cli(tmp_path, "check", extra=["--suite", "extreal"])
    assert code == 0
    doc = json.loads(out)
    assert doc["reports"][0]["suite"] == "extreal"
    assert doc["reports"][0]["passed"] is True
    assert doc["reports"][0]["checks"] > 0


def test_check_other_fast_suites(tmp_path):
    code, out = run_cli(tmp_path, "check", extra=["--suite", "regression"])
    assert code == 0
    code, out = run_cli(
        tmp_path, "check", extra=["--suite", "directedness", "--max-size", "2"]
    )
    assert code == 0


def test_byte_identical_reruns(tmp_path):
    first = run_cli(tmp_path, "check", extra=["--suite", "extreal", "--seed", "5"])
    second = run_cli(tmp_path, "check", extra=["--suite", "extreal", "--seed", "5"])
    assert first == second
    a = run_cli(tmp_path, "sep", {"dim": 2, "generators": [["3", "0"], ["0", "3"]]})
    b = run_cli(tmp_path, "sep", {"dim": 2, "generators": [["3", "0"], ["0", "3"]]})
    assert a == b


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "conedual.cli", "sep"],
        input='{"dim": 1, "generators": [["1/2"]]}',
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"outcome": "separated", "weights": ["1"]}


def test_outputs_reparse_as_extended_rationals(tmp_path):
    code, out = run_cli(
        tmp_path, "minkowski", {"blocks": [[["1", "1"]]], "y": ["inf", "3"]}
    )
    assert code == 0
    assert parse_extreal(json.loads(out)["value"]).is_infinite
