import json
from pathlib import Path

from cli.commands import COMMANDS
from core.document import fgl_to_document, series_to_document
from core.ring import Integers, make_ring
from core.series import TruncatedSeries, scalar_series
from fgl import multiplicative_fgl
from run_fgl import run

Z = make_ring(Integers)


def _write(path: Path, document) -> str:
    path.write_text(json.dumps(document))
    return str(path)


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_check_builtin_law(capsys):
    code, doc = _run_json(capsys, ["check", "--builtin", "additive", "--degree", "4"])
    assert code == 0
    cert = doc["certificate"]
    assert cert["kind"] == "axioms"
    assert cert["verdict"] is True
    assert cert["violations"] == []
    assert cert["inputs_digest"].startswith("sha256:")


def test_check_broken_law_exits_with_one(tmp_path, capsys):
    broken = TruncatedSeries(Z, 2, 3, {(1, 0): 1, (0, 1): 1, (2, 0): 1})
    path = _write(tmp_path / "broken.json", series_to_document(broken))
    code, doc = _run_json(capsys, ["check", "--input", path])
    assert code == 1
    assert doc["certificate"]["verdict"] is False
    axioms = [v["axiom"] for v in doc["certificate"]["violations"]]
    assert "unitality" in axioms


def test_ptypify_multiplicative_law(tmp_path, capsys):
    path = _write(tmp_path / "mult.json", fgl_to_document(multiplicative_fgl(6)))
    code, doc = _run_json(capsys, ["ptypify", "--input", path, "--prime", "2", "--degree", "4"])
    assert code == 0
    iso = {entry["texp"]: entry["value"] for entry in doc["iso"]["coefficients"]}
    assert iso[1] == "1"
    assert iso[3] == "-1/3"
    assert 2 not in iso
    assert doc["iso"]["ring"]["base"] == {"Zp": 2}
    assert [c["verdict"] for c in doc["certificates"]] == [True, True]


def test_idempotent_command(capsys):
    code, doc = _run_json(capsys, ["idempotent", "--builtin", "multiplicative", "--prime", "3", "--degree", "6"])
    assert code == 0
    assert doc["certificate"]["kind"] == "idempotency"
    assert doc["certificate"]["verdict"] is True


def test_degree_below_two_is_an_error(tmp_path, capsys):
    path = _write(tmp_path / "mult.json", fgl_to_document(multiplicative_fgl(6)))
    code = run(["idempotent", "--input", path, "--prime", "5", "--degree", "1"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert "truncation degree must be ≥ 2" in captured.err
    assert captured.err.startswith("error: ")


def test_usage_errors_exit_with_two(tmp_path, capsys):
    assert run(["ptypify", "--builtin", "multiplicative", "--prime", "4"]) == 2
    assert run(["check"]) == 2
    assert run(["check", "--builtin", "nonexistent"]) == 2
    assert run(["check", "--input", str(tmp_path / "missing.json")]) == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(["check", "--input", str(broken)]) == 2
    assert run(["no-such-command"]) == 2
    err = capsys.readouterr().err
    assert "error: " in err


def test_precondition_errors_exit_with_two(tmp_path, capsys):
    law = _write(tmp_path / "law.json", fgl_to_document(multiplicative_fgl(3)))
    h = _write(tmp_path / "h.json", series_to_document(scalar_series(Z, [1, 1], 2)))
    assert run(["projective-reduce", "--input", law, "--n", "1"]) == 2
    assert run(["projective-reduce", "--input", h, "--n", "-1"]) == 2
    assert run(["hazewinkel", "--prime", "2", "--count", "-1", "--degree", "4"]) == 2
    assert run(["chern-expand", "--input", h, "--n", "-1"]) == 2
    assert run(["check", "--builtin", "scaled", "--a", "1/0"]) == 2
    err = capsys.readouterr().err
    assert "error: projective dimension must be non-negative" in err
    assert "error: generator count must be non-negative" in err
    assert "Traceback" not in err


def test_universal_builtin_needs_a_degree(capsys):
    assert run(["check", "--builtin", "universal"]) == 2
    assert "error: --builtin universal needs --degree" in capsys.readouterr().err
    code, doc = _run_json(capsys, ["check", "--builtin", "universal", "--degree", "4"])
    assert code == 0
    assert doc["certificate"]["verdict"] is True


def test_help_exits_cleanly(capsys):
    assert run(["--help"]) == 0
    assert "formal group law" in capsys.readouterr().out


def test_log_text_output(capsys):
    code = run(["log", "--builtin", "multiplicative", "--degree", "3", "--format", "text"])
    assert code == 0
    assert capsys.readouterr().out == "t - 1/2*t^2 + 1/3*t^3 + O(4)\n"


def test_nseries_and_exp(capsys):
    code, doc = _run_json(capsys, ["nseries", "--builtin", "multiplicative", "--n", "2", "--degree", "4"])
    assert code == 0
    assert {e["texp"]: e["value"] for e in doc["series"]["coefficients"]} == {1: "2", 2: "1"}
    code, doc = _run_json(capsys, ["exp", "--builtin", "multiplicative", "--degree", "3"])
    assert {e["texp"]: e["value"] for e in doc["exp"]["coefficients"]} == {1: "1", 2: "1/2", 3: "1/6"}


def test_universal_and_hazewinkel(capsys):
    code, doc = _run_json(capsys, ["universal", "--degree", "2"])
    assert code == 0
    xy = [e for e in doc["fgl"]["coefficients"] if e["xexp"] == 1 and e["yexp"] == 1]
    assert xy == [{"xexp": 1, "yexp": 1, "monomial": {"m1": 1}, "value": "-2"}]
    code, doc = _run_json(capsys, ["hazewinkel", "--prime", "2", "--count", "2", "--degree", "4"])
    assert code == 0
    assert doc["generators"][0] == [{"monomial": {"m1": 1}, "value": "2"}]
    assert doc["generators"][1] == [{"monomial": {"m3": 1}, "value": "2"}, {"monomial": {"m1": 3}, "value": "-4"}]


def test_brown_peterson_command(capsys):
    code, doc = _run_json(capsys, ["bp", "--prime", "2", "--degree", "4"])
    assert code == 0
    assert doc["fgl"]["ring"] == {"base": {"Zp": 2}, "generators": [{"name": "v1", "weight": 1}, {"name": "v2", "weight": 3}]}


def test_chern_expand_with_multiplicativity(tmp_path, capsys):
    path = _write(tmp_path / "h.json", series_to_document(scalar_series(Z, [1, 1], 2)))
    code, doc = _run_json(capsys, ["chern-expand", "--input", path, "--n", "2", "--m", "1"])
    assert code == 0
    assert doc["degree"] == 2
    monomials = sorted(tuple(sorted(t["monomial"].items())) for t in doc["expansion"]["terms"])
    assert monomials == [(), (("c1", 1),), (("c2", 1),)]
    assert doc["certificate"]["kind"] == "multiplicativity"
    assert doc["certificate"]["verdict"] is True


def test_chern_expand_of_an_idempotent(capsys):
    code, doc = _run_json(
        capsys, ["chern-expand", "--builtin", "multiplicative", "--prime", "2", "--degree", "5", "--n", "2"]
    )
    assert code == 0
    assert doc["degree"] == 4


def test_orientation_round_trip_command(tmp_path, capsys):
    path = _write(tmp_path / "f.json", series_to_document(scalar_series(Z, [0, 1, 1], 4)))
    code, doc = _run_json(capsys, ["orient-roundtrip", "--builtin", "additive", "--orientation", path, "--degree", "4"])
    assert code == 0
    assert doc["certificate"]["kind"] == "roundtrip"
    assert doc["certificate"]["verdict"] is True


def test_projective_reduce_command(tmp_path, capsys):
    path = _write(tmp_path / "p.json", series_to_document(scalar_series(Z, [1, 3, 3, 1], 3)))
    code, doc = _run_json(capsys, ["projective-reduce", "--input", path, "--n", "1"])
    assert code == 0
    assert doc["dimension"] == 1
    assert doc["coefficients"] == [[{"monomial": {}, "value": "1"}], [{"monomial": {}, "value": "3"}]]


def _subcommand_matrix(tmp_path):
    h = _write(tmp_path / "h.json", series_to_document(scalar_series(Z, [1, 1], 2)))
    f = _write(tmp_path / "f.json", series_to_document(scalar_series(Z, [0, 1, 1], 4)))
    p = _write(tmp_path / "p.json", series_to_document(scalar_series(Z, [1, 3, 3, 1], 3)))
    mult = ["--builtin", "multiplicative", "--degree", "4"]
    return {
        "check": mult,
        "log": mult,
        "exp": mult,
        "nseries": mult + ["--n", "3"],
        "ptypify": ["--builtin", "multiplicative", "--prime", "3", "--degree", "5"],
        "idempotent": ["--builtin", "multiplicative", "--prime", "2", "--degree", "5"],
        "orient-roundtrip": ["--builtin", "additive", "--orientation", f, "--degree", "4"],
        "universal": ["--degree", "3"],
        "hazewinkel": ["--prime", "2", "--count", "2", "--degree", "4"],
        "bp": ["--prime", "2", "--degree", "4"],
        "chern-expand": ["--input", h, "--n", "2", "--m", "1"],
        "projective-reduce": ["--input", p, "--n", "1"],
    }


def test_every_subcommand_is_deterministic(tmp_path, capsys):
    matrix = _subcommand_matrix(tmp_path)
    assert set(matrix) == set(COMMANDS)
    for name, flags in matrix.items():
        for fmt in ("json", "text"):
            argv = [name] + flags + ["--format", fmt]
            assert run(argv) == 0, name
            first = capsys.readouterr().out
            assert run(argv) == 0, name
            assert capsys.readouterr().out == first, name


def test_output_file_matches_stdout(tmp_path, capsys):
    argv = ["ptypify", "--builtin", "multiplicative", "--prime", "3", "--degree", "5"]
    run(argv)
    first = capsys.readouterr().out
    out_file = tmp_path / "out.json"
    assert run(argv + ["--output", str(out_file)]) == 0
    assert capsys.readouterr().out == ""
    assert out_file.read_text() == first


def test_settings_file_overrides_defaults(tmp_path, capsys):
    settings = _write(tmp_path / "settings.json", {"parameters": {"degree": 3}})
    code, doc = _run_json(capsys, ["universal", "--settings", settings])
    assert code == 0
    assert doc["fgl"]["truncation"] == 3
    code, doc = _run_json(capsys, ["universal", "--settings", settings, "--degree", "2"])
    assert doc["fgl"]["truncation"] == 2
