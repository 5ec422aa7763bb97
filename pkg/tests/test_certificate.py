import json

import pytest

from cli.certificate import AXIOMS, IDEMPOTENCY, Certificate, inputs_digest
from cli.presets import DEFAULT_CLI_PARAMS, load_cli_params
from core.ring import Integers, make_ring
from core.series import TruncatedSeries
from fgl import check_fgl_axioms


def test_verdict_follows_violations():
    broken = TruncatedSeries(make_ring(Integers), 2, 2, {(1, 0): 1, (0, 1): 1, (2, 0): 1})
    cert = Certificate.from_axioms(AXIOMS, check_fgl_axioms(broken), {"law": "broken"})
    assert not cert.verdict
    assert cert.violations[0]["axiom"] == "unitality"
    assert cert.violations[0]["exponents"] == [2, 0]
    assert str(cert).startswith("axioms: ")


def test_checks_become_violations():
    cert = Certificate.from_checks(IDEMPOTENCY, {"same_law": True, "identity_iso": False}, {})
    assert cert.violations == [{"check": "identity_iso"}]
    ok = Certificate.from_checks(IDEMPOTENCY, {"same_law": True}, {})
    assert ok.verdict
    assert ok.to_document()["verdict"] is True


def test_unknown_kind_is_rejected():
    with pytest.raises(ValueError):
        Certificate("bogus")


def test_digest_ignores_key_order():
    assert inputs_digest({"a": 1, "b": 2}) == inputs_digest({"b": 2, "a": 1})
    assert inputs_digest({"a": 1}) != inputs_digest({"a": 2})


def test_load_cli_params(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({"parameters": {"degree": 5, "format": "text"}}))
    params = load_cli_params(str(path))
    assert params["degree"] == 5
    assert params["format"] == "text"
    # ensure defaults are preserved
    assert params["plugins"] == DEFAULT_CLI_PARAMS["plugins"]
    assert load_cli_params(str(tmp_path / "missing.json")) == DEFAULT_CLI_PARAMS
