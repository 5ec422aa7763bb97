import json
import logging

from core.document import series_to_document
from core.ring import Integers, PLocalIntegers, make_ring
from core.series import TruncatedSeries
from fgl import multiplicative_fgl, p_typify
from run_fgl import run


def test_typification_is_logged(caplog):
    law = multiplicative_fgl(4, make_ring(PLocalIntegers(2)))
    with caplog.at_level(logging.DEBUG, logger="fgl.typification"):
        p_typify(law, 2)
    assert any("p-typifying at p=2" in message for message in caplog.messages)


def test_failed_certificate_is_logged(tmp_path, caplog, capsys):
    broken = TruncatedSeries(make_ring(Integers), 2, 3, {(1, 0): 1, (0, 1): 1, (2, 0): 1})
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(series_to_document(broken)))
    with caplog.at_level(logging.WARNING, logger="run_fgl"):
        assert run(["check", "--input", str(path)]) == 1
    assert any("axioms certificate failed" in message for message in caplog.messages)


def test_passing_run_logs_no_warning(caplog, capsys):
    with caplog.at_level(logging.WARNING, logger="run_fgl"):
        assert run(["check", "--builtin", "multiplicative", "--degree", "3"]) == 0
    assert not [r for r in caplog.records if r.levelno >= logging.WARNING]
