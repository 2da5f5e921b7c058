import json
from pathlib import Path

import pytest

from finloc import corpus
from finloc.cli import main
from finloc.textio import parse_dot

CORPUS = Path(corpus.__file__).parent / "corpus"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, json.loads(out), err


def test_validate_reports_digest(capsys):
    code, report, _ = run(capsys, "validate", CORPUS / "m2.lat")
    assert code == 0 and report["schema"] == 1 and report["ok"]
    assert len(report["inputs"][0]["sha256"]) == 64
    assert report["result"] == {"size": 4, "kind": "lattice"}


def test_bad_lattice_exits_nonzero(capsys, tmp_path):
    p = tmp_path / "bad.lat"
    p.write_text("elements: bot l r top\nle: bot l\nle: bot r\nle: l top\n")
    code, report, err = run(capsys, "validate", p)
    assert code == 1 and report["violations"][0]["kind"] == "NoJoin"
    assert "NoJoin" in err


def test_parse_error_reports_line(capsys, tmp_path):
    p = tmp_path / "bad.dom"
    p.write_text("elements: a b\nle: a b\n")
    code, report, _ = run(capsys, "scott", "frame", p)
    assert code == 1 and report["violations"][0]["kind"] == "ParseError"


def test_output_is_deterministic(capsys):
    first = run(capsys, "patch", CORPUS / "c3.lat")
    second = run(capsys, "patch", CORPUS / "c3.lat")
    assert first == second


def test_show_tables(capsys):
    code, report, _ = run(capsys, "show", CORPUS / "m2.lat")
    assert report["result"]["meet"]["l"]["r"] == "bot"
    assert report["result"]["implies"]["l"]["bot"] == "r"


def test_frame_verbs(capsys):
    code, report, _ = run(capsys, "frame", "points", CORPUS / "m2.lat")
    assert code == 0 and report["result"]["count"] == 2
    code, report, _ = run(capsys, "frame", "classes", CORPUS / "c3.lat")
    assert code == 0 and report["result"]["stone"]["value"] is False
    code, report, _ = run(capsys, "frame", "check", CORPUS / "cube.lat")
    assert code == 0 and report["result"]["frame"]


def test_nuclei_verbs(capsys):
    code, report, _ = run(capsys, "nuclei", "list", CORPUS / "c3.lat")
    assert report["result"]["count"] == 4
    code, report, _ = run(capsys, "nuclei", "check", CORPUS / "c3.lat", "j: 0->a a->a 1->1")
    assert code == 0 and report["result"]["name"] == "c_a"
    code, report, _ = run(capsys, "nuclei", "check", CORPUS / "c3.lat", "j: 0->a a->1 1->1")
    assert code == 1 and report["result"] == {"nucleus": False, "prenucleus": True}
    assert report["violations"][0] == {"kind": "NotIdempotent", "witness": ["0"]}


def test_spectrum_and_duality(capsys, tmp_path):
    out = tmp_path / "spec.dot"
    code, report, _ = run(capsys, "spectrum", CORPUS / "m2.lat", "-o", out)
    assert code == 0 and report["result"]["size"] == 4
    assert out.read_text() == report["result"]["dot"]
    code, report, _ = run(capsys, "duality", "check", CORPUS / "c4.lat")
    assert code == 0


def test_patch_labels(capsys):
    code, report, _ = run(capsys, "patch", CORPUS / "c3.lat")
    labels, edges = parse_dot(report["result"]["dot"])
    assert sorted(labels) == ["c_0", "c_a", "o_0", "o_a"] and len(edges) == 4
    code, report, _ = run(capsys, "patch", "verify-up", CORPUS / "c3.lat", CORPUS / "m2.lat")
    assert code == 0 and report["result"]["homs"] == 4
    code, report, _ = run(capsys, "patch", "verify-up", CORPUS / "c3.lat", CORPUS / "c3.lat")
    assert code == 1 and report["violations"][0]["kind"] == "NotStone"


def test_scott_verbs(capsys):
    code, report, _ = run(capsys, "scott", "verify", CORPUS / "flat2.dom")
    assert code == 0 and report["result"]["points"]["witness"]["points"] == 3
    code, report, _ = run(capsys, "scott", "sharp", CORPUS / "flat2.dom")
    assert report["result"]["sharp"] == ["bot", "x0", "x1"]
    code, report, _ = run(capsys, "scott", "points", CORPUS / "c2.dom")
    assert report["result"]["count"] == 2


def test_global_cap_is_honoured(capsys):
    code, report, _ = run(capsys, "--cap", "10", "nuclei", "list", CORPUS / "cube.lat")
    assert code == 1 and report["violations"][0]["kind"] == "CapExceeded"


def test_dot_verb(capsys):
    code, report, _ = run(capsys, "dot", CORPUS / "c3.lat")
    labels, edges = parse_dot(report["result"]["dot"])
    assert labels == ["0", "a", "1"] and edges == [(0, 1), (1, 2)]


@pytest.mark.parametrize("argv", [["suite", "duality"], ["suite", "patch"], ["suite", "all", "--cap", "4"]])
def test_suites_pass(capsys, argv):
    code, report, err = run(capsys, *argv)
    assert code == 0 and all(r["passed"] for r in report["result"])
    assert err.count("[PASS]") == len(report["result"])


def test_timing_flag(capsys):
    _, report, _ = run(capsys, "validate", CORPUS / "c2.lat")
    assert "seconds" not in report
    _, report, _ = run(capsys, "--timing", "validate", CORPUS / "c2.lat")
    assert report["seconds"] >= 0
