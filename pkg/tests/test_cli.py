import io
import json
import subprocess
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from jetmetric.cli import run

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "docs" / "golden"
INPUTS = "docs/golden/inputs"  # golden reports record paths as typed

GOLDEN_COMMANDS = {
    "jets.json": ["jets", f"{INPUTS}/cusp.pres", "--order", "4"],
    "hilbert.json": ["hilbert", f"{INPUTS}/quartic.pres"],
    "distance.json": ["distance", f"{INPUTS}/x2.pres",
                      f"{INPUTS}/x3.pres", "--max-order", "6"],
    "defpair-distance.json": ["defpair-distance", f"{INPUTS}/pair-line.pres",
                              f"{INPUTS}/pair-fat.pres", "--max-order", "8"],
    "slopes.json": ["slopes", f"{INPUTS}/plane.pres", "--which", "quasidim"],
    "resolve.json": ["resolve", f"{INPUTS}/fat-point.pres", "--hcap", "6"],
    "classify.json": ["classify", f"{INPUTS}/quartic.pres"],
    "euler.json": ["euler", f"{INPUTS}/quartic.pres"],
    "limit.json": ["limit", "--template", f"{INPUTS}/family.tmpl",
                   "--range", "1..10", "--order", "3"],
}


@pytest.fixture(autouse=True)
def _from_repo_root(monkeypatch):
    monkeypatch.chdir(ROOT)


def _capture(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = run(argv)
        except SystemExit as exc:  # argparse usage errors
            code = exc.code
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("golden_name", sorted(GOLDEN_COMMANDS))
def test_golden_output_matches(golden_name):
    code, out, _ = _capture(GOLDEN_COMMANDS[golden_name])
    assert code == 0
    expected = (GOLDEN / golden_name).read_text()
    assert out == expected


@pytest.mark.parametrize("golden_name", sorted(GOLDEN_COMMANDS))
def test_output_is_byte_deterministic(golden_name):
    argv = GOLDEN_COMMANDS[golden_name]
    _, first, _ = _capture(argv)
    _, second, _ = _capture(argv)
    assert first == second


def test_every_report_carries_schema_and_input_digests():
    for name, argv in GOLDEN_COMMANDS.items():
        doc = json.loads((GOLDEN / name).read_text())
        assert doc["schema"] == "jetmetric/1"
        assert doc["subcommand"] == argv[0]
        for digest in doc["inputs"].values():
            assert digest.startswith("sha256:") and len(digest) == 7 + 64


def test_jets_report_contents():
    doc = json.loads((GOLDEN / "jets.json").read_text())
    r = doc["result"]
    assert r["dim"] == 7
    assert r["hilbert_function"] == [1, 2, 2, 2]
    assert r["nilpotency_index"] == 4
    assert r["socle_dimension"] == 2


def test_distance_report_is_exact_quarter():
    doc = json.loads((GOLDEN / "distance.json").read_text())
    r = doc["result"]
    assert r["exact"] is True
    assert r["lower"] == r["upper"] == "1/4"


def test_domain_failure_exits_one_with_json_error():
    code, out, _ = _capture(["euler", f"{INPUTS}/fat-point.pres"])
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["type"] == "PoleOrderZeroError"


def test_usage_failure_exits_two():
    code, _, err = _capture(["slopes", f"{INPUTS}/plane.pres",
                             "--which", "delta0"])  # missing --order
    assert code == 2
    assert "order" in err


def test_missing_file_exits_two():
    code, _, err = _capture(["jets", f"{INPUTS}/no-such-file.pres",
                             "--order", "2"])
    assert code == 2
    assert err != ""


def test_unknown_subcommand_exits_two():
    code, _, _ = _capture(["frobnicate"])
    assert code == 2


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "jetmetric.cli", "jets",
         f"{INPUTS}/x2.pres", "--order", "3"],
        capture_output=True, text=True, cwd=ROOT)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["result"]["dim"] == 2


def test_syntax_error_payload_names_the_line(tmp_path):
    bad = tmp_path / "bad.pres"
    bad.write_text("ring Q[x]\ngraded\nideal: %\n")
    code, out, _ = _capture(["jets", str(bad), "--order", "2"])
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["type"] == "PresentationSyntaxError"
    assert "line" in doc["error"]["message"] or "3" in doc["error"]["message"]


def test_binary_file_reports_structured_error(tmp_path):
    # a non-UTF-8 input should get the JSON envelope, not a traceback
    bad = tmp_path / "junk.pres"
    bad.write_bytes(b"ring Q[x]\n\xff\xfe\x00junk")
    code, out, _ = _capture(["jets", str(bad), "--order", "2"])
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["type"] == "PresentationSyntaxError"
    assert "UTF-8" in doc["error"]["message"]


def test_negative_order_reports_structured_error():
    code, out, _ = _capture(
        ["jets", "docs/golden/inputs/cusp.pres", "--order", "-2"])
    assert code == 1
    doc = json.loads(out)
    assert doc["error"]["type"] == "RangeError"
