import json
import subprocess
import sys
from pathlib import Path

import pytest

from higgslab.cli import main, run

SCENARIOS = Path(__file__).resolve().parent.parent / "scenarios"


def _run(tmp_path, *args):
    out = tmp_path / "report.json"
    code = main([*args, "--out", str(out)])
    return code, json.loads(out.read_text()), out.read_bytes()


def test_construct_split_golden(tmp_path, capsys):
    code, rep, _ = _run(tmp_path, "construct-split", "--config", str(SCENARIOS / "golden_split.json"))
    assert code == 0
    chart = rep["report"]["artifacts"]["chart"]
    assert chart["QV"] == [[[], ["1"]], [["1"], ["0", "1"]]]
    assert chart["gamma"] == [[["1000002"], []]]
    assert "PASS" in capsys.readouterr().out


def test_scaled_extension_exit_1_with_witness(tmp_path):
    code, rep, _ = _run(tmp_path, "build-extension", "--config", str(SCENARIOS / "scaled_extension.json"))
    assert code == 1
    assert rep["error"]["error"] == "IsometryViolation"
    assert rep["error"]["witness"]["x"] == "0"


def test_forced_extension_reports_non_unimodular(tmp_path):
    code, rep, _ = _run(tmp_path, "build-extension", "--config", str(SCENARIOS / "forced_extension.json"))
    assert code == 1
    failed = [c["name"] for c in rep["report"]["checks"] if not c["pass"]]
    assert "Q_V unimodular" in failed


def test_census_csv(tmp_path):
    csv_path = tmp_path / "census.csv"
    code = main(["census", "--config", str(SCENARIOS / "census.json"), "--csv", str(csv_path)])
    assert code == 0
    assert len(csv_path.read_text().splitlines()) == 9


@pytest.mark.parametrize("command,config", [
    ("build-extension", "golden_extension.json"),
    ("verify", "golden_chart.json"),
    ("cayley", "golden_chart.json"),
    ("direct-image", "swap_direct_image.json"),
    ("charclass", "charclass.json"),
    ("construct-split", "random_split.json"),
])
def test_scenarios_pass(tmp_path, command, config):
    code, rep, _ = _run(tmp_path, command, "--config", str(SCENARIOS / config))
    assert code == 0, rep


def test_random_split_deterministic(tmp_path):
    args = ["construct-split", "--config", str(SCENARIOS / "random_split.json"), "--seed", "5"]
    a = _run(tmp_path, *args)[2]
    b = _run(tmp_path, *args)[2]
    c = _run(tmp_path, "construct-split", "--config", str(SCENARIOS / "random_split.json"), "--seed", "6")[2]
    assert a == b and a != c


def test_input_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", "--config", str(bad)]) == 2
    bad.write_text(json.dumps({"sc": {"p": 1}}))
    assert main(["verify", "--config", str(bad)]) == 2
    assert main(["verify"]) == 2
    _, code, _ = run("verify", [1, 2])
    assert code == 2


def test_not_split_is_input_error():
    cfg = {"field": {"type": "prime", "modulus": "7"},
           "split": {"sc": {"p": 1, "a": [[1, 0, 1]]}}}
    env, code, _ = run("construct-split", cfg)
    assert code == 2 and env["error"]["error"] == "NotSplit"


def test_timing_is_opt_in(tmp_path):
    out = tmp_path / "t.json"
    main(["census", "--out", str(out), "--timing"])
    assert "seconds" in json.loads(out.read_text())
    main(["census", "--out", str(out)])
    assert "seconds" not in json.loads(out.read_text())


def test_module_entry_point_exit_code():
    proc = subprocess.run([sys.executable, "-m", "higgslab.cli", "build-extension", "--config",
                           str(SCENARIOS / "scaled_extension.json")], capture_output=True, text=True)
    assert proc.returncode == 1
    assert "IsometryViolation" in proc.stdout
