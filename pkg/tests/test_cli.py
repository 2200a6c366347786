"""CLI adapters: golden outputs and exit codes.

Set ``DESCALG_REGEN_GOLDENS=1`` to rewrite the files in tests/golden/.
"""

import io
import json
import os
from pathlib import Path

import pytest

from descalg.cli import EXIT_BOUND, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main

GOLDEN_DIR = Path(__file__).parent / "golden"

GOLDENS = {
    "spectrum_n4_a22": ["spectrum", "--n", "4", "--alpha", "2,2"],
    "spectrum_n5_a14_json": ["spectrum", "--n", "5", "--alpha", "1,4", "--format", "json"],
    "spectrum_n4_a4_csv": ["spectrum", "--n", "4", "--alpha", "4", "--format", "csv"],
    "minpoly_n4_w0T1_F3": ["minpoly", "--n", "4", "--element", "w0T1", "--field", "Fp", "--p", "3"],
    "minpoly_n4_T1": ["minpoly", "--n", "4", "--element", "T1"],
    "minpoly_n2_w0T1_json": ["minpoly", "--n", "2", "--element", "w0T1", "--format", "json"],
    "minpoly_n4_Balphaw0_a13": ["minpoly", "--n", "4", "--element", "Balphaw0", "--alpha", "1,3"],
    "verify_n4_all": ["verify", "--n", "4", "--all", "--no-timing", "--format", "json"],
    "verify_n4_ttr": ["verify", "--n", "4", "--claim", "ttr", "--no-timing", "--format", "json"],
    "verify_n3_all_pretty": ["verify", "--n", "3", "--all"],
    "faces_n3": ["faces", "--n", "3"],
    "faces_n4_a22_csv": ["faces", "--n", "4", "--alpha", "2,2", "--format", "csv"],
}


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("name", sorted(GOLDENS))
def test_golden_output(name):
    code, text = run(GOLDENS[name])
    assert code == EXIT_OK
    path = GOLDEN_DIR / f"{name}.txt"
    if os.environ.get("DESCALG_REGEN_GOLDENS"):
        path.write_text(text)
    assert text == path.read_text()


def test_output_is_stable_across_runs():
    argv = GOLDENS["spectrum_n5_a14_json"]
    assert run(argv) == run(argv)


def test_spectrum_values():
    _, text = run(["spectrum", "--n", "5", "--alpha", "1,4", "--format", "json"])
    data = json.loads(text)
    assert data["signed_spectrum"] == ["-3", "-1", "0", "1", "2", "5"]
    assert sum(data["signed_counts"].values()) == 541
    _, text = run(["spectrum", "--n", "4", "--alpha", "4", "--format", "json"])
    assert json.loads(text)["knapsack_spectrum"] == ["1"]


def test_spectrum_from_weight_file(tmp_path):
    w = tmp_path / "gamma.json"
    w.write_text(json.dumps({"1,2": "1", "2,1": "2", "1,1,1": "1/3"}))
    code, text = run(["spectrum", "--n", "3", "--gamma", str(w), "--format", "json"])
    assert code == EXIT_OK and json.loads(text)["gamma"] == {"2,1": "2", "1,2": "1", "1,1,1": "1/3"}


def test_minpoly_examples():
    _, text = run(["minpoly", "--n", "4", "--element", "w0T1", "--field", "Fp", "--p", "3", "--format", "json"])
    assert json.loads(text) == {"field": "F3", "coefficients": ["0", "1", "1", "1"]}
    _, text = run(["minpoly", "--n", "4", "--element", "T1", "--format", "json"])
    assert json.loads(text)["factored"] == "x*(x - 1)*(x - 2)*(x - 4)"
    _, text = run(["minpoly", "--n", "2", "--element", "w0T1", "--format", "json"])
    assert json.loads(text)["factored"] == "x*(x - 2)"


def test_verify_single_claim_is_one_report():
    code, text = run(["verify", "--n", "4", "--claim", "ttr", "--no-timing", "--format", "json"])
    lines = text.splitlines()
    assert code == EXIT_OK and len(lines) == 1 and json.loads(lines[0])["pass"] is True


def test_verify_all_passes_and_reports_timing():
    code, text = run(["verify", "--n", "3", "--all", "--format", "json"])
    reports = [json.loads(line) for line in text.splitlines()]
    assert code == EXIT_OK and all(r["pass"] for r in reports)
    assert all("millis" in r for r in reports)


def test_faces_rows():
    _, text = run(["faces", "--n", "3", "--format", "json"])
    assert len(text.splitlines()) == 13
    _, text = run(["faces", "--n", "0", "--format", "json"])
    assert len(text.splitlines()) == 1
    _, text = run(["faces", "--n", "4", "--alpha", "2,2", "--format", "json"])
    rows = {r["face"]: r for r in map(json.loads, text.splitlines())}
    assert rows["3|2|1|4"]["n_alpha"] == 6


@pytest.mark.parametrize("argv, code", [
    (["verify", "--n", "1", "--claim", "ttr"], EXIT_USAGE),
    (["verify", "--n", "9", "--claim", "ttr"], EXIT_BOUND),
    (["spectrum", "--n", "4", "--alpha", "2,3"], EXIT_USAGE),
    (["spectrum", "--n", "4"], EXIT_USAGE),
    (["spectrum", "--n", "12", "--alpha", "12"], EXIT_BOUND),
    (["minpoly", "--n", "4", "--element", "Balpha"], EXIT_USAGE),
    (["minpoly", "--n", "4", "--element", "Bgamma"], EXIT_USAGE),
    (["minpoly", "--n", "4", "--element", "T1", "--field", "Fp", "--p", "4"], EXIT_USAGE),
    (["faces", "--n", "-1"], EXIT_USAGE),
    (["bogus"], EXIT_USAGE),
])
def test_exit_codes(argv, code):
    assert run(argv)[0] == code


def test_failing_verification_exits_one(monkeypatch):
    from descalg import knapsack as ks
    real = ks.knapsack_spectrum
    monkeypatch.setattr(ks, "knapsack_spectrum", lambda alpha, method="brute": real(alpha)[:-1])
    code, text = run(["verify", "--n", "3", "--claim", "annihilation_Balpha", "--alpha", "1,2",
                      "--format", "json", "--no-timing"])
    report = json.loads(text)
    assert code == EXIT_FAIL and report["pass"] is False and report["witness"]
