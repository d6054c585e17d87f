"""Golden-file tests for every CLI command.

Run with UPDATE_GOLDEN=1 to rewrite the expected outputs after an intended change.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from surf610.cli import run

HERE = Path(__file__).parent
FIX = HERE / "fixtures"
GOLDEN = HERE / "golden"

CASES = {
    "hilbert": ["hilbert", "--max-degree", "10"],
    "hilbert20": ["hilbert", "--max-degree", "20"],
    "validate": ["validate", "-i", "diagonal.txt"],
    "validate_invalid": ["validate", "-i", "no_z0sq.txt"],
    "normalize": ["normalize", "-i", "messy.txt"],
    "base_locus_diagonal": ["base-locus", "-i", "diagonal.txt"],
    "base_locus_shifted": ["base-locus", "-i", "shifted.txt"],
    "canonical_image": ["canonical-image", "-i", "messy.txt"],
    "canonical_image_cubic": ["canonical-image", "-i", "diagonal.txt"],
    "map_degree": ["map-degree", "-i", "messy.txt"],
    "smooth_scan": ["smooth-scan", "-i", "diagonal.txt", "-p", "7"],
    "count_points": ["count-points", "-i", "diagonal.txt", "-p", "7"],
    "rule_out_pencil": ["rule-out-pencil", "--samples", "20", "--seed", "1"],
    "splitting_2222": ["splitting", "--case", "2-2-2-2", "--seed", "1"],
    "moduli_counts": ["moduli-counts"],
    "orbit": ["orbit", "-i", "vprime_generic_f7.json", "-p", "7"],
    "random_surface": ["random-surface", "--seed", "1"],
    "random_surface_p7": ["random-surface", "--seed", "1", "-p", "7"],
    "bad_parse": ["validate", "-i", "bad_parse.txt"],
    "bad_prime": ["smooth-scan", "-i", "diagonal.txt", "-p", "9"],
    "missing_input": ["normalize", "-i", "does_not_exist.txt"],
}

EXIT = {"validate_invalid": 2, "bad_parse": 2, "bad_prime": 2, "missing_input": 2}


def _run(argv, capsys):
    argv = [str(FIX / a) if (FIX / a).is_file() else a for a in argv]
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys):
    code, out, err = _run(CASES[name], capsys)
    assert code == EXIT.get(name, 0), err
    data = json.loads(out)
    assert out == json.dumps(data, sort_keys=True, indent=2) + "\n"
    path = GOLDEN / f"{name}.json"
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()
    assert err.strip()


def test_hilbert_content(capsys):
    _, out, _ = _run(CASES["hilbert"], capsys)
    data = json.loads(out)
    assert data["coefficients"] == [1, 1, 3, 4, 7, 10, 14, 19, 25, 32, 40]
    assert data["riemann_roch_match"] is True


def test_moduli_counts_content(capsys):
    _, out, _ = _run(CASES["moduli_counts"], capsys)
    assert json.loads(out) == {"full": 42, "vprime": 34, "finite_group": 108}


def test_rule_out_entries(capsys):
    _, out, _ = _run(CASES["rule_out_pencil"], capsys)
    data = json.loads(out)
    assert len(data["entries"]) == 20
    assert all(e["ruled_out"] for e in data["entries"])


def test_parse_error_reports_position(capsys):
    _, out, _ = _run(CASES["bad_parse"], capsys)
    data = json.loads(out)
    assert data["reason"] == "parse_error" and "position" in data["detail"]


def test_jobs_do_not_change_output(capsys):
    base = ["smooth-scan", "-i", "diagonal.txt", "-p", "11"]
    _, one, _ = _run(base + ["--jobs", "1"], capsys)
    _, many, _ = _run(base + ["--jobs", "4"], capsys)
    assert one == many


def test_timing_goes_to_report_only_on_request(capsys):
    _, out, err = _run(["smooth-scan", "-i", "diagonal.txt", "-p", "7", "--timing"], capsys)
    assert "elapsed_ms" in json.loads(out)
    assert "ms" in err


def test_random_surface_deterministic(capsys):
    _, a, _ = _run(CASES["random_surface"], capsys)
    _, b, _ = _run(CASES["random_surface"], capsys)
    assert a == b


def test_output_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = _run(["moduli-counts", "-o", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["vprime"] == 34


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "surf610.cli", "moduli-counts"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["full"] == 42
