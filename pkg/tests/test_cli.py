import json
import subprocess
import sys

import pytest

from degsim.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_psi_single_graph(capsys):
    code, out, _ = run(capsys, "psi", "A_")
    assert code == EXIT_OK
    assert json.loads(out) == {
        "n": 2, "tdeg": 2, "mudeg": 2,
        "coeffs": [["-1/1", "0/1", "1/1"], ["0/1", "2/1", "0/1"], ["1/1", "0/1", "0/1"]],
    }


def test_psi_file_reports_bad_lines(capsys, tmp_path):
    p = tmp_path / "in.g6"
    p.write_bytes(b"A_\nA!\n@\n")
    code, out, _ = run(capsys, "psi", str(p))
    recs = [json.loads(x) for x in out.splitlines()]
    assert code == EXIT_OK
    assert [r["line"] for r in recs] == [1, 2, 3]
    assert "error" in recs[1]
    code, _, err = run(capsys, "psi", str(p), "--strict")
    assert code == EXIT_DOMAIN and "error" in err


def test_degsim_empty_space(capsys):
    code, out, _ = run(capsys, "degsim", "A_", "A?")
    assert code == EXIT_OK
    assert json.loads(out)["kind"] == "empty-space"


def test_compare_star_vs_cycle_plus_vertex(capsys):
    code, out, _ = run(capsys, "compare", "Ds_", "Dl?")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["psi_equal"] is False
    assert rep["equivalence"] == {"charpoly_equal": False, "similar": False, "violation": False}
    assert len(rep["invariant_factors"]["a"]) == 5


def test_compare_with_itself(capsys):
    code, out, _ = run(capsys, "compare", "Ds_", "Ds_")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["psi_equal"] and rep["similar_over_Q(mu)"]
    assert rep["invariant_factors"]["a"] == rep["invariant_factors"]["b"]
    assert rep["equivalence"] == {"charpoly_equal": True, "similar": True, "violation": False}


def test_search_and_figures(capsys, tmp_path):
    p = tmp_path / "in.g6"
    p.write_bytes(b"Dl?\nDl?\nDs_\n")
    code, out, err = run(capsys, "search", str(p), "--figures", str(tmp_path / "f"))
    assert code == EXIT_OK
    (rec,) = [json.loads(x) for x in out.splitlines()]
    assert rec["psi_equal"] and rec["degree_similar"]["decision"] == "degree-similar"
    summary = json.loads(err.splitlines()[0])
    assert summary["psi_classes"] == 1 and summary["false_collisions"] == 0
    assert len(list((tmp_path / "f").glob("*.png"))) == 3


def test_fingerprint_and_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "4")
    assert code == EXIT_OK and len(out.split()) == 11
    p = tmp_path / "g4.g6"
    p.write_text(out)
    code, out, _ = run(capsys, "fingerprint", str(p), "--points", "3")
    lines = [json.loads(x) for x in out.splitlines()]
    assert len(lines) == 12 and len(lines[0]["points"]) == 3
    assert all(len(r["residues"]) == 3 for r in lines[1:])


def test_error_exit_codes(capsys):
    assert run(capsys, "psi", "A!")[0] == EXIT_DOMAIN
    assert run(capsys, "degsim", "A_")[0] == EXIT_USAGE
    assert run(capsys, "fingerprint", "/nonexistent/file")[0] == EXIT_DOMAIN
    assert run(capsys, "search", "/dev/null", "--prime", "100")[0] == EXIT_DOMAIN
    assert run(capsys, "enumerate", "9")[0] == EXIT_DOMAIN


def test_selftest_in_process(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == EXIT_OK
    assert out.count("PASS") == len(out.splitlines())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "degsim", "psi", "@"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coeffs"] == [["0/1"], ["1/1"]]
