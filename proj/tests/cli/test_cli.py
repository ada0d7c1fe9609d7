"""Subprocess tests of the command line tool.

The binary path arrives in the FORESTPROB_CLI environment variable.
"""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("FORESTPROB_CLI", "forestprob")

PAW_EDGELIST = "0 1\n1 2\n1 3\n2 3\n"
PAW_GRAPH6 = "Cj\n"
P4_EDGELIST = "0 1\n1 2\n2 3\n"
C6_EDGELIST = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n"
STAR3_EDGELIST = "0 1\n0 2\n0 3\n"


def run(*args, expect=0):
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, timeout=300
    )
    assert proc.returncode == expect, (
        f"exit {proc.returncode} != {expect} for {args}\n"
        f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
    )
    return proc.stdout


def test_version():
    out = run("--version")
    assert "0.1.0" in out


def test_compute_family_paw():
    out = run("compute", "--family", "paw:0")
    assert "1: 5/6, 2: 1/6" in out
    assert "engine: formula" in out


def test_compute_family_formula_complete():
    out = run("compute", "--family", "k:4", "--engine", "formula")
    assert "1: 4/5, 2: 1/5" in out


def test_compute_file_brute(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text(P4_EDGELIST)
    out = run("compute", "--file", str(path), "--engine", "brute")
    assert "1: 2/3, 2: 1/3" in out
    assert "engine: brute" in out


def test_compute_graph6_file(tmp_path):
    path = tmp_path / "paw.g6"
    path.write_text(PAW_GRAPH6)
    out = run("compute", "--file", str(path))
    assert "1: 5/6, 2: 1/6" in out


def test_compute_engines_agree(tmp_path):
    path = tmp_path / "paw.txt"
    path.write_text(PAW_EDGELIST)
    for engine in ("brute", "dp", "formula"):
        out = run("compute", "--file", str(path), "--engine", engine)
        assert "1: 5/6, 2: 1/6" in out, engine


def test_compute_alias_family_routes_to_trusted_formula():
    out = run("compute", "--family", "kst:2,2")
    assert "1: 2/3, 2: 1/3" in out
    assert "note:" not in out


def test_compute_bipartite_formula_warns():
    out = run("compute", "--family", "kst:2,2", "--engine", "formula")
    assert "1: 2/3, 2: 1/6" in out
    assert "does not normalize" in out


def test_compute_bipartite_auto_uses_dp():
    out = run("compute", "--family", "kst:3,3")
    assert "engine: dp" in out
    assert "1: 3/10, 2: 3/5, 3: 1/10" in out


def test_compute_json():
    out = run("compute", "--family", "paw:0", "--json")
    doc = json.loads(out)
    assert doc["tool"]["name"] == "forestprob"
    assert doc["tool"]["version"] == "0.1.0"
    assert doc["command"] == "compute"
    assert doc["engine"] == "formula"
    assert doc["distribution"]["1"] == {"num": "5", "den": "6"}
    assert doc["distribution"]["2"] == {"num": "1", "den": "6"}
    assert doc["formula_normalized"] is True
    assert abs(doc["decimal"]["2"] - 1 / 6) < 1e-12


def test_compute_deterministic():
    first = run("compute", "--family", "gs:2,3,4")
    second = run("compute", "--family", "gs:2,3,4")
    assert first == second


def test_compute_mc_engine():
    out = run("compute", "--family", "paw:0", "--engine", "mc", "--trials",
              "20000", "--seed", "11")
    assert "trials: 20000" in out
    assert "seed: 11" in out


def test_exit_code_parse_error(tmp_path):
    run("compute", "--family", "wat:1", expect=1)
    run("compute", "--nope", expect=1)
    run("nope", expect=1)
    run("compute", expect=1)  # needs --file or --family
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n0 1\n")
    run("compute", "--file", str(path), expect=1)


def test_exit_code_guard():
    run("compute", "--family", "star:24", "--engine", "dp", expect=2)
    out = run("compute", "--family", "star:24", "--engine", "dp", "--force")
    assert "1: 1/1" in out


def test_simulate_deterministic():
    args = ("simulate", "--family", "paw:0", "--trials", "50000", "--seed", "7")
    first = run(*args)
    second = run(*args)
    assert first == second
    assert "trials: 50000" in first
    assert "seed: 7" in first
    # k=2 estimate parses and sits near 1/6.
    line = next(l for l in first.splitlines() if l.startswith("2:"))
    estimate = float(line.split()[1])
    assert abs(estimate - 1 / 6) < 0.02


def test_simulate_star_always_one_tree():
    out = run("simulate", "--family", "star:9", "--trials", "1000", "--seed", "3")
    assert "1: 1 (1000/1000)" in out.replace("+- 0 ", "")


def test_simulate_json():
    out = run("simulate", "--family", "paw:0", "--trials", "5000", "--seed", "9",
              "--json")
    doc = json.loads(out)
    assert doc["command"] == "simulate"
    counts = doc["simulation"]["counts"]
    assert sum(counts.values()) == 5000


def test_classify_families(tmp_path):
    paw = tmp_path / "paw.txt"
    paw.write_text(PAW_EDGELIST)
    assert run("classify", "--file", str(paw)).strip() == "paw:0"

    c6 = tmp_path / "c6.txt"
    c6.write_text(C6_EDGELIST)
    assert (
        run("classify", "--file", str(c6)).strip()
        == "unclassified (matching number >= 3)"
    )

    star = tmp_path / "star.txt"
    star.write_text(STAR3_EDGELIST)
    assert run("classify", "--file", str(star)).strip() == "star:3"

    assert run("classify", "--family", "gsplus:0,1,1").strip() == "paw:0"


def test_classify_json(tmp_path):
    c6 = tmp_path / "c6.txt"
    c6.write_text(C6_EDGELIST)
    doc = json.loads(run("classify", "--file", str(c6), "--json"))
    assert doc["classification"] == "unclassified (matching number >= 3)"
    assert doc["matching_cap3"] == 3
    assert doc["family"] is None

    doc = json.loads(run("classify", "--family", "paw:2", "--json"))
    assert doc["family"] == {"kind": "paw", "params": [2]}


def test_search_gs():
    out = run("search", "--family", "gs", "--max-vertices", "15")
    assert "collision groups:" in out
    assert "gs:1,4,5" in out
    assert "famA" in out


def test_search_di_empty():
    out = run("search", "--family", "di", "--max-vertices", "50")
    assert "collision groups: 0" in out


def test_search_json_and_out(tmp_path):
    report_path = tmp_path / "report.json"
    out = run("search", "--family", "gs", "--max-vertices", "15", "--json",
              "--out", str(report_path))
    assert "wrote report to" in out
    doc = json.loads(report_path.read_text())
    report = doc["report"]
    assert report["family"] == "gs"
    assert report["max_vertices"] == 15
    members = {m for g in report["groups"] for m in g["members"]}
    assert {"gs:1,1,8", "gs:1,8,1", "gs:1,4,5"} <= members


def test_search_worker_invariance():
    one = run("search", "--family", "gs", "--max-vertices", "20", "--workers", "1")
    eight = run("search", "--family", "gs", "--max-vertices", "20", "--workers", "8")
    strip = lambda text: [l for l in text.splitlines() if "workers" not in l]
    assert strip(one) == strip(eight)


def test_search_guard():
    run("search", "--family", "gs", "--max-vertices", "30", "--engine", "dp",
        expect=2)


def test_verify_known():
    out = run("verify-known", "--max-t", "3")
    assert "checks passed" in out
    assert "FAIL" not in out
    doc = json.loads(run("verify-known", "--max-t", "2", "--json"))
    assert doc["summary"]["all_pass"] is True


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
