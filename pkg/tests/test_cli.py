import io
import json
import subprocess
import sys

import pytest

from lexsmd import cli
from lexsmd.smd import TheoremReport


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run_cli(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_smd_graph6():
    assert run("smd", "--graph6", "Ch") == (0, "1\n", "")


def test_smd_json_and_bruteforce():
    code, out, _ = run("smd", "--g", "cycle:6", "--method", "bruteforce", "--json")
    assert code == 0
    assert json.loads(out) == {"basis": [0, 1, 2], "dim_s": 3, "method": "bruteforce"}


def test_smd_product_uses_labels():
    code, out, _ = run("smd", "--g", "path:4", "--h", "path:3", "--json")
    payload = json.loads(out)
    assert code == 0 and payload["dim_s"] == 6
    assert all(name[0] in "abcd" for name in payload["basis"])


def test_verify_lex_bruteforce():
    code, out, _ = run("verify", "lex", "--g", "path:4", "--h", "path:3", "--level", "bruteforce")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "case=T5.i"
    for want in ("formula=6", "pipeline=6", "brute=6", "status=OK"):
        assert want in lines


def test_verify_lex_open_case_json():
    code, out, _ = run("verify", "lex", "--g", "complete:3", "--h", "join(complete:1,empty:2)", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["case"] == "PIPELINE_ONLY" and rec["value"] == rec["pipeline"] == 5


def test_verify_lex_discrepancy_exit_code(monkeypatch):
    fake = TheoremReport("T7", [], 5, pipeline_value=4)
    monkeypatch.setattr(cli, "route_and_evaluate", lambda *a, **k: fake)
    code, out, _ = run("verify", "lex", "--g", "path:2", "--h", "complete:2")
    assert code == 1 and "status=DISCREPANCY" in out


def test_verify_lex_size_limit():
    code, _, err = run("verify", "lex", "--g", "path:5", "--h", "path:3", "--level", "bruteforce")
    assert code == 2 and "brute force limited" in err


@pytest.mark.parametrize(
    "argv, msg",
    [
        (["smd"], "exactly one"),
        (["smd", "--g", "path:3", "--graph6", "Bw"], "exactly one"),
        (["smd", "--graph6", "C~~"], "graph6 byte 2"),
        (["smd", "--g", "union(path:2,path:2)"], "connected"),
        (["smd", "--edges", "/nonexistent/file"], "cannot read"),
        (["srs-graph", "--g", "complete:3"], "non-complete"),
    ],
)
def test_usage_errors_exit_2(argv, msg):
    code, out, err = run(*argv)
    assert code == 2 and out == ""
    assert err.startswith("lexsmd: error:") and msg in err


def test_argparse_errors_exit_2(capsys):
    assert run("smd", "--bogus")[0] == 2
    assert run("product", "--g", "path:2")[0] == 2
    assert run()[0] == 2


def test_sr_graph_product_labels():
    code, out, _ = run("sr-graph", "--g", "path:4", "--h", "path:3")
    assert code == 0
    lines = dict(line.split("=", 1) for line in out.splitlines())
    assert lines["n"] == "10"
    assert lines["vertices"].split() == ["a1", "a2", "a3", "b1", "b3", "c1", "c3", "d1", "d2", "d3"]
    edges = set(lines["edges"].split())
    assert {"a1-a3", "b1-b3", "c1-c3", "d1-d3", "a2-d2"} <= edges


def test_star_cover_product(tmp_path):
    code, out, _ = run("star", "--g", "path:3", "--minus", "--json")
    assert code == 0 and json.loads(out)["edges"] == [[0, 2]]
    code, out, _ = run("cover", "--g", "cycle:5")
    assert code == 0 and out.splitlines()[0] == "alpha=3"
    f = tmp_path / "e.txt"
    f.write_text("n 2\n0 1\n", encoding="ascii")
    code, out, _ = run("product", "--edges", str(f), "--h", "empty:2", "--json")
    assert code == 0 and json.loads(out)["graph6"] == "C]"  # bits 011110: the 4-cycle 0-2-1-3


def test_dot_output(tmp_path):
    dot = tmp_path / "sr.dot"
    code, _, _ = run("sr-graph", "--g", "path:4", "--dot", str(dot))
    assert code == 0
    assert dot.read_text() == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n"
    dot2 = tmp_path / "lex.dot"
    run("verify", "lex", "--g", "path:2", "--h", "path:2", "--dot", str(dot2), "--level", "formula")
    assert '"a1" -- "a2";' in dot2.read_text()


def test_families_table():
    code, out, _ = run("families", "--table")
    assert code == 0
    assert out.splitlines()[-1].endswith("failures=0")
    assert "MISMATCH" not in out


def test_verify_corpus_quiet_json():
    code, out, _ = run("verify", "corpus", "--check", "geller", "--count", "5", "--json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(recs) == 6
    assert recs[-1] == {"summary": {"checks": 5, "failures": 0}}
    code, out, _ = run("verify", "corpus", "--check", "claim1", "--count", "5", "--quiet")
    assert (code, out) == (0, "checked=5 failures=0\n")


def test_cli_bytes_deterministic_under_seed():
    argv = [sys.executable, "-m", "lexsmd", "verify", "corpus", "--check", "lemmas", "--count", "15", "--seed", "42", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.count(b"\n") == 16
    other = subprocess.run(argv[:-3] + ["--seed", "43", "--json"], capture_output=True, check=True).stdout
    assert other != first
