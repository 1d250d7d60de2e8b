import subprocess
import sys

import pytest

from graphrearrange.cli import load_config, main, parse_range
from graphrearrange.graph import build_grid_window
from graphrearrange.io import read_function, read_graph, read_ordering
from graphrearrange.orderings import spiral_ordering


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("text,expected", [("1..4", [1, 2, 3, 4]), ("5", [5]), ("1,3,5", [1, 3, 5]),
                                           ("1..2,7", [1, 2, 7])])
def test_parse_range(text, expected):
    assert parse_range(text) == expected


def test_profile_vertex(capsys):
    code, out, _ = run(capsys, "profile", "--family", "grid", "--kind", "vertex", "--n", "1..6",
                       "--box", "13")
    assert code == 0
    assert out.splitlines() == ["N,min,provenance"] + [
        f"{n},{m},oracle(box=13)" for n, m in zip(range(1, 7), [4, 6, 7, 8, 8, 9])]


def test_profile_witness_and_closed_form(capsys):
    code, out, _ = run(capsys, "profile", "--family", "tree", "--degree", "3", "--n", "2",
                       "--method", "closed-form", "--witness")
    assert out.splitlines() == ["N,min,provenance,witness", "2,4,closed-form(tree-edge),"]
    code, out, _ = run(capsys, "profile", "--family", "grid", "--n", "3", "--witness")
    assert out.splitlines()[1].startswith("3,8,oracle(box=7),")


def test_profile_error_exit(capsys):
    code, _, err = run(capsys, "profile", "--family", "grid", "--kind", "vertex", "--n", "2",
                       "--method", "closed-form")
    assert code == 2 and "no closed form" in err


def test_audit_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "audit", "--graph", "grid:8", "--ordering", "spiral", "--nmax", "6")
    assert code == 1
    assert "theorem 3: c = 2" in out
    code, out, _ = run(capsys, "audit", "--graph", "path:31", "--ordering", "path", "--nmax", "10",
                       "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "audit.csv").read_text().startswith("n,prefix_edge,edge_min")
    assert "c,1" in (tmp_path / "constants.csv").read_text().splitlines()


def test_audit_range_error(capsys):
    code, _, err = run(capsys, "audit", "--graph", "grid:2", "--ordering", "spiral", "--nmax", "6")
    assert code == 2 and "valid prefix" in err


def test_rearrange_and_norms(capsys, tmp_path):
    f = tmp_path / "f.csv"
    f.write_text("x,y,value\n0,0,2\n0,1,1\n1,0,1\n")
    out_file = tmp_path / "fs.csv"
    assert run(capsys, "rearrange", "--graph", "ladder:16", "--ordering", "snake", "--in", str(f),
               "--out", str(out_file))[0] == 0
    assert out_file.read_text() == "x,y,value\n0,0,2\n0,1,1\n1,1,1\n"
    code, out, _ = run(capsys, "norms", "--graph", "ladder:16", "--ordering", "snake", "--in", str(f),
                       "--p", "1,inf")
    assert out.splitlines() == ["p,norm_f,grad_norm_f,grad_norm_fstar", "1,4,5,5", "inf,2,1,2"]


def test_counterexample(capsys, tmp_path):
    code, out, _ = run(capsys, "counterexample", "--graph", "grid:4", "--ordering", "diamond",
                       "--out", str(tmp_path))
    assert code == 0 and "ratio^2=6/5" in out
    g = build_grid_window(4)
    assert sum(read_function(g, tmp_path / "witness.csv").values.values()) == 5


def test_export_import_roundtrip(capsys, tmp_path):
    gfile, ofile = tmp_path / "g.txt", tmp_path / "o.csv"
    run(capsys, "export", "--graph", "grid:3", "--out", str(gfile))
    run(capsys, "export", "--graph", f"file:{gfile}", "--ordering", "spiral", "--out", str(ofile))
    g = read_graph(gfile)
    assert g == build_grid_window(3)
    assert read_ordering(g, ofile).ranks == spiral_ordering(g).ranks
    code, out, _ = run(capsys, "audit", "--graph", f"file:{gfile}", "--ordering", f"file:{ofile}",
                       "--nmax", "1", "--theorems", "2")
    assert code == 0


def test_render(capsys, tmp_path):
    svg = tmp_path / "o.svg"
    assert run(capsys, "render", "--graph", "grid:3", "--ordering", "spiral", "--ranks", "16",
               "--out", str(svg))[0] == 0
    first = svg.read_text()
    run(capsys, "render", "--graph", "grid:3", "--ordering", "spiral", "--ranks", "16",
        "--out", str(svg))
    assert svg.read_text() == first and first.count("<text") == 16
    assert run(capsys, "render", "--graph", "tree:3,2", "--ordering", "tree-bfs")[0] == 2


def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# ladder run\ngraph = ladder:16\nordering = lex\nnmax = 8\ntheorems = 2,3\n")
    assert load_config(cfg)["nmax"] == "8"
    code, out, _ = run(capsys, "audit", "--config", str(cfg))
    assert code == 0 and "N = 1..8" in out and "c = 1" in out
    code, out, _ = run(capsys, "--config", str(cfg), "audit", "--ordering", "snake", "--nmax", "4")
    assert "ordering snake" in out and "N = 1..4" in out and "c = 2" in out


def test_seed_env_fallback(monkeypatch, tmp_path, capsys):
    import graphrearrange.cli as cli
    seen = {}
    monkeypatch.setattr(cli.reproduce, "run", lambda out, seed, suite_size: seen.update(seed=seed) or True)
    monkeypatch.setenv("GR_SEED", "17")
    assert run(capsys, "reproduce", "--out", str(tmp_path))[0] == 0
    assert seen["seed"] == 17
    assert run(capsys, "reproduce", "--out", str(tmp_path), "--seed", "3")[0] == 0
    assert seen["seed"] == 3


def test_reproduce_small_suite(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "graphrearrange", "reproduce", "--out", str(tmp_path),
                           "--suite-size", "20"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "MISMATCH" not in (tmp_path / "checks.csv").read_text()
    assert (tmp_path / "vertex_profile.csv").read_text().splitlines()[1:] == [
        "1,4,8", "2,6,11", "3,7,14", "4,8,15", "5,8,18", "6,9,19"]
