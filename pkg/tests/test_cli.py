import json

import pytest

from monodraw import drawing_from_json, parse_graph, parse_tree
from monodraw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_binary(tmp_path, capsys):
    out = tmp_path / "b.json"
    assert run(capsys, "gen", "binary", "--depth", "3", "--out", str(out))[0] == 0
    t = parse_tree(out.read_text())
    assert t.n == 15 and len(t.children[t.root]) == 2


def test_gen_k4(capsys):
    code, out, _ = run(capsys, "gen", "k4leaves", "--l", "1")
    g = parse_graph(out)
    assert code == 0 and g.n == 8 and len(g.edges) == 10


def test_gen_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "gen", "random-tree", "--n", "100", "--seed", "1", "--out", str(a))
    run(capsys, "gen", "random-tree", "--n", "100", "--seed", "1", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("MONODRAW_SEED", "5")
    _, env_out, _ = run(capsys, "gen", "random-tree", "--n", "30")
    _, flag_out, _ = run(capsys, "gen", "random-tree", "--n", "30", "--seed", "5")
    _, other, _ = run(capsys, "gen", "random-tree", "--n", "30", "--seed", "6")
    assert env_out == flag_out != other


@pytest.mark.parametrize("kind", ["star", "caterpillar", "outerplanar-random"])
def test_gen_other_kinds(kind, capsys):
    code, out, _ = run(capsys, "gen", kind, "--n", "8", "--l", "2")
    assert code == 0 and json.loads(out)


def test_draw_inorder_degree2_error(tmp_path, capsys):
    src = tmp_path / "p.txt"
    src.write_text("((a,b)c,d)r")
    code, _, err = run(capsys, "draw", "--algo", "inorder", "--in", str(src))
    assert code == 2 and "'r'" in err and "degree 2" in err


def test_draw_strong_kind(tmp_path, capsys):
    src = tmp_path / "t.txt"
    src.write_text("(a,b,(c,d)e)r")
    code, out, _ = run(capsys, "draw", "--algo", "strong", "--in", str(src), "--precision", "53")
    assert code == 0 and json.loads(out)["kind"] == "float64"
    code, out, _ = run(capsys, "draw", "--algo", "strong", "--in", str(src))
    assert json.loads(out)["kind"].startswith("float")


def test_draw_outerchain_triangle(tmp_path, capsys):
    src = tmp_path / "g.json"
    src.write_text(json.dumps({"cycle": ["v1", "v2", "v3"], "chords": []}))
    code, out, _ = run(capsys, "draw", "--algo", "outerchain", "--in", str(src))
    d = drawing_from_json(out)
    assert code == 0
    assert [d.point(v) for v in ("v1", "v2", "v3")] == [(0, 0), (1, 2), (3, 3)]


def test_pipeline_verify_exit_codes(tmp_path, capsys):
    tree = tmp_path / "t.json"
    drawing = tmp_path / "d.json"
    svg = tmp_path / "d.svg"
    run(capsys, "gen", "random-tree", "--n", "60", "--no-deg2", "--seed", "2", "--out", str(tree))
    assert run(capsys, "draw", "--algo", "inorder", "--in", str(tree), "--out", str(drawing),
               "--svg", str(svg))[0] == 0
    assert svg.read_text().startswith("<svg")
    code, out, _ = run(capsys, "verify", "--checks", "crossing,monotone,convex,strict-convex,resolution",
                       "--in", str(drawing))
    assert code == 0 and json.loads(out)["passed"]


def test_verify_k4_fails_with_witness(tmp_path, capsys):
    src = tmp_path / "k.json"
    run(capsys, "gen", "k4leaves", "--l", "1", "--placement", "--seed", "3", "--out", str(src))
    code, out, _ = run(capsys, "verify", "--checks", "strong", "--in", str(src))
    rep = json.loads(out)
    assert code == 1 and not rep["passed"] and rep["checks"][0]["witness"]["pair"]


def test_verify_no_checks(tmp_path, capsys):
    src = tmp_path / "k.json"
    run(capsys, "gen", "k4leaves", "--placement", "--out", str(src))
    code, _, err = run(capsys, "verify", "--checks", "", "--in", str(src))
    assert code == 2 and "no checks requested" in err


def test_verify_size_cap(tmp_path, capsys):
    tree, drawing = tmp_path / "t.json", tmp_path / "d.json"
    run(capsys, "gen", "random-tree", "--n", "50", "--no-deg2", "--out", str(tree))
    run(capsys, "draw", "--algo", "inorder", "--in", str(tree), "--out", str(drawing))
    code, _, err = run(capsys, "verify", "--checks", "crossing", "--in", str(drawing), "--max-n", "10")
    assert code == 2 and "--max-n" in err


def test_malformed_drawing(tmp_path, capsys):
    src = tmp_path / "bad.json"
    src.write_text('{"kind": "int", "vertices": [{"id": "a", "x": "0", "y": "0"}], "edges": [["a", "b"]]}')
    code, _, err = run(capsys, "verify", "--checks", "crossing", "--in", str(src))
    assert code == 2 and err.startswith("monodraw: error:")


def test_primvec_dump(capsys):
    code, out, _ = run(capsys, "primvec", "dump", "--d", "6")
    lines = out.split()
    assert code == 0 and len(out.splitlines()) == 13
    assert out.splitlines()[:3] == ["0 1", "1 6", "1 5"]
    assert len(lines) == 26


def test_render_rays_clipped(tmp_path, capsys):
    src = tmp_path / "t.txt"
    drawing = tmp_path / "d.json"
    src.write_text("(a,b,c)r")
    run(capsys, "draw", "--algo", "inorder", "--in", str(src), "--out", str(drawing))
    code, svg, _ = run(capsys, "render", "--in", str(drawing))
    assert code == 0
    assert svg.count('stroke-dasharray') == 3
    assert svg.count("<circle") == 4 and 'r="2"' in svg
    for part in svg.split("<line")[1:]:
        for key in ("x1", "y1", "x2", "y2"):
            val = float(part.split(f'{key}="')[1].split('"')[0])
            assert -1e-6 <= val <= 800 + 1e-6


def test_render_flips_y(tmp_path, capsys):
    src = tmp_path / "d.json"
    src.write_text(json.dumps({"kind": "int", "root": "a",
                               "vertices": [{"id": "a", "x": "0", "y": "0"}, {"id": "b", "x": "0", "y": "5"}],
                               "edges": [["a", "b"]]}))
    _, svg, _ = run(capsys, "render", "--in", str(src))
    circles = [c for c in svg.splitlines() if c.startswith("<circle")]
    ya = float(circles[0].split('cy="')[1].split('"')[0])
    yb = float(circles[1].split('cy="')[1].split('"')[0])
    assert yb < ya
