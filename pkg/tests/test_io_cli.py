import json
import subprocess
import sys

import pytest

from hypermaps import io
from hypermaps.cli import main, parse_edges
from hypermaps.errors import ParseError
from hypermaps.spanning import count_spanning, count_via_recursion

FILES = io.example_files()


def run(capsys, *args):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def data(name):
    return io.data_dir() / f"{name}.hm"


@pytest.mark.parametrize("path", FILES, ids=lambda p: p.stem)
def test_round_trip(path):
    hf = io.read_hypermap_file(path)
    again = io.parse_hypermap_text(hf.to_text())
    assert again == hf
    assert again.hypermap() == hf.hypermap()


@pytest.mark.parametrize("path", FILES, ids=lambda p: p.stem)
def test_brute_and_recursion_agree_on_corpus(path):
    h = io.load_hypermap(path)
    for g in range(h.genus + 1):
        assert count_spanning(h, g) == count_via_recursion(h, g)


@pytest.mark.parametrize(
    "text",
    [
        "n = 3\nsigma = (1,2)\n",
        "n = 3\nsigma = (1,2)\nalpha = (1,2\n",
        "n = x\nsigma = ()\nalpha = ()\n",
        "n = 2\nsigma = (1,2)\nalpha = (1,2)\ncolor = red\n",
        "n = 2\nn = 2\nsigma = (1,2)\nalpha = (1,2)\n",
        "n 2\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        io.parse_hypermap_text(text)


def test_comments_and_optional_keys():
    hf = io.parse_hypermap_text("# c\nname = x  # trailing\nn = 2\nsigma = (1,2)\nalpha = ()\nedge_numbers = 1\n")
    assert hf.name == "x" and hf.edge_numbers == [1]


def test_parse_edges():
    assert parse_edges("(1,5)(5,6) (2, 3)") == [(1, 5), (5, 6), (2, 3)]
    with pytest.raises(ParseError):
        parse_edges("(1,5)x")


def test_cli_examples(capsys):
    assert run(capsys, "count", "--genus", "0", data("torus9"))[1] == "21\n"
    assert run(capsys, "count", "--genus", "0", "--method", "recursion", data("torus9"))[1] == "21\n"
    assert run(capsys, "meanders", "--order", "2")[1] == "2\t2\n"
    assert run(capsys, "genus", data("planar12"))[1] == "0\n"


def test_cli_enumerate_and_tours(capsys):
    assert run(capsys, "enumerate", data("three_trees"))[1] == "(1,2,3)\n(1,3)(4,5)\n(2,3)(4,5)\n"
    code, out, _ = run(capsys, "tours", "--kind", "vertex", data("bernardi"))
    assert "(1,10,4,8,11,9,2,12,7,3,6,5)" in out.split()


def test_cli_transform(capsys):
    code, out, _ = run(capsys, "transform", "--op", "dual", data("planar12"))
    assert "sigma = (1,5)(2,7,12)(3,6,10)(4,9)(8,11)" in out
    for op in ("reciprocal", "hyperdual", "mirror", "kreweras"):
        code, out, _ = run(capsys, "transform", "--op", op, data("planar12"))
        assert io.parse_hypermap_text(out).hypermap().genus == 0


def test_cli_dc(capsys, tmp_path):
    edges = "(1,5)(5,6)(2,3)(1,3)(3,4)"
    code, out, _ = run(capsys, "dc", "validate", data("hexagon"), "--edges", edges)
    assert code == 0 and out.startswith("valid")
    trace = tmp_path / "trace.txt"
    code, out, _ = run(capsys, "dc", "run", data("hexagon"), "--edges", edges, "--trace", trace)
    assert code == 0 and trace.read_text().splitlines()[0] == "C (1,5) topo=+ genus=1"
    code, out, _ = run(capsys, "dc", "enumerate", data("three_trees"))
    assert len(out.splitlines()) == 3
    code, _, err = run(capsys, "dc", "validate", data("hexagon"), "--edges", "(1,2)(2,3)(3,4)")
    assert code == 3 and err


def test_cli_tutte(capsys):
    assert run(capsys, "tutte", data("triangle"))[1] == "x^0 y^1: 1\nx^1 y^0: 1\nx^2 y^0: 1\n"
    assert run(capsys, "tutte", data("three_trees"))[0] == 3


def test_cli_meanders(capsys, tmp_path):
    code, out, _ = run(capsys, "meanders", "--order", "5", "--all")
    assert out == "1\t1\n2\t2\n3\t8\n4\t42\n5\t262\n"
    assert run(capsys, "meanders", "--order", "4", "--oracle")[1] == "4\t42\n"
    assert run(capsys, "meanders", "--order", "6", "--semi")[1] == "6\t24\n"
    code, out, _ = run(capsys, "meanders", "--order", "4", "--semi", "--list")
    oracle = run(capsys, "meanders", "--order", "4", "--semi", "--list", "--oracle")[1]
    assert out == oracle and len(out.splitlines()) == 4
    fig = tmp_path / "m.svg"
    run(capsys, "meanders", "--order", "4", "--figure", fig)
    assert fig.read_text().lstrip().startswith("<?xml")


def test_cli_rtree(capsys):
    code, out, _ = run(capsys, "rtree", "enumerate", data("theta"))
    assert len(out.splitlines()) == 8
    code, out, _ = run(capsys, "rtree", "reduce", data("theta"))
    assert code == 0 and out.splitlines()[-1] == "@1(1@2(),2@2(),3@2())"


def test_cli_diagrams(capsys, tmp_path):
    code, out, _ = run(capsys, "diagram", "--theta", "(2,9)(4,10)(8,12)", data("planar12"))
    d = json.loads(out)
    assert d["order"] == [1, 9, 4, 5, 6, 10, 7, 12, 11, 8, 2, 3]
    code, out, _ = run(capsys, "diagram", "--format", "dot", data("planar12"))
    assert out.startswith("graph arcs {")
    code, out, err = run(capsys, "diagram", "--format", "svg", "-o", tmp_path / "x.svg", data("torus9"))
    assert "warning" in err and json.loads(out)["kind"] == "one-line"
    code, out, _ = run(capsys, "diagram", "--kind", "two-disk", data("bernardi"))
    assert json.loads(out)["kind"] == "two-disk"
    code, out, _ = run(
        capsys,
        "diagram",
        "--kind",
        "two-disk",
        "--eta",
        "(1,10,4,8,11,9,2,12,7,3,6,5)",
        "--zeta",
        "(1,10,4,8,11,3,12,7,9,2,6,5)",
        data("bernardi"),
    )
    assert json.loads(out)["bipole_edges"] == [[3, 9], [6, 12]]
    code, out, _ = run(capsys, "diagram", "--kind", "tree", "--format", "dot", data("theta"))
    assert out.startswith("graph tree {")


@pytest.mark.parametrize(
    "args",
    [
        ("diagram", "--format", "svg", "{tmp}/a.svg", "planar12"),
        ("diagram", "--kind", "tree", "--format", "svg", "{tmp}/a.svg", "theta"),
        ("meanders", "--order", "4", "--semi", "--figure", "{tmp}/a.svg"),
    ],
    ids=["one-line", "tree", "counts"],
)
def test_svg_is_deterministic(capsys, tmp_path, args):
    outputs = []
    for k in range(2):
        d = tmp_path / str(k)
        d.mkdir()
        argv = []
        for a in args:
            if a.endswith(".svg"):
                argv += ["-o", a.format(tmp=d)] if args[0] == "diagram" else [a.format(tmp=d)]
            elif a in ("planar12", "theta"):
                argv.append(data(a))
            else:
                argv.append(a)
        assert run(capsys, *argv)[0] == 0
        outputs.append((d / "a.svg").read_bytes())
    assert outputs[0] == outputs[1]
    assert b"<svg" in outputs[0]


def test_dot_is_deterministic(capsys):
    a = run(capsys, "diagram", "--format", "dot", data("planar12"))[1]
    b = run(capsys, "diagram", "--format", "dot", data("planar12"))[1]
    assert a == b
    assert io.hypermap_dot(io.load_hypermap(data("planar12"))).count("--") == 12


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.hm"
    bad.write_text("n = 3\nsigma = (1,2\nalpha = ()\n")
    assert run(capsys, "genus", bad)[0] == 1
    bad.write_text("n = 4\nsigma = (1,2)\nalpha = (3,4)\n")
    code, _, err = run(capsys, "genus", bad)
    assert code == 2 and "intransitive" in err
    code, _, err = run(capsys, "count", "--method", "recursion", data("three_trees"))
    assert code == 0
    assert run(capsys, "diagram", "--theta", "(1,4)", data("three_trees"))[0] == 3


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hypermaps", "genus", str(data("torus9"))], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "1\n"
