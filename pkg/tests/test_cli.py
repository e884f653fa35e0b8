import io
import subprocess
import sys

import pytest

from toricirc import config, graphs
from toricirc.cli import main
from toricirc.ideal import parse_binomial


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


@pytest.fixture
def v23(tmp_path):
    p = tmp_path / "v23.config"
    code, text = run("build", "veronese", 2, 3)
    p.write_text(text)
    return p


def test_build_outputs():
    assert run("build", "veronese", 2, 3) == (0, "2 4\n3 2 1 0\n0 1 2 3\n")
    code, text = run("build", "root", "A", 3)
    assert code == 0 and config.parse_configuration(text).n == 4
    code, text = run("build", "sqfree-veronese", 4, 2)
    assert config.parse_configuration(text).n == 6
    code, text = run("build", "clique-sum", 4, 4, 1)
    assert graphs.parse_graph(text).n_edges == 12


def test_circuits(v23, data):
    code, text = run("circuits", v23)
    assert code == 0 and len(text.splitlines()) == 4
    for line in text.splitlines():
        parse_binomial(line, 4)
    assert run("circuits", data("triangle.graph"), "--graph") == (0, "")


def test_circuits_graph_filters(data):
    code, text = run("circuits", data("example1.graph"), "--graph")
    lines = text.splitlines()
    assert lines[0] == "x1*x3 - x2*x4\teven_cycle"
    assert len(lines) == 4
    # the two circuits whose walks pass through both triangles twice have no
    # squarefree side
    code, text = run("circuits", data("example1.graph"), "--graph", "--filter", "sf")
    assert [ln.split("\t")[0] for ln in text.splitlines()] == ["x1*x3 - x2*x4", "x3*x4*x6*x9 - x5^2*x7*x8"]
    code, text = run("circuits", data("example1.graph"), "--graph", "--filter", "sfsf")
    assert text == "x1*x3 - x2*x4\teven_cycle\n"


def test_generators(data):
    code, text = run("generators", data("example1.config"), "--minimal")
    assert sorted(text.splitlines()) == ["x1*x3 - x2*x4", "x3*x4*x6*x9 - x5^2*x7*x8"]
    code, text = run("generators", data("example2.config"), "--minimal")
    assert len(text.splitlines()) == 3
    assert run("generators", data("four_cycle.config")) == (0, "x1*x3 - x2*x4\n")


def test_graph_check(data):
    code, text = run("graph-check", data("example1.graph"))
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "OCC: false, (v): true, (v'): false, consistent"
    assert lines[1] == "normality witness: 1,1,1,0,1,1,1"
    code, text = run("graph-check", data("k4_0sum_k4.graph"))
    assert code == 0 and text.startswith("OCC: false, (v): true, (v'): true, consistent")
    code, text = run("graph-check", data("k33.graph"))
    assert text.startswith("OCC: true")


def test_binomial_check(v23, data):
    code, text = run("binomial-check", v23, "x1*x4 - x2*x3")
    assert code == 0
    assert "circuit: false" in text and "redundant: false" in text
    code, text = run("binomial-check", data("example1.config"), "x3*x4*x6*x9 - x5^2*x7*x8")
    assert "circuit: true" in text and "class: one_side" in text and "indispensable: true" in text
    code, text = run("binomial-check", data("four_cycle.config"), "x1*x3 - x2*x4")
    assert text == (
        "in_ideal: true\ncircuit: true\nclass: both_sides\nfundamental: true\n"
        "indispensable: true\nredundant: false\n"
    )


def test_fiber(v23, data):
    assert run("fiber", data("four_cycle.config"), "--degree", "1,1,1,1") == (0, "x1*x3\nx2*x4\n")
    assert run("fiber", data("example1.config"), "--degree", "1,1,1,0,1,1,1") == (0, "")
    assert run("fiber", data("example1.config"), "--degree", "1,0,1,1,1,1,1") == (0, "x5*x7*x8\n")
    code, text = run("fiber", v23, "--degree", "3,3")
    assert text == "x1*x4\nx2*x3\n"


def test_verify_commands():
    code, text = run("verify", "corpus", "--max-vertices", 4, "--exhaustive")
    assert code == 0 and "violations: 0" in text
    assert run("verify", "root", "--d", 3)[0] == 0
    code, text = run("verify", "veronese", "--d", 2, "--r", 3)
    assert code == 0 and "witness non_circuit_generator: x1*x4 - x2*x3" in text
    assert run("verify", "sqfree-veronese", "--d", 4, "--r", 2)[0] == 0


def test_verify_config_checks(tmp_path, data):
    p = tmp_path / "sv42.config"
    p.write_text(run("build", "sqfree-veronese", 4, 2)[1])
    code, text = run("verify", "two-binomial", p)
    assert code == 0 and "verdict: consistent" in text
    code, text = run("verify", "zeroone", p)
    assert code == 0 and "window_01: true" in text
    code, text = run("verify", "graph", data("example2.graph"))
    assert code == 0 and text.count("verdict: consistent") == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["circuits", "/nonexistent/file"],
        ["binomial-check", "DATA/four_cycle.config", "x1 - x2"],
        ["binomial-check", "DATA/four_cycle.config", "x1 + x2"],
        ["fiber", "DATA/four_cycle.config", "--degree", "1,1"],
        ["fiber", "DATA/four_cycle.config", "--degree", "a,b,c,d"],
        ["graph-check", "DATA/four_cycle.config"],
        ["verify", "corpus", "--max-vertices", 3],
    ],
)
def test_input_errors_exit_2(argv, data):
    argv = [a.replace("DATA/", str(data("")) + "/") if isinstance(a, str) else a for a in argv]
    assert run(*argv)[0] == 2


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-verb"])
    assert exc.value.code == 2


def test_output_is_deterministic(data):
    a = run("circuits", data("example2.graph"), "--graph")
    b = run("circuits", data("example2.graph"), "--graph")
    assert a == b


def test_module_entry_point(data):
    res = subprocess.run(
        [sys.executable, "-m", "toricirc", "generators", str(data("four_cycle.config")), "--minimal"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0 and res.stdout == "x1*x3 - x2*x4\n"
