import io
import json
import subprocess
import sys

import pytest

from semistab.cli import main, parse_args, run
from semistab.exterior import ExteriorVector, wedge_from_factors
from semistab.poly import parse_poly
from semistab.reduction import SCInstance


def invoke(argv):
    out = io.StringIO()
    code = run(parse_args(argv), out)
    text = out.getvalue()
    return code, (json.loads(text) if argv[-2:] != ["--output", "text"] else text)


@pytest.fixture
def files(tmp_path):
    def write(name, content):
        p = tmp_path / name
        p.write_text(content if isinstance(content, str) else json.dumps(content))
        return str(p)
    return write


def test_parse_args_examples():
    a = parse_args(["reduce", "--system", "sys.json", "--out", "inst.json"])
    assert (a.verb, a.system, a.out) == ("reduce", "sys.json", "inst.json")
    a = parse_args(["semistable", "--ideal", "I.txt", "--degree", "2"])
    assert (a.verb, a.ideal, a.degree, a.jobs) == ("semistable", "I.txt", 2, 1)
    a = parse_args(["groebner", "--ideal", "I.txt", "--order", "grevlex"])
    assert a.order == "grevlex"


@pytest.mark.parametrize("argv", [["frobnicate"], ["groebner"], ["groebner", "--ideal", "a", "--bogus"]])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        parse_args(argv)
    assert exc.value.code == 2


def test_reduce_then_solve(files, tmp_path):
    sys_path = files("sys.json", {"r": 2, "polys": ["x_2 - 1"]})
    out = str(tmp_path / "inst.json")
    code, rep = invoke(["reduce", "--system", sys_path, "--out", out])
    assert code == 0 and rep["verb"] == "reduce"
    inst = SCInstance.from_dict(json.loads(open(out).read()))
    assert SCInstance.from_dict(rep["result"]) == inst
    assert inst.character == (8, 0, 6)
    code, rep = invoke(["solve-sc", "--instance", out])
    assert code == 0 and rep["result"] == {"solvable": True}


def test_solve_sc_unsolvable(files, tmp_path):
    out = str(tmp_path / "inst.json")
    invoke(["reduce", "--system", files("sys.json", {"r": 2, "polys": ["1"]}), "--out", out])
    code, rep = invoke(["solve-sc", "--instance", out])
    assert code == 0 and rep["result"] == {"solvable": False}


def test_solve_esc(files):
    v = wedge_from_factors([parse_poly("x_1*x_2")], 2, 2).to_dict()
    code, rep = invoke(["solve-esc", "--instance", files("esc.json", dict(v, characters=[[2, 0]]))])
    assert code == 0 and rep["result"]["solvable"] is True
    code, rep = invoke(["solve-esc", "--instance", files("esc2.json", dict(v, characters=[[2, 0], [1, 1]]))])
    assert rep["result"]["solvable"] is False


def test_groebner(files):
    ideal = files("I.txt", "# example\nx_1*x_2 - 1\n\nx_2^2 - 1\n")
    code, rep = invoke(["groebner", "--ideal", ideal])
    assert code == 0
    assert rep["result"]["basis"] == ["x_1 - x_2", "x_2^2 - 1"]
    assert rep["result"]["solvable"] is True
    code, rep = invoke(["groebner", "--ideal", files("J.txt", "x_1\nx_1 - 1\n"), "--order", "grevlex"])
    assert rep["result"]["basis"] == ["1"] and rep["result"]["contains_one"] is True


def test_state_and_hull(files):
    v = wedge_from_factors([parse_poly("x_1^3 + 2*x_1*x_2^2")], 2, 3)
    point = files("v.json", v.to_dict())
    code, rep = invoke(["state", "--point", point])
    assert code == 0 and rep["result"] == {"weights": [[3, 0], [1, 2]]}
    code, rep = invoke(["hull", "--point", point])
    assert rep["result"]["in_hull"] is True and rep["result"]["xi"] == ["3/2", "3/2"]
    code, rep = invoke(["hull", "--weights", files("w.json", {"weights": [[2, 0]], "xi": [1, 1]})])
    assert rep["result"]["in_hull"] is False


def test_hilbert_point_roundtrip(files, tmp_path):
    out = str(tmp_path / "pt.json")
    code, rep = invoke(["hilbert-point", "--ideal", files("I.txt", "x_1\n"), "--degree", "2",
                        "--nvars", "2", "--out", out])
    assert code == 0
    v = ExteriorVector.from_dict(rep["result"])
    assert v == ExteriorVector.from_dict(json.loads(open(out).read()))
    assert (v.r, v.d, v.b) == (2, 2, 2)


def test_semistable(files):
    code, rep = invoke(["semistable", "--ideal", files("I.txt", "x_1\n"), "--degree", "2", "--nvars", "2"])
    assert code == 0 and rep["result"]["semistable"] is False
    cert = rep["result"]["certificate"]
    assert set(cert) == {"q", "omega", "groebner"}
    v = wedge_from_factors([parse_poly("x_1*x_2")], 2, 2)
    code, rep = invoke(["semistable", "--point", files("v.json", v.to_dict())])
    assert rep["result"]["semistable"] is True and "checked_pairs" in rep["result"]["certificate"]


def test_gotzmann():
    code, rep = invoke(["gotzmann", "--hilbert-poly", "1,1"])
    assert code == 0 and rep["result"]["gotzmann_number"] == 1
    code, rep = invoke(["gotzmann", "--hilbert-poly", "2", "--nvars", "2", "--degree", "2"])
    assert rep["result"]["Q"] == 1 and rep["result"]["decomposition"] == [0, 0]
    code, rep = invoke(["gotzmann", "--hilbert-poly", "1,1", "--nvars", "2", "--degree", "3"])
    assert code == 2 and rep["error"]["kind"] == "invalid-input"


def test_invalid_inputs_exit_2(files):
    code, rep = invoke(["groebner", "--ideal", files("bad.txt", "x_1 +\n")])
    assert code == 2 and rep["error"]["kind"] == "invalid-input"
    code, rep = invoke(["state", "--point", files("bad.json", "{not json")])
    assert code == 2
    code, rep = invoke(["state", "--point", "/nonexistent/file.json"])
    assert code == 2
    code, rep = invoke(["semistable", "--ideal", files("I.txt", "x_1\n")])
    assert code == 2  # --degree missing


def test_timeout_exit_1(files):
    ideal = files("hard.txt", "x_1^3 - x_2*x_3 + 1\nx_2^3 - x_1*x_3 - 2\nx_3^3 - x_1*x_2 + 3\n")
    code, rep = invoke(["groebner", "--ideal", ideal, "--timeout", "0"])
    assert code == 1 and rep["error"]["kind"] == "timeout"


def test_text_output(files):
    out = io.StringIO()
    run(parse_args(["groebner", "--ideal", files("I.txt", "x_1*x_2 - 1\nx_2^2 - 1\n"), "--output", "text"]), out)
    assert "basis: x_1 - x_2; x_2^2 - 1" in out.getvalue()


def test_inputs_are_digested(files):
    code, rep = invoke(["groebner", "--ideal", files("I.txt", "x_1\n")])
    assert len(rep["inputs"]["ideal"]) == 64
    assert "wall_time" not in rep
    code, rep = invoke(["groebner", "--ideal", files("I.txt", "x_1\n"), "--timing"])
    assert rep["wall_time"] >= 0


def test_byte_identical_runs(files):
    ideal = files("I.txt", "x_1*x_2\nx_3^2\n")
    argv = [sys.executable, "-m", "semistab", "semistable", "--ideal", ideal, "--degree", "2", "--nvars", "3"]
    runs = [subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)]
    runs.append(subprocess.run(argv + ["--jobs", "2"], capture_output=True, check=True).stdout)
    assert runs[0] == runs[1] == runs[2]


def test_main_returns_code(files, capsys):
    assert main(["gotzmann", "--hilbert-poly", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["gotzmann_number"] == 1
