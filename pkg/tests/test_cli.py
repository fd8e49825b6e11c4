import io
import json
import subprocess
import sys

import pytest

from ivfgraph.cli import run_cli


def run(*args):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli([str(a) for a in args], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def f(fixtures_dir):
    return lambda name: fixtures_dir / f"{name}.ivfg"


def test_degrees(f):
    code, out, _ = run("degrees", f("example26"))
    assert code == 0
    assert "u1 open=(0.7, 1.3) closed=(1, 2)" in out.splitlines()
    assert "u3 open=(0.6, 1.5) closed=(1, 2)" in out.splitlines()


def test_stats(f):
    assert run("stats", f("example26"))[:2] == (0, "order=3 size=2.35\n")


def test_isometric_reflexive(f):
    assert run("isometric", f("example26"), f("example26"), "--direction", "mutual")[:2] == \
        (0, "true\n")


def test_false_verdicts_exit_zero(f):
    code, out, _ = run("isometric", f("edge_half"), f("edge_quarter"), "--direction", "mutual")
    assert (code, out) == (0, "false\n")
    code, out, _ = run("isomorphic", f("edge_half"), f("edge_half_raised"))
    assert (code, out) == (0, "false\n")


def test_coweak_mapping(f):
    code, out, _ = run("isomorphic", f("edge_half"), f("edge_half_raised"), "--mode", "coweak")
    assert code == 0 and out.startswith("true\nmapping ")


def test_distances_human_and_json(f):
    code, out, _ = run("distances", f("isolated"))
    assert "x y lower=inf upper=inf" in out
    code, out, _ = run("--json", "distances", f("example26"))
    data = json.loads(out)
    assert data["vertices"] == ["u1", "u2", "u3"]
    assert data["lower"][0] == ["0", "5", "5"]
    assert data["upper"][1] == ["10/3", "0", "2.5"]
    data = json.loads(run("distances", f("isolated"), "--json")[1])
    assert data["lower"][0][1] is None


def test_classify(f):
    code, out, _ = run("classify", f("example26"))
    assert "irregular=true" in out.splitlines()
    assert "totally_irregular=false" in out.splitlines()


def test_complement(f):
    code, out, _ = run("complement", f("edge_half_raised"))
    assert code == 0
    assert "edge a b 0.4 0.4" in out
    code, out, err = run("complement", f("no_complement"))
    assert code == 3 and "a" in err and out == ""


def test_gen_round_trips(tmp_path):
    code, out, _ = run("gen", "--vertices", 5, "--density", "1", "--seed", 42)
    assert code == 0
    path = tmp_path / "g.ivfg"
    path.write_text(out)
    code, out2, _ = run("validate", path)
    assert code == 0 and "5 vertices, 10 edges" in out2


def test_laws(f):
    code, out, _ = run("laws", "--seed", 3, "--trials", 5)
    assert code == 0 and out.strip().endswith("ok=true")
    data = json.loads(run("--json", "laws", "--seed", 3, "--trials", 5)[1])
    assert data["ok"] and data["checks"]["transitivity"] == 5


@pytest.mark.parametrize("args, code", [
    (["validate", "example26"], 0),
    (["validate", "malformed"], 2),
    (["validate", "bad_number"], 2),
    (["validate", "invalid_bound"], 3),
    (["validate", "unknown_vertex"], 3),
    (["stats", "invalid_bound"], 3),
    (["isometric", "example26", "invalid_bound"], 3),
    (["validate", "does_not_exist"], 2),
])
def test_exit_codes(f, args, code):
    argv = [args[0]] + [f(a) for a in args[1:]]
    got, out, err = run(*argv)
    assert got == code
    if code:
        assert err and not out


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["isomorphic", "x"],
                                  ["isomorphic", "a", "b", "--mode", "strong"],
                                  ["gen", "--vertices", "3", "--density", "2"]])
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


FIXTURE_COMMANDS = [
    ("validate", "example26"), ("stats", "example26"), ("degrees", "example26"),
    ("distances", "isolated"), ("classify", "example26"), ("complement", "edge_half_raised"),
]


@pytest.mark.parametrize("cmd, name", FIXTURE_COMMANDS)
def test_json_matches_human(f, cmd, name):
    code_h, human, _ = run(cmd, f(name))
    code_j, machine, _ = run(cmd, f(name), "--json")
    assert code_h == code_j == 0
    data = json.loads(machine)
    if cmd == "stats":
        assert human == f"order={data['order']} size={data['size']}\n"
    elif cmd == "degrees":
        for v, d in data["degrees"].items():
            line = f"{v} open=({d['open'][0]}, {d['open'][1]}) closed=({d['closed'][0]}, {d['closed'][1]})"
            assert line in human.splitlines()
    elif cmd == "classify":
        assert sorted(human.splitlines()) == sorted(f"{k}={str(v).lower()}" for k, v in data.items())
    elif cmd == "complement":
        assert data["document"] == human
    elif cmd == "distances":
        vs = data["vertices"]
        for i, u in enumerate(vs):
            for j, v in enumerate(vs):
                lo, hi = data["lower"][i][j], data["upper"][i][j]
                assert f"{u} {v} lower={lo or 'inf'} upper={hi or 'inf'}" in human
    else:
        assert data["valid"] and data["name"] in human


@pytest.mark.parametrize("pair, direction", [
    (("example26", "example26"), "mutual"), (("edge_half", "edge_quarter"), "from"),
    (("edge_half", "edge_half_raised"), "from"),
])
def test_isometric_json_matches_human(f, pair, direction):
    human = run("isometric", *map(f, pair), "--direction", direction)[1]
    data = json.loads(run("isometric", *map(f, pair), "--direction", direction, "--json")[1])
    assert human.splitlines()[0] == str(data["verdict"]).lower()


def test_module_entry_point(f):
    proc = subprocess.run([sys.executable, "-m", "ivfgraph", "stats", str(f("example26"))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "order=3 size=2.35\n"
