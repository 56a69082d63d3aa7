import io
import subprocess
import sys

import pytest

from pdbg import cli
from pdbg import io as fmt
from pdbg.exact import MAX_STATES_ENV


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    def path(name):
        return str(tmp_path / name)
    return path


def test_gen_reduce_solve_verify(files, capsys):
    assert run(["gen", "--family", "k3", "-o", files("k3.ug")], capsys)[0] == 0
    assert run(["reduce", files("k3.ug"), "--stage", "pdbg", "-o", files("k3.pdbg"),
                "--trace", files("k3.json")], capsys)[0] == 0
    code, out, _ = run(["validate", files("k3.pdbg")], capsys)
    assert code == 0 and out.startswith("VALID k=1 d=4 vertices=44")
    code, out, _ = run(["solve", files("k3.pdbg"), "--covering", "-w", files("w.cyc")], capsys)
    assert code == 0 and out.splitlines()[0] == "COVERING-SOUND-CYCLE: yes"
    code, out, _ = run(["verify", files("k3.pdbg"), files("w.cyc"), "--covering"], capsys)
    assert code == 0 and out.startswith("VALID")
    stages = fmt.load_traces(open(files("k3.json")).read())
    assert [name for name, _ in stages] == ["pdbg"]


def test_witness_then_verify(files, capsys):
    run(["gen", "--family", "c_n", "--n", "4", "-o", files("c4.ug")], capsys)
    code, out, _ = run(["witness", files("c4.ug"), "-o", files("c4.cyc")], capsys)
    assert code == 0 and out.startswith("WITNESS:")
    run(["reduce", files("c4.ug"), "--stage", "pdbg", "-o", files("c4.pdbg")], capsys)
    code, out, _ = run(["verify", files("c4.pdbg"), files("c4.cyc"), "--covering"], capsys)
    assert (code, out.split()[0]) == (0, "VALID")
    code, out, _ = run(["verify", files("c4.pdbg"), files("c4.cyc"), "-d", "3"], capsys)
    assert code == 1 and out.startswith("INVALID")


def test_witness_with_explicit_cycle_and_lift(files, capsys):
    run(["gen", "--family", "k3", "-o", files("k3.ug")], capsys)
    with open(files("hc"), "w") as fh:
        fh.write("hamcycle 1\norder 1 3 2\n")
    code, out, _ = run(["witness", files("k3.ug"), files("hc"), "--lift", "2",
                        "-o", files("w")], capsys)
    assert code == 0 and "d=8" in out
    run(["reduce", files("k3.ug"), "--stage", "pdbg", "--lift", "2", "-o", files("g")], capsys)
    assert run(["verify", files("g"), files("w"), "--covering"], capsys)[0] == 0


def test_witness_without_hamiltonian_cycle(files, capsys):
    run(["gen", "--family", "bowtie", "-o", files("b.ug")], capsys)
    code, out, _ = run(["witness", files("b.ug")], capsys)
    assert code == 1 and out.strip() == "HAMILTONIAN-CYCLE: no"


def test_negative_pipeline_on_stdin(capsys, monkeypatch):
    _, ug, _ = run(["gen", "--family", "p_n", "--n", "3"], capsys)
    code, pdbg_text, _ = run(["reduce", "-", "--stage", "pipeline"], capsys, ug, monkeypatch)
    assert code == 0
    code, out, _ = run(["solve", "-"], capsys, pdbg_text, monkeypatch)
    assert (code, out.strip()) == (1, "SOUND-CYCLE: no")


def test_binarize_from_instance(files, capsys, monkeypatch):
    with open(files("g"), "w") as fh:
        fh.write("pdbg 1\nk 1\nd 1\nalphabet a b\nvertex p a b\nvertex q b a\n"
                 "edge p q\nedge q p\n")
    code, out, _ = run(["reduce", files("g"), "--binarize", "--trace", files("t")], capsys)
    g, d = fmt.load_instance(out)
    assert code == 0 and g.k == 9 and d == 14
    code, out, _ = run(["solve", "-", "--covering"], capsys, out, monkeypatch)
    assert code == 0


def test_poly_engine(files, capsys):
    with open(files("k0"), "w") as fh:
        fh.write("pdbg 1\nk 0\nd unary 11\nalphabet x y\nvertex o - -\n"
                 "edge o o x x\nedge o o y y\n")
    assert run(["solve", files("k0"), "--covering"], capsys)[1] == "COVERING-SOUND-CYCLE: yes\n"
    assert run(["solve", files("k0"), "--covering", "-d", "1"], capsys)[0] == 1
    code, out, _ = run(["solve", files("k0"), "--engine", "exact", "--covering"], capsys)
    assert code == 0 and "length:" in out
    code, _, err = run(["solve", files("k0"), "--engine", "poly", "-w", files("w")], capsys)
    assert code == 2 and err.startswith("error: input:")


def test_resource_cap(files, capsys, monkeypatch):
    run(["gen", "--family", "k3", "-o", files("k3.ug")], capsys)
    run(["reduce", files("k3.ug"), "--stage", "pdbg", "-o", files("k3.pdbg")], capsys)
    code, _, err = run(["solve", files("k3.pdbg"), "--covering", "--max-states", "10"], capsys)
    assert code == 3 and err.startswith("error: resource:")
    monkeypatch.setenv(MAX_STATES_ENV, "10")
    assert run(["solve", files("k3.pdbg"), "--covering"], capsys)[0] == 3


def test_invalid_graph(files, capsys):
    with open(files("bad"), "w") as fh:
        fh.write("pdbg 1\nk 1\nd 1\nalphabet a b\nvertex p a b\nvertex q a b\n")
    code, out, _ = run(["validate", files("bad")], capsys)
    assert code == 1 and out.startswith("INVALID 1 violation")
    code, _, err = run(["solve", files("bad")], capsys)
    assert code == 2 and err.count("\n") == 1 and err.startswith("error: graph:")


@pytest.mark.parametrize("argv", [
    ["solve", "/no/such/file"],
    ["reduce", "/dev/null", "--stage", "pdbg"],
])
def test_input_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and err.startswith("error: input:") and err.count("\n") == 1


@pytest.mark.parametrize("argv", [["frobnicate"], ["solve"], ["gen", "--n", "0"]])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    err = capsys.readouterr().err
    assert info.value.code == 2 and err.startswith("error: usage:") and err.count("\n") == 1


def test_reduce_option_conflicts(files, capsys):
    run(["gen", "--family", "k3", "-o", files("k3.ug")], capsys)
    assert run(["reduce", files("k3.ug")], capsys)[0] == 2
    assert run(["reduce", files("k3.ug"), "--stage", "promise", "--lift", "2"], capsys)[0] == 2
    assert run(["reduce", files("k3.ug"), "--stage", "pdbg", "--lift", "2",
                "--binarize"], capsys)[0] == 2


def test_gen_is_deterministic(capsys):
    assert run(["gen", "--family", "random", "--seed", "4"], capsys)[1] == \
        run(["gen", "--family", "random", "--seed", "4"], capsys)[1]
    code, out, _ = run(["gen", "--family", "random_ugraph", "--n", "6", "--seed", "1"], capsys)
    assert code == 0 and fmt.load_ugraph(out).n == 6


def test_dot(files, capsys):
    run(["gen", "--family", "random", "--seed", "2", "-o", files("g")], capsys)
    code, out, _ = run(["dot", files("g")], capsys)
    assert code == 0 and out.startswith("digraph")


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "pdbg.cli", "gen", "--family", "k3"],
                         capture_output=True, text=True, check=True).stdout
    assert out.startswith("ugraph 1\nn 3\n")


@pytest.mark.slow
def test_triangle_pipeline_end_to_end(capsys, monkeypatch):
    _, ug, _ = run(["gen", "--family", "k3"], capsys)
    _, inst, _ = run(["reduce", "-", "--stage", "pipeline"], capsys, ug, monkeypatch)
    code, out, _ = run(["solve", "-", "--covering"], capsys, inst, monkeypatch)
    assert (code, out.splitlines()[0]) == (0, "COVERING-SOUND-CYCLE: yes")
