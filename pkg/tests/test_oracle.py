import ast
import pathlib

import pytest

from pdbg import oracle
from pdbg.core import Bilabel, make_graph
from pdbg.generators import bowtie, complete, k0_graph, path, random_pdbg
from pdbg.oracle import brute_cover_count, enumerate_sound_cycles, find_ham_cycle, find_ham_path
from pdbg.poly import CharDigraph
from pdbg.scc import tarjan_scc
from pdbg.ugraph import is_ham_path


def test_digon(digon):
    found = enumerate_sound_cycles(digon, 1, 4)
    assert found[0].vertices == ("p", "q")
    # (p q p q) is the same closed walk traversed twice, reported separately
    assert {w.vertices for w in found} == {("p", "q"), ("p", "q", "p", "q")}
    assert enumerate_sound_cycles(digon, 0, 4) == []


def test_bad_bound(digon):
    with pytest.raises(ValueError):
        enumerate_sound_cycles(digon, 1, 0)


def test_no_two_results_are_rotations():
    for seed in range(200):
        g, d = random_pdbg(seed, max_vertices=4, max_alphabet=2)
        seen = set()
        for w in enumerate_sound_cycles(g, d, 6):
            rots = {w.vertices[r:] + w.vertices[:r] for r in range(len(w))}
            assert not rots & seen
            seen |= rots


def test_limit_stops_early():
    g = make_graph(1, "a", [("v", "a", "a")], [("v", "v")])
    assert len(enumerate_sound_cycles(g, 1, 50, limit=1)) == 1
    assert len(enumerate_sound_cycles(g, 1, 5)) == 5


def test_order_zero_cycles():
    g = k0_graph("xy", [("x", "y"), ("y", "x")])
    found = enumerate_sound_cycles(g, 1, 2)
    assert [w.labels for w in found] == [(Bilabel.of("x", "y"), Bilabel.of("y", "x"))]


def test_cover_count_examples():
    assert brute_cover_count(CharDigraph("xy", {("x", "y"), ("y", "x")}), 3, 4) == 1
    assert brute_cover_count(CharDigraph("xy", {("x", "x"), ("y", "y")}), 3, 4) == 2
    assert brute_cover_count(CharDigraph("xy", {("x", "y")}), 3, 4) is None
    assert brute_cover_count(CharDigraph("xy", {("x", "x"), ("y", "y")}), 1, 4) is None
    with pytest.raises(ValueError):
        brute_cover_count(CharDigraph("x", set()), 0, 1)


def test_hamiltonian_search():
    assert find_ham_cycle(complete(3)) is not None
    assert find_ham_cycle(bowtie()) is None
    assert is_ham_path(bowtie(), find_ham_path(bowtie()))
    assert find_ham_cycle(path(4)) is None
    assert find_ham_path(path(4)) in ((1, 2, 3, 4), (4, 3, 2, 1))


def test_oracle_does_not_import_solvers():
    tree = ast.parse(pathlib.Path(oracle.__file__).read_text())
    imported = set()
    for node in ast.walk(tree):
        if isinstance(node, ast.ImportFrom):
            imported.add(node.module)
        elif isinstance(node, ast.Import):
            imported.update(a.name for a in node.names)
    assert imported <= {"__future__", "typing", "core", "ugraph"}


def test_tarjan_small():
    succ = {0: [1], 1: [2], 2: [0], 3: [3], 4: []}
    comp = tarjan_scc(5, lambda v: succ[v])
    assert comp[0] == comp[1] == comp[2]
    assert len({comp[0], comp[3], comp[4]}) == 3


def test_tarjan_deep_chain_is_iterative():
    n = 50_000
    comp = tarjan_scc(n, lambda v: [v + 1] if v + 1 < n else [0])
    assert len(set(comp)) == 1
