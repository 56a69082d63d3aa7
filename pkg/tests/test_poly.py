import random
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdbg.core import Alphabet, PairedDbGraph, make_graph
from pdbg.exact import exists_covering_sound_cycle, exists_sound_cycle
from pdbg.generators import k0_graph
from pdbg.oracle import brute_cover_count
from pdbg.poly import (CharDigraph, min_closed_walk_cover_count, project_k0, solve,
                       solve_k0, solve_unary_alphabet)


def test_unary_alphabet():
    loop = make_graph(1, "a", [("v", "a", "a")], [("v", "v")])
    bare = make_graph(1, "a", [("v", "a", "a")], [])
    empty = PairedDbGraph(1, Alphabet("a"), {}, ())
    assert solve_unary_alphabet(loop, 3)
    assert solve_unary_alphabet(loop, 3, covering=True)
    assert not solve_unary_alphabet(bare, 1)
    assert not solve_unary_alphabet(empty, 0)
    with pytest.raises(ValueError):
        solve_unary_alphabet(make_graph(1, "ab", [], []), 1)


def test_projection():
    assert project_k0(k0_graph("xy", [("x", "y"), ("y", "x")])).arcs == {("x", "y"), ("y", "x")}
    assert project_k0(k0_graph("xy", [])).arcs == frozenset()
    full = [(a, b) for a in "xy" for b in "xy"]
    assert project_k0(k0_graph("xy", full)).arcs == set(full)
    with pytest.raises(ValueError):
        project_k0(make_graph(1, "a", [("v", "a", "a")], []))


def test_char_digraph_rejects_unknown_symbols():
    with pytest.raises(ValueError):
        CharDigraph(("x",), {("x", "y")})


def test_cover_counts():
    assert min_closed_walk_cover_count(CharDigraph("xy", {("x", "y"), ("y", "x")})) == 1
    assert min_closed_walk_cover_count(CharDigraph("xy", {("x", "y")})) is None
    two = CharDigraph("wxyz", {("w", "x"), ("x", "w"), ("y", "z"), ("z", "y")})
    assert min_closed_walk_cover_count(two) == 2
    assert min_closed_walk_cover_count(CharDigraph("x", set())) == 0


def test_covering_examples():
    digon = k0_graph("xy", [("x", "y"), ("y", "x")])
    assert solve_k0(digon, 1, covering=True)
    loops = k0_graph("xy", [("x", "x"), ("y", "y")])
    assert not solve_k0(loops, 1, covering=True)
    assert solve_k0(loops, 2, covering=True)
    for d in range(5):
        assert not solve_k0(k0_graph("xy", []), d)
        assert not solve_k0(k0_graph("xy", []), d, covering=True)


def test_shift_zero_uses_only_equal_letter_loops():
    digon = k0_graph("xy", [("x", "y"), ("y", "x")])
    assert not solve_k0(digon, 0)
    mixed = k0_graph("xy", [("x", "x"), ("x", "y"), ("y", "x")])
    assert solve_k0(mixed, 0) and not solve_k0(mixed, 0, covering=True)
    assert exists_sound_cycle(mixed, 0) is not None
    assert exists_covering_sound_cycle(mixed, 0) is None


def test_dispatch():
    with pytest.raises(ValueError):
        solve(make_graph(1, "ab", [], []), 1)
    assert solve(k0_graph("xy", [("x", "x")]), 1)


arcs_over_xyz = st.sets(st.tuples(st.sampled_from("xyz"), st.sampled_from("xyz")))


@settings(max_examples=200, deadline=None)
@given(arcs_over_xyz)
def test_cover_count_is_none_exactly_when_an_arc_is_on_no_cycle(arcs):
    h = CharDigraph("xyz", arcs)
    brute = brute_cover_count(h, max_walks=max(1, len(arcs)), max_len=2 * len(arcs) + 3)
    assert min_closed_walk_cover_count(h) == brute


@settings(max_examples=100, deadline=None)
@given(arcs_over_xyz, st.integers(0, 4))
def test_order_zero_matches_exact_solver(arcs, d):
    g = k0_graph("xyz", sorted(arcs))
    assert solve_k0(g, d) == (exists_sound_cycle(g, d) is not None)
    assert solve_k0(g, d, True) == (exists_covering_sound_cycle(g, d) is not None)


def test_large_alphabet_runs_fast():
    rng = random.Random(7)
    symbols = [f"s{i}" for i in range(50)]
    start = time.perf_counter()
    for _ in range(20):
        arcs = {(rng.choice(symbols), rng.choice(symbols)) for _ in range(400)}
        g = k0_graph(symbols, sorted(arcs))
        for d in (1, 3, 7):
            solve_k0(g, d)
            solve_k0(g, d, covering=True)
    assert time.perf_counter() - start < 5.0
