"""Deterministic instance families for tests, benchmarks and the CLI."""

from __future__ import annotations

import itertools
import random
import string

from .core import Alphabet, Bilabel, Edge, PairedDbGraph
from .ugraph import UndirectedGraph


def complete(n):
    return UndirectedGraph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def cycle(n):
    return UndirectedGraph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n):
    return UndirectedGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def bowtie():
    """Two triangles sharing vertex 3: no hamiltonian cycle, but a hamiltonian path."""
    return UndirectedGraph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


def claw():
    return UndirectedGraph.from_edges(4, [(1, 2), (1, 3), (1, 4)])


def paw():
    """Claw plus one edge between two leaves."""
    return UndirectedGraph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3)])


def random_ugraph(seed, n, p=0.5):
    rng = random.Random(seed)
    return UndirectedGraph.from_edges(
        n, [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p])


FAMILIES = {
    "k3": lambda n: complete(3),
    "k4": lambda n: complete(4),
    "k_n": complete,
    "c_n": cycle,
    "p_n": path,
    "bowtie": lambda n: bowtie(),
    "claw": lambda n: claw(),
    "paw": lambda n: paw(),
}


def random_pdbg(seed, max_vertices=6, max_alphabet=4, max_shift=3, edge_prob=None):
    """Random order-1 instance; returns ``(graph, shift)``."""
    rng = random.Random(seed)
    sigma = rng.randint(1, max_alphabet)
    symbols = string.ascii_lowercase[:sigma]
    pairs = [(a, b) for a in symbols for b in symbols]
    nv = rng.randint(1, min(max_vertices, len(pairs)))
    labels = rng.sample(pairs, nv)
    vertices = {f"x{i}": Bilabel((a,), (b,)) for i, (a, b) in enumerate(labels)}
    p = rng.uniform(0.15, 0.9) if edge_prob is None else edge_prob
    edges = [Edge(u, v) for u in vertices for v in vertices if rng.random() < p]
    d = rng.randint(0, max_shift)
    return PairedDbGraph(1, Alphabet(symbols), vertices, tuple(edges)), d


def k0_graph(symbols, arcs):
    """Order-0 graph with one vertex and a loop labeled ``(x, y)`` per arc."""
    return PairedDbGraph(0, Alphabet(symbols), {"o": Bilabel((), ())},
                         tuple(Edge("o", "o", Bilabel((x,), (y,))) for x, y in arcs))


def all_k0_graphs(symbols):
    """Every order-0 graph over ``symbols``: one per subset of the ``|symbols|^2`` arcs."""
    arcs = [(x, y) for x in symbols for y in symbols]
    for mask in range(1 << len(arcs)):
        yield k0_graph(symbols, [a for i, a in enumerate(arcs) if mask >> i & 1])
