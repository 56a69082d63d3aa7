"""Hardness constructions and their witness builders.

The chain is::

    hamiltonian cycle instance
        --hc_to_promise-->   graph with a hamiltonian cycle, or with no hamiltonian path
        --promise_to_pdbg--> order-1 paired de Bruijn graph, shift n + 1
        --lift_k-->          order k' graph, shift k' * d
        --binarize-->        graph over {0, 1}, order 4l + 5, shift (4l + 10) * d

Every construction is deterministic.  Vertex ids follow a readable scheme
(``s3``, ``v5_2``, ``v5_2'``, ``v5_2''``, ``L:v1#2``, ``B:e7#3``) so traces
and DOT output can be read against the gadget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Hashable, Tuple

from .core import Alphabet, Bilabel, CycleWitness, Edge, PairedDbGraph
from .ugraph import HamCycle, UndirectedGraph


@dataclass(frozen=True)
class ReductionTrace:
    """Where source vertices and edges land in a constructed graph.

    For :func:`lift_k` and :func:`binarize`, ``edge_map`` sends a source edge
    ``(x, y)`` to a target vertex path from the first vertex of ``x``'s image
    to the first vertex of ``y``'s image, so closed walks can be transported
    with :meth:`transport`.  For :func:`promise_to_pdbg` it lists the target
    edges generated from each undirected source edge.
    """

    vertex_map: Dict[Hashable, Tuple[str, ...]]
    edge_map: Dict[Hashable, Tuple]
    shift: int

    def transport(self, w: CycleWitness) -> CycleWitness:
        n = len(w.vertices)
        path = []
        for i in range(n):
            step = self.edge_map[(w.vertices[i], w.vertices[(i + 1) % n])]
            path.extend(step[:-1])
        return CycleWitness(tuple(path), self.shift)


# -- graph doubling ----------------------------------------------------------------

def hc_to_promise(G: UndirectedGraph) -> UndirectedGraph:
    """Split vertex 1 into ``a``/``b``, take two copies, join them through ``a2``/``b2``.

    The result has a hamiltonian cycle if ``G`` does, and no hamiltonian path
    if ``G`` has no hamiltonian cycle.
    """
    n = G.n
    if n < 3:
        raise ValueError("hc_to_promise needs at least three vertices")
    names = []
    for copy, (a, b) in enumerate((("a1", "b1"), ("a3", "b3"))):
        names += [a, b] + [f"G{copy + 1}.{G.name(j)}" for j in range(2, n + 1)]
    names += ["a2", "b2"]

    def image(copy, j):
        base = copy * (n + 1)
        return base + j + 1 if j >= 2 else None

    edges = set()
    for copy in (0, 1):
        a, b = copy * (n + 1) + 1, copy * (n + 1) + 2
        for x, y in G.sorted_edges():
            if x == 1:
                edges.add((a, image(copy, y)))
                edges.add((b, image(copy, y)))
            else:
                edges.add((image(copy, x), image(copy, y)))
    a1, b1, a3, b3 = 1, 2, n + 2, n + 3
    a2, b2 = 2 * n + 3, 2 * n + 4
    edges |= {(a1, a2), (a2, a3), (b1, b2), (b2, b3)}
    return UndirectedGraph(2 * n + 4, frozenset(edges), tuple(names))


def promote_hc_witness(G: UndirectedGraph, c: HamCycle) -> HamCycle:
    if c.graph != G:
        raise ValueError("cycle belongs to a different graph")
    n = G.n
    p = c.order.index(1)
    rest = c.order[p + 1:] + c.order[:p]
    first = [j + 1 for j in rest]
    second = [n + 2 + j for j in reversed(rest)]
    a1, b1, a3, b3, a2, b2 = 1, 2, n + 2, n + 3, 2 * n + 3, 2 * n + 4
    order = [a1] + first + [b1, b2, b3] + second + [a3, a2]
    return HamCycle(hc_to_promise(G), tuple(order))


# -- hamiltonian paths derived from a cycle ----------------------------------------

def _oriented(c: HamCycle, u, v):
    if u == v or not c.graph.has_edge(u, v):
        raise ValueError(f"{{{u},{v}}} is not an edge")
    order = list(c.order)
    i, j = order.index(u), order.index(v)
    if i > j:
        order.reverse()
        i, j = len(order) - 1 - i, len(order) - 1 - j
    return order, i, j


def ham_path_with_endpoint(c: HamCycle, v):
    if v not in c.order:
        raise ValueError(f"unknown vertex {v}")
    p = c.order.index(v)
    return c.order[p:] + c.order[:p]


def ham_path_through_edge(c: HamCycle, u, v):
    """Hamiltonian path using edge ``{u, v}``, traversed from ``u`` to ``v``."""
    o, i, j = _oriented(c, u, v)
    return tuple(o[j + 1:] + o[:i + 1] + o[i + 1:j + 1][::-1])


def ham_path_ordered(c: HamCycle, u, v, w):
    """Like :func:`ham_path_through_edge`, with ``v`` lying between ``u`` and ``w``."""
    o, i, j = _oriented(c, u, v)
    if w in (u, v) or w not in o:
        raise ValueError(f"bad third vertex {w}")
    k = o.index(w)
    if i < k < j:
        return tuple(o[j + 1:] + o[:i + 1] + o[i + 1:j + 1][::-1])
    return tuple(o[i:j][::-1] + o[j:] + o[:i])


# -- the block gadget --------------------------------------------------------------

def _sep(i):
    return f"s{i}"


def _plain(i, j):
    return f"v{i}_{j}"


def _pivot(i, j):
    return f"v{i}_{j}'"


def _second(i, j):
    return f"v{i}_{j}''"


def promise_to_pdbg(G: UndirectedGraph):
    """Order-1 paired de Bruijn graph of ``2n + 2`` blocks with shift ``n + 1``.

    Blocks 1 and ``2n + 2`` copy ``G``.  Block ``i`` in between holds two
    copies of ``G`` sharing only vertex ``i // 2`` (the pivot), so any walk
    through the block passes that vertex.  Returns ``(graph, shift, trace)``.
    """
    n = G.n
    if n < 3:
        raise ValueError("promise_to_pdbg needs at least three vertices")
    last = 2 * n + 2
    tok_t = {i: f"t{i}" for i in range(1, last + 1)}

    def t_next(i):
        return tok_t[i % last + 1]

    u = "u"
    symbols = [tok_t[i] for i in range(1, last + 1)] + [u]
    for i in range(2, last + 1):
        if i % 2 == 0:
            symbols += [f"c{i}_{j}" for j in range(1, n + 1)]
        else:
            p = i // 2
            symbols += [f"c{i}_{j}" for j in range(1, n + 1) if j != p]
            symbols.append(f"c{i}_{p}'")
            symbols += [f"c{i}_{j}''" for j in range(1, n + 1) if j != p]

    def lab(a, b):
        return Bilabel((a,), (b,))

    vertices = {}
    for i in range(1, last + 1):
        vertices[_sep(i)] = lab(tok_t[i], t_next(i))
        if i == 1:
            for j in range(1, n + 1):
                vertices[_plain(1, j)] = lab(u, f"c2_{j}")
        elif i == last:
            for j in range(1, n + 1):
                vertices[_plain(last, j)] = lab(f"c{last}_{j}", u)
        else:
            p = i // 2
            even = i % 2 == 0
            for j in range(1, n + 1):
                if j != p:
                    vertices[_plain(i, j)] = lab(f"c{i}_{j}", f"c{i + 1}_{j}")
            if even:
                vertices[_pivot(i, p)] = lab(f"c{i}_{p}", f"c{i + 1}_{p}'")
            else:
                vertices[_pivot(i, p)] = lab(f"c{i}_{p}'", f"c{i + 1}_{p}")
            for j in range(1, n + 1):
                if j != p:
                    if even:
                        vertices[_second(i, j)] = lab(f"c{i}_{j}", f"c{i + 1}_{j}''")
                    else:
                        vertices[_second(i, j)] = lab(f"c{i}_{j}''", f"c{i + 1}_{j}")

    edges = []
    seen = set()

    def add(a, b, bucket=None):
        if (a, b) not in seen:
            seen.add((a, b))
            edges.append(Edge(a, b))
        if bucket is not None:
            bucket.append((a, b))

    for i in range(1, n + 1):
        add(_sep(1), _plain(1, i))
        add(_plain(1, i), _sep(2))
        add(_sep(last), _plain(last, i))
        add(_plain(last, i), _sep(1))
    for i in range(2, last):
        p = i // 2
        for j in range(1, n + 1):
            if j != p:
                add(_sep(i), _plain(i, j))
                add(_second(i, j), _sep(i + 1))
        add(_sep(i), _pivot(i, p))
        add(_pivot(i, p), _sep(i + 1))

    edge_map = {}
    for x, y in G.sorted_edges():
        bucket = []
        for i, j in ((x, y), (y, x)):
            add(_plain(1, i), _plain(1, j), bucket)
            add(_plain(last, i), _plain(last, j), bucket)
            add(_plain(2 * j, i), _pivot(2 * j, j), bucket)
            add(_plain(2 * j + 1, i), _pivot(2 * j + 1, j), bucket)
            add(_pivot(2 * i, i), _second(2 * i, j), bucket)
            add(_pivot(2 * i + 1, i), _second(2 * i + 1, j), bucket)
            for r in range(2, last):
                p = r // 2
                if i != p and j != p:
                    add(_plain(r, i), _plain(r, j), bucket)
                    add(_second(r, i), _second(r, j), bucket)
        edge_map[(G.name(x), G.name(y))] = tuple(bucket)

    vertex_map = {}
    for j in range(1, n + 1):
        copies = [_plain(1, j)]
        for i in range(2, last):
            if j == i // 2:
                copies.append(_pivot(i, j))
            else:
                copies += [_plain(i, j), _second(i, j)]
        copies.append(_plain(last, j))
        vertex_map[G.name(j)] = tuple(copies)

    g = PairedDbGraph(1, Alphabet(symbols), vertices, tuple(edges))
    return g, n + 1, ReductionTrace(vertex_map, edge_map, n + 1)


def _pass(n, perm):
    """One trip around the block ring following the index sequence ``perm``."""
    last = 2 * n + 2
    seq = [_sep(1)] + [_plain(1, p) for p in perm]
    for i in range(2, last):
        pivot = i // 2
        seq.append(_sep(i))
        passed = False
        for p in perm:
            if p == pivot:
                seq.append(_pivot(i, p))
                passed = True
            else:
                seq.append(_second(i, p) if passed else _plain(i, p))
    seq.append(_sep(last))
    seq += [_plain(last, p) for p in perm]
    return seq


def witness_paths(c: HamCycle):
    """Hamiltonian paths whose passes together cover every gadget edge."""
    G = c.graph
    paths = [tuple(c.order)]
    for v in range(1, G.n + 1):
        p = ham_path_with_endpoint(c, v)
        paths += [p, p[::-1]]
    ordered_edges = [(x, y) for a, b in G.sorted_edges() for x, y in ((a, b), (b, a))]
    for x, y in ordered_edges:
        paths.append(ham_path_through_edge(c, x, y))
    for x, y in ordered_edges:
        for z in range(1, G.n + 1):
            if z not in (x, y):
                p = ham_path_ordered(c, x, y, z)
                paths += [p, p[::-1]]
    return paths


def build_witness_cycle(G: UndirectedGraph, c: HamCycle) -> CycleWitness:
    """Covering sound cycle of ``promise_to_pdbg(G)`` built from a hamiltonian cycle.

    Each hamiltonian path yields one pass from ``s1`` around the ring; passes
    are joined at ``s1``.  This is sound because every block-1 vertex starts
    with ``u`` and every block-``2n+2`` vertex ends with ``u``.
    """
    if c.graph != G:
        raise ValueError("cycle belongs to a different graph")
    if G.n < 3:
        raise ValueError("needs at least three vertices")
    walk = []
    for perm in witness_paths(c):
        walk += _pass(G.n, perm)
    return CycleWitness(tuple(walk), G.n + 1)


# -- order lifting -----------------------------------------------------------------

def _fresh_symbol(alphabet, stem):
    sym = stem
    while sym in alphabet:
        sym += "'"
    return sym


def lift_k(g: PairedDbGraph, d: int, k_new: int):
    """Replace each order-1 vertex by a chain of ``k_new`` vertices padded with a new symbol.

    Returns ``(graph, shift, trace)`` with shift ``k_new * d``.
    """
    if g.k != 1:
        raise ValueError("lift_k needs an order-1 graph")
    if k_new < 1:
        raise ValueError("target order must be >= 1")
    f = _fresh_symbol(g.alphabet, "f")
    vertices = {}
    edges = []
    vertex_map = {}
    for vid, lab in g.vertices.items():
        (a,), (b,) = lab.first, lab.second
        chain = []
        for j in range(k_new):
            pad_left, pad_right = (f,) * (k_new - 1 - j), (f,) * j
            cid = f"L:{vid}#{j + 1}"
            vertices[cid] = Bilabel(pad_left + (a,) + pad_right, pad_left + (b,) + pad_right)
            chain.append(cid)
        edges += [Edge(x, y) for x, y in zip(chain, chain[1:])]
        vertex_map[vid] = tuple(chain)
    edge_map = {}
    for e in g.edges:
        src_chain, dst_chain = vertex_map[e.source], vertex_map[e.target]
        edges.append(Edge(src_chain[-1], dst_chain[0]))
        edge_map[(e.source, e.target)] = src_chain + (dst_chain[0],)
    out = PairedDbGraph(k_new, Alphabet(g.alphabet.symbols + (f,)), vertices, tuple(edges))
    return out, k_new * d, ReductionTrace(vertex_map, edge_map, k_new * d)


# -- binary alphabet ---------------------------------------------------------------

CENTER = "01110"
JOINT = "10001"


def code_length(alphabet_size: int) -> int:
    return max(1, (alphabet_size - 1).bit_length())


def encode_symbol(index: int, width: int) -> str:
    """``width``-bit binary index with each 0 written as 01 and each 1 as 10."""
    return "".join("01" if bit == "0" else "10" for bit in format(index, f"0{width}b"))


def binarize(g: PairedDbGraph, d: int):
    """Re-encode an order-1 graph over ``{0, 1}`` with order ``4l + 5``.

    Vertex ``(a, b)`` becomes ``(E(a), E(b))`` with ``E(x) = enc(x) 01110 enc(x)``;
    each edge becomes the path spelling ``E(a) 10001 E(b)`` over
    ``E(c) 10001 E(d)``, i.e. ``4l + 9`` inner vertices and ``4l + 10`` edges.
    Inner vertices of different edges with equal bilabels are the same
    vertex, as in any de Bruijn graph.  Returns ``(graph, shift, trace)``.
    """
    if g.k != 1:
        raise ValueError("binarize needs an order-1 graph")
    if len(g.alphabet) < 2:
        raise ValueError("binarize needs at least two symbols")
    width = code_length(len(g.alphabet))
    k_new = 4 * width + 5
    step = 4 * width + 10
    block = {sym: encode_symbol(i, width) + CENTER + encode_symbol(i, width)
             for sym, i in g.alphabet.index.items()}

    vertices = {}
    by_label = {}
    vertex_map = {}
    for vid, lab in g.vertices.items():
        (a,), (b,) = lab.first, lab.second
        new = Bilabel(tuple(block[a]), tuple(block[b]))
        tid = f"B:{vid}"
        vertices[tid] = new
        by_label[new] = tid
        vertex_map[vid] = (tid,)
    edges = []
    seen = set()
    edge_map = {}
    for m, e in enumerate(g.edges):
        x, y = g.vertices[e.source], g.vertices[e.target]
        first = block[x.first[0]] + JOINT + block[y.first[0]]
        second = block[x.second[0]] + JOINT + block[y.second[0]]
        path = [vertex_map[e.source][0]]
        for off in range(1, step):
            new = Bilabel(tuple(first[off:off + k_new]), tuple(second[off:off + k_new]))
            tid = by_label.get(new)
            if tid is None:
                tid = f"B:e{m}#{off}"
                vertices[tid] = new
                by_label[new] = tid
            path.append(tid)
        path.append(vertex_map[e.target][0])
        for a, b in zip(path, path[1:]):
            if (a, b) not in seen:
                seen.add((a, b))
                edges.append(Edge(a, b))
        edge_map[(e.source, e.target)] = tuple(path)
    out = PairedDbGraph(k_new, Alphabet(("0", "1")), vertices, tuple(edges))
    return out, step * d, ReductionTrace(vertex_map, edge_map, step * d)


__all__ = [
    "ReductionTrace", "hc_to_promise", "promote_hc_witness", "ham_path_with_endpoint",
    "ham_path_through_edge", "ham_path_ordered", "promise_to_pdbg", "build_witness_cycle",
    "witness_paths", "lift_k", "binarize", "encode_symbol", "code_length",
]
