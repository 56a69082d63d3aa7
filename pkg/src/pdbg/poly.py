"""Polynomial deciders for one-letter alphabets and order-0 graphs.

At ``k == 0`` there is at most one vertex and each loop carries a bilabel
``(x, y)``.  A sound cycle emitting first characters ``s`` uses loops
``(s[i], s[i + d])``, so following ``i -> i + d`` splits it into
``gcd(len, d)`` closed walks of the character digraph.  Conversely ``c <= d``
closed walks can be repeated to ``d`` walks of equal length and interleaved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from .core import PairedDbGraph, require_valid
from .scc import tarjan_scc


@dataclass(frozen=True)
class CharDigraph:
    nodes: Tuple[str, ...]
    arcs: FrozenSet[Tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        known = set(self.nodes)
        for u, v in self.arcs:
            if u not in known or v not in known:
                raise ValueError(f"arc ({u},{v}) references unknown symbol")


def solve_unary_alphabet(g: PairedDbGraph, d: int, covering: bool = False) -> bool:
    """One symbol: every cycle is sound, and the only possible cycle is a loop."""
    if len(g.alphabet) != 1:
        raise ValueError("solve_unary_alphabet needs a one-symbol alphabet")
    require_valid(g)
    return any(e.source == e.target for e in g.edges)


def project_k0(g: PairedDbGraph) -> CharDigraph:
    if g.k != 0:
        raise ValueError("project_k0 needs an order-0 graph")
    require_valid(g)
    return CharDigraph(g.alphabet.symbols,
                       {(e.label.first[0], e.label.second[0]) for e in g.edges})


def _components(h: CharDigraph):
    index = {x: i for i, x in enumerate(h.nodes)}
    out = [[] for _ in h.nodes]
    for u, v in sorted(h.arcs):
        out[index[u]].append(index[v])
    comp = tarjan_scc(len(h.nodes), lambda i: out[i])
    return {x: comp[index[x]] for x in h.nodes}


def has_cycle(h: CharDigraph) -> bool:
    comp = _components(h)
    return any(comp[u] == comp[v] for u, v in h.arcs)


def min_closed_walk_cover_count(h: CharDigraph) -> Optional[int]:
    """Fewest closed walks covering every arc, or ``None`` if some arc is on no cycle.

    One closed walk can sweep all arcs of a strongly connected component, and
    no walk spans two components, so the answer is the number of components
    that contain arcs.
    """
    comp = _components(h)
    if any(comp[u] != comp[v] for u, v in h.arcs):
        return None
    return len({comp[u] for u, _ in h.arcs})


def solve_k0(g: PairedDbGraph, d: int, covering: bool = False) -> bool:
    h = project_k0(g)
    if d < 0:
        raise ValueError("negative shift")
    if d == 0:
        # shift 0 forces equal strings: only loops (x, x) are usable
        loops = [(u, v) for u, v in h.arcs if u == v]
        if covering:
            return bool(h.arcs) and len(loops) == len(h.arcs)
        return bool(loops)
    if not covering:
        return has_cycle(h)
    count = min_closed_walk_cover_count(h)
    return count is not None and 1 <= count <= d


def solve(g: PairedDbGraph, d: int, covering: bool = False) -> bool:
    """Dispatch to the applicable polynomial case."""
    if len(g.alphabet) == 1:
        return solve_unary_alphabet(g, d, covering)
    if g.k == 0:
        return solve_k0(g, d, covering)
    raise ValueError("no polynomial case applies (needs |alphabet| = 1 or k = 0)")
