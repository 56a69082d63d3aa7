"""Simple undirected graphs on vertices 1..n and hamiltonian cycles over them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Optional, Sequence, Tuple


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: FrozenSet[Tuple[int, int]]
    names: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u},{v}) outside 1..{self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.n or len(set(names)) != self.n:
                raise ValueError("names must be n distinct strings")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_edges(cls, n, edges, names=None):
        return cls(n, frozenset(edges), names)

    def name(self, v: int) -> str:
        return self.names[v - 1] if self.names else f"v{v}"

    def has_edge(self, u, v) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v):
        return sorted([b for a, b in self.edges if a == v] + [a for a, b in self.edges if b == v])

    def sorted_edges(self):
        return sorted(self.edges)


def is_ham_path(g: UndirectedGraph, seq: Sequence[int]) -> bool:
    return (sorted(seq) == list(range(1, g.n + 1))
            and all(g.has_edge(a, b) for a, b in zip(seq, seq[1:])))


def is_ham_cycle(g: UndirectedGraph, seq: Sequence[int]) -> bool:
    return g.n >= 3 and is_ham_path(g, seq) and g.has_edge(seq[-1], seq[0])


@dataclass(frozen=True)
class HamCycle:
    """Vertices of ``graph`` listed in the order of a hamiltonian cycle."""

    graph: UndirectedGraph
    order: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if not is_ham_cycle(self.graph, self.order):
            raise ValueError(f"{self.order} is not a hamiltonian cycle")
