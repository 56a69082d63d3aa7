"""Paired de Bruijn graphs: bilabels, spelling, shift matching, soundness.

Labels are tuples of tokens rather than Python strings so that alphabets may
use multi-character symbols such as ``"c3_2''"``.  Helpers accept plain
strings and split them into single-character tokens.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Optional, Tuple, Union

Label = Tuple[str, ...]


class GraphError(ValueError):
    """Raised when an operation needs a valid graph and gets an invalid one."""


class WalkError(ValueError):
    """Raised for a walk or cycle that is not valid in its graph."""


def as_label(text: Union[str, Iterable[str]]) -> Label:
    if isinstance(text, str):
        return tuple(text)
    return tuple(text)


class Bilabel(NamedTuple):
    first: Label
    second: Label

    @classmethod
    def of(cls, first, second) -> "Bilabel":
        """Build from two strings (one token per character) or token sequences."""
        return cls(as_label(first), as_label(second))

    def __str__(self):
        return f"({''.join(self.first)},{''.join(self.second)})"


class Edge(NamedTuple):
    source: str
    target: str
    # Only used when k == 0; otherwise the edge bilabel is implied by its ends.
    label: Optional[Bilabel] = None


@dataclass(frozen=True)
class Alphabet:
    symbols: Tuple[str, ...]
    index: Mapping[str, int] = field(init=False, repr=False, compare=False)

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        object.__setattr__(self, "symbols", syms)
        object.__setattr__(self, "index", {s: i for i, s in enumerate(syms)})
        if len(self.index) != len(syms):
            raise ValueError("alphabet has duplicate symbols")
        for s in syms:
            if not isinstance(s, str) or not s:
                raise ValueError(f"bad alphabet symbol {s!r}")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, sym):
        return sym in self.index


@dataclass(frozen=True)
class PairedDbGraph:
    """A paired de Bruijn graph of order ``k``.

    ``vertices`` maps opaque vertex ids to bilabels of length ``k``.  For
    ``k >= 1`` edges are ordered vertex pairs whose bilabel is derived from
    the endpoint labels.  For ``k == 0`` every vertex label is empty, so each
    edge carries its own length-1 bilabel.
    """

    k: int
    alphabet: Alphabet
    vertices: Mapping[str, Bilabel]
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", dict(self.vertices))
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))

    def edge_bilabel(self, edge: Edge) -> Bilabel:
        if self.k == 0:
            return edge.label
        a = self.vertices[edge.source]
        b = self.vertices[edge.target]
        return Bilabel(a.first + b.first[-1:], a.second + b.second[-1:])

    def edge_set(self):
        """Edges keyed the way walks identify them."""
        if self.k == 0:
            return {(e.source, e.target, e.label) for e in self.edges}
        return {(e.source, e.target) for e in self.edges}

    def successors(self):
        out = {v: [] for v in self.vertices}
        for e in self.edges:
            out[e.source].append(e)
        return out


def make_graph(k, alphabet, vertices, edges) -> PairedDbGraph:
    """Convenience constructor accepting plain strings for labels.

    ``vertices`` is a mapping or a sequence of ``(id, first, second)``;
    ``edges`` holds ``(u, v)`` pairs or, at ``k == 0``, ``(u, v, first, second)``.
    """
    if not isinstance(alphabet, Alphabet):
        alphabet = Alphabet(alphabet)
    if isinstance(vertices, Mapping):
        vmap = {vid: (lab if isinstance(lab, Bilabel) else Bilabel.of(*lab))
                for vid, lab in vertices.items()}
    else:
        vmap = {vid: Bilabel.of(a, b) for vid, a, b in vertices}
    elist = []
    for e in edges:
        if isinstance(e, Edge):
            elist.append(e)
        elif len(e) == 2:
            elist.append(Edge(e[0], e[1]))
        elif len(e) == 3:
            elist.append(Edge(e[0], e[1], e[2]))
        else:
            elist.append(Edge(e[0], e[1], Bilabel.of(e[2], e[3])))
    return PairedDbGraph(k, alphabet, vmap, tuple(elist))


class Violation(NamedTuple):
    kind: str
    subject: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.subject}: {self.detail}"


def validate_graph(g: PairedDbGraph):
    """Return the list of violated graph invariants (empty if valid)."""
    report = []
    k = g.k
    if not isinstance(k, int) or k < 0:
        return [Violation("bad order", "graph", f"k={k!r}")]
    alpha = g.alphabet

    def check_symbols(lab, subject):
        for comp in (lab.first, lab.second):
            for sym in comp:
                if sym not in alpha:
                    report.append(Violation("unknown symbol", subject, repr(sym)))

    seen = {}
    for vid, lab in g.vertices.items():
        subject = f"vertex {vid}"
        if len(lab.first) != k or len(lab.second) != k:
            report.append(Violation("bad label length", subject,
                                    f"{lab} has length != {k}"))
            continue
        check_symbols(lab, subject)
        if lab in seen:
            report.append(Violation("duplicate vertex bilabel", subject,
                                    f"{lab} already used by {seen[lab]}"))
        else:
            seen[lab] = vid

    seen_edges = {}
    for e in g.edges:
        subject = f"edge {e.source}->{e.target}"
        if e.source not in g.vertices or e.target not in g.vertices:
            report.append(Violation("unknown endpoint", subject, "endpoint not a vertex"))
            continue
        if k == 0:
            lab = e.label
            if lab is None or len(lab.first) != 1 or len(lab.second) != 1:
                report.append(Violation("bad edge label", subject,
                                        "k=0 edges need an explicit length-1 bilabel"))
                continue
            check_symbols(lab, subject)
        else:
            if e.label is not None:
                report.append(Violation("bad edge label", subject,
                                        "explicit edge bilabels are only allowed at k=0"))
                continue
            a, b = g.vertices[e.source], g.vertices[e.target]
            if len(a.first) != k or len(b.first) != k:
                continue
            if a.first[1:] != b.first[:-1] or a.second[1:] != b.second[:-1]:
                report.append(Violation("overlap mismatch", subject,
                                        f"{a} and {b} do not overlap by {k - 1}"))
                continue
            lab = g.edge_bilabel(e)
        if lab in seen_edges:
            report.append(Violation("duplicate edge bilabel", subject,
                                    f"{lab} already used by {seen_edges[lab]}"))
        else:
            seen_edges[lab] = f"{e.source}->{e.target}"
    return report


def require_valid(g: PairedDbGraph):
    report = validate_graph(g)
    if report:
        raise GraphError(f"invalid graph: {report[0]}" +
                         (f" (+{len(report) - 1} more)" if len(report) > 1 else ""))


@dataclass(frozen=True)
class Walk:
    vertices: Tuple[str, ...]
    # k == 0 only: bilabel of each traversed edge, len(vertices) - 1 of them.
    labels: Optional[Tuple[Bilabel, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))


@dataclass(frozen=True)
class CycleWitness:
    """A closed walk read cyclically, plus the shift it is claimed sound for."""

    vertices: Tuple[str, ...]
    shift: int
    # k == 0 only: bilabel of the edge leaving each position.
    labels: Optional[Tuple[Bilabel, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    def __len__(self):
        return len(self.vertices)

    def rotate(self, r: int) -> "CycleWitness":
        n = len(self.vertices)
        r %= n
        labels = None if self.labels is None else self.labels[r:] + self.labels[:r]
        return CycleWitness(self.vertices[r:] + self.vertices[:r], self.shift, labels)


class SpelledPair(NamedTuple):
    first: Label
    second: Label
    cyclic: bool


def _steps(g, w):
    """Yield the edge keys traversed by ``w`` (cyclically for witnesses)."""
    verts = w.vertices
    cyclic = isinstance(w, CycleWitness)
    n = len(verts)
    if n == 0:
        raise WalkError("empty walk")
    count = n if cyclic else n - 1
    if g.k == 0:
        labels = w.labels
        if labels is None or len(labels) != count:
            raise WalkError(f"k=0 walk needs {count} edge labels")
    for i in range(count):
        u, v = verts[i], verts[(i + 1) % n]
        yield (u, v) if g.k else (u, v, labels[i])


def check_walk(g: PairedDbGraph, w) -> None:
    for v in w.vertices:
        if v not in g.vertices:
            raise WalkError(f"unknown vertex {v!r}")
    edges = g.edge_set()
    for key in _steps(g, w):
        if key not in edges:
            raise WalkError(f"no edge {key[0]}->{key[1]}")


def spell(g: PairedDbGraph, w: Union[Walk, CycleWitness]) -> SpelledPair:
    check_walk(g, w)
    cyclic = isinstance(w, CycleWitness)
    if g.k == 0:
        labels = w.labels
        return SpelledPair(tuple(lab.first[0] for lab in labels),
                           tuple(lab.second[0] for lab in labels), cyclic)
    labs = [g.vertices[v] for v in w.vertices]
    if cyclic:
        return SpelledPair(tuple(b.first[0] for b in labs),
                           tuple(b.second[0] for b in labs), True)
    first = labs[0].first + tuple(b.first[-1] for b in labs[1:])
    second = labs[0].second + tuple(b.second[-1] for b in labs[1:])
    return SpelledPair(first, second, False)


def matches_with_shift(p: SpelledPair, d: int) -> bool:
    """``second[i] == first[i + d]``; cyclic pairs wrap, with ``d`` taken mod n."""
    s, t = p.first, p.second
    n = len(s)
    if len(t) != n:
        raise ValueError("components differ in length")
    if d < 0:
        raise ValueError("negative shift")
    if not p.cyclic:
        if d > n:
            raise ValueError(f"linear shift {d} exceeds length {n}")
        return all(s[i + d] == t[i] for i in range(n - d))
    if n == 0:
        raise ValueError("empty cyclic string")
    d %= n
    return all(s[(i + d) % n] == t[i] for i in range(n))


def is_sound(g: PairedDbGraph, w: Union[Walk, CycleWitness], d: Optional[int] = None) -> bool:
    if d is None:
        if not isinstance(w, CycleWitness):
            raise ValueError("shift required for a linear walk")
        d = w.shift
    return matches_with_shift(spell(g, w), d)


def is_covering(g: PairedDbGraph, w: CycleWitness) -> bool:
    check_walk(g, w)
    return g.edge_set() <= set(_steps(g, w))

