"""Line-oriented text formats for instances, undirected graphs, cycles and traces.

Every file starts with a ``<kind> <version>`` header.  Blank lines and lines
starting with ``#`` are ignored.  Fields are separated by whitespace, so
vertex ids and alphabet tokens must not contain whitespace; label tokens
are joined with commas, so tokens must not contain commas either.  See the
README for the full grammar.
"""

from __future__ import annotations

import json
from typing import List, Optional, Tuple

from .core import Alphabet, Bilabel, CycleWitness, Edge, PairedDbGraph
from .reductions import ReductionTrace
from .ugraph import HamCycle, UndirectedGraph

VERSION = 1
EMPTY_LABEL = "-"


class FormatError(ValueError):
    """Malformed input text; ``line`` is 1-based, or 0 when not line specific."""

    def __init__(self, message, line=0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def _records(text: str, kind: str) -> List[Tuple[int, List[str]]]:
    rows = []
    for no, raw in enumerate(text.splitlines(), 1):
        fields = raw.split()
        if fields and not fields[0].startswith("#"):
            rows.append((no, fields))
    if not rows:
        raise FormatError(f"empty input, expected '{kind} {VERSION}' header")
    no, head = rows[0]
    if head[0] != kind:
        raise FormatError(f"expected '{kind}' header, got '{head[0]}'", no)
    if head[1:] != [str(VERSION)]:
        raise FormatError(f"unsupported {kind} format version {' '.join(head[1:])!r}", no)
    return rows[1:]


def sniff(text: str) -> Optional[str]:
    """Header keyword of ``text`` (``"pdbg"``, ``"ugraph"``, ...), or ``None``."""
    for raw in text.splitlines():
        fields = raw.split()
        if fields and not fields[0].startswith("#"):
            return fields[0]
    return None


def _int(tok, no, what, minimum=0):
    try:
        value = int(tok, 10)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {tok!r}", no) from None
    if value < minimum:
        raise FormatError(f"{what} must be >= {minimum}, got {value}", no)
    return value


def _need(fields, count, no):
    if len(fields) != count:
        raise FormatError(f"'{fields[0]}' takes {count - 1} field(s), got {len(fields) - 1}", no)


def _parse_shift(fields, no):
    # "d 4" or the unary form "d unary 1111" ("d unary" alone is 0)
    if len(fields) >= 2 and fields[1] == "unary":
        if len(fields) > 3:
            raise FormatError("unary shift takes one string of 1s", no)
        ones = fields[2] if len(fields) == 3 else ""
        if set(ones) - {"1"}:
            raise FormatError(f"unary shift must contain only 1s, got {ones!r}", no)
        return len(ones)
    _need(fields, 2, no)
    return _int(fields[1], no, "d")


# -- instances -----------------------------------------------------------------------

def _label_text(label) -> str:
    for tok in label:
        if "," in tok or tok == EMPTY_LABEL or tok.split() != [tok]:
            raise FormatError(f"token {tok!r} cannot be written in the text format")
    return ",".join(label) if label else EMPTY_LABEL


def _label(text: str) -> Tuple[str, ...]:
    return () if text == EMPTY_LABEL else tuple(text.split(","))


def _word(text: str) -> str:
    if text.split() != [text]:
        raise FormatError(f"id {text!r} cannot be written in the text format")
    return text


def dump_instance(g: PairedDbGraph, d: int) -> str:
    lines = [f"pdbg {VERSION}", f"k {g.k}", f"d {d}",
             "alphabet" + "".join(" " + _label_text((s,)) for s in g.alphabet)]
    for vid, lab in g.vertices.items():
        lines.append(f"vertex {_word(vid)} {_label_text(lab.first)} {_label_text(lab.second)}")
    for e in g.edges:
        if e.label is None:
            lines.append(f"edge {e.source} {e.target}")
        else:
            lines.append(f"edge {e.source} {e.target} "
                         f"{_label_text(e.label.first)} {_label_text(e.label.second)}")
    return "\n".join(lines) + "\n"


def load_instance(text: str) -> Tuple[PairedDbGraph, int]:
    """Parse an instance file into ``(graph, d)``.  The graph is not validated."""
    k = d = alphabet = None
    vertices = {}
    edges = []
    for no, f in _records(text, "pdbg"):
        key = f[0]
        if key == "k":
            _need(f, 2, no)
            k = _int(f[1], no, "k")
        elif key == "d":
            d = _parse_shift(f, no)
        elif key == "alphabet":
            if alphabet is not None:
                raise FormatError("alphabet given twice", no)
            try:
                alphabet = Alphabet(f[1:])
            except ValueError as exc:
                raise FormatError(str(exc), no) from None
        elif key == "vertex":
            _need(f, 4, no)
            if f[1] in vertices:
                raise FormatError(f"vertex {f[1]!r} declared twice", no)
            vertices[f[1]] = Bilabel(_label(f[2]), _label(f[3]))
        elif key == "edge":
            if len(f) == 3:
                edges.append(Edge(f[1], f[2]))
            elif len(f) == 5:
                edges.append(Edge(f[1], f[2], Bilabel(_label(f[3]), _label(f[4]))))
            else:
                raise FormatError("'edge' takes 2 fields, or 4 at k=0", no)
        else:
            raise FormatError(f"unknown record {key!r}", no)
    for name, value in (("k", k), ("d", d), ("alphabet", alphabet)):
        if value is None:
            raise FormatError(f"missing '{name}' record")
    return PairedDbGraph(k, alphabet, vertices, tuple(edges)), d


# -- undirected graphs and hamiltonian cycles -----------------------------------------

def dump_ugraph(g: UndirectedGraph) -> str:
    lines = [f"ugraph {VERSION}", f"n {g.n}"]
    if g.names:
        lines.append("names " + " ".join(_word(x) for x in g.names))
    lines += [f"edge {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def load_ugraph(text: str) -> UndirectedGraph:
    n = names = None
    edges = []
    for no, f in _records(text, "ugraph"):
        if f[0] == "n":
            _need(f, 2, no)
            n = _int(f[1], no, "n")
        elif f[0] == "names":
            names = tuple(f[1:])
        elif f[0] == "edge":
            _need(f, 3, no)
            u, v = _int(f[1], no, "vertex", 1), _int(f[2], no, "vertex", 1)
            if n is not None and max(u, v) > n:
                raise FormatError(f"edge ({u},{v}) outside 1..{n}", no)
            if u == v:
                raise FormatError(f"loop at vertex {u}", no)
            edges.append((u, v))
        else:
            raise FormatError(f"unknown record {f[0]!r}", no)
    if n is None:
        raise FormatError("missing 'n' record")
    try:
        return UndirectedGraph.from_edges(n, edges, names)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def dump_hamcycle(c: HamCycle) -> str:
    return f"hamcycle {VERSION}\norder {' '.join(map(str, c.order))}\n"


def load_hamcycle(text: str, graph: UndirectedGraph) -> HamCycle:
    order = None
    for no, f in _records(text, "hamcycle"):
        if f[0] != "order":
            raise FormatError(f"unknown record {f[0]!r}", no)
        order = tuple(_int(tok, no, "vertex", 1) for tok in f[1:])
    if order is None:
        raise FormatError("missing 'order' record")
    try:
        return HamCycle(graph, order)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# -- cycle witnesses ---------------------------------------------------------------------

def dump_cycle(w: CycleWitness) -> str:
    lines = [f"cycle {VERSION}", f"d {w.shift}", "vertices " + " ".join(w.vertices)]
    for lab in w.labels or ():
        lines.append(f"label {_label_text(lab.first)} {_label_text(lab.second)}")
    return "\n".join(lines) + "\n"


def load_cycle(text: str) -> CycleWitness:
    d = verts = None
    labels = []
    for no, f in _records(text, "cycle"):
        if f[0] == "d":
            d = _parse_shift(f, no)
        elif f[0] == "vertices":
            if len(f) < 2:
                raise FormatError("a cycle needs at least one vertex", no)
            verts = tuple(f[1:])
        elif f[0] == "label":
            _need(f, 3, no)
            labels.append(Bilabel(_label(f[1]), _label(f[2])))
        else:
            raise FormatError(f"unknown record {f[0]!r}", no)
    if d is None or verts is None:
        raise FormatError("a cycle needs 'd' and 'vertices' records")
    if labels and len(labels) != len(verts):
        raise FormatError(f"{len(labels)} labels for {len(verts)} vertices")
    return CycleWitness(verts, d, tuple(labels) or None)


# -- traces (JSON) -----------------------------------------------------------------------

def _plain(x):
    return [_plain(y) for y in x] if isinstance(x, (tuple, list)) else x


def _frozen(x):
    return tuple(_frozen(y) for y in x) if isinstance(x, list) else x


def dump_traces(stages) -> str:
    """JSON for a list of ``(stage_name, ReductionTrace)`` in application order."""
    doc = {"format": "trace", "version": VERSION, "stages": [
        {"stage": name,
         "shift": trace.shift,
         "vertex_map": [[_plain(k), _plain(v)] for k, v in trace.vertex_map.items()],
         "edge_map": [[_plain(k), _plain(v)] for k, v in trace.edge_map.items()]}
        for name, trace in stages]}
    return json.dumps(doc, indent=1) + "\n"


def load_traces(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad trace JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != "trace" or doc.get("version") != VERSION:
        raise FormatError(f"not a version {VERSION} trace document")
    try:
        return [(st["stage"],
                 ReductionTrace({_frozen(k): _frozen(v) for k, v in st["vertex_map"]},
                                {_frozen(k): _frozen(v) for k, v in st["edge_map"]},
                                int(st["shift"])))
                for st in doc["stages"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad trace stage: {exc}") from None


def to_dot(g: PairedDbGraph, name: str = "pdbg") -> str:
    """Graphviz text with each vertex labeled by its bilabel."""

    def esc(text):
        return text.replace("\\", "\\\\").replace('"', '\\"')

    def show(lab: Bilabel):
        return f"({' '.join(lab.first)} | {' '.join(lab.second)})"

    lines = [f'digraph "{esc(name)}" {{']
    for vid, lab in g.vertices.items():
        lines.append(f'  "{esc(vid)}" [label="{esc(vid)}\\n{esc(show(lab))}"];')
    for e in g.edges:
        extra = f' [label="{esc(show(e.label))}"]' if e.label is not None else ""
        lines.append(f'  "{esc(e.source)}" -> "{esc(e.target)}"{extra};')
    lines.append("}")
    return "\n".join(lines) + "\n"
