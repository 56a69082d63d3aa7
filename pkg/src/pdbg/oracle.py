"""Brute-force ground truth, built only on the definitions in :mod:`pdbg.core`.

Nothing here imports the solvers; these searches exist to check them.
"""

from __future__ import annotations

from typing import List, Optional

from .core import CycleWitness, is_sound, require_valid
from .ugraph import HamCycle, UndirectedGraph


def _canonical(steps):
    n = len(steps)
    return min(tuple(steps[r:]) + tuple(steps[:r]) for r in range(n))


def enumerate_sound_cycles(g, d: int, lmax: int, limit: Optional[int] = None) -> List[CycleWitness]:
    """All closed walks of length <= ``lmax`` sound for shift ``d``, one per rotation class.

    Position ``i`` of a closed walk carries the first characters of vertex
    ``i`` (or, at ``k == 0``, of the edge leaving it).  A partial walk with
    more than ``d`` positions must already satisfy the linear matching
    condition, which prunes the search without losing any cycle.  Every
    reported cycle is re-checked with :func:`core.is_sound`.  With ``limit``
    set the length bound is deepened gradually and the search stops early.
    """
    if lmax < 1:
        raise ValueError("lmax must be >= 1")
    require_valid(g)
    out = {v: [] for v in g.vertices}
    for e in g.edges:
        out[e.source].append(e)
    found = {}

    def chars(e):
        lab = e.label if g.k == 0 else g.vertices[e.target]
        return lab.first[0], lab.second[0]

    def report(verts, labels):
        w = CycleWitness(tuple(verts), d, tuple(labels) if g.k == 0 else None)
        if not is_sound(g, w):
            return False
        steps = list(zip(verts, labels)) if g.k == 0 else list(verts)
        key = _canonical(steps)
        if key not in found:
            found[key] = w
        return limit is not None and len(found) >= limit

    def search(bound):
        for start in g.vertices:
            lab = g.vertices[start]
            init = ([lab.first[0]], [lab.second[0]]) if g.k else ([], [])
            stack = [([start], [], init[0], init[1])]
            while stack:
                verts, labels, s, t = stack.pop()
                m = len(verts)
                for e in reversed(out[verts[-1]]):
                    fs, ft = chars(e)
                    if g.k == 0:
                        ns, nt, nl = s + [fs], t + [ft], labels + [e.label]
                        if m > d and ns[m - 1] != nt[m - 1 - d]:
                            continue
                        if e.target == start and report(verts, nl):
                            return True
                        if m < bound:
                            stack.append((verts + [e.target], nl, ns, nt))
                    else:
                        if e.target == start and report(verts, labels):
                            return True
                        if m < bound:
                            ns, nt = s + [fs], t + [ft]
                            if m >= d and ns[m] != nt[m - d]:
                                continue
                            stack.append((verts + [e.target], labels, ns, nt))
        return False

    if limit is None:
        search(lmax)
    else:
        bound = min(lmax, 4)
        while not search(bound) and bound < lmax:
            bound = min(lmax, bound * 2)
    return [found[key] for key in sorted(found, key=lambda kk: (len(kk), kk))]


def brute_cover_count(h, max_walks: int, max_len: int) -> Optional[int]:
    """Fewest closed walks (each of length <= ``max_len``) covering all arcs of ``h``.

    Returns ``None`` when no cover with at most ``max_walks`` walks exists.
    """
    if max_walks < 1 or max_len < 1:
        raise ValueError("bounds must be >= 1")
    arcs = sorted(h.arcs)
    bit = {a: 1 << i for i, a in enumerate(arcs)}
    full = (1 << len(arcs)) - 1
    if full == 0:
        return 0
    out = {x: [] for x in h.nodes}
    for u, v in arcs:
        out[u].append(v)
    # closed-walk coverage masks: breadth-first over (start, here, covered)
    masks = set()
    for start in h.nodes:
        frontier = {(start, 0)}
        seen = set(frontier)
        for _ in range(max_len):
            nxt = set()
            for here, cov in frontier:
                for v in out[here]:
                    state = (v, cov | bit[(here, v)])
                    if v == start:
                        masks.add(state[1])
                    if state not in seen:
                        seen.add(state)
                        nxt.add(state)
            frontier = nxt
    reach = {0}
    for count in range(1, max_walks + 1):
        reach = reach | {r | m for r in reach for m in masks}
        if full in reach:
            return count
    return None


def find_ham_cycle(g: UndirectedGraph) -> Optional[HamCycle]:
    if g.n < 3:
        return None
    adj = {v: g.neighbors(v) for v in range(1, g.n + 1)}
    path = [1]
    used = {1}

    def extend():
        if len(path) == g.n:
            return g.has_edge(path[-1], 1)
        for w in adj[path[-1]]:
            if w not in used:
                used.add(w)
                path.append(w)
                if extend():
                    return True
                path.pop()
                used.discard(w)
        return False

    return HamCycle(g, tuple(path)) if extend() else None


def find_ham_path(g: UndirectedGraph) -> Optional[tuple]:
    if g.n == 0:
        return None
    adj = {v: g.neighbors(v) for v in range(1, g.n + 1)}

    def extend(path, used):
        if len(path) == g.n:
            return tuple(path)
        for w in adj[path[-1]]:
            if w not in used:
                used.add(w)
                path.append(w)
                res = extend(path, used)
                if res:
                    return res
                path.pop()
                used.discard(w)
        return None

    for start in range(1, g.n + 1):
        res = extend([start], {start})
        if res:
            return res
    return None

