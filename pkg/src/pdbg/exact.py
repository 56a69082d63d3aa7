"""Exact sound-cycle deciders over the (vertex, window) product state graph.

A state pairs a vertex with the second-component characters emitted by the
last ``d`` steps, oldest first.  Stepping along an edge emits the first
characters of the target's bilabel (or the edge's own bilabel at ``k == 0``);
the emitted first character must equal the oldest window entry.  Closed walks
in the state graph project onto exactly the sound cycles of the graph, so
both deciders are complete.  Running time is exponential in ``d`` in the
worst case; ``max_states`` turns runaway growth into an explicit error.

Internally windows are packed into integers (base ``|alphabet|``) and a state
is ``window * num_vertices + vertex``.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Optional, Tuple

from .core import CycleWitness, Edge, require_valid
from .scc import tarjan_scc

DEFAULT_MAX_STATES = 10_000_000
MAX_STATES_ENV = "PDBG_MAX_STATES"


class StateLimitExceeded(RuntimeError):
    """The state graph grew past the configured cap; no answer was produced."""


def default_max_states() -> int:
    value = os.environ.get(MAX_STATES_ENV)
    if not value:
        return DEFAULT_MAX_STATES
    try:
        cap = int(value)
    except ValueError:
        raise ValueError(f"{MAX_STATES_ENV} must be a positive integer, got {value!r}") from None
    if cap < 1:
        raise ValueError(f"{MAX_STATES_ENV} must be a positive integer, got {value!r}")
    return cap


@dataclass(frozen=True)
class StateNode:
    vertex: str
    window: Tuple[str, ...]


@dataclass(frozen=True)
class StateGraph:
    shift: int
    nodes: Tuple[StateNode, ...]
    # (source node index, target node index, graph edge)
    arcs: Tuple[Tuple[int, int, Edge], ...]
    scc: Tuple[int, ...]

    def has_cycle(self) -> bool:
        sizes = {}
        for c in self.scc:
            sizes[c] = sizes.get(c, 0) + 1
        for i, j, _ in self.arcs:
            if i == j or (self.scc[i] == self.scc[j] and sizes[self.scc[i]] > 1):
                return True
        return False


def _check_shift(d):
    if not isinstance(d, int) or d < 0:
        raise ValueError(f"shift must be a non-negative integer, got {d!r}")


class _Search:
    """Integer-encoded view of a graph for one shift value."""

    def __init__(self, g, d, max_states):
        self.g = g
        self.d = d
        self.max_states = max_states
        self.vids = list(g.vertices)
        vindex = {v: i for i, v in enumerate(self.vids)}
        symbols = g.alphabet.index
        self.base = max(1, len(symbols))
        self.nv = len(self.vids)
        self.top = self.base ** (d - 1) if d else 1
        self.src, self.dst, self.s, self.t = [], [], [], []
        for e in g.edges:
            lab = e.label if g.k == 0 else g.vertices[e.target]
            self.src.append(vindex[e.source])
            self.dst.append(vindex[e.target])
            self.s.append(symbols[lab.first[0]])
            self.t.append(symbols[lab.second[0]])
        self.narcs = len(g.edges)

    # -- structure over a subset of arcs -------------------------------------------

    def _out_lists(self, alive):
        out = [[] for _ in range(self.nv)]
        for a in sorted(alive):
            out[self.src[a]].append(a)
        return out

    def prune(self, alive):
        """Drop arcs that cannot lie on any sound cycle.

        An arc survives only inside a strongly connected component that also
        supplies its partner characters: some arc emitting its second
        character as a first character, and vice versa.
        """
        alive = set(alive)
        while True:
            out = self._out_lists(alive)
            comp = tarjan_scc(self.nv, lambda v: [self.dst[a] for a in out[v]])
            firsts, seconds = {}, {}
            inner = []
            for a in alive:
                c = comp[self.src[a]]
                if c == comp[self.dst[a]]:
                    inner.append(a)
                    firsts.setdefault(c, set()).add(self.s[a])
                    seconds.setdefault(c, set()).add(self.t[a])
            if self.d == 0:
                keep = {a for a in inner if self.s[a] == self.t[a]}
            else:
                keep = {a for a in inner
                        if self.t[a] in firsts[comp[self.src[a]]]
                        and self.s[a] in seconds[comp[self.src[a]]]}
            if len(keep) == len(alive):
                return keep
            alive = keep

    def pick_vertex(self, alive):
        """Choose the vertex whose incident arcs carry the fewest distinct
        characters, which keeps its set of realizable windows small."""
        ins, outs, deg = {}, {}, {}
        for a in alive:
            outs.setdefault(self.src[a], set()).add(self.s[a])
            ins.setdefault(self.dst[a], set()).add(self.t[a])
            deg[self.src[a]] = deg.get(self.src[a], 0) + 1
            deg[self.dst[a]] = deg.get(self.dst[a], 0) + 1
        return min(deg, key=lambda v: (len(ins.get(v, ())) * len(outs.get(v, ())), -deg[v], v))

    def seeds(self, x, alive):
        """States at ``x`` for every window a sound cycle can carry there.

        The last ``d`` arcs into ``x`` emit the window as second characters and
        the next ``d`` arcs out of ``x`` must emit it again as first
        characters.  Both walks are advanced in lockstep.
        """
        d = self.d
        if d == 0:
            return [x]
        src, dst, s, t, base = self.src, self.dst, self.s, self.t, self.base
        out = self._out_lists(alive)
        into = [[] for _ in range(self.nv)]
        by_t = {}
        out_by_s = [{} for _ in range(self.nv)]
        for a in sorted(alive):
            into[dst[a]].append(a)
            by_t.setdefault(t[a], []).append(a)
            out_by_s[src[a]].setdefault(s[a], []).append(a)
        # reach[r]: vertices with a walk of exactly r arcs to x
        reach = [{x}]
        for _ in range(d - 1):
            reach.append({src[a] for v in reach[-1] for a in into[v]})
        frontier = set()
        for b in out[x]:
            for a in by_t.get(s[b], ()):
                if dst[a] in reach[d - 1]:
                    frontier.add((dst[a], dst[b], t[a]))
        for i in range(2, d + 1):
            allowed = reach[d - i]
            nxt = set()
            for ha, hb, pre in frontier:
                nb = out_by_s[hb]
                for a in out[ha]:
                    if dst[a] not in allowed:
                        continue
                    for b in nb.get(t[a], ()):
                        nxt.add((dst[a], dst[b], pre * base + t[a]))
            frontier = nxt
            if len(frontier) > self.max_states:
                raise StateLimitExceeded(f"seed enumeration exceeded {self.max_states}")
        return sorted({pre * self.nv + x for ha, _, pre in frontier if ha == x})

    def stepper(self, alive):
        """Return ``step(state) -> list of (arc, next_state)``."""
        nv, top, base, d = self.nv, self.top, self.base, self.d
        table = [{} for _ in range(nv)]
        for a in sorted(alive):
            table[self.src[a]].setdefault(self.s[a], []).append(
                (a, self.dst[a], self.t[a]))
        if d == 0:
            # window stays empty; each step must emit equal characters
            eq = [[(a, y) for sym, lst in table[v].items() for a, y, t in lst if t == sym]
                  for v in range(nv)]

            def step(state):
                return eq[state]
            return step

        def step(state):
            w, v = divmod(state, nv)
            need, rest = divmod(w, top)
            return [(a, ((rest * base + t) * nv + y)) for a, y, t in table[v].get(need, ())]
        return step

    # -- searches ------------------------------------------------------------------

    def find_cycle(self, seeds, alive, dead):
        """DFS from ``(x, window)`` seeds; returns the arcs of a state cycle."""
        step = self.stepper(alive)
        cap = self.max_states
        for start in seeds:
            if start in dead:
                continue
            on_stack = {start: 0}
            states = [start]
            via = [None]
            iters = [iter(step(start))]
            while iters:
                for arc, nxt in iters[-1]:
                    if nxt in dead:
                        continue
                    pos = on_stack.get(nxt)
                    if pos is not None:
                        return via[pos + 1:] + [arc], states[pos + 1:] + [nxt]
                    on_stack[nxt] = len(states)
                    states.append(nxt)
                    via.append(arc)
                    iters.append(iter(step(nxt)))
                    if len(dead) + len(states) > cap:
                        raise StateLimitExceeded(f"state graph exceeded {cap} states")
                    break
                else:
                    iters.pop()
                    via.pop()
                    done = states.pop()
                    del on_stack[done]
                    dead.add(done)
        return None

    def explore(self, seeds, alive):
        """Forward closure from the seeds: (states, adjacency of (arc, j))."""
        step = self.stepper(alive)
        index = {}
        states = []
        adj = []
        queue = deque()
        for sd in seeds:
            if sd not in index:
                index[sd] = len(states)
                states.append(sd)
                queue.append(sd)
        while queue:
            st = queue.popleft()
            row = []
            for arc, nxt in step(st):
                j = index.get(nxt)
                if j is None:
                    j = index[nxt] = len(states)
                    states.append(nxt)
                    queue.append(nxt)
                    if len(states) > self.max_states:
                        raise StateLimitExceeded(
                            f"state graph exceeded {self.max_states} states")
                row.append((arc, j))
            adj.append(row)
        return states, adj

    def witness(self, arcs):
        g = self.g
        edges = [g.edges[a] for a in arcs]
        verts = tuple(e.target for e in edges)
        labels = tuple(e.label for e in edges) if g.k == 0 else None
        return CycleWitness(verts, self.d, labels)

    def window_tokens(self, w):
        digits = []
        for _ in range(self.d):
            w, r = divmod(w, self.base)
            digits.append(self.g.alphabet.symbols[r])
        return tuple(reversed(digits))


def build_state_graph(g, d: int, max_states: Optional[int] = None) -> StateGraph:
    """Materialize the full state graph seeded from every realizable window.

    A window is realizable at ``v`` if some walk of ``d`` edges ending at ``v``
    emits it.  Intended for small graphs; the deciders below explore lazily.
    """
    require_valid(g)
    _check_shift(d)
    search = _Search(g, d, max_states or default_max_states())
    nv, base = search.nv, search.base
    if d == 0:
        seeds = list(range(nv))
    else:
        layer = [set() for _ in range(nv)]
        for a in range(search.narcs):
            layer[search.dst[a]].add(search.t[a])
        for _ in range(d - 1):
            nxt = [set() for _ in range(nv)]
            for a in range(search.narcs):
                src_windows = layer[search.src[a]]
                if src_windows:
                    ta = search.t[a]
                    nxt[search.dst[a]].update(w * base + ta for w in src_windows)
            layer = nxt
            if sum(map(len, layer)) > search.max_states:
                raise StateLimitExceeded(f"state graph exceeded {search.max_states} states")
        seeds = sorted(w * nv + v for v in range(nv) for w in layer[v])
    seeds.sort(key=lambda st: (st % nv, st // nv))
    states, adj = search.explore(seeds, range(search.narcs))
    comp = tarjan_scc(len(states), lambda i: [j for _, j in adj[i]])
    nodes = tuple(StateNode(search.vids[st % nv], search.window_tokens(st // nv))
                  for st in states)
    arcs = tuple((i, j, g.edges[a]) for i, row in enumerate(adj) for a, j in row)
    return StateGraph(d, nodes, arcs, tuple(comp))


def exists_sound_cycle(g, d: int, max_states: Optional[int] = None) -> Optional[CycleWitness]:
    """Return a cycle sound for shift ``d``, or ``None`` if there is none.

    Vertices are eliminated one at a time: all sound cycles through the chosen
    vertex are found from its seed windows, then the vertex is deleted and the
    rest re-pruned.  Explored states with no reachable cycle stay dead across
    rounds.
    """
    require_valid(g)
    _check_shift(d)
    search = _Search(g, d, max_states or default_max_states())
    alive = search.prune(range(search.narcs))
    dead = set()
    while alive:
        x = search.pick_vertex(alive)
        found = search.find_cycle(search.seeds(x, alive), alive, dead)
        if found is not None:
            return search.witness(found[0])
        alive = search.prune(a for a in alive if search.src[a] != x and search.dst[a] != x)
    return None


def exists_covering_sound_cycle(g, d: int,
                                max_states: Optional[int] = None) -> Optional[CycleWitness]:
    """Return a sound cycle through every edge, or ``None``.

    Such a cycle exists iff one strongly connected component of the state
    graph has arcs projecting onto every edge: a closed walk inside one
    component can traverse any chosen set of its arcs.
    """
    require_valid(g)
    _check_shift(d)
    search = _Search(g, d, max_states or default_max_states())
    if search.narcs == 0:
        return None
    alive = search.prune(range(search.narcs))
    if len(alive) < search.narcs:
        return None
    # every covering cycle passes through x, so its seeds reach the whole cycle
    x = search.pick_vertex(alive)
    states, adj = search.explore(search.seeds(x, alive), alive)
    comp = tarjan_scc(len(states), lambda i: [j for _, j in adj[i]])
    projected = {}
    for i, row in enumerate(adj):
        for a, j in row:
            if comp[i] == comp[j]:
                projected.setdefault(comp[i], set()).add(a)
    for c in sorted(projected):
        if len(projected[c]) == search.narcs:
            return search.witness(_covering_walk(search.narcs, adj, comp, c))
    return None


def _covering_walk(narcs, adj, comp, c):
    """Closed walk inside component ``c`` using every graph arc at least once."""
    members = [i for i in range(len(adj)) if comp[i] == c]
    start = members[0]
    uncovered = set(range(narcs))
    walk = []
    cur = start

    def travel(source, goal):
        prev = {source: None}
        queue = deque([source])
        while queue:
            i = queue.popleft()
            if goal(i):
                steps = []
                end = i
                while prev[i] is not None:
                    p, a = prev[i]
                    steps.append(a)
                    i = p
                return steps[::-1], end
            for a, j in adj[i]:
                if comp[j] == c and j not in prev:
                    prev[j] = (i, a)
                    queue.append(j)
        raise AssertionError("component is not strongly connected")

    def has_needed(i):
        return any(comp[j] == c and a in uncovered for a, j in adj[i])

    while uncovered:
        steps, cur = travel(cur, has_needed)
        walk.extend(steps)
        uncovered.difference_update(steps)
        for a, j in adj[cur]:
            if comp[j] == c and a in uncovered:
                walk.append(a)
                uncovered.discard(a)
                cur = j
                break
    if cur != start:
        steps, _ = travel(cur, lambda i: i == start)
        walk.extend(steps)
    return walk
