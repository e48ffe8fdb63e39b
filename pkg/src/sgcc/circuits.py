"""Cycle-space machinery: cycles, barbells, circuit enumeration, signed girth.

A circuit of a signed graph is a positive cycle or a barbell (two
edge-disjoint negative cycles joined by a path, possibly of length zero).
Everything here identifies subgraphs by frozensets of host edge ids.
"""

from __future__ import annotations

import functools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import GraphFormatError, PreconditionError
from .graph import SignedGraph, connected_components

INFINITE_GIRTH = math.inf


@dataclass(frozen=True)
class Cycle:
    """Connected 2-regular edge set with its sign (product of edge signs)."""

    edges: frozenset[int]
    sign: int

    @property
    def length(self) -> int:
        return len(self.edges)

    def vertices(self, g: SignedGraph) -> frozenset[int]:
        return frozenset(v for eid in self.edges for v in g.endpoints(eid))

    def sort_key(self) -> tuple:
        return (len(self.edges), tuple(sorted(self.edges)))


@dataclass(frozen=True)
class Barbell:
    """Two edge-disjoint negative cycles joined by a (possibly empty) path."""

    cycle_a: Cycle
    cycle_b: Cycle
    path: tuple[int, ...]

    @property
    def edges(self) -> frozenset[int]:
        return self.cycle_a.edges | self.cycle_b.edges | frozenset(self.path)

    @property
    def length(self) -> int:
        return self.cycle_a.length + self.cycle_b.length + len(self.path)

    def sort_key(self) -> tuple:
        return (self.length, tuple(sorted(self.edges)))


Circuit = Union[Cycle, Barbell]


def circuit_edges(circuit: Circuit) -> frozenset[int]:
    return circuit.edges


def circuit_cycles(circuit: Circuit) -> tuple[Cycle, ...]:
    """The cycles of a circuit: itself for a positive cycle, both bells for a barbell."""
    if isinstance(circuit, Cycle):
        return (circuit,)
    return (circuit.cycle_a, circuit.cycle_b)


@dataclass(frozen=True)
class CircuitFamily:
    """Ordered multiset of circuits with derived length and coverage counts."""

    circuits: tuple[Circuit, ...]

    @property
    def length(self) -> int:
        return sum(c.length for c in self.circuits)

    def coverage(self) -> Counter:
        cov: Counter = Counter()
        for c in self.circuits:
            cov.update(c.edges)
        return cov

    def edge_union(self) -> frozenset[int]:
        out: set[int] = set()
        for c in self.circuits:
            out |= c.edges
        return frozenset(out)

    def __iter__(self):
        return iter(self.circuits)

    def __len__(self):
        return len(self.circuits)

    def __add__(self, other: "CircuitFamily") -> "CircuitFamily":
        return CircuitFamily(self.circuits + other.circuits)


def classify_cycle(g: SignedGraph, edge_ids: Iterable[int]) -> Cycle:
    """Validate a connected 2-regular edge set and compute its sign."""
    edges = frozenset(edge_ids)
    if not edges:
        raise PreconditionError("empty edge set is not a cycle")
    degree: Counter = Counter()
    for eid in edges:
        u, v = g.endpoints(eid)
        degree[u] += 1
        degree[v] += 1
    bad = [v for v, d in degree.items() if d != 2]
    if bad:
        raise PreconditionError(f"not 2-regular at vertices {sorted(bad)}")
    if len(connected_components(g, edges)) != 1:
        raise PreconditionError("edge set is not connected")
    sign = 1
    for eid in edges:
        sign *= g.sign(eid)
    return Cycle(edges, sign)


def cycle_vertex_order(g: SignedGraph, cycle: Cycle) -> tuple[list[int], list[int]]:
    """(vertex sequence, edge sequence) around the cycle, deterministically.

    Starts at the smallest vertex and leaves along its smaller incident
    cycle edge; vertices[i] -- edges[i] -- vertices[i+1 mod k].
    """
    inc: dict[int, list[int]] = {}
    for eid in sorted(cycle.edges):
        u, v = g.endpoints(eid)
        inc.setdefault(u, []).append(eid)
        inc.setdefault(v, []).append(eid)
    start = min(inc)
    verts = [start]
    edges = [inc[start][0]]
    while True:
        prev_v, eid = verts[-1], edges[-1]
        nxt = g.other_end(eid, prev_v)
        if nxt == start and len(edges) == len(cycle.edges):
            break
        verts.append(nxt)
        e1, e2 = inc[nxt]
        edges.append(e2 if e1 == eid else e1)
    return verts, edges


def fundamental_cycles(
    g: SignedGraph, tree: Iterable[int], chords: Iterable[int]
) -> list[Cycle]:
    """For each chord, the unique cycle in tree + chord."""
    tree = frozenset(tree)
    if len(tree) != g.n - 1 or not _edges_connect_all(g, tree):
        raise PreconditionError("tree is not a spanning tree")
    parent: dict[int, tuple[int, int]] = {}
    order = {1: 0}
    stack = [1]
    tree_inc: dict[int, list[int]] = {v: [] for v in g.vertices}
    for eid in sorted(tree):
        u, v = g.endpoints(eid)
        tree_inc[u].append(eid)
        tree_inc[v].append(eid)
    depth = {1: 0}
    while stack:
        v = stack.pop()
        for eid in tree_inc[v]:
            w = g.other_end(eid, v)
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = (v, eid)
                stack.append(w)
    out = []
    for chord in chords:
        if chord in tree:
            raise PreconditionError(f"chord {chord} is a tree edge")
        a, b = g.endpoints(chord)
        path_edges = {chord}
        x, y = a, b
        while x != y:
            if depth[x] >= depth[y]:
                x, eid = parent[x]
                path_edges.add(eid)
            else:
                y, eid = parent[y]
                path_edges.add(eid)
        out.append(classify_cycle(g, path_edges))
    return out


def _edges_connect_all(g: SignedGraph, edges: frozenset[int]) -> bool:
    from .graph import is_connected

    return is_connected(g, edges, spanning=True)


def symmetric_difference_cycles(
    g: SignedGraph, edge_sets: Iterable[Iterable[int]]
) -> list[Cycle]:
    """XOR the edge sets and decompose the result into vertex-disjoint cycles.

    Valid whenever the XOR has every vertex degree 0 or 2 (always the case
    for even subgraphs of a subcubic graph).
    """
    acc: set[int] = set()
    for s in edge_sets:
        acc ^= set(s)
    degree: Counter = Counter()
    for eid in acc:
        u, v = g.endpoints(eid)
        degree[u] += 1
        degree[v] += 1
    bad = [v for v, d in degree.items() if d not in (0, 2)]
    if bad:
        raise PreconditionError(
            f"symmetric difference has degree != 2 at vertices {sorted(bad)}"
        )
    comps = connected_components(g, acc)
    return sorted((classify_cycle(g, comp) for comp in comps), key=Cycle.sort_key)


def make_barbell(
    g: SignedGraph, cycle_a: Cycle, cycle_b: Cycle, path: Iterable[int]
) -> Barbell:
    """Validate and build a barbell from two negative cycles and a joining path."""
    path = tuple(path)
    if cycle_a.sign != -1 or cycle_b.sign != -1:
        raise PreconditionError("barbell cycles must both be negative")
    if cycle_a.edges & cycle_b.edges:
        raise PreconditionError("barbell cycles must be edge-disjoint")
    va, vb = cycle_a.vertices(g), cycle_b.vertices(g)
    shared = va & vb
    if not path:
        if len(shared) != 1:
            raise PreconditionError(
                "zero-length path requires the cycles to share exactly one vertex"
            )
        return Barbell(cycle_a, cycle_b, ())
    if shared:
        raise PreconditionError("cycles joined by a path must be vertex-disjoint")
    if len(set(path)) != len(path):
        raise PreconditionError("path repeats an edge")
    if set(path) & (cycle_a.edges | cycle_b.edges):
        raise PreconditionError("path reuses a cycle edge")
    verts = _path_vertex_sequence(g, path)
    if verts is None:
        raise PreconditionError("path edges do not form a simple path")
    if verts[0] in vb and verts[-1] in va:
        verts = list(reversed(verts))
    if verts[0] not in va or verts[-1] not in vb:
        raise PreconditionError("path endpoints must lie on the two cycles")
    internal = verts[1:-1]
    if any(v in va or v in vb for v in internal):
        raise PreconditionError("path touches a cycle internally")
    return Barbell(cycle_a, cycle_b, path)


def _path_vertex_sequence(g: SignedGraph, path: tuple[int, ...]) -> list[int] | None:
    """Vertex sequence of an edge-id path, or None if it is not simple."""
    if len(path) == 1:
        u, v = g.endpoints(path[0])
        return [u, v]
    u0, v0 = g.endpoints(path[0])
    u1, v1 = g.endpoints(path[1])
    if u0 in (u1, v1):
        verts = [v0, u0]
    elif v0 in (u1, v1):
        verts = [u0, v0]
    else:
        return None
    for eid in path[1:]:
        u, v = g.endpoints(eid)
        if verts[-1] == u:
            verts.append(v)
        elif verts[-1] == v:
            verts.append(u)
        else:
            return None
    if len(set(verts)) != len(verts):
        return None
    return verts


def _cycles_up_to(g: SignedGraph, max_length: int) -> list[Cycle]:
    """All cycles with at most max_length edges, each exactly once.

    A cycle is anchored at its smallest edge id e0=(u,v); the rest is a
    simple u-v path through larger edge ids, found by DFS.
    """
    out = []
    inc = g.incidence
    for e0 in g.edge_ids:
        u0, v0 = g.endpoints(e0)
        budget = max_length - 1
        if budget < 1:
            break
        # stack entries: (vertex, visited vertex set, path edge list)
        stack = [(u0, frozenset([u0]), ())]
        while stack:
            v, visited, path = stack.pop()
            for eid in inc[v]:
                if eid <= e0 or eid in path:
                    continue
                w = g.other_end(eid, v)
                if w == v0:
                    out.append(classify_cycle(g, frozenset(path) | {eid, e0}))
                    continue
                if w in visited or len(path) + 1 >= budget:
                    continue
                stack.append((w, visited | {w}, path + (eid,)))
    return sorted(out, key=Cycle.sort_key)


def _connecting_paths(
    g: SignedGraph, va: frozenset[int], vb: frozenset[int], max_len: int
) -> list[tuple[int, ...]]:
    """All simple paths from va to vb internally avoiding both vertex sets."""
    paths = []
    inc = g.incidence
    for a in sorted(va):
        stack = [(a, frozenset([a]), ())]
        while stack:
            v, visited, path = stack.pop()
            for eid in inc[v]:
                if eid in path:
                    continue
                w = g.other_end(eid, v)
                if w in vb:
                    if len(path) + 1 <= max_len:
                        paths.append(path + (eid,))
                    continue
                if w in va or w in visited or len(path) + 1 >= max_len:
                    continue
                stack.append((w, visited | {w}, path + (eid,)))
    return paths


@functools.lru_cache(maxsize=2048)
def enumerate_circuits(g: SignedGraph, max_length: int | None = None) -> tuple[Circuit, ...]:
    """Every positive cycle and barbell of total length <= max_length, once each.

    max_length=None enumerates everything (no circuit exceeds n+1 edges).
    Output is sorted by (length, edge id set).
    """
    if max_length is None:
        max_length = g.n + 1
    cycles = _cycles_up_to(g, max_length)
    circuits: list[Circuit] = [c for c in cycles if c.sign == 1]
    negatives = [c for c in cycles if c.sign == -1]
    for i, ca in enumerate(negatives):
        va = ca.vertices(g)
        for cb in negatives[i + 1 :]:
            if ca.length + cb.length > max_length:
                continue
            if ca.edges & cb.edges:
                continue
            vb = cb.vertices(g)
            shared = va & vb
            if len(shared) == 1:
                circuits.append(Barbell(ca, cb, ()))
            elif not shared:
                room = max_length - ca.length - cb.length
                for path in _connecting_paths(g, va, vb, room):
                    circuits.append(make_barbell(g, ca, cb, path))
    seen = set()
    unique = []
    for c in sorted(circuits, key=lambda c: c.sort_key()):
        if c.edges not in seen:
            seen.add(c.edges)
            unique.append(c)
    return tuple(unique)


def qualifies_for_girth(g: SignedGraph, circuit: Circuit) -> bool:
    """Circuits that count for the signed girth: they must carry negative edges."""
    if isinstance(circuit, Barbell):
        return True
    return any(g.sign(eid) == -1 for eid in circuit.edges)


def signed_girth(g: SignedGraph) -> int | float:
    """Length of a shortest circuit containing negative edges (inf if none)."""
    for level in range(2, g.n + 2):
        best = None
        for c in enumerate_circuits(g, level):
            if qualifies_for_girth(g, c):
                best = c.length if best is None else min(best, c.length)
        if best is not None:
            return best
    return INFINITE_GIRTH


def shortest_circuit_with_negative_edge(g: SignedGraph) -> Circuit | None:
    """A shortest circuit containing negative edges; ties broken lexicographically."""
    for level in range(2, g.n + 2):
        qual = [c for c in enumerate_circuits(g, level) if qualifies_for_girth(g, c)]
        if qual:
            return min(qual, key=lambda c: c.sort_key())
    return None


def shortest_circuit_with_edge_in_cycle(g: SignedGraph, eid: int) -> Circuit | None:
    """A shortest circuit having the given edge inside one of its cycles."""
    for level in range(2, g.n + 2):
        qual = [
            c
            for c in enumerate_circuits(g, level)
            if any(eid in cyc.edges for cyc in circuit_cycles(c))
        ]
        if qual:
            return min(qual, key=lambda c: c.sort_key())
    return None


def two_disjoint_paths(
    g: SignedGraph, sources: Iterable[int], targets: Iterable[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two vertex-disjoint paths from sources to targets, internally avoiding both sets.

    Existence is Menger's theorem; raises PreconditionError when no pair exists.
    """
    from collections import defaultdict, deque

    src = frozenset(sources)
    tgt = frozenset(targets)
    if not src or not tgt or src & tgt:
        raise PreconditionError("source and target sets must be nonempty and disjoint")
    # unit vertex capacities via split nodes ("in",v)->("out",v); transit
    # through sources/targets forbidden by omitting their transit arcs
    S, T = ("S", 0), ("T", 0)
    cap: dict = defaultdict(int)
    adj: dict = defaultdict(set)

    def add_arc(a, b, c=1):
        cap[(a, b)] += c
        adj[a].add(b)
        adj[b].add(a)

    for v in g.vertices:
        add_arc(("in", v), ("out", v))
    for s in src:
        add_arc(S, ("in", s))
    for t in tgt:
        add_arc(("out", t), T)
    for eid in g.edge_ids:
        u, v = g.endpoints(eid)
        if v not in src and u not in tgt:
            add_arc(("out", u), ("in", v))
        if u not in src and v not in tgt:
            add_arc(("out", v), ("in", u))

    flow: dict = defaultdict(int)

    def augment() -> bool:
        prev = {S: None}
        dq = deque([S])
        while dq:
            x = dq.popleft()
            if x == T:
                break
            for y in sorted(adj[x]):
                if y in prev:
                    continue
                if cap[(x, y)] - flow[(x, y)] + flow[(y, x)] > 0:
                    prev[y] = x
                    dq.append(y)
        if T not in prev:
            return False
        y = T
        while prev[y] is not None:
            x = prev[y]
            if flow[(y, x)] > 0:
                flow[(y, x)] -= 1
            else:
                flow[(x, y)] += 1
            y = x
        return True

    sent = 0
    while sent < 2 and augment():
        sent += 1
    if sent < 2:
        raise PreconditionError("no two vertex-disjoint connecting paths exist")

    def net(a, b) -> int:
        return max(0, flow[(a, b)] - flow[(b, a)])

    paths = []
    for s in sorted(src):
        if not net(S, ("in", s)):
            continue
        path_edges: list[int] = []
        v = s
        while v not in tgt:
            nxt = None
            for w in sorted(w for (kind, w) in adj[("out", v)] if kind == "in"):
                if net(("out", v), ("in", w)):
                    nxt = w
                    break
            assert nxt is not None, "broken flow decomposition"
            flow[(("out", v), ("in", nxt))] -= 1
            joining = [e for e in g.incidence[v] if g.other_end(e, v) == nxt]
            path_edges.append(min(e for e in joining if e not in path_edges))
            v = nxt
        paths.append(tuple(path_edges))
    assert len(paths) == 2
    return paths[0], paths[1]


def family_to_text(fam: CircuitFamily) -> str:
    """Serialize circuits one per line: ``C ids...`` / ``B a... | path... | b...``."""
    lines = []
    for c in fam:
        if isinstance(c, Cycle):
            lines.append("C " + " ".join(str(e) for e in sorted(c.edges)))
        else:
            tokens = ["B"]
            tokens += [str(e) for e in sorted(c.cycle_a.edges)]
            tokens.append("|")
            tokens += [str(e) for e in c.path]
            tokens.append("|")
            tokens += [str(e) for e in sorted(c.cycle_b.edges)]
            lines.append(" ".join(tokens))
    return "\n".join(lines) + ("\n" if lines else "")


def family_from_text(g: SignedGraph, text: str) -> CircuitFamily:
    """Parse the cover text format against a host graph, validating every member."""
    circuits: list[Circuit] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        kind, _, rest = line.partition(" ")
        if kind == "C":
            try:
                ids = [int(tok) for tok in rest.split()]
            except ValueError:
                raise GraphFormatError("bad edge id", lineno)
            cyc = classify_cycle(g, ids)
            circuits.append(cyc)
        elif kind == "B":
            parts = [p.strip() for p in rest.split("|")]
            if len(parts) != 3:
                raise GraphFormatError("barbell needs 'a | path | b'", lineno)
            try:
                ids_a = [int(t) for t in parts[0].split()]
                ids_p = [int(t) for t in parts[1].split()]
                ids_b = [int(t) for t in parts[2].split()]
            except ValueError:
                raise GraphFormatError("bad edge id", lineno)
            ca = classify_cycle(g, ids_a)
            cb = classify_cycle(g, ids_b)
            circuits.append(make_barbell(g, ca, cb, ids_p))
        else:
            raise GraphFormatError(f"unknown circuit type {kind!r}", lineno)
    return CircuitFamily(tuple(circuits))
