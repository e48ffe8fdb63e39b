"""Signed multigraph data model and signature machinery.

Vertices are 1..n, edges are 1..m in file order and never renumbered;
subgraphs are frozensets of original edge ids. Signatures live on the
edges as +1/-1. Switching at a vertex set flips the induced cut, and the
negativeness (frustration index) is found by exhaustive switching search.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import BudgetExceededError, GraphFormatError, PreconditionError

NEGATIVE_TOKENS = {"-", "−", "–"}  # ASCII minus, minus sign, en dash
POSITIVE_TOKENS = {"+"}

DEFAULT_MAX_N = 26  # 2^(n-1) switchings; beyond this the exact search refuses


@dataclass(frozen=True)
class SignedGraph:
    """Undirected signed multigraph. ``edges[i]`` is (u, v, sign) for edge id i+1."""

    n: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphFormatError("vertex count must be at least 1")
        for idx, (u, v, sign) in enumerate(self.edges):
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphFormatError(f"edge {idx + 1}: endpoint out of range")
            if u == v:
                raise GraphFormatError(f"edge {idx + 1}: loops are not allowed")
            if sign not in (1, -1):
                raise GraphFormatError(f"edge {idx + 1}: sign must be +1 or -1")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_ids(self) -> range:
        return range(1, self.m + 1)

    def endpoints(self, eid: int) -> tuple[int, int]:
        u, v, _ = self.edges[eid - 1]
        return u, v

    def sign(self, eid: int) -> int:
        return self.edges[eid - 1][2]

    def other_end(self, eid: int, v: int) -> int:
        u, w, _ = self.edges[eid - 1]
        return w if v == u else u

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """incidence[v] = ids of edges at vertex v, ascending. Index 0 unused."""
        inc = [[] for _ in range(self.n + 1)]
        for eid in self.edge_ids:
            u, v, _ = self.edges[eid - 1]
            inc[u].append(eid)
            inc[v].append(eid)
        return tuple(tuple(lst) for lst in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    @cached_property
    def negative_edges(self) -> frozenset[int]:
        return frozenset(eid for eid in self.edge_ids if self.sign(eid) == -1)

    @cached_property
    def positive_edges(self) -> frozenset[int]:
        return frozenset(eid for eid in self.edge_ids if self.sign(eid) == 1)

    def is_cubic(self) -> bool:
        return all(self.degree(v) == 3 for v in self.vertices)

    def with_signs(self, signs: dict[int, int]) -> "SignedGraph":
        """Copy with the given edge ids re-signed; structure and ids unchanged."""
        new_edges = list(self.edges)
        for eid, sign in signs.items():
            u, v, _ = new_edges[eid - 1]
            new_edges[eid - 1] = (u, v, sign)
        return SignedGraph(self.n, tuple(new_edges))

    def all_edges(self) -> frozenset[int]:
        return frozenset(self.edge_ids)


@dataclass(frozen=True)
class Subgraph:
    """Edge-induced view of a host graph; edge ids are the host's."""

    host: SignedGraph
    edges: frozenset[int]

    @cached_property
    def incidence(self) -> dict[int, tuple[int, ...]]:
        inc: dict[int, list[int]] = {}
        for eid in sorted(self.edges):
            u, v = self.host.endpoints(eid)
            inc.setdefault(u, []).append(eid)
            inc.setdefault(v, []).append(eid)
        return {v: tuple(es) for v, es in inc.items()}

    @property
    def support(self) -> frozenset[int]:
        """Vertices touched by at least one edge."""
        return frozenset(self.incidence)

    def degree(self, v: int) -> int:
        return len(self.incidence.get(v, ()))


@dataclass(frozen=True)
class SignatureSummary:
    """Exact negativeness report for one signed graph."""

    negative_edge_count: int
    negativeness: int
    minimizing_switching: frozenset[int]
    two_edge_connected: bool
    flow_admissible: bool


def parse_signed_graph(text) -> SignedGraph:
    """Parse the line-oriented graph format (``p sg n m`` then ``e u v +|-``)."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = m = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "sg":
                raise GraphFormatError("expected 'p sg <n> <m>'", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphFormatError("non-integer counts in problem line", lineno)
            if n < 1 or m < 0:
                raise GraphFormatError("counts out of range", lineno)
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before problem line", lineno)
            if len(fields) != 4:
                raise GraphFormatError("expected 'e <u> <v> <+|->'", lineno)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError("non-integer endpoint", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError("loop edges are not allowed", lineno)
            token = fields[3]
            if token in POSITIVE_TOKENS:
                sign = 1
            elif token in NEGATIVE_TOKENS:
                sign = -1
            else:
                raise GraphFormatError(f"unknown sign token {token!r}", lineno)
            edges.append((u, v, sign))
        else:
            raise GraphFormatError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing problem line")
    if len(edges) != m:
        raise GraphFormatError(f"edge count mismatch: header says {m}, found {len(edges)}")
    return SignedGraph(n, tuple(edges))


def serialize_signed_graph(g: SignedGraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p sg {g.n} {g.m}")
    for u, v, sign in g.edges:
        lines.append(f"e {u} {v} {'+' if sign == 1 else '-'}")
    return "\n".join(lines) + "\n"


def cut_edges(g: SignedGraph, u_set: Iterable[int]) -> frozenset[int]:
    """Edge ids with exactly one endpoint in u_set (the cut delta(U))."""
    uset = frozenset(u_set)
    for v in uset:
        if not 1 <= v <= g.n:
            raise PreconditionError(f"unknown vertex id {v}")
    return frozenset(
        eid for eid in g.edge_ids if (g.edges[eid - 1][0] in uset) != (g.edges[eid - 1][1] in uset)
    )


def switch(g: SignedGraph, u_set: Iterable[int]) -> SignedGraph:
    """Flip the signs of the cut induced by u_set; an involution."""
    flipped = cut_edges(g, u_set)
    return g.with_signs({eid: -g.sign(eid) for eid in flipped})


def connected_components(g: SignedGraph, edges: Iterable[int]) -> list[frozenset[int]]:
    """Components of the edge-induced subgraph, as edge id sets (support only)."""
    edges = frozenset(edges)
    inc: dict[int, list[int]] = {}
    for eid in edges:
        u, v = g.endpoints(eid)
        inc.setdefault(u, []).append(eid)
        inc.setdefault(v, []).append(eid)
    seen_edges: set[int] = set()
    comps = []
    for start in sorted(inc):
        start_edges = [e for e in inc[start] if e not in seen_edges]
        if not start_edges:
            continue
        comp: set[int] = set()
        stack = [start]
        seen_vertices = {start}
        while stack:
            v = stack.pop()
            for eid in inc[v]:
                if eid in comp:
                    continue
                comp.add(eid)
                w = g.other_end(eid, v)
                if w not in seen_vertices:
                    seen_vertices.add(w)
                    stack.append(w)
        seen_edges |= comp
        comps.append(frozenset(comp))
    return comps


def is_connected(g: SignedGraph, edges: Iterable[int] | None = None, spanning: bool = True) -> bool:
    """Connectivity of the subgraph; with spanning=True all n vertices must be reached."""
    edges = g.all_edges() if edges is None else frozenset(edges)
    if g.n == 1:
        return True
    inc: dict[int, list[int]] = {v: [] for v in g.vertices}
    for eid in edges:
        u, v = g.endpoints(eid)
        inc[u].append(eid)
        inc[v].append(eid)
    if spanning:
        start = 1
        target = g.n
    else:
        touched = [v for v in g.vertices if inc[v]]
        if not touched:
            return True
        start = touched[0]
        target = len(touched)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for eid in inc[v]:
            w = g.other_end(eid, v)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == target


def find_bridges(g: SignedGraph, edges: Iterable[int] | None = None) -> tuple[int, ...]:
    """Bridge edge ids of the edge-induced subgraph (multigraph-safe)."""
    edges = g.all_edges() if edges is None else frozenset(edges)
    inc: dict[int, list[int]] = {}
    for eid in sorted(edges):
        u, v = g.endpoints(eid)
        inc.setdefault(u, []).append(eid)
        inc.setdefault(v, []).append(eid)
    order: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: list[int] = []
    counter = 0
    for root in sorted(inc):
        if root in order:
            continue
        # iterative DFS; entry edge id is skipped once so parallel edges count
        stack: list[tuple[int, int | None, int]] = [(root, None, 0)]
        order[root] = low[root] = counter
        counter += 1
        while stack:
            v, in_edge, i = stack.pop()
            if i < len(inc[v]):
                stack.append((v, in_edge, i + 1))
                eid = inc[v][i]
                if eid == in_edge:
                    continue
                w = g.other_end(eid, v)
                if w in order:
                    low[v] = min(low[v], order[w])
                else:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, 0))
            elif in_edge is not None:
                u = g.other_end(in_edge, v)
                low[u] = min(low[u], low[v])
                if low[v] > order[u]:
                    bridges.append(in_edge)
    return tuple(sorted(bridges))


def is_two_edge_connected(g: SignedGraph) -> tuple[bool, tuple[int, ...]]:
    """(connected and bridgeless, list of bridges)."""
    bridges = find_bridges(g)
    return is_connected(g) and not bridges, bridges


def positive_subgraph(g: SignedGraph) -> Subgraph:
    """Subgraph on all vertices keeping exactly the positive edges."""
    return Subgraph(g, g.positive_edges)


@functools.lru_cache(maxsize=4096)
def negativeness(g: SignedGraph, max_n: int = DEFAULT_MAX_N) -> SignatureSummary:
    """Exact minimum negative-edge count over all 2^(n-1) switchings.

    Ties among minimizing switchings are broken by the lexicographically
    smallest vertex set (a cut and its complement count as one switching).
    Raises BudgetExceededError instead of guessing when n exceeds max_n.
    """
    if not is_connected(g):
        raise PreconditionError("negativeness requires a connected graph")
    if g.n > max_n:
        raise BudgetExceededError(
            f"exact negativeness unavailable: n={g.n} exceeds budget {max_n}"
        )
    neg_mask = 0
    for eid in g.edge_ids:
        if g.sign(eid) == -1:
            neg_mask |= 1 << (eid - 1)
    vertex_mask = [0] * (g.n + 1)
    for eid in g.edge_ids:
        u, v, _ = g.edges[eid - 1]
        vertex_mask[u] ^= 1 << (eid - 1)
        vertex_mask[v] ^= 1 << (eid - 1)

    def canonical(subset_bits: int) -> tuple[int, ...]:
        # subset_bits over vertices 2..n (bit j <-> vertex j+2)
        inside = [j + 2 for j in range(g.n - 1) if subset_bits >> j & 1]
        outside = [1] + [j + 2 for j in range(g.n - 1) if not subset_bits >> j & 1]
        a, b = tuple(inside), tuple(sorted(outside))
        return min(a, b)

    best_count = neg_mask.bit_count()
    best_rep = canonical(0)
    cur = neg_mask
    subset = 0
    for i in range(1, 1 << (g.n - 1)):
        j = (i & -i).bit_length() - 1  # Gray code: flip vertex j+2
        subset ^= 1 << j
        cur ^= vertex_mask[j + 2]
        count = cur.bit_count()
        if count < best_count:
            best_count, best_rep = count, canonical(subset)
        elif count == best_count:
            rep = canonical(subset)
            if rep < best_rep:
                best_rep = rep
    two_ec, _ = is_two_edge_connected(g)
    return SignatureSummary(
        negative_edge_count=len(g.negative_edges),
        negativeness=best_count,
        minimizing_switching=frozenset(best_rep),
        two_edge_connected=two_ec,
        flow_admissible=two_ec and best_count != 1,
    )


def minimize_signature(g: SignedGraph, max_n: int = DEFAULT_MAX_N) -> SignedGraph:
    """Equivalent signature with exactly negativeness(g) negative edges."""
    summary = negativeness(g, max_n)
    minimized = switch(g, summary.minimizing_switching)
    assert len(minimized.negative_edges) == summary.negativeness
    return minimized
