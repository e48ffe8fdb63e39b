"""Signed cycle-trees and the two constructive cover theorems on them.

A cycle-tree is a connected graph with no degree-1 vertices whose cycles
are pairwise edge-disjoint (a cactus without pendant trees); the signed
variant additionally requires every cycle to carry a negative edge.
``leaf_once_cover`` builds a circuit family covering each leaf-cycle
exactly once and every other cycle at most 3/2 times; ``cycle_tree_cover``
covers all cycles within total length 4/3 of the edge count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .circuits import (
    Barbell,
    Circuit,
    CircuitFamily,
    Cycle,
    classify_cycle,
    cycle_vertex_order,
    fundamental_cycles,
    make_barbell,
    symmetric_difference_cycles,
)
from .errors import BoundViolationError, PreconditionError
from .graph import (
    SignedGraph,
    connected_components,
    is_connected,
    negativeness,
)

DEFAULT_RANDOM_TREES = 64


def biconnected_blocks(g: SignedGraph, edges: Iterable[int]) -> list[frozenset[int]]:
    """Edge sets of the biconnected components of the edge-induced subgraph."""
    edges = frozenset(edges)
    inc: dict[int, list[int]] = {}
    for eid in sorted(edges):
        u, v = g.endpoints(eid)
        inc.setdefault(u, []).append(eid)
        inc.setdefault(v, []).append(eid)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    clock = 0
    for root in sorted(inc):
        if root in disc:
            continue
        disc[root] = low[root] = clock
        clock += 1
        estack: list[int] = []
        frames: list[list] = [[root, None, 0]]
        while frames:
            frame = frames[-1]
            v, in_edge, i = frame
            if i < len(inc[v]):
                frame[2] += 1
                eid = inc[v][i]
                if eid == in_edge:
                    continue
                w = g.other_end(eid, v)
                if w not in disc:
                    estack.append(eid)
                    disc[w] = low[w] = clock
                    clock += 1
                    frames.append([w, eid, 0])
                elif disc[w] < disc[v]:
                    estack.append(eid)
                    low[v] = min(low[v], disc[w])
            else:
                frames.pop()
                if in_edge is not None:
                    u = g.other_end(in_edge, v)
                    low[u] = min(low[u], low[v])
                    if low[v] >= disc[u]:
                        block = set()
                        while True:
                            e = estack.pop()
                            block.add(e)
                            if e == in_edge:
                                break
                        blocks.append(frozenset(block))
    return blocks


def core_edges(g: SignedGraph, edges: Iterable[int]) -> frozenset[int]:
    """Iteratively peel degree-1 vertices; the maximal subgraph without them."""
    current = set(edges)
    while True:
        degree: dict[int, list[int]] = {}
        for eid in current:
            u, v = g.endpoints(eid)
            degree.setdefault(u, []).append(eid)
            degree.setdefault(v, []).append(eid)
        leaves = [v for v, es in degree.items() if len(es) == 1]
        if not leaves:
            return frozenset(current)
        for v in leaves:
            for eid in degree[v]:
                current.discard(eid)


@dataclass(frozen=True)
class CycleTree:
    """A signed cycle-tree inside a host graph, with leaf-cycle annotations."""

    host: SignedGraph
    edges: frozenset[int]
    cycles: tuple[Cycle, ...]
    leaf_flags: tuple[bool, ...]
    tree_edges: frozenset[int]
    root: int

    @classmethod
    def from_edges(
        cls, host: SignedGraph, edges: Iterable[int], root: int = 1
    ) -> "CycleTree":
        edges = frozenset(edges)
        if not edges:
            return cls(host, edges, (), (), frozenset(), root)
        if len(connected_components(host, edges)) != 1:
            raise PreconditionError("cycle-tree must be connected")
        degree: dict[int, int] = {}
        for eid in edges:
            u, v = host.endpoints(eid)
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        bad = sorted(v for v, d in degree.items() if d == 1)
        if bad:
            raise PreconditionError(f"cycle-tree has degree-1 vertices {bad}")
        cycles = []
        tree_edges = set()
        for block in biconnected_blocks(host, edges):
            if len(block) == 1:
                tree_edges |= block
                continue
            try:
                cyc = classify_cycle(host, block)
            except PreconditionError:
                raise PreconditionError("cycles are not pairwise edge-disjoint")
            cycles.append(cyc)
        for cyc in cycles:
            if all(host.sign(e) == 1 for e in cyc.edges):
                raise PreconditionError("every cycle must contain a negative edge")
        cycles.sort(key=Cycle.sort_key)
        leaf_flags = []
        for cyc in cycles:
            attach = [
                v for v in cyc.vertices(host) if degree[v] > 2
            ]
            leaf_flags.append(len(attach) <= 1)
        anchor = min(degree)
        return cls(
            host, edges, tuple(cycles), tuple(leaf_flags), frozenset(tree_edges), anchor
        )

    @cached_property
    def negative_cycle_count(self) -> int:
        return sum(1 for c in self.cycles if c.sign == -1)

    @cached_property
    def negative_edges(self) -> frozenset[int]:
        return frozenset(e for e in self.edges if self.host.sign(e) == -1)

    def leaf_cycles(self) -> list[Cycle]:
        return [c for c, leaf in zip(self.cycles, self.leaf_flags) if leaf]

    def nonleaf_cycles(self) -> list[Cycle]:
        return [c for c, leaf in zip(self.cycles, self.leaf_flags) if not leaf]

    def sub_tree(self, edges: Iterable[int]) -> "CycleTree":
        return CycleTree.from_edges(self.host, edges, self.root)


def bfs_spanning_tree(g: SignedGraph, edges: Iterable[int], root: int = 1) -> frozenset[int]:
    """BFS spanning tree of the edge-induced subgraph, in edge-id order."""
    from collections import deque

    edges = frozenset(edges)
    inc: dict[int, list[int]] = {v: [] for v in g.vertices}
    for eid in sorted(edges):
        u, v = g.endpoints(eid)
        inc[u].append(eid)
        inc[v].append(eid)
    seen = {root}
    tree = set()
    dq = deque([root])
    while dq:
        v = dq.popleft()
        for eid in inc[v]:
            w = g.other_end(eid, v)
            if w not in seen:
                seen.add(w)
                tree.add(eid)
                dq.append(w)
    if len(seen) != g.n:
        raise PreconditionError("subgraph does not span the graph")
    return frozenset(tree)


def random_spanning_tree(
    g: SignedGraph, edges: Iterable[int], rng: random.Random
) -> frozenset[int]:
    """Spanning tree from a random edge order (union-find acceptance)."""
    pool = sorted(edges)
    rng.shuffle(pool)
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = set()
    for eid in pool:
        u, v = g.endpoints(eid)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            tree.add(eid)
    if len(tree) != g.n - 1:
        raise PreconditionError("subgraph does not span the graph")
    return frozenset(tree)


def extract_cycle_tree(
    g: SignedGraph,
    tree: Iterable[int] | None = None,
    excluded: int | None = None,
) -> CycleTree:
    """Minimal signed cycle-tree holding every negative edge except ``excluded``.

    Fundamental cycles of the negative edges over a spanning tree of the
    positive subgraph are XOR-ed; the cycles of the result that carry
    negative edges are glued back together with tree edges, then pruned to
    a minimal connected subgraph (so each added tree edge is a cutedge).
    """
    if not g.is_cubic():
        raise PreconditionError("cycle-tree extraction requires a cubic graph")
    summary = negativeness(g)
    if not summary.two_edge_connected:
        raise PreconditionError("cycle-tree extraction requires 2-edge-connectivity")
    if len(g.negative_edges) != summary.negativeness:
        raise PreconditionError("signature must be minimized first")
    if tree is None:
        tree = bfs_spanning_tree(g, g.positive_edges)
    tree = frozenset(tree)
    if not tree <= g.positive_edges:
        raise PreconditionError("spanning tree must avoid negative edges")
    if len(tree) != g.n - 1 or not is_connected(g, tree):
        raise PreconditionError("tree is not a spanning tree")
    if excluded is not None and excluded not in g.negative_edges:
        raise PreconditionError("excluded edge must be negative")
    negs = sorted(g.negative_edges - {excluded})
    if not negs:
        return CycleTree.from_edges(g, frozenset(), root=1)
    fund = fundamental_cycles(g, tree, negs)
    pieces = symmetric_difference_cycles(g, [c.edges for c in fund])
    q_edges: set[int] = set()
    for cyc in pieces:
        if any(g.sign(e) == -1 for e in cyc.edges):
            q_edges |= cyc.edges
    current = set(q_edges) | tree
    while True:
        current = set(core_edges(g, current))
        removable = None
        for eid in sorted(current - q_edges):
            trial = current - {eid}
            if is_connected(g, trial, spanning=False):
                removable = eid
                break
        if removable is None:
            break
        current.discard(removable)
    result = CycleTree.from_edges(g, frozenset(current))
    expected = frozenset(negs)
    if result.negative_edges != expected:
        raise BoundViolationError("extracted tree lost or gained negative edges")
    on_cycles = frozenset(e for c in result.cycles for e in c.edges)
    if not expected <= on_cycles:
        raise BoundViolationError("a negative edge ended up off-cycle")
    return result


def minimize_cycle_count(
    g: SignedGraph,
    excluded: int | None = None,
    random_trees: int = DEFAULT_RANDOM_TREES,
    seed: int = 0,
) -> CycleTree:
    """Fewest-cycle tree over a spanning-tree portfolio (all BFS roots + random)."""
    pos = g.positive_edges
    trees = []
    seen = set()
    for root in g.vertices:
        t = bfs_spanning_tree(g, pos, root)
        if t not in seen:
            seen.add(t)
            trees.append(t)
    rng = random.Random(seed)
    for _ in range(random_trees):
        t = random_spanning_tree(g, pos, rng)
        if t not in seen:
            seen.add(t)
            trees.append(t)
    best = None
    best_key = None
    for t in trees:
        cand = extract_cycle_tree(g, t, excluded)
        key = (len(cand.cycles), len(cand.edges), tuple(sorted(cand.edges)))
        if best_key is None or key < best_key:
            best, best_key = cand, key
    assert best is not None
    return best


def _order_path_edges(g: SignedGraph, edges: frozenset[int]) -> tuple[int, ...]:
    """Order a path-shaped edge set from one endpoint to the other."""
    inc: dict[int, list[int]] = {}
    for eid in sorted(edges):
        u, v = g.endpoints(eid)
        inc.setdefault(u, []).append(eid)
        inc.setdefault(v, []).append(eid)
    ends = sorted(v for v, es in inc.items() if len(es) == 1)
    if len(ends) != 2:
        raise PreconditionError("edge set is not a path")
    seq = []
    v = ends[0]
    prev = None
    while True:
        nxt = [e for e in inc[v] if e != prev]
        if not nxt:
            break
        eid = nxt[0]
        seq.append(eid)
        v = g.other_end(eid, v)
        prev = eid
    if len(seq) != len(edges):
        raise PreconditionError("edge set is not a path")
    return tuple(seq)


def _cycle_order_from(
    g: SignedGraph, cycle: Cycle, start: int
) -> tuple[list[int], list[int]]:
    """Cycle order rotated to start at a vertex, lower first-edge id preferred."""
    verts, edges = cycle_vertex_order(g, cycle)
    i = verts.index(start)
    verts = verts[i:] + verts[:i]
    edges = edges[i:] + edges[:i]
    # reversed orientation: same vertex start, edges walked backwards
    rev_verts = [verts[0]] + verts[1:][::-1]
    rev_edges = edges[::-1]
    if rev_edges[0] < edges[0]:
        return rev_verts, rev_edges
    return verts, edges


def boundary_walk_order(
    h: CycleTree,
) -> tuple[list[Cycle], list[tuple[int, ...]]]:
    """Leaf-cycles in outer boundary-walk order with the joining segments.

    The closed walk around the cactus passes every cycle edge once and
    every tree edge twice; leaf-cycles appear as contiguous runs. Segment i
    joins leaf i to leaf i+1 (cyclically) and is a path internally avoiding
    all leaf-cycles.
    """
    if len(h.cycles) < 2:
        raise PreconditionError("boundary walk needs at least two cycles")
    host = h.host
    cycle_vertices = [c.vertices(host) for c in h.cycles]
    blocks_at: dict[int, list[tuple[int, object]]] = {}
    for ci, verts in enumerate(cycle_vertices):
        key = min(h.cycles[ci].edges)
        for v in verts:
            blocks_at.setdefault(v, []).append((key, ("c", ci)))
    for eid in h.tree_edges:
        u, v = host.endpoints(eid)
        for w in (u, v):
            blocks_at.setdefault(w, []).append((eid, ("b", eid)))
    for v in blocks_at:
        blocks_at[v].sort()
    cutvertices = sorted(v for v, bs in blocks_at.items() if len(bs) > 1)
    root = cutvertices[0]
    visited: set = set()
    walk_edges: list[int] = []
    walk_verts: list[int] = [root]
    leaf_runs: list[tuple[int, int, int]] = []

    def explore(v: int, from_block) -> None:
        for _, block in blocks_at.get(v, ()):
            if block == from_block or block in visited:
                continue
            visited.add(block)
            kind, payload = block
            if kind == "b":
                eid = payload
                w = host.other_end(eid, v)
                walk_edges.append(eid)
                walk_verts.append(w)
                explore(w, block)
                walk_edges.append(eid)
                walk_verts.append(v)
            else:
                ci = payload
                verts, edges = _cycle_order_from(host, h.cycles[ci], v)
                start_idx = len(walk_edges)
                for step, eid in enumerate(edges):
                    nxt = verts[(step + 1) % len(verts)]
                    walk_edges.append(eid)
                    walk_verts.append(nxt)
                    if nxt != v:
                        explore(nxt, block)
                if h.leaf_flags[ci]:
                    leaf_runs.append((ci, start_idx, len(walk_edges)))

    explore(root, None)
    if len(walk_edges) != 2 * len(h.tree_edges) + sum(c.length for c in h.cycles):
        raise BoundViolationError("boundary walk missed edges")
    leaves = [h.cycles[ci] for ci, _, _ in leaf_runs]
    k = len(leaf_runs)
    segments: list[tuple[int, ...]] = []
    segment_verts: list[list[int]] = []
    for i in range(k):
        _, _, end = leaf_runs[i]
        _, start_next, _ = leaf_runs[(i + 1) % k]
        if i + 1 < k:
            segments.append(tuple(walk_edges[end:start_next]))
            segment_verts.append(walk_verts[end : start_next + 1])
        else:
            segments.append(tuple(walk_edges[end:] + walk_edges[:start_next]))
            # walk_verts is closed (first == last); drop the duplicate on wrap
            segment_verts.append(walk_verts[end:] + walk_verts[1 : start_next + 1])
    # each segment must be simple and internally avoid its own two leaf-cycles
    # (it may pass through vertices of other leaf-cycles; the chain barbells
    # only need internal disjointness from their own bells)
    for i, verts in enumerate(segment_verts):
        if len(set(verts)) != len(verts):
            raise BoundViolationError("boundary segment repeats a vertex")
        own = leaves[i].vertices(host) | leaves[(i + 1) % k].vertices(host)
        if any(v in own for v in verts[1:-1]):
            raise BoundViolationError("boundary segment cuts through its own leaf-cycle")
    return leaves, segments


def _components_on_cycle(
    h: CycleTree, cycle: Cycle
) -> list[tuple[int, frozenset[int]]]:
    """Edge-bearing components of h minus the cycle, with attachment vertices."""
    host = h.host
    rest = h.edges - cycle.edges
    cyc_verts = cycle.vertices(host)
    out = []
    for comp in connected_components(host, rest):
        support = set()
        for eid in comp:
            support.update(host.endpoints(eid))
        attach = sorted(support & cyc_verts)
        if len(attach) != 1:
            raise BoundViolationError("component attaches to a cycle more than once")
        out.append((attach[0], comp))
    return out


def _arc(edge_seq: list[int], p: int, q: int) -> tuple[int, ...]:
    if p == q:
        return ()
    if p < q:
        return tuple(edge_seq[p:q])
    return tuple(edge_seq[p:] + edge_seq[:q])


def _even_split(h: CycleTree) -> tuple[CycleTree, CycleTree] | None:
    """A cutvertex split into two parts with even negative-cycle counts, if any."""
    host = h.host
    degree: dict[int, list[int]] = {}
    for eid in h.edges:
        u, v = host.endpoints(eid)
        degree.setdefault(u, []).append(eid)
        degree.setdefault(v, []).append(eid)
    for v in sorted(degree):
        incident = frozenset(degree[v])
        rest = h.edges - incident
        comps = connected_components(host, rest)
        vertex_comp: dict[int, int] = {}
        for idx, comp in enumerate(comps):
            for eid in comp:
                a, b = host.endpoints(eid)
                vertex_comp[a] = idx
                vertex_comp[b] = idx
        branches: dict[object, set[int]] = {}
        for eid in sorted(incident):
            w = host.other_end(eid, v)
            key = vertex_comp.get(w, ("lone", w))
            branches.setdefault(key, set()).add(eid)
        branch_sets = []
        for key, group in branches.items():
            es = set(group)
            if not isinstance(key, tuple):
                es |= comps[key]
            branch_sets.append(frozenset(es))
        branch_sets.sort(key=min)
        if len(branch_sets) < 2:
            continue
        counts = []
        for es in branch_sets:
            counts.append(
                sum(1 for c in h.cycles if c.sign == -1 and c.edges <= es)
            )
        pick: list[int] | None = None
        for i, cnt in enumerate(counts):
            if cnt % 2 == 0:
                pick = [i]
                break
        if pick is None and len(branch_sets) >= 4:
            pick = [0, 1]
        if pick is None:
            continue
        part1: set[int] = set()
        for i in pick:
            part1 |= branch_sets[i]
        part2 = set(h.edges) - part1
        if not part2:
            continue
        sub1 = h.sub_tree(core_edges(host, part1))
        sub2 = h.sub_tree(core_edges(host, part2))
        return sub1, sub2
    return None


def _pairing_plan(
    h: CycleTree, cycle: Cycle, comps: list[tuple[int, frozenset[int]]]
):
    """Order components around the cycle and expose its arc geometry."""
    host = h.host
    verts, edges = cycle_vertex_order(host, cycle)
    pos = {v: i for i, v in enumerate(verts)}
    ordered = sorted(comps, key=lambda ac: (pos[ac[0]], min(ac[1])))
    positions = [pos[a] for a, _ in ordered]
    return ordered, positions, edges


def _leaf_once(h: CycleTree) -> list[Circuit]:
    host = h.host
    if h.negative_cycle_count % 2:
        raise BoundViolationError("recursion reached an odd negative-cycle count")
    if not h.cycles:
        return []
    split = _even_split(h)
    if split is not None:
        return _leaf_once(split[0]) + _leaf_once(split[1])
    positives = sorted((c for c in h.cycles if c.sign == 1), key=Cycle.sort_key)
    if positives:
        cyc = positives[0]
        comps = _components_on_cycle(h, cyc)
        if not comps:
            return [cyc]
        ordered, positions, edge_seq = _pairing_plan(h, cyc, comps)
        t = len(ordered)
        if t % 2:
            raise BoundViolationError("odd component count around a positive cycle")
        plans = []
        for offset in (0, 1):
            arcs = []
            for i in range(t // 2):
                a = positions[(offset + 2 * i) % t]
                b = positions[(offset + 2 * i + 1) % t]
                arcs.append(_arc(edge_seq, a, b))
            total = sum(len(arc) for arc in arcs)
            plans.append((total, sorted(e for arc in arcs for e in arc), offset, arcs))
        plans.sort(key=lambda p: (p[0], p[1]))
        _, _, offset, arcs = plans[0]
        out: list[Circuit] = [cyc]
        for i in range(t // 2):
            p_comp = ordered[(offset + 2 * i) % t][1]
            q_comp = ordered[(offset + 2 * i + 1) % t][1]
            piece = h.sub_tree(p_comp | set(arcs[i]) | q_comp)
            out += _leaf_once(piece)
        return out
    if len(h.cycles) == 2:
        a, b = h.cycles
        if not h.tree_edges:
            return [make_barbell(host, a, b, ())]
        return [make_barbell(host, a, b, _order_path_edges(host, h.tree_edges))]
    # all cycles negative, at least four of them
    best = None
    for cand in h.cycles:
        comps = _components_on_cycle(h, cand)
        key = (-len(comps), cand.length, tuple(sorted(cand.edges)))
        if best is None or key < best[0]:
            best = (key, cand, comps)
    _, cyc, comps = best
    t = len(comps)
    if t < 3 or t % 2 == 0:
        raise BoundViolationError("negative-cycle case expects odd components >= 3")
    ordered, positions, edge_seq = _pairing_plan(h, cyc, comps)
    k = (t - 1) // 2
    plans = []
    for r in range(t):
        arcs = []
        for i in range(1, k + 1):
            a = positions[(r + 2 * i - 1) % t]
            b = positions[(r + 2 * i) % t]
            arcs.append(_arc(edge_seq, a, b))
        total = sum(len(arc) for arc in arcs)
        plans.append((total, r, arcs))
    plans.sort(key=lambda p: (p[0], p[1]))
    _, r, arcs = plans[0]
    if 2 * plans[0][0] > cyc.length:
        raise BoundViolationError("no rotation satisfies the half-length segment bound")
    out = []
    h0 = h.sub_tree(ordered[r][1] | cyc.edges)
    out += _leaf_once(h0)
    for i in range(1, k + 1):
        p_comp = ordered[(r + 2 * i - 1) % t][1]
        q_comp = ordered[(r + 2 * i) % t][1]
        piece = h.sub_tree(p_comp | set(arcs[i - 1]) | q_comp)
        out += _leaf_once(piece)
    return out


def _check_leaf_once(h: CycleTree, fam: CircuitFamily) -> None:
    cov = fam.coverage()
    for c in fam:
        if not c.edges <= h.edges:
            raise BoundViolationError("cover escaped the cycle-tree")
    for cyc, leaf in zip(h.cycles, h.leaf_flags):
        counts = [cov[e] for e in cyc.edges]
        if leaf:
            if any(c != 1 for c in counts):
                raise BoundViolationError("leaf-cycle not covered exactly once")
        else:
            if any(c < 1 for c in counts) or 2 * sum(counts) > 3 * cyc.length:
                raise BoundViolationError("non-leaf cycle exceeds 3/2 coverage")
    for eid in h.tree_edges:
        if cov[eid] > 1:
            raise BoundViolationError("connector edge covered more than once")


def leaf_once_cover(h: CycleTree) -> CircuitFamily:
    """Circuits covering each leaf-cycle exactly once, others at most 3/2 times."""
    if h.negative_cycle_count % 2:
        raise PreconditionError("leaf-once cover needs an even number of negative cycles")
    fam = CircuitFamily(tuple(_leaf_once(h)))
    _check_leaf_once(h, fam)
    return fam


def _tree_cover(h: CycleTree) -> CircuitFamily:
    host = h.host
    if not h.cycles:
        return CircuitFamily(())
    pos_leaves = sorted(
        (c for c, leaf in zip(h.cycles, h.leaf_flags) if leaf and c.sign == 1),
        key=Cycle.sort_key,
    )
    if pos_leaves:
        cyc = pos_leaves[0]
        rest = core_edges(host, h.edges - cyc.edges)
        return _tree_cover(h.sub_tree(rest)) + CircuitFamily((cyc,))
    if len(h.cycles) == 1:
        raise BoundViolationError("lone negative cycle cannot be covered by circuits")
    leaves, segments = boundary_walk_order(h)
    k = len(leaves)
    chain = []
    for i in range(k):
        chain.append(make_barbell(host, leaves[i], leaves[(i + 1) % k], segments[i]))
    fam1 = CircuitFamily(tuple(chain))
    nonleaf_len = sum(c.length for c in h.nonleaf_cycles())
    if fam1.length != 2 * len(h.edges) - nonleaf_len:
        raise BoundViolationError("barbell chain length accounting failed")
    fam2 = CircuitFamily(tuple(_leaf_once(h)))
    if 2 * fam2.length > 2 * len(h.edges) + nonleaf_len:
        raise BoundViolationError("leaf-once cover exceeded its length budget")
    return fam1 if fam1.length < fam2.length else fam2


def cycle_tree_cover(h: CycleTree) -> CircuitFamily:
    """Circuits covering every cycle edge with total length at most 4/3 |E(H)|."""
    if h.negative_cycle_count % 2:
        raise PreconditionError("tree cover needs an even number of negative cycles")
    fam = _tree_cover(h)
    cov = fam.coverage()
    for cyc in h.cycles:
        if any(cov[e] < 1 for e in cyc.edges):
            raise BoundViolationError("a cycle edge is uncovered")
    if 3 * fam.length > 4 * len(h.edges):
        raise BoundViolationError("tree cover exceeded 4/3 of the edge count")
    return fam
