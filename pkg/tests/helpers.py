"""Independent brute-force oracles and fixture builders for the test suite.

Everything here deliberately avoids the library's own algorithms: counts
are recomputed from first principles so the tests cross-check rather than
echo the implementation.
"""

from __future__ import annotations

import itertools

from sgcc import SignedGraph, parse_signed_graph


def graph_from_pairs(n, pairs, negatives=()):
    negatives = set(negatives)
    edges = []
    for i, (u, v) in enumerate(pairs, start=1):
        edges.append((u, v, -1 if i in negatives else 1))
    return SignedGraph(n, tuple(edges))


K4_PAIRS = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def k4(negatives=()):
    return graph_from_pairs(4, K4_PAIRS, negatives)


def triangle(negatives=()):
    return graph_from_pairs(3, [(1, 2), (2, 3), (1, 3)], negatives)


def prism(negatives=()):
    pairs = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)]
    return graph_from_pairs(6, pairs, negatives)


def petersen(negatives=()):
    pairs = (
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
        + [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)]
        + [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    )
    return graph_from_pairs(10, pairs, negatives)


def flip_edges(g: SignedGraph, u_set) -> dict[int, int]:
    """Sign map after switching at u_set, computed edge by edge."""
    u_set = set(u_set)
    signs = {}
    for eid in g.edge_ids:
        u, v, sign = g.edges[eid - 1]
        if (u in u_set) != (v in u_set):
            sign = -sign
        signs[eid] = sign
    return signs


def brute_negativeness(g: SignedGraph) -> int:
    """Minimum negative count over all vertex subsets, by direct enumeration."""
    best = g.m + 1
    for r in range(g.n + 1):
        for u_set in itertools.combinations(g.vertices, r):
            count = sum(1 for s in flip_edges(g, u_set).values() if s == -1)
            best = min(best, count)
    return best


def is_balanced(g: SignedGraph) -> bool:
    """Every cycle positive, decided by sign-consistent 2-coloring."""
    color: dict[int, int] = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 1
        stack = [start]
        while stack:
            v = stack.pop()
            for eid in g.incidence[v]:
                w = g.other_end(eid, v)
                expected = color[v] * g.sign(eid)
                if w not in color:
                    color[w] = expected
                    stack.append(w)
                elif color[w] != expected:
                    return False
    return True


def _degrees(g: SignedGraph, edges) -> dict[int, int]:
    deg: dict[int, int] = {}
    for eid in edges:
        u, v = g.endpoints(eid)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return deg


def _connected_edge_set(g: SignedGraph, edges) -> bool:
    edges = set(edges)
    if not edges:
        return True
    start = next(iter(edges))
    seen = {start}
    frontier = [start]
    while frontier:
        eid = frontier.pop()
        u, v = g.endpoints(eid)
        for other in edges - seen:
            a, b = g.endpoints(other)
            if a in (u, v) or b in (u, v):
                seen.add(other)
                frontier.append(other)
    return seen == edges


def naive_is_cycle(g: SignedGraph, edges) -> bool:
    edges = set(edges)
    if not edges:
        return False
    deg = _degrees(g, edges)
    return all(d == 2 for d in deg.values()) and _connected_edge_set(g, edges)


def _sign_product(g: SignedGraph, edges) -> int:
    p = 1
    for eid in edges:
        p *= g.sign(eid)
    return p


def _on_cycle(g: SignedGraph, edges, eid) -> bool:
    """Edge lies on a cycle inside the edge set."""
    u, v = g.endpoints(eid)
    rest = set(edges) - {eid}
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for other in rest:
            a, b = g.endpoints(other)
            if x in (a, b):
                w = b if x == a else a
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return v in seen


def naive_is_barbell(g: SignedGraph, edges) -> bool:
    """Barbell recognition by exhaustive partition into cycle + cycle + path."""
    edges = frozenset(edges)
    if len(edges) < 4:
        return False
    negative_cycles = []
    pool = sorted(edges)
    for r in range(2, len(edges)):
        for combo in itertools.combinations(pool, r):
            s = frozenset(combo)
            if naive_is_cycle(g, s) and _sign_product(g, s) == -1:
                negative_cycles.append(s)
    for i, a in enumerate(negative_cycles):
        for b in negative_cycles[i + 1 :]:
            if a & b:
                continue
            path = edges - a - b
            va = {v for e in a for v in g.endpoints(e)}
            vb = {v for e in b for v in g.endpoints(e)}
            if not path:
                if len(va & vb) == 1:
                    return True
                continue
            if va & vb:
                continue
            deg = _degrees(g, path)
            ends = [v for v, d in deg.items() if d == 1]
            if len(ends) != 2 or any(d > 2 for d in deg.values()):
                continue
            if not _connected_edge_set(g, path):
                continue
            if len([v for v in ends if v in va]) != 1:
                continue
            if len([v for v in ends if v in vb]) != 1:
                continue
            internal = {v for v, d in deg.items() if d == 2}
            if internal & (va | vb):
                continue
            return True
    return False


def naive_circuits(g: SignedGraph, max_length: int) -> set[frozenset[int]]:
    """All circuit edge sets up to a length, by raw subset enumeration."""
    out = set()
    ids = list(g.edge_ids)
    for r in range(2, max_length + 1):
        for combo in itertools.combinations(ids, r):
            s = frozenset(combo)
            if naive_is_cycle(g, s):
                if _sign_product(g, s) == 1:
                    out.add(s)
            elif naive_is_barbell(g, s):
                out.add(s)
    return out


def brute_min_circuit_cover(g: SignedGraph, circuit_sets) -> int | None:
    """Minimum cover length over all subsets of the given circuit edge sets.

    A shorter cover may use more members, so every subset is scanned;
    capped at 20 circuits to keep the enumeration honest and finite.
    """
    circuit_sets = [frozenset(s) for s in circuit_sets]
    assert len(circuit_sets) <= 20, "brute-force oracle limited to 20 circuits"
    universe = frozenset(g.edge_ids)
    best = None
    for mask in range(1, 1 << len(circuit_sets)):
        union: set[int] = set()
        total = 0
        for i, s in enumerate(circuit_sets):
            if mask >> i & 1:
                union |= s
                total += len(s)
        if union == universe and (best is None or total < best):
            best = total
    return best


def all_spanning_trees(g: SignedGraph, edges) -> list[frozenset[int]]:
    """Every spanning tree of the edge-induced subgraph (on all n vertices)."""
    edges = sorted(edges)
    n = g.n
    trees = []

    def components_count(chosen):
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        comps = n
        for eid in chosen:
            u, v = g.endpoints(eid)
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        return comps

    def acyclic(chosen):
        # n - |chosen| components exactly when no chosen edge closed a cycle
        return components_count(chosen) == n - len(chosen)

    def rec(idx, chosen):
        if len(chosen) == n - 1:
            if components_count(chosen) == 1:
                trees.append(frozenset(chosen))
            return
        if idx == len(edges):
            return
        if components_count(chosen + edges[idx:]) != 1:
            return
        if acyclic(chosen + [edges[idx]]):
            rec(idx + 1, chosen + [edges[idx]])
        rec(idx + 1, chosen)

    rec(0, [])
    return trees


def random_cuts(g: SignedGraph, rng, count: int):
    """Random nonempty proper vertex subsets, as switching cuts."""
    for _ in range(count):
        size = rng.randint(1, g.n - 1)
        yield frozenset(rng.sample(range(1, g.n + 1), size))
