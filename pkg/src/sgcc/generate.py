"""Deterministic instance generators for corpora and fixtures.

All randomness flows through a single seed; identical seeds reproduce
identical graphs bit for bit.
"""

from __future__ import annotations

import random

from .cycletree import CycleTree
from .errors import PreconditionError
from .graph import SignedGraph, find_bridges, is_connected

SWAP_ROUNDS_PER_EDGE = 20


def _base_cubic_edges(n: int) -> set[tuple[int, int]]:
    """K4 for n=4, otherwise the prism over two n/2-cycles."""
    if n == 4:
        return {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}
    half = n // 2
    edges = set()
    for i in range(1, half + 1):
        j = i % half + 1
        edges.add(tuple(sorted((i, j))))
        edges.add(tuple(sorted((half + i, half + j))))
        edges.add((i, half + i))
    return edges


def random_cubic_signed_graph(n: int, negative_count: int, seed: int) -> SignedGraph:
    """Random connected 2-edge-connected cubic graph with the requested sign count.

    Double-edge swaps mix a prism base (20 per edge, repeated until the
    result is 2-edge-connected), then negative signs land on a random edge
    sample. Simple graphs only.
    """
    if n < 4 or n % 2:
        raise PreconditionError("cubic graphs need an even vertex count of at least 4")
    m = 3 * n // 2
    if not 0 <= negative_count <= m:
        raise PreconditionError("negative count out of range")
    rng = random.Random(seed)
    edges = _base_cubic_edges(n)

    def swap_round(count: int) -> None:
        for _ in range(count):
            pool = sorted(edges)
            (a, b), (c, d) = rng.sample(pool, 2)
            if rng.random() < 0.5:
                c, d = d, c
            if len({a, b, c, d}) != 4:
                continue
            new1 = tuple(sorted((a, c)))
            new2 = tuple(sorted((b, d)))
            if new1 in edges or new2 in edges:
                continue
            edges.discard((a, b))
            edges.discard(tuple(sorted((c, d))))
            edges.add(new1)
            edges.add(new2)

    swap_round(SWAP_ROUNDS_PER_EDGE * m)
    while True:
        ordered = sorted(edges)
        candidate = SignedGraph(n, tuple((u, v, 1) for u, v in ordered))
        if is_connected(candidate) and not find_bridges(candidate):
            break
        swap_round(m)
    negatives = rng.sample(range(1, m + 1), negative_count)
    return candidate.with_signs({eid: -1 for eid in negatives})


def random_cycle_tree(
    seed: int,
    max_cycles: int = 7,
    max_edges: int = 40,
    even_negatives: bool = True,
) -> CycleTree:
    """Random signed cycle-tree: a cactus whose every cycle carries a negative edge.

    Cycles attach to the existing tree either at a shared vertex or through
    a fresh connecting path. Cycle signs are balanced to an even number of
    negative cycles when requested.
    """
    rng = random.Random(seed)
    want = rng.randint(1, max_cycles)
    lengths = []
    total = 0
    for i in range(want):
        length = rng.choice([2, 3, 3, 4, 4, 5, 6])
        connector = 0 if i == 0 else rng.choice([0, 0, 1, 2])
        if total + length + connector > max_edges:
            break
        lengths.append((length, connector))
        total += length + connector
    if not lengths:
        lengths = [(3, 0)]
    negative_flags = [rng.random() < 0.5 for _ in lengths]
    if even_negatives and sum(negative_flags) % 2:
        negative_flags[-1] = not negative_flags[-1]
    if len(lengths) == 1:
        negative_flags = [False] if even_negatives else negative_flags

    next_vertex = 1
    edges: list[tuple[int, int, int]] = []
    vertices: list[int] = []

    def fresh() -> int:
        nonlocal next_vertex
        v = next_vertex
        next_vertex += 1
        vertices.append(v)
        return v

    def add_cycle(anchor: int | None, length: int, negative: bool) -> None:
        ring = [anchor if anchor is not None else fresh()]
        for _ in range(length - 1):
            ring.append(fresh())
        ring_edges = []
        for i in range(length):
            u, v = ring[i], ring[(i + 1) % length]
            edges.append((u, v, 1))
            ring_edges.append(len(edges))
        # a negative cycle gets one negative edge, a positive one gets two
        flips = rng.sample(ring_edges, 1 if negative else 2)
        for eid in flips:
            u, v, _ = edges[eid - 1]
            edges[eid - 1] = (u, v, -1)

    for i, ((length, connector), negative) in enumerate(zip(lengths, negative_flags)):
        if i == 0:
            add_cycle(None, length, negative)
            continue
        anchor = rng.choice(vertices)
        for _ in range(connector):
            nxt = fresh()
            edges.append((anchor, nxt, 1))
            anchor = nxt
        add_cycle(anchor, length, negative)

    host = SignedGraph(next_vertex - 1, tuple(edges))
    return CycleTree.from_edges(host, host.all_edges())


def join_blocks_with_two_cut(n1: int, n2: int, seed: int) -> SignedGraph:
    """All-positive cubic graph with a 2-edge-cut, from two degree-repaired blocks.

    Each block is a random cubic graph minus one edge; the four degree-2
    vertices are rewired across the blocks, producing the cut pair.
    """
    rng = random.Random(seed)
    g1 = random_cubic_signed_graph(n1, 0, rng.randrange(1 << 30))
    g2 = random_cubic_signed_graph(n2, 0, rng.randrange(1 << 30))
    drop1 = rng.randrange(1, g1.m + 1)
    drop2 = rng.randrange(1, g2.m + 1)
    a1, b1 = g1.endpoints(drop1)
    a2, b2 = g2.endpoints(drop2)
    edges: list[tuple[int, int, int]] = []
    for eid in g1.edge_ids:
        if eid != drop1:
            u, v = g1.endpoints(eid)
            edges.append((u, v, 1))
    shift = g1.n
    for eid in g2.edge_ids:
        if eid != drop2:
            u, v = g2.endpoints(eid)
            edges.append((u + shift, v + shift, 1))
    edges.append((a1, a2 + shift, 1))
    edges.append((b1, b2 + shift, 1))
    g = SignedGraph(g1.n + g2.n, tuple(edges))
    if not g.is_cubic() or find_bridges(g) or not is_connected(g):
        # a rare unlucky draw (e.g. parallel edge after rewiring): try again
        return join_blocks_with_two_cut(n1, n2, seed + 7919)
    return g
