"""Ground truth at desk scale: exact shortest circuit covers and exact CDC search.

Both searches enumerate the complete circuit list (no circuit has more
than n+1 edges) and run deterministic branch-and-bound over edge bitmasks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .circuits import (
    Barbell,
    Circuit,
    CircuitFamily,
    enumerate_circuits,
)
from .errors import BudgetExceededError, NoCircuitCoverError, PreconditionError
from .graph import SignedGraph, find_bridges, is_connected


@dataclass(frozen=True)
class OracleResult:
    """Outcome of the exact shortest-circuit-cover search."""

    optimum: int
    witness: CircuitFamily
    node_count: int
    status: str  # "exact" or "budget_exceeded"


@dataclass(frozen=True)
class CdcResult:
    """Outcome of the exact circuit-double-cover search."""

    status: str  # "yes", "no", or "unknown"
    witness: CircuitFamily | None
    node_count: int

    @property
    def exists(self) -> bool | None:
        if self.status == "yes":
            return True
        if self.status == "no":
            return False
        return None


class _Deadline:
    def __init__(self, seconds: float | None, max_nodes: int | None):
        self.t_end = None if seconds is None else time.monotonic() + seconds
        self.max_nodes = max_nodes
        self.nodes = 0

    def tick(self) -> bool:
        """Count a search node; True when the budget is exhausted."""
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            return True
        if self.t_end is not None and self.nodes % 256 == 0:
            return time.monotonic() > self.t_end
        return False


def _circuit_masks(
    g: SignedGraph, circuits: Iterable[Circuit]
) -> list[tuple[int, int, Circuit]]:
    out = []
    for c in circuits:
        mask = 0
        for eid in c.edges:
            mask |= 1 << (eid - 1)
        out.append((mask, c.length, c))
    return out


def exact_scc(
    g: SignedGraph,
    budget_seconds: float | None = None,
    max_nodes: int | None = None,
) -> OracleResult:
    """Exact shortest circuit cover by branch-and-bound weighted set cover."""
    circuits = enumerate_circuits(g, g.m + g.n)
    union = 0
    entries = _circuit_masks(g, circuits)
    for mask, _, _ in entries:
        union |= mask
    full = (1 << g.m) - 1
    if union != full:
        missing = [eid for eid in g.edge_ids if not union >> (eid - 1) & 1]
        raise NoCircuitCoverError(
            f"no circuit cover exists: edges {missing} lie on no circuit"
        )
    # dominance: drop circuits another one covers at no extra length
    entries.sort(key=lambda s: (s[1], tuple(sorted(s[2].edges))))
    kept: list[tuple[int, int, Circuit]] = []
    for mask, length, c in entries:
        if any(mask & ~m2 == 0 and l2 <= length for m2, l2, _ in kept):
            continue
        kept.append((mask, length, c))
    by_edge: dict[int, list[tuple[int, int, Circuit]]] = {
        i: [] for i in range(g.m)
    }
    for entry in kept:
        mask = entry[0]
        while mask:
            low = mask & -mask
            by_edge[low.bit_length() - 1].append(entry)
            mask ^= low
    # greedy incumbent
    covered = 0
    incumbent: list[Circuit] = []
    incumbent_len = 0
    while covered != full:
        best = None
        for mask, length, c in kept:
            gain = (mask & ~covered).bit_count()
            if not gain:
                continue
            key = (length / gain, length)
            if best is None or key < best[0]:
                best = (key, mask, length, c)
        covered |= best[1]
        incumbent_len += best[2]
        incumbent.append(best[3])
    deadline = _Deadline(budget_seconds, max_nodes)
    best_len = incumbent_len
    best_family = tuple(incumbent)
    seen: dict[int, int] = {}
    exhausted = True
    stack: list[tuple[int, int, tuple[Circuit, ...]]] = [(0, 0, ())]
    while stack:
        if deadline.tick():
            exhausted = False
            break
        covered, cost, chosen = stack.pop()
        if covered == full:
            if cost < best_len:
                best_len = cost
                best_family = chosen
            continue
        remaining = full & ~covered
        if cost + remaining.bit_count() >= best_len:
            continue
        prev = seen.get(covered)
        if prev is not None and prev <= cost:
            continue
        seen[covered] = cost
        first = (remaining & -remaining).bit_length() - 1
        for mask, length, c in reversed(by_edge[first]):
            stack.append((covered | mask, cost + length, chosen + (c,)))
    return OracleResult(
        optimum=best_len,
        witness=CircuitFamily(best_family),
        node_count=deadline.nodes,
        status="exact" if exhausted else "budget_exceeded",
    )


def cdc_exists(
    g: SignedGraph,
    budget_seconds: float | None = None,
    max_nodes: int | None = None,
) -> CdcResult:
    """Exact decision: does a multiset of circuits cover every edge exactly twice?

    Branches on the lowest edge with unmet demand, choosing the whole
    multiset of circuits through it at once, so every candidate multiset is
    explored exactly once.
    """
    circuits = enumerate_circuits(g, g.m + g.n)
    entries = _circuit_masks(g, circuits)
    full_demand = tuple(2 for _ in range(g.m))
    deadline = _Deadline(budget_seconds, max_nodes)
    by_edge: dict[int, list[int]] = {i: [] for i in range(g.m)}
    for idx, (mask, _, _) in enumerate(entries):
        m = mask
        while m:
            low = m & -m
            by_edge[low.bit_length() - 1].append(idx)
            m ^= low

    import itertools

    def search(demand: tuple[int, ...]) -> tuple | None:
        """Multiset of circuit indices meeting the demand, or None.

        The branch edge's full multiset of covering circuits is chosen in
        one step; no later choice may touch that edge again, so every
        candidate multiset is generated exactly once.
        """
        if deadline.tick():
            raise BudgetExceededError("double-cover search budget exhausted")
        try:
            edge = next(i for i, d in enumerate(demand) if d > 0)
        except StopIteration:
            return ()
        need = demand[edge]
        usable = [
            idx
            for idx in by_edge[edge]
            if all(demand[b] >= 1 for b in _bits(entries[idx][0]))
        ]
        for combo in itertools.combinations_with_replacement(usable, need):
            new_demand = list(demand)
            ok = True
            for idx in combo:
                for b in _bits(entries[idx][0]):
                    new_demand[b] -= 1
                    if new_demand[b] < 0:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            rest = search(tuple(new_demand))
            if rest is not None:
                return tuple(combo) + rest
        return None

    try:
        solution = search(full_demand)
    except BudgetExceededError:
        return CdcResult(status="unknown", witness=None, node_count=deadline.nodes)
    except RecursionError:
        return CdcResult(status="unknown", witness=None, node_count=deadline.nodes)
    if solution is None:
        return CdcResult(status="no", witness=None, node_count=deadline.nodes)
    witness = CircuitFamily(tuple(entries[idx][2] for idx in solution))
    cov = witness.coverage()
    assert all(cov[eid] == 2 for eid in g.edge_ids), "witness is not an exact double cover"
    return CdcResult(status="yes", witness=witness, node_count=deadline.nodes)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def barbell_cdc_property(g: SignedGraph, fam: CircuitFamily) -> bool:
    """Every degree-3 vertex of a barbell in a double cover recurs in another barbell."""
    if not g.is_cubic():
        raise PreconditionError("the barbell pairing property is about cubic graphs")
    cov = fam.coverage()
    if any(cov.get(eid, 0) != 2 for eid in g.edge_ids):
        raise PreconditionError("family is not an exact double cover")

    def degree3_vertices(circuit: Circuit) -> set[int]:
        if not isinstance(circuit, Barbell):
            return set()
        degree: dict[int, int] = {}
        for eid in circuit.edges:
            u, v = g.endpoints(eid)
            degree[u] = degree.get(u, 0) + 1
            degree[v] = degree.get(v, 0) + 1
        return {v for v, d in degree.items() if d == 3}

    deg3 = [degree3_vertices(c) for c in fam]
    for i, verts in enumerate(deg3):
        for v in verts:
            if not any(j != i and v in other for j, other in enumerate(deg3)):
                return False
    return True


@dataclass(frozen=True)
class NoCdcInstance:
    """Signed graph built to have circuit covers but no circuit double cover."""

    graph: SignedGraph
    cut: tuple[int, int]
    negative_pair: tuple[int, int]


def find_two_edge_cuts(g: SignedGraph) -> list[tuple[int, int]]:
    """All pairs of edges whose joint removal disconnects the graph."""
    out = []
    edges = g.all_edges()
    for a in g.edge_ids:
        for b in range(a + 1, g.m + 1):
            if not is_connected(g, edges - {a, b}, spanning=True):
                out.append((a, b))
    return out


def gen_no_cdc(g: SignedGraph, cut: tuple[int, int] | None = None) -> NoCdcInstance:
    """Sign a cubic graph with a 2-edge-cut so no circuit double cover exists.

    Picks the cut edge uv with the smaller id, then the smallest edge ids
    at u and v other than the cut edge; those two edges go negative.
    """
    if not g.is_cubic():
        raise PreconditionError("generator requires a cubic graph")
    if g.negative_edges:
        raise PreconditionError("generator requires an all-positive graph")
    if find_bridges(g) or not is_connected(g):
        raise PreconditionError("generator requires 2-edge-connectivity")
    if cut is None:
        cuts = find_two_edge_cuts(g)
        if not cuts:
            raise PreconditionError("graph is 3-edge-connected: no 2-edge-cut")
        cut = cuts[0]
    else:
        a, b = cut
        if is_connected(g, g.all_edges() - {a, b}, spanning=True):
            raise PreconditionError("given edge pair is not a 2-edge-cut")
    e = min(cut)
    u, v = g.endpoints(e)
    e1 = min(x for x in g.incidence[u] if x != e)
    e2 = min(x for x in g.incidence[v] if x != e)
    signed = g.with_signs({e1: -1, e2: -1})
    from .graph import negativeness

    summary = negativeness(signed)
    if summary.negativeness != 2:
        raise PreconditionError(
            f"construction did not reach negativeness 2 (got {summary.negativeness})"
        )
    return NoCdcInstance(graph=signed, cut=cut, negative_pair=(e1, e2))
