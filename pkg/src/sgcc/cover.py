"""End-to-end circuit-cover pipelines for cubic signed graphs, plus the verifier.

``cover_even`` handles even negativeness (length < 23/9 m), ``cover_main``
the general flow-admissible case (length < 26/9 m). All length-bound
checks use exact integer arithmetic (9*length vs 23*m / 26*m).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .circuits import (
    Barbell,
    Circuit,
    CircuitFamily,
    Cycle,
    circuit_cycles,
    classify_cycle,
    enumerate_circuits,
    make_barbell,
    shortest_circuit_with_negative_edge,
    signed_girth,
    two_disjoint_paths,
)
from .cycletree import (
    CycleTree,
    bfs_spanning_tree,
    cycle_tree_cover,
    extract_cycle_tree,
    minimize_cycle_count,
)
from .errors import (
    BoundViolationError,
    NoCircuitCoverError,
    PreconditionError,
)
from .graph import (
    SignedGraph,
    connected_components,
    find_bridges,
    is_connected,
    minimize_signature,
    negativeness,
)

EXACT_COVER_EDGE_BUDGET = 30  # exact minimum cycle cover up to this many edges


@dataclass
class CoverReport:
    """Verification result for one circuit family against one graph."""

    valid: bool
    length: int
    m: int
    bound_23_9: bool
    bound_26_9: bool
    branch: str
    candidate: str
    uncovered: list[int]
    per_edge_coverage: dict[int, int]
    invalid_members: list[str] = field(default_factory=list)
    oracle_gap: int | None = None

    def coverage_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for count in self.per_edge_coverage.values():
            hist[count] = hist.get(count, 0) + 1
        return dict(sorted(hist.items()))

    def to_json(self) -> str:
        payload = {
            "valid": self.valid,
            "length": self.length,
            "m": self.m,
            "bound_23_9": self.bound_23_9,
            "bound_26_9": self.bound_26_9,
            "branch": self.branch,
            "candidate": self.candidate,
            "uncovered": sorted(self.uncovered),
            "coverage_histogram": {str(k): v for k, v in self.coverage_histogram().items()},
        }
        if self.oracle_gap is not None:
            payload["oracle_gap"] = self.oracle_gap
        return json.dumps(payload)


def verify_cover(
    g: SignedGraph,
    fam: CircuitFamily,
    branch: str = "verify",
    candidate: str = "",
) -> CoverReport:
    """Validate every member as a circuit of g and check coverage and bounds."""
    invalid: list[str] = []
    for idx, circuit in enumerate(fam):
        try:
            if isinstance(circuit, Cycle):
                again = classify_cycle(g, circuit.edges)
                if again.sign != 1:
                    invalid.append(f"member {idx}: cycle is negative in this signature")
            elif isinstance(circuit, Barbell):
                ca = classify_cycle(g, circuit.cycle_a.edges)
                cb = classify_cycle(g, circuit.cycle_b.edges)
                make_barbell(g, ca, cb, circuit.path)
            else:
                invalid.append(f"member {idx}: unknown circuit type")
        except PreconditionError as exc:
            invalid.append(f"member {idx}: {exc}")
    coverage = {eid: 0 for eid in g.edge_ids}
    for circuit in fam:
        for eid in circuit.edges:
            if eid in coverage:
                coverage[eid] += 1
            else:
                invalid.append(f"edge id {eid} outside the graph")
    uncovered = [eid for eid, c in coverage.items() if c == 0]
    length = fam.length
    return CoverReport(
        valid=not invalid and not uncovered,
        length=length,
        m=g.m,
        bound_23_9=9 * length < 23 * g.m,
        bound_26_9=9 * length < 26 * g.m,
        branch=branch,
        candidate=candidate,
        uncovered=uncovered,
        per_edge_coverage=coverage,
        invalid_members=invalid,
    )


def _component_cycles(g: SignedGraph, comp: frozenset[int]) -> list[Cycle]:
    circuits = []
    for circuit in enumerate_circuits(g):
        if isinstance(circuit, Cycle) and circuit.edges <= comp:
            circuits.append(circuit)
    return circuits


def _exact_min_cycle_cover(g: SignedGraph, comp: frozenset[int]) -> list[Cycle]:
    """Branch-and-bound minimum-length cycle cover of one bridgeless component."""
    cycles = _component_cycles(g, comp)
    edge_list = sorted(comp)
    bit = {eid: 1 << i for i, eid in enumerate(edge_list)}
    full = (1 << len(edge_list)) - 1
    sets = []
    for cyc in cycles:
        mask = 0
        for eid in cyc.edges:
            mask |= bit[eid]
        sets.append((mask, cyc.length, cyc))
    # drop dominated cycles: anything another cycle covers with no extra length
    sets.sort(key=lambda s: (s[1], -(s[0].bit_count())))
    kept = []
    for mask, length, cyc in sets:
        if any(mask & ~m2 == 0 and l2 <= length for m2, l2, _ in kept):
            continue
        kept.append((mask, length, cyc))
    by_edge: dict[int, list[tuple[int, int, Cycle]]] = {i: [] for i in range(len(edge_list))}
    for entry in kept:
        mask = entry[0]
        while mask:
            low = mask & -mask
            by_edge[low.bit_length() - 1].append(entry)
            mask ^= low
    # greedy first incumbent: best new-coverage per unit length
    covered = 0
    greedy: list[Cycle] = []
    greedy_len = 0
    while covered != full:
        best = None
        for mask, length, cyc in kept:
            gain = (mask & ~covered).bit_count()
            if gain == 0:
                continue
            key = (length / gain, length)
            if best is None or key < best[0]:
                best = (key, mask, length, cyc)
        if best is None:
            raise PreconditionError("component has an edge on no cycle (bridge present)")
        covered |= best[1]
        greedy_len += best[2]
        greedy.append(best[3])
    best_len = greedy_len
    best_family = list(greedy)
    seen_states: dict[int, int] = {}
    stack: list[tuple[int, int, tuple[Cycle, ...]]] = [(0, 0, ())]
    while stack:
        covered, cost, chosen = stack.pop()
        if covered == full:
            if cost < best_len:
                best_len = cost
                best_family = list(chosen)
            continue
        uncovered_count = (full & ~covered).bit_count()
        if cost + uncovered_count >= best_len:
            continue
        prev = seen_states.get(covered)
        if prev is not None and prev <= cost:
            continue
        seen_states[covered] = cost
        first = (full & ~covered & -(full & ~covered)).bit_length() - 1
        # push in reverse so shorter candidates are explored first
        for mask, length, cyc in reversed(by_edge[first]):
            stack.append((covered | mask, cost + length, chosen + (cyc,)))
    return best_family


def _greedy_cycle_cover(g: SignedGraph, comp: frozenset[int]) -> list[Cycle]:
    """Ratio-greedy fallback with redundancy pruning for oversized components."""
    cycles = _component_cycles(g, comp)
    uncovered = set(comp)
    out: list[Cycle] = []
    while uncovered:
        best = None
        for cyc in cycles:
            gain = len(cyc.edges & uncovered)
            if not gain:
                continue
            key = (cyc.length / gain, cyc.length, tuple(sorted(cyc.edges)))
            if best is None or key < best[0]:
                best = (key, cyc)
        if best is None:
            raise PreconditionError("component has an edge on no cycle (bridge present)")
        out.append(best[1])
        uncovered -= best[1].edges
    # drop members whose edges are all covered elsewhere
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1, -1, -1):
            others = set()
            for j, cyc in enumerate(out):
                if j != i:
                    others |= cyc.edges
            if out[i].edges <= others:
                out.pop(i)
                changed = True
    return out


def bridgeless_cycle_cover(
    g: SignedGraph, exact_budget: int = EXACT_COVER_EDGE_BUDGET
) -> CircuitFamily:
    """Cycle cover of an all-positive bridgeless graph, length at most 5/3 m.

    Components up to the budget get the exact minimum cover; larger ones a
    greedy cover whose 5/3 bound is asserted rather than assumed.
    """
    if g.negative_edges:
        raise PreconditionError("cycle covers need an all-positive graph")
    bridges = find_bridges(g)
    if bridges:
        raise PreconditionError(f"bridges present: {sorted(bridges)}")
    family: list[Circuit] = []
    for comp in connected_components(g, g.all_edges()):
        if len(comp) <= exact_budget:
            family += _exact_min_cycle_cover(g, comp)
        else:
            part = _greedy_cycle_cover(g, comp)
            part_len = sum(c.length for c in part)
            if 3 * part_len > 5 * len(comp):
                raise BoundViolationError(
                    "greedy cycle cover exceeded 5/3 of the component size; "
                    f"component edges: {sorted(comp)}"
                )
            family += part
    fam = CircuitFamily(tuple(family))
    if 3 * fam.length > 5 * g.m:
        raise BoundViolationError("cycle cover exceeded 5/3 of the edge count")
    return fam


def positive_part_cover(g: SignedGraph) -> CircuitFamily:
    """Covers of the 2-edge-connected pieces of the positive subgraph.

    Cutedges of the positive subgraph are left out here; a family putting
    every negative edge on a cycle is guaranteed to pick them up.
    """
    pos = g.positive_edges
    cut = set(find_bridges(g, pos))
    remaining = pos - cut
    family: list[Circuit] = []
    for comp in connected_components(g, remaining):
        sub_bridges = find_bridges(g, comp)
        if sub_bridges:
            raise BoundViolationError("2-edge-connected piece still has a bridge")
        if len(comp) <= EXACT_COVER_EDGE_BUDGET:
            family += _exact_min_cycle_cover(g, comp)
        else:
            family += _greedy_cycle_cover(g, comp)
    fam = CircuitFamily(tuple(family))
    if 3 * fam.length > 5 * len(remaining):
        raise BoundViolationError("positive-part cover exceeded 5/3 of its edges")
    return fam


def _union_has_cycle_through(g: SignedGraph, union: frozenset[int], eid: int) -> bool:
    """Does the covered subgraph contain a cycle through this edge?"""
    if eid not in union:
        return False
    u, v = g.endpoints(eid)
    rest = union - {eid}
    inc: dict[int, list[int]] = {}
    for other in rest:
        a, b = g.endpoints(other)
        inc.setdefault(a, []).append(other)
        inc.setdefault(b, []).append(other)
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            return True
        for other in inc.get(x, ()):
            w = g.other_end(other, x)
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return v in seen


def check_cutedge_coverage(g: SignedGraph, fam: CircuitFamily) -> bool:
    """Negative edges on cycles of the union imply the positive cutedges are covered.

    Returns True iff (a) every negative edge lies on a cycle of the union
    subgraph of the family and (b) every cutedge of the positive subgraph
    is covered. (a) without (b) is a theorem violation, hence an internal error.
    """
    summary = negativeness(g)
    if len(g.negative_edges) != summary.negativeness:
        raise PreconditionError("signature must be minimized first")
    union = fam.edge_union()
    cond_a = all(_union_has_cycle_through(g, union, e) for e in g.negative_edges)
    cutedges = find_bridges(g, g.positive_edges)
    cond_b = all(e in union for e in cutedges)
    if cond_a and not cond_b:
        raise BoundViolationError("negative edges on cycles yet a positive cutedge uncovered")
    return cond_a and cond_b


def _require_cubic_2ec(g: SignedGraph) -> None:
    if not g.is_cubic():
        raise PreconditionError("pipeline requires a cubic graph")
    if not is_connected(g) or find_bridges(g):
        raise PreconditionError("pipeline requires 2-edge-connectivity")


def cover_even(
    g: SignedGraph, max_n: int | None = None
) -> tuple[CircuitFamily, CoverReport]:
    """Circuit cover for even negativeness; verified length strictly below 23/9 m."""
    _require_cubic_2ec(g)
    kwargs = {} if max_n is None else {"max_n": max_n}
    summary = negativeness(g, **kwargs)
    eps = summary.negativeness
    if eps % 2:
        raise PreconditionError("even-negativeness pipeline got an odd instance")
    gm = minimize_signature(g, **kwargs)
    if eps == 0:
        fam = bridgeless_cycle_cover(gm)
        candidate = "balanced"
    else:
        tree = extract_cycle_tree(gm)
        fam = cycle_tree_cover(tree) + positive_part_cover(gm)
        candidate = "cycle-tree"
    report = verify_cover(g, fam, branch="even", candidate=candidate)
    if not report.valid:
        raise BoundViolationError(f"even pipeline produced an invalid cover: {report.invalid_members}")
    if not report.bound_23_9:
        raise BoundViolationError("even pipeline exceeded 23/9 of the edge count")
    if eps >= 2 and 9 * report.length > 23 * g.m - 3 * eps - 12:
        raise BoundViolationError("even pipeline exceeded its sharpened length chain")
    return fam, report


def _branch_candidates(
    gm: SignedGraph, seed: int
) -> list[tuple[str, CircuitFamily]]:
    """Candidate portfolio for odd negativeness with large signed girth."""
    base = positive_part_cover(gm)
    candidates: list[tuple[str, CircuitFamily]] = []
    tree_cache: dict[int, CircuitFamily] = {}

    def tree_cover_for(eid: int) -> CircuitFamily:
        if eid not in tree_cache:
            tree_cache[eid] = cycle_tree_cover(minimize_cycle_count(gm, eid, seed=seed))
        return tree_cache[eid]

    all_circuits = enumerate_circuits(gm)
    cycle_edge_pool: dict[int, Circuit] = {}
    for circuit in all_circuits:
        for cyc in circuit_cycles(circuit):
            for eid in sorted(cyc.edges & gm.negative_edges):
                if eid not in cycle_edge_pool:
                    cycle_edge_pool[eid] = circuit  # circuits arrive shortest-first
    for eid, circuit in sorted(cycle_edge_pool.items()):
        fam = CircuitFamily((circuit,)) + tree_cover_for(eid) + base
        candidates.append((f"edge-{eid}", fam))
    tree = bfs_spanning_tree(gm, gm.positive_edges)
    negs = sorted(gm.negative_edges)
    from .circuits import fundamental_cycles, symmetric_difference_cycles

    fund = {e: c for e, c in zip(negs, fundamental_cycles(gm, tree, negs))}
    for i, ei in enumerate(negs):
        for ej in negs[i + 1 :]:
            pieces = symmetric_difference_cycles(gm, [fund[ei].edges, fund[ej].edges])
            zi = next(c for c in pieces if ei in c.edges)
            zj = next(c for c in pieces if ej in c.edges)
            anchor = min(ei, ej)
            if anchor not in cycle_edge_pool:
                continue
            if zi.edges == zj.edges:
                closures = [("cycle", zi)]
            else:
                try:
                    p1, p2 = two_disjoint_paths(gm, zi.vertices(gm), zj.vertices(gm))
                except PreconditionError:
                    continue
                closures = [
                    ("bar1", make_barbell(gm, zi, zj, p1)),
                    ("bar2", make_barbell(gm, zi, zj, p2)),
                ]
            for tag, closed in closures:
                fam = CircuitFamily((closed,)) + tree_cover_for(anchor) + base
                candidates.append((f"pair-{ei}-{ej}-{tag}", fam))
    return candidates


def cover_main(
    g: SignedGraph, max_n: int | None = None, seed: int = 0
) -> tuple[CircuitFamily, CoverReport]:
    """Circuit cover for any flow-admissible cubic instance; length below 26/9 m."""
    _require_cubic_2ec(g)
    kwargs = {} if max_n is None else {"max_n": max_n}
    summary = negativeness(g, **kwargs)
    eps = summary.negativeness
    if eps == 1:
        raise NoCircuitCoverError(
            "no circuit cover exists: the signature reduces to a single negative edge"
        )
    if eps % 2 == 0:
        return cover_even(g, max_n=max_n)
    gm = minimize_signature(g, **kwargs)
    girth = signed_girth(gm)
    assert girth != float("inf"), "flow-admissible instances always have such circuits"
    if 3 * girth <= gm.m + 3:
        circuit = shortest_circuit_with_negative_edge(gm)
        chosen = min(
            e
            for cyc in circuit_cycles(circuit)
            for e in cyc.edges
            if gm.sign(e) == -1
        )
        tree = minimize_cycle_count(gm, chosen, seed=seed)
        fam = CircuitFamily((circuit,)) + cycle_tree_cover(tree) + positive_part_cover(gm)
        report = verify_cover(g, fam, branch="short-circuit", candidate=f"edge-{chosen}")
        if not report.valid or not report.bound_26_9:
            raise BoundViolationError("short-circuit branch failed its guarantee")
        return fam, report
    best = None
    for name, fam in _branch_candidates(gm, seed):
        report = verify_cover(g, fam, branch="portfolio", candidate=name)
        if not report.valid:
            continue
        key = (report.length, name)
        if best is None or key < best[0]:
            best = (key, fam, report)
    if best is None:
        raise BoundViolationError("portfolio produced no valid candidate")
    _, fam, report = best
    return fam, report


@dataclass
class StructuralReport:
    """Observed structural facts for instances with a long signed girth."""

    applicable: bool
    girth: float
    disjoint_negative_pairs: list[tuple[tuple[int, ...], tuple[int, ...]]]
    max_leaf_cycles: int
    max_nonleaf_cycles: int
    leaf_signs_ok: bool
    trees_checked: int
    skipped: bool = False


def structural_checks(
    g: SignedGraph, max_circuits: int = 20000, seed: int = 0
) -> StructuralReport:
    """Enumerate circuits and cycle-trees to confirm the large-girth structure facts.

    With signed girth at least m/3 + 2: no two vertex-disjoint circuits both
    carry negative edges, and every extracted cycle-tree has at most three
    leaf-cycles and at most one non-leaf cycle (leaves all negative when a
    non-leaf cycle exists).
    """
    if not g.is_cubic():
        raise PreconditionError("structural checks are for cubic graphs")
    gm = minimize_signature(g)
    girth = signed_girth(gm)
    applicable = 3 * girth >= gm.m + 6  # infinite girth qualifies vacuously
    circuits = enumerate_circuits(gm)
    pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    skipped = len(circuits) > max_circuits
    if not skipped:
        with_negs = [
            c
            for c in circuits
            if any(gm.sign(e) == -1 for e in c.edges) or isinstance(c, Barbell)
        ]
        vsets = [frozenset(v for e in c.edges for v in gm.endpoints(e)) for c in with_negs]
        for i in range(len(with_negs)):
            for j in range(i + 1, len(with_negs)):
                if not (vsets[i] & vsets[j]):
                    pairs.append(
                        (tuple(sorted(with_negs[i].edges)), tuple(sorted(with_negs[j].edges)))
                    )
    max_leaf = 0
    max_nonleaf = 0
    leaf_signs_ok = True
    trees_checked = 0
    exclusions: list[int | None] = [None]
    for circuit in circuits:
        for cyc in circuit_cycles(circuit):
            for eid in sorted(cyc.edges & gm.negative_edges):
                if eid not in exclusions:
                    exclusions.append(eid)
    pos = gm.positive_edges
    import random as _random

    rng = _random.Random(seed)
    trees = []
    seen: set[frozenset[int]] = set()
    for root in gm.vertices:
        t = bfs_spanning_tree(gm, pos, root)
        if t not in seen:
            seen.add(t)
            trees.append(t)
    from .cycletree import random_spanning_tree

    for _ in range(16):
        t = random_spanning_tree(gm, pos, rng)
        if t not in seen:
            seen.add(t)
            trees.append(t)
    for excluded in exclusions:
        for t in trees:
            ct = extract_cycle_tree(gm, t, excluded)
            trees_checked += 1
            leaves = ct.leaf_cycles()
            nonleaves = ct.nonleaf_cycles()
            max_leaf = max(max_leaf, len(leaves))
            max_nonleaf = max(max_nonleaf, len(nonleaves))
            if nonleaves and any(c.sign != -1 for c in leaves):
                leaf_signs_ok = False
    return StructuralReport(
        applicable=applicable,
        girth=girth,
        disjoint_negative_pairs=pairs,
        max_leaf_cycles=max_leaf,
        max_nonleaf_cycles=max_nonleaf,
        leaf_signs_ok=leaf_signs_ok,
        trees_checked=trees_checked,
        skipped=skipped,
    )
