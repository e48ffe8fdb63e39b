import itertools
import math
import random

import pytest

import helpers
from sgcc import (
    Barbell,
    CircuitFamily,
    Cycle,
    PreconditionError,
    classify_cycle,
    enumerate_circuits,
    family_from_text,
    family_to_text,
    fundamental_cycles,
    make_barbell,
    signed_girth,
    switch,
    symmetric_difference_cycles,
    two_disjoint_paths,
)
from sgcc.circuits import circuit_cycles, shortest_circuit_with_edge_in_cycle
from sgcc.generate import random_cubic_signed_graph


def test_classify_cycle_signs():
    assert classify_cycle(helpers.triangle(), {1, 2, 3}).sign == 1
    assert classify_cycle(helpers.triangle({1}), {1, 2, 3}).sign == -1
    g = helpers.k4({1, 6})
    assert classify_cycle(g, {1, 4, 6, 3}).sign == 1  # 1-2-3-4-1, two negatives


def test_classify_cycle_rejects_noncycles():
    g = helpers.k4()
    with pytest.raises(PreconditionError):
        classify_cycle(g, {1, 2})  # path, degree-1 endpoints
    with pytest.raises(PreconditionError):
        classify_cycle(g, set())
    disconnected = helpers.graph_from_pairs(
        6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]
    )
    with pytest.raises(PreconditionError):
        classify_cycle(disconnected, {1, 2, 3, 4, 5, 6})


def test_fundamental_cycles_examples():
    tri = helpers.triangle()
    [cyc] = fundamental_cycles(tri, {1, 2}, [3])
    assert cyc.edges == {1, 2, 3}
    g = helpers.k4()
    [cyc] = fundamental_cycles(g, {1, 2, 3}, [4])  # star tree at 1, chord 23
    assert cyc.edges == {1, 2, 4}
    [cyc] = fundamental_cycles(g, {1, 4, 6}, [3])  # path 1-2-3-4, chord 14
    assert cyc.edges == {1, 4, 6, 3}


def test_fundamental_cycles_rejects_bad_tree():
    g = helpers.k4()
    with pytest.raises(PreconditionError):
        fundamental_cycles(g, {1, 2}, [4])  # too few edges
    with pytest.raises(PreconditionError):
        fundamental_cycles(g, {1, 2, 3}, [1])  # chord inside tree


def test_symmetric_difference_cases():
    g = helpers.k4()
    [cyc] = symmetric_difference_cycles(g, [{1, 2, 4}])
    assert cyc.edges == {1, 2, 4}
    assert symmetric_difference_cycles(g, [{1, 2, 4}, {1, 2, 4}]) == []
    # D_23 = {12,13,23}, D_34 = {13,14,34} -> one 4-cycle
    [cyc] = symmetric_difference_cycles(g, [{1, 2, 4}, {2, 3, 6}])
    assert cyc.edges == {1, 4, 3, 6}


def test_symmetric_difference_rejects_odd_degree():
    g = helpers.k4()
    with pytest.raises(PreconditionError):
        symmetric_difference_cycles(g, [{1, 2}])


def test_enumerate_circuits_examples():
    tri = helpers.triangle()
    circuits = enumerate_circuits(tri, 3)
    assert len(circuits) == 1 and circuits[0].edges == {1, 2, 3}

    g = helpers.k4({1, 6})
    circuits = enumerate_circuits(g, 6)
    assert [sorted(c.edges) for c in circuits] == [[1, 2, 5, 6], [1, 3, 4, 6], [2, 3, 4, 5]]
    assert all(isinstance(c, Cycle) for c in circuits)

    assert enumerate_circuits(helpers.triangle({1}), 10) == ()


def test_enumerate_circuits_matches_naive_enumeration():
    rng = random.Random(3)
    cases = [helpers.k4({1, 6}), helpers.prism({7, 8}), helpers.prism({1, 4})]
    for seed in range(3):
        cases.append(random_cubic_signed_graph(6, rng.randint(0, 4), seed))
    # a digon-bearing multigraph exercises length-2 cycles
    cases.append(
        helpers.graph_from_pairs(4, [(1, 2), (1, 2), (2, 3), (3, 4), (3, 4), (2, 4)], {1, 3})
    )
    for g in cases:
        naive = helpers.naive_circuits(g, g.m)
        mine = {c.edges for c in enumerate_circuits(g, g.m)}
        assert mine == naive, sorted(map(sorted, mine ^ naive))


def test_signed_girth_examples():
    assert signed_girth(helpers.k4({1, 6})) == 4
    assert signed_girth(helpers.k4()) == math.inf
    assert signed_girth(helpers.triangle({1})) == math.inf


def test_signed_girth_matches_naive_definition():
    rng = random.Random(9)
    for seed in range(6):
        g = random_cubic_signed_graph(6, rng.randint(1, 5), seed)
        qualifying = []
        for edges in helpers.naive_circuits(g, g.m):
            if helpers.naive_is_cycle(g, edges):
                if any(g.sign(e) == -1 for e in edges):
                    qualifying.append(len(edges))
            else:
                qualifying.append(len(edges))  # barbells always qualify
        expected = min(qualifying) if qualifying else math.inf
        assert signed_girth(g) == expected


def test_barbell_girth_switching_invariant():
    # barbells qualify under every equivalent signature, so the shortest
    # barbell length cannot move under switching (positive cycles can lose
    # their negative edges, so the full girth is signature-dependent)
    pairs = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4), (1, 5), (2, 6)]
    g = helpers.graph_from_pairs(6, pairs, {1, 4})

    def shortest_barbell(graph):
        lengths = [c.length for c in enumerate_circuits(graph) if isinstance(c, Barbell)]
        return min(lengths) if lengths else math.inf

    base = shortest_barbell(g)
    assert base != math.inf
    for r in range(g.n):
        for u in itertools.combinations(range(2, g.n + 1), r):
            assert shortest_barbell(switch(g, u)) == base


def test_make_barbell_disjoint_triangles():
    pairs = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]
    g = helpers.graph_from_pairs(6, pairs, {1, 4})
    a = classify_cycle(g, {1, 2, 3})
    b = classify_cycle(g, {4, 5, 6})
    barbell = make_barbell(g, a, b, (7,))
    assert barbell.length == 7
    assert barbell.edges == {1, 2, 3, 4, 5, 6, 7}


def test_make_barbell_shared_vertex():
    pairs = [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]
    g = helpers.graph_from_pairs(5, pairs, {1, 4})
    a = classify_cycle(g, {1, 2, 3})
    b = classify_cycle(g, {4, 5, 6})
    barbell = make_barbell(g, a, b, ())
    assert barbell.length == 6


def test_make_barbell_rejections():
    g = helpers.k4({1, 6})
    t1 = classify_cycle(g, {1, 2, 4})  # negative triangle 123
    t2 = classify_cycle(g, {2, 3, 6})  # negative triangle 134, shares edge 13
    with pytest.raises(PreconditionError):
        make_barbell(g, t1, t2, ())
    pos = classify_cycle(g, {1, 3, 4, 6})
    with pytest.raises(PreconditionError):
        make_barbell(g, pos, t1, ())
    # shared vertex but nonempty path
    pairs = [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5), (1, 4)]
    g2 = helpers.graph_from_pairs(5, pairs, {1, 4})
    a = classify_cycle(g2, {1, 2, 3})
    b = classify_cycle(g2, {4, 5, 6})
    with pytest.raises(PreconditionError):
        make_barbell(g2, a, b, (7,))


def test_two_disjoint_paths_prism():
    g = helpers.prism()
    p1, p2 = two_disjoint_paths(g, {1, 2, 3}, {4, 5, 6})
    assert len(p1) == 1 and len(p2) == 1
    assert set(p1) | set(p2) <= {7, 8, 9}
    assert p1 != p2


def test_two_disjoint_paths_k4_pairs():
    g = helpers.k4()
    with pytest.raises(PreconditionError):
        two_disjoint_paths(g, {1}, {1, 3})  # sets must be disjoint
    p1, p2 = two_disjoint_paths(g, {1, 2}, {3, 4})
    verts = set()
    for path in (p1, p2):
        for eid in path:
            verts.update(g.endpoints(eid))
    assert not set(p1) & set(p2)


def test_two_disjoint_paths_c6_arcs():
    # antipodal vertex pairs of the 6-cycle: the two arcs are the only pair
    g = helpers.graph_from_pairs(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])
    p1, p2 = two_disjoint_paths(g, {1, 2}, {4, 5})
    assert sorted((sorted(p1), sorted(p2))) == [[2, 3], [5, 6]]
    # fully vertex-disjoint pairs are impossible out of a singleton source
    with pytest.raises(PreconditionError):
        two_disjoint_paths(g, {1}, {4})


def test_circuit_minimum_lengths():
    rng = random.Random(17)
    for seed in range(6):
        g = random_cubic_signed_graph(8, rng.randint(0, 6), seed)
        for c in enumerate_circuits(g):
            if isinstance(c, Barbell):
                assert c.length >= 4
            else:
                assert c.length >= 2


def test_every_cycle_is_two_regular():
    rng = random.Random(19)
    for seed in range(4):
        g = random_cubic_signed_graph(8, rng.randint(0, 6), seed)
        for c in enumerate_circuits(g):
            for cyc in circuit_cycles(c):
                again = classify_cycle(g, cyc.edges)  # revalidates 2-regularity
                assert again.sign == cyc.sign


def test_shortest_circuit_with_edge_in_cycle():
    g = helpers.k4({1, 6})
    c = shortest_circuit_with_edge_in_cycle(g, 1)
    assert c is not None and 1 in c.edges and c.length == 4
    assert shortest_circuit_with_edge_in_cycle(helpers.triangle({1}), 1) is None


def test_family_text_roundtrip():
    pairs = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]
    g = helpers.graph_from_pairs(6, pairs, {1, 4})
    a = classify_cycle(g, {1, 2, 3})
    b = classify_cycle(g, {4, 5, 6})
    fam = CircuitFamily((make_barbell(g, a, b, (7,)), classify_cycle(g, {2, 3} | {1})))
    text = family_to_text(fam)
    back = family_from_text(g, text)
    assert [c.edges for c in back] == [c.edges for c in fam]
    assert back.length == fam.length


def test_family_coverage_counts():
    g = helpers.k4({1, 6})
    fam = CircuitFamily(tuple(enumerate_circuits(g, 6)))
    cov = fam.coverage()
    assert fam.length == sum(cov.values()) == 12
