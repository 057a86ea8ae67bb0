"""Constructors: certificates, reduction engines, traces."""

import random
from fractions import Fraction as F
from itertools import combinations

import pytest

from forestbound import (
    BoundSpec,
    Graph,
    IsolatedVertexPresent,
    NotCubic,
    Partition,
    ab_construct,
    abc_construct,
    alpha_exact_partitioned,
    caterpillar_forest,
    certificate_from_text,
    certificate_to_text,
    cubic_partition,
    greedy_linear_forest,
    is_caterpillar_forest,
    is_linear_forest,
    k_caterpillar_forest,
    star_forest,
    total_weight,
    verify_certificate,
)
from forestbound.errors import InvalidSpec
from forestbound.generate import (
    complete_graph,
    cycle_graph,
    fig1_gadget,
    gnp,
    hnk_graph,
    k_prime_graph,
    path_graph,
    random_regular,
    star_graph,
)
from forestbound.graph import LINEAR_FOREST, ForestCertificate


class TestGreedyLinearForest:
    def test_k4(self):
        cert = greedy_linear_forest(complete_graph(4))
        assert cert.size() == 2 and cert.claimed_bound == 2

    def test_c5(self):
        cert = greedy_linear_forest(cycle_graph(5))
        assert cert.size() == 4 and cert.claimed_bound == F(10, 3)

    def test_claw(self):
        cert = greedy_linear_forest(star_graph(3))
        assert cert.size() == 3 and cert.claimed_bound == 3

    def test_random_graphs_verify(self):
        rng = random.Random(11)
        for trial in range(500):
            n = rng.randint(1, 60)
            p = rng.choice((0.1, 0.3, 0.6))
            g = gnp(n, p, trial)
            cert = greedy_linear_forest(g)
            assert verify_certificate(g, cert), trial

    def test_regular_graph_bound_value(self):
        # on d-regular graphs the bound is exactly 2n/(d+1)
        for n, d in ((12, 3), (10, 4), (12, 5)):
            g = random_regular(n, d, seed=n + d)
            cert = greedy_linear_forest(g)
            assert cert.claimed_bound == F(2 * n, d + 1)
            assert verify_certificate(g, cert)


class TestCaterpillarForest:
    def test_claw_takes_everything(self):
        cert = caterpillar_forest(star_graph(3))
        assert cert.size() == 4 and cert.claimed_bound == F(7, 2)

    def test_c6(self):
        cert = caterpillar_forest(cycle_graph(6))
        assert cert.size() == 5 and cert.claimed_bound == 4

    def test_two_disjoint_edges(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        cert = caterpillar_forest(g)
        assert cert.size() == 4 and cert.claimed_bound == 4

    def test_isolated_vertex_rejected(self):
        with pytest.raises(IsolatedVertexPresent):
            caterpillar_forest(Graph.from_edges(3, [(0, 1)]))

    def test_outputs_are_caterpillar_forests(self):
        rng = random.Random(5)
        for trial in range(60):
            g = gnp(rng.randint(2, 30), 0.2, 1000 + trial)
            if g.min_degree() == 0:
                continue
            cert = caterpillar_forest(g)
            assert is_caterpillar_forest(g.induced(cert.vertex_set))
            assert verify_certificate(g, cert)


class TestAbcConstruct:
    def test_p3_gadget(self):
        g, p = fig1_gadget("P3AB")
        cert, _ = abc_construct(g, p)
        assert cert.vertex_set == {0, 2} and cert.claimed_bound == 2
        assert verify_certificate(g, cert, p)

    def test_k2_gadget_keeps_the_a_vertex(self):
        g, p = fig1_gadget("K2AC")
        cert, _ = abc_construct(g, p)
        assert cert.vertex_set == {0} and cert.claimed_bound == 1

    def test_k3_gadget(self):
        g, p = fig1_gadget("K3ACC")
        cert, _ = abc_construct(g, p)
        assert cert.size() == 1 and cert.claimed_bound == 1

    def test_random_graphs_certified(self):
        rng = random.Random(3)
        for trial in range(120):
            g = gnp(rng.randint(1, 13), rng.choice((0.2, 0.4)), 2000 + trial)
            p = Partition.abc({v: rng.choice("ABC") for v in g.vertices})
            cert, trace = abc_construct(g, p)
            assert verify_certificate(g, cert, p), trial
            assert is_linear_forest(g.induced(cert.vertex_set))

    def test_trace_replays_and_decreases(self):
        g = gnp(12, 0.3, 99)
        p = Partition.abc({v: "ABC"[v % 3] for v in g.vertices})
        cert1, trace1 = abc_construct(g, p)
        cert2, trace2 = abc_construct(g, p)
        assert cert1 == cert2 and trace1.steps == trace2.steps
        assert trace1.replay(g).n == 0
        for step in trace1.steps:
            if step.rule not in ("R4", "S4"):
                assert len(step.removed) >= 1

    def test_deep_chain_of_leaves(self):
        g = path_graph(40)
        p = Partition.abc({v: "A" for v in g.vertices})
        cert, _ = abc_construct(g, p)
        assert verify_certificate(g, cert, p)


class TestAbConstruct:
    def test_k2_all_a(self):
        g = path_graph(2)
        cert, _ = ab_construct(g, Partition.ab({0: "A", 1: "A"}))
        assert cert.size() == 2 and cert.claimed_bound == F(5, 3)

    def test_c5_all_a(self):
        g = cycle_graph(5)
        cert, _ = ab_construct(g, Partition.uniform(g.vertices, "A", "AB"))
        assert cert.size() == 3 and cert.claimed_bound == 3

    def test_p3_b_ends(self):
        g = path_graph(3)
        p = Partition.ab({0: "B", 1: "A", 2: "B"})
        cert, _ = ab_construct(g, p)
        assert cert.claimed_bound == F(8, 5) and cert.size() == 2
        assert verify_certificate(g, cert, p)
        assert cert.size() == brute_force_ab_optimum(g, p)

    def test_random_graphs_certified(self):
        rng = random.Random(4)
        for trial in range(120):
            g = gnp(rng.randint(1, 13), rng.choice((0.2, 0.4)), 3000 + trial)
            p = Partition.ab({v: rng.choice("AB") for v in g.vertices})
            cert, trace = ab_construct(g, p)
            assert verify_certificate(g, cert, p), trial

    def test_large_cycle_uses_dp(self):
        g = cycle_graph(100)
        cert, trace = ab_construct(g, Partition.uniform(g.vertices, "A", "AB"))
        assert cert.size() >= cert.claimed_bound == 60
        assert any(step.rule == "S2" for step in trace.steps)

    def test_endgame_on_cubic_graph(self):
        g = random_regular(20, 3, 8)
        cert, trace = ab_construct(
            g, Partition.uniform(g.vertices, "A", "AB"), exact_threshold=4
        )
        assert verify_certificate(g, cert, Partition.uniform(g.vertices, "A", "AB"))
        assert any(step.rule == "S5" for step in trace.steps)


def brute_force_ab_optimum(g: Graph, p: Partition) -> int:
    from forestbound import is_star_forest

    vs = sorted(g.vertices)
    for r in range(len(vs), 0, -1):
        for subset in combinations(vs, r):
            sub = g.induced(subset)
            if not is_star_forest(sub):
                continue
            ok = True
            for u, v in sub.edges():
                for a, b in ((u, v), (v, u)):
                    if p.part(b) == "B" and not (p.part(a) == "A" and sub.degree(a) == 1):
                        ok = False
            if ok:
                return r
    return 0


class TestKCaterpillarForest:
    def test_h22(self):
        cert = k_caterpillar_forest(hnk_graph(2, 2), 2)
        assert cert.size() == 6 and cert.claimed_bound == 6

    def test_c5_reduces_to_abc(self):
        cert = k_caterpillar_forest(cycle_graph(5), 2)
        assert cert.size() == 4 and cert.claimed_bound == F(10, 3)

    def test_claw_k3(self):
        cert = k_caterpillar_forest(star_graph(3), 3)
        assert cert.size() == 4 and cert.claimed_bound == F(7, 2)

    def test_bad_k(self):
        with pytest.raises(InvalidSpec):
            k_caterpillar_forest(path_graph(3), 1)

    def test_leafless_k2_matches_linear_bound(self):
        rng = random.Random(17)
        checked = 0
        for trial in range(200):
            g = gnp(rng.randint(4, 14), 0.45, 4000 + trial)
            if any(g.degree(v) == 1 for v in g.vertices):
                continue
            checked += 1
            cert = k_caterpillar_forest(g, 2)
            assert is_linear_forest(g.induced(cert.vertex_set))
            assert cert.claimed_bound == total_weight(g, BoundSpec.flin())
            if checked >= 25:
                break
        assert checked >= 10


class TestStarForest:
    def test_kprime3(self):
        cert = star_forest(k_prime_graph(3))
        assert cert.size() == 4

    def test_big_star(self):
        cert = star_forest(star_graph(7))
        assert cert.size() == 8

    def test_c5(self):
        cert = star_forest(cycle_graph(5))
        assert cert.size() == 3 and cert.claimed_bound == 3

    def test_random_graphs_certified(self):
        rng = random.Random(6)
        for trial in range(100):
            g = gnp(rng.randint(1, 14), rng.choice((0.15, 0.3, 0.5)), 5000 + trial)
            cert = star_forest(g)
            assert verify_certificate(g, cert), trial


class TestCubicPartition:
    def test_k4(self):
        g = complete_graph(4)
        p1, p2 = cubic_partition(g)
        assert sorted((len(p1), len(p2))) == [2, 2]
        assert g.induced(p1).max_degree() <= 1 and g.induced(p2).max_degree() <= 1

    def test_k33(self):
        g = Graph.from_edges(6, [(i, 3 + j) for i in range(3) for j in range(3)])
        p1, p2 = cubic_partition(g)
        assert g.induced(p1).max_degree() <= 1 and g.induced(p2).max_degree() <= 1

    def test_petersen(self):
        g = Graph.from_edges(
            10,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 7), (7, 9), (9, 6), (6, 8),
             (8, 5), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
        )
        p1, p2 = cubic_partition(g)
        assert g.induced(p1).max_degree() <= 1 and g.induced(p2).max_degree() <= 1
        assert max(len(p1), len(p2)) >= 5

    def test_random_cubic(self):
        for trial, n in enumerate((20, 60, 120, 200)):
            g = random_regular(n, 3, 600 + trial)
            p1, p2 = cubic_partition(g)
            assert g.induced(p1).max_degree() <= 1
            assert g.induced(p2).max_degree() <= 1
            assert 2 * max(len(p1), len(p2)) >= n

    def test_not_cubic(self):
        with pytest.raises(NotCubic):
            cubic_partition(path_graph(4))


class TestVerifyCertificate:
    def test_valid_pair_in_k4(self):
        g = complete_graph(4)
        assert verify_certificate(g, ForestCertificate(frozenset({0, 1}), LINEAR_FOREST, F(2)))

    def test_triangle_fails(self):
        g = complete_graph(4)
        assert not verify_certificate(
            g, ForestCertificate(frozenset({0, 1, 2}), LINEAR_FOREST, F(2))
        )

    def test_gadget_with_labels(self):
        g, p = fig1_gadget("P3AB")
        cert = ForestCertificate(frozenset({0, 2}), LINEAR_FOREST, F(2))
        assert verify_certificate(g, cert, p)
        # {0,1} respects the caps (the B vertex sits at degree 1) and meets
        # the bound; {0,1,2} pushes the B vertex to degree 2 and fails
        assert verify_certificate(g, ForestCertificate(frozenset({0, 1}), LINEAR_FOREST, F(2)), p)
        assert not verify_certificate(
            g, ForestCertificate(frozenset({0, 1, 2}), LINEAR_FOREST, F(2)), p
        )

    def test_bound_comparison_is_exact(self):
        g = path_graph(2)
        cert = ForestCertificate(frozenset({0}), LINEAR_FOREST, F(10, 10))
        assert verify_certificate(g, cert)
        cert = ForestCertificate(frozenset({0}), LINEAR_FOREST, F(10, 9))
        assert not verify_certificate(g, cert)

    def test_unknown_vertices_fail(self):
        g = path_graph(2)
        cert = ForestCertificate(frozenset({0, 9}), LINEAR_FOREST, F(1))
        assert not verify_certificate(g, cert)


def test_abc_bound_sampled_against_exact_oracle():
    """Sampled labelings on small graphs: constrained optimum >= the bound."""
    rng = random.Random(99)
    trials = 10_500
    for trial in range(trials):
        n = rng.randint(1, 6)
        pairs = list(combinations(range(n), 2))
        edges = [e for e in pairs if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        p = Partition.abc({v: rng.choice("ABC") for v in g.vertices})
        bound = total_weight(g, BoundSpec.abc(), p)
        res = alpha_exact_partitioned(g, p)
        assert res.exact and F(res.alpha) >= bound, (trial, edges, p.labels)


def test_certificate_text_round_trip():
    g = cycle_graph(5)
    cert = greedy_linear_forest(g)
    text = certificate_to_text(cert, g.edge_hash())
    parsed, graph_hash = certificate_from_text(text)
    assert parsed == cert and graph_hash == g.edge_hash()


def test_bound_miss_carries_best_effort_certificate():
    # white-box: force the fallback to chase an unreachable bound
    from forestbound.construct import ReductionTrace, _exact_fallback
    from forestbound.errors import BoundMiss

    g = complete_graph(5)
    p = Partition.uniform(g.vertices, "A", "ABC")
    with pytest.raises(BoundMiss) as exc:
        _exact_fallback(g, p, ReductionTrace(), 16, 10_000, F(99), "R6")
    cert = exc.value.certificate
    assert cert is not None
    assert cert.claimed_bound == 99
    assert is_linear_forest(g.induced(cert.vertex_set))


def test_path_cycle_dp_matches_exact_oracle():
    from forestbound.construct import _dp_component

    rng = random.Random(31)
    for trial in range(120):
        n = rng.randint(1, 9)
        if rng.random() < 0.5 or n < 3:
            g = path_graph(n)
        else:
            g = cycle_graph(n)
        if trial % 2 == 0:
            labels = {v: rng.choice("ABC") for v in g.vertices}
            p = Partition.abc(labels)
            picks = _dp_component(g, labels, "abc")
        else:
            labels = {v: rng.choice("AB") for v in g.vertices}
            p = Partition.ab(labels)
            picks = _dp_component(g, labels, "ab")
        res = alpha_exact_partitioned(g, p)
        assert len(picks) == res.alpha, (trial, g, labels)
