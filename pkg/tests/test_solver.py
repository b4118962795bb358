import pytest

from mwss import (
    GenSpec,
    Graph,
    alpha3_fallback,
    find_stable4,
    gen_rejection,
    gen_strip_instance,
    oracle_mwss,
    solve,
)

from helpers import complete_graph, cycle_graph, path_graph


class TestFindStable4:
    def test_k5_has_none(self):
        assert find_stable4(complete_graph(5)) is None

    def test_p7_finds_one(self):
        s = find_stable4(path_graph(7))
        assert s is not None and len(s) == 4
        assert path_graph(7).is_stable(s)

    def test_net_graph_alpha3(self):
        net = Graph(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
        assert find_stable4(net) is None

    def test_enumeration_fallback_when_greedy_misses(self):
        # greedy from 0 takes {0, 3}; a 4-stable set exists elsewhere:
        # hub 0 adjacent to everything except the stable quad 4, 5, 6, 7
        edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 7), (1, 2), (2, 3), (1, 3)]
        g = Graph(8, edges)
        greedy_first = find_stable4(g)
        assert greedy_first is not None
        assert g.is_stable(greedy_first)


class TestAlpha3Fallback:
    def test_single_node(self):
        assert alpha3_fallback(Graph(1, [], [5])) == (5, (0,))

    def test_c5_unit(self):
        value, nodes = alpha3_fallback(cycle_graph(5))
        assert value == 2 and cycle_graph(5).is_stable(nodes)

    def test_triangle_weights(self):
        value, nodes = alpha3_fallback(complete_graph(3, [1, 2, 3]))
        assert value == 3 and nodes == (2,)

    def test_matches_oracle_when_alpha_small(self):
        for seed in range(40):
            g = gen_rejection(GenSpec(seed=7000 + seed, mode="rejection", nodes=5 + seed % 10, weights="random"))
            if find_stable4(g) is None:
                assert alpha3_fallback(g)[0] == oracle_mwss(g)[0]


class TestSolve:
    def test_p7_unit(self):
        assert solve(path_graph(7)).value == 4

    def test_c9_unit(self):
        assert solve(cycle_graph(9)).value == 4

    def test_p5_weighted_fallback(self):
        s = solve(path_graph(5, [1, 9, 1, 9, 1]))
        assert s.value == 18
        assert s.route == "alpha3_fallback"

    def test_empty_graph(self):
        s = solve(Graph(0))
        assert s.value == 0 and s.nodes == ()

    def test_nonpositive_weights_dropped(self):
        g = path_graph(3, [-1, 0, 4])
        s = solve(g)
        assert s.value == 4 and s.nodes == (2,)

    def test_monotone_isolated_node(self):
        g = path_graph(7)
        bigger = Graph(8, [(i, i + 1) for i in range(6)], [1] * 7 + [3])
        assert solve(bigger).value == solve(g).value + 3

    def test_disconnected_components_sum(self):
        g = Graph(14, [(i, i + 1) for i in range(6)] + [(7 + i, 8 + i) for i in range(6)])
        s = solve(g)
        assert s.value == 8
        assert s.route == "component_merge"

    def test_solution_set_is_certified(self):
        for seed in range(30):
            g = gen_strip_instance(
                GenSpec(seed=7500 + seed, mode="strip", nodes=10 + seed % 14,
                        clique_min=1, clique_max=4, weights=("unit", "random", "ties")[seed % 3])
            )
            s = solve(g)
            assert g.is_stable(s.nodes)
            assert g.weight_of(s.nodes) == s.value

    @pytest.mark.parametrize("regime", ["unit", "random", "ties"])
    def test_oracle_equivalence_sweep(self, regime):
        for seed in range(120):
            g = gen_rejection(GenSpec(seed=8000 + seed, mode="rejection", nodes=4 + seed % 18, weights=regime))
            assert solve(g).value == oracle_mwss(g)[0]
        for seed in range(60):
            g = gen_strip_instance(
                GenSpec(seed=8500 + seed, mode="strip", nodes=7 + seed % 15,
                        clique_min=1, clique_max=4, density=(0.3, 0.6, 0.9)[seed % 3], weights=regime)
            )
            assert solve(g).value == oracle_mwss(g)[0]

    def test_twin_lift_on_twin_heavy_graph(self):
        # two disjoint triangles with matching weights produce twin cascades
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], [2, 2, 2, 5, 5, 5])
        s = solve(g)
        assert s.value == 7
        assert g.is_stable(s.nodes) and g.weight_of(s.nodes) == 7

    def test_trace_collects_certificates(self):
        s = solve(path_graph(9), collect_trace=True)
        assert s.certificates is not None
        assert s.certificates["components"] == 1
        assert s.certificates["routes"] == ("strip_pipeline",)


class TestPipelineContracts:
    def test_exactly_x_plus_one_dp_passes(self):
        from mwss import solve_component

        for seed in range(15):
            g = gen_strip_instance(
                GenSpec(seed=9900 + seed, mode="strip", nodes=12 + seed,
                        clique_min=2, clique_max=4, weights="random")
            )
            _, _, _, detail = solve_component(g, collect=True)
            assert detail.dp_passes == len(detail.decomposition.removal) + 1

    def test_p7_post_transform_order(self):
        from mwss import solve_component

        _, _, _, detail = solve_component(path_graph(7), collect=True)
        second = detail.interval.strips[1]
        co = detail.orders[1]
        assert tuple(second.to_orig[v] for v in co.order) == (4, 5, 6)

    def test_structural_violation_bubbles_with_witness(self):
        from mwss import StructuralError

        # four-legged spider: alpha = 4 but the hub is a claw center
        edges = []
        for leg in range(4):
            a, b = 1 + 2 * leg, 2 + 2 * leg
            edges += [(0, a), (a, b)]
        spider = Graph(9, edges)
        with pytest.raises(StructuralError) as err:
            solve(spider)
        assert err.value.witness  # carries the offending nodes
