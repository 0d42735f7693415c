from fractions import Fraction

import pytest

import rainbowlab as rl

from . import oracles
from .conftest import make_k23, make_k33, make_k4


def _disjoint_union(graphs):
    offset = 0
    edges = []
    for g in graphs:
        for e in g.edges:
            edges.append((e.u + offset, e.v + offset, e.color))
        offset += g.n
    return rl.ColoredGraph.from_edges(offset, edges)


class TestDensestSubgraph:
    def test_pendant_is_trimmed(self, k4_pendant):
        dense = rl.max_avg_degree_subgraph(k4_pendant)
        assert dense.vertices == (0, 1, 2, 3)
        assert dense.avg_degree == Fraction(3)

    def test_denser_component_wins(self):
        k3 = rl.induced_subgraph(rl.complete_one_factorization(4), [0, 1, 2])[0]
        k5 = rl.random_colored(5, 10, seed=3)
        both = _disjoint_union([k3, k5])
        dense = rl.max_avg_degree_subgraph(both)
        assert dense.vertices == tuple(range(3, 8))
        assert dense.avg_degree == Fraction(4)

    def test_regular_graph_is_its_own_densest(self):
        g, _ = make_k33()
        dense = rl.max_avg_degree_subgraph(g)
        assert dense.vertices == tuple(range(6))
        assert dense.avg_degree == Fraction(3)

    def test_ties_return_union_of_optima(self):
        k3a = rl.induced_subgraph(rl.complete_one_factorization(4), [0, 1, 2])[0]
        both = _disjoint_union([k3a, k3a])
        dense = rl.max_avg_degree_subgraph(both)
        # both triangles achieve 2; the maximal optimum is their union
        assert dense.vertices == tuple(range(6))
        assert dense.avg_degree == Fraction(2)

    def test_exact_matches_oracle_on_corpus(self, corpus):
        for g in corpus[:30]:
            if g.edge_count == 0:
                continue
            dense = rl.max_avg_degree_subgraph(g)
            assert dense.avg_degree == oracles.densest_average_degree(g)
            assert frozenset(dense.vertices) == oracles.largest_densest_set(g)

    def test_greedy_is_a_half_approximation(self, corpus):
        for g in corpus[:30]:
            if g.edge_count == 0:
                continue
            exact = rl.max_avg_degree_subgraph(g)
            greedy = rl.max_avg_degree_subgraph(g, method="greedy")
            assert 2 * greedy.avg_degree >= exact.avg_degree

    def test_empty_graph_rejected(self):
        g = rl.ColoredGraph.from_edges(3, [])
        with pytest.raises(rl.EmptyGraph):
            rl.max_avg_degree_subgraph(g)

    def test_unknown_method_rejected(self, k4):
        with pytest.raises(ValueError):
            rl.max_avg_degree_subgraph(k4, method="anneal")


class TestPeeling:
    def test_k4_survives_threshold_three(self, k4):
        peeled, kept = rl.peel_to_min_degree(k4, 3)
        assert peeled.n == 4 and peeled.edge_count == 6
        assert kept == (0, 1, 2, 3)

    def test_path_dies_at_threshold_two(self, path3):
        peeled, kept = rl.peel_to_min_degree(path3, 2)
        assert peeled.n == 0 and kept == ()

    def test_pendant_peels_back_to_clique(self, k4_pendant):
        peeled, kept = rl.peel_to_min_degree(k4_pendant, 3)
        assert kept == (0, 1, 2, 3)
        assert peeled.edge_count == 6

    def test_colors_preserved(self, k4_pendant):
        peeled, kept = rl.peel_to_min_degree(k4_pendant, 3)
        inverse = dict(enumerate(kept))
        for e in peeled.edges:
            assert k4_pendant.color(inverse[e.u], inverse[e.v]) == e.color


class TestSplitRegularize:
    def test_regular_graph_splits_to_itself(self, k4):
        result = rl.split_regularize(k4)
        assert result.delta == 3
        assert result.graph.n == 4
        assert result.graph.edge_count == 6
        assert [result.psi(v) for v in range(4)] == [0, 1, 2, 3]

    def test_star_shatters_into_disjoint_edges(self, star4):
        result = rl.split_regularize(star4)
        # delta 1, so the center splits into one copy per leaf
        assert result.delta == 1
        assert result.graph.n == 8
        assert result.graph.edge_count == 4
        degs = sorted(result.graph.degree(v) for v in range(8))
        assert degs == [1] * 8

    def test_path_center_duplicates(self, path3):
        result = rl.split_regularize(path3)
        assert result.graph.n == 4
        assert result.graph.edge_count == 2
        assert sorted(result.psi(v) for v in range(4)) == [0, 1, 1, 2]

    def test_postconditions_hold_on_corpus(self, corpus):
        for g in corpus[:40]:
            if g.edge_count == 0 or min(g.degree(v) for v in range(g.n)) == 0:
                continue
            result = rl.split_regularize(g)
            assert rl.split_violations(result) == []
            assert rl.validate(result.graph) == []

    def test_psi_preserves_colors_by_construction(self, corpus):
        for g in corpus[:20]:
            if g.edge_count == 0 or min(g.degree(v) for v in range(g.n)) == 0:
                continue
            result = rl.split_regularize(g)
            assert result.psi.violations() == []

    def test_rainbow_cycles_lift_through_psi(self, corpus):
        lifted = 0
        for g in corpus[:40]:
            if g.edge_count == 0 or min(g.degree(v) for v in range(g.n)) == 0:
                continue
            result = rl.split_regularize(g)
            cert = rl.find_rainbow_cycle(result.graph)
            if cert is None:
                continue
            image = [result.psi(v) for v in cert.vertices]
            pushed = rl.CycleCertificate(vertices=tuple(image), colors=cert.colors)
            ok, reason = rl.certify(g, pushed)
            assert ok, reason
            lifted += 1
        assert lifted > 0

    def test_isolated_vertex_rejected(self):
        g = rl.ColoredGraph.from_edges(3, [(0, 1, 0)])
        with pytest.raises(rl.DegreeZero):
            rl.split_regularize(g)


class TestLopsidedRegularize:
    def test_k33_lands_in_base_dyadic_class(self):
        g, sides = make_k33()
        result = rl.lopsided_regularize(g, sides, k=2)
        assert result.dyadic_index == 6
        assert result.avg_degree == Fraction(3)
        assert len(result.side_a) == 3 and len(result.side_b) == 3
        assert result.subgraph.edge_count == 9
        assert rl.lopsided_violations(result) == []

    def test_k23_base_class(self):
        g, sides = make_k23()
        result = rl.lopsided_regularize(g, sides, k=2)
        assert result.dyadic_index == 6
        # every surviving left vertex has degree d = 12/5 times a factor in [1, 2)
        assert result.class_sizes[6] == len(result.side_a)
        assert rl.lopsided_violations(result) == []

    def test_certificate_fields_are_consistent(self):
        g, sides = make_k33()
        result = rl.lopsided_regularize(g, sides, k=2)
        assert result.source is g
        assert result.source_edge_count == 9
        assert 8 * result.peeled_edge_count >= result.source_edge_count
        # vertex_map sends subgraph ids back to source ids
        for e in result.subgraph.edges:
            u, v = result.vertex_map[e.u], result.vertex_map[e.v]
            assert g.color(u, v) == e.color

    def test_non_densest_input_rejected(self, k4_pendant):
        sides = rl.Bipartition.from_left(5, [0, 1])
        with pytest.raises(rl.PreconditionError):
            rl.lopsided_regularize(k4_pendant, sides, k=2)

    def test_precondition_checked_before_sides(self, k4_pendant):
        # a crossing-edge violation would raise BipartitionError, so reaching
        # PreconditionError proves the densest check runs first
        sides = rl.Bipartition.from_left(5, [0])
        with pytest.raises(rl.PreconditionError):
            rl.lopsided_regularize(k4_pendant, sides, k=2)

    def test_crossing_sides_rejected_on_densest_input(self):
        g, _ = make_k33()
        sides = rl.Bipartition.from_left(6, [0, 1, 3])
        with pytest.raises(rl.BipartitionError):
            rl.lopsided_regularize(g, sides, k=2)

    def test_small_k_rejected(self):
        g, sides = make_k33()
        with pytest.raises(ValueError):
            rl.lopsided_regularize(g, sides, k=1)

    def test_verifier_signs_off(self):
        g, sides = make_k33()
        result = rl.lopsided_regularize(g, sides, k=2)
        report = rl.verify_regularization(result)
        assert report.passed
        names = {c.name for c in report.checks}
        assert "lopsided_peel_edges" in names

    def test_bipartite_corpus_smoke(self, bipartite_corpus):
        ran = 0
        for g, sides in bipartite_corpus:
            if g.edge_count == 0:
                continue
            dense = rl.max_avg_degree_subgraph(g)
            if dense.vertices != tuple(range(g.n)):
                continue
            try:
                result = rl.lopsided_regularize(g, sides, k=2)
            except rl.LemmaViolation:
                pytest.fail("certified inequality failed on a valid input")
            assert rl.lopsided_violations(result) == []
            ran += 1
        assert ran > 0


class TestColorPreservingMap:
    def test_reports_color_clash(self, k4):
        mapping = {0: 0, 1: 1, 2: 2, 3: 3}
        psi = rl.ColorPreservingMap(domain=k4, codomain=k4, mapping=mapping)
        assert psi.violations() == []

    def test_detects_color_clash_on_edge_image(self, k4, path3):
        mapping = {0: 0, 1: 1, 2: 0}
        psi = rl.ColorPreservingMap(domain=path3, codomain=k4, mapping=mapping)
        bad = psi.violations()
        assert bad and all(v[0] == "map_color" for v in bad)

    def test_detects_non_edge_image(self, c4_rainbow, path3):
        mapping = {0: 0, 1: 1, 2: 3}
        psi = rl.ColorPreservingMap(domain=path3, codomain=c4_rainbow, mapping=mapping)
        bad = psi.violations()
        assert bad and any(v[0] == "map_edge" for v in bad)
