import dataclasses
import json
from fractions import Fraction

import pytest

import rainbowlab as rl


class TestVerifyGraphK4:
    """The one-factorized K_4 exercises every branch with tiny numbers."""

    @pytest.fixture()
    def report(self, k4):
        return rl.verify_graph(k4, 2)

    def test_all_checks_pass(self, report):
        assert report.passed
        assert report.failures() == []

    def test_identity_and_symmetry(self, report):
        m = report.by_name("type1_vertex_color_match")
        assert (m.lhs, m.rhs, m.status) == (36, 36, "PASS")
        s = report.by_name("vertex_return_symmetry_s1")
        assert s.context["partner_index"] == 1

    def test_cauchy_schwarz_squares(self, report):
        c = report.by_name("vertex_return_cauchy_schwarz_s1")
        assert (c.lhs, c.rhs) == (36 ** 2, 36 * 36)
        t2 = report.by_name("color_repeat_cauchy_schwarz_t2")
        assert t2.context["lookup_index"] == 3

    def test_log_convexity(self, report):
        c = report.by_name("anchored_log_convex_s1")
        assert (c.lhs, c.rhs) == (1296, 84 * 36)

    def test_union_bound(self, report):
        c = report.by_name("degenerate_union_bound")
        assert (c.lhs, c.rhs, c.status) == (84, 432, "PASS")

    def test_conditionals_certified(self, report):
        for name, rhs in [
            ("hom_quadratic_bound", 16 * 36),
            ("hom_star_bound", 256 * 36),
            ("anchored_telescoping", 256 * 36),
        ]:
            c = report.by_name(name)
            assert c.condition == "certified"
            assert (c.lhs, c.rhs, c.status) == (84, rhs, "PASS")

    def test_sidorenko_floor(self, report):
        c = report.by_name("sidorenko_floor")
        assert (c.lhs, c.rhs, c.status) == (84 * 4 ** 4, 12 ** 4, "PASS")
        assert c.context["average_degree"] == Fraction(3)

    def test_supersaturation_informational_when_sparse(self, report):
        c = report.by_name("cycle_supersaturation")
        assert c.status == "INFO"
        assert c.context["copies"] == 3
        assert c.context["hypothesis_degree_holds"] is False
        assert c.context["hypothesis_edge_holds"] is False


class TestConditionHandling:
    def test_rainbow_witness_skips_conditionals(self, c4_rainbow):
        report = rl.verify_graph(c4_rainbow, 2)
        assert report.passed
        for name in ("hom_quadratic_bound", "hom_star_bound", "anchored_telescoping"):
            c = report.by_name(name)
            assert c.status == "SKIPPED"
            assert c.condition == "refuted"
            assert c.lhs is None and c.rhs is None
            assert c.context["witness_vertices"] == [0, 1, 2, 3]
            assert c.context["witness_colors"] == [0, 1, 2, 3]

    def test_skipped_is_not_a_pass(self, c4_rainbow):
        report = rl.verify_graph(c4_rainbow, 2)
        skipped = [c for c in report.checks if c.status == "SKIPPED"]
        assert len(skipped) == 3
        assert all(c.status != "PASS" for c in skipped)

    def test_assumption_overrides_search(self, c4_rainbow):
        report = rl.verify_graph(c4_rainbow, 2, assume_rainbow_free=True)
        for name in ("hom_quadratic_bound", "hom_star_bound", "anchored_telescoping"):
            c = report.by_name(name)
            assert c.condition == "assumed"
            assert c.status == "PASS"

    def test_k6_one_factorization_is_refuted(self, k6):
        report = rl.verify_graph(k6, 2)
        assert report.by_name("hom_quadratic_bound").condition == "refuted"

    def test_hypercube_certifies(self, q3):
        for k in (2, 3):
            report = rl.verify_graph(q3, k)
            assert report.passed
            assert report.by_name("hom_quadratic_bound").condition == "certified"


class TestBipartiteFloor:
    def test_k23_values(self, k23):
        g, sides = k23
        report = rl.verify_graph(g, 2, side=sides)
        c = report.by_name("bipartite_degree_floor")
        assert (c.lhs, c.rhs, c.status) == (2592, 1296, "PASS")
        assert c.context["left_size"] == 2 and c.context["right_size"] == 3
        assert c.context["left_avg"] == Fraction(3)
        assert c.context["right_avg"] == Fraction(2)

    def test_absent_without_side(self, k23):
        g, _ = k23
        report = rl.verify_graph(g, 2)
        with pytest.raises(KeyError):
            report.by_name("bipartite_degree_floor")

    def test_crossing_side_rejected(self, k23):
        g, _ = k23
        bad = rl.Bipartition.from_left(5, [0, 2])
        with pytest.raises(rl.BipartitionError):
            rl.verify_graph(g, 2, side=bad)

    def test_floor_holds_across_bipartite_corpus(self, bipartite_corpus):
        for g, sides in bipartite_corpus:
            if g.edge_count == 0:
                continue
            report = rl.verify_graph(g, 2, side=sides)
            assert report.by_name("bipartite_degree_floor").status == "PASS"


class TestReportPlumbing:
    def test_small_k_rejected(self, k4):
        with pytest.raises(ValueError):
            rl.verify_graph(k4, 1)

    def test_by_name_raises_on_unknown(self, k4):
        report = rl.verify_graph(k4, 2)
        with pytest.raises(KeyError):
            report.by_name("no_such_check")

    def test_document_is_json_ready_with_decimal_strings(self, k4):
        doc = rl.verify_graph(k4, 2).to_document()
        assert doc["passed"] is True
        blob = json.loads(json.dumps(doc))
        by_name = {c["name"]: c for c in blob["checks"]}
        assert by_name["sidorenko_floor"]["lhs"] == "21504"
        assert by_name["hom_quadratic_bound"]["condition"] == "certified"

    def test_document_uses_null_for_skipped_sides(self, c4_rainbow):
        doc = rl.verify_graph(c4_rainbow, 2).to_document()
        rec = next(c for c in doc["checks"] if c["name"] == "hom_quadratic_bound")
        assert rec["lhs"] is None and rec["rhs"] is None
        assert rec["status"] == "SKIPPED"

    def test_failure_flips_passed(self, k4):
        report = rl.verify_graph(k4, 2)
        bad = dataclasses.replace(report.checks[0], status="FAIL")
        doctored = rl.VerificationReport(checks=report.checks + (bad,))
        assert not doctored.passed
        assert doctored.failures() == [bad]

    def test_universal_checks_hold_on_corpus(self, corpus):
        for g in corpus[:30]:
            for k in (2, 3):
                report = rl.verify_graph(g, k)
                assert report.passed, report.failures()


class TestRegularizationVerifier:
    def test_split_report_passes(self, k4_pendant):
        result = rl.split_regularize(k4_pendant)
        report = rl.verify_regularization(result)
        assert report.passed
        names = {c.name for c in report.checks}
        assert "split_edge_conservation" in names
        assert "split_color_preserving_map" in names

    def test_corrupted_map_is_caught(self, k4_pendant):
        result = rl.split_regularize(k4_pendant)
        broken = list(result.psi.mapping)
        broken[0] = (broken[0] + 1) % k4_pendant.n
        doctored = dataclasses.replace(
            result,
            psi=rl.ColorPreservingMap(
                domain=result.graph, codomain=result.source, mapping=tuple(broken)
            ),
        )
        report = rl.verify_regularization(doctored)
        assert not report.passed
        c = report.by_name("split_color_preserving_map")
        assert c.status == "FAIL"
        assert "violation" in c.context

    def test_lopsided_report_names(self, k33):
        g, sides = k33
        result = rl.lopsided_regularize(g, sides, k=2)
        report = rl.verify_regularization(result)
        assert report.passed
        names = [c.name for c in report.checks]
        assert names == [
            "lopsided_class_size",
            "lopsided_b_size",
            "lopsided_peel_edges",
            "lopsided_a_degree_lower",
            "lopsided_a_degree_upper",
            "lopsided_b_degree_cap",
        ]

    def test_rejects_foreign_objects(self, k4):
        with pytest.raises(TypeError):
            rl.verify_regularization(k4)
