import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import rainbowlab as rl
from rainbowlab import walks

from . import oracles


class TestWalkCounts:
    def test_length_zero_is_identity(self, k4):
        t = rl.walk_counts(k4, 0)
        for u in range(4):
            for v in range(4):
                assert t.count(u, v) == (1 if u == v else 0)

    def test_length_one_is_adjacency(self, k4, path3):
        for g in (k4, path3):
            t = rl.walk_counts(g, 1)
            for u in range(g.n):
                for v in range(g.n):
                    assert t.count(u, v) == (1 if g.has_edge(u, v) else 0)

    @pytest.mark.parametrize("length", [2, 3, 4])
    def test_matches_product_oracle(self, length):
        g = rl.random_colored(6, 9, 4)
        t = rl.walk_counts(g, length)
        for u in range(6):
            for v in range(6):
                assert t.count(u, v) == oracles.walk_count(g, length, u, v)

    def test_chapman_kolmogorov(self):
        g = rl.random_colored(8, 14, 3)
        wa, wb, wab = rl.walk_counts(g, 3), rl.walk_counts(g, 4), rl.walk_counts(g, 7)
        for u in range(8):
            for v in range(8):
                assert wab.count(u, v) == sum(
                    wa.count(u, x) * wb.count(x, v) for x in range(8)
                )

    def test_symmetry(self):
        g = rl.random_colored(7, 11, 9)
        t = rl.walk_counts(g, 5)
        for u in range(7):
            for v in range(7):
                assert t.count(u, v) == t.count(v, u)

    def test_work_cap(self, k4):
        with pytest.raises(rl.WorkCapExceeded) as exc:
            rl.walk_counts(k4, 6, work_cap=5)
        assert exc.value.cap == 5 and exc.value.estimate is not None


class TestBigIntegerPath:
    def test_python_fallback_matches_closed_form(self):
        # 40 leaves, walk length 12: 40**12 > 2**62 forces the object path
        star = rl.ColoredGraph.from_edges(41, [(0, i, i - 1) for i in range(1, 41)])
        assert star.max_degree ** 12 >= walks._INT64_SAFE
        t = rl.walk_counts(star, 12)
        assert t.count(0, 0) == 40**6
        assert t.count(1, 1) == 40**5
        assert t.count(1, 2) == 40**5

    def test_both_paths_agree(self):
        g = rl.random_colored(6, 10, 12)
        fast = rl.walk_counts(g, 4)
        slow = walks._power_python(g, 4)
        assert fast.entries == tuple(tuple(row) for row in slow)

    def test_big_values_exact(self):
        # 7-regular: every row of the length-30 table sums to 7**30
        g = rl.complete_one_factorization(8)
        t = rl.walk_counts(g, 30)
        total = sum(t.count(u, v) for u in range(8) for v in range(8))
        assert total == 8 * 7**30


class TestStarWalks:
    def test_closed_forms(self, star4):
        even = rl.star_walk_counts(star4, 6)
        assert even.count(0, 0) == 4**3
        assert even.count(1, 1) == 1
        assert even.count(1, 2) == 0
        odd = rl.star_walk_counts(star4, 5)
        assert odd.count(0, 1) == 4**2
        assert odd.count(1, 0) == 1
        assert odd.count(1, 2) == 0

    def test_degenerate_length_zero(self, k4):
        t = rl.star_walk_counts(k4, 0)
        assert t.count(2, 2) == 1 and t.count(0, 1) == 0

    def test_star_walks_undercount_plain_walks(self, k4):
        plain = rl.walk_counts(k4, 4)
        star = rl.star_walk_counts(k4, 4)
        for u in range(4):
            for v in range(4):
                assert star.count(u, v) <= plain.count(u, v)


class TestColorRestricted:
    def test_first_position_counts_colored_departures(self, k4):
        for c in range(3):
            t = rl.color_restricted_table(k4, 1, 1, c)
            hits = [(u, v) for u in range(4) for v in range(4) if t.count(u, v)]
            assert sorted(hits) == sorted(
                [(e.u, e.v) for e in k4.edges if e.color == c]
                + [(e.v, e.u) for e in k4.edges if e.color == c]
            )

    def test_marginalizing_colors_recovers_plain_count(self):
        g = rl.random_colored(7, 12, 11)
        length = 4
        total = rl.walk_counts(g, length)
        colors = sorted({e.color for e in g.edges})
        for position in range(1, length + 1):
            for u in range(7):
                for v in range(7):
                    s = sum(
                        rl.color_restricted_walk_count(g, length, position, c, u, v)
                        for c in colors
                    )
                    assert s == total.count(u, v)

    def test_position_out_of_range(self, k4):
        with pytest.raises(ValueError):
            rl.color_restricted_table(k4, 3, 0, 0)
        with pytest.raises(ValueError):
            rl.color_restricted_table(k4, 3, 4, 0)

    def test_absent_color_gives_zero_table(self, k4):
        t = rl.color_restricted_table(k4, 2, 1, 99)
        assert all(t.count(u, v) == 0 for u in range(4) for v in range(4))


class TestClosedFormCounts:
    def test_hom_cycle_counts(self, k4, c4_rainbow, q3, single_edge):
        assert rl.hom_cycle_count(k4, 2) == 84
        assert rl.hom_cycle_count(c4_rainbow, 2) == 32
        assert rl.hom_cycle_count(q3, 2) == 168
        assert rl.hom_cycle_count(single_edge, 2) == 2

    def test_hom_star_counts(self, k4, k23):
        assert rl.hom_star_count(k4, 2) == 4 * 9
        graph, _ = k23
        assert rl.hom_star_count(graph, 3) == 2 * 27 + 3 * 8


@given(st.integers(min_value=0, max_value=50), st.integers(min_value=0, max_value=6))
@settings(max_examples=40, deadline=None)
def test_random_walk_tables_are_consistent(seed, length):
    g = rl.random_colored(5, 7, seed)
    t = rl.walk_counts(g, length)
    assert t.length == length
    if length >= 2:
        prev = rl.walk_counts(g, length - 1)
        for u in range(5):
            for v in range(5):
                assert t.count(u, v) == sum(prev.count(u, x) for x in g.neighbors(v))
