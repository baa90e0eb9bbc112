from collections import Counter

import pytest

from oracles import (
    connected_graph_counts_by_edges,
    otter_tree_counts,
)
from totalirr.enumeration import (
    SizeLimitError,
    canonical_form,
    enumerate_bicyclic_by_class,
    enumerate_connected,
    enumerate_trees,
)
from totalirr.graph import GraphKind
from totalirr.graph6 import write_graph6


@pytest.fixture(scope="module")
def euler_counts():
    return connected_graph_counts_by_edges(11, 12)


class TestTrees:
    def test_counts_match_otter(self):
        expect = otter_tree_counts(12)
        for n in range(1, 13):
            assert sum(1 for _ in enumerate_trees(n)) == expect[n]

    def test_counts_match_cycle_index(self, euler_counts):
        for n in range(2, 12):
            assert sum(1 for _ in enumerate_trees(n)) == euler_counts[(n, n - 1)]

    def test_spec_examples(self):
        assert sum(1 for _ in enumerate_trees(4)) == 2
        assert sum(1 for _ in enumerate_trees(7)) == 11
        single = list(enumerate_trees(1))
        assert len(single) == 1 and single[0].n == 1 and single[0].m == 0

    def test_all_are_trees(self):
        for n in range(1, 9):
            for g in enumerate_trees(n):
                assert g.n == n and g.m == n - 1 and g.is_connected()

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            list(enumerate_trees(13))
        with pytest.raises(SizeLimitError):
            list(enumerate_trees(0))


class TestConnected:
    def test_m_sliced_counts(self, euler_counts):
        for n in range(3, 12):
            assert sum(1 for _ in enumerate_connected(n, n)) == euler_counts.get(
                (n, n), 0
            )
            assert sum(
                1 for _ in enumerate_connected(n, n + 1)
            ) == euler_counts.get((n, n + 1), 0)

    def test_totals_match_cycle_index(self):
        counts = connected_graph_counts_by_edges(8, 28)
        for n in range(1, 9):
            expect = sum(counts.get((n, m), 0) for m in range(0, 29))
            assert sum(1 for _ in enumerate_connected(n)) == expect

    def test_atlas_slices(self):
        from networkx.generators.atlas import graph_atlas_g

        atlas = Counter()
        for G in graph_atlas_g()[1:]:
            if G.number_of_nodes() and __import__("networkx").is_connected(G):
                atlas[(G.number_of_nodes(), G.number_of_edges())] += 1
        for n in range(1, 8):
            for m in range(n - 1, n * (n - 1) // 2 + 1):
                got = sum(1 for _ in enumerate_connected(n, m))
                assert got == atlas.get((n, m), 0), (n, m)

    def test_spec_examples(self):
        assert sum(1 for _ in enumerate_connected(3, 3)) == 1
        assert sum(1 for _ in enumerate_connected(5, 5)) == 5
        diamonds = list(enumerate_connected(4, 5))
        assert len(diamonds) == 1 and diamonds[0].m == 5

    def test_all_streams_sound(self):
        for n in range(2, 8):
            seen = set()
            for g in enumerate_connected(n):
                assert g.n == n and g.is_connected()
                assert sum(g.degrees) == 2 * g.m
                code = canonical_form(g).bytes
                assert code not in seen
                seen.add(code)

    def test_tree_slice_equals_tree_stream(self):
        for n in range(1, 12):
            via_m = [canonical_form(g).bytes for g in enumerate_connected(n, n - 1)]
            via_trees = [canonical_form(g).bytes for g in enumerate_trees(n)]
            assert via_m == via_trees

    def test_out_of_range_m_is_empty(self):
        assert list(enumerate_connected(5, 3)) == []
        assert list(enumerate_connected(5, 11)) == []

    def test_size_limits(self):
        with pytest.raises(SizeLimitError):
            list(enumerate_connected(10))
        with pytest.raises(SizeLimitError):
            list(enumerate_connected(12, 12))
        # sparse slices stay legal up to n = 11
        assert sum(1 for _ in enumerate_connected(11, 10)) == 235


class TestBicyclicClasses:
    def test_partition_is_total(self, euler_counts):
        for n in range(4, 10):
            tags = Counter(cls.kind for _, cls in enumerate_bicyclic_by_class(n))
            assert sum(tags.values()) == euler_counts[(n, n + 1)]
            assert GraphKind.OTHER not in tags

    def test_examples(self):
        n4 = list(enumerate_bicyclic_by_class(4))
        assert len(n4) == 1 and n4[0][1].kind is GraphKind.BICYCLIC_THETA
        kinds5 = {cls.kind for _, cls in enumerate_bicyclic_by_class(5)}
        assert GraphKind.BICYCLIC_INFINITY_L1 in kinds5


class TestDeterminism:
    def test_threads_do_not_change_output(self):
        for n, m in ((7, None), (9, 10)):
            one = [write_graph6(g) for g in enumerate_connected(n, m, threads=1)]
            four = [write_graph6(g) for g in enumerate_connected(n, m, threads=4)]
            eight = [write_graph6(g) for g in enumerate_connected(n, m, threads=8)]
            assert one == four == eight

    def test_stream_sorted_by_code(self):
        for n in range(2, 8):
            codes = [canonical_form(g).bytes for g in enumerate_connected(n)]
            by_m: dict[int, list[bytes]] = {}
            for code, g in zip(codes, enumerate_connected(n)):
                by_m.setdefault(g.m, []).append(code)
            for chunk in by_m.values():
                assert chunk == sorted(chunk)
