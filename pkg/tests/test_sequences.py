import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import (
    connected_labeled_degree_sequences,
    labeled_degree_sequences,
)
from totalirr.graph import degree_sequence
from totalirr.sequences import (
    SequenceFamilyConstraint,
    enumerate_sequences,
    has_connected_realization,
    is_graphical,
    realize_connected,
)


def all_sorted_sequences(n, max_val=None):
    top = n - 1 if max_val is None else max_val
    for combo in itertools.combinations_with_replacement(range(top, -1, -1), n):
        if all(combo[i] >= combo[i + 1] for i in range(n - 1)):
            yield combo


class TestGraphical:
    def test_examples(self):
        assert is_graphical((3, 3, 3, 3))
        assert not is_graphical((3, 3, 1, 1))
        assert is_graphical((2, 2, 2))

    def test_odd_sum_rejected_with_reason(self):
        assert not is_graphical((2, 2, 1))
        from totalirr.sequences import _graphical_defect

        assert "odd" in _graphical_defect((2, 2, 1))

    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            is_graphical((1, 2))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_against_labeled_bruteforce(self, n):
        realizable = labeled_degree_sequences(n)
        for seq in all_sorted_sequences(n):
            if sum(seq) % 2:
                assert not is_graphical(seq)
            else:
                assert is_graphical(seq) == (seq in realizable), seq


class TestConnectedRealizable:
    def test_examples(self):
        assert has_connected_realization((2, 2, 1, 1))
        assert not has_connected_realization((1, 1, 1, 1))  # sum below 2(n-1)
        assert not has_connected_realization((3, 3, 3, 1))  # not graphical

    @pytest.mark.parametrize("n", range(2, 7))
    def test_against_labeled_bruteforce(self, n):
        connected = connected_labeled_degree_sequences(n)
        for seq in all_sorted_sequences(n):
            assert has_connected_realization(seq) == (seq in connected), seq


class TestRealize:
    def test_examples(self):
        assert degree_sequence(realize_connected((2, 2, 2))) == (2, 2, 2)
        assert degree_sequence(realize_connected((2, 2, 1, 1))) == (2, 2, 1, 1)
        g = realize_connected((3, 2, 2, 2, 1))
        assert degree_sequence(g) == (3, 2, 2, 2, 1)
        assert g.is_connected()

    def test_rejects_infeasible(self):
        with pytest.raises(ValueError, match="odd"):
            realize_connected((2, 2, 1))
        with pytest.raises(ValueError, match="no connected realization"):
            realize_connected((1, 1, 1, 1))
        with pytest.raises(ValueError):
            realize_connected((3, 3, 1, 1))

    @pytest.mark.parametrize("n", range(2, 11))
    def test_roundtrip_everything(self, n):
        for m in range(n - 1, n * (n - 1) // 2 + 1):
            constraint = SequenceFamilyConstraint(
                n=n, m=m, min_degree=1, require_connected_realizable=True
            )
            for seq in enumerate_sequences(constraint):
                g = realize_connected(seq)
                assert g.is_connected()
                assert degree_sequence(g) == seq


class TestEnumerate:
    def test_spec_examples(self):
        got = list(
            enumerate_sequences(
                SequenceFamilyConstraint(4, 3, require_connected_realizable=True)
            )
        )
        assert got == [(3, 1, 1, 1), (2, 2, 1, 1)]
        got = list(
            enumerate_sequences(
                SequenceFamilyConstraint(4, 4, require_connected_realizable=True)
            )
        )
        assert got == [(3, 2, 2, 1), (2, 2, 2, 2)]
        got = list(enumerate_sequences(SequenceFamilyConstraint(3, 3)))
        assert got == [(2, 2, 2)]

    def test_lexicographically_decreasing_and_unique(self):
        got = list(enumerate_sequences(SequenceFamilyConstraint(7, 7)))
        assert got == sorted(set(got), reverse=True)

    def test_forbidden_sequences_excluded(self):
        constraint = SequenceFamilyConstraint(
            4, 3, forbidden_sequences=((3, 1, 1, 1),)
        )
        assert (3, 1, 1, 1) not in list(enumerate_sequences(constraint))

    def test_min_degree_zero(self):
        got = list(enumerate_sequences(SequenceFamilyConstraint(3, 1, min_degree=0)))
        assert got == [(2, 0, 0), (1, 1, 0)]

    @given(st.integers(2, 7), st.integers(0, 10))
    def test_against_bruteforce(self, n, m):
        expect = [
            seq
            for seq in all_sorted_sequences(n)
            if sum(seq) == 2 * m and min(seq) >= 1
        ]
        expect.sort(reverse=True)
        got = list(enumerate_sequences(SequenceFamilyConstraint(n, m)))
        assert got == expect
