from collections import Counter
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from grpn.combinat import (
    Multipartition,
    Partition,
    compositions,
    enumerate_multipartitions,
    enumerate_partitions,
    enumerate_standard_tableaux,
    hook_length_count,
    syt_count,
)
from grpn.errors import EnumerationCapExceeded

mp = Multipartition.from_parts


@st.composite
def partition_strategy(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    return Partition(tuple(sorted(Counter(bins).values(), reverse=True)))


def partition_counts_upto(nmax):
    """Independent partition-count table (coin-style dynamic programming)."""
    counts = [1] + [0] * nmax
    for part in range(1, nmax + 1):
        for total in range(part, nmax + 1):
            counts[total] += counts[total - part]
    return counts


def test_partition_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_partition_padded_indexing():
    p = Partition((3, 1))
    assert [p.part(k) for k in (1, 2, 3, 9)] == [3, 1, 0, 0]
    with pytest.raises(ValueError):
        p.part(0)


def test_enumerate_partitions_small():
    assert [p.parts for p in enumerate_partitions(0)] == [()]
    assert [p.parts for p in enumerate_partitions(1)] == [(1,)]
    assert [p.parts for p in enumerate_partitions(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1),
    ]


def test_partition_counts_match_dp_oracle():
    counts = partition_counts_upto(9)
    for n in range(10):
        assert len(enumerate_partitions(n)) == counts[n]


def test_enumerate_multipartitions_examples():
    assert [m.to_lists() for m in enumerate_multipartitions(1, 2)] == [
        [[1], []], [[], [1]],
    ]
    assert [m.to_lists() for m in enumerate_multipartitions(0, 3)] == [[[], [], []]]
    assert len(enumerate_multipartitions(2, 2)) == 5


def test_multipartition_counts_match_convolution_oracle():
    counts = partition_counts_upto(6)
    for r in range(1, 5):
        for n in range(7):
            expected = 0
            for comp in compositions(n, r):
                prod = 1
                for a in comp:
                    prod *= counts[a]
                expected += prod
            assert len(enumerate_multipartitions(n, r)) == expected


def test_multipartitions_unique():
    seen = enumerate_multipartitions(4, 3)
    assert len(seen) == len(set(seen))


def test_hook_length_known_values():
    assert hook_length_count(Partition(())) == 1
    assert hook_length_count(Partition((2, 1))) == 2
    assert hook_length_count(Partition((3, 2))) == 5
    assert hook_length_count(Partition((4, 3, 2, 1))) == 768


def test_syt_count_examples():
    assert syt_count(mp([[2, 1]])) == 2
    assert syt_count(mp([[1], [1]])) == 2
    assert syt_count(mp([[], []])) == 1


def test_sum_of_squares_bipartitions_of_two():
    total = sum(syt_count(lam) ** 2 for lam in enumerate_multipartitions(2, 2))
    assert total == 8  # 2^2 * 2!


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_sum_of_squares_identity(r, n):
    total = sum(syt_count(lam) ** 2 for lam in enumerate_multipartitions(n, r))
    assert total == r**n * factorial(n)


def test_enumerate_standard_tableaux_examples():
    assert len(enumerate_standard_tableaux(mp([[1], [1]]))) == 2
    assert len(enumerate_standard_tableaux(mp([[2]]))) == 1
    two = enumerate_standard_tableaux(mp([[2, 1]]))
    assert len(two) == 2
    assert {t.entries for t in two} == {
        (((1, 2), (3,)),),
        (((1, 3), (2,)),),
    }


def test_empty_shape_has_one_tableau():
    (only,) = enumerate_standard_tableaux(mp([[], []]))
    assert only.entries == ((), ())


@pytest.mark.parametrize("r", [1, 2, 3])
def test_tableau_lists_match_syt_count(r):
    for n in range(6):
        for shape in enumerate_multipartitions(n, r):
            assert len(enumerate_standard_tableaux(shape)) == syt_count(shape)


def test_tableau_cap_enforced():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_standard_tableaux(mp([[5, 4]]), cap=8)
    assert enumerate_standard_tableaux(mp([[5, 4]]), cap=9)


def test_standard_tableau_validation():
    from grpn.combinat import StandardTableau

    with pytest.raises(ValueError):
        StandardTableau(mp([[2]]), (((2, 1),),))  # row not increasing
    with pytest.raises(ValueError):
        StandardTableau(mp([[1, 1]]), (((1,), (1,)),))  # duplicate entries
    with pytest.raises(ValueError):
        StandardTableau(mp([[2, 2]]), (((1, 4), (2, 3)),))  # column decreases


@settings(deadline=None, max_examples=60)
@given(p=partition_strategy())
def test_partition_invariants(p):
    assert p.size == sum(p.parts)
    assert all(p.parts[k] >= p.parts[k + 1] for k in range(len(p.parts) - 1))


@settings(deadline=None, max_examples=30)
@given(p=partition_strategy(max_n=6))
def test_hook_count_matches_enumeration(p):
    shape = Multipartition((p,))
    assert hook_length_count(p) == len(enumerate_standard_tableaux(shape))


def test_canonical_order_is_total_on_small_universe():
    universe = enumerate_multipartitions(3, 2)
    keys = [lam.sort_key() for lam in universe]
    assert len(set(keys)) == len(keys)
    ordered = sorted(universe, key=Multipartition.sort_key)
    # sizes ascend lexicographically first
    assert ordered[0].to_lists() == [[], [3]]
