import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qverify.partitions import (
    EMPTY,
    Partition,
    PartitionClass,
    PartitionError,
    add_pointwise,
    count_partitions,
    enumerate_partitions,
    format_partition,
    is_member,
    parse_partition,
    stats,
    strip_zeros,
    triangular,
)

# p(n) for n = 0..20, the standard table (OEIS A000041).
PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627]

weakly_decreasing = st.lists(st.integers(0, 12), max_size=8).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def test_parse_staircase():
    assert parse_partition("6,5,4,3,2,1") == Partition((6, 5, 4, 3, 2, 1))


def test_parse_empty_string_is_empty_partition():
    assert parse_partition("") == EMPTY
    assert parse_partition("  ") == EMPTY


def test_parse_keeps_zero_parts():
    assert parse_partition("4,3,3,0").parts == (4, 3, 3, 0)


def test_parse_rejects_increase_and_names_index():
    with pytest.raises(PartitionError, match="index 1"):
        parse_partition("3,5")


@pytest.mark.parametrize("text", ["a", "1,,2", "2,-1", "1.5"])
def test_parse_rejects_bad_tokens(text):
    with pytest.raises(PartitionError):
        parse_partition(text)


def test_constructor_validates():
    with pytest.raises(PartitionError):
        Partition((1, 2))
    with pytest.raises(PartitionError):
        Partition((2, -1))


@pytest.mark.parametrize(
    "parts, expected",
    [
        ((3, 2, 1), (3, 6, 3, 1)),
        ((4, 3, 3, 0), (4, 10, 4, 0)),
        ((), (0, 0, 0, math.inf)),
    ],
)
def test_stats(parts, expected):
    assert stats(Partition(parts)) == expected


def test_triangular_examples():
    assert triangular(3).parts == (3, 2, 1)
    assert triangular(0) == EMPTY
    six = triangular(6)
    assert six.parts == (6, 5, 4, 3, 2, 1)
    assert six.weight == 21


def test_triangular_membership_up_to_30():
    for n in range(31):
        assert is_member(triangular(n), PartitionClass.TRIANGULAR)
        assert triangular(n).weight == n * (n + 1) // 2


def test_only_the_staircase_is_triangular_among_its_weight():
    for n in range(1, 6):
        w = n * (n + 1) // 2
        hits = [p for p in enumerate_partitions(w, PartitionClass.POSITIVE) if p.weight == w and is_member(p, "triangular")]
        assert hits == [triangular(n)]


def test_membership_examples():
    assert is_member(Partition((14, 11, 10, 9, 6, 5)), PartitionClass.DISTINCT_POSITIVE)
    assert not is_member(Partition((4, 3, 3, 0, 0, 0, 0, 0)), PartitionClass.DISTINCT_POSITIVE)
    assert is_member(Partition((3, 2, 1)), PartitionClass.TRIANGULAR)
    assert not is_member(Partition((2, 0)), PartitionClass.POSITIVE)
    assert is_member(Partition((2, 0)), PartitionClass.ZEROS_ALLOWED)


def test_add_pointwise_examples():
    assert add_pointwise(Partition((3, 2, 1, 1)), Partition((6, 6, 5))) == Partition((9, 8, 6, 1))
    assert add_pointwise(Partition((5, 2)), EMPTY) == Partition((5, 2))
    assert add_pointwise(Partition((1, 1)), Partition((2,))) == Partition((3, 1))


def test_add_pointwise_all_small_pairs():
    ps = list(enumerate_partitions(6, PartitionClass.POSITIVE))
    for x in ps:
        for y in ps:
            s = add_pointwise(x, y)
            assert s.weight == x.weight + y.weight
            assert s.length == max(x.length, y.length)


@given(weakly_decreasing, weakly_decreasing)
def test_add_pointwise_commutes_and_keeps_order(x, y):
    s = add_pointwise(x, y)
    assert s == add_pointwise(y, x)
    assert list(s.parts) == sorted(s.parts, reverse=True)


def test_strip_zeros():
    assert strip_zeros(Partition((2, 1, 0, 0))) == Partition((2, 1))
    assert strip_zeros(EMPTY) == EMPTY
    assert strip_zeros(Partition((0,))) == EMPTY


def test_enumerate_counts_against_table():
    by_weight = [0] * 21
    for p in enumerate_partitions(20, PartitionClass.POSITIVE):
        by_weight[p.weight] += 1
    assert by_weight == PARTITION_NUMBERS


def test_counting_recurrence_agrees_with_table():
    assert [count_partitions(n) for n in range(21)] == PARTITION_NUMBERS
    assert count_partitions(100) == 190569292


def test_enumerate_small_cases():
    assert sum(1 for p in enumerate_partitions(5, "positive-parts") if p.weight == 5) == 7
    assert list(enumerate_partitions(0, "positive-parts")) == [EMPTY]
    assert list(enumerate_partitions(1, PartitionClass.ZEROS_ALLOWED, 1)) == [EMPTY, Partition((0,)), Partition((1,))]


def test_enumerate_zeros_allowed_needs_length():
    with pytest.raises(PartitionError):
        list(enumerate_partitions(3, PartitionClass.ZEROS_ALLOWED))


@pytest.mark.parametrize("cls", list(PartitionClass))
def test_enumerate_has_no_duplicates_and_respects_class(cls):
    got = list(enumerate_partitions(9, cls, 4))
    assert len(got) == len(set(got))
    assert all(is_member(p, cls) and p.weight <= 9 and p.length <= 4 for p in got)


def test_enumerate_is_deterministic():
    a = list(enumerate_partitions(10, PartitionClass.ZEROS_ALLOWED, 3))
    b = list(enumerate_partitions(10, PartitionClass.ZEROS_ALLOWED, 3))
    assert a == b
    assert [p.weight for p in a] == sorted(p.weight for p in a)


@given(weakly_decreasing)
def test_format_parse_round_trip(p):
    text = format_partition(p)
    assert parse_partition(text) == p
    assert format_partition(parse_partition(text)) == text
    stats(parse_partition(text))
