import pytest

from plovlab.partitions import (
    bump,
    count,
    decompose,
    enumerate_partitions,
    format_partition,
    lex_compare,
    multiplicities,
    parse_partition,
    partition_set,
)

from oracles import brute_force_partitions


def test_enumeration_matches_brute_force():
    for k in range(1, 6):
        for d in range(1, 5):
            for n in range(0, d * k + 1):
                assert list(enumerate_partitions(k, d, n)) == \
                    brute_force_partitions(k, d, n)


def test_enumeration_is_decreasing_lex():
    parts = enumerate_partitions(6, 4, 12)
    for a, b in zip(parts, parts[1:]):
        assert lex_compare(a, b) == 1


def test_count_agrees_with_enumeration():
    for k in range(1, 7):
        for d in range(1, 6):
            for n in range(0, d * k + 1):
                assert count(k, d, n) == len(enumerate_partitions(k, d, n))


def test_count_out_of_range_is_zero():
    assert count(3, 2, -1) == 0
    assert count(3, 2, 7) == 0
    with pytest.raises(ValueError):
        count(0, 2, 1)


def test_example_sets():
    assert enumerate_partitions(4, 3, 6) == (
        (4, 2, 0), (4, 1, 1), (3, 3, 0), (3, 2, 1), (2, 2, 2))
    assert count(4, 3, 6) == 5
    assert enumerate_partitions(3, 2, 0) == ((0, 0),)
    assert lex_compare((4, 1, 1), (4, 2, 0)) == -1
    assert lex_compare((3, 3, 0), (2, 2, 2)) == 1
    assert enumerate_partitions(5, 3, 6) == (
        (5, 1, 0), (4, 2, 0), (4, 1, 1), (3, 3, 0), (3, 2, 1), (2, 2, 2))
    assert count(6, 4, 12) == 18
    assert count(6, 4, 11) == 16


def test_bump():
    assert bump((5, 0, 0), 0, 5) == ((5, 1, 0), 2)
    assert bump((3, 2, 1), 2, 5) == ((3, 3, 1), 1)
    assert bump((3, 3, 0), 1, 5) is None
    with pytest.raises(ValueError):
        bump((3, 2, 1), 5, 5)


def test_bump_stays_in_set():
    ps = partition_set(4, 3, 6)
    target = partition_set(4, 3, 7)
    for mu in ps:
        for i in range(4):
            hit = bump(mu, i, 4)
            if hit is not None:
                lam, w = hit
                assert lam in target
                assert w == multiplicities(mu, 4)[i]


def test_decompose_partitions_the_set():
    for k in range(1, 6):
        for d in range(2, 5):
            for n in range(0, d * k + 1):
                embedded, rest = decompose(k, d, n)
                combined = list(embedded) + list(rest)
                assert combined == list(enumerate_partitions(k, d, n))


def test_format_parse_roundtrip():
    p = (6, 4, 2, 0)
    assert parse_partition(format_partition(p)) == p
    assert format_partition(p) == "6,4,2,0"
    with pytest.raises(ValueError):
        parse_partition("1,2,3")


def test_index_of():
    ps = partition_set(5, 3, 6)
    for i, p in enumerate(ps):
        assert ps.index_of(p) == i
    assert (9, 9, 9) not in ps
