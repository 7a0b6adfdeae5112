import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcoha.partitions import (
    distinct_permutations,
    is_partition,
    multiplicity,
    parse_partition,
    parse_parts,
    partitions_up_to,
    sort_ascending,
    vec_add,
)

small_vectors = st.lists(st.integers(min_value=0, max_value=4), max_size=6)


def test_sort_ascending():
    assert sort_ascending((3, 1, 2)) == (1, 2, 3)
    assert sort_ascending(()) == ()


def test_multiplicity_values():
    assert multiplicity(()) == 1
    assert multiplicity((1, 1, 3)) == 2
    assert multiplicity((2, 2, 2)) == 6
    assert multiplicity((0, 1, 2)) == 1


def test_distinct_permutations_lex_order():
    perms = distinct_permutations((1, 1, 3))
    assert perms == [(1, 1, 3), (1, 3, 1), (3, 1, 1)]
    assert distinct_permutations(()) == [()]
    assert distinct_permutations((2,)) == [(2,)]


def test_vec_add():
    assert vec_add((1, 2), (3, 4)) == (4, 6)
    with pytest.raises(ValueError):
        vec_add((1,), (1, 2))


def test_parse():
    assert parse_parts("") == ()
    assert parse_parts("0,2") == (0, 2)
    assert parse_partition("1,1,3") == (1, 1, 3)
    with pytest.raises(ValueError):
        parse_partition("2,1")
    with pytest.raises(ValueError):
        parse_parts("1,x")
    with pytest.raises(ValueError):
        parse_parts("-1,2")


def test_partitions_up_to():
    got = partitions_up_to(2, 1)
    assert got == [(), (0,), (1,), (0, 0), (0, 1), (1, 1)]
    assert partitions_up_to(0, 5) == [()]
    # ordered by (length, lex) and free of duplicates
    big = partitions_up_to(3, 3)
    assert big == sorted(set(big), key=lambda p: (len(p), p))


def test_orbit_size_times_multiplicity_is_factorial():
    # exhaustive over every partition shape with length <= 7, parts <= 3
    for lam in partitions_up_to(7, 3):
        n = len(lam)
        assert multiplicity(lam) * len(distinct_permutations(lam)) == math.factorial(n)


@given(small_vectors)
def test_sort_ascending_idempotent(v):
    s = sort_ascending(v)
    assert sort_ascending(s) == s
    assert is_partition(s)


@given(small_vectors, st.randoms())
def test_sort_invariant_under_shuffle(v, rng):
    w = list(v)
    rng.shuffle(w)
    assert sort_ascending(w) == sort_ascending(v)


@given(small_vectors)
def test_distinct_permutations_roundtrip(v):
    lam = sort_ascending(v)
    perms = distinct_permutations(lam)
    assert len(set(perms)) == len(perms)
    assert perms == sorted(perms)
    for p in perms:
        assert sort_ascending(p) == lam
