import math

import pytest
from hypothesis import given, strategies as st

from descalg import combinatorics as cb
from descalg.combinatorics import IndexSet


def S(n, *members):
    return IndexSet.from_members(n, members)


@pytest.mark.parametrize("n, members, expected", [
    (4, (), (4,)),
    (4, (1, 3), (1, 2, 1)),
    (5, (1, 3), (1, 2, 2)),
    (1, (), (1,)),
])
def test_gaps(n, members, expected):
    assert cb.gaps(S(n, *members)) == expected
    assert cb.gaps_inv(expected) == S(n, *members)


def test_gaps_inv_all_ones_is_full_set():
    for n in range(1, 8):
        assert cb.gaps_inv((1,) * n) == IndexSet.full(n)


def test_gaps_of_empty_composition():
    assert cb.gaps(IndexSet(0)) == ()
    assert cb.gaps_inv(()) == IndexSet(0)


@pytest.mark.parametrize("alpha, expected", [((3, 1), (1, 3)), ((2, 2), (2, 2)), ((1, 2, 2), (2, 2, 1))])
def test_rev(alpha, expected):
    assert cb.rev(alpha) == expected


@pytest.mark.parametrize("n, members, expected", [(5, (1, 3), (2, 4)), (4, (1, 3), (1, 3)), (4, (), ())])
def test_sub(n, members, expected):
    assert cb.sub(S(n, *members)) == S(n, *expected)


def test_descent_set_examples():
    assert cb.descent_set((5, 2, 3, 4, 1)) == S(5, 1, 4)
    assert cb.descent_set(cb.identity(6)) == IndexSet(6)
    for n in range(1, 7):
        assert cb.descent_set(cb.longest_word(n)) == IndexSet.full(n)


def test_longest_word_and_products():
    assert cb.longest_word(4) == (4, 3, 2, 1)
    w0 = cb.longest_word(5)
    assert cb.compose(w0, w0) == cb.identity(5)
    # (u v)(i) = u(v(i)): apply the right factor first.
    u, v = (2, 3, 1), (1, 3, 2)
    assert cb.compose(u, v) == (2, 1, 3)
    assert cb.compose(v, u) == (3, 2, 1)


def test_cycle_notation():
    assert cb.cycle(3, 1, 2, 3) == (2, 3, 1)
    assert cb.cycle(4, 2, 4) == (1, 4, 3, 2)
    assert cb.cycle(3, 1) == (1, 2, 3)


def test_enumeration_counts_and_order():
    assert len(list(cb.enumerate_compositions(4))) == 8
    assert list(cb.enumerate_compositions(3)) == [(3,), (1, 2), (2, 1), (1, 1, 1)]
    perms = list(cb.enumerate_permutations(4))
    assert len(perms) == 24 and perms == sorted(perms)
    assert list(cb.enumerate_compositions(0)) == [()]
    assert [sum(1 for _ in cb.partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_text_formats():
    assert cb.format_composition((1, 3)) == "1,3"
    assert cb.parse_composition("1,3", 4) == (1, 3)
    assert str(S(5, 1, 3)) == "{1,3}"
    assert cb.parse_index_set("{1,3}", 5) == S(5, 1, 3)
    assert cb.parse_index_set("{}", 5) == IndexSet(5)
    with pytest.raises(ValueError):
        cb.parse_composition("2,3", 4)
    with pytest.raises(ValueError):
        cb.parse_composition("0,4", 4)
    with pytest.raises(ValueError):
        cb.parse_index_set("{5}", 5)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        IndexSet(3, 0b100)
    with pytest.raises(ValueError):
        cb.check_permutation((1, 1, 2))
    with pytest.raises(ValueError):
        cb.check_n(17)


perms = st.integers(1, 8).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


@given(perms)
def test_inverse_is_two_sided(w):
    e = cb.identity(len(w))
    assert cb.compose(w, cb.inverse(w)) == e == cb.compose(cb.inverse(w), w)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(*[st.permutations(list(range(1, n + 1)))] * 3)))
def test_compose_is_associative(triple):
    u, v, w = map(tuple, triple)
    assert cb.compose(cb.compose(u, v), w) == cb.compose(u, cb.compose(v, w))


def test_descent_classes_have_multinomial_sizes():
    # |{w : Des w subset of gaps^-1(alpha)}| = n! / prod(alpha_i!)
    n = 5
    for alpha in cb.enumerate_compositions(n):
        I = cb.gaps_inv(alpha)
        count = sum(1 for w in cb.enumerate_permutations(n) if cb.descent_set(w).issubset(I))
        assert count == math.factorial(n) // math.prod(math.factorial(a) for a in alpha)
