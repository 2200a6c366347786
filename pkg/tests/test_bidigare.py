import itertools
import random

import pytest
from hypothesis import given, strategies as st

from descalg import combinatorics as cb
from descalg import face_monoid as fm
from descalg import group_algebra as ga
from descalg.bidigare import (DescentAlgebraElement, act_by_descent_element, check_standard_face_identity,
                              from_group_algebra, identity_face_element, rho, rho_inv, to_group_algebra)


def B(alpha):
    return DescentAlgebraElement.basis_element(alpha)


def random_descent(n, rng):
    return DescentAlgebraElement(n, {a: rng.randint(-3, 3) for a in cb.enumerate_compositions(n)})


def test_rho_examples():
    for n in range(1, 6):
        assert rho(B((n,))) == fm.FaceAlgebraElement.one(fm.face_basis(n))
    assert rho(B((2, 1))) == fm.btilde((2, 1))
    assert len(rho(B((2, 1))).support()) == 3
    for n in range(1, 5):
        assert rho(from_group_algebra(ga.w0(n))) == fm.w0tilde(n)


def test_rho_inv_examples():
    for n in range(1, 6):
        for alpha in cb.enumerate_compositions(n):
            assert rho_inv(fm.btilde(alpha)) == B(alpha)
    for n in range(1, 5):
        assert to_group_algebra(rho_inv(fm.w0tilde(n))) == ga.w0(n)
    with pytest.raises(ValueError, match="orbit-sum"):
        rho_inv(fm.face_element(3, {fm.parse_face("1,2|3"): 1}))


def test_from_group_algebra():
    x = from_group_algebra(ga.w0(3))
    assert x.coords == {(3,): 1, (1, 2): -1, (2, 1): -1, (1, 1, 1): 1}
    # (1 3) is the longest word of S_3 and lies in the descent algebra; (1 2) does not.
    assert from_group_algebra(ga.permutation_element((3, 2, 1))) is not None
    assert from_group_algebra(ga.permutation_element((2, 1, 3))) is None
    assert from_group_algebra(ga.permutation_element((1, 3, 2, 4))) is None


@given(st.integers(0, 2**32), st.integers(1, 5))
def test_round_trips(seed, n):
    rng = random.Random(seed)
    x = random_descent(n, rng)
    assert from_group_algebra(to_group_algebra(x)) == x
    assert rho_inv(rho(x)) == x


def test_json_round_trip():
    x = DescentAlgebraElement(3, {(1, 2): 2, (3,): "1/3"})
    assert x.to_json() == '{"3": "1/3", "1,2": "2"}'
    assert DescentAlgebraElement.from_json(3, x.to_json()) == x


def test_descent_algebra_closed_under_product():
    for n in range(1, 6):
        comps = list(cb.enumerate_compositions(n))
        for a, b in itertools.product(comps, repeat=2):
            assert from_group_algebra(ga.basis_B_comp(a) * ga.basis_B_comp(b)) is not None


def test_rho_anti_morphism_random_n5():
    rng = random.Random(17)
    comps = list(cb.enumerate_compositions(5))
    for _ in range(12):
        a, b = rng.choice(comps), rng.choice(comps)
        assert rho(B(a) * B(b)) == rho(B(b)) * rho(B(a))


def test_conjugation_transport():
    for n in range(1, 5):
        w = fm.w0tilde(n)
        for alpha in cb.enumerate_compositions(n):
            bt = fm.btilde(alpha)
            assert w * bt * w == fm.btilde(cb.rev(alpha))
            assert (w * bt) * (w * bt) == fm.btilde(cb.rev(alpha)) * bt


@given(st.integers(0, 2**32), st.integers(1, 5))
def test_image_is_invariant(seed, n):
    rng = random.Random(seed)
    y = rho(random_descent(n, rng))
    w = tuple(rng.sample(range(1, n + 1), n))
    assert fm.act_on_element(w, y) == y


def test_identity_face_action_on_general_element():
    rng = random.Random(2)
    for n in range(1, 5):
        x = random_descent(n, rng)
        p = identity_face_element(n)
        assert rho(x) * p == act_by_descent_element(x, p)
        assert check_standard_face_identity((n,))
