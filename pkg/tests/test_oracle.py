"""The engine against the brute-force oracles, plus sanity checks on the oracles themselves."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charclass import GradedClass, basis_of_degree, make_ring, normalize, pushforward
from charclass.ring import basis_up_to
from oracle import (
    count_monomials_oracle,
    list_monomials_oracle,
    normalize_oracle,
    pushforward_oracle,
    sphere_euler_characteristic,
)
from strategies import ring_and_class


def mono(ring, c=1, **exps):
    return GradedClass(ring, {ring.monomial(**exps): c})


@pytest.mark.parametrize("seed", range(10))
def test_normalize_oracle_examples(seed):
    r2, r3 = make_ring(2), make_ring(3)
    assert normalize_oracle(r2, mono(r2, e=5), seed) == mono(r2, p1=2, e=1)
    assert normalize_oracle(r3, mono(r3, e=2, p1=1), seed).is_zero()
    x = mono(r2, p1=3) + mono(r2, 4, e=1)
    assert normalize_oracle(r2, x, seed) == x


def test_pushforward_oracle_examples():
    r2, r3 = make_ring(2), make_ring(3)
    assert pushforward_oracle(2, mono(r2, p1=1, e=1)) == mono(r3, 2, p1=1)
    assert pushforward_oracle(2, mono(r2, p1=3)).is_zero()
    assert pushforward_oracle(3, mono(r3, e=1)).is_zero()


def test_count_oracle_examples():
    assert count_monomials_oracle(make_ring(2), 4) == 1
    assert count_monomials_oracle(make_ring(4), 0) == 1
    assert count_monomials_oracle(make_ring(4), 8) == 3


def test_sphere_euler_characteristic():
    assert [sphere_euler_characteristic(d) for d in range(6)] == [2, 0, 2, 0, 2, 0]


@settings(max_examples=300)
@given(ring_and_class(max_exp=7), st.integers(0, 2**32))
def test_confluence(rc, seed):
    ring, x = rc
    assert normalize_oracle(ring, x, seed) == normalize(ring, x)


@pytest.mark.parametrize("flavor", ["SO", "O"])
@pytest.mark.parametrize("d", range(0, 9))
def test_pushforward_matches_oracle(d, flavor):
    ring = make_ring(d, flavor)
    for m in basis_up_to(ring, 24 if flavor == "SO" else 10):
        x = GradedClass(ring, {m: 1})
        assert pushforward(d, x) == pushforward_oracle(d, x)


@pytest.mark.parametrize("d", range(0, 7))
def test_unoriented_basis_matches_oracle(d):
    ring = make_ring(d, "O")
    for n in range(0, 13):
        listed = [ring.monomial(**e) for e in list_monomials_oracle(ring, n)]
        assert sorted(listed) == sorted(basis_of_degree(ring, n))
