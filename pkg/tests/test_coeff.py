import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charclass import CoeffRing, Coefficient, RingMismatchError, coeff_add, coeff_mul

Z, Q, F2 = CoeffRing.INTEGERS, CoeffRing.RATIONALS, CoeffRing.F2


@pytest.mark.parametrize(
    "ring, a, b, total",
    [(Z, 1, 1, 2), (F2, 1, 1, 0), (Q, Fraction(1, 2), Fraction(1, 3), Fraction(5, 6))],
)
def test_add_examples(ring, a, b, total):
    assert coeff_add(Coefficient(ring, a), Coefficient(ring, b)) == Coefficient(ring, total)


@pytest.mark.parametrize(
    "ring, a, b, product",
    [(Z, 2, 3, 6), (F2, 1, 1, 1), (Q, Fraction(2, 3), Fraction(3, 2), 1)],
)
def test_mul_examples(ring, a, b, product):
    assert coeff_mul(Coefficient(ring, a), Coefficient(ring, b)) == Coefficient(ring, product)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        Coefficient(Z, 1) + Coefficient(Q, 1)
    with pytest.raises(RingMismatchError):
        Coefficient(F2, 1) * Coefficient(Z, 1)


def test_canonical_forms():
    assert Coefficient(F2, 5).value == 1
    assert Coefficient(F2, -1).value == 1
    assert Coefficient(Q, Fraction(4, 6)).value == Fraction(2, 3)
    assert Coefficient(Q, Fraction(4, 2)).value == 2
    assert str(Coefficient(Q, Fraction(-3, 9))) == "-1/3"


def test_no_overflow():
    two = Coefficient(Z, 2)
    acc = Coefficient(Z, 1)
    for _ in range(64):
        acc = acc * two
    assert acc.value == 2**64
    assert (acc * acc).value == 2**128


def _sample(rng, ring):
    if ring is Q:
        return Fraction(rng.randint(-50, 50), rng.randint(1, 12))
    return rng.randint(-(10**20), 10**20)


@pytest.mark.parametrize("ring", [Z, Q, F2])
def test_ring_laws_sweep(ring):
    rng = random.Random(20261015)
    for _ in range(10_000):
        a, b, c = (Coefficient(ring, _sample(rng, ring)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


@given(st.integers())
def test_f2_self_negation(n):
    a = Coefficient(F2, n)
    assert -a == a
    assert (a + a).value == 0
