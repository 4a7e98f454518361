import pytest

from charclass import (
    GradedClass,
    InvalidInputError,
    InvariantViolation,
    Outcome,
    PrimitiveClass,
    Reason,
    RingMismatchError,
    Verdict,
    delta_star,
    kappa,
    make_ring,
    make_universal,
    rho,
    vanishes_on_boundary,
)
from charclass.ring import basis_up_to


def mono(ring, c=1, **exps):
    return GradedClass(ring, {ring.monomial(**exps): c})


def sigma(ring, c=1, **exps):
    return PrimitiveClass(ring, mono(ring, c, **exps))


R2, R3, R4, R5 = (make_ring(d) for d in (2, 3, 4, 5))


def test_make_universal():
    k = make_universal(R2, GradedClass.gen(R2, "e", 2))
    assert k.x == GradedClass.gen(R2, "p1")
    assert k.degree == 2
    assert make_universal(R4, GradedClass.one(R4)).degree == -4
    assert make_universal(R4, mono(R4, p1=1, e=1)).degree == 4


def test_make_universal_rejects_inhomogeneous():
    with pytest.raises(InvalidInputError):
        make_universal(R4, GradedClass.gen(R4, "p1") + GradedClass.gen(R4, "p2"))


@pytest.mark.parametrize(
    "i, exps, degree",
    [(1, {"p1": 1}, 2), (2, {"p1": 1, "e": 1}, 4), (3, {"p1": 2}, 6)],
)
def test_kappa(i, exps, degree):
    k = kappa(i)
    assert k.x == mono(R2, **exps)
    assert k.degree == degree


@pytest.mark.parametrize("bad", [0, -1, True, 1.0])
def test_kappa_index(bad):
    with pytest.raises(InvalidInputError):
        kappa(bad)
    with pytest.raises(InvalidInputError):
        rho(bad)


def test_rho():
    assert rho(1) == sigma(R3, p1=1)
    assert rho(1).degree == 4
    assert rho(2).degree == 8


@pytest.mark.parametrize("i", range(0, 21))
def test_delta_kappa_parity(i):
    assert delta_star(kappa(2 * i + 1)).is_zero()
    if i >= 1:
        assert delta_star(kappa(2 * i)) == 2 * rho(i)


def test_delta_d4():
    assert delta_star(make_universal(R4, mono(R4, p1=2))).is_zero()
    assert delta_star(make_universal(R4, mono(R4, p1=1, e=1))) == sigma(R5, 2, p1=1)


def test_delta_rendering():
    assert str(delta_star(kappa(2))) == "2*sigma(p1)"
    assert str(delta_star(kappa(1))) == "0"
    assert str(delta_star(make_universal(R4, GradedClass.gen(R4, "e")))) == "2*sigma(1)"


@pytest.mark.parametrize("i", range(0, 10))
def test_handlebody_kappa_verdicts(i):
    v = vanishes_on_boundary(3, GradedClass.gen(R2, "e", 2 * i + 2))
    assert v.outcome is Outcome.GUARANTEED_ZERO
    assert v.reason is Reason.PONTRJAGIN_MONOMIAL


def test_even_dim_w():
    for m in basis_up_to(R3, 30):
        v = vanishes_on_boundary(4, GradedClass(R3, {m: 1}))
        assert v.reason is Reason.EVEN_DIM_W


def test_not_guaranteed_witness():
    v = vanishes_on_boundary(3, GradedClass.gen(R2, "e", 3))
    assert v.outcome is Outcome.NOT_GUARANTEED
    assert v.witness == 2 * rho(1)
    assert str(v) == "not-guaranteed: witness 2*sigma(p1)"


def test_mod_two_reasons():
    ring = make_ring(2, "O")
    assert vanishes_on_boundary(3, GradedClass.gen(ring, "w2", 5)).reason is Reason.MOD_TWO
    f2 = make_ring(2, "SO", "F2")
    v = vanishes_on_boundary(3, GradedClass.gen(f2, "e", 3))
    assert v.reason is Reason.MOD_TWO
    assert delta_star(make_universal(f2, GradedClass.gen(f2, "e", 3))).is_zero()


def test_vanishes_dimension_mismatch():
    with pytest.raises(RingMismatchError):
        vanishes_on_boundary(4, GradedClass.gen(R2, "e"))
    with pytest.raises(InvalidInputError):
        vanishes_on_boundary(0, GradedClass.one(make_ring(0)))


def test_mixed_class_with_euler_term():
    x = mono(R4, p1=2) + mono(R4, 3, p1=1, e=1)
    v = vanishes_on_boundary(5, x)
    assert v.outcome is Outcome.NOT_GUARANTEED
    assert v.witness == sigma(R5, 6, p1=1)


def test_verdict_invariants():
    with pytest.raises(InvariantViolation):
        Verdict(Outcome.NOT_GUARANTEED, witness=PrimitiveClass(R3, GradedClass.zero(R3)))
    with pytest.raises(InvariantViolation):
        Verdict(Outcome.GUARANTEED_ZERO)


def test_rational_coefficients():
    q2 = make_ring(2, "SO", "Q")
    from fractions import Fraction

    x = Fraction(1, 2) * GradedClass.gen(q2, "e", 3)
    assert delta_star(make_universal(q2, x)) == PrimitiveClass(q2.at(3), GradedClass.gen(q2.at(3), "p1"))
