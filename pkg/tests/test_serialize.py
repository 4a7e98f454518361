import json

from hypothesis import given

from charclass import GradedClass, delta_star, kappa, make_ring, normalize, vanishes_on_boundary
from charclass.serialize import class_from_json, class_to_json, dumps, sigma_to_json, verdict_to_json
from strategies import ring_and_class


def test_class_schema():
    ring = make_ring(4)
    x = GradedClass(ring, {ring.monomial(p1=1): 2})
    assert dumps(class_to_json(x)) == (
        '{"coeff":"Z","flavor":"SO","d":4,"terms":[{"coef":"2","exps":{"p1":1,"p2":0,"e":0}}]}'
    )


def test_sigma_and_verdicts():
    assert sigma_to_json(delta_star(kappa(1))) == {
        "sigma_star": {"coeff": "Z", "flavor": "SO", "d": 3, "terms": []}
    }
    ring = make_ring(2)
    good = vanishes_on_boundary(3, GradedClass.gen(ring, "e", 2))
    assert verdict_to_json(good) == {"outcome": "guaranteed-zero", "reason": "pontrjagin-monomial"}
    bad = verdict_to_json(vanishes_on_boundary(3, GradedClass.gen(ring, "e", 3)))
    assert bad["outcome"] == "not-guaranteed"
    assert bad["witness"]["sigma_star"]["terms"] == [{"coef": "2", "exps": {"p1": 1, "e": 0}}]


def test_rational_coefficients_are_strings():
    ring = make_ring(2, "SO", "Q")
    from fractions import Fraction

    x = GradedClass(ring, {ring.monomial(e=1): Fraction(-3, 4)})
    assert class_to_json(x)["terms"][0]["coef"] == "-3/4"


@given(ring_and_class())
def test_json_round_trip(rc):
    ring, x = rc
    x = normalize(ring, x)
    obj = json.loads(dumps(class_to_json(x)))
    assert class_from_json(obj, ring.torsion_mode.value) == x
