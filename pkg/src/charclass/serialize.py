"""JSON encoding of classes, delta* values, verdicts and table rows.

A class is encoded as::

    {"coeff": "Z", "flavor": "SO", "d": 4,
     "terms": [{"coef": "2", "exps": {"p1": 1, "p2": 0, "e": 0}}]}

with coefficients as decimal strings (``"1/2"`` for rationals).  Values on
Q BSO(d+1)_+ are wrapped as ``{"sigma_star": <class>}``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import InvalidInputError
from .ring import GradedClass, make_ring
from .tabulate import TableRow
from .universal import PrimitiveClass, Verdict

__all__ = ["class_to_json", "class_from_json", "sigma_to_json", "verdict_to_json", "row_to_json", "dumps"]


def class_to_json(x: GradedClass) -> dict:
    ring = x.ring
    return {
        "coeff": ring.coeff.value,
        "flavor": ring.flavor.value,
        "d": ring.d,
        "terms": [{"coef": str(c), "exps": ring.exps(m)} for m, c in x.sorted_terms()],
    }


def class_from_json(obj: dict, torsion_mode: str = "standard") -> GradedClass:
    """Inverse of :func:`class_to_json`; the torsion mode is not part of the encoding."""
    try:
        ring = make_ring(obj["d"], obj["flavor"], obj["coeff"], torsion_mode)
        terms = {}
        for t in obj["terms"]:
            m = ring.monomial(**t["exps"])
            terms[m] = terms.get(m, 0) + Fraction(t["coef"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed class encoding: {exc}") from None
    return GradedClass(ring, terms)


def sigma_to_json(c: PrimitiveClass) -> dict:
    return {"sigma_star": class_to_json(c.y)}


def verdict_to_json(v: Verdict) -> dict:
    if v.guaranteed_zero:
        return {"outcome": v.outcome.value, "reason": v.reason.value}
    return {"outcome": v.outcome.value, "witness": sigma_to_json(v.witness)}


def row_to_json(row: TableRow) -> dict:
    return {
        "label": row.label,
        "X": row.integrand,
        "exps": row.ring.exps(row.monomial),
        "class_degree": row.class_degree,
        "degenerate": row.degenerate,
        "delta": sigma_to_json(row.delta_value),
        "verdict": verdict_to_json(row.verdict),
    }


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))
