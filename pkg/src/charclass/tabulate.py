"""Tables of universal tangential classes, their delta* values and boundary verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .errors import InvalidInputError, InvariantViolation
from .ring import GradedClass, Monomial, RingSpec, basis_of_degree
from .universal import (
    PrimitiveClass,
    UniversalClass,
    Verdict,
    delta_star,
    kappa,
    vanishes_on_boundary,
)

__all__ = ["TableRow", "enumerate_table", "kappa_table", "format_table"]


@dataclass(frozen=True)
class TableRow:
    ring: RingSpec
    monomial: Monomial
    class_degree: int
    delta_value: PrimitiveClass
    verdict: Verdict
    label: Optional[str] = None

    def __post_init__(self):
        if self.verdict.guaranteed_zero != self.delta_value.is_zero():
            raise InvariantViolation(f"inconsistent row for {self.ring.format_monomial(self.monomial)}")

    @property
    def degenerate(self) -> bool:
        """Classes of degree <= 0 (including the image of the Thom class itself)."""
        return self.class_degree <= 0

    @property
    def integrand(self) -> str:
        return self.ring.format_monomial(self.monomial)


def _row(ring: RingSpec, m: Monomial, label: Optional[str] = None) -> TableRow:
    x = GradedClass.from_monomial(ring, m)
    cls = UniversalClass(ring, x)
    return TableRow(
        ring=ring,
        monomial=m,
        class_degree=cls.degree,
        delta_value=delta_star(cls),
        verdict=vanishes_on_boundary(ring.d + 1, x),
        label=label,
    )


def enumerate_table(ring: RingSpec, max_class_degree: int) -> List[TableRow]:
    """One row per normalized monomial ``X`` with ``deg X - d <= max_class_degree``.

    Rows are ordered by degree, then canonically within a degree.
    """
    rows = []
    for n in range(max_class_degree + ring.d + 1):
        for m in basis_of_degree(ring, n):
            rows.append(_row(ring, m))
    return rows


def kappa_table(max_i: int, ring: Optional[RingSpec] = None) -> List[TableRow]:
    """Rows for kappa_1 .. kappa_max_i with verdicts for dim W = 3."""
    if isinstance(max_i, bool) or not isinstance(max_i, int) or max_i < 1:
        raise InvalidInputError(f"max_i must be >= 1, got {max_i!r}")
    rows = []
    for i in range(1, max_i + 1):
        k = kappa(i, ring)
        (m,) = k.x.terms
        rows.append(_row(k.ring, m, label=f"kappa_{i}"))
    return rows


def format_table(rows: List[TableRow]) -> str:
    header = ("class", "X", "deg", "delta*", "verdict")
    body = []
    for row in rows:
        name = row.label or f"hat({row.integrand})"
        if row.degenerate:
            name += " [degenerate]"
        body.append((name, row.integrand, str(row.class_degree), str(row.delta_value), str(row.verdict)))
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header) - 1)]
    lines = []
    for r in [header] + body:
        cells = [c.ljust(w) for c, w in zip(r, widths)] + [r[-1]]
        lines.append("  ".join(cells))
    return "\n".join(lines)
