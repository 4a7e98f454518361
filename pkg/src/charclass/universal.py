"""Universal tangential classes and their image under delta*.

For a class ``X`` on BSO(d), the universal tangential class ``X^ = sigma*(uX)``
lives on the infinite loop space of MTSO(d) and has degree ``deg X - d``.  For
a bundle of closed d-manifolds it pulls back to ``pi_! X(T^pi E)``; for d = 2,
``kappa_i`` is the class of ``e^(i+1)``.

The map ``delta: Q BSO(d+1)_+ -> Omega^infty MTSO(d)`` models restriction to
the boundary.  In cohomology ``delta*(X^) = sigma*(pi_! X)`` with ``pi_!`` the
sphere-bundle Gysin map, so ``delta*`` is computed from
:func:`charclass.gysin.pushforward`.  Classes on Q BSO(d+1)_+ are carried by
their spectrum-level representative (:class:`PrimitiveClass`), and zero tests
are performed on that representative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .coeff import CoeffRing
from .errors import InvalidInputError, InvariantViolation, RingMismatchError
from .gysin import pushforward
from .ring import Flavor, GradedClass, RingSpec, make_ring, normalize

__all__ = [
    "UniversalClass",
    "PrimitiveClass",
    "Verdict",
    "Outcome",
    "Reason",
    "make_universal",
    "kappa",
    "rho",
    "delta_star",
    "vanishes_on_boundary",
]


@dataclass(frozen=True)
class UniversalClass:
    ring: RingSpec
    x: GradedClass

    def __post_init__(self):
        if self.x.ring != self.ring:
            raise RingMismatchError(f"{self.x.ring} vs {self.ring}")
        if not self.x.is_homogeneous():
            raise InvalidInputError(f"universal classes need a homogeneous integrand, got {self.x}")
        object.__setattr__(self, "x", normalize(self.ring, self.x))

    @property
    def degree(self) -> "int | None":
        deg = self.x.degree
        return None if deg is None else deg - self.ring.d

    def is_zero(self) -> bool:
        return self.x.is_zero()

    def __str__(self) -> str:
        return f"hat({self.x})"


@dataclass(frozen=True)
class PrimitiveClass:
    """``sigma*(y)`` on Q BSO(d+1)_+, represented by ``y`` on BSO(d+1)."""

    base_ring: RingSpec
    y: GradedClass

    def __post_init__(self):
        if self.y.ring != self.base_ring:
            raise RingMismatchError(f"{self.y.ring} vs {self.base_ring}")

    @property
    def degree(self) -> "int | None":
        return self.y.degree

    def is_zero(self) -> bool:
        return self.y.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: "PrimitiveClass") -> "PrimitiveClass":
        if not isinstance(other, PrimitiveClass):
            return NotImplemented
        return PrimitiveClass(self.base_ring, self.y + other.y)

    def __rmul__(self, a) -> "PrimitiveClass":
        return PrimitiveClass(self.base_ring, a * self.y)

    def __str__(self) -> str:
        return format_sigma(self)


def format_sigma(c: PrimitiveClass) -> str:
    """Render as a sum of ``coef*sigma(monomial)`` terms, e.g. ``2*sigma(p1)``."""
    if c.is_zero():
        return "0"
    ring = c.base_ring
    out = []
    for m, coef in c.y.sorted_terms():
        neg = coef < 0
        mag = -coef if neg else coef
        body = f"sigma({ring.format_monomial(m)})"
        if mag != 1:
            body = f"{mag}*{body}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


class Outcome(str, enum.Enum):
    GUARANTEED_ZERO = "guaranteed-zero"
    NOT_GUARANTEED = "not-guaranteed"


class Reason(str, enum.Enum):
    EVEN_DIM_W = "even-dim-W"
    PONTRJAGIN_MONOMIAL = "pontrjagin-monomial"
    MOD_TWO = "mod-two"


@dataclass(frozen=True)
class Verdict:
    """Whether ``r*X^`` is forced to vanish on BDiff(W).

    ``NOT_GUARANTEED`` only says the factorisation through Q BSO(d+1)_+ does
    not kill the class; it is not a proof of non-vanishing.
    """

    outcome: Outcome
    reason: Optional[Reason] = None
    witness: Optional[PrimitiveClass] = None

    def __post_init__(self):
        if self.outcome is Outcome.NOT_GUARANTEED:
            if self.witness is None or self.witness.is_zero():
                raise InvariantViolation("not-guaranteed verdict needs a nonzero witness")
        elif self.reason is None:
            raise InvariantViolation("guaranteed-zero verdict needs a reason")

    @property
    def guaranteed_zero(self) -> bool:
        return self.outcome is Outcome.GUARANTEED_ZERO

    def __str__(self) -> str:
        if self.guaranteed_zero:
            return f"{self.outcome.value}: {self.reason.value}"
        return f"{self.outcome.value}: witness {self.witness}"


def make_universal(ring: RingSpec, x: GradedClass) -> UniversalClass:
    return UniversalClass(ring, x)


def _surface_ring(ring: Optional[RingSpec]) -> RingSpec:
    if ring is None:
        return make_ring(2)
    if ring.d != 2 or not ring.oriented:
        raise InvalidInputError(f"kappa classes live over SO(2), got {ring}")
    return ring


def kappa(i: int, ring: Optional[RingSpec] = None) -> UniversalClass:
    """The MMM class ``kappa_i``, i.e. the universal class of ``e^(i+1)`` for d = 2."""
    if isinstance(i, bool) or not isinstance(i, int) or i < 1:
        raise InvalidInputError(f"kappa index must be >= 1, got {i!r}")
    ring = _surface_ring(ring)
    return UniversalClass(ring, GradedClass.gen(ring, "e", i + 1))


def rho(i: int, ring: Optional[RingSpec] = None) -> PrimitiveClass:
    """``rho_i = sigma*(p1^i)`` on Q BSO(3)_+; ``ring`` is the d = 2 ring (or None)."""
    if isinstance(i, bool) or not isinstance(i, int) or i < 1:
        raise InvalidInputError(f"rho index must be >= 1, got {i!r}")
    base = _surface_ring(ring).at(3)
    return PrimitiveClass(base, GradedClass.gen(base, "p1", i))


def delta_star(c: UniversalClass) -> PrimitiveClass:
    """``delta*(X^) = sigma*(pi_! X)``."""
    d = c.ring.d
    return PrimitiveClass(c.ring.at(d + 1), pushforward(d, c.x))


def vanishes_on_boundary(dim_w: int, x: GradedClass) -> Verdict:
    """Decide whether the universal class of ``x`` is killed by restriction from BDiff(W).

    ``x`` lives in dimension ``dim_w - 1``.  Guaranteed zero when the ring is
    mod two, when ``dim W`` is even, or when ``x`` involves no odd power of
    the Euler class; otherwise the nonzero ``delta*`` value is returned as a
    witness.
    """
    if isinstance(dim_w, bool) or not isinstance(dim_w, int) or dim_w < 1:
        raise InvalidInputError(f"dim W must be >= 1, got {dim_w!r}")
    ring = x.ring
    if ring.d != dim_w - 1:
        raise RingMismatchError(f"class lives in dimension {ring.d}, boundary of W has dimension {dim_w - 1}")
    cls = UniversalClass(ring, x)
    delta = delta_star(cls)

    if ring.flavor is Flavor.UNORIENTED:
        verdict = Verdict(Outcome.GUARANTEED_ZERO, Reason.MOD_TWO)
    elif dim_w % 2 == 0:
        verdict = Verdict(Outcome.GUARANTEED_ZERO, Reason.EVEN_DIM_W)
    elif ring.coeff is CoeffRing.F2:
        verdict = Verdict(Outcome.GUARANTEED_ZERO, Reason.MOD_TWO)
    else:
        ei = ring.euler_index
        if ei is None or all(m[ei] == 0 for m in cls.x.terms):
            verdict = Verdict(Outcome.GUARANTEED_ZERO, Reason.PONTRJAGIN_MONOMIAL)
        else:
            verdict = Verdict(Outcome.NOT_GUARANTEED, witness=delta)

    if verdict.guaranteed_zero != delta.is_zero():
        raise InvariantViolation(f"verdict {verdict} disagrees with delta* = {delta} for {x}")
    return verdict
