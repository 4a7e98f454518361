"""The Thom module ``u * H*(BSO(d))`` of the spectrum MTSO(d).

The Thom class ``u`` has degree ``-d`` and is never a ring generator: a
:class:`ThomClass` can be added to another one and scaled by ring elements,
but two Thom classes cannot be multiplied.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RingMismatchError
from .ring import GradedClass, RingSpec, normalize

__all__ = ["ThomClass", "thom_wrap", "thom_unwrap"]


@dataclass(frozen=True)
class ThomClass:
    ring: RingSpec
    body: GradedClass

    def __post_init__(self):
        if self.body.ring != self.ring:
            raise RingMismatchError(f"body lives in {self.body.ring}, not {self.ring}")
        object.__setattr__(self, "body", normalize(self.ring, self.body))

    @property
    def degree(self) -> "int | None":
        """Total degree ``deg X - d``; may be negative.  ``None`` for zero."""
        deg = self.body.degree
        return None if deg is None else deg - self.ring.d

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def __add__(self, other: "ThomClass") -> "ThomClass":
        if not isinstance(other, ThomClass):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatchError(f"{other.ring} vs {self.ring}")
        return ThomClass(self.ring, self.body + other.body)

    def __neg__(self) -> "ThomClass":
        return ThomClass(self.ring, -self.body)

    def __sub__(self, other: "ThomClass") -> "ThomClass":
        return self + (-other)

    def __rmul__(self, a) -> "ThomClass":
        # module action of scalars and of H*(BSO(d)); ThomClass * ThomClass
        # is intentionally left undefined
        if isinstance(a, ThomClass):
            return NotImplemented
        return ThomClass(self.ring, a * self.body)

    def __str__(self) -> str:
        body = str(self.body)
        if body == "0":
            return "0"
        return f"u*({body})" if len(self.body) > 1 else f"u*{body}"


def thom_wrap(ring: RingSpec, x: GradedClass) -> ThomClass:
    """The class ``u * x`` under the Thom isomorphism."""
    return ThomClass(ring, x)


def thom_unwrap(t: ThomClass) -> GradedClass:
    return t.body
