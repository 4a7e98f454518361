"""Pullback and Gysin pushforward for the sphere bundle S(gamma_{d+1}) -> BSO(d+1).

The total space of the unit sphere bundle of the universal (d+1)-plane bundle
is BSO(d), so both maps run between the ring in dimension ``d`` (fiber side)
and the ring in dimension ``d + 1`` (base side).  The unoriented versions use
BO(d) -> BO(d+1) in the same way.
"""

from __future__ import annotations

from .errors import RingMismatchError
from .ring import GradedClass, RingSpec, normalize

__all__ = ["pullback", "pushforward", "euler_characteristic_of_sphere"]


def euler_characteristic_of_sphere(d: int) -> int:
    return 1 + (-1) ** d


def _check_ring(x: GradedClass, d: int, what: str) -> None:
    if x.ring.d != d:
        raise RingMismatchError(f"{what} must live in dimension {d}, got {x.ring}")


def pullback(d: int, y: GradedClass) -> GradedClass:
    """Restrict a class on the base ring (dimension ``d + 1``) to the fiber ring (dimension ``d``).

    Pontrjagin and Stiefel-Whitney classes pull back to the classes of the
    same name while those exist in dimension ``d``; everything above the rank
    bound and the Euler class of the base go to zero.
    """
    _check_ring(y, d + 1, "pullback input")
    base = y.ring
    fiber = base.at(d)
    # image index of each base generator, or None if it dies
    image = [fiber.index.get(name) if name != "e" else None for name in base.generators]
    out = {}
    for m, c in y.terms.items():
        if any(k and image[i] is None for i, k in enumerate(m)):
            continue
        n = [0] * fiber.ngens
        for i, k in enumerate(m):
            if k:
                n[image[i]] = k
        n = tuple(n)
        out[n] = out.get(n, 0) + c
    return normalize(fiber, GradedClass._trusted(fiber, out))


def pushforward(d: int, x: GradedClass) -> GradedClass:
    """Gysin map from the fiber ring (dimension ``d``) to the base ring (dimension ``d + 1``).

    After normalizing, each monomial is ``p^K * e^s`` with ``s`` in {0, 1}.
    By the projection formula the image is ``p^K * pi_!(e^s)``, where
    ``pi_!(1) = 0`` for degree reasons and ``pi_!(e)`` is the Euler
    characteristic of the fiber sphere.  Lowers degree by ``d``.
    """
    _check_ring(x, d, "pushforward input")
    fiber = x.ring
    base = fiber.at(d + 1)
    if not fiber.oriented:
        # pi^* is onto and pi_!(1) = chi(S^d) = 0 mod 2
        return GradedClass.zero(base)
    x = normalize(fiber, x)
    ei = fiber.euler_index
    if ei is None:
        return GradedClass.zero(base)
    chi = euler_characteristic_of_sphere(d)
    out = {}
    for m, c in x.terms.items():
        if m[ei] == 0:
            continue
        n = [0] * base.ngens
        for i in range(ei):
            n[base.index[fiber.generators[i]]] = m[i]
        n = tuple(n)
        out[n] = out.get(n, 0) + chi * c
    return normalize(base, GradedClass._trusted(base, out))
