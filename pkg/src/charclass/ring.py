"""Monomial rings of characteristic classes.

Two flavors are modelled:

* oriented (``SO``): the subring of H*(BSO(d)) generated by the Pontrjagin
  classes ``p1 .. pr`` (``r = d // 2``, ``deg pk = 4k``) and the Euler class
  ``e`` (``deg e = d``), subject to ``e^2 = p_{d/2}`` for even d and
  ``e^2 = 0`` for odd d.  In the ``standard`` torsion mode with integer
  coefficients the odd-d relation ``2e = 0`` is imposed as well.
* unoriented (``O``): H*(BO(d); F2), the polynomial ring on the
  Stiefel-Whitney classes ``w1 .. wd`` with ``deg wk = k``.

A monomial is a tuple of exponents indexed like ``RingSpec.generators``.
Generators are ordered ``p1 < p2 < ... < e`` and ``w1 < ... < wd``.

Every generator in play has even degree, except ``e`` for odd d, which
squares to zero; multiplication is therefore plain commutative
multiplication and no Koszul signs are needed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from functools import cached_property, lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Tuple

from .coeff import CoeffRing, Coefficient
from .errors import InvalidInputError, InvalidSpecError, RingMismatchError

__all__ = [
    "Flavor",
    "TorsionMode",
    "RingSpec",
    "Monomial",
    "GradedClass",
    "make_ring",
    "normalize",
    "mul",
    "basis_of_degree",
]

Monomial = Tuple[int, ...]


class Flavor(str, enum.Enum):
    ORIENTED = "SO"
    UNORIENTED = "O"


class TorsionMode(str, enum.Enum):
    STRICT_PAPER = "paper"
    STANDARD = "standard"


@dataclass(frozen=True)
class RingSpec:
    d: int
    flavor: Flavor = Flavor.ORIENTED
    coeff: CoeffRing = CoeffRing.INTEGERS
    torsion_mode: TorsionMode = TorsionMode.STANDARD
    generators: Tuple[str, ...] = field(init=False, repr=False, compare=False)
    degrees: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        try:
            flavor = Flavor(self.flavor)
            torsion = TorsionMode(self.torsion_mode)
        except ValueError as exc:
            raise InvalidSpecError(str(exc)) from None
        coeff = CoeffRing.parse(self.coeff)
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 0:
            raise InvalidSpecError(f"fiber dimension must be a nonnegative integer, got {self.d!r}")
        if flavor is Flavor.UNORIENTED and coeff is not CoeffRing.F2:
            raise InvalidSpecError("the unoriented flavor requires F2 coefficients")
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "torsion_mode", torsion)

        if flavor is Flavor.ORIENTED:
            r = self.d // 2
            names = [f"p{k}" for k in range(1, r + 1)]
            degs = [4 * k for k in range(1, r + 1)]
            # e is identified with 0 for d in {0, 1}
            if self.d >= 2:
                names.append("e")
                degs.append(self.d)
        else:
            names = [f"w{k}" for k in range(1, self.d + 1)]
            degs = list(range(1, self.d + 1))
        object.__setattr__(self, "generators", tuple(names))
        object.__setattr__(self, "degrees", tuple(degs))

    @property
    def oriented(self) -> bool:
        return self.flavor is Flavor.ORIENTED

    @property
    def rank_bound(self) -> int:
        """Number of Pontrjagin generators, ``d // 2`` (0 when unoriented)."""
        return self.d // 2 if self.oriented else 0

    @property
    def euler_index(self) -> "int | None":
        if self.oriented and self.d >= 2:
            return len(self.generators) - 1
        return None

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @cached_property
    def index(self) -> Mapping[str, int]:
        return {name: i for i, name in enumerate(self.generators)}

    @property
    def reduces_euler_mod_two(self) -> bool:
        """Whether ``2e = 0`` is imposed on top of ``e^2 = 0``."""
        return (
            self.euler_index is not None
            and self.d % 2 == 1
            and self.torsion_mode is TorsionMode.STANDARD
            and self.coeff is CoeffRing.INTEGERS
        )

    @property
    def kills_euler(self) -> bool:
        """Whether ``2e = 0`` forces ``e = 0`` because 2 is invertible."""
        return (
            self.euler_index is not None
            and self.d % 2 == 1
            and self.torsion_mode is TorsionMode.STANDARD
            and self.coeff is CoeffRing.RATIONALS
        )

    def at(self, d: int) -> "RingSpec":
        """The ring of the same flavor, coefficients and torsion mode in dimension ``d``."""
        return _ring_at(self, d)

    def degree(self, m: Monomial) -> int:
        return sum(k * g for k, g in zip(m, self.degrees))

    def unit(self) -> Monomial:
        return (0,) * self.ngens

    def monomial(self, **exps: int) -> Monomial:
        """Build a monomial from generator names, e.g. ``ring.monomial(p1=2, e=1)``."""
        m = [0] * self.ngens
        for name, k in exps.items():
            if name not in self.index:
                raise InvalidInputError(f"{name} is not a generator of {self}")
            if k < 0:
                raise InvalidInputError(f"negative exponent for {name}")
            m[self.index[name]] = k
        return tuple(m)

    def exps(self, m: Monomial) -> dict:
        return dict(zip(self.generators, m))

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for name, k in zip(self.generators, m):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts) if parts else "1"

    def check_monomial(self, m) -> Monomial:
        m = tuple(m)
        if len(m) != self.ngens or any((not isinstance(k, int)) or k < 0 for k in m):
            raise InvalidInputError(f"{m!r} is not a monomial of {self}")
        return m

    def __str__(self) -> str:
        s = f"{self.flavor.value}({self.d}; {self.coeff.value}"
        if self.oriented:
            s += f", {self.torsion_mode.value}"
        return s + ")"


@lru_cache(maxsize=None)
def _intern(ring: RingSpec) -> RingSpec:
    return ring


@lru_cache(maxsize=None)
def _ring_at(ring: RingSpec, d: int) -> RingSpec:
    return _intern(replace(ring, d=d))


def same_ring(a: RingSpec, b: RingSpec) -> bool:
    return a is b or a == b


def make_ring(d: int, flavor="SO", coeff=None, torsion_mode="standard") -> RingSpec:
    """Build a :class:`RingSpec`; ``coeff`` defaults to ``Z`` (oriented) or ``F2`` (unoriented)."""
    try:
        flavor = Flavor(flavor)
    except ValueError:
        raise InvalidSpecError(f"unknown flavor {flavor!r}") from None
    if coeff is None:
        coeff = CoeffRing.F2 if flavor is Flavor.UNORIENTED else CoeffRing.INTEGERS
    return _intern(RingSpec(d, flavor, CoeffRing.parse(coeff), torsion_mode))


def _is_scalar(value) -> bool:
    return isinstance(value, (Rational, Coefficient)) and not isinstance(value, bool)


def canonical_key(m: Monomial):
    """Sort key for the canonical monomial order within one degree."""
    return tuple(-k for k in m)


class GradedClass:
    """A finite sum of monomials with nonzero coefficients.

    The constructor stores terms as given (after canonicalising coefficients
    and dropping zeros); arithmetic operators return normalized results.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingSpec, terms: "Mapping[Monomial, object] | None" = None):
        self.ring = ring
        canon = ring.coeff.canon
        clean = {}
        for m, c in (terms or {}).items():
            c = canon(c)
            if c:
                clean[ring.check_monomial(m)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, ring: RingSpec, terms: dict) -> "GradedClass":
        """Wrap a dict of valid monomials with exact coefficients; only reduces mod 2 and drops zeros."""
        self = cls.__new__(cls)
        self.ring = ring
        if ring.coeff is CoeffRing.F2:
            self.terms = {m: 1 for m, c in terms.items() if c % 2}
        else:
            self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None
        return self

    @classmethod
    def zero(cls, ring: RingSpec) -> "GradedClass":
        return cls(ring)

    @classmethod
    def constant(cls, ring: RingSpec, c=1) -> "GradedClass":
        return cls(ring, {ring.unit(): c})

    @classmethod
    def one(cls, ring: RingSpec) -> "GradedClass":
        return cls.constant(ring, 1)

    @classmethod
    def from_monomial(cls, ring: RingSpec, m: Monomial, c=1) -> "GradedClass":
        return cls(ring, {m: c})

    @classmethod
    def gen(cls, ring: RingSpec, name: str, power: int = 1) -> "GradedClass":
        return cls(ring, {ring.monomial(**{name: power}): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set:
        return {self.ring.degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> "int | None":
        """Degree of a homogeneous class; ``None`` for the zero class."""
        degs = self.degrees()
        if len(degs) > 1:
            raise InvalidInputError(f"{self} is not homogeneous")
        return next(iter(degs), None)

    def is_normal(self) -> bool:
        return self == normalize(self)

    def sorted_terms(self) -> list:
        ring = self.ring
        return sorted(self.terms.items(), key=lambda t: (ring.degree(t[0]), canonical_key(t[0])))

    def coefficient(self, m: Monomial) -> Coefficient:
        return Coefficient(self.ring.coeff, self.terms.get(tuple(m), 0))

    def __iter__(self) -> Iterator:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def _coerce(self, other) -> "GradedClass":
        if isinstance(other, GradedClass):
            if not same_ring(other.ring, self.ring):
                raise RingMismatchError(f"{other.ring} vs {self.ring}")
            return other
        return GradedClass.constant(self.ring, other)

    def __add__(self, other) -> "GradedClass":
        if not (isinstance(other, GradedClass) or _is_scalar(other)):
            return NotImplemented
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return normalize(GradedClass._trusted(self.ring, out))

    __radd__ = __add__

    def __neg__(self) -> "GradedClass":
        return normalize(GradedClass._trusted(self.ring, {m: -c for m, c in self.terms.items()}))

    def __sub__(self, other) -> "GradedClass":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "GradedClass":
        return self._coerce(other) - self

    def __mul__(self, other) -> "GradedClass":
        if isinstance(other, GradedClass):
            return mul(self.ring, self, other)
        if not _is_scalar(other):
            return NotImplemented
        c = self.ring.coeff.canon(other)
        return normalize(GradedClass._trusted(self.ring, {m: c * v for m, v in self.terms.items()}))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GradedClass":
        if n < 0:
            raise InvalidInputError("negative power")
        result = GradedClass.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedClass):
            return same_ring(self.ring, other.ring) and self.terms == other.terms
        if _is_scalar(other):
            return self == GradedClass.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_class(self)

    def __repr__(self) -> str:
        return f"GradedClass({self.ring}, {format_class(self)!r})"


def format_class(x: GradedClass) -> str:
    """Render in the input grammar, e.g. ``3*p2 + p2*e``."""
    if not x.terms:
        return "0"
    out = []
    for m, c in x.sorted_terms():
        neg = c < 0
        mag = -c if neg else c
        mono = x.ring.format_monomial(m)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def _normal_monomial(ring: RingSpec, m: Monomial) -> "Monomial | None":
    """Normal form of a single monomial, or ``None`` when it vanishes."""
    ei = ring.euler_index
    if ei is None or m[ei] == 0:
        return m
    s = m[ei]
    if ring.kills_euler:
        return None
    if s == 1:
        return m
    if ring.d % 2:
        return None
    m = list(m)
    # e^2 = p_{d/2}, which sits just before e
    m[ei - 1] += s // 2
    m[ei] = s % 2
    return tuple(m)


def normalize(ring: RingSpec, x: "GradedClass | None" = None) -> GradedClass:
    """Rewrite ``x`` so every monomial has Euler exponent at most one.

    May be called as ``normalize(ring, x)`` or ``normalize(x)``.
    """
    if x is None:
        ring, x = ring.ring, ring
    elif not same_ring(x.ring, ring):
        raise RingMismatchError(f"{x.ring} vs {ring}")
    if not ring.oriented:
        return x
    ei = ring.euler_index
    if ei is None:
        return x
    mod2 = ring.reduces_euler_mod_two
    out = {}
    changed = False
    for m, c in x.terms.items():
        n = _normal_monomial(ring, m)
        if n is not m:
            changed = True
        if n is None:
            continue
        out[n] = out.get(n, 0) + c
    if mod2:
        for m in out:
            if m[ei]:
                if out[m] % 2 != out[m]:
                    changed = True
                out[m] %= 2
    if not changed:
        return x
    return GradedClass._trusted(ring, out)


def mul(ring: RingSpec, x: GradedClass, y: GradedClass) -> GradedClass:
    """Product of two classes, normalized."""
    if not (same_ring(x.ring, ring) and same_ring(y.ring, ring)):
        raise RingMismatchError(f"operands not in {ring}")
    if len(x.terms) == 1 and len(y.terms) == 1:
        ((m1, c1),) = x.terms.items()
        ((m2, c2),) = y.terms.items()
        m = tuple(map(int.__add__, m1, m2))
        return normalize(ring, GradedClass._trusted(ring, {m: c1 * c2}))
    out = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            out[m] = out.get(m, 0) + c1 * c2
    return normalize(ring, GradedClass._trusted(ring, out))


def _partitions(n: int, weights: Tuple[int, ...], top: int) -> Iterator[list]:
    """Exponent vectors ``k`` over ``weights[:top]`` with ``sum(k_i w_i) == n``, first index largest first."""
    if top == 0:
        if n == 0:
            yield []
        return
    # enumerate the exponent of the first generator from the outside so
    # results come out in descending lexicographic order
    w = weights[0]
    rest = weights[1:top]
    for k in range(n // w, -1, -1):
        for tail in _partitions(n - k * w, rest, top - 1):
            yield [k] + tail


def basis_of_degree(ring: RingSpec, n: int) -> list:
    """All normalized monomials of degree ``n`` in canonical order."""
    if n < 0:
        return []
    ei = ring.euler_index
    if ei is None:
        return [tuple(k) for k in _partitions(n, ring.degrees, ring.ngens)]
    pdegs = ring.degrees[:ei]
    out = []
    for s in ((0,) if ring.kills_euler else (0, 1)):
        rem = n - s * ring.d
        if rem < 0:
            continue
        for k in _partitions(rem, pdegs, len(pdegs)):
            out.append(tuple(k) + (s,))
    out.sort(key=canonical_key)
    return out


def basis_up_to(ring: RingSpec, max_degree: int) -> Iterable[Monomial]:
    for n in range(max_degree + 1):
        yield from basis_of_degree(ring, n)
