"""Symbolic calculus for characteristic classes, Thom modules and Gysin maps.

Computes normal forms in H*(BSO(d)) and H*(BO(d); F2), the pushforward along
the sphere bundle BSO(d) -> BSO(d+1), the image of universal tangential
(generalized MMM) classes under delta*, and whether such classes are forced
to vanish when pulled back from BDiff(dW) to BDiff(W).
"""

from .coeff import CoeffRing, Coefficient, coeff_add, coeff_mul
from .errors import (
    CharClassError,
    ExprSyntaxError,
    FlavorMismatchError,
    InvalidInputError,
    InvalidSpecError,
    InvariantViolation,
    RingMismatchError,
    UnknownGeneratorError,
)
from .expr import parse_expr
from .gysin import pullback, pushforward
from .ring import (
    Flavor,
    GradedClass,
    Monomial,
    RingSpec,
    TorsionMode,
    basis_of_degree,
    make_ring,
    mul,
    normalize,
)
from .tabulate import TableRow, enumerate_table, format_table, kappa_table
from .thom import ThomClass, thom_unwrap, thom_wrap
from .universal import (
    Outcome,
    PrimitiveClass,
    Reason,
    UniversalClass,
    Verdict,
    delta_star,
    kappa,
    make_universal,
    rho,
    vanishes_on_boundary,
)

__version__ = "0.1.0"
