"""Hypothesis strategies for rings and classes."""

from hypothesis import strategies as st

from charclass import GradedClass, basis_of_degree, make_ring, normalize


@st.composite
def rings(draw, max_d=9, flavors=("SO", "O")):
    flavor = draw(st.sampled_from(flavors))
    d = draw(st.integers(0, max_d))
    if flavor == "O":
        return make_ring(d, "O")
    coeff = draw(st.sampled_from(["Z", "Q", "F2"]))
    torsion = draw(st.sampled_from(["paper", "standard"]))
    return make_ring(d, "SO", coeff, torsion)


def coefficients(ring):
    ints = st.integers(-6, 6)
    if ring.coeff.value == "Q":
        return st.one_of(ints, st.fractions(max_denominator=5).filter(lambda f: abs(f) < 8))
    return ints


def monomials(ring, max_exp=5):
    return st.tuples(*[st.integers(0, max_exp) for _ in ring.generators])


@st.composite
def classes(draw, ring, max_terms=4, max_exp=5):
    """Arbitrary (not necessarily normalized or homogeneous) classes."""
    terms = draw(st.dictionaries(monomials(ring, max_exp), coefficients(ring), max_size=max_terms))
    return GradedClass(ring, terms)


@st.composite
def homogeneous_classes(draw, ring, max_terms=3, max_degree=40):
    """Normalized homogeneous classes built from one degree's basis."""
    n = draw(st.integers(0, max_degree))
    basis = basis_of_degree(ring, n)
    if not basis:
        return GradedClass.zero(ring)
    picks = draw(st.lists(st.sampled_from(basis), max_size=max_terms, unique=True))
    return normalize(ring, GradedClass(ring, {m: draw(coefficients(ring)) for m in picks}))


@st.composite
def ring_and_class(draw, max_d=9, flavors=("SO", "O"), **kw):
    ring = draw(rings(max_d=max_d, flavors=flavors))
    return ring, draw(classes(ring, **kw))
