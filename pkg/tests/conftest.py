from fractions import Fraction

import pytest
from hypothesis import strategies as st

from detlift.algebra import Poly, PolyRing


@pytest.fixture
def ring22():
    return PolyRing(2, 2, 0)


def polys(ring: PolyRing, max_terms=5, max_exp=2, homogeneous_degree=None):
    """Hypothesis strategy for small polynomials with rational coefficients."""
    nv = ring.nvars
    coeff = st.one_of(
        st.integers(-6, 6),
        st.builds(Fraction, st.integers(-12, 12), st.integers(1, 4)),
    )
    if homogeneous_degree is None:
        exps = st.tuples(*[st.integers(0, max_exp)] * nv)
    else:
        k = homogeneous_degree
        exps = st.lists(st.integers(0, ring.nx - 1), min_size=k, max_size=k).map(
            lambda idx: tuple(idx.count(i) for i in range(ring.nx)) + (0,) * ring.nt
        )
    return st.dictionaries(exps, coeff, max_size=max_terms).map(lambda d: Poly(ring, d))
