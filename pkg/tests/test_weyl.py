import itertools
import random

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import polys
from oracles import symbols_for, to_sympy
from detlift.algebra import PolyRing
from detlift.determinantal import GenericMatrixShape, maximal_minor
from detlift.weyl import (
    LaurentClass,
    StarOperator,
    apply,
    apply_to_laurent,
    cayley_apply,
    cayley_candidates,
    cayley_check,
    compositions,
    d_power,
    fourier_equivalence_check,
    monomial_pairing,
    orbit_annihilation,
    pairing,
    pairing_equivariance,
    pairing_equivariance_trial,
    proportionality_scalar,
    r_action,
    star,
)

X22 = PolyRing(2, 2, 0)
S3 = GenericMatrixShape.hilbert_burch(3)


def sympy_apply(f, g):
    """f(d) g with sympy differentiation."""
    syms = symbols_for(f.ring)
    out = 0
    for e, c in f.terms.items():
        h = to_sympy(g)
        for v, k in zip(syms, e):
            if k:
                h = sp.diff(h, v, k)
        out += c * h
    return sp.expand(out)


def test_apply_examples():
    x = X22.x
    assert apply(x(1, 1), x(1, 1) ** 2) == x(1, 1).scale(2)
    assert apply(x(1, 1) * x(2, 2), x(1, 2) * x(2, 1)).is_zero()
    d1 = maximal_minor(S3, 1)
    assert star(d1)(d1) == S3.ring.const(2)
    with pytest.raises(ValueError):
        StarOperator(S3.T(1))
    with pytest.raises(ValueError):
        apply(d1, S3.T(1))


def test_pairing_examples():
    x = X22.x
    assert pairing(x(1, 1) * x(2, 2), x(1, 1) * x(2, 2)) == 1
    assert pairing(x(1, 1) ** 2, x(1, 1) ** 2) == 2
    assert pairing(x(1, 1) ** 2, x(1, 1) * x(1, 2)) == 0
    with pytest.raises(ValueError):
        pairing(x(1, 1), x(1, 1) ** 2)


@given(polys(X22, max_terms=4, max_exp=3), polys(X22, max_terms=4, max_exp=2))
@settings(max_examples=40, deadline=None)
def test_apply_matches_sympy(f, g):
    assert sp.expand(to_sympy(apply(f, g)) - sympy_apply(f, g)) == 0


@given(st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_monomial_pairing(e):
    m = X22.monomial(dict(enumerate(e)))
    assert pairing(m, m) == monomial_pairing(e)


@given(polys(X22, max_terms=3, max_exp=1), polys(X22, max_terms=3, max_exp=2), polys(X22, max_terms=3, max_exp=2))
@settings(max_examples=30, deadline=None)
def test_leibniz_consistency(f, g, h):
    # operator applied to a product, by linearity over f's monomials, equals direct differentiation
    direct = apply(f, g * h)
    by_terms = X22.zero()
    for e, c in f.terms.items():
        by_terms = by_terms + apply(X22.monomial(dict(enumerate(e)), c), g * h)
    assert direct == by_terms


def test_laurent_examples():
    soc = LaurentClass.socle(X22)
    out = apply_to_laurent(X22.x(1, 1), soc)
    assert out == LaurentClass(X22, {(-2, -1, -1, -1): -1})
    assert apply_to_laurent(X22.one(), soc) == soc
    assert r_action(X22.x(1, 1), soc).is_zero()
    assert r_action(X22.one(), soc) == soc
    c = LaurentClass(X22, {(-3, -1, -1, -1): 1})
    assert r_action(X22.x(1, 1), c) == LaurentClass(X22, {(-2, -1, -1, -1): 1})
    with pytest.raises(ValueError):
        LaurentClass(X22, {(0, -1, -1, -1): 1})


def test_laurent_text_roundtrip():
    c = apply_to_laurent(maximal_minor(S3, 3), LaurentClass.socle(S3.ring))
    assert LaurentClass.from_text(c.to_text(), S3.ring) == c
    assert LaurentClass.from_text("0", S3.ring).is_zero()


def test_d3_generator_n3():
    # (d_3)* . 1/x = (1/x)(1/(x11 x22) - 1/(x12 x21))
    c = apply_to_laurent(maximal_minor(S3, 3), LaurentClass.socle(S3.ring))
    base = [-1] * 6
    a, b = list(base), list(base)
    a[0] = a[3] = -2
    b[1] = b[2] = -2
    assert c == LaurentClass(S3.ring, {tuple(a): 1, tuple(b): -1})


laurent_exps = st.tuples(*[st.integers(-3, -1)] * 4)
laurent = st.dictionaries(laurent_exps, st.integers(-4, 4), max_size=4).map(lambda d: LaurentClass(X22, d))


@given(polys(X22, max_terms=3, max_exp=2), laurent, laurent, st.integers(-3, 3))
@settings(max_examples=40)
def test_actions_are_linear(p, a, b, k):
    for act in (r_action, apply_to_laurent):
        assert act(p, a + b) == act(p, a) + act(p, b)
        assert act(p, a.scale(k)) == act(p, a).scale(k)


@given(st.integers(1, 3).flatmap(lambda k: st.tuples(polys(X22, 3, homogeneous_degree=k), polys(X22, 3, homogeneous_degree=k))))
@settings(max_examples=40)
def test_socle_reproduces_pairing(fg):
    # g . (f* . 1/x) has socle coefficient (-1)^k <f*, g>
    f, g = fg
    k = max([sum(e) for e in f.terms] or [0])
    cls = apply_to_laurent(f, LaurentClass.socle(X22))
    assert r_action(g, cls).socle_coefficient() == (-1) ** k * pairing(f, g)


@pytest.mark.parametrize(
    "n,s,i,scalar",
    [(2, (0, 0), 1, 1), (3, (0, 0, 0), 1, 2), (3, (1, 0, 0), 1, 6)],
)
def test_cayley_examples(n, s, i, scalar):
    # scalars frozen from the sympy differentiation oracle
    shape = GenericMatrixShape.hilbert_burch(n)
    value = cayley_apply(n, s, i)
    assert value == d_power(shape, s).scale(scalar)
    assert sympy_apply(maximal_minor(shape, i), maximal_minor(shape, i) * d_power(shape, s)) == to_sympy(
        d_power(shape, s).scale(scalar)
    )


def test_cayley_scalar_upper_index():
    for n in (2, 3):
        for s in itertools.product(range(4), repeat=n):
            if sum(s) > 3:
                continue
            for i in range(1, n + 1):
                rep = cayley_check(n, s, i)
                assert rep.passed
                assert rep.payload["scalar"] == cayley_candidates(n, s, i)["upper_s_plus_n_minus_1"]
                assert rep.payload["scalar"] != cayley_candidates(n, s, i)["upper_s_plus_n"]


def test_cayley_bound():
    with pytest.raises(ValueError):
        cayley_apply(3, (3, 2, 0), 1)


def test_proportionality_scalar():
    p = S3.x(1, 1) + S3.x(2, 2)
    assert proportionality_scalar(p.scale(5), p) == 5
    assert proportionality_scalar(p + S3.x(3, 1), p) is None


def test_fourier_examples():
    n, t = 3, 3
    k = t - n + 1
    for alpha in compositions(k, n):
        res = fourier_equivalence_check(S3.x(1, 1) ** (t - n + 2), alpha, n, t)
        assert res["laurent_zero"] and res["operator_zero"]
        res = fourier_equivalence_check(S3.ring.one(), alpha, n, t)
        assert not res["laurent_zero"] and not res["operator_zero"]
    dn = maximal_minor(S3, 3) ** k
    res = fourier_equivalence_check(dn, (0, 0, k), n, t)
    assert res == {"laurent_zero": False, "operator_zero": False, "agree": True}
    with pytest.raises(ValueError):
        fourier_equivalence_check(S3.ring.one(), (1, 1, 0), n, t)


@given(polys(S3.ring, max_terms=4, max_exp=1), st.sampled_from(compositions(1, 3)))
@settings(max_examples=40, deadline=None)
def test_fourier_agreement_random(f, alpha):
    f = f.coefficient_in_t((0, 0, 0))
    assert fourier_equivalence_check(f, alpha, 3, 3)["agree"]


def test_pairing_equivariance_seeded():
    rep = pairing_equivariance(42, 100)
    assert rep.passed
    assert rep.payload["nonzero_pairings"] > 50
    assert pairing_equivariance_trial(7) == pairing_equivariance_trial(7)


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_orbit_annihilation(n, k):
    assert orbit_annihilation(n, k).passed


def test_compositions():
    assert compositions(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert compositions(0, 3) == [(0, 0, 0)]
    assert len(compositions(3, 3)) == 10
