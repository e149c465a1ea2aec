import itertools

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import same, symbols_for, to_sympy
from detlift.complexes import (
    ExteriorElement,
    StrandElement,
    check_differentials,
    check_evaluation,
    check_full_lift,
    check_identities,
    check_square,
    delta_power,
    h_poly,
    h_recurrence_holds,
    key_identity,
    koszul_diff,
    phi,
    phi_linear,
    rees_form,
    shape_for,
    strand_diff,
    worked_examples,
)
from detlift.determinantal import signed_minor


def subsets(n, r):
    return list(itertools.combinations(range(1, n + 1), r))


def basis(n, A):
    return ExteriorElement(shape_for(n).ring, len(A), {tuple(A): shape_for(n).ring.one()})


def strand_basis(n, K, tdeg=0):
    return StrandElement(shape_for(n).ring, len(K), {tuple(K): shape_for(n).ring.one()}, tdeg)


def test_koszul_examples():
    n, t = 3, 2
    D = lambda a: delta_power(n, a, t)
    assert koszul_diff(n, t, basis(n, (2,))).terms == {(): D(2)}
    d12 = koszul_diff(n, t, basis(n, (1, 2)))
    assert d12.terms == {(2,): D(1), (1,): -D(2)}


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_d_squared_zero(n, t):
    for r in range(2, n + 1):
        for A in subsets(n, r):
            assert koszul_diff(n, t, koszul_diff(n, t, basis(n, A))).is_zero()
    assert check_differentials(n, t).passed


def test_strand_examples():
    n = 3
    assert strand_diff(n, strand_basis(n, (1,))).terms == {(): rees_form(n, 1)}
    sh = shape_for(n)
    assert rees_form(n, 1) == sh.x(1, 1) * sh.T(1) + sh.x(2, 1) * sh.T(2) + sh.x(3, 1) * sh.T(3)
    d12 = strand_diff(n, strand_basis(n, (1, 2)))
    assert d12.terms == {(2,): rees_form(n, 1), (1,): -rees_form(n, 2)}
    assert d12.t_degree == 1


@pytest.mark.parametrize("n", [3, 4])
def test_delta_squared_zero(n):
    for r in range(2, n):
        for K in itertools.combinations(range(1, n), r):
            assert strand_diff(n, strand_diff(n, strand_basis(n, K))).is_zero()


def test_strand_rejects_mixed_t_degree():
    sh = shape_for(3)
    with pytest.raises(ValueError):
        StrandElement(sh.ring, 1, {(1,): sh.T(1) + sh.T(2) ** 2}, 1)
    with pytest.raises(ValueError):
        ExteriorElement(sh.ring, 1, {(1,): sh.T(1)})


def sympy_h(n, A, e):
    """Delta_A^e * h_e(T_a / Delta_a : a in A) expanded with sympy."""
    syms = symbols_for(shape_for(n).ring)
    T = syms[-n:]
    D = {a: to_sympy(signed_minor(shape_for(n), a)) for a in A}
    Ds = {a: sp.Symbol(f"D{a}") for a in A}
    h = sum(
        sp.Mul(*[(T[a - 1] / Ds[a]) ** k for a, k in zip(A, beta)])
        for beta in itertools.product(range(e + 1), repeat=len(A))
        if sum(beta) == e
    )
    cleared = sp.expand(sp.Mul(*[Ds[a] ** e for a in A]) * h)
    return sp.expand(cleared.subs({Ds[a]: D[a] for a in A}))


def test_h_poly_examples():
    n = 3
    sh = shape_for(n)
    assert h_poly(n, (1, 2), 0) == sh.ring.one()
    assert h_poly(n, (2,), 3) == sh.T(2) ** 3
    D = lambda a: delta_power(n, a, 1)
    assert h_poly(n, (1, 2), 1) == D(2) * sh.T(1) + D(1) * sh.T(2)


@pytest.mark.parametrize("A,e", [((1, 2), 2), ((1, 2, 3), 1), ((1, 3), 3)])
def test_h_poly_against_sympy(A, e):
    p = h_poly(3, A, e)
    assert same(p, sympy_h(3, A, e))
    assert p.is_bihomogeneous() and p.t_degree() == e


def test_h_recurrence_small():
    for n in (2, 3):
        for r in range(1, n + 1):
            for A in subsets(n, r):
                for e in range(4):
                    for b in A:
                        assert h_recurrence_holds(n, A, e, b)


@pytest.mark.parametrize("e", [0, 1, 2])
def test_h_recurrence_four(e):
    for b in (1, 2, 3, 4):
        assert h_recurrence_holds(4, (1, 2, 3, 4), e, b)


def test_phi_worked_examples():
    rep = worked_examples()
    assert rep.passed, rep.failures
    sh = shape_for(3)
    D = [signed_minor(sh, i) for i in (1, 2, 3)]
    assert phi(3, 2, (1, 2, 3)).terms == {(1, 2): -(D[0] * D[1] * D[2])}
    assert phi(3, 2, (2,)).terms == {(): sh.T(2) ** 2}
    want = -(D[1] * sh.T(1) + D[0] * sh.T(2))
    assert phi(3, 2, (1, 2)).terms == {(1,): want * sh.x(3, 2), (2,): -want * sh.x(3, 1)}


def test_phi_below_base_is_zero():
    assert phi(4, 1, (1, 2, 3)).is_zero()
    with pytest.raises(ValueError):
        phi(3, 2, (1, 4))


@pytest.mark.parametrize("n,t", [(3, 2), (3, 3), (4, 3)])
def test_phi_gradings(n, t):
    for r in range(1, n + 1):
        for A in subsets(n, r):
            v = phi(n, t, A)
            assert v.degree == r - 1
            for c in v.terms.values():
                assert c.t_degree_set() == {t - r + 1}
                assert c.is_bihomogeneous()


def test_phi_linear():
    n, t = 3, 3
    sh = shape_for(n)
    v = ExteriorElement(sh.ring, 2, {(1, 2): sh.x(1, 1), (2, 3): sh.ring.const(3)})
    got = phi_linear(n, t, v)
    want = phi(n, t, (1, 2)).scale(sh.x(1, 1)) + phi(n, t, (2, 3)).scale(sh.ring.const(3))
    assert got == want


@pytest.mark.parametrize("n", [2, 3, 4])
def test_key_identity(n):
    for r in range(2, n + 1):
        for A in subsets(n, r):
            assert key_identity(n, A).is_zero()


@pytest.mark.parametrize("n,t,r", [(3, 2, 2), (4, 3, 3), (3, 1, 4), (4, 1, 5), (2, 1, 3)])
def test_check_square_examples(n, t, r):
    rep = check_square(n, t, r)
    assert rep.passed, rep.failures


@pytest.mark.parametrize("n,t", [(2, 1), (3, 2), (3, 4)])
def test_full_lift_examples(n, t):
    rep = check_full_lift(n, t)
    assert rep.passed
    assert check_evaluation(n, t).passed


def test_json_roundtrip():
    n = 3
    v = phi(n, 3, (1, 3))
    data = v.to_json_data()
    back = StrandElement.from_json_data(data, shape_for(n).ring, v.degree, t_degree=v.t_degree)
    assert back == v
    e = ExteriorElement(shape_for(n).ring, 1, {(2,): shape_for(n).x(1, 1)})
    assert ExteriorElement.from_json_data(e.to_json_data(), shape_for(n).ring, 1) == e


def test_identity_suite():
    rep = check_identities(n_max=3)
    assert rep.passed
    assert rep.payload["counts"]["sign"] == 321
