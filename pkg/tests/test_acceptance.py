"""Acceptance gate: nine criteria, exact equality, one PASS/FAIL line each."""

import itertools
import time

import pytest

from detlift.cohomology import (
    annihilator_containment,
    annihilator_tightness,
    ext_generators,
    ext_generators_check,
    ext_lift_check,
    hilbert_compare,
)
from detlift.combinatorics import check_schur_oracles
from detlift.complexes import check_full_lift, check_identities, shape_for, worked_examples
from detlift.weyl import LaurentClass, cayley_check, orbit_annihilation, pairing_equivariance


@pytest.fixture
def gate(capsys):
    def emit(number, title, ok, elapsed, budget, note=""):
        ok = ok and elapsed < budget
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({elapsed:.2f}s / {budget}s){note}"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line

    return emit


def test_1_worked_examples(gate):
    start = time.perf_counter()
    rep = worked_examples()
    gate(1, "worked lift values for n=3, t=2", rep.passed, time.perf_counter() - start, 1)


def test_2_lift_commutativity(gate):
    start = time.perf_counter()
    cases = [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 3), (4, 4)]
    failed = [c for c in cases if not check_full_lift(*c).passed]
    gate(2, "full lift commutes", not failed, time.perf_counter() - start, 120, f" failed={failed}" if failed else "")


def test_3_identity_suite(gate):
    start = time.perf_counter()
    rep = check_identities(n_max=4, universe_max=6, t_max=3)
    gate(3, "syzygy, expansion, sign, key identity, d^2 = delta^2 = 0", rep.passed, time.perf_counter() - start, 60)


def test_4_cayley(gate):
    start = time.perf_counter()
    ok, tally = True, {"upper_s_plus_n": 0, "upper_s_plus_n_minus_1": 0}
    cases = 0
    for n in (2, 3):
        for s in itertools.product(range(4), repeat=n):
            if sum(s) > 3:
                continue
            for i in range(1, n + 1):
                rep = cayley_check(n, s, i)
                cases += 1
                ok &= rep.passed
                for key in rep.payload["matches"]:
                    tally[key] += 1
    note = f" cases={cases} scalar matches {tally}"
    gate(4, "Cayley-type proportionality", ok, time.perf_counter() - start, 120, note)


def test_5_ext_realization(gate):
    start = time.perf_counter()
    ok = True
    for n in (2, 3):
        for t in range(1, 5):
            if t < n - 1:
                ok &= len(ext_generators(n, t)) == 0
                continue
            ok &= ext_lift_check(n, t).passed and ext_generators_check(n, t).passed
    ring = shape_for(3).ring
    expected = LaurentClass(ring, {(-2, -1, -1, -2, -1, -1): 1, (-1, -2, -2, -1, -1, -1): -1})
    got = ext_generators(3, 3).generators[(0, 0, 1)]
    ok &= got in (expected, -expected)
    gate(5, "Ext generators from the lift and in local cohomology", ok, time.perf_counter() - start, 60)


def test_6_annihilator(gate):
    start = time.perf_counter()
    ok = True
    for n, t in [(2, 2), (2, 3), (3, 3), (3, 4)]:
        c = annihilator_containment(n, t)
        ok &= c.containment_passed and c.payload["fourier_disagreements"] == 0
        ok &= annihilator_tightness(n, t).tightness_passed
    gate(6, "annihilator containment, tightness, Fourier agreement", ok, time.perf_counter() - start, 120)


def test_7_hilbert(gate):
    start = time.perf_counter()
    cases = [(3, 2, 2, 4), (3, 2, 3, 5), (3, 2, 4, 5), (4, 2, 3, 4), (4, 3, 4, 4)]
    failed = [c for c in cases if not hilbert_compare(*c).passed]
    gate(7, "Hilbert function identity", not failed, time.perf_counter() - start, 300, f" failed={failed}" if failed else "")


def test_8_pairing(gate):
    start = time.perf_counter()
    ok = pairing_equivariance(seed=2024, trials=100).passed
    ok &= all(orbit_annihilation(3, k, range(5)).passed for k in (1, 2))
    gate(8, "pairing equivariance and orbit annihilation", ok, time.perf_counter() - start, 60)


def test_9_combinatorics(gate):
    start = time.perf_counter()
    rep = check_schur_oracles(max_size=6, max_n=4, max_vars=12, max_r=6)
    gate(9, "Schur dimensions and Cauchy sums", rep.passed, time.perf_counter() - start, 60)
