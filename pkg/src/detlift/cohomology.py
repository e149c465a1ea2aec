"""Ext generators as classes in top local cohomology, annihilators, and Hilbert functions.

For the n x (n-1) matrix the generators are ``(d^alpha)* . 1/x`` with
``|alpha| = t - n + 1``.  Annihilation is certified operator-side
(``p* . d^alpha == 0``) and cross-checked on the Laurent side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import MAX_GRADED_DEGREE, MAX_GRADED_VARS, Poly, RationalMatrix, graded_component_dim
from .combinatorics import monomial_count, schur_sum_dim
from .complexes import delta_power, phi, shape_for
from .determinantal import (
    GenericMatrixShape,
    generalized_permanents,
    gl_act,
    gl_random_element,
    maximal_minor,
)
from .report import VerificationReport, jsonable
from .weyl import (
    LaurentClass,
    apply,
    apply_to_laurent,
    compositions,
    d_power,
    fourier_equivalence_check,
    r_action,
)


@dataclass
class ExtGeneratorSet:
    """alpha -> (d^alpha)* . 1/x for |alpha| = t - n + 1."""

    n: int
    t: int
    generators: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators.items())

    def is_independent(self) -> bool:
        """Rank of the coefficient matrix over the union of supports equals the count."""
        if not self.generators:
            return True
        support = sorted({e for c in self.generators.values() for e in c.terms}, reverse=True)
        rows = [c.coefficient_vector(support) for c in self.generators.values()]
        return RationalMatrix(rows).rank() == len(rows)

    def to_json_data(self):
        return [{"alpha": list(a), "class": c.to_text()} for a, c in self.generators.items()]


def ext_generators(n: int, t: int) -> ExtGeneratorSet:
    shape = shape_for(n)
    if t < 1:
        raise ValueError("t must be >= 1")
    k = t - n + 1
    if k < 0:
        return ExtGeneratorSet(n, t)
    socle = LaurentClass.socle(shape.ring)
    gens = {a: apply_to_laurent(d_power(shape, a), socle) for a in compositions(k, n)}
    return ExtGeneratorSet(n, t, gens)


@dataclass
class AnnihilatorReport(VerificationReport):
    containment_passed: bool | None = None
    tightness_passed: bool | None = None


def _require_range(n, t):
    if t < n - 1:
        raise ValueError(f"need t >= n - 1 = {n - 1}")


def annihilator_containment(n: int, t: int, fourier: bool = True) -> AnnihilatorReport:
    """Every generalized permanent of size t-n+2 kills every generator.

    Operator side: p* . d^alpha == 0.  With ``fourier`` the Laurent side
    p . ((d^alpha)* . 1/x) == 0 is computed too and must agree.
    """
    _require_range(n, t)
    shape = shape_for(n)
    perms = generalized_permanents(shape, t - n + 2)
    alphas = compositions(t - n + 1, n)
    failures = []
    disagreements = 0
    for idx, p in enumerate(perms):
        for a in alphas:
            if fourier:
                res = fourier_equivalence_check(p, a, n, t)
                ok = res["operator_zero"]
                if not res["agree"]:
                    disagreements += 1
                    failures.append({"permanent": idx, "alpha": list(a), "fourier": res})
            else:
                ok = apply(p, d_power(shape, a)).is_zero()
            if not ok:
                failures.append({"permanent": p.to_text(), "alpha": list(a)})
    passed = not failures
    payload = {"permanents": len(perms), "generators": len(alphas), "fourier_disagreements": disagreements}
    return AnnihilatorReport(
        "annihilator_containment", {"n": n, "t": t}, passed, payload, failures, containment_passed=passed
    )


def annihilator_tightness(n: int, t: int) -> AnnihilatorReport:
    """d_n^(t-n+1) does not kill the generator for alpha = (0, ..., 0, t-n+1)."""
    _require_range(n, t)
    shape = shape_for(n)
    k = t - n + 1
    alpha = (0,) * (n - 1) + (k,)
    gen = apply_to_laurent(d_power(shape, alpha), LaurentClass.socle(shape.ring))
    image = r_action(maximal_minor(shape, n) ** k, gen)
    passed = not image.is_zero()
    payload = {
        "alpha": list(alpha),
        "image": image.to_text(),
        "socle_coefficient": image.socle_coefficient(),
        "on_socle": image.degree_set() == {-shape.ring.nx},
    }
    return AnnihilatorReport("annihilator_tightness", {"n": n, "t": t}, passed, payload, tightness_passed=passed)


def orbit_containment(n: int, t: int, seeds: Sequence[int] = range(5)) -> VerificationReport:
    """theta . p still kills every generator, for generalized permanents p and sampled theta."""
    _require_range(n, t)
    shape = shape_for(n)
    perms = generalized_permanents(shape, t - n + 2)
    alphas = compositions(t - n + 1, n)
    failures = []
    for seed in seeds:
        theta = gl_random_element(shape, seed)
        for idx, p in enumerate(perms):
            q = gl_act(shape, theta, p)
            for a in alphas:
                if not apply(q, d_power(shape, a)).is_zero():
                    failures.append({"seed": seed, "permanent": idx, "alpha": list(a)})
    return VerificationReport(
        "orbit_containment", {"n": n, "t": t, "seeds": list(seeds)}, not failures, {"checks": len(seeds) * len(perms) * len(alphas)}, failures
    )


# ---------------------------------------------------------------------------
# Hilbert function of R / I_(t-n+1)


@dataclass
class HilbertReport(VerificationReport):
    table: dict = field(default_factory=dict)


def hilbert_compare(m: int, n: int, t: int, r_max: int) -> HilbertReport:
    """dim [R / I_(t-n+1)]_r by exact rank against the Schur-sum count, 0 <= r <= r_max."""
    if not m > n >= 1:
        raise ValueError(f"need m > n >= 1, got {m}x{n}")
    if t < n:
        raise ValueError(f"need t >= n = {n}")
    if m * n > MAX_GRADED_VARS or r_max > MAX_GRADED_DEGREE:
        raise ValueError(f"infeasible size: need mn <= {MAX_GRADED_VARS} and r_max <= {MAX_GRADED_DEGREE}")
    shape = GenericMatrixShape(m, n)
    gens = generalized_permanents(shape, t - n + 1)
    table = {}
    for r in range(r_max + 1):
        lhs = monomial_count(m * n, r) - graded_component_dim(gens, r, shape.ring)
        table[r] = (lhs, schur_sum_dim(m, n, t, r))
    equal = all(a == b for a, b in table.values())
    payload = {"table": {r: list(v) for r, v in table.items()}}
    failures = [{"r": r, "lhs": a, "rhs": b} for r, (a, b) in table.items() if a != b]
    return HilbertReport("hilbert", {"m": m, "n": n, "t": t, "r_max": r_max}, equal, payload, failures, table=table)


# ---------------------------------------------------------------------------
# Ext generators read off the top of the lift


@dataclass(frozen=True)
class DeltaFraction:
    """numerator / prod(Delta_i ** exps[i])."""

    numerator: Poly
    exps: tuple

    def to_json_data(self):
        return {"numerator": self.numerator.to_text(), "delta_exponents": list(self.exps)}


def reduce_delta_fraction(n: int, numerator: Poly, exps: Sequence[int]) -> DeltaFraction:
    """Cancel Delta_i factors from the numerator by exact division."""
    exps = list(exps)
    for i in range(1, n + 1):
        d = delta_power(n, i, 1)
        while exps[i - 1] > 0 and not numerator.is_zero():
            try:
                numerator = numerator.exact_div(d)
            except ArithmeticError:
                break
            exps[i - 1] -= 1
    return DeltaFraction(numerator, tuple(exps))


def ext_via_lift(n: int, t: int) -> dict:
    """alpha -> reduced coefficient of T^alpha in phi_t(e_{1..n}) over (prod Delta)^t."""
    _require_range(n, t)
    top = phi(n, t, tuple(range(1, n + 1)))
    (coeff,) = top.terms.values() if top.terms else (shape_for(n).ring.zero(),)
    out = {}
    for a in compositions(t - n + 1, n):
        out[a] = reduce_delta_fraction(n, coeff.coefficient_in_t(a), (t,) * n)
    return out


def ext_lift_check(n: int, t: int) -> VerificationReport:
    """Each T^alpha fraction reduces to +-1 / (prod Delta * Delta^alpha)."""
    fractions = ext_via_lift(n, t)
    failures = []
    signs = set()
    for a, frac in fractions.items():
        want = tuple(1 + k for k in a)
        num = frac.numerator
        if frac.exps != want or not num.is_constant() or abs(num.constant_term()) != 1:
            failures.append({"alpha": list(a), "fraction": frac})
        else:
            signs.add(num.constant_term())
    payload = {"fractions": {str(list(a)): f for a, f in fractions.items()}, "numerator_signs": sorted(signs)}
    return VerificationReport("ext_via_lift", {"n": n, "t": t}, not failures, jsonable(payload), failures)


def ext_generators_check(n: int, t: int) -> VerificationReport:
    gens = ext_generators(n, t)
    zero = [list(a) for a, c in gens if c.is_zero()]
    independent = gens.is_independent()
    payload = {"count": len(gens), "independent": independent, "generators": gens}
    return VerificationReport("ext_generators", {"n": n, "t": t}, not zero and independent, payload, zero)
