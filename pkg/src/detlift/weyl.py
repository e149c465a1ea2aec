"""Constant-coefficient differential operators acting on polynomials and on top local cohomology.

``H^{mn}_m(R)`` is presented by Laurent monomials whose exponents are all
negative.  Multiplying by a polynomial shifts exponents and drops every
monomial that acquires an exponent >= 0; differentiation is the formal power
rule.  The socle is spanned by ``1/x`` with all exponents equal to -1.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from operator import add, sub
from typing import Mapping, Sequence

from .algebra import Poly, PolyRing, as_rational, format_term, parse_terms
from .algebra import exponent_vectors
from .determinantal import GenericMatrixShape, det_lambda, gl_act, gl_act_dual, gl_random_element, maximal_minor
from .report import VerificationReport


def _falling(b: int, k: int) -> int:
    """b (b-1) ... (b-k+1); the coefficient of d^k/dx^k applied to x^b."""
    out = 1
    for s in range(k):
        out *= b - s
    return out


def _diff_coefficient(beta: Sequence[int], gamma: Sequence[int]) -> int:
    out = 1
    for b, g in zip(beta, gamma):
        if g:
            out *= _falling(b, g)
            if not out:
                return 0
    return out


class StarOperator:
    """The operator f(partial) obtained from ``body`` by x(i,j) -> d/dx(i,j)."""

    __slots__ = ("body",)

    def __init__(self, body: Poly):
        if body.involves_t():
            raise ValueError("operator symbols involve only x-variables")
        self.body = body

    @property
    def ring(self) -> PolyRing:
        return self.body.ring

    def __repr__(self):
        return f"StarOperator({self.body.to_text()!r})"

    def __call__(self, g):
        if isinstance(g, LaurentClass):
            return apply_to_laurent(self, g)
        return apply(self, g)


def star(f: Poly) -> StarOperator:
    return StarOperator(f)


def apply(op: StarOperator | Poly, g: Poly) -> Poly:
    """Apply op to a polynomial by iterated partial differentiation."""
    body = op.body if isinstance(op, StarOperator) else op
    if body.ring != g.ring:
        raise ValueError("operator and polynomial live in different rings")
    if g.involves_t() or body.involves_t():
        raise ValueError("differential operators act on x-variables only")
    ring = g.ring
    out: dict = {}
    for gam, c in body.terms.items():
        for beta, b in g.terms.items():
            k = _diff_coefficient(beta, gam)
            if k:
                e = tuple(map(sub, beta, gam))
                out[e] = out.get(e, 0) + c * b * k
    return Poly(ring, out)


def pairing(f: Poly, g: Poly):
    """<f*, g>: the constant f(partial) g for f, g homogeneous of the same degree."""
    if f.is_zero() or g.is_zero():
        return 0
    if not (f.is_homogeneous() and g.is_homogeneous()) or f.degree() != g.degree():
        raise ValueError("pairing needs homogeneous arguments of equal degree")
    return as_rational(apply(f, g).constant_term())


class LaurentClass:
    """A class in H^{mn}_m(R): rational combination of x^beta with every beta_ij <= -1."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, object] | None = None):
        self.ring = ring
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != ring.nx:
                raise ValueError("Laurent exponent must have one entry per x-variable")
            if max(e, default=-1) >= 0:
                raise ValueError(f"exponent {e} is not strictly negative")
            c = as_rational(c)
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def socle(cls, ring: PolyRing) -> "LaurentClass":
        """1/x: the product of all x-variables inverted."""
        return cls(ring, {(-1,) * ring.nx: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentClass):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def _check(self, other):
        if other.ring != self.ring:
            raise ValueError("classes live in different rings")

    def __add__(self, other: "LaurentClass") -> "LaurentClass":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentClass(self.ring, out)

    def __neg__(self):
        return LaurentClass(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LaurentClass":
        c = as_rational(c)
        return LaurentClass(self.ring, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, c):
        if isinstance(c, Poly):
            return r_action(c, self)
        return self.scale(c)

    __rmul__ = __mul__

    def socle_coefficient(self):
        return self.terms.get((-1,) * self.ring.nx, 0)

    def degree_set(self) -> set:
        return {sum(e) for e in self.terms}

    def leading_exponent(self) -> tuple:
        return max(self.terms)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        pad = (0,) * self.ring.nt
        return " + ".join(format_term(self.ring, e + pad, c) for e, c in sorted(self.terms.items(), reverse=True))

    def __repr__(self):
        return f"LaurentClass({self.to_text()!r})"

    @classmethod
    def from_text(cls, text: str, ring: PolyRing) -> "LaurentClass":
        acc: dict = {}
        for e, c in parse_terms(text, ring):
            if any(e[ring.nx:]):
                raise ValueError("Laurent classes involve only x-variables")
            key = e[: ring.nx]
            acc[key] = acc.get(key, 0) + c
        return cls(ring, {e: c for e, c in acc.items() if c})

    def coefficient_vector(self, basis: Sequence[tuple]) -> list:
        return [self.terms.get(e, 0) for e in basis]


def apply_to_laurent(op: StarOperator | Poly, c: LaurentClass) -> LaurentClass:
    """Formal differentiation: d/dx_ij x^beta = beta_ij x^(beta - e_ij)."""
    body = op.body if isinstance(op, StarOperator) else op
    if body.ring != c.ring:
        raise ValueError("operator and class live in different rings")
    if body.involves_t():
        raise ValueError("differential operators act on x-variables only")
    nx = c.ring.nx
    out: dict = {}
    for gam, a in body.terms.items():
        g = gam[:nx]
        for beta, b in c.terms.items():
            k = _diff_coefficient(beta, g)
            e = tuple(map(sub, beta, g))
            out[e] = out.get(e, 0) + a * b * k
    return LaurentClass(c.ring, out)


def r_action(p: Poly, c: LaurentClass) -> LaurentClass:
    """p . c: add exponents, discarding monomials with any exponent >= 0."""
    if p.ring != c.ring:
        raise ValueError("polynomial and class live in different rings")
    if p.involves_t():
        raise ValueError("only x-polynomials act on local cohomology classes")
    nx = c.ring.nx
    out: dict = {}
    for gam, a in p.terms.items():
        g = gam[:nx]
        for beta, b in c.terms.items():
            e = tuple(map(add, beta, g))
            if max(e) < 0:
                out[e] = out.get(e, 0) + a * b
    return LaurentClass(c.ring, out)


# ---------------------------------------------------------------------------
# operators built from maximal minors of the n x (n-1) matrix


def d_power(shape: GenericMatrixShape, exps: Sequence[int]) -> Poly:
    """d^alpha = d_1^alpha_1 ... d_n^alpha_n (unsigned maximal minors)."""
    if len(exps) != shape.m:
        raise ValueError("exponent vector must have one entry per maximal minor")
    return _d_power(shape, tuple(exps))


@lru_cache(maxsize=None)
def _d_power(shape: GenericMatrixShape, exps: tuple) -> Poly:
    out = shape.ring.one()
    for i, a in enumerate(exps, start=1):
        if a < 0:
            raise ValueError("exponents must be nonnegative")
        if a:
            out = out * maximal_minor(shape, i) ** a
    return out


MAX_CAYLEY_DEGREE = 4


def cayley_apply(n: int, s: Sequence[int], i: int, bound: int = MAX_CAYLEY_DEGREE) -> Poly:
    """d_i(partial) applied to d_i * d^s on the n x (n-1) matrix."""
    shape = GenericMatrixShape.hilbert_burch(n)
    s = tuple(s)
    if len(s) != n or min(s) < 0:
        raise ValueError("s must be a nonnegative vector of length n")
    if sum(s) > bound:
        raise ValueError(f"|s| = {sum(s)} exceeds bound {bound}")
    if not 1 <= i <= n:
        raise IndexError(f"minor index {i} out of range")
    di = maximal_minor(shape, i)
    return apply(di, di * d_power(shape, s))


def proportionality_scalar(value: Poly, base: Poly):
    """The scalar c with value == c * base, or None when no such scalar exists."""
    if base.is_zero():
        raise ValueError("base polynomial is zero")
    e, b = base.leading_term()
    c = as_rational(Fraction(value.terms.get(e, 0)) / b)
    return c if value == base.scale(c) else None


def cayley_candidates(n: int, s: Sequence[int], i: int) -> dict:
    """Two closed forms for the scalar: the product ending at (|s|+n) and the one ending at (|s|+n-1)."""
    total = sum(s)
    lead = s[i - 1] + 1
    return {
        "upper_s_plus_n": lead * prod(total + k for k in range(2, n + 1)),
        "upper_s_plus_n_minus_1": lead * prod(total + k for k in range(2, n)),
    }


def fourier_equivalence_check(f: Poly, alpha: Sequence[int], n: int, t: int) -> dict:
    """Compare f . ((d^alpha)* . 1/x) == 0 with f* . d^alpha == 0.

    Returns both booleans and whether they agree; the two sides are computed
    by independent routes (Laurent truncation vs. polynomial differentiation).
    """
    shape = GenericMatrixShape.hilbert_burch(n)
    if sum(alpha) != t - n + 1:
        raise ValueError(f"|alpha| must equal t - n + 1 = {t - n + 1}")
    if f.ring != shape.ring:
        raise ValueError("f lives in a different ring")
    da = d_power(shape, alpha)
    cls = apply_to_laurent(da, LaurentClass.socle(shape.ring))
    laurent_zero = r_action(f, cls).is_zero()
    operator_zero = apply(f, da).is_zero()
    return {"laurent_zero": laurent_zero, "operator_zero": operator_zero, "agree": laurent_zero == operator_zero}


def compositions(total: int, parts: int) -> list[tuple]:
    """All nonnegative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        vec = []
        for c in cut + (total + parts - 1,):
            vec.append(c - prev - 1)
            prev = c
        out.append(tuple(vec))
    return sorted(out, reverse=True)


def monomial_pairing(e: Sequence[int]) -> int:
    """<(x^e)*, x^e> = prod of exponent factorials."""
    return prod(factorial(k) for k in e)


def cayley_check(n: int, s: Sequence[int], i: int) -> VerificationReport:
    """Test d_i* . (d_i d^s) = c d^s and log c next to both candidate products."""
    shape = GenericMatrixShape.hilbert_burch(n)
    value = cayley_apply(n, s, i)
    c = proportionality_scalar(value, d_power(shape, s))
    cands = cayley_candidates(n, s, i)
    payload = {"scalar": c, "candidates": cands, "matches": sorted(k for k, v in cands.items() if v == c)}
    return VerificationReport("cayley", {"n": n, "s": list(s), "i": i}, c is not None, payload)


def random_homogeneous(ring: PolyRing, degree: int, rng: random.Random, nterms: int = 4) -> Poly:
    """A random homogeneous x-polynomial with small integer coefficients (possibly zero)."""
    monos = [e + (0,) * ring.nt for e in exponent_vectors(ring.nx, degree)]
    out = {}
    for e in rng.sample(monos, min(nterms, len(monos))):
        out[e] = rng.randint(-5, 5)
    return Poly(ring, out)


def pairing_equivariance_trial(seed: int, max_degree: int = 3, max_size: int = 3) -> dict:
    """One seeded trial of <(theta.f)*, theta.g> == <f*, g>."""
    rng = random.Random(seed)
    n = rng.randint(1, max_size)
    m = rng.randint(n, max_size)
    shape = GenericMatrixShape(m, n)
    k = rng.randint(1, max_degree)
    f = random_homogeneous(shape.ring, k, rng)
    g = random_homogeneous(shape.ring, k, rng)
    theta = gl_random_element(shape, rng.getrandbits(32))
    before = pairing(f, g)
    after = pairing(gl_act_dual(shape, theta, f), gl_act(shape, theta, g))
    return {"seed": seed, "shape": [m, n], "degree": k, "before": before, "after": after, "equal": before == after}


def pairing_equivariance(seed: int = 0, trials: int = 50) -> VerificationReport:
    rng = random.Random(seed)
    results = [pairing_equivariance_trial(rng.getrandbits(32)) for _ in range(trials)]
    failures = [r for r in results if not r["equal"]]
    nonzero = sum(1 for r in results if r["before"] != 0)
    return VerificationReport(
        "pairing", {"seed": seed, "trials": trials}, not failures, {"trials": trials, "nonzero_pairings": nonzero}, failures
    )


def orbit_annihilation(n: int, k: int, seeds: Sequence[int] = range(5)) -> VerificationReport:
    """(theta . x11^(k+1))* kills every d^alpha with |alpha| = k, for sampled theta."""
    shape = GenericMatrixShape.hilbert_burch(n)
    base = det_lambda(shape, (k + 1,))
    alphas = compositions(k, n)
    failures = []
    for seed in seeds:
        f = gl_act(shape, gl_random_element(shape, seed), base)
        for a in alphas:
            if not apply(f, d_power(shape, a)).is_zero():
                failures.append({"seed": seed, "alpha": list(a)})
    return VerificationReport(
        "orbit_annihilation", {"n": n, "k": k, "seeds": list(seeds)}, not failures, {"pairs": len(alphas) * len(seeds)}, failures
    )
