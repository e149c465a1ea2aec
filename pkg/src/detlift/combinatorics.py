"""Partitions, dominant weights and dimensions of Schur functors."""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

from .report import VerificationReport

MAX_PARTITION_SIZE = 12


class DominantWeight(tuple):
    """A weakly decreasing integer vector; entries may be negative."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    def padded(self, k: int) -> tuple:
        if len(self) > k:
            raise ValueError(f"{tuple(self)} has more than {k} parts")
        return tuple(self) + (0,) * (k - len(self))

    @property
    def size(self) -> int:
        return sum(self)


class Partition(DominantWeight):
    """A dominant weight with nonnegative parts; trailing zeros are dropped."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = [int(p) for p in parts]
        if any(p < 0 for p in parts):
            raise ValueError(f"{tuple(parts)} has a negative part")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def to_json(self) -> str:
        return json.dumps(list(self))

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(p, int) for p in data):
            raise ValueError("a partition is serialized as a JSON integer array")
        return cls(data)


def transpose(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def dominates(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Componentwise order: mu_i >= lam_i for all i after zero padding."""
    k = max(len(mu), len(lam))
    a = tuple(mu) + (0,) * (k - len(mu))
    b = tuple(lam) + (0,) * (k - len(lam))
    return all(x >= y for x, y in zip(a, b))


def schur_dim(lam: Sequence[int], n: int) -> int:
    """Dimension of the Schur functor S_lam applied to C^n (product formula)."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    w = DominantWeight(lam).padded(n) if not isinstance(lam, DominantWeight) else lam.padded(n)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= w[i] - w[j] + j - i
            den *= j - i
    q, r = divmod(num, den)
    assert r == 0, "Schur dimension must be integral"
    return q


def ssyt_count(lam: Sequence[int], n: int, bound: int = MAX_PARTITION_SIZE) -> int:
    """Count semistandard Young tableaux of shape ``lam`` with entries in 1..n by enumeration."""
    lam = Partition(lam)
    if lam.size > bound:
        raise ValueError(f"|lambda| = {lam.size} exceeds bound {bound}")
    cells = [(i, j) for i, row in enumerate(lam) for j in range(row)]
    filling: dict = {}

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, n + 1):
            filling[(i, j)] = v
            total += fill(k + 1)
        filling.pop((i, j), None)
        return total

    return fill(0)


def partitions(r: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``r`` in lexicographically decreasing order, with optional bounds."""
    if r < 0:
        return
    if r > MAX_PARTITION_SIZE:
        raise ValueError(f"partition size {r} exceeds cap {MAX_PARTITION_SIZE}")
    if max_parts is None:
        max_parts = r
    if max_part is None:
        max_part = r

    def rec(remaining, largest, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - p, p, slots - 1):
                yield (p,) + rest

    for parts in rec(r, max_part, max_parts):
        yield Partition(parts)


def cauchy_dim(m: int, n: int, r: int) -> int:
    """Sum of dim S_lam(C^m) * dim S_lam(C^n) over partitions of r with at most n parts."""
    if not m >= n >= 1:
        raise ValueError("need m >= n >= 1")
    return sum(schur_dim(lam, m) * schur_dim(lam, n) for lam in partitions(r, max_parts=n))


def monomial_count(nvars: int, r: int) -> int:
    return comb(nvars + r - 1, r) if nvars else int(r == 0)


def schur_sum_dim(m: int, n: int, t: int, r: int) -> int:
    """Degree-r dimension of the top-degree quotient module for the t-th thickening.

    Sum of dim S_lam(C^m) * dim S_lam(C^n) over partitions lam with at most n
    parts, lam_1 <= t - n and |lam| = r.
    """
    if not m > n:
        raise ValueError("need m > n")
    if t < n:
        raise ValueError("need t >= n")
    return sum(schur_dim(lam, m) * schur_dim(lam, n) for lam in partitions(r, max_parts=n, max_part=t - n))


def hook_content_dim(lam: Sequence[int], n: int) -> int:
    """Hook-content formula; a third route to dim S_lam(C^n) for partitions."""
    lam = Partition(lam)
    if len(lam) > n:
        return 0
    lt = transpose(lam)
    value = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            hook = row - j + lt[j] - i - 1
            value *= Fraction(n + j - i, hook)
    assert value.denominator == 1
    return int(value)


def check_schur_oracles(max_size: int = 6, max_n: int = 4, max_vars: int = 12, max_r: int = 6):
    """schur_dim against tableau counts, and Cauchy sums against monomial counts."""
    failures = []
    pairs = 0
    for size in range(max_size + 1):
        for lam in partitions(size):
            for n in range(1, max_n + 1):
                pairs += 1
                # schur_dim needs exactly n parts; longer partitions have no tableaux
                want = schur_dim(lam, n) if len(lam) <= n else 0
                if want != ssyt_count(lam, n):
                    failures.append({"lambda": list(lam), "n": n, "schur_dim": want})
    cauchy = 0
    for n in range(1, max_vars + 1):
        for m in range(n, max_vars // n + 1):
            for r in range(max_r + 1):
                cauchy += 1
                if cauchy_dim(m, n, r) != comb(m * n + r - 1, r):
                    failures.append({"m": m, "n": n, "r": r})
    params = {"max_size": max_size, "max_n": max_n, "max_vars": max_vars, "max_r": max_r}
    return VerificationReport("schur", params, not failures, {"schur_pairs": pairs, "cauchy_cases": cauchy}, failures)
