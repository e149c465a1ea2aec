"""Generic-matrix combinatorics: minors, signed minors, sign functions, permanents."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .algebra import Poly, PolyRing, RationalMatrix, product_poly
from .combinatorics import Partition, transpose

GL_ENTRY_RANGE = (-3, 3)


@dataclass(frozen=True)
class GenericMatrixShape:
    """An m x n matrix of indeterminates, m >= n >= 1.

    The ring carries m Rees variables T[1..m] alongside the x-variables so that
    R and S = R[T] share one context.
    """

    m: int
    n: int

    def __post_init__(self):
        if not self.m >= self.n >= 1:
            raise ValueError(f"need m >= n >= 1, got {self.m}x{self.n}")

    @classmethod
    def hilbert_burch(cls, n: int) -> "GenericMatrixShape":
        """The n x (n-1) shape."""
        if n < 2:
            raise ValueError("n x (n-1) shape needs n >= 2")
        return cls(n, n - 1)

    @cached_property
    def ring(self) -> PolyRing:
        return PolyRing(self.m, self.n, self.m)

    def x(self, i: int, j: int) -> Poly:
        return self.ring.x(i, j)

    def T(self, k: int) -> Poly:
        return self.ring.T(k)


def index_set(values: Iterable[int]) -> tuple:
    """Normalize to a strictly increasing tuple; duplicates are rejected."""
    s = tuple(sorted(values))
    if len(set(s)) != len(s):
        raise ValueError(f"index set {s} has repeated entries")
    return s


def complement(A: Iterable[int], universe: int) -> tuple:
    A = set(A)
    if any(not 1 <= a <= universe for a in A):
        raise ValueError(f"{sorted(A)} not inside 1..{universe}")
    return tuple(i for i in range(1, universe + 1) if i not in A)


def rho(A: Sequence[int], B: Sequence[int]) -> int:
    """0 if A and B meet, else (-1)^#{(a, b) : a > b}."""
    if set(A) & set(B):
        return 0
    inversions = sum(1 for a in A for b in B if a > b)
    return -1 if inversions % 2 else 1


def sign_of_set(A: Iterable[int]) -> int:
    return -1 if sum(A) % 2 else 1


def sign_identity_check(alpha: int, A: Sequence[int], universe: int) -> bool:
    """Check rho({alpha}, A minus alpha) * rho({alpha}, complement of A) == (-1)^(alpha-1)."""
    A = index_set(A)
    if alpha not in A:
        raise ValueError(f"{alpha} is not in {A}")
    rest = tuple(a for a in A if a != alpha)
    lhs = rho((alpha,), rest) * rho((alpha,), complement(A, universe))
    return lhs == (-1) ** (alpha - 1)


@lru_cache(maxsize=None)
def minor(shape: GenericMatrixShape, rows: tuple, cols: tuple) -> Poly:
    """Determinant of the submatrix on sorted ``rows`` x ``cols`` (Laplace along the first row)."""
    rows, cols = index_set(rows), index_set(cols)
    if len(rows) != len(cols):
        raise ValueError("minor needs as many rows as columns")
    if any(not 1 <= i <= shape.m for i in rows) or any(not 1 <= j <= shape.n for j in cols):
        raise IndexError("minor index out of range")
    ring = shape.ring
    if not rows:
        return ring.one()
    first, rest = rows[0], rows[1:]
    total = ring.zero()
    for pos, c in enumerate(cols):
        sub = minor(shape, rest, cols[:pos] + cols[pos + 1:])
        term = shape.x(first, c) * sub
        total = total - term if pos % 2 else total + term
    return total


def leibniz_det(ring: PolyRing, matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials by the permutation expansion."""
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("matrix is not square")
    total = ring.zero()
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = product_poly(ring, (matrix[i][perm[i]] for i in range(k)))
        total = total - term if inv % 2 else total + term
    return total


def maximal_minor(shape: GenericMatrixShape, i: int) -> Poly:
    """d_i: the maximal minor of an n x (n-1) matrix obtained by deleting row i."""
    _require_hilbert_burch(shape)
    if not 1 <= i <= shape.m:
        raise IndexError(f"row {i} out of range")
    return minor(shape, complement((i,), shape.m), tuple(range(1, shape.n + 1)))


def signed_minor(shape: GenericMatrixShape, i: int) -> Poly:
    """Delta_i = (-1)^i d_i."""
    d = maximal_minor(shape, i)
    return -d if i % 2 else d


def _require_hilbert_burch(shape: GenericMatrixShape):
    if shape.n != shape.m - 1:
        raise ValueError(f"operation needs an n x (n-1) shape, got {shape.m}x{shape.n}")


def y_polynomial(shape: GenericMatrixShape, A: Sequence[int], H: Sequence[int], i: int) -> Poly:
    """Determinant of row i over the rows outside A, restricted to the columns outside H.

    Computed by the permutation expansion of the explicit matrix, so a
    repeated row (i outside A) gives zero.
    """
    _require_hilbert_burch(shape)
    n = shape.m
    A, H = index_set(A), index_set(H)
    r = len(A)
    if not (2 <= r <= n and len(H) == r - 2):
        raise ValueError(f"need #A = r in [2, n] and #H = r - 2 (got #A={len(A)}, #H={len(H)})")
    if not 1 <= i <= n:
        raise IndexError(f"row {i} out of range")
    rows = (i,) + complement(A, n)
    cols = complement(H, n - 1)
    mat = [[shape.x(a, b) for b in cols] for a in rows]
    return leibniz_det(shape.ring, mat)


def weakly_increasing(length: int, upto: int) -> list[tuple]:
    return list(itertools.combinations_with_replacement(range(1, upto + 1), length))


def permanent(ring: PolyRing, matrix: Sequence[Sequence[Poly]]) -> Poly:
    k = len(matrix)
    total = ring.zero()
    for perm in itertools.permutations(range(k)):
        total = total + product_poly(ring, (matrix[i][perm[i]] for i in range(k)))
    return total


def generalized_permanent(shape: GenericMatrixShape, alpha: Sequence[int], beta: Sequence[int]) -> Poly:
    if len(alpha) != len(beta):
        raise ValueError("row and column multi-indices differ in length")
    return permanent(shape.ring, [[shape.x(a, b) for b in beta] for a in alpha])


def generalized_permanents(shape: GenericMatrixShape, t: int) -> list[Poly]:
    """Permanents of [x(alpha_i, beta_j)] over weakly increasing alpha, beta of length t.

    Enumerated one per pair (alpha, beta); scalar multiples such as 2*x11^2 are kept.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    return [
        generalized_permanent(shape, a, b)
        for a in weakly_increasing(t, shape.m)
        for b in weakly_increasing(t, shape.n)
    ]


def leading_minor(shape: GenericMatrixShape, l: int) -> Poly:
    if not 0 <= l <= shape.n:
        raise ValueError(f"leading minor of size {l} does not fit {shape.m}x{shape.n}")
    idx = tuple(range(1, l + 1))
    return minor(shape, idx, idx)


def det_lambda(shape: GenericMatrixShape, lam: Sequence[int]) -> Poly:
    """Product of the leading principal minors of sizes given by the transpose of lam."""
    lam = Partition(lam)
    cols = transpose(lam)
    if cols and cols[0] > shape.n:
        raise ValueError(f"{tuple(lam)} has more than {shape.n} parts")
    return product_poly(shape.ring, (leading_minor(shape, l) for l in cols))


# ---------------------------------------------------------------------------
# GL action


def gl_random_element(shape: GenericMatrixShape, seed) -> tuple[RationalMatrix, RationalMatrix]:
    """A seeded pair (theta1, theta2) of invertible integer matrices, entries in [-3, 3]."""
    rng = random.Random(seed)
    lo, hi = GL_ENTRY_RANGE

    def draw(k):
        while True:
            mat = RationalMatrix([[rng.randint(lo, hi) for _ in range(k)] for _ in range(k)])
            if mat.det() != 0:
                return mat

    return draw(shape.m), draw(shape.n)


def _linear_images(shape: GenericMatrixShape, left: RationalMatrix, right: RationalMatrix) -> dict:
    """x(i,j) -> (left * X * right)[i,j] as linear forms."""
    m, n = shape.m, shape.n
    images = {}
    for i in range(m):
        for j in range(n):
            form = shape.ring.zero()
            for k in range(m):
                a = left[i, k]
                if not a:
                    continue
                for l in range(n):
                    b = right[l, j]
                    if b:
                        form = form + shape.x(k + 1, l + 1).scale(a * b)
            images[(i + 1, j + 1)] = form
    return images


def gl_act(shape: GenericMatrixShape, theta, f: Poly) -> Poly:
    """theta . f for theta = (theta1, theta2): substitute X -> theta1 X theta2^-1."""
    t1, t2 = theta
    return f.substitute_linear(_linear_images(shape, t1, t2.inverse()))


def gl_act_dual(shape: GenericMatrixShape, theta, f: Poly) -> Poly:
    """Contragredient action on operator symbols: X* -> (theta1^-1)^T X* theta2^T."""
    t1, t2 = theta
    return f.substitute_linear(_linear_images(shape, t1.inverse().transpose(), t2.transpose()))
