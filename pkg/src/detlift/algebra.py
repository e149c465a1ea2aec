"""Exact arithmetic kernel: sparse polynomials over Q and rational linear algebra.

A :class:`PolyRing` fixes the variables ``x[i,j]`` (1 <= i <= m, 1 <= j <= n)
of a generic m x n matrix together with Rees variables ``T[k]``
(1 <= k <= nt).  Monomials are dense exponent tuples laid out in the fixed
variable order: x-variables row-major, then the T-variables by index.
"""

from __future__ import annotations

import heapq
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from operator import add, sub
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple, Sequence


class VarId(NamedTuple):
    """A ring variable: ``kind`` is ``"X"`` (uses ``i``, ``j``) or ``"T"`` (uses ``i``)."""

    kind: str
    i: int
    j: int = 0

    def __str__(self):
        if self.kind == "X":
            return f"x[{self.i},{self.j}]"
        return f"T[{self.i}]"


def as_rational(c):
    """Normalize an exact scalar: integral values become ``int``, others ``Fraction``."""
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return as_rational(Fraction(c.numerator, c.denominator))
    raise TypeError(f"inexact or unsupported coefficient {c!r}")


def format_rational(c) -> str:
    c = as_rational(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class PolyRing:
    """Q[x(i,j), T(k)] for an m x n generic matrix and ``nt`` Rees variables."""

    m: int
    n: int
    nt: int = 0

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.nt < 0:
            raise ValueError(f"invalid ring shape ({self.m}, {self.n}, {self.nt})")

    @property
    def nx(self) -> int:
        return self.m * self.n

    @property
    def nvars(self) -> int:
        return self.m * self.n + self.nt

    @property
    def variables(self) -> list[VarId]:
        xs = [VarId("X", i, j) for i in range(1, self.m + 1) for j in range(1, self.n + 1)]
        return xs + [VarId("T", k) for k in range(1, self.nt + 1)]

    def xindex(self, i: int, j: int) -> int:
        if not (1 <= i <= self.m and 1 <= j <= self.n):
            raise IndexError(f"x[{i},{j}] outside {self.m}x{self.n} matrix")
        return (i - 1) * self.n + (j - 1)

    def tindex(self, k: int) -> int:
        if not 1 <= k <= self.nt:
            raise IndexError(f"T[{k}] outside 1..{self.nt}")
        return self.nx + k - 1

    def index(self, v: VarId) -> int:
        return self.xindex(v.i, v.j) if v.kind == "X" else self.tindex(v.i)

    def var_at(self, idx: int) -> VarId:
        if idx < self.nx:
            return VarId("X", idx // self.n + 1, idx % self.n + 1)
        return VarId("T", idx - self.nx + 1)

    # constructors
    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = as_rational(c)
        return Poly(self, {self.unit_exp(): c} if c else {})

    def unit_exp(self) -> tuple:
        return (0,) * self.nvars

    def monomial(self, exps: Mapping[int, int], coeff=1) -> "Poly":
        e = [0] * self.nvars
        for idx, k in exps.items():
            e[idx] += k
        coeff = as_rational(coeff)
        return Poly(self, {tuple(e): coeff} if coeff else {})

    def x(self, i: int, j: int) -> "Poly":
        return self.monomial({self.xindex(i, j): 1})

    def T(self, k: int) -> "Poly":
        return self.monomial({self.tindex(k): 1})

    def xvars(self) -> list["Poly"]:
        return [self.monomial({k: 1}) for k in range(self.nx)]

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self)


def _check_exps(exps: Iterable[int], nvars: int) -> tuple:
    e = tuple(exps)
    if len(e) != nvars:
        raise ValueError("exponent vector has wrong length")
    return e


EXP_BITS = 16
_FIELD = (1 << EXP_BITS) - 1


def _packer(ring: PolyRing):
    """Pack exponent tuples into ints, variable 0 in the most significant field.

    Integer order on packed keys equals lex order on exponent tuples, and
    monomial multiplication is integer addition.
    """
    nv = ring.nvars
    shifts = [EXP_BITS * (nv - 1 - i) for i in range(nv)]

    def pack(e):
        key = 0
        for k, s in zip(e, shifts):
            if k:
                if not 0 < k <= _FIELD:
                    raise ValueError(f"exponent {k} out of range")
                key |= k << s
        return key

    def unpack(key):
        return tuple((key >> s) & _FIELD for s in shifts)

    return pack, unpack


_PACKERS: dict = {}


def packer(ring: PolyRing):
    p = _PACKERS.get(ring)
    if p is None:
        p = _PACKERS[ring] = _packer(ring)
    return p


def _clean(c):
    # Fraction -> int when integral; ``type`` avoids the slow ABC isinstance path
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Sparse polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples to nonzero coefficients.  Internally the
    exponents are packed into integers (see :func:`packer`).  Instances are
    treated as immutable; every operation returns a new polynomial.
    """

    __slots__ = ("ring", "_p", "_terms", "_hash", "_deg")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, object] | None = None):
        self.ring = ring
        pack = packer(ring)[0]
        nv = ring.nvars
        packed: dict = {}
        deg = 0
        for e, c in (terms or {}).items():
            c = as_rational(c)
            if not c:
                continue
            if len(e) != nv:
                raise ValueError("exponent vector has wrong length")
            if min(e, default=0) < 0:
                raise ValueError("negative exponent in polynomial")
            k = pack(e)
            v = packed.get(k, 0) + c
            if v:
                packed[k] = _clean(v)
            else:
                packed.pop(k, None)
            deg = max(deg, sum(e))
        self._p = packed
        self._terms = None
        self._hash = None
        self._deg = deg

    @classmethod
    def _raw(cls, ring, packed, deg):
        # trusted constructor: packed terms already canonical, deg an upper bound
        p = cls.__new__(cls)
        p.ring = ring
        p._p = packed
        p._terms = None
        p._hash = None
        p._deg = deg if packed else 0
        return p

    @property
    def terms(self) -> dict:
        if self._terms is None:
            unpack = packer(self.ring)[1]
            self._terms = {unpack(k): c for k, c in self._p.items()}
        return self._terms

    def __len__(self):
        return len(self._p)

    # ----- predicates and degrees -----
    def is_zero(self) -> bool:
        return not self._p

    def is_constant(self) -> bool:
        return not self._p or list(self._p) == [0]

    def constant_term(self):
        return self._p.get(0, 0)

    def degree(self) -> int:
        if not self._p:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(e) for e in self.terms)

    def x_degree(self) -> int:
        if not self._p:
            raise ValueError("degree of the zero polynomial is undefined")
        nx = self.ring.nx
        return max(sum(e[:nx]) for e in self.terms)

    def t_degree(self) -> int:
        if not self._p:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(self.t_degree_set())

    def t_degree_set(self) -> set:
        """Distinct T-degrees of the terms (T-variables occupy the low fields)."""
        nt = self.ring.nt
        mask = (1 << (EXP_BITS * nt)) - 1
        parts = {k & mask for k in self._p}
        out = set()
        for part in parts:
            total = 0
            while part:
                total += part & _FIELD
                part >>= EXP_BITS
            out.add(total)
        return out

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_bihomogeneous(self) -> bool:
        """Homogeneous separately in the x-variables and in the T-variables."""
        nx = self.ring.nx
        return len({(sum(e[:nx]), sum(e[nx:])) for e in self.terms}) <= 1

    def involves_t(self) -> bool:
        mask = (1 << (EXP_BITS * self.ring.nt)) - 1
        return any(k & mask for k in self._p)

    def leading_term(self):
        if not self._p:
            raise ValueError("zero polynomial has no leading term")
        k = max(self._p)
        return packer(self.ring)[1](k), self._p[k]

    # ----- arithmetic -----
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"incompatible rings {self.ring} and {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._p) > len(self._p):
            big, small = other._p, self._p
        else:
            big, small = self._p, other._p
        out = dict(big)
        get = out.get
        for k, c in small.items():
            v = get(k, 0) + c
            if v:
                out[k] = _clean(v)
            else:
                del out[k]
        return Poly._raw(self.ring, out, max(self._deg, other._deg))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {k: -c for k, c in self._p.items()}, self._deg)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = as_rational(c)
        if not c:
            return self.ring.zero()
        return Poly._raw(self.ring, {k: _clean(v * c) for k, v in self._p.items()}, self._deg)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        deg = self._deg + other._deg
        if deg > _FIELD:
            raise OverflowError("product degree exceeds packed exponent range")
        a, b = self._p, other._p
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        if all(type(c) is int for c in self._p.values()) and all(type(c) is int for c in other._p.values()):
            res = {k: c for k, c in out.items() if c}
        else:
            res = {k: _clean(c) for k, c in out.items() if c}
        return Poly._raw(self.ring, res, deg)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self._p == other._p
        try:
            return self._p == self.ring.const(other)._p
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._p.items())))
        return self._hash

    def __bool__(self):
        return bool(self._p)

    def __repr__(self):
        return f"Poly({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # ----- calculus and substitution -----
    def diff(self, idx: int, k: int = 1) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            p = e[idx]
            if p >= k:
                f = 1
                for s in range(k):
                    f *= p - s
                ne = list(e)
                ne[idx] = p - k
                out[tuple(ne)] = c * f
        return Poly(self.ring, out)

    def substitute(self, mapping: Mapping[int, "Poly"]) -> "Poly":
        """Replace variable ``idx`` by ``mapping[idx]``; unmapped variables stay put."""
        ring = self.ring
        for q in mapping.values():
            if q.ring != ring:
                raise ValueError("substitution value lives in a different ring")
        powers: dict = {}

        def power(idx, k):
            key = (idx, k)
            if key not in powers:
                powers[key] = mapping[idx] ** k
            return powers[key]

        result = ring.zero()
        for e, c in self.terms.items():
            rest = list(e)
            term = None
            for idx, k in enumerate(e):
                if k and idx in mapping:
                    rest[idx] = 0
                    term = power(idx, k) if term is None else term * power(idx, k)
            mono = Poly(ring, {tuple(rest): c})
            result = result + (mono if term is None else term * mono)
        return result

    def substitute_linear(self, xmap: Mapping[tuple, "Poly"] | Callable[[int, int], "Poly"]) -> "Poly":
        """Apply a linear change of the x-variables.

        ``xmap`` sends ``(i, j)`` to a homogeneous linear form in the
        x-variables (a dict or a callable).  T-variables are left alone.
        """
        ring = self.ring
        mapping = {}
        used = {idx for e in self.terms for idx, k in enumerate(e[: ring.nx]) if k}
        for idx in sorted(used):
            v = ring.var_at(idx)
            try:
                form = xmap(v.i, v.j) if callable(xmap) else xmap[(v.i, v.j)]
            except KeyError:
                raise KeyError(f"no assignment for x[{v.i},{v.j}]") from None
            if form.involves_t() or any(sum(e) != 1 for e in form.terms):
                raise ValueError(f"image of x[{v.i},{v.j}] is not a linear form in x")
            mapping[idx] = form
        return self.substitute(mapping)

    def coefficient_in_t(self, alpha: Sequence[int]) -> "Poly":
        """The x-polynomial multiplying T^alpha."""
        nt = self.ring.nt
        alpha = tuple(alpha)
        if len(alpha) != nt:
            raise ValueError("T-exponent has wrong length")
        mask = (1 << (EXP_BITS * nt)) - 1
        target = packer(self.ring)[0]((0,) * self.ring.nx + alpha)
        return Poly._raw(self.ring, {k - target: c for k, c in self._p.items() if k & mask == target}, self._deg)

    def t_support(self) -> set:
        nx = self.ring.nx
        return {e[nx:] for e in self.terms}

    def exact_div(self, q: "Poly") -> "Poly":
        """Return ``self / q``; raise ``ArithmeticError`` if the remainder is nonzero.

        Division by the lex-leading term; for a single divisor a nonzero
        remainder certifies non-divisibility.
        """
        q = self._coerce(q)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        unpack = packer(self.ring)[1]
        lt_k = max(q._p)
        lt_c = q._p[lt_k]
        lt_e = unpack(lt_k)
        qterms = list(q._p.items())
        rem = dict(self._p)
        heap = [-k for k in rem]
        heapq.heapify(heap)
        quot = {}
        while heap:
            k = -heapq.heappop(heap)
            c = rem.get(k)
            if not c:
                continue
            if any(a < b for a, b in zip(unpack(k), lt_e)):
                raise ArithmeticError("not divisible")
            shift = k - lt_k
            f = as_rational(Fraction(c) / lt_c)
            quot[shift] = f
            for qk, qc in qterms:
                nk = qk + shift
                v = rem.get(nk, 0) - f * qc
                if v:
                    if nk not in rem:
                        heapq.heappush(heap, -nk)
                    rem[nk] = _clean(v)
                else:
                    rem.pop(nk, None)
        return Poly._raw(self.ring, quot, self._deg)

    def divides(self, p: "Poly") -> bool:
        try:
            p.exact_div(self)
        except ArithmeticError:
            return False
        return True

    # ----- text format -----
    def sorted_terms(self) -> list:
        unpack = packer(self.ring)[1]
        return [(unpack(k), self._p[k]) for k in sorted(self._p, reverse=True)]

    def to_text(self) -> str:
        if not self._p:
            return "0"
        return " + ".join(format_term(self.ring, e, c) for e, c in self.sorted_terms())

    @classmethod
    def from_text(cls, text: str, ring: PolyRing) -> "Poly":
        return parse_poly(text, ring)


def format_term(ring: PolyRing, e: Sequence[int], c) -> str:
    factors = [format_rational(c)]
    for idx, k in enumerate(e):
        if k:
            factors.append(f"{ring.var_at(idx)}^{k}")
    return "*".join(factors)


_NUMBER = re.compile(r"^(\d+)(?:/(\d+))?$")
_VAR = re.compile(r"^(?:x\[(\d+),(\d+)\]|T\[(\d+)\])(?:\^(-?\d+))?$")
_SPLIT = re.compile(r"(?<![\^*])(?=[+-])")


def parse_terms(text: str, ring: PolyRing) -> list[tuple[tuple, object]]:
    """Parse the polynomial text format into ``(exponents, coefficient)`` pairs.

    Whitespace is ignored; ``a + -b`` and ``a - b`` are both accepted, as are
    omitted unit coefficients and exponents.  Exponents may be negative (the
    Laurent format shares this grammar).
    """
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    out = []
    sign = 1
    for piece in _SPLIT.split(s):
        while piece and piece[0] in "+-":
            if piece[0] == "-":
                sign = -sign
            piece = piece[1:]
        if not piece:
            continue
        coeff = Fraction(sign)
        e = [0] * ring.nvars
        for factor in piece.split("*"):
            num = _NUMBER.match(factor)
            if num:
                coeff *= Fraction(int(num.group(1)), int(num.group(2) or 1))
                continue
            var = _VAR.match(factor)
            if not var:
                raise ValueError(f"cannot parse factor {factor!r}")
            if var.group(3) is not None:
                idx = ring.tindex(int(var.group(3)))
            else:
                idx = ring.xindex(int(var.group(1)), int(var.group(2)))
            e[idx] += int(var.group(4)) if var.group(4) is not None else 1
        out.append((tuple(e), as_rational(coeff)))
        sign = 1
    if sign != 1:
        raise ValueError("dangling sign in polynomial text")
    return out


def parse_poly(text: str, ring: PolyRing) -> Poly:
    acc: dict = {}
    for e, c in parse_terms(text, ring):
        if min(e, default=0) < 0:
            raise ValueError("negative exponent in polynomial text")
        acc[e] = acc.get(e, 0) + c
    return Poly(ring, acc)


# ---------------------------------------------------------------------------
# monomial enumeration and graded components


def exponent_vectors(nvars: int, degree: int) -> Iterator[tuple]:
    """All exponent vectors of length ``nvars`` summing to ``degree`` (lex descending)."""
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree, -1, -1):
        for rest in exponent_vectors(nvars - 1, degree - first):
            yield (first,) + rest


def x_monomials(ring: PolyRing, degree: int) -> list[tuple]:
    """Full exponent tuples of the degree-``degree`` monomials in the x-variables."""
    pad = (0,) * ring.nt
    return [e + pad for e in exponent_vectors(ring.nx, degree)]


MAX_GRADED_VARS = 12
MAX_GRADED_DEGREE = 8


def graded_component_dim(gens: Sequence[Poly], r: int, ring: PolyRing | None = None) -> int:
    """Dimension over Q of the degree-``r`` part of the ideal generated by ``gens``.

    The ideal lives in the x-variable polynomial ring.  The component is
    spanned by the products ``monomial * g``; its dimension is the rank of their
    coefficient matrix.  Feasible for at most 12 variables and ``r <= 8``.
    """
    if r < 0:
        raise ValueError("degree must be nonnegative")
    if ring is None:
        if not gens:
            return 0
        ring = gens[0].ring
    if ring.nx > MAX_GRADED_VARS or r > MAX_GRADED_DEGREE:
        raise ValueError(
            f"graded component too large: {ring.nx} variables, degree {r} "
            f"(bound {MAX_GRADED_VARS} variables, degree {MAX_GRADED_DEGREE})"
        )
    rows = []
    mono_cache: dict = {}
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
        if g.is_zero():
            continue
        if not g.is_homogeneous():
            raise ValueError(f"generator {g} is not homogeneous")
        if g.involves_t():
            raise ValueError("generators must not involve T-variables")
        k = r - g.degree()
        if k < 0:
            continue
        if k not in mono_cache:
            mono_cache[k] = x_monomials(ring, k)
        for mono in mono_cache[k]:
            rows.append({tuple(map(add, e, mono)): c for e, c in g.terms.items()})
    return sparse_rank(rows)


def sparse_rank(rows: Iterable[Mapping[object, object]]) -> int:
    """Exact rank of a sparse matrix given as rows ``{column_key: value}``.

    Incremental echelon form over Q: each pivot row is stored normalized with
    its smallest column key as the pivot.
    """
    pivots: dict = {}
    for row in rows:
        v = {k: Fraction(c) for k, c in row.items() if c}
        while v:
            col = min(v)
            prow = pivots.get(col)
            if prow is None:
                lead = v[col]
                pivots[col] = {k: c / lead for k, c in v.items()}
                break
            f = v[col]
            for k, c in prow.items():
                nv = v.get(k, 0) - f * c
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return len(pivots)


# ---------------------------------------------------------------------------
# dense rational matrices


class RationalMatrix:
    """Dense matrix over Q with exact row reduction."""

    def __init__(self, rows: Sequence[Sequence[object]]):
        rows = [[Fraction(as_rational(c)) for c in row] for row in rows]
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0

    @classmethod
    def identity(cls, k: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.entries == other.entries

    def __repr__(self):
        return f"RationalMatrix({[[format_rational(c) for c in r] for r in self.entries]})"

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([list(col) for col in zip(*self.entries)]) if self.rows else RationalMatrix([])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries))
        return RationalMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries])

    def echelon(self) -> tuple[list[list[Fraction]], list[int]]:
        """Row echelon form and pivot columns (Gaussian elimination, first nonzero pivot)."""
        m = [list(r) for r in self.entries]
        pivots = []
        pr = 0
        for pc in range(self.cols):
            sel = next((i for i in range(pr, self.rows) if m[i][pc] != 0), None)
            if sel is None:
                continue
            m[pr], m[sel] = m[sel], m[pr]
            p = m[pr][pc]
            for i in range(pr + 1, self.rows):
                f = m[i][pc]
                if f:
                    f /= p
                    m[i] = [a - f * b for a, b in zip(m[i], m[pr])]
            pivots.append(pc)
            pr += 1
            if pr == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.echelon()[1])

    def rank_by_columns(self) -> int:
        """Rank via column reduction, i.e. row reduction of the transpose."""
        return self.transpose().rank()

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        k = self.rows
        d = Fraction(1)
        for c in range(k):
            sel = next((i for i in range(c, k) if m[i][c] != 0), None)
            if sel is None:
                return 0
            if sel != c:
                m[c], m[sel] = m[sel], m[c]
                d = -d
            p = m[c][c]
            d *= p
            for i in range(c + 1, k):
                f = m[i][c]
                if f:
                    f /= p
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return as_rational(d)

    def inverse(self) -> "RationalMatrix":
        k = self.rows
        if k != self.cols:
            raise ValueError("inverse of a non-square matrix")
        aug = [list(r) + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(self.entries)]
        for c in range(k):
            sel = next((i for i in range(c, k) if aug[i][c] != 0), None)
            if sel is None:
                raise ZeroDivisionError("matrix is singular")
            aug[c], aug[sel] = aug[sel], aug[c]
            p = aug[c][c]
            aug[c] = [a / p for a in aug[c]]
            for i in range(k):
                if i != c and aug[i][c]:
                    f = aug[i][c]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
        return RationalMatrix([r[k:] for r in aug])


def product_poly(ring: PolyRing, factors: Iterable[Poly]) -> Poly:
    result = ring.one()
    for f in factors:
        result = result * f
    return result


def combinations_sorted(universe: Sequence[int], k: int) -> list[tuple]:
    return list(itertools.combinations(sorted(universe), k))
