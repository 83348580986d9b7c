"""Finite fermionic Fock space: Jordan-Wigner ladder operators and exact
sparse operator arithmetic over Gaussian rationals.

Operators are stored as (re + i*im)/den with integer sparse parts, so every
check in the lab is exact; a magnitude guard rules out int64 overflow (entries
here stay tiny).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
import scipy.sparse as sp

from .report import CheckReport, InputError, fail, ok

_MAX_ENTRY = 1 << 60


def _csr(m):
    out = sp.csr_matrix(m, dtype=np.int64)
    out.eliminate_zeros()
    return out


class GQSparse:
    """Sparse square matrix (re + i*im) / den with int64 parts, den > 0."""

    __slots__ = ("dim", "den", "re", "im")

    def __init__(self, dim, re, im, den=1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den, re, im = -den, -re, -im
        self.dim = dim
        self.re = _csr(re)
        self.im = _csr(im)
        self.den = int(den)
        self._normalize()

    def _normalize(self):
        vals = [abs(self.den)]
        for part in (self.re, self.im):
            if part.nnz:
                vals.append(int(np.abs(part.data).max()))
        if max(vals) > _MAX_ENTRY:
            raise OverflowError("exact sparse entry exceeded the int64 guard")
        g = self.den
        for part in (self.re, self.im):
            if part.nnz:
                g = math.gcd(g, int(np.gcd.reduce(np.abs(part.data))))
        if g > 1:
            self.den //= g
            self.re = _exact_div(self.re, g)
            self.im = _exact_div(self.im, g)

    # --- constructors ---
    @staticmethod
    def zero(dim):
        z = sp.csr_matrix((dim, dim), dtype=np.int64)
        return GQSparse(dim, z, z.copy())

    @staticmethod
    def identity(dim):
        return GQSparse(dim, sp.identity(dim, dtype=np.int64, format="csr"),
                        sp.csr_matrix((dim, dim), dtype=np.int64))

    @staticmethod
    def from_int(mat):
        mat = _csr(mat)
        dim = mat.shape[0]
        return GQSparse(dim, mat, sp.csr_matrix((dim, dim), dtype=np.int64))

    # --- arithmetic ---
    def __add__(self, other):
        self._check(other)
        return GQSparse(self.dim,
                        self.re * other.den + other.re * self.den,
                        self.im * other.den + other.im * self.den,
                        self.den * other.den)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __matmul__(self, other):
        self._check(other)
        return GQSparse(self.dim,
                        self.re @ other.re - self.im @ other.im,
                        self.re @ other.im + self.im @ other.re,
                        self.den * other.den)

    def scale(self, q):
        """Multiply by an exact rational scalar."""
        q = Fraction(q)
        return GQSparse(self.dim, self.re * q.numerator, self.im * q.numerator,
                        self.den * q.denominator)

    def times_i(self):
        return GQSparse(self.dim, -self.im, self.re, self.den)

    def dagger(self):
        return GQSparse(self.dim, self.re.T.tocsr(), (-self.im.T).tocsr(), self.den)

    def commutator(self, other):
        return self @ other - other @ self

    def anticommutator(self, other):
        return self @ other + other @ self

    # --- predicates ---
    def is_zero(self):
        return self.re.nnz == 0 and self.im.nnz == 0

    def __eq__(self, other):
        if not isinstance(other, GQSparse):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("GQSparse is unhashable")

    @property
    def nnz(self):
        return self.re.nnz + self.im.nnz

    def _check(self, other):
        if not isinstance(other, GQSparse) or other.dim != self.dim:
            raise InputError("operator dimension mismatch")


def _exact_div(part, g):
    out = part.copy()
    out.data = out.data // g
    return out


@dataclass
class FockOps:
    """Jordan-Wigner ladder operators for N sites with n modes per site."""

    modes_per_site: int
    sites: int
    a: List[List[GQSparse]]      # a[x][A]
    adag: List[List[GQSparse]]

    @property
    def dim(self):
        return 2 ** (self.modes_per_site * self.sites)

    def mode(self, x, A):
        return x * self.modes_per_site + A


_SIGMA = np.array([[0, 1], [0, 0]], dtype=np.int64)
_Z = np.array([[1, 0], [0, -1]], dtype=np.int64)
_I2 = np.eye(2, dtype=np.int64)


def build_fock(n: int, N: int) -> FockOps:
    """Exact CAR operators on the 2^(n*N) Fock space (cap n*N <= 16)."""
    if n <= 0 or N <= 0:
        raise InputError("need positive mode and site counts")
    modes = n * N
    if modes > 16:
        raise InputError(f"mode count {modes} exceeds the cap of 16")
    ladder = []
    for m in range(modes):
        factors = [_Z] * m + [_SIGMA] + [_I2] * (modes - m - 1)
        acc = sp.csr_matrix(factors[0])
        for f in factors[1:]:
            acc = sp.kron(acc, f, format="csr")
        ladder.append(GQSparse.from_int(acc))
    a = [[ladder[x * n + A] for A in range(n)] for x in range(N)]
    adag = [[op.dagger() for op in row] for row in a]
    return FockOps(n, N, a, adag)


def car_check(f: FockOps) -> CheckReport:
    """Exhaustive canonical anticommutation relations on all mode pairs."""
    modes = f.modes_per_site * f.sites
    flat_a = [f.a[x][A] for x in range(f.sites) for A in range(f.modes_per_site)]
    flat_ad = [f.adag[x][A] for x in range(f.sites) for A in range(f.modes_per_site)]
    ident = GQSparse.identity(f.dim)
    for m in range(modes):
        for mp in range(modes):
            mixed = flat_a[m].anticommutator(flat_ad[mp])
            expect = ident if m == mp else GQSparse.zero(f.dim)
            if mixed != expect:
                return fail("car", witness=("a-adag", m, mp))
            if not flat_a[m].anticommutator(flat_a[mp]).is_zero():
                return fail("car", witness=("a-a", m, mp))
            if not flat_ad[m].anticommutator(flat_ad[mp]).is_zero():
                return fail("car", witness=("adag-adag", m, mp))
    return ok("car")


@dataclass
class FieldSet:
    """Canonical lattice fields u^A(x) = a_A(x) and momenta p^0_A(x) = -i a†_A(x)."""

    fock: FockOps
    u: List[List[GQSparse]]
    p0: List[List[GQSparse]]

    @property
    def modes_per_site(self):
        return self.fock.modes_per_site

    @property
    def sites(self):
        return self.fock.sites


def build_fields(n: int, N: int) -> FieldSet:
    fock = build_fock(n, N)
    u = [[fock.a[x][A] for A in range(n)] for x in range(N)]
    p0 = [[fock.adag[x][A].times_i().scale(-1) for A in range(n)] for x in range(N)]
    return FieldSet(fock, u, p0)


def canonical_etc_check(f: FieldSet) -> CheckReport:
    """The three postulated equal-time relations, in graded (anticommutator)
    form: {p^0_A(x), u^B(y)} = -i d_AB d_xy, {u,u} = 0, {p^0,p^0} = 0."""
    n, N = f.modes_per_site, f.sites
    dim = f.fock.dim
    minus_i = GQSparse.identity(dim).times_i().scale(-1)
    zero = GQSparse.zero(dim)
    for x in range(N):
        for A in range(n):
            for y in range(N):
                for B in range(n):
                    expect = minus_i if (x == y and A == B) else zero
                    if f.p0[x][A].anticommutator(f.u[y][B]) != expect:
                        return fail("canonical-etc", witness=("p-u", x, A, y, B))
                    if not f.u[x][A].anticommutator(f.u[y][B]).is_zero():
                        return fail("canonical-etc", witness=("u-u", x, A, y, B))
                    if not f.p0[x][A].anticommutator(f.p0[y][B]).is_zero():
                        return fail("canonical-etc", witness=("p-p", x, A, y, B))
    return ok("canonical-etc")


class QuadraticCache:
    """Cached products adag_m a_mp for building mode bilinears."""

    def __init__(self, fock: FockOps):
        self.fock = fock
        self._cache: Dict[Tuple[int, int], GQSparse] = {}

    def pair(self, m, mp):
        key = (m, mp)
        if key not in self._cache:
            n = self.fock.modes_per_site
            self._cache[key] = (self.fock.adag[m // n][m % n]
                                @ self.fock.a[mp // n][mp % n])
        return self._cache[key]

    def bilinear(self, mat) -> GQSparse:
        """a† M a for an integer/rational matrix M over all modes."""
        acc = GQSparse.zero(self.fock.dim)
        for m, row in enumerate(mat):
            for mp, v in enumerate(row):
                if v:
                    acc = acc + self.pair(m, mp).scale(Fraction(v))
        return acc
