"""Exact anticommutative algebras: structure tensors, brackets, Lie and
Mal'tsev identity checks.

All arithmetic is over `fractions.Fraction`; there is no floating point here.
Tensors are stored sparsely, 0-based internally, with antisymmetry in the last
two indices enforced at construction.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from .octonion import f_constant
from .report import CheckReport, InputError, fail, ok

Key = Tuple[int, int, int]


@dataclass(frozen=True)
class StructureTensor:
    """Structure constants c^i_jk of an anticommutative algebra, c[i][j][k]
    antisymmetric in (j, k).  Only nonzero entries are stored."""

    dim: int
    entries: Dict[Key, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.dim <= 0:
            raise InputError("dim must be positive")
        clean = {}
        for (i, j, k), v in self.entries.items():
            for idx in (i, j, k):
                if not 0 <= idx < self.dim:
                    raise InputError(f"index {(i, j, k)} out of range for dim {self.dim}")
            v = Fraction(v)
            if v:
                clean[(i, j, k)] = v
        for (i, j, k), v in clean.items():
            if clean.get((i, k, j), Fraction(0)) != -v:
                raise InputError(f"antisymmetry violated at c[{i}][{j}][{k}]")
        object.__setattr__(self, "entries", clean)

    def c(self, i, j, k):
        return self.entries.get((i, j, k), Fraction(0))

    def scaled(self, factor) -> "StructureTensor":
        factor = Fraction(factor)
        return StructureTensor(self.dim, {key: factor * v for key, v in self.entries.items()})

    def to_json_dict(self):
        rows = sorted((i + 1, j + 1, k + 1, v.numerator, v.denominator)
                      for (i, j, k), v in self.entries.items() if j < k)
        return {"dim": self.dim, "entries": [list(r) for r in rows]}

    @staticmethod
    def from_json_dict(data) -> "StructureTensor":
        if not isinstance(data, dict) or "dim" not in data or "entries" not in data:
            raise InputError("structure tensor JSON needs 'dim' and 'entries'")
        dim = data["dim"]
        if not isinstance(dim, int) or dim <= 0:
            raise InputError("'dim' must be a positive integer")
        entries: Dict[Key, Fraction] = {}
        for row in data["entries"]:
            if not (isinstance(row, (list, tuple)) and len(row) == 5):
                raise InputError(f"bad tensor entry {row!r}")
            i, j, k, num, den = row
            if den <= 0:
                raise InputError(f"denominator must be positive in {row!r}")
            i, j, k = i - 1, j - 1, k - 1
            v = Fraction(num, den)
            for key, val in (((i, j, k), v), ((i, k, j), -v)):
                if key in entries and entries[key] != val:
                    raise InputError(f"conflicting entries for c[{key[0]+1}][{key[1]+1}][{key[2]+1}]")
                entries[key] = val
        return StructureTensor(dim, entries)


def _check_vec(c: StructureTensor, x):
    if len(x) != c.dim:
        raise InputError(f"vector length {len(x)} does not match dim {c.dim}")


def bracket(c: StructureTensor, x, y):
    """[x, y]^i = c^i_jk x^j y^k."""
    _check_vec(c, x)
    _check_vec(c, y)
    out = [Fraction(0)] * c.dim
    for (i, j, k), v in c.entries.items():
        if x[j] and y[k]:
            out[i] += v * x[j] * y[k]
    return out


def jacobiator(c: StructureTensor, x, y, z):
    """J(x,y,z) = [x,[y,z]] + [y,[z,x]] + [z,[x,y]]."""
    a = bracket(c, x, bracket(c, y, z))
    b = bracket(c, y, bracket(c, z, x))
    d = bracket(c, z, bracket(c, x, y))
    return [a[i] + b[i] + d[i] for i in range(c.dim)]


def basis_vector(dim, a):
    v = [Fraction(0)] * dim
    v[a] = Fraction(1)
    return v


def is_lie(c: StructureTensor) -> CheckReport:
    """Jacobi identity on all basis triples (sufficient by trilinearity)."""
    r = c.dim
    for a in range(r):
        for b in range(r):
            for d in range(r):
                J = jacobiator(c, basis_vector(r, a), basis_vector(r, b), basis_vector(r, d))
                if any(J):
                    return fail("jacobi", witness=(a, b, d))
    return ok("jacobi")


def _maltsev_probe_set(r):
    xs = [basis_vector(r, a) for a in range(r)]
    for a in range(r):
        for b in range(a + 1, r):
            v = basis_vector(r, a)
            v[b] = Fraction(1)
            xs.append(v)
    return xs


def is_maltsev(c: StructureTensor) -> CheckReport:
    """[J(x,y,z), x] = J(x,y,[x,z]) on the finite probe set {e_a, e_a+e_b}
    for x and all basis y, z; sufficient in characteristic 0 since the
    identity is quadratic in x and linear in y, z."""
    r = c.dim
    for xi, x in enumerate(_maltsev_probe_set(r)):
        for b in range(r):
            y = basis_vector(r, b)
            for d in range(r):
                z = basis_vector(r, d)
                lhs = bracket(c, jacobiator(c, x, y, z), x)
                rhs = jacobiator(c, x, y, bracket(c, x, z))
                if lhs != rhs:
                    return fail("maltsev", witness=(xi, b, d),
                                detail="witness is (probe index, y basis, z basis)")
    return ok("maltsev")


@dataclass(frozen=True)
class YamagutiTensor:
    """d^p_jkl with 6 d^p_jkl = c^p_js c^s_kl - c^p_ks c^s_jl + c^p_sl c^s_jk;
    antisymmetric in (j, k)."""

    dim: int
    entries: Dict[Tuple[int, int, int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: Fraction(v) for k, v in self.entries.items() if v}
        for (p, j, k, l), v in clean.items():
            if clean.get((p, k, j, l), Fraction(0)) != -v:
                raise InputError(f"Yamaguti tensor not antisymmetric at {(p, j, k, l)}")
        object.__setattr__(self, "entries", clean)

    def d(self, p, j, k, l):
        return self.entries.get((p, j, k, l), Fraction(0))


def yamaguti_constants(c: StructureTensor) -> YamagutiTensor:
    """Exact evaluation of the defining contraction for d^p_jkl."""
    r = c.dim
    sixth = Fraction(1, 6)
    out = {}
    for p in range(r):
        for j in range(r):
            for k in range(r):
                for l in range(r):
                    total = Fraction(0)
                    for s in range(r):
                        total += (c.c(p, j, s) * c.c(s, k, l)
                                  - c.c(p, k, s) * c.c(s, j, l)
                                  + c.c(p, s, l) * c.c(s, j, k))
                    if total:
                        out[(p, j, k, l)] = sixth * total
    return YamagutiTensor(r, out)


_ABELIAN_RE = re.compile(r"^abelian\((\d+)\)$")


def catalog_algebra(name: str) -> StructureTensor:
    """Built-in exact tensors: abelian(r), su2, sl2, m7."""
    m = _ABELIAN_RE.match(name)
    if m:
        r = int(m.group(1))
        if r <= 0:
            raise InputError("abelian(r) needs r >= 1")
        return StructureTensor(r, {})
    if name == "su2":
        eps = {}
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            eps[(i, j, k)] = Fraction(1)
            eps[(i, k, j)] = Fraction(-1)
        return StructureTensor(3, eps)
    if name == "sl2":
        # basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
        ent = {}

        def put(i, j, k, v):
            ent[(i, j, k)] = Fraction(v)
            ent[(i, k, j)] = Fraction(-v)

        put(1, 0, 1, 2)
        put(2, 0, 2, -2)
        put(0, 1, 2, 1)
        return StructureTensor(3, ent)
    if name == "m7":
        # commutator algebra of imaginary octonions: c^i_jk = 2 f_ijk
        ent = {}
        for i in range(1, 8):
            for j in range(1, 8):
                for k in range(1, 8):
                    f = f_constant(i, j, k)
                    if f:
                        ent[(i - 1, j - 1, k - 1)] = Fraction(2 * f)
        return StructureTensor(7, ent)
    raise InputError(f"unknown catalog algebra {name!r}")


def load_tensor(path) -> StructureTensor:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read structure tensor from {path}: {exc}") from exc
    return StructureTensor.from_json_dict(data)
