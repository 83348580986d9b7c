"""Abstract enveloping Lie algebra spanned by {S_j, T_j, Y_jk}: quotient by
the cyclic Y-relations, bracket table, Jacobi certification, and an
independent matrix-closure oracle for its dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .algebra import StructureTensor, YamagutiTensor, is_maltsev, yamaguti_constants
from .birep import GeneratorSet, extract_yamagutians
from .matrices import commutator, mat_eq, mat_lincomb, mat_is_zero, zeros
from .report import CheckReport, InputError, fail, ok

__all__ = [
    "YamagutiTensor", "yamaguti_constants", "EnvelopeAlgebra",
    "build_envelope", "check_jacobi", "matrix_closure_dim", "realize_check",
]

Label = Tuple  # ("S", j) | ("T", j) | ("Y", j, k) with j < k
Vec = Dict[Label, Fraction]


class EnvelopeInconsistencyError(RuntimeError):
    """The bracket table is incompatible with the Y-quotient; implementation bug."""


def _canon_y(j, k):
    """Y_jk for arbitrary j != k as (sign, canonical label); None when j == k."""
    if j == k:
        return None
    if j < k:
        return 1, ("Y", j, k)
    return -1, ("Y", k, j)


def _vec_add(acc: Vec, label, coeff):
    if not coeff:
        return
    new = acc.get(label, Fraction(0)) + coeff
    if new:
        acc[label] = new
    else:
        acc.pop(label, None)


def _y_relations(c: StructureTensor) -> List[Vec]:
    """The cyclic constraints c^p_jk Y_pl + c^p_kl Y_pj + c^p_lj Y_pk = 0,
    one row per triple j < k < l (the form is totally antisymmetric)."""
    r = c.dim
    rows = []
    for j in range(r):
        for k in range(j + 1, r):
            for l in range(k + 1, r):
                row: Vec = {}
                for p in range(r):
                    for (a, b, out) in ((j, k, l), (k, l, j), (l, j, k)):
                        v = c.c(p, a, b)
                        if v:
                            cy = _canon_y(p, out)
                            if cy is not None:
                                _vec_add(row, cy[1], cy[0] * v)
                if row:
                    rows.append(row)
    return rows


def _reduce_relations(rows: List[Vec], ypairs: List[Tuple[int, int]]):
    """RREF with pivots chosen in lexicographic (j, k) order.  Returns the
    expand map (every Y pair -> combination of independent pairs) and rank."""
    order = {("Y", j, k): idx for idx, (j, k) in enumerate(ypairs)}
    pivots: Dict[Label, Vec] = {}
    for row in rows:
        row = dict(row)
        # reduce by existing pivot rows
        for piv in sorted(pivots, key=order.get):
            coeff = row.get(piv)
            if coeff:
                for lbl, v in pivots[piv].items():
                    _vec_add(row, lbl, -coeff * v)
                row.pop(piv, None)
        if not row:
            continue
        piv = min(row, key=order.get)
        pc = row.pop(piv)
        norm = {lbl: v / pc for lbl, v in row.items()}
        # back-substitute into older pivot rows
        for other, expr in pivots.items():
            coeff = expr.get(piv)
            if coeff:
                expr.pop(piv)
                for lbl, v in norm.items():
                    _vec_add(expr, lbl, coeff * v)
        pivots[piv] = norm
    expand: Dict[Tuple[int, int], Vec] = {}
    for (j, k) in ypairs:
        lbl = ("Y", j, k)
        if lbl in pivots:
            expand[(j, k)] = {l: -v for l, v in pivots[lbl].items()}
        else:
            expand[(j, k)] = {lbl: Fraction(1)}
    return expand, len(pivots)


@dataclass(frozen=True)
class EnvelopeAlgebra:
    """Bracket table of the Lie algebra spanned by S_j, T_j and the
    independent Yamaguti generators surviving the cyclic relations."""

    r: int
    basis: Tuple[Label, ...]
    expand: Dict[Tuple[int, int], Vec]
    brackets: Dict[Tuple[Label, Label], Vec]
    relation_rank: int

    @property
    def dim(self):
        return len(self.basis)

    @property
    def dimension_bound(self):
        return 2 * self.r + self.r * (self.r - 1) // 2

    def bracket(self, a: Label, b: Label) -> Vec:
        return dict(self.brackets[(a, b)])

    def bracket_vec(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for la, ca in u.items():
            for lb, cb in v.items():
                for lbl, coeff in self.brackets[(la, lb)].items():
                    _vec_add(out, lbl, ca * cb * coeff)
        return out

    def to_json_dict(self):
        def lbl_str(lbl):
            if lbl[0] == "Y":
                return f"Y{lbl[1] + 1},{lbl[2] + 1}"
            return f"{lbl[0]}{lbl[1] + 1}"

        rows = []
        index = {lbl: i for i, lbl in enumerate(self.basis)}
        for a in self.basis:
            for b in self.basis:
                if index[a] < index[b] and self.brackets[(a, b)]:
                    terms = sorted(
                        ([lbl_str(l), v.numerator, v.denominator]
                         for l, v in self.brackets[(a, b)].items()),
                        key=lambda t: t[0])
                    rows.append([lbl_str(a), lbl_str(b), terms])
        return {
            "dimension": self.dim,
            "dimension_bound": self.dimension_bound,
            "relation_rank": self.relation_rank,
            "basis": [lbl_str(l) for l in self.basis],
            "brackets": rows,
        }


def _formula_bracket(c: StructureTensor, d: YamagutiTensor, a: Label, b: Label) -> Vec:
    """Theorem bracket of two span labels, over the full (unreduced) label set."""
    r = c.dim
    out: Vec = {}

    def add_y(j, k, coeff):
        cy = _canon_y(j, k)
        if cy is not None:
            _vec_add(out, cy[1], cy[0] * coeff)

    ta, tb = a[0], b[0]
    if ta in "ST" and tb in "ST":
        j, k = a[1], b[1]
        if ta == "S" and tb == "S":
            add_y(j, k, Fraction(2))
            cs, ct = Fraction(1, 3), Fraction(2, 3)
        elif ta == "T" and tb == "T":
            add_y(j, k, Fraction(2))
            cs, ct = Fraction(-2, 3), Fraction(-1, 3)
        elif ta == "S":
            add_y(j, k, Fraction(-1))
            cs, ct = Fraction(1, 3), Fraction(-1, 3)
        else:  # [T_j, S_k] = -[S_k, T_j]
            add_y(k, j, Fraction(1))
            cs, ct = Fraction(1, 3), Fraction(-1, 3)
            j, k = k, j
            cs, ct = -cs, -ct
        for p in range(r):
            v = c.c(p, j, k)
            if v:
                _vec_add(out, ("S", p), cs * v)
                _vec_add(out, ("T", p), ct * v)
        return out
    if ta == "Y" and tb in "ST":
        j, k, n = a[1], a[2], b[1]
        for p in range(r):
            v = d.d(p, j, k, n)
            if v:
                _vec_add(out, (tb, p), v)
        return out
    if ta in "ST" and tb == "Y":
        rev = _formula_bracket(c, d, b, a)
        return {lbl: -v for lbl, v in rev.items()}
    # [Y_jk, Y_ln] = d^p_jkl Y_pn + d^p_jkn Y_lp
    j, k = a[1], a[2]
    l, n = b[1], b[2]
    for p in range(r):
        v = d.d(p, j, k, l)
        if v:
            add_y(p, n, v)
        v = d.d(p, j, k, n)
        if v:
            add_y(l, p, v)
    return out


def _expand_vec(vec: Vec, expand) -> Vec:
    out: Vec = {}
    for lbl, coeff in vec.items():
        if lbl[0] == "Y":
            for lbl2, v in expand[(lbl[1], lbl[2])].items():
                _vec_add(out, lbl2, coeff * v)
        else:
            _vec_add(out, lbl, coeff)
    return out


def build_envelope(c: StructureTensor) -> EnvelopeAlgebra:
    """Quotient the free span of {S_j, T_j, Y_jk} by the cyclic Y-relations
    and write all theorem brackets in the reduced basis.  Consistency of the
    bracket table with the quotient is verified, not assumed."""
    rep = is_maltsev(c)
    if not rep.passed:
        raise InputError(f"build_envelope needs a Mal'tsev tensor; witness {rep.witness}")
    r = c.dim
    ypairs = [(j, k) for j in range(r) for k in range(j + 1, r)]
    expand, rank = _reduce_relations(_y_relations(c), ypairs)
    basis: List[Label] = [("S", j) for j in range(r)] + [("T", j) for j in range(r)]
    basis += [("Y", j, k) for (j, k) in ypairs
              if expand[(j, k)] == {("Y", j, k): Fraction(1)}]
    d = yamaguti_constants(c)
    brackets = {}
    for a in basis:
        for b in basis:
            brackets[(a, b)] = _expand_vec(_formula_bracket(c, d, a, b), expand)
    env = EnvelopeAlgebra(r, tuple(basis), expand, brackets, rank)
    _check_quotient_consistency(c, d, env)
    return env


def _check_quotient_consistency(c, d, env: EnvelopeAlgebra):
    """Brackets of eliminated Y's must agree with the bilinear extension of
    the reduced table; a mismatch is an implementation bug, so abort."""
    full: List[Label] = list(env.basis) + [
        ("Y", j, k) for (j, k) in env.expand
        if env.expand[(j, k)] != {("Y", j, k): Fraction(1)}]
    for a in full:
        va = _expand_vec({a: Fraction(1)}, env.expand)
        for b in full:
            vb = _expand_vec({b: Fraction(1)}, env.expand)
            direct = _expand_vec(_formula_bracket(c, d, a, b), env.expand)
            via_table = env.bracket_vec(va, vb)
            if direct != via_table:
                raise EnvelopeInconsistencyError(
                    f"bracket of {a} and {b} inconsistent with the Y-quotient")


def check_jacobi(env: EnvelopeAlgebra) -> CheckReport:
    """Jacobi identity on all basis triples of the reduced bracket table."""
    basis = env.basis
    n = len(basis)
    for ia in range(n):
        va = {basis[ia]: Fraction(1)}
        for ib in range(ia + 1, n):
            vb = {basis[ib]: Fraction(1)}
            ab = env.bracket(basis[ia], basis[ib])
            for ic in range(ib + 1, n):
                vc = {basis[ic]: Fraction(1)}
                bc = env.bracket(basis[ib], basis[ic])
                ca = env.bracket(basis[ic], basis[ia])
                total: Vec = {}
                for lbl, v in env.bracket_vec(va, bc).items():
                    _vec_add(total, lbl, v)
                for lbl, v in env.bracket_vec(vb, ca).items():
                    _vec_add(total, lbl, v)
                for lbl, v in env.bracket_vec(vc, ab).items():
                    _vec_add(total, lbl, v)
                if total:
                    return fail("jacobi", witness=(basis[ia], basis[ib], basis[ic]))
    return ok("jacobi")


def _flatten(m):
    return [x for row in m for x in row]


class _ExactSpan:
    """Row-reduced span of flat vectors; add() reports whether the span grew."""

    def __init__(self):
        self.rows = []  # (pivot index, flat vector with pivot 1)

    def _reduce(self, vec):
        vec = list(vec)
        for piv, row in self.rows:
            coeff = vec[piv]
            if coeff:
                for i, v in enumerate(row):
                    if v:
                        vec[i] -= coeff * v
        return vec

    def add(self, vec):
        vec = self._reduce(vec)
        for i, v in enumerate(vec):
            if v:
                vec = [x / v for x in vec]
                self.rows.append((i, vec))
                return True
        return False

    def contains(self, vec):
        return not any(self._reduce(vec))

    @property
    def dim(self):
        return len(self.rows)


def matrix_closure_dim(gen: GeneratorSet) -> int:
    """Dimension of the smallest matrix space containing all S_j, T_j and
    closed under commutators (iterated bracketing with exact rank updates)."""
    span = _ExactSpan()
    mats = []
    queue = []
    for m in list(gen.S) + list(gen.T):
        if span.add(_flatten(m)):
            mats.append(m)
            queue.append(m)
    while queue:
        m = queue.pop()
        for other in list(mats):
            for bracket in (commutator(m, other), commutator(other, m)):
                if span.add(_flatten(bracket)):
                    mats.append(bracket)
                    queue.append(bracket)
    return span.dim


def realize_check(env: EnvelopeAlgebra, gen: GeneratorSet, c: StructureTensor) -> CheckReport:
    """The map S_j, T_j, Y_jk -> generator and extracted Yamagutian matrices
    must send every envelope bracket to the matrix commutator exactly."""
    if gen.r != c.dim or c.dim != env.r:
        raise InputError("generator count, tensor dim, and envelope rank must agree")
    Y = extract_yamagutians(gen, c)

    def mat_of(lbl):
        if lbl[0] == "S":
            return gen.S[lbl[1]]
        if lbl[0] == "T":
            return gen.T[lbl[1]]
        return Y[(lbl[1], lbl[2])]

    def vec_to_mat(vec: Vec):
        terms = [(coeff, mat_of(lbl)) for lbl, coeff in vec.items()]
        return mat_lincomb(terms) if terms else zeros(gen.dim)

    # eliminated Yamagutians must already satisfy the quotient relations
    for (j, k), expr in env.expand.items():
        if not mat_eq(Y[(j, k)], vec_to_mat(expr)):
            return fail("realize", witness=("expand", j, k))
    for a in env.basis:
        for b in env.basis:
            lhs = commutator(mat_of(a), mat_of(b))
            if not mat_eq(lhs, vec_to_mat(env.brackets[(a, b)])):
                return fail("realize", witness=(a, b))
    return ok("realize")
