"""End-to-end acceptance suite: one test per pillar of the verification
chain, each printing a single pass/fail summary line.

Run with `pytest -s tests/test_acceptance.py` to see the lines as they
appear; the whole file stays well under the five-minute budget.
"""

import numpy as np
import pytest

from mnl.algebra import (StructureTensor, catalog_algebra, is_lie, is_maltsev)
from mnl.birep import GeneratorSet, check_glc, extract_yamagutians
from mnl.envelope import (build_envelope, check_jacobi, matrix_closure_dim,
                          realize_check)
from mnl.etc import (bilinear_lemma_check, charge_algebra_check,
                     charge_densities, charges, etc_verify, locality_check)
from mnl.fock import build_fields, canonical_etc_check
from mnl.loops import (chein_double, group_catalog, is_associative, is_moufang,
                       octonion_unit_loop, symmetric_group_s3,
                       tangent_structure_constants, unit_octonion_chart)
from mnl.matrices import commutator, mat_eq, mat_lincomb
from fractions import Fraction


def _announce(name, passed):
    print(f"\n[acceptance] {name}: {'PASS' if passed else 'FAIL'}")
    assert passed


# Frozen mutation list: the first 20 antisymmetric entry pairs (i, j, k)
# with j < k of the m7 tensor, in lexicographic order; zeroing any one
# pair (and its partner) must break the Mal'tsev identity.
M7_MUTATIONS = (
    (0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 0, 2), (1, 3, 5),
    (1, 4, 6), (2, 0, 1), (2, 3, 6), (2, 4, 5), (3, 0, 4),
    (3, 1, 5), (3, 2, 6), (4, 0, 3), (4, 1, 6), (4, 2, 5),
    (5, 0, 6), (5, 1, 3), (5, 2, 4), (6, 0, 5), (6, 1, 4),
)


def test_1_maltsev_suite(m7):
    ok = is_maltsev(m7).passed
    lie = is_lie(m7)
    ok = ok and not lie.passed and lie.witness is not None
    for (i, j, k) in M7_MUTATIONS:
        ent = dict(m7.entries)
        del ent[(i, j, k)]
        del ent[(i, k, j)]
        ok = ok and not is_maltsev(StructureTensor(7, ent)).passed
    _announce("1 maltsev suite (m7 + 20 mutations, exact)", ok)


def test_2_loop_suite(oct_loop):
    cd = chein_double(symmetric_group_s3())
    ok = oct_loop.order == 16 and cd.order == 12
    for t in (oct_loop, cd):
        ok = ok and is_moufang(t).passed and not is_associative(t).passed
    for name, g in group_catalog().items():
        if g.order <= 8:
            ok = ok and is_moufang(g).passed and is_associative(g).passed
    _announce("2 loop suite (octonion loop, Chein double, group catalog)", ok)


def test_3_tangent_extraction(m7):
    chart = unit_octonion_chart()
    target = np.zeros((7, 7, 7))
    for (i, j, k), v in m7.entries.items():
        target[i, j, k] = float(v)
    err1 = np.abs(tangent_structure_constants(chart, 1e-3) - target).max()
    err2 = np.abs(tangent_structure_constants(chart, 5e-4) - target).max()
    ok = err1 <= 1e-5 and 3.5 <= err1 / err2 <= 4.5
    _announce(f"3 tangent extraction (err {err1:.2e}, halving ratio "
              f"{err1 / err2:.2f})", ok)


def test_4_glc_theorem(oct_gen, m7, quat_gen, su2_doubled):
    ok = check_glc(oct_gen, m7).passed
    Y = extract_yamagutians(quat_gen, su2_doubled)
    for j in range(3):
        for k in range(3):
            expect_terms = []
            for p in range(3):
                v = su2_doubled.c(p, j, k)
                if v:
                    expect_terms.append((Fraction(1, 3) * v, quat_gen.S[p]))
                    expect_terms.append((-Fraction(1, 3) * v, quat_gen.T[p]))
            expect = mat_lincomb(expect_terms) if expect_terms else \
                [[Fraction(0)] * 4 for _ in range(4)]
            ok = ok and mat_eq(Y[(j, k)], expect)
            red = [(su2_doubled.c(p, j, k), quat_gen.S[p]) for p in range(3)]
            ok = ok and mat_eq(commutator(quat_gen.S[j], quat_gen.S[k]),
                               mat_lincomb(red))
    _announce("4 generalized Lie-Cartan relations (octonion + quaternion)", ok)


def test_5_envelope(su2, m7, oct_gen):
    env_su2 = build_envelope(su2)
    ok = env_su2.dim == 9 and check_jacobi(env_su2).passed
    env_m7 = build_envelope(m7)
    ok = ok and check_jacobi(env_m7).passed and env_m7.dim <= 35
    closure = matrix_closure_dim(oct_gen)
    ok = ok and env_m7.dim == closure
    ok = ok and realize_check(env_m7, oct_gen, m7).passed
    _announce(f"5 envelope (su2 dim 9; m7 dim {env_m7.dim} = closure "
              f"{closure}, jacobi + realize)", ok)


def test_6_etc(oct_fields, oct_gen, m7, quat_fields, quat_gen, su2_doubled):
    ok = canonical_etc_check(oct_fields).passed
    dens = charge_densities(oct_fields, oct_gen, m7)
    rep = etc_verify(dens)
    ok = ok and rep.passed
    # two sites: every cross-site commutator vanishes
    f2 = build_fields(8, 2)
    dens2 = charge_densities(f2, oct_gen, m7)
    ok = ok and locality_check(dens2).passed
    # associative control: quaternion densities have [s, t] = 0
    qdens = charge_densities(quat_fields, quat_gen, su2_doubled)
    for j in range(3):
        for k in range(3):
            ok = ok and qdens.s[j][0].commutator(qdens.t[k][0]).is_zero()
    ok = ok and etc_verify(qdens).passed
    _announce("6 density ETC (octonion N=1 exact, N=2 locality, "
              "quaternion associative)", ok)


def test_7_charge_algebra_theorem(oct_fields, oct_gen, m7):
    q1 = charges(charge_densities(oct_fields, oct_gen, m7))
    ok = charge_algebra_check(q1, m7).passed
    f2 = build_fields(8, 2)
    q2 = charges(charge_densities(f2, oct_gen, m7))
    ok = ok and charge_algebra_check(q2, m7).passed
    _announce("7 charge algebra theorem (N=1 and N=2)", ok)


def test_8_meta_consistency(quat_fields, quat_gen, su2_doubled):
    ok = bilinear_lemma_check(quat_fields, trials=100, seed=0).passed
    # matrix-level and density-level verdicts must agree on every variant
    variants = [quat_gen]
    S = list(quat_gen.S)
    S[0], S[1] = S[1], S[0]
    variants.append(GeneratorSet(3, 4, S, list(quat_gen.T)))
    T = list(quat_gen.T)
    T[2] = [[2 * v for v in row] for row in T[2]]
    variants.append(GeneratorSet(3, 4, list(quat_gen.S), T))
    variants.append(GeneratorSet(3, 4, list(quat_gen.T), list(quat_gen.S)))
    agree = 0
    for gen in variants:
        glc = check_glc(gen, su2_doubled).passed
        dens = etc_verify(charge_densities(quat_fields, gen, su2_doubled)).passed
        ok = ok and (glc == dens)
        agree += glc == dens
    _announce(f"8 meta-consistency (bilinear lemma 100 trials; "
              f"etc == glc on {agree}/{len(variants)} variants)", ok)
