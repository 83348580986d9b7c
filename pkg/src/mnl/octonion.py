"""Fixed octonion multiplication convention, used as the exact oracle repo-wide.

Basis is (1, e1, ..., e7) with e_a e_b = -delta_ab + f_abc e_c, where f is
totally antisymmetric and the positive Fano triples are listed below.  Every
derived constant elsewhere in the package (the m7 structure tensor, the unit
loop, the L/R generator matrices) comes from this one table.
"""

from fractions import Fraction

# f_abc = +1 for these triples (and cyclic rotations); -1 for reversals.
FANO_TRIPLES = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
)


def _build_sign_table():
    # table[a][b] = (index, sign) meaning e_a e_b = sign * e_index, 0 = unit.
    table = [[None] * 8 for _ in range(8)]
    for a in range(8):
        table[a][0] = (a, 1)
        table[0][a] = (a, 1)
    for a in range(1, 8):
        table[a][a] = (0, -1)
    for p, q, r in FANO_TRIPLES:
        for x, y, z in ((p, q, r), (q, r, p), (r, p, q)):
            table[x][y] = (z, 1)
            table[y][x] = (z, -1)
    for a in range(8):
        for b in range(8):
            if table[a][b] is None:
                raise AssertionError(f"octonion table incomplete at ({a},{b})")
    return tuple(tuple(row) for row in table)


UNIT_TABLE = _build_sign_table()


def f_constant(a, b, c):
    """Structure constant f_abc (a, b, c in 1..7)."""
    idx, sign = UNIT_TABLE[a][b]
    return sign if idx == c else 0


def unit_product(a, b):
    """e_a e_b as (index, sign), with index 0 the real unit."""
    return UNIT_TABLE[a][b]


def oct_mul(x, y):
    """Exact product of two octonions given as length-8 coefficient sequences."""
    out = [Fraction(0)] * 8
    for a in range(8):
        xa = x[a]
        if not xa:
            continue
        for b in range(8):
            yb = y[b]
            if not yb:
                continue
            idx, sign = UNIT_TABLE[a][b]
            out[idx] += sign * xa * yb
    return out


def oct_conj(x):
    """Octonion conjugate: flips the sign of the imaginary part."""
    return [x[0]] + [-c for c in x[1:]]


def basis_octonion(a):
    """Coefficient vector of e_a (a = 0 gives the unit)."""
    v = [Fraction(0)] * 8
    v[a] = Fraction(1)
    return v
