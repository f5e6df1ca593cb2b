"""Exact dense linear algebra over the rationals or a prime field.

Everything here works on plain lists of numbers: Fractions (or ints) when
``char == 0``, ints reduced mod p when ``char == p``.  Sizes stay small
(hundreds of rows), so straightforward Gauss-Jordan elimination is enough.
"""

from fractions import Fraction


def _reduce_rows(rows, ncols, char):
    rows = [list(r) for r in rows]
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
        if char:
            for j, x in enumerate(r):
                r[j] = x % char
    return rows


def row_echelon(rows, ncols, char=0):
    """Return (pivot_columns, reduced_rows) of the row-reduced echelon form."""
    m = _reduce_rows(rows, ncols, char)
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = pow(m[rank][col], -1, char) if char else Fraction(1, 1) / m[rank][col]
        m[rank] = [(x * inv) % char if char else x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                if char:
                    m[i] = [(a - f * b) % char for a, b in zip(m[i], m[rank])]
                else:
                    m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    return pivots, m[:rank]


def rank(rows, ncols, char=0) -> int:
    pivots, _ = row_echelon(rows, ncols, char)
    return len(pivots)


def nullspace(rows, ncols, char=0):
    """Basis of the right kernel of the matrix, one vector per free column.

    The basis is the canonical one read off the reduced echelon form: the
    vector for free column j has a 1 in slot j and pivot entries solving the
    homogeneous system.
    """
    pivots, m = row_echelon(rows, ncols, char)
    pivot_set = set(pivots)
    one = 1 if char else Fraction(1)
    basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        v = [0] * ncols
        v[j] = one
        for i, pc in enumerate(pivots):
            x = -m[i][j]
            v[pc] = x % char if char else x
        basis.append(tuple(v))
    return basis


def in_span(vector, basis_rows, ncols, char=0) -> bool:
    """True iff vector lies in the row span of basis_rows."""
    r0 = rank(basis_rows, ncols, char)
    r1 = rank(list(basis_rows) + [list(vector)], ncols, char)
    return r0 == r1
