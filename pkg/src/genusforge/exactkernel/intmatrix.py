"""Exact integer and rational matrix routines.

Matrices are plain tuples of tuples (immutable at API boundaries); internal
routines work on lists of lists.  Everything here is exact: integer rows
stay integers, rational elimination uses Fraction.  No floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import ValidationError

IntMatrix = tuple[tuple[int, ...], ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]


def freeze(rows: Sequence[Sequence]) -> tuple:
    return tuple(tuple(row) for row in rows)


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    if a and b and len(a[0]) != len(b):
        raise ValidationError("matrix shape mismatch in multiplication")
    if not b:
        return tuple(() for _ in a)
    cols = range(len(b[0]))
    return tuple(tuple(sum(ra[k] * b[k][j] for k in range(len(b))) for j in cols)
                 for ra in a)


def mat_vec(a: Sequence[Sequence], x: Sequence) -> tuple:
    return tuple(sum(row[k] * x[k] for k in range(len(x))) for row in a)


def transpose(a: Sequence[Sequence]) -> tuple:
    if not a:
        return ()
    return tuple(tuple(col) for col in zip(*a))


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    if any(len(row) != n for row in matrix):
        raise ValidationError("determinant needs a square matrix")
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """U @ A @ V = D with U, V unimodular and D in Smith normal form.

    `d` holds the full (rows x cols) diagonal matrix; `diagonal` just the
    min(rows, cols) diagonal entries, nonnegative with d1 | d2 | ... .
    """

    d: IntMatrix
    u: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d[i][i] for i in range(min(len(self.d), len(self.d[0]) if self.d else 0)))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SnfResult:
    """Smith normal form with both unimodular transforms.

    Row operations act on U from the left, column operations on V from the
    right, keeping U @ A @ V equal to the working matrix throughout.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if any(len(row) != cols for row in matrix):
        raise ValidationError("ragged matrix")
    if any(not isinstance(x, int) for row in matrix for x in row):
        raise ValidationError("Smith normal form needs integer entries")
    m = [list(row) for row in matrix]
    u = identity(rows)
    v = identity(cols)

    def row_op(i: int, j: int, q: int) -> None:
        # row_i -= q * row_j
        m[i] = [a - q * b for a, b in zip(m[i], m[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def col_op(i: int, j: int, q: int) -> None:
        # col_i -= q * col_j
        for row in m:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i: int, j: int) -> None:
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(rows, cols):
        # Smallest nonzero pivot keeps intermediate entries from exploding.
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                a = abs(m[i][j])
                if a and (best is None or a < best):
                    best, pivot = a, (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            p = m[t][t]
            # Reduce column t; any leftover remainder is a smaller pivot.
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    row_op(i, t, m[i][t] // p)
            moved = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    swap_rows(t, i)
                    moved = True
                    break
            if moved:
                continue
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    col_op(j, t, m[t][j] // p)
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    swap_cols(t, j)
                    moved = True
                    break
            if moved:
                continue
            # The pivot must divide the whole remaining block or later
            # diagonal entries break the chain; folding an offending row
            # into row t shrinks the pivot and the loop retries.
            bad = next(((i, j) for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if m[i][j] % p != 0), None)
            if bad is not None:
                row_op(t, bad[0], -1)
                continue
            break
        t += 1

    # Normalize signs.
    r = min(rows, cols)
    for k in range(r):
        if m[k][k] < 0:
            for row_idx in range(rows):
                m[row_idx][k] = -m[row_idx][k]
            for row in v:
                row[k] = -row[k]

    return SnfResult(d=freeze(m), u=freeze(u), v=freeze(v))


def integer_kernel(matrix: Sequence[Sequence[int]]) -> tuple:
    """Basis (as rows) of the integer kernel {x : A x = 0}, saturated."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if cols == 0:
        return ()
    if rows == 0:
        return freeze(identity(cols))
    res = smith_normal_form(matrix)
    rank = res.rank
    # x = V y with y_k free exactly for k >= rank.
    return tuple(tuple(res.v[i][k] for i in range(cols))
                 for k in range(rank, cols))


def row_lattice_basis(matrix: Sequence[Sequence[int]]) -> tuple:
    """Basis (as rows) of the lattice spanned by the rows over Z.

    With U A V = D, row operations preserve the row lattice, so the nonzero
    rows of U A = D V^(-1) are a basis: d_k times row k of V^(-1).
    """
    res = smith_normal_form(matrix)
    vinv = int_inv_unimodular(res.v)
    return tuple(tuple(d * x for x in vinv[k])
                 for k, d in enumerate(res.diagonal) if d != 0)


def rat_inv(matrix: Sequence[Sequence]) -> tuple:
    """Exact inverse of a square rational matrix by Gauss-Jordan."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    if any(len(row) != 2 * n for row in m):
        raise ValidationError("inverse needs a square matrix")
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] != 0), None)
        if pivot is None:
            raise ValidationError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def int_inv_unimodular(matrix: Sequence[Sequence[int]]) -> tuple:
    """Inverse of a unimodular integer matrix, returned with int entries."""
    inv = rat_inv(matrix)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValidationError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def rational_signature(matrix: Sequence[Sequence]) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Exact symmetric congruence diagonalization; when the whole remaining
    diagonal vanishes but the block is nonzero, the basis change
    e_i <- e_i + e_j manufactures a nonzero diagonal entry (valid away from
    characteristic 2).
    """
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    if any(len(row) != n for row in m):
        raise ValidationError("signature needs a square matrix")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValidationError("signature needs a symmetric matrix")
    pos = neg = zero = 0
    for i in range(n):
        if m[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if m[j][j] != 0), None)
            if swap is not None:
                m[i], m[swap] = m[swap], m[i]
                for row in m:
                    row[i], row[swap] = row[swap], row[i]
            else:
                off = next((j for j in range(i + 1, n) if m[i][j] != 0), None)
                if off is None:
                    zero += 1
                    continue
                # e_i <- e_i + e_off gives diagonal entry 2*m[i][off].
                m[i] = [a + b for a, b in zip(m[i], m[off])]
                for row in m:
                    row[i] += row[off]
        d = m[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            if m[j][i] != 0:
                f = m[j][i] / d
                m[j] = [a - f * b for a, b in zip(m[j], m[i])]
                for row in m:
                    row[j] -= f * row[i]
    return pos, neg, zero
