"""Dense exact matrix helpers.

Matrices are tuples of tuples.  Entries are Fractions or any commutative
ring elements supporting +, -, *, == (polynomials in particular); the
division-based routines require Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

Matrix = tuple


class SingularMatrixError(ZeroDivisionError):
    """Raised when an exact inverse or quotient does not exist."""


def freeze(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(row) for row in rows)


def identity(m: int) -> Matrix:
    return tuple(tuple(Fraction(1) if i == j else Fraction(0) for j in range(m)) for i in range(m))


def anti_identity(m: int) -> Matrix:
    """J_m: ones on the anti-diagonal."""
    return tuple(tuple(Fraction(1) if i + j == m - 1 else Fraction(0) for j in range(m)) for i in range(m))


def transpose(M: Matrix) -> Matrix:
    return tuple(zip(*M)) if M else ()

def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(A: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in A)


def mat_scale(A: Matrix, s) -> Matrix:
    return tuple(tuple(s * x for x in row) for row in A)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise ValueError("inner dimensions do not match")
    Bt = transpose(B)
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = row[0] * col[0]
            for x, y in zip(row[1:], col[1:]):
                acc = acc + x * y
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def is_zero_matrix(M: Matrix) -> bool:
    return all(x == 0 for row in M for x in row)


def is_symmetric(M: Matrix) -> bool:
    m = len(M)
    return all(M[i][j] == M[j][i] for i in range(m) for j in range(i + 1, m))


def is_alternating(M: Matrix) -> bool:
    m = len(M)
    if any(len(row) != m for row in M):
        return False
    if any(M[i][i] != 0 for i in range(m)):
        return False
    return all(M[i][j] == -M[j][i] for i in range(m) for j in range(i + 1, m))


def det_leibniz(M: Matrix):
    """Permutation-sum determinant over any commutative ring.

    Factors multiply left to right in column order, so the same routine is
    reused as the column determinant for matrices of commuting entries.
    """
    m = len(M)
    if m == 0:
        return Fraction(1)
    total = None
    for perm in permutations(range(m)):
        inv = sum(1 for s in range(m) for t in range(s + 1, m) if perm[s] > perm[t])
        prod = M[perm[0]][0]
        for t in range(1, m):
            prod = prod * M[perm[t]][t]
        signed = -prod if inv % 2 else prod
        total = signed if total is None else total + signed
    return total


def _all_rational(M: Matrix) -> bool:
    return all(isinstance(x, (int, Fraction)) for row in M for x in row)


def det_fraction(M: Matrix) -> Fraction:
    """Gaussian-elimination determinant for rational matrices."""
    m = len(M)
    rows = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for col in range(m):
        pivot = next((r for r in range(col, m) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = Fraction(1) / rows[col][col]
        for r in range(col + 1, m):
            if rows[r][col]:
                factor = rows[r][col] * inv
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return det


def det_exact(M: Matrix):
    """Determinant, eliminating when entries are rational, Leibniz otherwise."""
    return det_fraction(M) if _all_rational(M) else det_leibniz(M)


def inverse_fraction(M: Matrix) -> Matrix:
    """Exact inverse of a rational matrix; raises SingularMatrixError."""
    m = len(M)
    rows = [[Fraction(x) for x in row] + [Fraction(1) if i == j else Fraction(0) for j in range(m)]
            for i, row in enumerate(M)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if rows[r][col]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = Fraction(1) / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(m):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[m:]) for row in rows)
