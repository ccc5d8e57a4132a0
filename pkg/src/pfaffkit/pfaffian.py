"""Pfaffians of alternating matrices and their minor expansions.

Two independent evaluation routes are kept side by side: a brute-force
sum over perfect matchings whose signs come from explicit inversion
counting, and a recursive first-row cofactor expansion.  The rest of the
module builds the block decomposition of anti-alternating matrices and
the minor summation identity that expands their Pfaffian into
determinant times sub-Pfaffian contributions.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .indexing import complement_sign, split_sign
from .linalg import (
    SingularMatrixError,
    anti_identity,
    det_exact,
    det_leibniz,
    freeze,
    identity,
    inverse_fraction,
    is_alternating,
    is_symmetric,
    is_zero_matrix,
    mat_add,
    mat_mul,
    mat_neg,
    mat_sub,
    transpose,
)
from .rings import Poly

class ShapeError(ValueError):
    """Raised when a matrix violates the structural constraints of its type."""

    def __init__(self, message: str, cell: tuple[int, int] | None = None):
        super().__init__(message)
        self.cell = cell


class AlternatingMatrix:
    """Even-sized matrix with zero diagonal and A[j][i] == -A[i][j].

    Entries live in any commutative ring with exact equality; indexing is
    1-based to match the usual matrix conventions.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = freeze(rows)
        m = len(rows)
        if m % 2:
            raise ShapeError(f"alternating matrices must have even size, got {m}")
        for i, row in enumerate(rows):
            if len(row) != m:
                raise ShapeError(f"row {i + 1} has length {len(row)}, expected {m}")
        for i in range(m):
            if not rows[i][i] == 0:
                raise ShapeError(f"nonzero diagonal entry at ({i + 1},{i + 1})", (i + 1, i + 1))
            for j in range(i + 1, m):
                if not rows[j][i] == -rows[i][j]:
                    raise ShapeError(
                        f"entry ({j + 1},{i + 1}) is not the negative of ({i + 1},{j + 1})",
                        (j + 1, i + 1),
                    )
        self.rows = rows

    @classmethod
    def from_upper(cls, size: int, value_at: Callable[[int, int], object]) -> "AlternatingMatrix":
        """Build from a callable giving the strict upper triangle (1-based)."""
        zero = Fraction(0)
        grid = [[zero] * size for _ in range(size)]
        for i in range(1, size + 1):
            for j in range(i + 1, size + 1):
                v = value_at(i, j)
                grid[i - 1][j - 1] = v
                grid[j - 1][i - 1] = -v
        return cls(grid)

    @classmethod
    def generic(cls, size: int, name: str = "a") -> "AlternatingMatrix":
        """Strict upper triangle filled with indeterminates name[i,j]."""
        return cls.from_upper(size, lambda i, j: Poly.var(f"{name}[{i},{j}]"))

    @classmethod
    def random_rational(cls, size: int, rng: random.Random, lo: int = -9, hi: int = 9) -> "AlternatingMatrix":
        return cls.from_upper(size, lambda i, j: Fraction(rng.randint(lo, hi)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int):
        return self.rows[i - 1][j - 1]

    def submatrix(self, indices: Iterable[int]) -> "AlternatingMatrix":
        """Principal submatrix on the given sorted 1-based indices."""
        idx = tuple(indices)
        out = AlternatingMatrix.__new__(AlternatingMatrix)
        out.rows = tuple(tuple(self.rows[i - 1][j - 1] for j in idx) for i in idx)
        return out

    def scale(self, s) -> "AlternatingMatrix":
        out = AlternatingMatrix.__new__(AlternatingMatrix)
        out.rows = tuple(tuple(s * x for x in row) for row in self.rows)
        return out

    def __eq__(self, other):
        return isinstance(other, AlternatingMatrix) and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"AlternatingMatrix(size={self.size})"


# The co-Pfaffian matrix is itself alternating; no extra structure needed.
CoPfaffianMatrix = AlternatingMatrix


def all_pairings(items: Sequence[int]) -> Iterator[tuple[tuple[int, int], ...]]:
    """All partitions of `items` into unordered pairs, each pair sorted
    and pairs listed by increasing first element."""
    if not items:
        yield ()
        return
    first, rest = items[0], list(items[1:])
    for k in range(len(rest)):
        partner = rest[k]
        remaining = rest[:k] + rest[k + 1:]
        for tail in all_pairings(remaining):
            yield ((first, partner),) + tail


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting `seq`, by brute inversion count."""
    inv = sum(1 for s in range(len(seq)) for t in range(s + 1, len(seq)) if seq[s] > seq[t])
    return -1 if inv % 2 else 1


def pfaffian_definitional(A: AlternatingMatrix):
    """Pfaffian as the signed sum over perfect matchings.

    Each matching's sign is recomputed from scratch as the sign of the
    flattened pair sequence, keeping this route independent from the
    cofactor recursion.
    """
    m = A.size
    if m == 0:
        return Fraction(1)
    total = None
    for pairs in all_pairings(tuple(range(1, m + 1))):
        flat = [x for pair in pairs for x in pair]
        prod = A.entry(*pairs[0])
        for i, j in pairs[1:]:
            prod = prod * A.entry(i, j)
        signed = prod if permutation_sign(flat) == 1 else -prod
        total = signed if total is None else total + signed
    return total


def pfaffian(A: AlternatingMatrix):
    """Pfaffian by recursive expansion along the first remaining row.

    Memoised on index subsets, so repeated sub-Pfaffians of the same
    matrix cost nothing extra.
    """
    memo: dict[tuple[int, ...], object] = {}

    def pf(indices: tuple[int, ...]):
        if not indices:
            return Fraction(1)
        cached = memo.get(indices)
        if cached is not None:
            return cached
        first, rest = indices[0], indices[1:]
        total = None
        for k, j in enumerate(rest):
            a = A.entry(first, j)
            if a == 0:
                continue
            sub = pf(rest[:k] + rest[k + 1:])
            term = a * sub
            if k % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = Fraction(0)
        memo[indices] = total
        return total

    return pf(tuple(range(1, A.size + 1)))


def cofactor_pfaffian(A: AlternatingMatrix, i: int, j: int):
    """Entry (i, j) of the co-Pfaffian matrix.

    Zero on the diagonal; off the diagonal it is the Pfaffian of A with
    rows/columns i and j removed, carrying the sign (-1)^(i+j-1) for
    i < j and (-1)^(i+j) for i > j.
    """
    if i == j:
        return Fraction(0)
    lo, hi = min(i, j), max(i, j)
    keep = tuple(k for k in range(1, A.size + 1) if k != lo and k != hi)
    pf = pfaffian(A.submatrix(keep))
    exponent = i + j - 1 if i < j else i + j
    return -pf if exponent % 2 else pf


def copfaffian_matrix(A: AlternatingMatrix) -> AlternatingMatrix:
    """The alternating matrix of all Pfaffian cofactors."""
    m = A.size
    grid = [[Fraction(0)] * m for _ in range(m)]
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            g = cofactor_pfaffian(A, i, j)
            grid[i - 1][j - 1] = g
            grid[j - 1][i - 1] = -g
    return AlternatingMatrix(grid)


def copfaffian_expansion_residuals(A: AlternatingMatrix) -> dict[tuple[int, int], object]:
    """Residuals of the Laplacian-style expansion delta_ij Pf A = sum_k a_ik gamma_jk.

    All residuals are zero exactly when the expansion holds; the full grid
    is returned so failures name their (i, j)."""
    m = A.size
    pf = pfaffian(A)
    gamma = copfaffian_matrix(A)
    out = {}
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            acc = Fraction(0)
            for k in range(1, m + 1):
                acc = acc + A.entry(i, k) * gamma.entry(j, k)
            expected = pf if i == j else Fraction(0)
            out[(i, j)] = acc - expected
    return out


def copfaffian_expansion_check(A: AlternatingMatrix) -> bool:
    return all(r == 0 for r in copfaffian_expansion_residuals(A).values())


def complementary_minor_check(A: AlternatingMatrix, I: Iterable[int]) -> bool:
    """Check Pf(A_I)/Pf(A) == sgn(I, Ic) * Pf((Ahat/Pf A)_Ic) for rational A.

    Ahat is the co-Pfaffian matrix; Ic the complement of I.  Requires an
    invertible matrix and an even index set.
    """
    I = tuple(sorted(I))
    if len(I) % 2:
        raise ValueError(f"index set must have even size, got {len(I)}")
    pf = pfaffian(A)
    if pf == 0:
        raise SingularMatrixError("Pfaffian vanishes; relation needs an invertible matrix")
    universe = tuple(range(1, A.size + 1))
    comp = tuple(k for k in universe if k not in set(I))
    lhs = pfaffian(A.submatrix(I)) / pf
    scaled = copfaffian_matrix(A).scale(Fraction(1) / pf)
    rhs = split_sign(universe, I, comp) * pfaffian(scaled.submatrix(comp))
    return lhs == rhs


class AntiAlternatingMatrix:
    """2n x 2n matrix X with tX J + J X = 0, stored through its coloring.

    A coloring (p, q) with p + q = 2n splits X into a p x q block `a`, a
    skew p x p block `b`, a skew q x q block `c`, and a fourth block that
    is determined by `a`.  Rows carry the signed labels 1..p, -q..-1 and
    columns 1..q, -p..-1, so anti-alternation holds by construction.
    """

    __slots__ = ("p", "q", "a", "b", "c")

    def __init__(self, p: int, q: int, a_rows, b_rows, c_rows):
        if p < 1 or q < 1 or (p + q) % 2:
            raise ShapeError(f"coloring needs p, q >= 1 with p + q even, got ({p}, {q})")
        self.p, self.q = p, q
        self.a = freeze(a_rows)
        self.b = freeze(b_rows)
        self.c = freeze(c_rows)
        if len(self.a) != p or any(len(r) != q for r in self.a):
            raise ShapeError(f"block a must be {p}x{q}")
        for name, block, size in (("b", self.b, p), ("c", self.c, q)):
            if len(block) != size or any(len(r) != size for r in block):
                raise ShapeError(f"block {name} must be {size}x{size}")
            for i in range(size):
                if not block[i][i] == 0:
                    raise ShapeError(f"block {name} needs a zero diagonal", (i + 1, i + 1))
                for j in range(i + 1, size):
                    if not block[j][i] == -block[i][j]:
                        raise ShapeError(f"block {name} is not skew at ({j + 1},{i + 1})", (j + 1, i + 1))

    @classmethod
    def from_upper_blocks(cls, p: int, q: int, a_rows, b_upper, c_upper) -> "AntiAlternatingMatrix":
        """Build from `a` plus the strict upper triangles of `b` and `c`.

        `b_upper` is a list of p-1 rows, row i holding b[i][i+1..p];
        likewise `c_upper` with q-1 rows.  Skewness is then automatic.
        """

        def mirror(size, upper, name):
            if len(upper) != max(size - 1, 0):
                raise ShapeError(f"block {name} needs {size - 1} triangle rows, got {len(upper)}")
            grid = [[Fraction(0)] * size for _ in range(size)]
            for i, row in enumerate(upper, start=1):
                if len(row) != size - i:
                    raise ShapeError(f"block {name} row {i} needs {size - i} entries, got {len(row)}")
                for offset, v in enumerate(row):
                    j = i + 1 + offset
                    grid[i - 1][j - 1] = v
                    grid[j - 1][i - 1] = -v
            return grid

        return cls(p, q, a_rows, mirror(p, b_upper, "b"), mirror(q, c_upper, "c"))

    @classmethod
    def generic(cls, p: int, q: int) -> "AntiAlternatingMatrix":
        """Fully symbolic matrix with entries a[i,j], b[i,j], c[i,j]."""
        a_rows = [[Poly.var(f"a[{i},{j}]") for j in range(1, q + 1)] for i in range(1, p + 1)]
        b_upper = [[Poly.var(f"b[{i},{j}]") for j in range(i + 1, p + 1)] for i in range(1, p)]
        c_upper = [[Poly.var(f"c[{i},{j}]") for j in range(i + 1, q + 1)] for i in range(1, q)]
        return cls.from_upper_blocks(p, q, a_rows, b_upper, c_upper)

    @classmethod
    def random_rational(cls, p: int, q: int, rng: random.Random, lo: int = -9, hi: int = 9) -> "AntiAlternatingMatrix":
        a_rows = [[Fraction(rng.randint(lo, hi)) for _ in range(q)] for _ in range(p)]
        b_upper = [[Fraction(rng.randint(lo, hi)) for _ in range(i + 1, p + 1)] for i in range(1, p)]
        c_upper = [[Fraction(rng.randint(lo, hi)) for _ in range(i + 1, q + 1)] for i in range(1, q)]
        return cls.from_upper_blocks(p, q, a_rows, b_upper, c_upper)

    @property
    def half(self) -> int:
        return (self.p + self.q) // 2

    @property
    def size(self) -> int:
        return self.p + self.q

    def row_labels(self) -> tuple[int, ...]:
        return tuple(range(1, self.p + 1)) + tuple(range(-self.q, 0))

    def col_labels(self) -> tuple[int, ...]:
        return tuple(range(1, self.q + 1)) + tuple(range(-self.p, 0))

    def full(self) -> tuple:
        """The 2n x 2n matrix in its signed row/column layout."""
        n2 = self.size
        grid = []
        for r in range(1, n2 + 1):
            row = []
            for c in range(1, n2 + 1):
                if r <= self.p and c <= self.q:
                    row.append(self.a[r - 1][c - 1])
                elif r <= self.p:
                    row.append(self.b[r - 1][n2 - c])
                elif c <= self.q:
                    row.append(self.c[c - 1][n2 - r])
                else:
                    row.append(-self.a[n2 - c][n2 - r])
            grid.append(tuple(row))
        return tuple(grid)

    def to_alternating(self) -> AlternatingMatrix:
        """X J, which is alternating; its Pfaffian is Pf X by definition."""
        full = self.full()
        n2 = self.size
        return AlternatingMatrix(tuple(tuple(full[r][n2 - 1 - c] for c in range(n2)) for r in range(n2)))

    def a_minor(self, rows: Sequence[int], cols: Sequence[int]) -> tuple:
        return tuple(tuple(self.a[i - 1][j - 1] for j in cols) for i in rows)

    def b_minor(self, I: Sequence[int]) -> AlternatingMatrix:
        out = AlternatingMatrix.__new__(AlternatingMatrix)
        out.rows = tuple(tuple(self.b[i - 1][j - 1] for j in I) for i in I)
        return out

    def c_minor(self, J: Sequence[int]) -> AlternatingMatrix:
        out = AlternatingMatrix.__new__(AlternatingMatrix)
        out.rows = tuple(tuple(self.c[i - 1][j - 1] for j in J) for i in J)
        return out


def pfaffian_of_anti_alternating(X: AntiAlternatingMatrix):
    """Pf X := Pf(X J)."""
    return pfaffian(X.to_alternating())


def minor_summation_rhs(X: AntiAlternatingMatrix):
    """Expansion of Pf X as a sum of det(a-minor) * Pf(b-minor) * Pf(c-minor).

    The sum runs over even subsets I of the b-rows and J of the c-rows of
    matching co-size; each term carries the shuffle signs of (complement,
    subset) on both sides.
    """
    p, q = X.p, X.q
    rows_p = tuple(range(1, p + 1))
    cols_q = tuple(range(1, q + 1))
    total = None
    for isize in range(0, p + 1, 2):
        jsize = q - p + isize
        if jsize < 0 or jsize > q:
            continue
        for I in combinations(rows_p, isize):
            pf_b = pfaffian(X.b_minor(I))
            if pf_b == 0:
                continue
            sign_i = complement_sign(I, rows_p)
            comp_i = tuple(k for k in rows_p if k not in set(I))
            for J in combinations(cols_q, jsize):
                pf_c = pfaffian(X.c_minor(J))
                if pf_c == 0:
                    continue
                sign_j = complement_sign(J, cols_q)
                comp_j = tuple(k for k in cols_q if k not in set(J))
                det = det_leibniz(X.a_minor(comp_i, comp_j))
                term = (sign_i * sign_j) * (det * pf_b * pf_c)
                total = term if total is None else total + term
    return Fraction(0) if total is None else total


def verify_minor_summation(p: int, q: int) -> bool:
    """Compare both routes on the fully symbolic matrix of coloring (p, q)."""
    X = AntiAlternatingMatrix.generic(p, q)
    return pfaffian_of_anti_alternating(X) == minor_summation_rhs(X)


class NotInLieAlgebraError(ValueError):
    """Raised when a matrix fails tY S + S Y = 0 for the given form S."""


def lie_algebra_membership(X, S) -> tuple[bool, bool]:
    """Report (tX S + S X == 0, X S^{-1} alternating); the two must agree."""
    if not is_symmetric(S):
        raise ShapeError("the bilinear form must be symmetric")
    in_algebra = is_zero_matrix(mat_add(mat_mul(transpose(X), S), mat_mul(S, X)))
    product_alternating = is_alternating(mat_mul(X, inverse_fraction(S)))
    return in_algebra, product_alternating


def cayley_orthogonal(Y, S):
    """g = (I - Y)(I + Y)^{-1} for Y in the orthogonal Lie algebra of S.

    The result satisfies tg S g = S exactly; I + Y must be invertible.
    """
    m = len(Y)
    if not is_zero_matrix(mat_add(mat_mul(transpose(Y), S), mat_mul(S, Y))):
        raise NotInLieAlgebraError("tY S + S Y != 0")
    return mat_mul(mat_sub(identity(m), Y), inverse_fraction(mat_add(identity(m), Y)))


def random_orthogonal_cayley(S, rng: random.Random, lo: int = -3, hi: int = 3):
    """Random special-orthogonal test point for the form S via the Cayley map.

    Draws Y = S^{-1} W with W alternating and retries until I + Y is
    invertible."""
    m = len(S)
    s_inv = inverse_fraction(S)
    while True:
        W = AlternatingMatrix.from_upper(m, lambda i, j: Fraction(rng.randint(lo, hi))).rows
        Y = mat_mul(s_inv, W)
        try:
            return cayley_orthogonal(Y, S)
        except SingularMatrixError:
            continue


def equivariance_check(A: AlternatingMatrix, g) -> bool:
    """Pf(g A tg) == det(g) Pf(A)."""
    conjugated = AlternatingMatrix(mat_mul(mat_mul(g, A.rows), transpose(g)))
    return pfaffian(conjugated) == det_exact(g) * pfaffian(A)
