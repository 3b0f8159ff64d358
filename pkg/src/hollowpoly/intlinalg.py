"""Exact integer and rational linear algebra.

Everything here is exact: integer matrices use Python ints, rational ones
use ``fractions.Fraction``.  Vectors are tuples, matrices are tuples of row
tuples.  The Hermite normal form is the row-style form H = U*A with U
unimodular: pivots positive, pivot columns strictly increasing, entries
above a pivot reduced into [0, pivot), zero rows last.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vec = tuple
Mat = tuple


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b, strict=True))


def vec_add(a: Sequence, b: Sequence) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Sequence, b: Sequence) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c, a: Sequence) -> Vec:
    return tuple(c * x for x in a)


def vec_gcd(a: Sequence[int]) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def primitive(a: Sequence[int]) -> Vec:
    """Divide an integer vector by the gcd of its entries (orientation kept)."""
    g = vec_gcd(a)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in a)


def primitive_direction(a: Sequence[int]) -> Vec:
    """Primitive form with the first nonzero entry positive."""
    p = primitive(a)
    for x in p:
        if x != 0:
            return p if x > 0 else tuple(-y for y in p)
    raise ValueError("zero vector")


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(A: Sequence[Sequence]) -> Mat:
    return tuple(zip(*A, strict=True))


def mat_vec(A: Sequence[Sequence], x: Sequence) -> Vec:
    return tuple(dot(row, x) for row in A)


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Mat:
    Bt = transpose(B)
    return tuple(tuple(dot(row, col) for col in Bt) for row in A)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def det_int(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


class RowHNFBuilder:
    """Column-incremental row Hermite normal form.

    Columns are pushed left to right; each returned column is final (later
    columns never alter earlier ones), which supports lexicographic pruning
    in canonical-form searches.
    """

    def __init__(self, nrows: int):
        self.m = nrows
        self.U = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
        self.npiv = 0
        self.pivot_cols: list[int] = []
        self.ncols = 0

    def clone(self) -> "RowHNFBuilder":
        other = RowHNFBuilder.__new__(RowHNFBuilder)
        other.m = self.m
        other.U = [row[:] for row in self.U]
        other.npiv = self.npiv
        other.pivot_cols = self.pivot_cols[:]
        other.ncols = self.ncols
        return other

    def push_column(self, col: Sequence[int]) -> Vec:
        U = self.U
        m = self.m
        w = [dot(U[i], col) for i in range(m)]
        p = self.npiv
        if p < m:
            for i in range(p + 1, m):
                if w[i] == 0:
                    continue
                g, s, t = xgcd(w[p], w[i])
                ap, ai = w[p] // g, w[i] // g
                rp, ri = U[p], U[i]
                U[p] = [s * x + t * y for x, y in zip(rp, ri)]
                U[i] = [-ai * x + ap * y for x, y in zip(rp, ri)]
                w[p], w[i] = g, 0
            if w[p] != 0:
                if w[p] < 0:
                    U[p] = [-x for x in U[p]]
                    w[p] = -w[p]
                for i in range(p):
                    q = w[i] // w[p]
                    if q:
                        U[i] = [x - q * y for x, y in zip(U[i], U[p])]
                        w[i] -= q * w[p]
                self.pivot_cols.append(self.ncols)
                self.npiv += 1
        self.ncols += 1
        return tuple(w)

    def transform(self) -> Mat:
        return tuple(tuple(row) for row in self.U)


def hnf_row(A: Sequence[Sequence[int]]) -> tuple[Mat, Mat]:
    """Row Hermite normal form.  Returns (H, U) with H = U*A, |det U| = 1."""
    rows = [tuple(r) for r in A]
    m = len(rows)
    builder = RowHNFBuilder(m)
    cols = []
    for col in transpose(rows) if rows else ():
        cols.append(builder.push_column(col))
    H = transpose(cols) if cols else tuple(() for _ in range(m))
    return H, builder.transform()


def hnf_rank(A: Sequence[Sequence[int]]) -> int:
    H, _ = hnf_row(A)
    return sum(1 for row in H if any(row))


def kernel_basis(A: Sequence[Sequence[int]]) -> list[Vec]:
    """Basis of the saturated integer kernel {x : A*x = 0}.

    Returned vectors are rows; the basis generates the full lattice of
    integer solutions.
    """
    At = transpose(A)
    H, U = hnf_row(At)
    out = []
    for i, row in enumerate(H):
        if not any(row):
            out.append(tuple(U[i]))
    return out


def saturate_rows(K: Sequence[Sequence[int]]) -> list[Vec]:
    """Basis of the saturation of the row lattice of K (rank preserved)."""
    comp = kernel_basis(K)
    if not comp:
        return [tuple(row) for row in hnf_row(K)[0] if any(row)]
    return kernel_basis(comp)


def projection_complement(kernel_rows: Sequence[Sequence[int]]) -> Mat:
    """Rows completing a saturated kernel basis to a basis of Z^d.

    Given a saturated basis (i rows, length d), returns a (d-i) x d integer
    matrix M with M*k = 0 for every kernel vector k and M surjective onto
    Z^(d-i).
    """
    i = len(kernel_rows)
    d = len(kernel_rows[0])
    S_cols = transpose(kernel_rows)  # d x i
    H, U = hnf_row(S_cols)
    for r in range(i):
        if any(H[r][c] != (1 if c == r else 0) for c in range(i)):
            raise ValueError("kernel basis is not saturated")
    for r in range(i, d):
        if any(H[r]):
            raise ValueError("kernel basis is not saturated")
    return tuple(tuple(U[r]) for r in range(i, d))


def solve_exact(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """One exact solution of A*x = b, or None if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    M = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b, strict=True)]
    piv_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if M[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = M[i][n]
    return x


def rank_exact(A: Sequence[Sequence]) -> int:
    m = len(A)
    if m == 0:
        return 0
    n = len(A[0])
    M = [[Fraction(x) for x in row] for row in A]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(r + 1, m):
            if M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == m:
            break
    return r


def affine_rank(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull of the given points."""
    if not points:
        return -1
    base = points[0]
    diffs = [vec_sub(p, base) for p in points[1:]]
    return rank_exact(diffs) if diffs else 0


def inverse_exact(A: Sequence[Sequence]) -> Mat:
    """Exact inverse of a square rational matrix."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(A)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return tuple(tuple(row[n:]) for row in M)


def solve_integer_point(a: Sequence[int], b: int) -> tuple[Vec, list[Vec]]:
    """Integer solution and kernel basis for a single equation a.x = b.

    Requires gcd(a) | b.  Returns (x0, basis) where basis spans the full
    integer solution lattice of a.x = 0.
    """
    g = vec_gcd(a)
    if g == 0:
        raise ValueError("zero normal vector")
    if b % g:
        raise ValueError("equation has no integer solution")
    H, U = hnf_row(transpose([a]))  # column vector a; U*a^T = (g,0,..)^T
    x0 = tuple((b // g) * U[0][j] for j in range(len(a)))
    basis = [tuple(U[i]) for i in range(1, len(a))]
    return x0, basis
