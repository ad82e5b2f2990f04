"""Exact linear algebra for symmetric integer pairing matrices.

Everything runs on arbitrary-precision integers and fractions.Fraction; no
floating point enters any decision path. Matrices are sequences of rows.

The three determinant-adjacent routines are deliberately independent of one
another so they can cross-check each other in tests:

  * determinant        -- Bareiss fraction-free elimination, integer output
  * congruence_pivots  -- symmetric reduction using only det +-1 congruences,
                          so the pivot product equals the determinant exactly
  * leading_principal_minors -- one Bareiss run per leading block
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence

from .errors import RankMismatch, SingularMatrix

Q = Fraction


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise RankMismatch(f"vector lengths differ: {len(u)} vs {len(v)}")
    return sum((Q(a) * Q(b) for a, b in zip(u, v)), Q(0))


def mat_vec(m: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [dot(row, v) for row in m]


def is_symmetric(m: Sequence[Sequence]) -> bool:
    n = len(m)
    if any(len(row) != n for row in m):
        return False
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss determinant of a square integer matrix.

    The intermediate divisions are exact by the Sylvester identity, so the
    whole computation stays in the integers.
    """
    n = len(m)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    if any(len(row) != n for row in a):
        raise RankMismatch("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_principal_minors(m: Sequence[Sequence[int]]) -> list[int]:
    """Determinants of the leading k-by-k blocks, k = 1..n."""
    n = len(m)
    return [determinant([row[: k + 1] for row in m[: k + 1]]) for k in range(n)]


def is_negative_definite(m: Sequence[Sequence[int]]) -> bool:
    """Sylvester criterion: the k-th leading principal minor of a negative
    definite matrix has sign (-1)^k. The empty matrix counts as negative
    definite (vacuously)."""
    if len(m) == 0:
        return True
    if not is_symmetric(m):
        return False
    sign = 1
    for minor in leading_principal_minors(m):
        sign = -sign
        if sign * minor <= 0:
            return False
    return True


def congruence_pivots(m: Sequence[Sequence[int]]) -> list[Fraction]:
    """Diagonalize a symmetric matrix by congruence and return the diagonal.

    Only three elementary moves are used, each a congruence by a matrix of
    determinant +-1: simultaneous row/column swap, simultaneous row/column
    addition, and the symmetric elimination step. Consequently the product
    of the returned pivots equals the determinant exactly, not just in sign.
    """
    n = len(m)
    a = [[Q(x) for x in row] for row in m]
    for i in range(n):
        if a[i][i] == 0:
            pivot_row = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if pivot_row is not None:
                j = pivot_row
                a[i], a[j] = a[j], a[i]
                for row in a:
                    row[i], row[j] = row[j], row[i]
            else:
                # Every trailing diagonal entry vanishes; borrow an
                # off-diagonal one. With a[i][i] == a[j][j] == 0 the move
                # leaves 2*a[i][j] on the diagonal.
                off = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if off is None:
                    continue  # row i is zero on the trailing block
                j = off
                for c in range(n):
                    a[i][c] += a[j][c]
                for r in range(n):
                    a[r][i] += a[r][j]
        p = a[i][i]
        # Row elimination alone reproduces the congruence values on the
        # trailing block: the new diagonal a_rr - f*a_ir already includes
        # the -2f*a_ir + f^2*p of the two-sided update, and off-diagonal
        # pairs stay equal by symmetry of the Schur complement.
        for r in range(i + 1, n):
            f = a[r][i] / p
            if f == 0:
                continue
            for c in range(i, n):
                a[r][c] -= f * a[i][c]
    return [a[i][i] for i in range(n)]


def signature(m: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Inertia (n_plus, n_minus, n_zero) of a symmetric matrix."""
    pivots = congruence_pivots(m)
    plus = sum(1 for p in pivots if p > 0)
    minus = sum(1 for p in pivots if p < 0)
    return plus, minus, len(pivots) - plus - minus


def solve_linear(m: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve m x = b exactly over the rationals.

    Raises SingularMatrix when no pivot can be found, RankMismatch when the
    right-hand side has the wrong length.
    """
    n = len(m)
    if len(b) != n:
        raise RankMismatch(f"rhs length {len(b)} does not match matrix size {n}")
    a = [[Q(x) for x in row] + [Q(b[i])] for i, row in enumerate(m)]
    if any(len(row) != n + 1 for row in a):
        raise RankMismatch("solve_linear needs a square matrix")
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        for r in range(n):
            if r == col or a[r][col] == 0:
                continue
            f = a[r][col] / p
            for c in range(col, n + 1):
                a[r][c] -= f * a[col][c]
    return [a[i][n] / a[i][i] for i in range(n)]


def matrix_inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse, column by column."""
    n = len(m)
    cols = []
    for j in range(n):
        e = [Q(1) if i == j else Q(0) for i in range(n)]
        cols.append(solve_linear(m, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def is_characteristic(k: Sequence[int], m: Sequence[Sequence[int]]) -> bool:
    """True when k pairs with every basis vector to the parity of its square,
    i.e. (m k)_i + m_ii is even for all i. Linearity makes checking the basis
    sufficient for x.G.k = x.G.x mod 2 on the whole lattice."""
    if len(k) != len(m):
        raise RankMismatch("characteristic test needs a vector of full rank")
    for i, row in enumerate(m):
        if (sum(row[j] * k[j] for j in range(len(k))) + row[i]) % 2:
            return False
    return True


def characteristic_vector(m: Sequence[Sequence[int]]) -> list[int]:
    """Some characteristic vector for a symmetric integer matrix.

    Solves (m k)_i = m_ii over GF(2). The system is always consistent: for
    v in the mod-2 kernel, v.(diag) = v.G.v = 0 mod 2, so the right-hand
    side is orthogonal to the kernel.
    """
    n = len(m)
    a = [[m[i][j] % 2 for j in range(n)] + [m[i][i] % 2] for i in range(n)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if a[r][col]), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        for r in range(n):
            if r != row and a[r][col]:
                a[r] = [(x + y) % 2 for x, y in zip(a[r], a[row])]
        pivots.append((row, col))
        row += 1
    if any(a[r][n] for r in range(row, n)):
        raise SingularMatrix("no characteristic vector: inconsistent parity system")
    k = [0] * n
    for r, c in pivots:
        k[c] = a[r][n]
    return k


def sqrt_lower(x: Fraction) -> Fraction:
    """A rational lower bound for sqrt(x), exact on perfect squares."""
    if x < 0:
        raise ValueError("sqrt of a negative rational")
    big = x.numerator * x.denominator
    return Q(isqrt(big), x.denominator)


def sqrt_upper(x: Fraction) -> Fraction:
    """A rational upper bound for sqrt(x), exact on perfect squares."""
    if x < 0:
        raise ValueError("sqrt of a negative rational")
    big = x.numerator * x.denominator
    s = isqrt(big)
    if s * s == big:
        return Q(s, x.denominator)
    return Q(s + 1, x.denominator)


def sqrt_bracket(x: Fraction, max_width: Fraction) -> tuple[Fraction, Fraction]:
    """Rational bracket [lo, hi] around sqrt(x) with hi - lo <= max_width.

    Dyadic refinement of the integer square root; equivalent to bisection
    but with a closed-form step count.
    """
    if x < 0:
        raise ValueError("sqrt of a negative rational")
    if max_width <= 0:
        raise ValueError("bracket width must be positive")
    num, den = x.numerator, x.denominator
    big = num * den
    shift = 0
    while Q(1, (1 << shift) * den) > max_width:
        shift += 1
    scaled = big << (2 * shift)
    s = isqrt(scaled)
    lo = Q(s, (1 << shift) * den)
    hi = lo if s * s == scaled else Q(s + 1, (1 << shift) * den)
    return lo, hi
