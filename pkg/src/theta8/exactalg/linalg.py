"""Exact linear algebra: prime-field Gaussian elimination and integer RREF.

Two regimes are used throughout the package:

* mod-p elimination (rank, solve, nullspace) for the big evaluation matrices
  of the dimension certifications.  A vectorized numpy path kicks in when the
  modulus fits in 31 bits so that int64 products cannot overflow.
* fraction-free integer RREF for the small geometry of linear spaces in the
  Y-coordinates (entries stay tiny; the reduced rows give a canonical,
  hashable form).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

import numpy as np

from .primes import DEFAULT_PRIME

_NUMPY_LIMIT = 1 << 31  # int64-safe: (p-1)^2 < 2^62


class PrimeFieldMatrix:
    """Dense matrix over GF(p); rows of reduced residues."""

    def __init__(self, rows: Sequence[Sequence[int]], p: int = DEFAULT_PRIME):
        if p <= 48:
            raise ValueError("modulus must exceed the largest total degree in play (48)")
        self.p = p
        self.rows = [[int(x) % p for x in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged rows")

    def transpose(self) -> "PrimeFieldMatrix":
        return PrimeFieldMatrix(list(zip(*self.rows)) if self.rows else [], self.p)

    def rank(self) -> int:
        return rank_mod_p(self.rows, self.p)


def rank_mod_p(rows, p: int = DEFAULT_PRIME) -> int:
    """Row rank over GF(p) by Gaussian elimination, deterministic."""
    if isinstance(rows, PrimeFieldMatrix):
        return rank_mod_p(rows.rows, rows.p)
    if isinstance(rows, np.ndarray) and p < _NUMPY_LIMIT:
        return _rank_numpy(rows, p)
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    if p < _NUMPY_LIMIT:
        return _rank_numpy(np.array(mat, dtype=np.int64), p)
    return _rank_python(mat, p)


def _rank_python(mat: List[List[int]], p: int) -> int:
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        piv = next((i for i in range(rank, nrows) if mat[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col] % p, p - 2, p)
        row = [x * inv % p for x in mat[rank]]
        mat[rank] = row
        for i in range(rank + 1, nrows):
            f = mat[i][col] % p
            if f:
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], row)]
        rank += 1
        col += 1
    return rank


def _rank_numpy(a: np.ndarray, p: int) -> int:
    m = np.array(a, dtype=np.int64, copy=True) % p
    nrows, ncols = m.shape
    r = c = 0
    while r < nrows and c < ncols:
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            c += 1
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r, c:] = m[r, c:] * inv % p
        f = m[r + 1:, c]
        hit = np.nonzero(f)[0]
        if hit.size:
            m[r + 1 + hit, c:] = (m[r + 1 + hit, c:] - f[hit, None] * m[r, c:]) % p
        r += 1
        c += 1
    return r


def rref_mod_p(rows, p: int) -> Tuple[List[List[int]], List[int]]:
    """Reduced row echelon form over GF(p); returns (nonzero rows, pivot cols)."""
    mat = [[int(x) % p for x in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def solve_mod_p(a_rows, b: Sequence[int], p: int) -> List[int] | None:
    """One solution of A x = b over GF(p), or None if inconsistent."""
    aug = [list(row) + [bi] for row, bi in zip(a_rows, b)]
    red, pivots = rref_mod_p(aug, p)
    ncols = len(a_rows[0])
    if ncols in pivots:
        return None
    x = [0] * ncols
    for row, c in zip(red, pivots):
        x[c] = row[-1]
    return x


def nullspace_mod_p(rows, p: int) -> List[List[int]]:
    """Basis of the right kernel over GF(p)."""
    red, pivots = rref_mod_p(rows, p)
    ncols = len(rows[0]) if rows else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, c in zip(red, pivots):
            v[c] = (-row[f]) % p
        basis.append(v)
    return basis


# --------------------------------------------------------------------------
# exact integer RREF (fraction-free; rows kept primitive)


def _primitive(row: Sequence[int]) -> Tuple[int, ...]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g == 0:
        return tuple(row)
    lead = next(x for x in row if x)
    if lead < 0:
        g = -g
    return tuple(x // g for x in row)


def int_rref(rows: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """Canonical integer RREF: pivot columns cleared, rows primitive with
    positive leading entry.  Hashable identifier for a rational row space."""
    mat = [list(map(int, r)) for r in rows if any(r)]
    if not mat:
        return tuple()
    ncols = len(mat[0])
    out: List[List[int]] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        mat[r] = list(_primitive(mat[r]))
        lead = mat[r][c]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a * lead - f * b for a, b in zip(mat[i], mat[r])]
                if any(mat[i]):
                    mat[i] = list(_primitive(mat[i]))
        r += 1
        if r == len(mat):
            break
    out = [row for row in mat if any(row)]
    out.sort(key=lambda row: next(i for i, x in enumerate(row) if x))
    return tuple(_primitive(row) for row in out)


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    return len(int_rref(rows))


def int_nullspace(rows: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Primitive integer basis of the rational right kernel."""
    red = int_rref(rows)
    if not red:
        ncols = len(rows[0]) if rows else 0
        return [tuple(1 if j == i else 0 for j in range(ncols)) for i in range(ncols)]
    ncols = len(red[0])
    pivots = [next(i for i, x in enumerate(row) if x) for row in red]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            v[c] = Fraction(-row[f], row[c])
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        basis.append(_primitive([int(x * den) for x in v]))
    return basis


def solve_fraction(a_rows: Sequence[Sequence[int]],
                   b_cols: Sequence[Sequence[Fraction]]) -> List[List[Fraction]]:
    """Solve A X = B exactly over Q for a square invertible integer A.

    b_cols is a list of right-hand sides; returns the solution columns.
    """
    n = len(a_rows)
    k = len(b_cols)
    aug = [[Fraction(a_rows[i][j]) for j in range(n)] + [Fraction(b[i]) for b in b_cols]
           for i in range(n)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [[aug[i][n + j] for i in range(n)] for j in range(k)]


def rational_reconstruct(a: int, p: int) -> Fraction | None:
    """Recover n/d = a (mod p) with |n|, d <= sqrt(p/2), or None."""
    a %= p
    bound = int((p // 2) ** 0.5)
    r0, r1 = p, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1) if s1 > 0 else Fraction(-r1, -s1)
