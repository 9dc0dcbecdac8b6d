"""The configuration ring of 8 points on a line.

Tableaux are 2x4 matrices filled with the digits 1..8, column minima on top
and sorted left to right; equivalently, perfect matchings of {1,...,8} with
columns ordered by their minimum.  Each tableau carries the degree-4 product
of its column differences; the 14 standard tableaux (bottom row increasing)
give the basis Y1..Y14, in the printed row-major order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations_with_replacement
from math import comb, gcd
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .exactalg import (SparsePoly, RationalSeries, solve_fraction,
                       DEFAULT_PRIME, RANK_PRIME)


@dataclass(frozen=True)
class Tableau:
    """Columns (i, j) with i < j, ordered by i; entries exhaust 1..8."""
    columns: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        digits = sorted(d for col in self.columns for d in col)
        if digits != list(range(1, 9)) or len(self.columns) != 4:
            raise ValueError("tableau must contain each digit 1..8 once")
        tops = [c[0] for c in self.columns]
        if any(i >= j for i, j in self.columns) or tops != sorted(tops):
            raise ValueError("columns must be (min, max) sorted by minimum")

    @property
    def is_standard(self) -> bool:
        bots = [c[1] for c in self.columns]
        return bots == sorted(bots)

    def rows(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return tuple(c[0] for c in self.columns), tuple(c[1] for c in self.columns)


def enumerate_tableaux() -> Tuple[List[Tableau], List[Tableau]]:
    """(all 105 tableaux, the 14 standard ones in the printed order)."""
    out: List[Tableau] = []

    def match(remaining: Tuple[int, ...], cols: Tuple[Tuple[int, int], ...]):
        if not remaining:
            out.append(Tableau(cols))
            return
        i = remaining[0]
        for j in remaining[1:]:
            rest = tuple(x for x in remaining if x not in (i, j))
            match(rest, cols + ((i, j),))

    match(tuple(range(1, 9)), ())
    standard = sorted((t for t in out if t.is_standard),
                      key=lambda t: t.rows())
    return out, standard


def specht_polynomial(tableau: Tableau) -> SparsePoly:
    """Product of the column differences (X_i - X_j), degree 4 in X1..X8."""
    acc = SparsePoly.constant(8, 1)
    for i, j in tableau.columns:
        acc = acc * (SparsePoly.variable(i - 1, 8) - SparsePoly.variable(j - 1, 8))
    return acc


@lru_cache(maxsize=1)
def standard_basis() -> List[SparsePoly]:
    """Y1..Y14 as exact polynomials."""
    _, standard = enumerate_tableaux()
    return [specht_polynomial(t) for t in standard]


# --------------------------------------------------------------------------
# expressing degree-4 polynomials of the Specht span in the Y basis

@lru_cache(maxsize=1)
def _express_data() -> Tuple[List[Tuple[int, ...]], List[List[int]]]:
    basis = standard_basis()
    rng = random.Random(97531)
    while True:
        points = [tuple(rng.randrange(-40, 41) for _ in range(8)) for _ in range(14)]
        matrix = [[y.evaluate(pt) for y in basis] for pt in points]
        try:
            solve_fraction(matrix, [[Fraction(0)] * 14])
        except ValueError:
            continue  # singular sample, draw again
        return points, matrix


def express_in_Y(p: SparsePoly) -> List[Fraction]:
    """Coefficients of p in the Y basis, certified by exact re-expansion.

    Raises ValueError if p is not in the 14-dimensional Specht span.
    """
    points, matrix = _express_data()
    rhs = [Fraction(p.evaluate(pt)) for pt in points]
    (coeffs,) = solve_fraction(matrix, [rhs])
    basis = standard_basis()
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    scaled = SparsePoly.zero(8)
    for c, y in zip(coeffs, basis):
        scaled = scaled + y.scale(int(c * den))
    if scaled != p.scale(den):
        raise ValueError("polynomial is outside the Specht span")
    return coeffs


def specht_span_dimension(prime: int = RANK_PRIME, seed: int = 0) -> int:
    """Rank of all 105 Specht polynomials at generic points (expected 14)."""
    tabs, _ = enumerate_tableaux()
    rng = random.Random(seed)
    points = [tuple(rng.randrange(prime) for _ in range(8)) for _ in range(40)]
    rows = [[specht_polynomial(t).evaluate(pt, prime) for t in tabs] for pt in points]
    from .exactalg import rank_mod_p
    return rank_mod_p(rows, prime)


# --------------------------------------------------------------------------
# the relation ideal

def _parse_y_polynomial(text: str) -> SparsePoly:
    """Parse '+Y9*Y13 -Y8*Y14 ...' into a polynomial in 14 variables."""
    poly = SparsePoly.zero(14)
    for term in text.split():
        sign = 1
        if term[0] == "+":
            term = term[1:]
        elif term[0] == "-":
            sign = -1
            term = term[1:]
        coeff = sign
        factors = term.split("*")
        if factors and not factors[0].startswith("Y"):
            coeff *= int(factors[0])
            factors = factors[1:]
        e = [0] * 14
        for f in factors:
            e[int(f[1:]) - 1] += 1
        poly = poly + SparsePoly(14, {tuple(e): coeff})
    return poly


@lru_cache(maxsize=1)
def koike_ideal() -> List[SparsePoly]:
    """The 14 printed quadric generators, from the golden asset."""
    text = resources.files("theta8.assets").joinpath("koike_generators.txt").read_text()
    gens = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        _, expr = line.split(":", 1)
        gens.append(_parse_y_polynomial(expr))
    if len(gens) != 14:
        raise ValueError(f"expected 14 generators, found {len(gens)}")
    return gens


@dataclass
class KoikeReport:
    vanishing: List[bool]
    first_failure: str | None = None

    @property
    def ok(self) -> bool:
        return all(self.vanishing)


def verify_koike() -> KoikeReport:
    """Substitute Y_i -> Specht polynomial in every generator; all must be 0."""
    basis = standard_basis()
    results = []
    first = None
    for k, gen in enumerate(koike_ideal(), start=1):
        image = gen.substitute(basis)
        results.append(image.is_zero())
        if not image.is_zero() and first is None:
            mono = next(iter(image.terms.items()))
            first = f"J{k} does not vanish; leftover term {mono}"
    return KoikeReport(results, first)


# --------------------------------------------------------------------------
# graded dimensions, three ways

def config_hilbert_series() -> RationalSeries:
    return RationalSeries([1, 8, 22, 8, 1], denominator_factors=[(1, 6)])


def howe_dim(n: int) -> int:
    """(n^5 + 5n^4 + 11n^3 + 13n^2 + 9n + 3) / 3, exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    num = n**5 + 5 * n**4 + 11 * n**3 + 13 * n**2 + 9 * n + 3
    q, r = divmod(num, 3)
    if r:
        raise ArithmeticError("Howe numerator not divisible by 3")
    return q


def _composition_sum(total: int, n: int) -> int:
    """Sum over (i_1..i_n), sum k*i_k = total, of successive binomials
    C(8, i_1) C(8-i_1, i_2) ... C(8 - i_1 - ... - i_{n-1}, i_n)."""

    def rec(k: int, remaining: int, used: int) -> int:
        if k > n:
            return 1 if remaining == 0 else 0
        acc = 0
        for ik in range(0, min(remaining // k, 8 - used) + 1):
            acc += comb(8 - used, ik) * rec(k + 1, remaining - k * ik, used + ik)
        return acc

    return rec(1, total, 0)


def deconcini_dim(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return _composition_sum(4 * n, n) - _composition_sum(4 * n - 1, n)


@lru_cache(maxsize=None)
def y_representation(sigma: Tuple[int, ...]) -> Tuple[Tuple[int, ...], ...]:
    """Integer matrix R with column j the Y-coordinates of sigma . Y_j,
    where (sigma . p)(X_1..X_8) = p(X_sigma(1), ..., X_sigma(8)).

    With this column convention R(sigma tau) = R(sigma) R(tau).  Each image
    is re-expressed through express_in_Y, so the entries are certified by
    exact re-expansion.
    """
    _, standard = enumerate_tableaux()
    cols = []
    for t in standard:
        sign = 1
        pairs = []
        for i, j in t.columns:
            a, b = sigma[i - 1], sigma[j - 1]
            if a > b:
                a, b = b, a
                sign = -sign
            pairs.append((a, b))
        image = specht_polynomial(Tableau(tuple(sorted(pairs)))).scale(sign)
        coeffs = express_in_Y(image)
        if any(c.denominator != 1 for c in coeffs):
            raise AssertionError("permuted basis polynomial left the lattice")
        cols.append([int(c) for c in coeffs])
    # transpose: R[i][j] = coefficient of Y_i in sigma . Y_j
    return tuple(tuple(cols[j][i] for j in range(14)) for i in range(14))


def _monomial_matrix(values: np.ndarray, degree: int, p: int) -> np.ndarray:
    """(npoints, nmonomials) matrix of all degree-`degree` monomial values."""
    npoints, nvars = values.shape
    cache: Dict[Tuple[int, ...], np.ndarray] = {
        (): np.ones(npoints, dtype=np.int64)}
    cols = []
    for mono in combinations_with_replacement(range(nvars), degree):
        parent = mono[:-1]
        if parent not in cache:
            vec = cache[()]
            for var in parent:
                vec = vec * values[:, var] % p
            cache[parent] = vec
        vec = cache[parent] * values[:, mono[-1]] % p
        cache[mono] = vec
        cols.append(vec)
    return np.stack(cols, axis=1) if cols else np.ones((npoints, 1), dtype=np.int64)


def _y_values_at_random_points(npoints: int, seed: int, p: int) -> np.ndarray:
    """Evaluate Y1..Y14 at uniform random points of GF(p)^8."""
    _, standard = enumerate_tableaux()
    rng = random.Random(seed)
    pts = np.array([[rng.randrange(p) for _ in range(8)] for _ in range(npoints)],
                   dtype=np.int64)
    cols = []
    for t in standard:
        acc = np.ones(npoints, dtype=np.int64)
        for i, j in t.columns:
            acc = acc * ((pts[:, i - 1] - pts[:, j - 1]) % p) % p
        cols.append(acc)
    return np.stack(cols, axis=1)


def graded_dim_config(n: int, seed: int = 0, p: int = RANK_PRIME,
                      margin: int = 24) -> int:
    """Dimension of the degree-n graded piece, by rank over GF(p).

    The computed rank is a certified lower bound for the true dimension
    (a nonzero minor mod p lifts to a nonzero rational minor); equality
    holds up to the usual Schwartz-Zippel failure probability.  Raises if
    the rank saturates the number of sample points.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    expected = config_hilbert_series().expand(n)[n]
    npoints = expected + margin
    values = _y_values_at_random_points(npoints, seed, p)
    matrix = _monomial_matrix(values, n, p)
    from .exactalg import rank_mod_p
    r = rank_mod_p(matrix, p)
    if r >= npoints:
        raise RuntimeError("sample saturated; increase the margin")
    return r
