"""Exact expansion of rational generating series (integer arithmetic only)."""

from __future__ import annotations

from typing import List, Sequence, Tuple


def poly_mul_trunc(a: Sequence[int], b: Sequence[int], n: int) -> List[int]:
    """Coefficients of a*b through degree n."""
    out = [0] * (n + 1)
    for i, ai in enumerate(a):
        if i > n or ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > n:
                break
            out[i + j] += ai * bj
    return out


def geometric_factor(k: int, n: int) -> List[int]:
    """Coefficients of (1 - t^k) through degree n."""
    out = [0] * (n + 1)
    out[0] = 1
    if k <= n:
        out[k] = -1
    return out


class RationalSeries:
    """numerator(t) / prod (1 - t^k)^e, or an explicit denominator polynomial.

    Expansion uses the division recurrence; every coefficient is an exact
    integer (the recurrence divides by the constant term, which must be +-1
    or divide exactly).
    """

    def __init__(self, numerator: Sequence[int],
                 denominator_factors: Sequence[Tuple[int, int]] | None = None,
                 denominator: Sequence[int] | None = None):
        self.numerator = list(numerator)
        if (denominator_factors is None) == (denominator is None):
            raise ValueError("give exactly one of denominator_factors / denominator")
        self.denominator_factors = list(denominator_factors) if denominator_factors else None
        self.denominator = list(denominator) if denominator else None
        den0 = self._denominator_through(0)[0]
        if den0 == 0:
            raise ValueError("denominator has zero constant term")

    def _denominator_through(self, n: int) -> List[int]:
        if self.denominator is not None:
            d = list(self.denominator) + [0] * (n + 1)
            return d[: n + 1]
        d = [1] + [0] * n
        for k, e in self.denominator_factors:
            for _ in range(e):
                d = poly_mul_trunc(d, geometric_factor(k, n), n)
        return d

    def expand(self, n: int) -> List[int]:
        """First n+1 coefficients, exact."""
        den = self._denominator_through(n)
        num = list(self.numerator) + [0] * (n + 1)
        c: List[int] = []
        d0 = den[0]
        for i in range(n + 1):
            acc = num[i]
            for k in range(1, min(i, len(den) - 1) + 1):
                acc -= den[k] * c[i - k]
            q, r = divmod(acc, d0)
            if r:
                raise ArithmeticError("non-integral series coefficient")
            c.append(q)
        return c


def series_expand(s: RationalSeries, n: int) -> List[int]:
    return s.expand(n)
