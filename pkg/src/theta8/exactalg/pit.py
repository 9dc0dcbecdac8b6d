"""Probabilistic polynomial identity testing (Schwartz-Zippel over GF(p)).

The callable under test is a black box; each trial evaluates it at a fresh
uniform point of GF(p)^n.  If the polynomial is nonzero of total degree at
most d, a single trial returns 0 with probability at most d/p, so a ZERO
verdict after t trials is wrong with probability at most (d/p)^t.  The bound
is part of the report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Tuple

from .primes import DEFAULT_PRIME


@dataclass
class PitReport:
    verdict: str                      # "ZERO" or "NONZERO"
    trials: int
    degree_bound: int
    prime: int
    seed: int
    witness: Optional[Tuple[int, ...]] = None
    witness_value: Optional[int] = None

    @property
    def error_bound(self) -> Fraction:
        """P(report ZERO | poly nonzero) <= (d/p)^trials."""
        if self.verdict != "ZERO":
            return Fraction(0)
        return Fraction(self.degree_bound, self.prime) ** self.trials

    def bound_str(self) -> str:
        b = self.error_bound
        return f"({self.degree_bound}/{self.prime})^{self.trials}" if b else "0"


def pit_is_zero(f: Callable[[Sequence[int], int], int], nvars: int,
                degree_bound: int, trials: int = 8, seed: int = 0,
                p: int = DEFAULT_PRIME) -> PitReport:
    """Test whether the black-box polynomial f vanishes identically.

    f(point, p) must return the value mod p.  Evaluator exceptions propagate.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if degree_bound >= p:
        raise ValueError("degree bound must be smaller than the field size")
    rng = random.Random(seed)
    for _ in range(trials):
        point = tuple(rng.randrange(p) for _ in range(nvars))
        value = f(point, p) % p
        if value:
            return PitReport("NONZERO", trials, degree_bound, p, seed,
                             witness=point, witness_value=value)
    return PitReport("ZERO", trials, degree_bound, p, seed)
