"""Characteristic functions of the maximal totally singular subspaces and the
relation layer they satisfy.

For a subspace V the vector chi_V in Z^64 is 1 on V and 0 elsewhere.  The
span of all differences chi_V - chi_W has dimension 14, and for every
singular line A the six maximal subspaces through A can be ordered so that
a fixed linear relation and a fixed pointwise-quadratic relation hold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

from ..exactalg.linalg import int_rank
from .core import EVEN_CHARS, Subspace, singular_subspaces


def chi_vector(space: Subspace) -> Tuple[int, ...]:
    return tuple(1 if v in space.elements else 0 for v in range(64))


def difference_span_dimension(maximals: Sequence[Subspace] | None = None) -> int:
    """dim span{chi_V - chi_W} over all pairs of maximal subspaces."""
    maximals = list(maximals) if maximals else singular_subspaces(3)
    base = chi_vector(maximals[0])
    rows = [tuple(a - b for a, b in zip(chi_vector(s), base)) for s in maximals[1:]]
    return int_rank(rows)


def _linear_ordering(vs: List[Tuple[int, ...]]) -> Tuple[int, ...] | None:
    # (chi1 - chi2) + (chi3 - chi4) + (chi5 - chi6) = 0
    signs = (1, -1, 1, -1, 1, -1)
    for order in permutations(range(6)):
        total = [0] * 64
        for s, idx in zip(signs, order):
            total = [t + s * x for t, x in zip(total, vs[idx])]
        if not any(total):
            return order
    return None


def _quadratic_ordering(vs: List[Tuple[int, ...]]) -> Tuple[int, ...] | None:
    # (chi1 - chi2)(chi1 - chi4) = (chi3 - chi6)(chi5 - chi6), pointwise
    for order in permutations(range(6)):
        c = [vs[i] for i in order]
        lhs = [(a - b) * (a - d) for a, b, d in zip(c[0], c[1], c[3])]
        rhs = [(x - y) * (z - y) for x, y, z in zip(c[2], c[5], c[4])]
        if lhs == rhs:
            return order
    return None


@dataclass
class ChiLayerReport:
    span_dimension: int
    lines_checked: int
    subspaces_per_line: Dict[int, int]
    linear_orderings: Dict[int, Tuple[int, ...]]
    quadratic_orderings: Dict[int, Tuple[int, ...]]
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.span_dimension == 14 and not self.failures
                and all(n == 6 for n in self.subspaces_per_line.values()))


def chi_layer() -> ChiLayerReport:
    """Verify the linear/quadratic chi relations through every singular line."""
    maximals = singular_subspaces(3)
    span_dim = difference_span_dimension(maximals)
    per_line: Dict[int, int] = {}
    lin: Dict[int, Tuple[int, ...]] = {}
    quad: Dict[int, Tuple[int, ...]] = {}
    failures: List[str] = []
    for a in EVEN_CHARS:
        if a == 0:
            continue
        through = [s for s in maximals if a in s.elements]
        per_line[a] = len(through)
        if len(through) != 6:
            failures.append(f"line {a:06b}: {len(through)} maximal subspaces")
            continue
        vs = [chi_vector(s) for s in through]
        order = _linear_ordering(vs)
        if order is None:
            failures.append(f"line {a:06b}: no ordering gives the linear relation")
        else:
            lin[a] = order
        order = _quadratic_ordering(vs)
        if order is None:
            failures.append(f"line {a:06b}: no ordering gives the quadratic relation")
        else:
            quad[a] = order
    return ChiLayerReport(span_dim, len(per_line), per_line, lin, quad, failures)
