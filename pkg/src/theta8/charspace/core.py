"""The quadratic space F_2^6 of theta characteristics.

A characteristic m = (m', m'') is packed into a 6-bit integer with the digit
convention 32*m1 + 16*m2 + 8*m3 + 4*m4 + 2*m5 + m6, so the upper three bits
are m' and the lower three are m''.  The quadratic form is q(m) = m'.m''
(36 isotropic "even" vectors, 28 anisotropic "odd" ones) and the associated
bilinear pairing is (m, n) = m'.n'' + m''.n'.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, FrozenSet, List, Sequence, Tuple

ALL_CHARS = tuple(range(64))


def q_form(m: int) -> int:
    """q(m) = <m', m''> over F_2."""
    return bin((m >> 3) & m & 7).count("1") & 1


def bilinear(m: int, n: int) -> int:
    """(m, n) = q(m+n) + q(m) + q(n)."""
    return (bin((m >> 3) & n & 7).count("1") + bin((n >> 3) & m & 7).count("1")) & 1


def is_even(m: int) -> bool:
    return q_form(m) == 0


EVEN_CHARS = tuple(m for m in ALL_CHARS if q_form(m) == 0)
ODD_CHARS = tuple(m for m in ALL_CHARS if q_form(m) == 1)


def char_bits(m: int) -> Tuple[int, ...]:
    """(m1, ..., m6) with m' = (m1,m2,m3), m'' = (m4,m5,m6)."""
    return tuple((m >> (5 - i)) & 1 for i in range(6))


def char_from_bits(bits: Sequence[int]) -> int:
    v = 0
    for b in bits:
        v = (v << 1) | (b & 1)
    return v


def enumerate_chars() -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(evens, odds): the 36 isotropic and 28 anisotropic characteristics."""
    return EVEN_CHARS, ODD_CHARS


class Subspace:
    """Totally singular subspace, identified by its element set."""

    __slots__ = ("elements", "basis", "dim")

    def __init__(self, basis: Sequence[int]):
        basis = _f2_rref(basis)
        self.basis = basis
        self.dim = len(basis)
        span = [0]
        for b in basis:
            span += [x ^ b for x in span]
        self.elements = frozenset(span)

    def is_totally_singular(self) -> bool:
        return all(q_form(x) == 0 for x in self.elements)

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"Subspace{sorted(self.elements - {0})}"


def _f2_rref(vectors: Sequence[int]) -> Tuple[int, ...]:
    """Row-reduce 6-bit vectors over F_2; raises on dependent input basis."""
    by_pivot: Dict[int, int] = {}
    for v in vectors:
        w = v
        while w:
            lb = w.bit_length() - 1
            if lb in by_pivot:
                w ^= by_pivot[lb]
            else:
                by_pivot[lb] = w
                break
        if w == 0:
            raise ValueError("basis vectors are linearly dependent")
    for lb in sorted(by_pivot):
        for lb2 in by_pivot:
            if lb2 > lb and (by_pivot[lb2] >> lb) & 1:
                by_pivot[lb2] ^= by_pivot[lb]
    return tuple(by_pivot[lb] for lb in sorted(by_pivot, reverse=True))


def span_elements(basis: Sequence[int]) -> FrozenSet[int]:
    span = [0]
    for b in basis:
        span += [x ^ b for x in span]
    return frozenset(span)


def singular_subspaces(d: int) -> List[Subspace]:
    """All totally singular subspaces of dimension d (q = 0 on every element)."""
    if d not in (1, 2, 3):
        raise ValueError("dimension must be 1, 2 or 3")
    nonzero_even = [m for m in EVEN_CHARS if m]
    if d == 1:
        return [Subspace([m]) for m in nonzero_even]
    seen = set()
    out: List[Subspace] = []
    if d == 2:
        for a, b in combinations(nonzero_even, 2):
            if q_form(a ^ b) == 0 and a ^ b != 0:
                s = Subspace([a, b])
                if s.elements not in seen:
                    seen.add(s.elements)
                    out.append(s)
        return out
    for plane in singular_subspaces(2):
        pa, pb = [x for x in plane.basis]
        for c in nonzero_even:
            if c in plane.elements:
                continue
            if all(q_form(c ^ x) == 0 for x in plane.elements):
                s = Subspace([pa, pb, c])
                if s.elements not in seen:
                    seen.add(s.elements)
                    out.append(s)
    return out


def so_orbit_split(maximals: Sequence[Subspace]) -> Tuple[List[Subspace], List[Subspace]]:
    """Split the 30 maximal totally singular subspaces into the two
    SO-orbits.  Same orbit <=> dim(V cap W) odd (vector-space dimension;
    the classical statement uses projective dimension, where it reads even).
    Raises if the relation fails to be an equivalence."""
    n = len(maximals)
    same = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            inter = maximals[i].elements & maximals[j].elements
            dim = len(inter).bit_length() - 1  # |intersection| = 2^dim
            same[i][j] = (dim % 2 == 1)
    for i in range(n):
        if not same[i][i]:
            raise ValueError("relation not reflexive")
        for j in range(n):
            if same[i][j] != same[j][i]:
                raise ValueError("relation not symmetric")
            for k in range(n):
                if same[i][j] and same[j][k] and not same[i][k]:
                    raise ValueError("relation not transitive: not an equivalence")
    first = [maximals[j] for j in range(n) if same[0][j]]
    second = [maximals[j] for j in range(n) if not same[0][j]]
    return first, second


class Star:
    """Four odd characteristics forming a coset of a totally singular plane."""

    __slots__ = ("chars",)

    def __init__(self, chars: Sequence[int]):
        cs = sorted(set(chars))
        if len(cs) != 4 or any(q_form(c) == 0 for c in cs):
            raise ValueError("a star consists of 4 distinct odd characteristics")
        a = cs[0]
        plane = {a ^ c for c in cs}
        if any(q_form(x) for x in plane) or len(plane) != 4:
            raise ValueError("not a coset of a totally singular plane")
        self.chars = frozenset(cs)

    @property
    def plane(self) -> FrozenSet[int]:
        a = min(self.chars)
        return frozenset(a ^ c for c in self.chars)

    def __eq__(self, other):
        return isinstance(other, Star) and self.chars == other.chars

    def __hash__(self):
        return hash(self.chars)

    def __repr__(self):
        return f"Star{sorted(self.chars)}"


def enumerate_stars() -> List[Star]:
    """All 105 stars: the all-odd cosets of totally singular planes."""
    out = []
    seen = set()
    for plane in singular_subspaces(2):
        for v in ODD_CHARS:
            coset = frozenset(v ^ x for x in plane.elements)
            if coset in seen:
                continue
            if all(q_form(c) for c in coset):
                seen.add(coset)
                out.append(Star(sorted(coset)))
    return out


def enumerate_odd_triplets() -> List[Tuple[int, int, int]]:
    """Unordered triples of odd characteristics summing to zero (56)."""
    out = []
    for a, b in combinations(ODD_CHARS, 2):
        c = a ^ b
        if q_form(c) == 1 and c > b:
            out.append((a, b, c))
    return out


def orthogonal_even_set(chars: Sequence[int]) -> FrozenSet[int]:
    """Nonzero even characteristics orthogonal to every given (odd) char."""
    for c in chars:
        if q_form(c) == 0:
            raise ValueError("inputs must be odd characteristics")
    return frozenset(m for m in EVEN_CHARS if m
                     and all(bilinear(m, c) == 0 for c in chars))


def maximal_subspaces_through(m: int, maximals: Sequence[Subspace]) -> List[Subspace]:
    if q_form(m) or m == 0:
        raise ValueError("expected a nonzero even characteristic")
    return [s for s in maximals if m in s.elements]
