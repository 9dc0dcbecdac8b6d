"""Boundary-component combinatorics: the counting dictionaries of the
cusp/divisor correspondences.

Everything here is exhaustive enumeration over the 64-element space; the
results feed the incidence claims of the base-locus geometry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Tuple

from .core import (EVEN_CHARS, ODD_CHARS, q_form, bilinear, Star,
                   enumerate_stars, enumerate_odd_triplets, orthogonal_even_set)

# the example sextuplet printed with the 56-component count (columns m1..m6)
EXAMPLE_SEXTUPLET = (
    0b000000,
    0b111101,
    0b000111,
    0b100000,
    0b010100,
    0b001110,
)


def enumerate_sextuplets() -> List[FrozenSet[int]]:
    """Sets of 6 even characteristics containing 0 with all triple sums odd.

    With 0 in the set the condition reduces to (m_i, m_j) = 1 for all pairs
    of the five nonzero members: q(m+n) = (m,n) for even m, n, and then
    q(m+n+p) = (m,n)+(m,p)+(n,p) = 1 automatically.
    """
    nonzero = [m for m in EVEN_CHARS if m]
    adj: Dict[int, set] = {m: set() for m in nonzero}
    for m, n in combinations(nonzero, 2):
        if bilinear(m, n) == 1:
            adj[m].add(n)
            adj[n].add(m)
    out: List[FrozenSet[int]] = []

    def extend(clique: Tuple[int, ...], candidates: set):
        if len(clique) == 5:
            out.append(frozenset((0,) + clique))
            return
        for v in sorted(candidates):
            extend(clique + (v,), {w for w in candidates if w > v and w in adj[v]})

    for v in nonzero:
        extend((v,), {w for w in adj[v] if w > v})
    return out


def even_sum_odd_pairs() -> List[Tuple[int, int]]:
    """Pairs of odd characteristics whose sum is a (nonzero) even one (210)."""
    return [(a, b) for a, b in combinations(ODD_CHARS, 2) if q_form(a ^ b) == 0]


def orthogonal_union_set(a: int, b: int) -> FrozenSet[int]:
    """Nonzero evens orthogonal to a or to b."""
    return frozenset(m for m in EVEN_CHARS if m and
                     (bilinear(m, a) == 0 or bilinear(m, b) == 0))


def odd_chars_orthogonal_to(m: int) -> Tuple[int, ...]:
    return tuple(a for a in ODD_CHARS if bilinear(a, m) == 0)


def star_partitions_of_orthogonal_odds(m: int) -> List[Tuple[Star, Star, Star]]:
    """The partitions of the 12 odds orthogonal to an even m != 0 into three
    disjoint stars (there are 5 for every m)."""
    twelve = set(odd_chars_orthogonal_to(m))
    if len(twelve) != 12:
        raise ValueError(f"expected 12 orthogonal odds, got {len(twelve)}")
    stars_inside = [s for s in enumerate_stars() if s.chars <= twelve]
    partitions = []
    for s1, s2, s3 in combinations(stars_inside, 3):
        if len(s1.chars | s2.chars | s3.chars) == 12:
            partitions.append((s1, s2, s3))
    return partitions


def pairwise_even_odd_triples() -> List[Tuple[int, int, int]]:
    """Odd triples with all pairwise sums even (420 = 105 stars x 4)."""
    out = []
    for a, b, c in combinations(ODD_CHARS, 3):
        if q_form(a ^ b) == 0 and q_form(a ^ c) == 0 and q_form(b ^ c) == 0:
            out.append((a, b, c))
    return out


def evens_with_odd_sum(m: int) -> Tuple[int, ...]:
    """Even characteristics n with m + n odd (16 of them for even m != 0)."""
    return tuple(n for n in EVEN_CHARS if q_form(m ^ n) == 1)


@dataclass
class BoundaryDictionaries:
    sextuplets: List[FrozenSet[int]]
    pairs: List[Tuple[int, int]]
    pair_orthogonal_unions: Dict[Tuple[int, int], FrozenSet[int]]
    heegner_odds: Dict[int, Tuple[int, ...]]
    star_partitions: Dict[int, int]
    triples: List[Tuple[int, int, int]]
    triples_per_star: Dict[FrozenSet[int], int]
    odd_sum_counts: Dict[int, int]
    notes: List[str] = field(default_factory=list)


def boundary_dictionaries() -> BoundaryDictionaries:
    """All the counting correspondences in one report."""
    sextuplets = enumerate_sextuplets()
    pairs = even_sum_odd_pairs()
    unions = {(a, b): orthogonal_union_set(a, b) for a, b in pairs}
    nonzero_evens = [m for m in EVEN_CHARS if m]
    heegner = {m: odd_chars_orthogonal_to(m) for m in nonzero_evens}
    partitions = {m: len(star_partitions_of_orthogonal_odds(m)) for m in nonzero_evens}
    triples = pairwise_even_odd_triples()
    per_star: Dict[FrozenSet[int], int] = {}
    for a, b, c in triples:
        star = frozenset((a, b, c, a ^ b ^ c))
        per_star[star] = per_star.get(star, 0) + 1
    odd_sum = {m: len(evens_with_odd_sum(m)) for m in nonzero_evens}
    return BoundaryDictionaries(
        sextuplets=sextuplets,
        pairs=pairs,
        pair_orthogonal_unions=unions,
        heegner_odds=heegner,
        star_partitions=partitions,
        triples=triples,
        triples_per_star=per_star,
        odd_sum_counts=odd_sum,
    )


def star_orthogonal_union(star: Star) -> FrozenSet[int]:
    """Nonzero evens orthogonal to at least one member of the star (27)."""
    return frozenset(m for m in EVEN_CHARS if m and
                     any(bilinear(m, a) == 0 for a in star.chars))
