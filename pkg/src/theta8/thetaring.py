"""The fifteen subspace forms and the relation ideal of the hyperelliptic
ring, verified through their branch-point images.

Each form is the sum of the fourth theta powers over the seven nonzero
characteristics of a maximal totally singular subspace (the printed A-list
is one SO-orbit).  Every relation claim is checked on the image side: sums
of signed monomials evaluated at generic points for identity testing, exact
sign-and-multiset comparison where the relation is monomial, and GF(p) rank
for the graded dimensions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .exactalg import (SparsePoly, PitReport, pit_is_zero, rank_mod_p,
                       nullspace_mod_p, solve_mod_p, rational_reconstruct,
                       RationalSeries, DEFAULT_PRIME, RANK_PRIME)
from .charspace.core import (EVEN_CHARS, q_form, bilinear, Subspace,
                             singular_subspaces, so_orbit_split)
from .charspace.mumford import perm_to_orthogonal, transposition, perm_compose
from .thomae import SignedMonomial, d_of_char, thomae_table

# --------------------------------------------------------------------------
# the printed subspace lists


@lru_cache(maxsize=1)
def subspace_digit_lists() -> List[Tuple[int, ...]]:
    text = resources.files("theta8.assets").joinpath("theta_subspaces.txt").read_text()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        _, digits = line.split(":")
        rows.append(tuple(int(x) for x in digits.split()))
    if len(rows) != 15:
        raise ValueError("expected 15 digit lists")
    return rows


class ThetaForm:
    """Formal sum of fourth theta powers over a 7-element characteristic set."""

    __slots__ = ("index", "chars")

    def __init__(self, index: int, chars: Sequence[int]):
        self.index = index
        self.chars = tuple(sorted(chars))

    def d_image_poly(self) -> SparsePoly:
        total = SparsePoly.zero(8)
        for m in self.chars:
            total = total + d_of_char(m).to_poly()
        return total

    def evaluate_image(self, point: Sequence[int], p: int | None = None) -> int:
        acc = 0
        table = thomae_table()
        for m in self.chars:
            acc += table[m].evaluate(point, p)
            if p:
                acc %= p
        return acc % p if p else acc

    def __repr__(self):
        return f"Theta{self.index}{self.chars}"


@lru_cache(maxsize=1)
def theta_forms() -> List[ThetaForm]:
    return [ThetaForm(i + 1, digits)
            for i, digits in enumerate(subspace_digit_lists())]


def theta_form(i: int) -> ThetaForm:
    if not 1 <= i <= 15:
        raise ValueError("index must be 1..15")
    return theta_forms()[i - 1]


@dataclass
class DecodeReport:
    subspace_ok: List[bool]
    first_form_chars: Tuple[int, ...]
    last_form_ok: bool
    printed_class_ok: bool
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (all(self.subspace_ok) and self.last_form_ok
                and self.printed_class_ok and not self.failures)


def decode_check() -> DecodeReport:
    """Each digit list must be the nonzero part of a maximal totally
    singular subspace; the printed lists must form one intersection-parity
    class of the thirty."""
    forms = theta_forms()
    sub_ok = []
    failures = []
    for f in forms:
        closed = all(q_form(m) == 0 for m in f.chars) and len(f.chars) == 7 and \
            all((a ^ b) in f.chars or a == b for a in f.chars for b in f.chars)
        sub_ok.append(closed)
        if not closed:
            failures.append(f"A{f.index} does not decode to a singular subspace")
    # Theta1's first printed term is (0,0,0 | 1,1,0) = digit 6
    first = forms[0].chars
    if first[0] != 6:
        failures.append("A1 does not start at digit 6")
    # A15 = all m with m' = 0, m'' != 0
    last_ok = forms[14].chars == tuple(range(1, 8))
    maximals = singular_subspaces(3)
    class_a, class_b = so_orbit_split(maximals)
    printed = {frozenset(f.chars) | {0} for f in forms}
    split_a = {s.elements for s in class_a}
    split_b = {s.elements for s in class_b}
    printed_ok = printed == split_a or printed == split_b
    return DecodeReport(sub_ok, first, last_ok, printed_ok, failures)


# --------------------------------------------------------------------------
# evaluation helpers

def theta_values(point: Sequence[int], p: int) -> List[int]:
    """The 15 image values at one point of GF(p)^8."""
    table = thomae_table()
    dvals = {m: table[m].evaluate(point, p) for m in EVEN_CHARS if m}
    out = []
    for f in theta_forms():
        acc = 0
        for m in f.chars:
            acc = (acc + dvals[m]) % p
        out.append(acc)
    return out


def _theta_value_matrix(npoints: int, seed: int, p: int) -> np.ndarray:
    """(npoints, 15) matrix of image values at uniform random points."""
    rng = random.Random(seed)
    pts = np.array([[rng.randrange(p) for _ in range(8)] for _ in range(npoints)],
                   dtype=np.int64)
    dvals: Dict[int, np.ndarray] = {}
    table = thomae_table()
    for m in EVEN_CHARS:
        if m == 0:
            continue
        mono = table[m]
        acc = np.full(npoints, mono.sign % p, dtype=np.int64)
        for i, j in mono.factors:
            acc = acc * ((pts[:, i - 1] - pts[:, j - 1]) % p) % p
        dvals[m] = acc
    cols = []
    for f in theta_forms():
        acc = np.zeros(npoints, dtype=np.int64)
        for m in f.chars:
            acc = (acc + dvals[m]) % p
        cols.append(acc)
    return np.stack(cols, axis=1)


# --------------------------------------------------------------------------
# weight-2 structure

@dataclass
class Weight2Report:
    rank: int
    kernel_dim: int
    kernel_is_all_ones: bool
    incidence_ok: bool
    sum_image_zero: bool

    @property
    def ok(self) -> bool:
        return (self.rank == 14 and self.kernel_dim == 1
                and self.kernel_is_all_ones and self.incidence_ok
                and self.sum_image_zero)


def weight2_structure(seed: int = 0, p: int = DEFAULT_PRIME) -> Weight2Report:
    """rank{images} = 14 with kernel spanned by (1,...,1)."""
    rng = random.Random(seed)
    rows = []
    for _ in range(40):
        point = tuple(rng.randrange(p) for _ in range(8))
        rows.append(theta_values(point, p))
    rank = rank_mod_p(rows, p)
    kernel = nullspace_mod_p(rows, p)
    all_ones = False
    if len(kernel) == 1:
        v = kernel[0]
        pivot = next(x for x in v if x)
        inv = pow(pivot, p - 2, p)
        all_ones = all(x * inv % p == 1 for x in v)
    # each nonzero even characteristic lies in exactly 3 of the 15 lists
    counts: Dict[int, int] = {}
    for f in theta_forms():
        for m in f.chars:
            counts[m] = counts.get(m, 0) + 1
    incidence_ok = (len(counts) == 35 and set(counts.values()) == {3})
    # exact: sum of the 15 image polynomials is 3 * (sum over all m) = 0
    total = SparsePoly.zero(8)
    for f in theta_forms():
        total = total + f.d_image_poly()
    return Weight2Report(rank, len(kernel), all_ones, incidence_ok, total.is_zero())


def theta4_in_Theta(m: int, seed: int = 0, p: int = DEFAULT_PRIME,
                    fresh_points: int = 50):
    """Rational coefficients c with sum c_i * image(Theta_i) = image(m).

    Unique modulo the kernel (1,...,1); the representative with c_1 = 0 is
    returned.  The solution is verified at `fresh_points` new random points.
    """
    from fractions import Fraction
    if q_form(m):
        raise ValueError("characteristic must be even")
    if m == 0:
        return [Fraction(0)] * 15
    rng = random.Random(seed)
    table = thomae_table()
    rows, rhs = [], []
    for _ in range(40):
        point = tuple(rng.randrange(p) for _ in range(8))
        rows.append(theta_values(point, p))
        rhs.append(table[m].evaluate(point, p))
    sol = solve_mod_p(rows, rhs, p)
    if sol is None:
        raise ArithmeticError("image lies outside the weight-2 span")
    shift = sol[0]
    sol = [(x - shift) % p for x in sol]
    coeffs = []
    for x in sol:
        f = rational_reconstruct(x, p)
        if f is None:
            raise ArithmeticError("rational reconstruction failed")
        coeffs.append(f)
    for _ in range(fresh_points):
        point = tuple(rng.randrange(p) for _ in range(8))
        tv = theta_values(point, p)
        lhs = 0
        for c, t in zip(coeffs, tv):
            lhs = (lhs + c.numerator * pow(c.denominator, p - 2, p) * t) % p
        if lhs != table[m].evaluate(point, p):
            raise ArithmeticError("solution failed verification at a fresh point")
    return coeffs


# --------------------------------------------------------------------------
# the printed cubic relation

@lru_cache(maxsize=1)
def cubic_relation() -> SparsePoly:
    """The printed weight-6 cubic, as a polynomial in 15 variables."""
    text = resources.files("theta8.assets").joinpath("cubic_relation.txt").read_text()
    poly = SparsePoly.zero(15)
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        sign = 1
        if line[0] == "+":
            line = line[1:]
        elif line[0] == "-":
            sign = -1
            line = line[1:]
        parts = line.split("*")
        coeff = sign * int(parts[0])
        e = [0] * 15
        for f in parts[1:]:
            e[int(f[1:]) - 1] += 1
        poly = poly + SparsePoly(15, {tuple(e): coeff})
    return poly


def _cubic_image_evaluator(poly15: SparsePoly):
    def f(point: Sequence[int], p: int) -> int:
        return poly15.evaluate(theta_values(point, p), p)
    return f


@lru_cache(maxsize=1)
def induced_permutations() -> Tuple[Dict[Tuple[int, ...], Tuple[int, ...]], bool]:
    """Permutations of the 15 printed lists induced by even permutations.

    Returns ({generator sigma -> permutation pi of 1..15}, odd_swaps) where
    pi[i-1] = j means the i-th list maps onto the j-th, and odd_swaps records
    whether odd permutations exchange the two 15-element classes.
    """
    forms = theta_forms()
    sets = [frozenset(f.chars) for f in forms]
    index = {s: i + 1 for i, s in enumerate(sets)}

    def induced(sigma):
        mat = perm_to_orthogonal(sigma, verify=False)
        out = []
        for s in sets:
            img = frozenset(mat.apply(m) for m in s)
            out.append(index.get(img))
        return tuple(out)

    # A8 generators: a 3-cycle and a 7-cycle
    g1 = (2, 3, 1, 4, 5, 6, 7, 8)
    g2 = (1, 3, 4, 5, 6, 7, 8, 2)
    gens = {}
    for g in (g1, g2):
        pi = induced(g)
        if any(x is None for x in pi):
            raise AssertionError("even permutation did not preserve the printed class")
        gens[g] = pi
    odd = induced(transposition(1, 2))
    odd_swaps = all(x is None for x in odd)
    return gens, odd_swaps


@dataclass
class CubicSuiteReport:
    pit: PitReport
    orbit_size: int
    raw_span_dimension: int
    span_mod_linear: int
    full_weight6_relations: int
    odd_swaps_classes: bool
    mutation_witness_found: bool

    @property
    def ok(self) -> bool:
        return (self.pit.verdict == "ZERO" and self.span_mod_linear == 14
                and self.mutation_witness_found)


def cubic_relation_suite(seed: int = 0, trials: int = 100,
                         p: int = DEFAULT_PRIME) -> CubicSuiteReport:
    """Identity-test the printed cubic's image and compute its orbit under
    the induced action.

    The orbit has 15 elements; its span gives a system of 14 relations in
    the sense that modulo multiples of the linear relation (sum of all 15
    forms) it contributes exactly 14 new dimensions.  Together with those
    multiples it spans the full weight-6 relation space (134 = 680 - 546).
    """
    poly = cubic_relation()
    pit = pit_is_zero(_cubic_image_evaluator(poly), 8, degree_bound=36,
                      trials=trials, seed=seed, p=p)

    gens, odd_swaps = induced_permutations()

    def act(vec: Dict[Tuple[int, ...], int], pi: Tuple[int, ...]):
        out = {}
        for e, c in vec.items():
            ne = [0] * 15
            for pos, k in enumerate(e):
                ne[pi[pos] - 1] = k
            out[tuple(ne)] = c
        return out

    start = dict(poly.terms)
    seen = {tuple(sorted(start.items()))}
    frontier = [start]
    orbit = [start]
    while frontier:
        nxt = []
        for vec in frontier:
            for pi in gens.values():
                img = act(vec, pi)
                key = tuple(sorted(img.items()))
                if key not in seen:
                    seen.add(key)
                    nxt.append(img)
                    orbit.append(img)
        frontier = nxt

    # multiples of the linear relation by the 120 quadratic monomials
    linear = SparsePoly(15, {tuple(1 if j == i else 0 for j in range(15)): 1
                             for i in range(15)})
    from itertools import combinations_with_replacement
    multiples = []
    for mono in combinations_with_replacement(range(15), 2):
        e = [0] * 15
        for v in mono:
            e[v] += 1
        multiples.append((linear * SparsePoly(15, {tuple(e): 1})).terms)

    monos = sorted({e for vec in orbit for e in vec}
                   | {e for t in multiples for e in t})
    mono_index = {e: i for i, e in enumerate(monos)}

    def as_row(term_dict):
        row = [0] * len(mono_index)
        for e, c in term_dict.items():
            row[mono_index[e]] = c
        return row

    orbit_rows = [as_row(v) for v in orbit]
    mult_rows = [as_row(t) for t in multiples]
    raw = rank_mod_p(np.array(orbit_rows, dtype=np.int64), RANK_PRIME)
    base = rank_mod_p(np.array(mult_rows, dtype=np.int64), RANK_PRIME)
    both = rank_mod_p(np.array(mult_rows + orbit_rows, dtype=np.int64), RANK_PRIME)

    # negative control: one coefficient changed must produce a witness
    mutated = poly + SparsePoly(15, {next(iter(poly.terms)): 1})
    mut = pit_is_zero(_cubic_image_evaluator(mutated), 8, degree_bound=36,
                      trials=8, seed=seed + 1, p=p)
    return CubicSuiteReport(pit, len(orbit), raw, both - base, both, odd_swaps,
                            mut.verdict == "NONZERO")


# --------------------------------------------------------------------------
# quartic relation families

@dataclass
class CosetQuarticReport:
    plane_count: int
    relation_count: int
    printed_relation_count: int
    all_exact: bool
    coset_counts_ok: bool
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.all_exact and self.coset_counts_ok


def coset_quartic_relations() -> CosetQuarticReport:
    """For every totally singular plane M: exactly three all-even cosets
    (M, a+M, b+M), and the two nontrivial ones satisfy the exact monomial
    identity prod image(a+M) = prod image(b+M) (sign and multiset).

    The enumerated relation count is reported next to the printed 210; the
    direct enumeration yields one relation per plane.
    """
    planes = singular_subspaces(2)
    failures = []
    count_ok = all_exact = True
    relations = 0
    for plane in planes:
        elems = sorted(plane.elements)
        seen = set()
        even_cosets = []
        for v in range(64):
            coset = frozenset(v ^ x for x in elems)
            if coset in seen:
                continue
            seen.add(coset)
            if all(q_form(c) == 0 for c in coset):
                even_cosets.append(coset)
        if len(even_cosets) != 3:
            count_ok = False
            failures.append(f"plane {elems}: {len(even_cosets)} all-even cosets")
            continue
        nontrivial = [c for c in even_cosets if 0 not in c]
        if len(nontrivial) != 2:
            count_ok = False
            failures.append(f"plane {elems}: trivial coset bookkeeping off")
            continue
        lhs = SignedMonomial(1)
        for m in sorted(nontrivial[0]):
            lhs = lhs * d_of_char(m)
        rhs = SignedMonomial(1)
        for m in sorted(nontrivial[1]):
            rhs = rhs * d_of_char(m)
        if lhs != rhs:
            all_exact = False
            failures.append(f"plane {elems}: coset identity fails exactly")
        else:
            relations += 1
    return CosetQuarticReport(len(planes), relations, 210, all_exact,
                              count_ok, failures)


@dataclass
class SquaredQuarticReport:
    candidates: int
    passing: int
    printed_count: int
    passing_by_sum_parity: Dict[int, int]
    per_even_sum_uniform: bool
    cross_parity_characterization_ok: bool
    symmetry_ok: bool
    negative_control_ok: bool

    @property
    def ok(self) -> bool:
        # 210 = 35 even sums x 6; the printed 105 is flagged, not asserted
        # (see the companion coset family, where the printed 210 matches a
        # 105-element enumeration: the two printed counts are transposed).
        return (self.passing == 210 and self.per_even_sum_uniform
                and self.cross_parity_characterization_ok
                and self.symmetry_ok and self.negative_control_ok)


def squared_quartic_relations(seed: int = 0, p: int = DEFAULT_PRIME) -> SquaredQuarticReport:
    """Search all triples of disjoint even pairs with a common sum for the
    squared relation A^2+B^2+C^2-2AB-2AC-2BC = 0 with A, B, C the pair
    image-products.

    The full scan finds 210 passing configurations, all with an even common
    sum (6 per sum), characterized exactly by all three cross-pair sums
    being odd.  The printed count for this family is 105; the enumeration
    is reported and the discrepancy surfaced by the callers as INFO.
    """
    table = thomae_table()
    rng = random.Random(seed)
    test_points = [tuple(rng.randrange(p) for _ in range(8)) for _ in range(8)]
    dvals_at = []
    for point in test_points:
        dvals_at.append({m: table[m].evaluate(point, p) for m in EVEN_CHARS if m})

    def identity_holds(pairs) -> bool:
        for dv in dvals_at:
            a = dv[pairs[0][0]] * dv[pairs[0][1]] % p
            b = dv[pairs[1][0]] * dv[pairs[1][1]] % p
            c = dv[pairs[2][0]] * dv[pairs[2][1]] % p
            val = (a * a + b * b + c * c - 2 * a * b - 2 * a * c - 2 * b * c) % p
            if val:
                return False
        return True

    candidates = passing = 0
    by_parity: Dict[int, int] = {0: 0, 1: 0}
    per_sum: Dict[int, int] = {}
    negative_seen = False
    characterization_ok = True
    nonzero_evens = [m for m in EVEN_CHARS if m]
    for s in range(1, 64):
        pairs = []
        for u in nonzero_evens:
            v = u ^ s
            if v > u and v != 0 and q_form(v) == 0:
                pairs.append((u, v))
        for triple in combinations(pairs, 3):
            candidates += 1
            hit = identity_holds(triple)
            # all cross sums between distinct pairs odd (they take the two
            # values a+b, a+b+s, so two checks per pair of pairs)
            azygetic = all(q_form(x ^ y) == 1 and q_form(x ^ y ^ s) == 1
                           for (x, _), (y, _) in combinations(triple, 2))
            if hit != azygetic:
                characterization_ok = False
            if hit:
                passing += 1
                by_parity[q_form(s)] += 1
                per_sum[s] = per_sum.get(s, 0) + 1
            else:
                negative_seen = True

    uniform = set(per_sum.values()) == {6} and len(per_sum) == 35

    # symmetry of the expanded form in A, B, C
    from itertools import permutations as iperm
    base = SparsePoly(3, {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1,
                          (1, 1, 0): -2, (1, 0, 1): -2, (0, 1, 1): -2})
    symmetric = all(base.permute_variables(list(perm)) == base
                    for perm in iperm(range(3)))
    return SquaredQuarticReport(candidates, passing, 105, by_parity, uniform,
                                characterization_ok, symmetric, negative_seen)


@dataclass
class SchottkyReport:
    pit: PitReport
    no_constant_control: bool
    restricted_control: bool

    @property
    def ok(self) -> bool:
        return (self.pit.verdict == "ZERO" and self.no_constant_control
                and self.restricted_control)


def schottky_image(seed: int = 0, trials: int = 100,
                   p: int = DEFAULT_PRIME) -> SchottkyReport:
    """(sum image^2)^2 - 8 sum image^4 must vanish identically."""
    table = thomae_table()
    nonzero = [m for m in EVEN_CHARS if m]

    def make_eval(constant: int, chars: Sequence[int]):
        def f(point: Sequence[int], pp: int) -> int:
            s2 = s4 = 0
            for m in chars:
                v = table[m].evaluate(point, pp)
                v2 = v * v % pp
                s2 = (s2 + v2) % pp
                s4 = (s4 + v2 * v2) % pp
            return (s2 * s2 - constant * s4) % pp
        return f

    pit = pit_is_zero(make_eval(8, nonzero), 8, degree_bound=48,
                      trials=trials, seed=seed, p=p)
    no_const = pit_is_zero(make_eval(0, nonzero), 8, degree_bound=48,
                           trials=8, seed=seed + 1, p=p)
    restricted = pit_is_zero(make_eval(8, theta_form(1).chars), 8, degree_bound=48,
                             trials=8, seed=seed + 2, p=p)
    return SchottkyReport(pit, no_const.verdict == "NONZERO",
                          restricted.verdict == "NONZERO")


# --------------------------------------------------------------------------
# graded dimensions and series bookkeeping

def hilbert_series_B() -> RationalSeries:
    """Closed form for the even-weight hyperelliptic ring (z = weight)."""
    return RationalSeries([1, 0, 8, 0, 36, 0, 106, 0, 91, 0, 14],
                          denominator_factors=[(2, 6)])


def hilbert_series_A() -> RationalSeries:
    """The level-two ring with theta character (weight z); includes the
    (1-z^8) factor of the printed statement."""
    num = [1, -3, 13, -17, 44, -17, 13, -3, 1]
    full = [0] * 17
    for i, c in enumerate(num):
        full[i] += c
        full[i + 8] -= c
    return RationalSeries(full, denominator_factors=[(2, 4), (1, 4)])


def hilbert_series_B_from_A() -> RationalSeries:
    """The A-series times (1-z)(1-z^4)/(1-z^8): numerator arithmetic only,
    since (1-z^8) cancels."""
    num = [1, -3, 13, -17, 44, -17, 13, -3, 1]
    # multiply by (1-z)(1-z^4) = 1 - z - z^4 + z^5
    mult = {0: 1, 1: -1, 4: -1, 5: 1}
    full = [0] * (len(num) + 6)
    for i, c in enumerate(num):
        for k, s in mult.items():
            full[i + k] += s * c
    return RationalSeries(full, denominator_factors=[(2, 4), (1, 4)])


def graded_dim_B(w: int, seed: int = 0, p: int = RANK_PRIME,
                 margin: int = 24) -> int:
    """Rank of the degree-(w/2) monomials in the 15 image values."""
    if w % 2 or w < 2:
        raise ValueError("weight must be a positive even integer")
    deg = w // 2
    expected = hilbert_series_B().expand(w)[w]
    npoints = expected + margin
    values = _theta_value_matrix(npoints, seed, p)
    from .specht import _monomial_matrix
    matrix = _monomial_matrix(values, deg, p)
    r = rank_mod_p(matrix, p)
    if r >= npoints:
        raise RuntimeError("sample saturated; increase the margin")
    return r


@dataclass
class SeriesSuiteReport:
    a_series: List[int]
    b_series: List[int]
    b2_series: List[int]
    a_printed_ok: bool
    b_printed_ok: bool
    b2_printed_ok: bool
    even_part_ok: bool

    @property
    def ok(self) -> bool:
        return (self.a_printed_ok and self.b_printed_ok and self.b2_printed_ok
                and self.even_part_ok)


A_PRINTED = [1, 1, 15, 29, 135, 310, 870, 1830, 3992, 7534, 14142]
B_PRINTED = [1, 0, 14, 14, 105, 175, 546, 946, 2057]
B2_PRINTED_EVEN = [1, 14, 105, 546, 2057, 6062, 14945, 32306, 63217, 114478]


def series_suite(nmax: int = 18) -> SeriesSuiteReport:
    """Expand the three printed rational functions and cross-check them."""
    a = hilbert_series_A().expand(max(nmax, 10))
    b = hilbert_series_B_from_A().expand(max(nmax, 8))
    b2 = hilbert_series_B().expand(max(nmax, 18))
    a_ok = a[:len(A_PRINTED)] == A_PRINTED
    b_ok = b[:len(B_PRINTED)] == B_PRINTED
    b2_even = [b2[2 * k] for k in range(len(B2_PRINTED_EVEN))]
    b2_ok = b2_even == B2_PRINTED_EVEN
    even_ok = all(b2[2 * k] == b[2 * k] for k in range(0, (len(b) - 1) // 2 + 1)) \
        and all(b2[2 * k + 1] == 0 for k in range((len(b2) - 1) // 2))
    return SeriesSuiteReport(a, b, b2, a_ok, b_ok, b2_ok, even_ok)
