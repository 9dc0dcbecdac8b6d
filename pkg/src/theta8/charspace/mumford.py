"""Mumford's subset dictionary for theta characteristics of 8 branch points.

Even-order subsets T of B = {1,...,8} (bitmask representation, bit i-1 for
element i) are mapped to characteristics m(T) in F_2^6, pinned down by the
printed base table for the pairs {1,k} and the empty set, together with the
composition law m(T1 o T2) = m(T1) + m(T2) + m(0) for the symmetric
difference o.

The linear S_8-action on F_2^6 is carried by the shifted map
phi(S) = m(S o U), U = {1,2,3,4}: phi is additive (phi(S1 o S2) =
phi(S1) + phi(S2)), sends pairs {i,j} to the 28 odd characteristics, and
sigma |-> (phi(S) -> phi(sigma S)) is the explicit isomorphism onto the
q-preserving group.  In terms of m itself the action is affine with
translation m(sigma U), which is why the matrices are built on phi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .core import q_form, bilinear, EVEN_CHARS, ODD_CHARS

B_MASK = 0xFF
U_MASK = 0b00001111  # {1,2,3,4}

# column {1,k} of the base table, k = 2..8, plus the empty set
BASE_PAIR_CHAR: Dict[int, int] = {
    2: 0b111100, 3: 0b110011, 4: 0b001111, 5: 0b011000,
    6: 0b100001, 7: 0b000110, 8: 0b101010,
}
EMPTY_CHAR = 0b010101


def subset_mask(elements: Sequence[int]) -> int:
    m = 0
    for e in elements:
        if not 1 <= e <= 8:
            raise ValueError("elements must lie in 1..8")
        m |= 1 << (e - 1)
    return m


def mask_elements(mask: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(8) if (mask >> i) & 1)


def even_subsets() -> List[int]:
    """All 128 subsets of even cardinality, as masks."""
    return [m for m in range(256) if bin(m).count("1") % 2 == 0]


def canonical_subset(mask: int) -> int:
    """Representative of {T, B-T}: the one not containing the element 8."""
    return mask if not (mask >> 7) & 1 else mask ^ B_MASK


def char_of_subset(mask: int) -> int:
    """m(T) for an even-order subset T, via pairing consecutive elements.

    T is sorted ascending and split into consecutive pairs; each pair {a,b}
    with 1 < a is {1,a} o {1,b}, and the pairs are composed with the rule b).
    Independence of the decomposition is property-tested, not assumed here.
    """
    elems = mask_elements(mask)
    if len(elems) % 2:
        raise ValueError("subset must have even cardinality")
    k = len(elems) // 2
    acc = 0
    for a, b in zip(elems[0::2], elems[1::2]):
        if a == 1:
            acc ^= BASE_PAIR_CHAR[b]
        else:
            acc ^= BASE_PAIR_CHAR[a] ^ BASE_PAIR_CHAR[b] ^ EMPTY_CHAR
    if (k - 1) % 2:
        acc ^= EMPTY_CHAR
    return acc


def phi(mask: int) -> int:
    """phi(S) = m(S o U), the additive coordinate of the class of S."""
    return char_of_subset(mask ^ U_MASK)


_CLASS_OF_CHAR: Dict[int, int] = {}
for _t in even_subsets():
    _CLASS_OF_CHAR.setdefault(char_of_subset(_t), canonical_subset(_t))


def subset_of_char(m: int) -> int:
    """Canonical even subset T with m(T) = m."""
    return _CLASS_OF_CHAR[m]


def t_ij_char(i: int, j: int) -> int:
    """The odd characteristic m(T_ij), T_ij o U = {i,j}."""
    if i == j:
        raise ValueError("need i != j")
    if i > j:
        i, j = j, i
    return phi(subset_mask((i, j)))


# --------------------------------------------------------------------------
# permutations: tuples sigma of length 8, sigma[i-1] = image of i (values 1..8)

IDENTITY_PERM = tuple(range(1, 9))


def perm_compose(s: Sequence[int], t: Sequence[int]) -> Tuple[int, ...]:
    """(s . t)(i) = s(t(i))."""
    return tuple(s[t[i] - 1] for i in range(8))


def perm_inverse(s: Sequence[int]) -> Tuple[int, ...]:
    inv = [0] * 8
    for i, v in enumerate(s):
        inv[v - 1] = i + 1
    return tuple(inv)


def perm_on_mask(s: Sequence[int], mask: int) -> int:
    out = 0
    for i in range(8):
        if (mask >> i) & 1:
            out |= 1 << (s[i] - 1)
    return out


def perm_sign(s: Sequence[int]) -> int:
    seen = [False] * 8
    sign = 1
    for i in range(8):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = s[j] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def transposition(a: int, b: int) -> Tuple[int, ...]:
    p = list(range(1, 9))
    p[a - 1], p[b - 1] = b, a
    return tuple(p)


# --------------------------------------------------------------------------
# the orthogonal matrices

class OrthMatrix:
    """Linear map on F_2^6, stored as the images of the standard basis
    e_i = 1 << (5 - i).  Hashable; composition is matrix product."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        self.images = tuple(images)

    def apply(self, v: int) -> int:
        out = 0
        for i in range(6):
            if (v >> (5 - i)) & 1:
                out ^= self.images[i]
        return out

    def compose(self, other: "OrthMatrix") -> "OrthMatrix":
        return OrthMatrix([self.apply(x) for x in other.images])

    def preserves_q(self) -> bool:
        return all(q_form(self.apply(v)) == q_form(v) for v in range(64))

    def __eq__(self, other):
        return isinstance(other, OrthMatrix) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        rows = []
        for r in range(6):
            rows.append("".join(str((self.images[c] >> (5 - r)) & 1) for c in range(6)))
        return "OrthMatrix[" + " ".join(rows) + "]"


IDENTITY_MATRIX = OrthMatrix([1 << (5 - i) for i in range(6)])

# express each e_i as an F_2 combination of the phi({a,b}); the pair list and
# the combinations are fixed once
_PAIRS = list(combinations(range(1, 9), 2))
_PAIR_PHI = [t_ij_char(a, b) for a, b in _PAIRS]


def _combinations_for_basis() -> List[List[int]]:
    # row-reduce the 28 phi values, tracking which pairs combine to each pivot
    rows = [(v, 1 << idx) for idx, v in enumerate(_PAIR_PHI)]
    pivot: Dict[int, Tuple[int, int]] = {}
    for v, tag in rows:
        w, wt = v, tag
        while w:
            lb = w.bit_length() - 1
            if lb in pivot:
                pv, pt = pivot[lb]
                w ^= pv
                wt ^= pt
            else:
                pivot[lb] = (w, wt)
                break
    combos = []
    for i in range(6):
        target = 1 << (5 - i)
        w, wt = target, 0
        while w:
            lb = w.bit_length() - 1
            pv, pt = pivot[lb]
            w ^= pv
            wt ^= pt
        combos.append([idx for idx in range(len(_PAIRS)) if (wt >> idx) & 1])
    return combos


_BASIS_COMBOS = _combinations_for_basis()


def perm_to_orthogonal(sigma: Sequence[int], verify: bool = True) -> OrthMatrix:
    """The orthogonal matrix M with M phi(S) = phi(sigma S) for all even S.

    Equivalently M (m(T) + m(0)) = m(sigma T) + m(0).  The verification pass
    checks the defining property on all 128 even subsets and raises with a
    witness if the induced action failed to be linear.
    """
    images = []
    for combo in _BASIS_COMBOS:
        img = 0
        for idx in combo:
            a, b = _PAIRS[idx]
            img ^= t_ij_char(sigma[a - 1], sigma[b - 1])
        images.append(img)
    mat = OrthMatrix(images)
    if verify:
        for t in even_subsets():
            if mat.apply(phi(t)) != phi(perm_on_mask(sigma, t)):
                raise AssertionError(
                    f"induced action not linear at subset {mask_elements(t)}")
    return mat


# --------------------------------------------------------------------------
# the property report for the dictionary itself

@dataclass
class MumfordReport:
    fibers_ok: bool = False
    composition_ok: bool = False
    parity_ok: bool = False
    sign_law_ok: bool = False
    pairs_checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.fibers_ok and self.composition_ok and self.parity_ok
                and self.sign_law_ok)


def verify_mumford_properties() -> MumfordReport:
    """Check properties a)-d) of the subset map exhaustively."""
    rep = MumfordReport()
    subsets = even_subsets()
    chars = {t: char_of_subset(t) for t in subsets}

    # a) fibers are complement classes; 64 classes onto 64 characteristics
    classes: Dict[int, set] = {}
    for t in subsets:
        classes.setdefault(chars[t], set()).add(t)
    rep.fibers_ok = len(classes) == 64
    for m, fib in classes.items():
        t = min(fib)
        if fib != {t, t ^ B_MASK}:
            rep.failures.append(f"fiber of {m:06b} is not a complement class: {fib}")
            rep.fibers_ok = False

    # b) and d) on all 2^14 ordered pairs
    comp_ok = sign_ok = True
    e = lambda m: -1 if q_form(m) else 1
    for t1 in subsets:
        c1 = chars[t1]
        e1 = e(c1)
        for t2 in subsets:
            t12 = t1 ^ t2
            if chars[t12] != c1 ^ chars[t2] ^ EMPTY_CHAR:
                comp_ok = False
                rep.failures.append(f"b) fails at {t1:08b}, {t2:08b}")
            lhs = e1 * e(chars[t2]) * e(chars[t12])
            if lhs != (-1) ** bin(t1 & t2).count("1"):
                sign_ok = False
                rep.failures.append(f"d) fails at {t1:08b}, {t2:08b}")
            rep.pairs_checked += 1
    rep.composition_ok = comp_ok
    rep.sign_law_ok = sign_ok

    # c) parity law
    rep.parity_ok = all(
        (q_form(chars[t]) == 0) == (bin(t ^ U_MASK).count("1") % 4 == 0)
        for t in subsets)
    if not rep.parity_ok:
        rep.failures.append("c) parity law violated")
    return rep
