"""Sparse multivariate polynomials with exact integer (or prime-field) coefficients.

Terms are stored as a dict mapping dense exponent tuples to nonzero
coefficients.  With 8 to 15 variables and the degrees used here (<= 48) the
dense exponent tuples are cheap and keep the canonical form trivial:
two polynomials are equal iff their term dicts are equal.
"""

from __future__ import annotations

from typing import Dict, Iterable, Sequence, Tuple

Exponent = Tuple[int, ...]


class SparsePoly:
    __slots__ = ("nvars", "terms", "modulus")

    def __init__(self, nvars: int, terms: Dict[Exponent, int] | None = None,
                 modulus: int | None = None):
        self.nvars = nvars
        self.modulus = modulus
        clean: Dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} has length {len(e)}, expected {nvars}")
                if modulus is not None:
                    c %= modulus
                if c:
                    clean[e] = c
        self.terms = clean

    # ------------------------------------------------------------- builders
    @classmethod
    def zero(cls, nvars: int, modulus: int | None = None) -> "SparsePoly":
        return cls(nvars, {}, modulus)

    @classmethod
    def constant(cls, nvars: int, c: int, modulus: int | None = None) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: c}, modulus)

    @classmethod
    def variable(cls, i: int, nvars: int, modulus: int | None = None) -> "SparsePoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, modulus)

    @classmethod
    def linear_form(cls, coeffs: Sequence[int], modulus: int | None = None) -> "SparsePoly":
        n = len(coeffs)
        terms: Dict[Exponent, int] = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls(n, terms, modulus)

    # ------------------------------------------------------------- helpers
    def _check(self, other: "SparsePoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparsePoly) and self.nvars == other.nvars
                and self.modulus == other.modulus and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, self.modulus, frozenset(self.terms.items())))

    # ---------------------------------------------------------- arithmetic
    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        out = dict(self.terms)
        m = self.modulus
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if m is not None:
                v %= m
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparsePoly(self.nvars, out, m)

    def __neg__(self) -> "SparsePoly":
        m = self.modulus
        return SparsePoly(self.nvars,
                          {e: (-c if m is None else (-c) % m) for e, c in self.terms.items()},
                          m)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        return self + (-other)

    def __mul__(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: Dict[Exponent, int] = {}
        m = self.modulus
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if m is not None:
                    v %= m
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return SparsePoly(self.nvars, out, m)

    __rmul__ = __mul__

    def scale(self, c: int) -> "SparsePoly":
        m = self.modulus
        if m is not None:
            c %= m
        if c == 0:
            return SparsePoly.zero(self.nvars, m)
        out = {}
        for e, v in self.terms.items():
            w = v * c
            if m is not None:
                w %= m
            if w:
                out[e] = w
        return SparsePoly(self.nvars, out, m)

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.nvars, 1, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -------------------------------------------------------- substitution
    def substitute(self, images: Sequence["SparsePoly"]) -> "SparsePoly":
        """Compose: replace variable i by images[i] (all over the same ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        n_out = images[0].nvars
        acc = SparsePoly.zero(n_out, self.modulus)
        # cache small powers per variable; degrees here stay modest
        powers: list[dict[int, SparsePoly]] = [dict() for _ in range(self.nvars)]
        for e, c in self.terms.items():
            term = SparsePoly.constant(n_out, c, self.modulus)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                cache = powers[i]
                if k not in cache:
                    cache[k] = images[i] ** k
                term = term * cache[k]
            acc = acc + term
        return acc

    def substitute_linear(self, matrix: Sequence[Sequence[int]]) -> "SparsePoly":
        """Replace variable i by the linear form sum_j matrix[i][j] * x_j."""
        images = [SparsePoly.linear_form(row, self.modulus) for row in matrix]
        return self.substitute(images)

    def permute_variables(self, sigma: Sequence[int]) -> "SparsePoly":
        """Rename variable i to sigma[i] (a 0-based permutation)."""
        out: Dict[Exponent, int] = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, k in enumerate(e):
                ne[sigma[i]] = k
            out[tuple(ne)] = c
        return SparsePoly(self.nvars, out, self.modulus)

    # ---------------------------------------------------------- evaluation
    def evaluate(self, point: Sequence[int], p: int | None = None) -> int:
        """Exact integer value, reduced mod p when given."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= pow(x, k, p) if p else x ** k
            total += v
            if p:
                total %= p
        return total % p if p else total

    # --------------------------------------------------------------- misc
    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}"
                            for i, k in enumerate(e) if k)
            bits.append(f"{c:+d}" + (f"*{mono}" if mono else ""))
        return " ".join(bits)


def product_of_binomials(pairs: Iterable[Tuple[int, int]], nvars: int,
                         sign: int = 1) -> SparsePoly:
    """Expand sign * prod (x_i - x_j) over the given index pairs."""
    acc = SparsePoly.constant(nvars, sign)
    for i, j in pairs:
        acc = acc * (SparsePoly.variable(i, nvars) - SparsePoly.variable(j, nvars))
    return acc
