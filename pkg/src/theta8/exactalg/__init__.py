"""Exact arithmetic kernel: sparse polynomials, GF(p) linear algebra,
polynomial identity testing, rational series expansion."""

from .primes import DEFAULT_PRIME, RANK_PRIME, is_prime
from .poly import SparsePoly, product_of_binomials
from .linalg import (PrimeFieldMatrix, rank_mod_p, rref_mod_p, solve_mod_p,
                     nullspace_mod_p, int_rref, int_rank, int_nullspace,
                     solve_fraction, rational_reconstruct)
from .pit import PitReport, pit_is_zero
from .series import RationalSeries, series_expand

__all__ = [
    "DEFAULT_PRIME", "RANK_PRIME", "is_prime",
    "SparsePoly", "product_of_binomials",
    "PrimeFieldMatrix", "rank_mod_p", "rref_mod_p", "solve_mod_p",
    "nullspace_mod_p", "int_rref", "int_rank", "int_nullspace",
    "solve_fraction", "rational_reconstruct",
    "PitReport", "pit_is_zero",
    "RationalSeries", "series_expand",
]
