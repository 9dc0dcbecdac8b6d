"""Theta characteristics over F_2^6: forms, enumerations, the Mumford subset
dictionary, the explicit S_8 = O(F_2^6) isomorphism, boundary counting, and
the chi-function relation layer."""

from .core import (ALL_CHARS, EVEN_CHARS, ODD_CHARS, q_form, bilinear, is_even,
                   char_bits, char_from_bits, enumerate_chars, Subspace, Star,
                   singular_subspaces, so_orbit_split, enumerate_stars,
                   enumerate_odd_triplets, orthogonal_even_set,
                   maximal_subspaces_through, span_elements)
from .mumford import (B_MASK, U_MASK, BASE_PAIR_CHAR, EMPTY_CHAR, subset_mask,
                      mask_elements, even_subsets, canonical_subset,
                      char_of_subset, phi, subset_of_char, t_ij_char,
                      IDENTITY_PERM, perm_compose, perm_inverse, perm_on_mask,
                      perm_sign, transposition, OrthMatrix, IDENTITY_MATRIX,
                      perm_to_orthogonal, verify_mumford_properties,
                      MumfordReport)
from .counting import (EXAMPLE_SEXTUPLET, enumerate_sextuplets,
                       even_sum_odd_pairs, orthogonal_union_set,
                       odd_chars_orthogonal_to, star_partitions_of_orthogonal_odds,
                       pairwise_even_odd_triples, evens_with_odd_sum,
                       boundary_dictionaries, BoundaryDictionaries,
                       star_orthogonal_union)
from .chi import chi_vector, difference_span_dimension, chi_layer, ChiLayerReport
