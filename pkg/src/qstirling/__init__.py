"""Quasi-Stirling permutations, ordered labeled trees and partial gamma-positivity."""

from .bijection import phi, phi_inverse
from .fs_action import Orbit, VerificationError, orbit, orbit_polynomial, orbits, psi, psi_set
from .gamma import (
    GammaExpansion, GammaExpansionError, GammaTable, compute_polynomial, gamma_expand,
    gamma_from_trees, partial_gamma, slice_by_z,
)
from .poly import Poly
from .trees import (
    Tree, TreeStats, VertexClass, classify_vertex, enumerate_trees, is_weakly_increasing,
    tree_stats, validate, vertex_sequence,
)
from .words import (
    Multiset, cyclic_factorization, cyclic_profile, enumerate_words, is_quasi_stirling,
    is_stirling, linear_stats,
)

__version__ = "0.1.0"
