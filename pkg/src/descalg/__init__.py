"""Descent algebra of S_n, the face algebra of set compositions, and knapsack spectra.

Everything is exact: scalars are Python rationals or residues mod a prime.
"""

from .bidigare import DescentAlgebraElement, from_group_algebra, rho, rho_inv, to_group_algebra
from .combinatorics import IndexSet, descent_set, gaps, gaps_inv, rev, sub
from .exact_linalg import ExactMatrix, Polynomial, krylov_min_poly, poly_from_roots, right_mult_matrix
from .face_monoid import Face, btilde, enumerate_faces, face_product, parse_face, w0tilde
from .fields import GF, QQ
from .group_algebra import basis_B, basis_B_comp, basis_D, top_to_random, w0
from .knapsack import L_set, WeightVector, knapsack_number, signed_knapsack, signed_spectrum
from .theorems import Bounds, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "DescentAlgebraElement", "from_group_algebra", "rho", "rho_inv", "to_group_algebra",
    "IndexSet", "descent_set", "gaps", "gaps_inv", "rev", "sub",
    "ExactMatrix", "Polynomial", "krylov_min_poly", "poly_from_roots", "right_mult_matrix",
    "Face", "btilde", "enumerate_faces", "face_product", "parse_face", "w0tilde",
    "GF", "QQ", "basis_B", "basis_B_comp", "basis_D", "top_to_random", "w0",
    "L_set", "WeightVector", "knapsack_number", "signed_knapsack", "signed_spectrum",
    "Bounds", "VerificationReport",
]
