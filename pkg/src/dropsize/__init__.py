"""Exact computation and brute-force verification for permutations with
bounded maximum drop, type A and type B."""

from .exactpoly import IntLaurentPoly, Window, geometric_sum, is_unimodal, is_window_symmetric
from .permstat import des, des_b, insert_end, maxdrop, maxdrop_b, remove_end
from .bijection import phi, phi_trace, target_indices
from .typea import eulerian_poly_a, p_poly, q_poly, r_poly, restricted_descent_poly_a
from .typeb import CoeffArray, eulerian_poly_b, h_poly, restricted_descent_poly_b, t_poly, t_tilde_poly

__version__ = "0.1.0"
