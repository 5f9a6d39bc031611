"""Exact Riordan arrays, truncated power series and a lattice-path counting oracle."""
from .characterization import (AMatrixSpec, ProductionMatrix, a_sequence, amatrix_residual, production_matrix,
                               solve_f_from_amatrix, verify_amatrix, verify_rogers)
from .errors import *  # noqa: F401,F403
from .matrix import IntMatrix, binomial_matrix, matrix_from_json, render
from .parser import ps_parse
from .paths import Potential, Step, StepSpec, count_paths, find_potential, left_factors, verify_factorization
from .riordan import (AlmostR, GFPair, RArray, almost_element, mat_binomial_conjugate, named_matrix, ra_apply,
                      ra_element, ra_inverse, ra_matrix, ra_multiply, ra_rectify, ra_reverse, ra_stretch, ra_sums,
                      ra_triangulate, reverse_symmetrize, step_to_riordan)
from .series import (Series, ps_arith, ps_coeff, ps_compose, ps_equal, ps_reciprocal, ps_revert, ps_solve_fixpoint,
                     ps_sqrt)
from .transforms import CFSpec, cf_eval, hankel, invert_transform, jfraction_extract, somos4_check

__version__ = "0.1.0"
