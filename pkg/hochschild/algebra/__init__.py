from .coeff import QQ, QQ_Q, CoefficientField, RatFun
from .poly import Ambient, MonomialOrder, Polynomial
from .groebner import GroebnerBasis, buchberger, colon_ideal, ideal_member, is_regular_sequence, normal_form
from .linalg import ExactMatrix, kernel_basis, rank
from .quotient import INFINITE, QuotientPresentation, annihilator_in_quotient, milnor_algebra, multiplication_matrix, standard_monomials
from .koszul import KoszulComplex, build_complex, cohomology_dimension, dimension_profile, graded_piece, structural_spaces
