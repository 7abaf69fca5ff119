"""Exact Groebner deformations and connectivity dimension over the rationals."""
__version__ = "0.1.0"

from .errors import (BudgetExceededError, ContextMismatchError, DimensionMismatchError, GdcError,
                     InternalError, NotHomogeneousError, ParseError, SingularMatrixError,
                     UnitIdealError, VerificationRefused, ZeroPolynomialError)
from .ring import GREVLEX, GRLEX, LEX, Block, GrevLex, GrLex, Lex, MonomialOrder, Rational, Weight, compare, parse_order
from .poly import Polynomial, RingContext, Term, parse
from .groebner import (GroebnerBasis, Ideal, buchberger, dimension, eliminate, ideal_equal,
                       ideal_membership, intersect, lt_ideal, normal_form, radical_membership,
                       saturate, set_default_budget)
from .monocomb import (MonomialIdeal, VariablePrime, height_monomial, minimal_primes_monomial,
                       radical_monomial)
from .deform import (generic_initial_sample, initial_ideal_weight, omega_homogenize_ideal,
                     dehomogenize_ideal, weight_for_order)
from .connect import (ComponentSet, ConnectivityReport, IntersectionGraph, VerificationRecord,
                      check_ks_corollary, check_martina, check_skinner, cm_obstruction,
                      components_of, connectivity_dimension, connectivity_via_partitions,
                      projective_connectivity)
from .idealfile import bundled, parse_ideal_file, read_ideal
