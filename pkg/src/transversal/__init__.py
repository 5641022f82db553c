"""Exact-arithmetic certificates for transversal intersection of polynomial
ideals, with the full resolution machinery: Taylor complexes, tensor products,
simplicial joins and homogenization, and the named ideal families."""

from .complexes import (BasisLabel, FreeComplex, betti_numbers, betti_table,
                        is_acyclic_multigraded, is_minimal, k_polynomial,
                        lcm_lattice, prune, taylor, taylor_iso_check,
                        taylor_on_generators, tensor, verify_complex)
from .errors import (CapExceededError, ContextMismatchError,
                     ExactDivisionError, InternalConsistencyError, ParseError,
                     PreconditionError, TransversalError)
from .fields import QQ, PrimeField, RationalField
from .gallery import (FamilySpec, VerifyReport, family_J, hankel_h,
                      rational_normal_curve, rnc_context, verify, xy_context,
                      xy_ideal, xy_order)
from .groebner import (GroebnerBasis, Ideal, buchberger,
                       check_regular_sequence, dimension, divmod_poly,
                       elim_intersect, ideal_equal, ideal_quotient, is_member,
                       is_nzd, is_regular_sequence, lt_support_transversal,
                       normal_form, poly_exact_div, power_transversal,
                       product_ideal, s_polynomial, transversal)
from .monomial_ideals import (MonomialIdeal, is_transversal_monomial,
                              minimalize)
from .orders import (EQ, GT, LT, BlockOrder, GrevLex, GrLex, Lex,
                     MonomialOrder, WeightOrder, compare, elimination_order)
from .parsing import Session, parse_polynomial, parse_session, pretty_print
from .rings import (Polynomial, Term, VarContext, mono_div, mono_divides,
                    mono_lcm, mono_mul, support)
from .simplicial import (Frame, SimplicialComplex, chain_complex,
                         frame_tensor, homogenize, join_iso_check,
                         supported_resolution_check)

__version__ = "0.1.0"
