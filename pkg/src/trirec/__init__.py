"""Four interchangeable solvers for W(n+1) = A(n) W(n) + B(n) W(n-1)."""
from .canonical import (CanonicalizationResult, CanonicalProblem, reconstruct_general, solve_general,
                        solve_general_sequence, to_canonical)
from .closedform import capital_m, g_index, g_term, solve_closed_form
from .convolve import decode, encode, heaviside, rsum_reduced_flat, solve_flat
from .core import (CoefficientSequence, EvalReport, GeneralRecurrence, coeff_at, constant, dump_table_spec,
                   load_coefficient_spec, parse_coefficient_spec, parse_rational, rational_function,
                   render_rational, table)
from .engines import ENGINES, bench, compare, evaluate
from .oracle import (SparsePolynomial, enumerate_monomials, iterate_canonical, iterate_general,
                     symbolic_solve)
from .rsum import RSumParams, rsum_general, rsum_reduced, s_power_class, solve_via_rsum

__version__ = "0.1.0"
