"""Exact annihilators for residues, diagonals, composed sums of roots,
and recurrence-based expansion of lattice-walk counting series.

Everything is computed over the rationals with exact arithmetic; the
main entry points are :func:`algebraic_residues`,
:func:`pure_composed_sum`, :func:`algebraic_diagonal`,
:func:`telescoper`, and :func:`expand_walks`.
"""

from .bivar import (BiPoly, BiRational, RatFunc, bi_gcd, resultant_y,
                    squarefree_bi)
from .composed import (ComposedSumResult, psi_truncation, pure_composed_sum,
                       pure_composed_sum_bi)
from .corealg import (Rat, TruncSeries, UniPoly, hadamard, interpolate,
                      newton_series, poly_from_newton, squarefree_uni)
from .diagonal import (DiagonalAnnihilator, algebraic_diagonal, certify,
                       diag_bounds, diagonal_series_naive, shift_annihilator,
                       substitute_diag)
from .errors import (DiagwalkError, ParseError, PreconditionError,
                     TelescoperNotFoundError)
from .residues import (ResiduePoly, algebraic_residues, residue_degree_bounds,
                       verify_residues_numeric)
from .telescope import (LinODE, LinRec, hermite_reduce, ode_to_recurrence,
                        telescoper, unroll)
from .walks import (StepSet, WalkSeries, WalkTable, bench_methods,
                    bridge_input, expand_walks, meander_input,
                    walk_counts_naive)

__version__ = "1.0.0"

__all__ = [
    "BiPoly", "BiRational", "RatFunc", "bi_gcd", "resultant_y",
    "squarefree_bi",
    "ComposedSumResult", "psi_truncation", "pure_composed_sum",
    "pure_composed_sum_bi",
    "Rat", "TruncSeries", "UniPoly", "hadamard", "interpolate",
    "newton_series", "poly_from_newton", "squarefree_uni",
    "DiagonalAnnihilator", "algebraic_diagonal", "certify", "diag_bounds",
    "diagonal_series_naive", "shift_annihilator", "substitute_diag",
    "DiagwalkError", "ParseError", "PreconditionError",
    "TelescoperNotFoundError",
    "ResiduePoly", "algebraic_residues", "residue_degree_bounds",
    "verify_residues_numeric",
    "LinODE", "LinRec", "hermite_reduce", "ode_to_recurrence", "telescoper",
    "unroll",
    "StepSet", "WalkSeries", "WalkTable", "bench_methods", "bridge_input",
    "expand_walks", "meander_input", "walk_counts_naive",
    "__version__",
]
