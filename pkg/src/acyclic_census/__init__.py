"""Exact and asymptotic enumeration of labelled acyclic digraphs.

Four computation paths certify each other: exact integer recurrences
(``counts``), exact rational series identities (``series``),
high-precision root and growth constants (``asymptotics``) and literal
brute-force enumeration (``oracle``).  The ``verify`` module ties them
together into named check suites, also reachable through the
``acyclic-census`` command line tool (``cli``).
"""

from .asymptotics import (ConvergenceRow, PrecisionContext, RootBracketError,
                          RootResult, asymptotic_estimate, convergence_report,
                          eval_psi, eval_psi_derivative, find_least_root,
                          format_decimal, lambda_constant, psi_at_negated_root)
from .counts import (ArcPolynomial, SequenceTable, arc_enumerator, count_acyclic,
                     count_bicolored, eval_at_k, multi_arc_enumerator,
                     sequence_table, smallcover_cube_classes,
                     smallcover_simplexpower_classes)
from .oracle import (ColoredDigraph, EnumerationBudgetError, MultiDigraph,
                     brute_count, brute_count_bicolored, brute_count_weighted,
                     is_acyclic)
from .series import (GraphicSeries, IdentityCheck, from_sequence, multiply,
                     psi_series, reciprocal, unit, verify_identity)
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "ArcPolynomial", "CheckResult", "ColoredDigraph", "ConvergenceRow",
    "EnumerationBudgetError", "GraphicSeries", "IdentityCheck", "MultiDigraph",
    "PrecisionContext", "RootBracketError", "RootResult", "SequenceTable",
    "arc_enumerator", "asymptotic_estimate", "brute_count",
    "brute_count_bicolored", "brute_count_weighted", "convergence_report",
    "count_acyclic", "count_bicolored", "eval_at_k", "eval_psi",
    "eval_psi_derivative", "find_least_root", "format_decimal", "from_sequence",
    "is_acyclic", "lambda_constant", "multi_arc_enumerator", "multiply",
    "psi_at_negated_root", "psi_series", "reciprocal", "run_suite",
    "sequence_table", "smallcover_cube_classes",
    "smallcover_simplexpower_classes", "unit", "verify_identity",
]
