"""Exact tools for the degree of regularity of the equations L_k and M_k."""
from .colorings import (
    MonoSolution,
    NoneFound,
    Obstruction,
    TableColoring,
    ValuationColoring,
    color_of,
    explain_obstruction,
    find_monochromatic_solution,
)
from .dimacs import export_dimacs
from .domains import IntegerInterval, RationalBox, rational_box
from .equations import (
    LinearEquation,
    clear_denominators,
    coefficient_valuation_profile,
    enumerate_solutions,
    evaluate,
    is_solution,
    make_Lk,
    make_Mk,
)
from .exactnum import INF, DomainError, format_rational, ord_p, parse_rational, rational_arith
from .regularity import (
    BudgetExceeded,
    ForbiddenRatio,
    SearchResult,
    forbidden_ratios,
    min_colors,
    ratio_clique_lower_bound,
    search_coloring,
    substitution_check,
)

__version__ = "0.1.0"
