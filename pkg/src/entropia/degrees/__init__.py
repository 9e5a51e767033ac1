"""Degree sequences, their bounds and the tropical max/min recursions."""
from .symbolic import (CERTIFIED, DEFAULT_TERM_BUDGET, EXPAND, SPECIALIZED, UNCERTIFIED, WINDOW, DegreeRow,
                       DegreeSequence, bound_check, degree_consistency, dstar_sequence,
                       line_degree_oracle, main_inequality_rhs, symbolic_degrees)
from .tropical import TropicalRun, TropicalState, tropical_table, tropical_Y, tropical_Z

__all__ = [
    "CERTIFIED", "DEFAULT_TERM_BUDGET", "EXPAND", "SPECIALIZED", "UNCERTIFIED", "WINDOW", "DegreeRow",
    "DegreeSequence", "TropicalRun", "TropicalState", "bound_check", "degree_consistency",
    "dstar_sequence", "line_degree_oracle", "main_inequality_rhs", "symbolic_degrees",
    "tropical_Y", "tropical_Z", "tropical_table",
]
