"""Recurrence definitions, orbits, decompositions and the lattice equation."""
from .decompose import (f_table, g_seeds, g_sequence, h_seeds, h_sequence, symbolic_params, tau_forward,
                        u_sequence, ug_decompose, v_sequence, vh_decompose, x_table)
from .iterate import (iterate_tau, iterate_x, orbit_tau, orbit_x, predict_terms, resolve_params, tau_step,
                      x_from_f)
from .lattice import TAU_FORM, X_FORM, band_points, iterate_lattice, laurent_check, symbolic_band
from .specs import (FAILS, HOLDS, INDETERMINATE, LatticeSpec, MultiTermSpec, ReductionSpec, build_reduction,
                    bundled_spec, coprimeness_condition, load_spec, spec_from_json)

__all__ = [
    "FAILS", "HOLDS", "INDETERMINATE", "LatticeSpec", "MultiTermSpec", "ReductionSpec", "TAU_FORM", "X_FORM",
    "band_points", "build_reduction", "bundled_spec", "coprimeness_condition", "f_table", "g_seeds",
    "g_sequence", "h_seeds", "h_sequence", "iterate_lattice", "iterate_tau", "iterate_x", "laurent_check",
    "load_spec", "orbit_tau", "orbit_x", "predict_terms", "resolve_params", "spec_from_json",
    "symbolic_band", "symbolic_params", "tau_forward", "tau_step", "u_sequence", "ug_decompose",
    "v_sequence", "vh_decompose", "x_from_f", "x_table",
]
