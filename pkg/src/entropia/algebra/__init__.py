"""Exact arithmetic: Laurent polynomials, rational functions, F_p(t)."""
from .laurent import LaurentPoly, MultiIndex, laurent_gens
from .primefield import DEFAULT_PRIME, PrimeFieldRatFun
from .probes import (COMMON_FACTOR_WITNESS, LIKELY_COPRIME, ProbeResult, gcd_line_probe,
                     poly_part_at, specialize_polynomial_values)
from .ratfun import RationalFunction
from .symbols import Symbol, SymbolTable, indexed_name, parse_name

__all__ = [
    "COMMON_FACTOR_WITNESS", "DEFAULT_PRIME", "LIKELY_COPRIME", "LaurentPoly", "MultiIndex",
    "PrimeFieldRatFun", "ProbeResult", "RationalFunction", "Symbol", "SymbolTable",
    "gcd_line_probe", "indexed_name", "laurent_gens", "parse_name", "poly_part_at",
    "specialize_polynomial_values",
]


def ord_total(r, keys=None) -> int:
    """Ord of a rational function (or Laurent polynomial) in the given symbols."""
    if isinstance(r, LaurentPoly):
        r = RationalFunction.from_laurent(r)
    return r.ord_total(keys)


def lp_monomial_content(u, keys=None):
    return u.monomial_content(keys)


def ord_var(u, key) -> int:
    return u.ord_var(key)


def specialize(u, assignment):
    return u.specialize(assignment)


__all__ += ["lp_monomial_content", "ord_total", "ord_var", "specialize"]
