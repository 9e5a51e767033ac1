"""Splitting tau iterates into a monomial in half the data times a function of x.

With the older half f_a = (f_{-2p-2q}, ..., f_{-p-q-1}) kept symbolic and
the newer half rewritten through x, each f_m = u_m(f_a) g_m(x).  Keeping
f_b = (f_{-p-q}, ..., f_{-1}) instead gives f_m = v_m(f_b) h_m(x).  The
monomials obey u_m u_{m-p-q} = u_{m-p}^k u_{m-q}^k and g, h obey the tau
recurrence itself.
"""
from __future__ import annotations

from ..algebra import LaurentPoly, MultiIndex, SymbolTable
from ..errors import NotDivisible, TermBudgetExceeded
from .iterate import predict_terms, tau_step
from .specs import ReductionSpec


def x_table(spec: ReductionSpec) -> SymbolTable:
    return SymbolTable.indexed("x", range(-spec.p - spec.q, 0), extra=spec.symbolic)


def f_table(spec: ReductionSpec) -> SymbolTable:
    return SymbolTable.indexed("f", range(-spec.tau_depth, 0), extra=spec.symbolic)


def fa_table(spec):
    return SymbolTable.indexed("f", range(-spec.tau_depth, -spec.p - spec.q))


def fb_table(spec):
    return SymbolTable.indexed("f", range(-spec.p - spec.q, 0))


def symbolic_params(spec, table):
    """Parameter values living in ``table`` (symbols where the recurrence leaves them free)."""
    out = {}
    for name in ("a", "b"):
        v = getattr(spec, name)
        if v is None:
            out[name] = LaurentPoly.gen(table, name)
        else:
            if v.denominator != 1:
                raise TypeError("tau iteration needs integer or symbolic parameters")
            out[name] = int(v)
    return out


def tau_forward(spec, seeds, m_max, a, b, term_budget=None):
    """Extend ``seeds`` (indices -2p-2q..-1) by the tau recurrence through m_max.

    Returns a dict index -> value.  On budget exhaustion raises
    TermBudgetExceeded whose ``partial`` holds everything computed; a
    failed exact division raises NotDivisible carrying the same.
    """
    vals = dict(seeds)
    cache = {}

    def get(i):
        return vals[i]

    def pw(i, e):
        if e == 1:
            return vals[i]
        key = (i, e)
        if key not in cache:
            cache[key] = vals[i] ** e
        return cache[key]

    sizes = []
    depth = spec.tau_depth
    for m in range(0, m_max + 1):
        if term_budget is not None and predict_terms(sizes) > term_budget:
            raise TermBudgetExceeded(m, predict_terms(sizes), term_budget, partial=vals)
        try:
            v = tau_step(spec, get, m, a, b, pw)
        except NotDivisible as exc:
            exc.index = m
            exc.partial = vals
            raise
        if isinstance(v, LaurentPoly):
            sizes.append(v.nterms())
            if term_budget is not None and sizes[-1] > term_budget:
                raise TermBudgetExceeded(m, sizes[-1], term_budget, partial=vals)
        vals[m] = v
        for key in [key for key in cache if key[0] < m - depth]:
            del cache[key]
    return vals


def u_sequence(spec: ReductionSpec, m_max: int):
    """Monomials u_m over the f_a symbols for -2p-2q <= m <= m_max."""
    p, q, k = spec.p, spec.q, spec.k
    table = fa_table(spec)
    u = {}
    for i, m in enumerate(range(-spec.tau_depth, -p - q)):
        u[m] = MultiIndex.unit(table, i)
    for m in range(-p - q, m_max + 1):
        u[m] = (u[m - p] ** k) * (u[m - q] ** k) / u[m - p - q]
    return u


def v_sequence(spec: ReductionSpec, m_max: int):
    """Monomials v_m over the f_b symbols for -2p-2q <= m <= m_max."""
    p, q, k = spec.p, spec.q, spec.k
    table = fb_table(spec)
    v = {}
    for i, m in enumerate(range(-p - q, 0)):
        v[m] = MultiIndex.unit(table, i)
    for j in range(-p - q - 1, -spec.tau_depth - 1, -1):
        v[j] = (v[j + q] ** k) * (v[j + p] ** k) / v[j + p + q]
    for m in range(0, m_max + 1):
        v[m] = (v[m - p] ** k) * (v[m - q] ** k) / v[m - p - q]
    return v


def g_seeds(spec: ReductionSpec, table=None):
    p, q, k = spec.p, spec.q, spec.k
    table = table or x_table(spec)
    g = {m: LaurentPoly.one(table) for m in range(-spec.tau_depth, -p - q)}
    for m in range(-p - q, 0):
        x = LaurentPoly.gen(table, f"x[{m}]")
        g[m] = (x * g[m - p] ** k * g[m - q] ** k).exact_div(g[m - p - q])
    return g


def h_seeds(spec: ReductionSpec, table=None):
    p, q, k = spec.p, spec.q, spec.k
    table = table or x_table(spec)
    h = {m: LaurentPoly.one(table) for m in range(-p - q, 0)}
    for j in range(-p - q - 1, -spec.tau_depth - 1, -1):
        x = LaurentPoly.gen(table, f"x[{j + p + q}]")
        h[j] = (x * h[j + q] ** k * h[j + p] ** k).exact_div(h[j + p + q])
    return h


def g_sequence(spec, m_max, term_budget=None, params=None):
    table = x_table(spec)
    pr = symbolic_params(spec, table)
    pr.update(params or {})
    return tau_forward(spec, g_seeds(spec, table), m_max, pr["a"], pr["b"], term_budget)


def h_sequence(spec, m_max, term_budget=None, params=None):
    table = x_table(spec)
    pr = symbolic_params(spec, table)
    pr.update(params or {})
    return tau_forward(spec, h_seeds(spec, table), m_max, pr["a"], pr["b"], term_budget)


def ug_decompose(spec: ReductionSpec, m: int, term_budget=None):
    """(u_m, g_m) with f_m = u_m(f_a) g_m(x)."""
    if m < -spec.tau_depth:
        raise ValueError("index below the initial window")
    u = u_sequence(spec, max(m, 0))
    g = g_sequence(spec, m, term_budget) if m >= 0 else g_seeds(spec)
    return u[m], g[m]


def vh_decompose(spec: ReductionSpec, m: int, term_budget=None):
    """(v_m, h_m) with f_m = v_m(f_b) h_m(x)."""
    if m < -spec.tau_depth:
        raise ValueError("index below the initial window")
    v = v_sequence(spec, max(m, 0))
    h = h_sequence(spec, m, term_budget) if m >= 0 else h_seeds(spec)
    return v[m], h[m]
