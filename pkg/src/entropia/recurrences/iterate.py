"""Orbits of the x-form and tau-form recurrences over any exact field."""
from __future__ import annotations

from fractions import Fraction
from itertools import islice

from ..algebra import LaurentPoly, RationalFunction
from ..errors import NotDivisible, SingularOrbit, TermBudgetExceeded
from .specs import MultiTermSpec, ReductionSpec


def _is_zero(v):
    if isinstance(v, (int, Fraction)):
        return v == 0
    return not bool(v)


def _scalar(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def resolve_params(spec: ReductionSpec, params=None):
    """Return (a, b) as field elements or scalars; ``params`` overrides the recurrence."""
    params = dict(params or {})
    out = []
    for name in ("a", "b"):
        if name in params:
            v = params[name]
            out.append(_scalar(v) if isinstance(v, (int, Fraction, str)) else v)
        else:
            v = getattr(spec, name)
            if v is None:
                raise ValueError(f"parameter {name} is symbolic; pass a value in params")
            out.append(_scalar(v))
    return tuple(out)


def _terms(spec, params):
    if isinstance(spec, ReductionSpec):
        a, b = resolve_params(spec, params)
        return spec.p + spec.q, [(spec.q, spec.k, a), (spec.p, spec.k, b)]
    if isinstance(spec, MultiTermSpec):
        return spec.lead_offset, [(o, e, _scalar(c)) for o, e, c in spec.terms]
    raise TypeError("unsupported spec")


def _sum(items):
    cls = type(items[0])
    if hasattr(cls, "sum") and callable(getattr(cls, "sum")):
        return cls.sum(items)
    total = items[0]
    for v in items[1:]:
        total = total + v
    return total


def orbit_x(spec, init, params=None):
    """Yield x_0, x_1, ... for the x-form recurrence."""
    lead, terms = _terms(spec, params)
    window = list(init)
    if len(window) != lead:
        raise ValueError(f"need {lead} initial values, got {len(window)}")
    m = 0
    inverses = {}
    while True:
        parts = [-window[-lead]]
        for o, e, c in terms:
            if _is_zero(c):
                continue
            pos = len(window) - o
            base = window[pos]
            if _is_zero(base):
                raise SingularOrbit(m, f"divisor x[{m - o}] vanishes")
            key = (m - o, e)
            if key not in inverses:
                inverses[key] = (1 / base if isinstance(base, (int, Fraction)) else base.inverse()
                                 if hasattr(base, "inverse") else 1 / base) ** e
            parts.append(inverses[key] * c)
        x = _sum(parts)
        window.append(x)
        if len(window) > 2 * lead:
            del window[: len(window) - lead]
        for key in [k for k in inverses if k[0] < m - lead]:
            del inverses[key]
        yield x
        m += 1


def iterate_x(spec, init, n, params=None):
    """Return [x_0, ..., x_{n-1}] of the x-form recurrence."""
    return list(islice(orbit_x(spec, init, params), n))


def predict_terms(sizes):
    """Extrapolate the next term count from the last three counts."""
    if len(sizes) < 3 or min(sizes[-3:]) == 0:
        return 0
    l2, l1, l0 = sizes[-3:]
    r1, r0 = l1 / l2, l0 / l1
    return int(l0 * r0 * r0 / r1) if r1 > 0 else 0


def _exact_div(num, den, m):
    if isinstance(num, LaurentPoly):
        return num.exact_div(den)
    if _is_zero(den):
        raise SingularOrbit(m, "tau divisor vanishes")
    return num / den


def tau_step(spec: ReductionSpec, get, m, a, b, pw):
    """One step of the tau recurrence; ``get(i)`` returns f_i, ``pw(i, e)`` a power."""
    p, q, k = spec.p, spec.q, spec.k
    kk = k * k
    num = -(pw(m - p, k) * pw(m - q, k) * get(m - 2 * p - 2 * q))
    if not _is_zero(a):
        num = num + pw(m - p, k) * pw(m - p - q, kk - 1) * pw(m - 2 * q, kk) * pw(m - 2 * p - q, k) * a
    if not _is_zero(b):
        num = num + pw(m - q, k) * pw(m - p - q, kk - 1) * pw(m - 2 * p, kk) * pw(m - p - 2 * q, k) * b
    den = pw(m - 2 * p - q, k) * pw(m - p - 2 * q, k)
    return _exact_div(num, den, m)


def orbit_tau(spec: ReductionSpec, init, params=None, term_budget=None):
    """Yield f_0, f_1, ... of the tau recurrence.

    ``init`` lists f_{-2p-2q} .. f_{-1}.  For LaurentPoly values a
    failed exact division raises NotDivisible with the index attached.
    """
    depth = spec.tau_depth
    if len(init) != depth:
        raise ValueError(f"need {depth} initial values, got {len(init)}")
    a, b = resolve_params(spec, params)
    vals = {i - depth: v for i, v in enumerate(init)}
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
    m = 0
    while True:
        if term_budget is not None and predict_terms(sizes) > term_budget:
            raise TermBudgetExceeded(m, predict_terms(sizes), term_budget)
        try:
            f = tau_step(spec, get, m, a, b, pw)
        except NotDivisible as exc:
            exc.index = m
            raise
        if isinstance(f, LaurentPoly):
            sizes.append(f.nterms())
            if term_budget is not None and sizes[-1] > term_budget:
                raise TermBudgetExceeded(m, sizes[-1], term_budget)
        vals[m] = f
        for i in [i for i in vals if i < m - depth]:
            del vals[i]
        for key in [key for key in cache if key[0] < m - depth]:
            del cache[key]
        yield f
        m += 1


def iterate_tau(spec, init, n, params=None, term_budget=None):
    """Return [f_0, ..., f_{n-1}] of the tau recurrence."""
    return list(islice(orbit_tau(spec, init, params, term_budget), n))


def x_from_f(spec: ReductionSpec, f_window):
    """x_m = f_m f_{m-p-q} / (f_{m-p}^k f_{m-q}^k) from a window ending at f_m."""
    p, q, k = spec.p, spec.q, spec.k
    w = list(f_window)
    if len(w) < p + q + 1:
        raise ValueError(f"need at least {p + q + 1} values")
    fm, fpq, fp, fq = w[-1], w[-1 - p - q], w[-1 - p], w[-1 - q]
    for v, off in ((fp, p), (fq, q)):
        if _is_zero(v):
            from ..errors import DivisionByZero

            raise DivisionByZero(f"f[m-{off}]", -k)
    if isinstance(fm, LaurentPoly):
        return RationalFunction(fm * fpq, fp ** k * fq ** k)
    return (fm * fpq) / (fp ** k * fq ** k)
