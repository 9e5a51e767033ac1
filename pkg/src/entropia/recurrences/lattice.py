"""The two-dimensional lattice equation and its tau form on finite good domains."""
from __future__ import annotations

from fractions import Fraction

from ..algebra import LaurentPoly, SymbolTable
from ..errors import GoodDomainError, NotDivisible, SingularOrbit
from .specs import LatticeSpec

X_FORM, TAU_FORM = "x", "tau"

# offsets each form reads, relative to the point being computed
_DEPS = {
    X_FORM: [(1, 1), (0, 1), (1, 0)],
    TAU_FORM: [(2, 2), (1, 0), (0, 1), (1, 1), (0, 2), (2, 1), (2, 0), (1, 2)],
}


def in_band(t, n):
    return t in (0, 1) or n in (0, 1)


def band_points(t_max, n_max):
    return [(t, n) for t in range(t_max) for n in range(n_max) if in_band(t, n)]


def band_table(t_max, n_max, stem="f", extra=()):
    return SymbolTable([f"{stem}[{t},{n}]" for t, n in band_points(t_max, n_max)] + list(extra))


def symbolic_band(t_max, n_max, stem="f", extra=()):
    table = band_table(t_max, n_max, stem, extra)
    return table, {(t, n): LaurentPoly.gen(table, f"{stem}[{t},{n}]") for t, n in band_points(t_max, n_max)}


def _targets(region):
    if isinstance(region, tuple) and len(region) == 2 and all(isinstance(v, int) for v in region):
        t_max, n_max = region
        if t_max < 0 or n_max < 0:
            raise GoodDomainError("region bounds must be nonnegative")
        pts = [(t, n) for t in range(t_max) for n in range(n_max)]
    else:
        pts = [tuple(p) for p in region]
    for t, n in pts:
        if t < 0 or n < 0:
            raise GoodDomainError(f"point {(t, n)} lies below the band")
    return sorted(set(pts))


def _is_zero(v):
    if isinstance(v, (int, Fraction)):
        return v == 0
    return not bool(v)


def _inv(v):
    if isinstance(v, (int, Fraction)):
        return 1 / Fraction(v)
    return v.inverse()


def iterate_lattice(spec: LatticeSpec, form, init, region, params=None):
    """Fill ``region`` in raster order from band values ``init``.

    ``region`` is ``(t_max, n_max)`` for the rectangle t < t_max,
    n < n_max, or an explicit set of points.  Every point off the band
    must have all the points it reads inside the region or the band.
    """
    if form not in _DEPS:
        raise ValueError(f"form must be one of {sorted(_DEPS)}")
    params = dict(params or {})
    a = params.get("a", spec.a)
    b = params.get("b", spec.b)
    if a is None or b is None:
        raise ValueError("symbolic lattice parameters need values in params")
    a = int(a) if isinstance(a, Fraction) and a.denominator == 1 else a
    b = int(b) if isinstance(b, Fraction) and b.denominator == 1 else b
    k = spec.k
    pts = _targets(region)
    inside = set(pts)
    grid = {}
    for t, n in pts:
        if in_band(t, n):
            if (t, n) not in init:
                raise GoodDomainError(f"missing band value at {(t, n)}")
            grid[(t, n)] = init[(t, n)]
            continue
        for dt, dn in _DEPS[form]:
            d = (t - dt, n - dn)
            if d not in inside and not (in_band(*d) and d in init):
                raise GoodDomainError(f"point {(t, n)} needs {d}, which is outside the domain")
    for t, n in pts:
        if in_band(t, n):
            continue

        def F(dt, dn):
            d = (t - dt, n - dn)
            return grid[d] if d in grid else init[d]

        if form == X_FORM:
            if _is_zero(F(0, 1)) or _is_zero(F(1, 0)):
                raise SingularOrbit((t, n), "zero divisor")
            grid[(t, n)] = -F(1, 1) + a * _inv(F(0, 1)) ** k + b * _inv(F(1, 0)) ** k
        else:
            kk = k * k
            num = -(F(2, 2) * F(1, 0) ** k * F(0, 1) ** k)
            if not _is_zero(a):
                num = num + F(1, 1) ** (kk - 1) * F(0, 2) ** kk * F(1, 0) ** k * F(2, 1) ** k * a
            if not _is_zero(b):
                num = num + F(1, 1) ** (kk - 1) * F(2, 0) ** kk * F(0, 1) ** k * F(1, 2) ** k * b
            den = F(2, 1) ** k * F(1, 2) ** k
            if isinstance(num, LaurentPoly):
                try:
                    grid[(t, n)] = num.exact_div(den)
                except NotDivisible as exc:
                    exc.index = (t, n)
                    raise
            else:
                if _is_zero(den):
                    raise SingularOrbit((t, n), "zero divisor")
                grid[(t, n)] = num / den
    return grid


def laurent_check(grid):
    """Map each entry to True when it is a Laurent polynomial.

    LaurentPoly entries pass by construction (their division was exact).
    RationalFunction entries pass when the reduced denominator is 1, i.e.
    all of the denominator is a monomial carried by the numerator.
    """
    out = {}
    for pt, v in grid.items():
        if isinstance(v, LaurentPoly):
            out[pt] = True
        elif hasattr(v, "is_laurent"):
            out[pt] = v.is_laurent()
        else:
            out[pt] = False
    return out
