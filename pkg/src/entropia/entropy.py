"""Characteristic polynomials, their dominant roots and entropy estimates."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import flint
import mpmath
import numpy as np

from .errors import InsufficientData, MultipleRoots, NoBracket
from .recurrences.specs import MultiTermSpec, ReductionSpec

DOMINANCE_TOL = 1e-6
INFERRED_RULE = "inferred rule: coefficient of lambda^(P-o) is minus the exponent at offset o"


@dataclass(frozen=True)
class CharPoly:
    """Integer polynomial in lambda; ``coeffs[i]`` multiplies lambda**i."""

    coeffs: tuple

    def __post_init__(self):
        co = [int(c) for c in self.coeffs]
        while len(co) > 1 and co[-1] == 0:
            co.pop()
        if len(co) < 2:
            raise ValueError("characteristic polynomial needs degree >= 1")
        object.__setattr__(self, "coeffs", tuple(co))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other):
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return CharPoly(tuple(out))

    def divmod(self, other):
        """Quotient and remainder over the rationals, as integer lists when exact."""
        from fractions import Fraction

        rem = [Fraction(c) for c in self.coeffs]
        lead = Fraction(other.coeffs[-1])
        quo = [Fraction(0)] * max(self.degree - other.degree + 1, 1)
        for i in range(self.degree - other.degree, -1, -1):
            f = rem[i + other.degree] / lead
            quo[i] = f
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= f * b
        rem = rem[: other.degree] or [Fraction(0)]
        return quo, rem

    def scale(self):
        return sum(abs(c) for c in self.coeffs)

    def to_str(self, var="λ"):
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mon = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            mag = abs(c)
            body = str(mag) if not mon else (mon if mag == 1 else f"{mag}{mon}")
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_str()


def _poly(terms, degree):
    co = [0] * (degree + 1)
    for power, c in terms:
        co[power] += c
    return CharPoly(tuple(co))


def reduction_charpoly(p, q, k) -> CharPoly:
    """lambda^{p+q} - k(lambda^p + lambda^q) + 1."""
    return _poly([(p + q, 1), (p, -k), (q, -k), (0, 1)], p + q)


def full_charpoly(p, q, k) -> CharPoly:
    """Characteristic polynomial of the d* recursion, degree 2p+2q.

    Equal to (lambda^{p+q} - 1) times the reduction polynomial; both the
    expanded form and the product are built and compared.
    """
    n = p + q
    expanded = _poly([(2 * n, 1), (2 * p + q, -k), (p + 2 * q, -k), (p, k), (q, k), (0, -1)], 2 * n)
    product = _poly([(n, 1), (0, -1)], n) * reduction_charpoly(p, q, k)
    if expanded != product:
        raise AssertionError("factorization of the d* characteristic polynomial failed")
    return expanded


def multiterm_charpoly(spec) -> CharPoly:
    """lambda^P - sum_j e_j lambda^{P - o_j} + 1 for a multi-term recurrence.

    The coefficient rule is read off the three worked examples and is
    reported as inferred (see ``INFERRED_RULE``).
    """
    if isinstance(spec, ReductionSpec):
        spec = spec.as_multiterm()
    if not isinstance(spec, MultiTermSpec):
        raise TypeError("need a MultiTermSpec")
    P = spec.lead_offset
    terms = [(P, 1), (0, 1)] + [(P - o, -e) for o, e, c in spec.terms if c != 0]
    return _poly(terms, P)


@dataclass
class RootReport:
    lambda_max: object          # mpmath.mpf
    all_moduli: list
    bracket: tuple
    iterations: int
    residual: object = None
    dominance: bool = True
    precision: int = 30
    notes: list = field(default_factory=list)

    def as_str(self, digits=10):
        return mpmath.nstr(self.lambda_max, digits + 1, strip_zeros=False)


def root_moduli(poly: CharPoly):
    """Moduli of all complex roots (companion-matrix eigenvalues, double precision)."""
    roots = np.roots([float(c) for c in reversed(poly.coeffs)])
    return sorted((float(abs(r)) for r in roots), reverse=True)


def _deriv_at(poly, x):
    acc = 0
    for i in range(poly.degree, 0, -1):
        acc = acc * x + i * poly.coeffs[i]
    return acc


def has_multiple_roots(poly: CharPoly) -> bool:
    """Exact test: gcd(f, f') is nonconstant."""
    f = flint.fmpz_poly(list(poly.coeffs))
    return f.gcd(f.derivative()).degree() > 0


def largest_real_root(poly: CharPoly, precision: int = 30) -> RootReport:
    """Bisection on (1, 2 k_max] then Newton polish.

    ``k_max`` is the largest coefficient magnitude.  Raises NoBracket when
    the polynomial does not change sign between 1 and 2 k_max.
    """
    kmax = max(abs(c) for c in poly.coeffs)
    with mpmath.workdps(precision + 15):
        lo, hi = mpmath.mpf(1), mpmath.mpf(2 * kmax)
        flo, fhi = poly(lo), poly(hi)
        if flo == 0:
            raise NoBracket("lambda = 1 is a root")
        if (flo > 0) == (fhi > 0):
            raise NoBracket(f"no sign change on (1, {2 * kmax}]")
        bracket = (1, 2 * kmax)
        tol = mpmath.mpf(10) ** (-(precision + 5))
        it = 0
        while hi - lo > tol:
            mid = (lo + hi) / 2
            fm = poly(mid)
            it += 1
            if fm == 0:
                lo = hi = mid
                break
            if (fm > 0) == (fhi > 0):
                hi = mid
            else:
                lo = mid
        root = (lo + hi) / 2
        for _ in range(3):
            d = _deriv_at(poly, root)
            if d == 0:
                break
            step = poly(root) / d
            if not (lo - tol <= root - step <= hi + tol):
                break
            root -= step
        residual = abs(poly(root))
        moduli = root_moduli(poly)
        dominance = moduli[0] <= float(root) + DOMINANCE_TOL
        report = RootReport(+root, moduli, bracket, it, residual, dominance, precision)
    if residual >= mpmath.mpf(10) ** (-precision) * poly.scale():
        report.notes.append("residual above tolerance")
    return report


def root_bounds_check(p, q, k):
    """1 < Lambda, dominance over all moduli, and the claim Lambda < k, per instance."""
    poly = reduction_charpoly(p, q, k)
    rep = largest_real_root(poly)
    lam = rep.lambda_max
    return {
        "p": p, "q": q, "k": k,
        "lambda": mpmath.nstr(lam, 15),
        "f_at_1": poly(1),
        "gt_one": bool(lam > 1),
        "dominance": rep.dominance,
        "max_modulus": rep.all_moduli[0],
        "lt_k": bool(lam < k),
    }


def dominant_coefficient(p, q, k, precision: int = 30):
    """|c_Lambda| in d*_m = sum_i c_i lambda_i^{m+2p+2q}.

    The initial data d*_{-2p-2q} = 1 and zeros after it turn into the
    Vandermonde system V c = e_1 over the roots of the full
    characteristic polynomial.
    """
    poly = full_charpoly(p, q, k)
    n = poly.degree
    if has_multiple_roots(poly):
        raise MultipleRoots(f"the d* characteristic polynomial for {(p, q, k)} has a repeated root")
    with mpmath.workdps(precision + 20):
        roots = mpmath.polyroots(list(reversed(poly.coeffs)), maxsteps=400, extraprec=4 * precision)
        sep = min(abs(roots[i] - roots[j]) for i in range(n) for j in range(i + 1, n))
        if sep < mpmath.mpf(10) ** (-(precision // 2)):
            raise MultipleRoots(f"roots closer than {mpmath.nstr(sep, 3)}")
        V = mpmath.matrix(n, n)
        for r in range(n):
            for i in range(n):
                V[r, i] = roots[i] ** r
        e1 = mpmath.matrix([1] + [0] * (n - 1))
        c = mpmath.lu_solve(V, e1)
        lam = largest_real_root(reduction_charpoly(p, q, k), precision).lambda_max
        i = min(range(n), key=lambda j: abs(roots[j] - lam))
        value = abs(c[i])
    if value <= mpmath.mpf(10) ** -12:
        raise AssertionError("dominant coefficient vanishes")
    return +value


@dataclass
class EntropyEstimate:
    slope: float
    ratio: float
    diagnostics: dict


def entropy_from_degrees(d) -> EntropyEstimate:
    """Least-squares slope of log d_n over the trailing half, and the last log ratio."""
    d = [int(v) for v in d]
    if len(d) < 4:
        raise InsufficientData("need at least four degrees")
    if d[-1] <= 0 or d[-2] <= 0:
        raise InsufficientData("the last two degrees must be positive")
    start = len(d) // 2
    pts = [(n, math.log(v)) for n, v in enumerate(d) if n >= start and v > 0]
    if len(pts) < 2:
        raise InsufficientData("too few positive degrees in the trailing half")
    xs, ys = zip(*pts)
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - mx) * (y - my) for x, y in pts) / sum((x - mx) ** 2 for x in xs)
    ratios = [d[n] / d[n - 1] if d[n - 1] > 0 else None for n in range(1, len(d))]
    return EntropyEstimate(slope, math.log(d[-1] / d[-2]),
                           {"ratios": ratios, "fit_start": start, "points": len(pts)})
