"""Growth of exact rational orbits and of orbits over F_p(t).

Heights H(p/q) = max(|p|, |q|) of rational iterates play the role of
degrees; the ratio log H(x_{n+1}) / log H(x_n) tracks the dynamical
degree.  The F_p(t) orbits start from random degree-one initial values
and measure d_n = max(deg num, deg den) directly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2

from .algebra import DEFAULT_PRIME, PrimeFieldRatFun
from .errors import InsufficientData, SingularOrbit, ZeroInput
from .recurrences.iterate import orbit_x
from .recurrences.specs import MultiTermSpec, ReductionSpec

DEFAULT_DIGIT_BUDGET = 2_000_000
DEFAULT_DEGREE_BUDGET = 2_000_000
SEED_RETRIES = 5


def height(r) -> int:
    """max(|numerator|, |denominator|) of a nonzero rational."""
    r = Fraction(r) if not isinstance(r, type(gmpy2.mpq())) else r
    if r == 0:
        raise ZeroInput("height of zero")
    return int(max(abs(r.numerator), abs(r.denominator)))


def first_index(spec):
    """Index of the first computed iterate.

    Multi-term recurrences number their initial values x_0 .. x_{P-1};
    the (p, q, k) family numbers them x_{-p-q} .. x_{-1}.
    """
    return spec.lead_offset if isinstance(spec, MultiTermSpec) else 0


def _depth(spec):
    return spec.lead_offset if isinstance(spec, MultiTermSpec) else spec.p + spec.q


def _terms(spec):
    """(offset, exponent) pairs of the reciprocal terms."""
    if isinstance(spec, MultiTermSpec):
        return [(o, e) for o, e, _ in spec.terms]
    return [(spec.q, spec.k), (spec.p, spec.k)]


def _digits(v):
    return int(gmpy2.num_digits(gmpy2.mpz(v.numerator))) + int(gmpy2.num_digits(gmpy2.mpz(v.denominator)))


@dataclass
class HeightOrbit:
    spec: object
    init: list
    indices: list = field(default_factory=list)
    log_heights: list = field(default_factory=list)
    digits: list = field(default_factory=list)
    digit_budget: int = DEFAULT_DIGIT_BUDGET
    budget_stop: bool = False
    values: list | None = None

    def height_at(self, n):
        """Exact height at index n when values were kept."""
        if self.values is None:
            raise ValueError("orbit was run without keeping values")
        return height(self.values[self.indices.index(n)])


def run_height_orbit(spec, init, n_max: int, digit_budget: int = DEFAULT_DIGIT_BUDGET,
                     params=None, keep_values: bool = False) -> HeightOrbit:
    """Iterate over the rationals, recording log heights until n_max or the budget.

    ``n_max`` counts computed iterates.  Before each step the digit count
    of the next iterate is predicted from the last two; when the
    prediction or the actual count passes ``digit_budget`` the orbit stops
    with ``budget_stop`` set and the offending iterate is not recorded.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    init = [Fraction(v) for v in init]
    window = [gmpy2.mpq(v.numerator, v.denominator) for v in init]
    orbit = HeightOrbit(spec, init, digit_budget=digit_budget, values=[] if keep_values else None)
    start = first_index(spec)
    gen = orbit_x(spec, window, params)
    for i in range(n_max):
        if len(orbit.digits) >= 2 and orbit.digits[-2] > 0:
            predicted = orbit.digits[-1] * orbit.digits[-1] / orbit.digits[-2]
            if predicted > digit_budget:
                orbit.budget_stop = True
                break
        x = next(gen)
        dig = _digits(x)
        if dig > digit_budget:
            orbit.budget_stop = True
            break
        orbit.indices.append(start + i)
        orbit.digits.append(dig)
        orbit.log_heights.append(float(gmpy2.log(max(abs(x.numerator), abs(x.denominator)))) if x != 0 else 0.0)
        if keep_values:
            orbit.values.append(Fraction(int(x.numerator), int(x.denominator)))
    return orbit


def _trace(values, what):
    pairs = [(n, v) for n, v in values if v > 0]
    if len(pairs) < 3:
        raise InsufficientData(f"need at least three steps with positive {what}")
    ratios = []
    for (n0, v0), (n1, v1) in zip(pairs, pairs[1:]):
        if n1 == n0 + 1:
            ratios.append((n1, v1 / v0))
    if not ratios:
        raise InsufficientData("no consecutive positive steps")
    return ratios[-1][1], ratios


def dyndeg_from_heights(orbit: HeightOrbit):
    """Last ratio log H(x_{n+1}) / log H(x_n) and the whole trace [(n+1, ratio)]."""
    return _trace(list(zip(orbit.indices, orbit.log_heights)), "log height")


@dataclass
class SpecializedOrbit:
    spec: object
    prime: int
    seed: int
    indices: list = field(default_factory=list)
    degrees: list = field(default_factory=list)
    degree_budget: int = DEFAULT_DEGREE_BUDGET
    budget_stop: bool = False
    attempts: int = 1

    def max_degrees(self):
        return [max(d) for d in self.degrees]


def _random_params(spec, rng, prime):
    if not isinstance(spec, ReductionSpec):
        return None
    out = {}
    for name in ("a", "b"):
        v = getattr(spec, name)
        c = rng.randrange(1, prime) if v is None else v
        out[name] = PrimeFieldRatFun.const(prime, c)
    return out


def _specialized_once(spec, prime, seed, n_max, degree_budget):
    rng = random.Random(seed)
    depth = _depth(spec)
    init = [PrimeFieldRatFun.linear(rng.randrange(1, prime), rng.randrange(1, prime), prime) for _ in range(depth)]
    params = _random_params(spec, rng, prime)
    orbit = SpecializedOrbit(spec, prime, seed, degree_budget=degree_budget)
    start = first_index(spec)
    terms = _terms(spec)
    hist = [v.degree() for v in init]
    gen = orbit_x(spec, init, params)
    for i in range(n_max):
        # degree of the next iterate before any cancellation
        bound = hist[-depth] + sum(e * hist[-o] for o, e in terms)
        if bound > degree_budget:
            orbit.budget_stop = True
            break
        x = next(gen)
        orbit.indices.append(start + i)
        orbit.degrees.append(x.degrees())
        hist.append(x.degree())
    return orbit


def run_specialized_orbit(spec, prime: int = DEFAULT_PRIME, seed: int = 0, n_max: int = 40,
                          degree_budget: int = DEFAULT_DEGREE_BUDGET) -> SpecializedOrbit:
    """Orbit over F_p(t) from random degree-one initial values c_i + d_i t.

    Stops before a step whose unreduced degree bound passes
    ``degree_budget``.  A vanishing divisor retries with seed + 1, up to
    five attempts in total.
    """
    last = None
    for attempt in range(SEED_RETRIES):
        try:
            orbit = _specialized_once(spec, prime, seed + attempt, n_max, degree_budget)
            orbit.attempts = attempt + 1
            return orbit
        except SingularOrbit as exc:
            last = exc
    raise last


def dyndeg_from_degrees(orbit):
    """Last ratio d_{n+1}/d_n and the trace, from a SpecializedOrbit or a degree list."""
    if isinstance(orbit, SpecializedOrbit):
        values = list(zip(orbit.indices, orbit.max_degrees()))
    else:
        values = list(enumerate(int(v) for v in orbit))
    return _trace(values, "degree")
