"""Recurrence specifications and their JSON form."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Optional

from ..errors import InvalidWeights

SYM = "sym"


def _param(v):
    """Parse a coefficient: ``"sym"``/None stays symbolic, anything else is a Fraction."""
    if v is None or v == SYM:
        return None
    return Fraction(v)


def _param_json(v):
    return SYM if v is None else str(v)


@dataclass(frozen=True)
class ReductionSpec:
    """x_m + x_{m-p-q} = a/x_{m-q}^k + b/x_{m-p}^k.

    ``a`` or ``b`` equal to None means the parameter stays symbolic.
    Odd ``k`` is accepted so that its failures can be observed.
    """

    p: int
    q: int
    k: int
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None

    def __post_init__(self):
        if not (1 <= self.p < self.q):
            raise ValueError("need 1 <= p < q")
        if gcd(self.p, self.q) != 1:
            raise ValueError("p and q must be coprime")
        if self.k < 1:
            raise ValueError("k must be positive")
        object.__setattr__(self, "a", _param(self.a))
        object.__setattr__(self, "b", _param(self.b))
        if self.a == 0 or self.b == 0:
            raise ValueError("a and b must be nonzero; substitute zero explicitly where needed")

    @property
    def depth(self):
        return self.p + self.q

    @property
    def tau_depth(self):
        return 2 * (self.p + self.q)

    @property
    def k_even(self):
        return self.k % 2 == 0

    @property
    def symbolic(self):
        return [n for n, v in (("a", self.a), ("b", self.b)) if v is None]

    def label(self):
        return f"p{self.p}_q{self.q}_k{self.k}"

    def as_multiterm(self):
        a = Fraction(1) if self.a is None else self.a
        b = Fraction(1) if self.b is None else self.b
        return MultiTermSpec(self.p + self.q, ((self.q, self.k, a), (self.p, self.k, b)))

    def to_json(self):
        return {"kind": "reduction", "p": self.p, "q": self.q, "k": self.k,
                "a": _param_json(self.a), "b": _param_json(self.b)}


@dataclass(frozen=True)
class MultiTermSpec:
    """x_n + x_{n-P} = sum_j c_j / x_{n-o_j}^{e_j}."""

    lead_offset: int
    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        terms = tuple((int(o), int(e), Fraction(c)) for o, e, c in self.terms)
        object.__setattr__(self, "terms", terms)
        if self.lead_offset < 1:
            raise ValueError("lead offset must be positive")
        if not terms:
            raise ValueError("need at least one reciprocal term")
        offsets = [o for o, _, _ in terms]
        if len(set(offsets)) != len(offsets):
            raise ValueError("term offsets must be distinct")
        for o, e, c in terms:
            if not 0 < o < self.lead_offset:
                raise ValueError("term offsets must lie strictly between 0 and the lead offset")
            if e < 1:
                raise ValueError("exponents must be positive")
            if c == 0:
                raise ValueError("coefficients must be nonzero")

    @property
    def depth(self):
        return self.lead_offset

    def label(self):
        body = "_".join(f"o{o}e{e}" for o, e, _ in sorted(self.terms))
        return f"P{self.lead_offset}_{body}"

    def to_json(self):
        return {"kind": "multiterm", "lead_offset": self.lead_offset,
                "terms": [{"offset": o, "exponent": e, "coeff": str(c)} for o, e, c in self.terms]}


@dataclass(frozen=True)
class LatticeSpec:
    """x_{t,n} + x_{t-1,n-1} = a/x_{t,n-1}^k + b/x_{t-1,n}^k."""

    k: int
    a: Optional[Fraction] = None
    b: Optional[Fraction] = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        object.__setattr__(self, "a", _param(self.a))
        object.__setattr__(self, "b", _param(self.b))


def spec_from_json(data):
    """Build a spec from the JSON dictionary form (or a JSON string)."""
    if isinstance(data, str):
        data = json.loads(data)
    kind = data.get("kind")
    if kind == "reduction":
        return ReductionSpec(int(data["p"]), int(data["q"]), int(data["k"]), data.get("a", SYM), data.get("b", SYM))
    if kind == "multiterm":
        terms = [(int(t["offset"]), int(t["exponent"]), Fraction(str(t.get("coeff", "1")))) for t in data["terms"]]
        return MultiTermSpec(int(data["lead_offset"]), tuple(terms))
    raise ValueError(f"unknown spec kind {kind!r}")


def load_spec(path):
    """Load a spec file; bare names resolve to the bundled examples."""
    p = Path(path)
    if not p.exists():
        bundled = Path(__file__).resolve().parent.parent / "specs" / (p.name if p.suffix else p.name + ".json")
        if bundled.exists():
            p = bundled
    return spec_from_json(json.loads(p.read_text()))


def bundled_spec(name):
    return load_spec(name)


def build_reduction(p, q, r, k1, k2, m1, m2, a1=1, a2=1, b1=1, b2=1) -> MultiTermSpec:
    """Reduce the two-dimensional lattice equation along N = p t + q n + r m.

    The weights are given doubled so that half-integer choices stay
    integral: the recurrence reads x_n + x_{n-p} = a1/x_{n-(p-q)/2}^{k1}
    + b1/x_{n-(p+q)/2}^{m1} + a2/x_{n-(p-r)/2}^{k2} + b2/x_{n-(p+r)/2}^{m2}.
    """
    p, q, r = int(p), int(q), int(r)
    if not p > q > r > 0:
        raise InvalidWeights("need p > q > r > 0")
    if (p - q) % 2 or (p - r) % 2:
        raise InvalidWeights("p - q and p - r must be even for the doubled weights")
    for e in (k1, k2, m1, m2):
        if int(e) < 1:
            raise InvalidWeights("exponents must be positive")
    terms = [
        ((p - q) // 2, int(k1), Fraction(a1)),
        ((p + q) // 2, int(m1), Fraction(b1)),
        ((p - r) // 2, int(k2), Fraction(a2)),
        ((p + r) // 2, int(m2), Fraction(b2)),
    ]
    try:
        return MultiTermSpec(p, tuple(terms))
    except ValueError as exc:
        raise InvalidWeights(str(exc)) from None


HOLDS, FAILS, INDETERMINATE = "holds", "fails", "indeterminate"


def coprimeness_condition(ks, ms):
    """Evaluate the exponent condition in two readings.

    ``as_printed``: min_i(k_i m_i - 1) > max_i(k_i m_i), which no positive
    exponents satisfy.  ``alternative``: min_i(k_i m_i) > max_i(k_i m_i) - 1,
    i.e. all products k_i m_i agree, with every exponent even.  The
    verdict is the common answer, or ``indeterminate`` when they differ.
    """
    ks, ms = [int(v) for v in ks], [int(v) for v in ms]
    if not ks or len(ks) != len(ms):
        raise ValueError("need two nonempty exponent lists of equal length")
    prods = [k * m for k, m in zip(ks, ms)]
    printed = min(v - 1 for v in prods) > max(prods)
    alternative = min(prods) > max(prods) - 1 and all(v % 2 == 0 and v >= 2 for v in ks + ms)
    sub = {"as_printed": HOLDS if printed else FAILS, "alternative": HOLDS if alternative else FAILS}
    verdict = sub["as_printed"] if printed == alternative else INDETERMINATE
    return {"verdict": verdict, **sub, "products": prods}
