"""Finite instance checks of the Laurent, constant-term, irreducibility and
coprimeness facts for the tau recurrence.

Every check returns a CheckReport with one item per index or claim.
Symbolic iterates are used while they fit in the term budget.  Past it
the checks run on specializations over F_p(t): a specialization can
refute a claim exactly but only gives evidence for it, and each item
carries its grade.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import flint

from .algebra import (COMMON_FACTOR_WITNESS, DEFAULT_PRIME, LIKELY_COPRIME, LaurentPoly, PrimeFieldRatFun,
                      SymbolTable, gcd_line_probe)
from .errors import NotDivisible, SingularOrbit, TermBudgetExceeded
from .recurrences.decompose import f_table, symbolic_params, tau_forward
from .recurrences.specs import ReductionSpec

PASS, FAIL, CONFLICT, WARN = "pass", "fail", "conflict", "warn"
# an observation that is reported but neither asserted nor refuted
RECORDED = "recorded"
PROOF, EVIDENCE = "proof", "evidence"
SEED_RETRIES = 5
# cost grows much faster than the term count (k^2-th powers of the last
# iterates), so the suites default to a smaller budget than degree tables
VERIFY_TERM_BUDGET = 300_000
VARIANTS = ("generic", "a=0", "b=0")


def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, (str, float)):
        return v
    if isinstance(v, int):
        return v if abs(v) < 10**15 else str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


@dataclass
class CheckReport:
    check: str
    spec: dict
    range: dict
    items: list = field(default_factory=list)
    seed: int | None = None
    prime: int | None = None
    notes: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name, status, grade=PROOF, witness=None, **info):
        item = {"name": name, "status": status, "grade": grade}
        item.update(info)
        if status in (FAIL, CONFLICT, WARN) or witness is not None:
            wit = {"check": self.check, "item": name, "spec": self.spec, "range": dict(self.range),
                   "seed": self.seed, "prime": self.prime}
            wit.update(witness or {})
            item["witness"] = wit
        self.items.append(item)
        return item

    def by_status(self, status):
        return [it for it in self.items if it["status"] == status]

    def failures(self):
        return self.by_status(FAIL)

    def conflicts(self):
        return self.by_status(CONFLICT)

    @property
    def ok(self):
        return not self.failures()

    @property
    def proof_failure(self):
        return any(it["grade"] == PROOF for it in self.failures())

    @property
    def grade(self):
        return EVIDENCE if any(it["grade"] == EVIDENCE for it in self.items) else PROOF

    def item(self, name):
        for it in self.items:
            if it["name"] == name:
                return it
        raise KeyError(name)

    def to_json(self):
        return _jsonable({
            "check": self.check, "spec": self.spec, "range": self.range, "seed": self.seed,
            "prime": self.prime, "ok": self.ok, "grade": self.grade,
            "proof_failure": self.proof_failure, "notes": self.notes,
            "items": self.items, "data": self.data,
        })


def _spec_json(spec):
    return spec.to_json() if hasattr(spec, "to_json") else dict(spec)


def _unit_spec(p, q, k):
    return ReductionSpec(p, q, k, 1, 1)


# ---------------------------------------------------------------------------
# symbolic and specialized tau orbits


@lru_cache(maxsize=16)
def _symbolic_f(spec, m_max, zero=None, term_budget=VERIFY_TERM_BUDGET):
    """Symbolic f_0..f_top over the f table.

    Returns (values, top, bad) where ``top`` is the last computed index
    and ``bad`` the index of a failed exact division, if any.
    """
    table = f_table(spec)
    pr = symbolic_params(spec, table)
    if zero:
        pr[zero] = 0
    seeds = {m: LaurentPoly.gen(table, f"f[{m}]") for m in range(-spec.tau_depth, 0)}
    try:
        vals = tau_forward(spec, seeds, m_max, pr["a"], pr["b"], term_budget)
        return vals, m_max, None
    except TermBudgetExceeded as exc:
        return exc.partial, max(exc.partial), None
    except NotDivisible as exc:
        return exc.partial, exc.index - 1, exc.index


def _fp_params(spec, rng, prime, zero=None):
    out = {}
    for name in ("a", "b"):
        v = getattr(spec, name)
        if name == zero:
            out[name] = 0
        else:
            out[name] = PrimeFieldRatFun.const(prime, rng.randrange(1, prime) if v is None else v)
    return out


def _fp_orbit(spec, m_max, make_images, tag, seed, prime, zero=None):
    """Tau orbit over F_p(t); ``make_images(rng)`` returns the seeds.

    A vanishing divisor retries with a fresh stream.  Returns the orbit
    and the attempt number used.
    """
    last = None
    for attempt in range(SEED_RETRIES):
        rng = random.Random(f"{tag}:{seed}:{attempt}")
        seeds = make_images(rng)
        params = _fp_params(spec, rng, prime, zero)
        try:
            return tau_forward(spec, seeds, m_max, params["a"], params["b"]), attempt
        except SingularOrbit as exc:
            last = exc
    raise last


def _t_power(poly, prime):
    e = poly.degree()
    return poly == flint.nmod_poly([0] * e + [1], prime)


def _one_var_images(spec, j, prime):
    """f_j = t and random constants elsewhere."""
    t = PrimeFieldRatFun.t(prime)

    def make(rng):
        return {m: (t if m == j else PrimeFieldRatFun.const(prime, rng.randrange(1, prime)))
                for m in range(-spec.tau_depth, 0)}
    return make


# ---------------------------------------------------------------------------
# Laurent property


def _laurent_specialized(spec, j, m_lo, m_max, seed, prime):
    """First m in [m_lo, m_max] whose image under f_j = t is not Laurent in t."""
    orbit, attempt = _fp_orbit(spec, m_max, _one_var_images(spec, j, prime), f"laurent/{j}", seed, prime)
    for m in range(m_lo, m_max + 1):
        if not _t_power(orbit[m].den, prime):
            return m, attempt, orbit[m].den.degree()
    return None, attempt, None


def check_laurent(spec: ReductionSpec, m_max: int, term_budget: int = VERIFY_TERM_BUDGET,
                  seed: int = 0, prime: int = DEFAULT_PRIME) -> CheckReport:
    """Every tau division is exact and every f_m is a Laurent polynomial.

    Symbolic iteration (all f's and symbolic a, b) runs while it fits the
    budget; a failed exact division there is a proof-grade failure.
    Beyond it each initial f_j in turn becomes t with the others random
    and the denominator of every image must be a power of t.  A
    non-monomial denominator refutes the property; agreement is evidence.
    """
    rep = CheckReport("laurent", _spec_json(spec), {"m_min": 0, "m_max": m_max}, seed=seed, prime=prime)
    rep.range["term_budget"] = term_budget
    vals, top, bad = _symbolic_f(spec, m_max, None, term_budget)
    for m in range(0, top + 1):
        rep.add(f"f[{m}]", PASS, PROOF, method="symbolic", terms=vals[m].nterms())
    if bad is not None:
        rep.add(f"f[{bad}]", FAIL, PROOF, {"m": bad, "method": "symbolic", "term_budget": term_budget},
                method="symbolic", detail="tau division is not exact")
        rep.data["first_failure"] = bad
        return rep
    if top >= m_max:
        return rep
    rep.notes.append(f"symbolic through m={top}; specialized beyond")
    # past a non-Laurent index the degrees explode, so grow the range one step at a time
    for m in range(top + 1, m_max + 1):
        witness = None
        for j in range(-spec.tau_depth, 0):
            bad_m, attempt, dd = _laurent_specialized(spec, j, m, m, seed, prime)
            if bad_m is not None:
                witness = {"m": m, "symbol": f"f[{j}]", "attempt": attempt, "method": "specialized",
                           "m_lo": top + 1, "den_degree": dd}
                break
        if witness is not None:
            rep.add(f"f[{m}]", FAIL, PROOF, witness, method="specialized",
                    detail="specialized denominator is not a power of t")
            rep.data["first_failure"] = m
            break
        rep.add(f"f[{m}]", PASS, EVIDENCE, method="specialized")
    return rep


# ---------------------------------------------------------------------------
# constant terms


def _lower_window(spec):
    """Indices -2p-2q .. -p-2q-1: the symbols the iterates are polynomial in."""
    return list(range(-spec.tau_depth, -spec.p - 2 * spec.q))


def _constant_specialized(spec, m_lo, m_max, zero, seed, prime):
    """Per-m status from specializations; returns {m: (status, grade, witness)}."""
    out = {}
    low = _lower_window(spec)
    for j in low:
        orbit, attempt = _fp_orbit(spec, m_max, _one_var_images(spec, j, prime), f"const/{zero}/{j}", seed,
                                   prime, zero)
        for m in range(m_lo, m_max + 1):
            if m not in out and orbit[m].den.degree() > 0:
                out[m] = (FAIL, PROOF, {"m": m, "symbol": f"f[{j}]", "attempt": attempt,
                                        "detail": "negative power of a lower-window symbol"})
    t = PrimeFieldRatFun.t(prime)

    def scaled(rng):
        return {m: (t * rng.randrange(1, prime) if m in low else PrimeFieldRatFun.const(prime, rng.randrange(1, prime)))
                for m in range(-spec.tau_depth, 0)}
    orbit, attempt = _fp_orbit(spec, m_max, scaled, f"const0/{zero}", seed, prime, zero)
    for m in range(m_lo, m_max + 1):
        if m in out:
            continue
        v = orbit[m]
        if v.den.degree() > 0:
            out[m] = (FAIL, PROOF, {"m": m, "attempt": attempt, "detail": "not polynomial in the lower window"})
        elif int(v.num(0)) == 0:
            out[m] = (FAIL, EVIDENCE, {"m": m, "attempt": attempt, "detail": "constant term vanished at a random point"})
        else:
            out[m] = (PASS, EVIDENCE, None)
    return out


def check_constant_terms(spec: ReductionSpec, m_max: int, variants=VARIANTS,
                         term_budget: int = VERIFY_TERM_BUDGET, seed: int = 0,
                         prime: int = DEFAULT_PRIME) -> CheckReport:
    """f_m is a polynomial in f_{-2p-2q} .. f_{-p-2q-1} with nonzero constant term.

    Checked for generic a, b and again with a = 0 and with b = 0.  The
    constant term is f_m with those symbols set to zero, a Laurent
    polynomial in the remaining symbols.
    """
    rep = CheckReport("constant_terms", _spec_json(spec), {"m_min": 0, "m_max": m_max, "term_budget": term_budget},
                      seed=seed, prime=prime)
    low = [f"f[{m}]" for m in _lower_window(spec)]
    rep.data["symbols"] = low
    for variant in variants:
        zero = None if variant == "generic" else variant[0]
        vals, top, bad = _symbolic_f(spec, m_max, zero, term_budget)
        for m in range(0, top + 1):
            u = vals[m]
            name = f"{variant}:f[{m}]"
            if not u.is_polynomial(low):
                rep.add(name, FAIL, PROOF, {"m": m, "variant": variant, "method": "symbolic"},
                        method="symbolic", detail="negative exponent in a lower-window symbol")
                continue
            c = u.substitute({key: 0 for key in low})
            if c.is_zero():
                rep.add(name, FAIL, PROOF, {"m": m, "variant": variant, "method": "symbolic"},
                        method="symbolic", detail="constant term is zero")
            else:
                rep.add(name, PASS, PROOF, method="symbolic", constant_terms=c.nterms())
        if bad is not None:
            rep.add(f"{variant}:f[{bad}]", FAIL, PROOF, {"m": bad, "variant": variant, "method": "symbolic"},
                    method="symbolic", detail="tau division is not exact")
            continue
        if top < m_max:
            rep.notes.append(f"{variant}: symbolic through m={top}; specialized beyond")
            res = _constant_specialized(spec, top + 1, m_max, zero, seed, prime)
            for m in range(top + 1, m_max + 1):
                status, grade, wit = res[m]
                if wit is not None:
                    wit = dict(wit, variant=variant, method="specialized")
                rep.add(f"{variant}:f[{m}]", status, grade, wit, method="specialized")
    return rep


# ---------------------------------------------------------------------------
# the a = b = 0 substitution for (p, q) = (1, 2)


def alpha_recursion(k, m_max, printed=False):
    """alpha_{-6..m_max} from alpha_{-6} = 1 and zeros.

    The derived recursion is
    alpha_m = k(alpha_{m-1} + alpha_{m-2} - alpha_{m-4} - alpha_{m-5}) + alpha_{m-6};
    ``printed=True`` flips the sign of the alpha_{m-5} term.
    """
    s5 = 1 if printed else -1
    a = {m: (1 if m == -6 else 0) for m in range(-6, 0)}
    for m in range(0, m_max + 1):
        a[m] = k * (a[m - 1] + a[m - 2] - a[m - 4] + s5 * a[m - 5]) + a[m - 6]
    return a


def alpha_special(k: int, m_max: int = 12) -> CheckReport:
    """Substitute a = b = 0, f_{-6} = t, f_{-5} = .. = f_{-1} = 1 into the (1, 2, k) tau map.

    Each iterate must be +-t^alpha with alpha from the derived recursion.
    The printed-sign variant is evaluated too and its first divergence is
    recorded.  Also checks alpha_m > (k-1) alpha_{m-1} for m >= 6 and the
    sign rule s_m = -s_{m-6}.
    """
    spec = _unit_spec(1, 2, k)
    rep = CheckReport("alpha_special", _spec_json(spec), {"m_min": -6, "m_max": m_max})
    table = SymbolTable(["t"])
    seeds = {m: (LaurentPoly.gen(table, "t") if m == -6 else LaurentPoly.one(table)) for m in range(-6, 0)}
    vals = tau_forward(spec, seeds, m_max, 0, 0)
    derived = alpha_recursion(k, m_max)
    printed = alpha_recursion(k, m_max, printed=True)
    observed, signs = {}, {}
    for m in range(-6, m_max + 1):
        u = vals[m]
        name = f"alpha[{m}]"
        coeff = int(u.poly.coeffs()[0]) if u.is_monomial() else None
        if coeff not in (1, -1):
            rep.add(name, FAIL, PROOF, {"m": m}, detail="iterate is not +-t^alpha")
            continue
        observed[m] = u.ord_var("t")
        signs[m] = coeff
        status = PASS if observed[m] == derived[m] else FAIL
        rep.add(name, status, PROOF, None if status == PASS else {"m": m},
                observed=observed[m], derived=derived[m], printed=printed[m])
    rep.data["alpha"] = {m: observed.get(m) for m in range(0, m_max + 1)}
    rep.data["printed"] = {m: printed[m] for m in range(0, m_max + 1)}
    diverge = next((m for m in range(0, m_max + 1) if printed[m] != derived[m]), None)
    rep.data["printed_divergence"] = diverge
    if diverge is not None:
        rep.add("printed_variant", CONFLICT, PROOF, {"m": diverge},
                m=diverge, derived=derived[diverge], printed=printed[diverge],
                detail="the +alpha_{m-5} variant disagrees with the iterates")
        rep.notes.append(f"printed recursion variant diverges at m={diverge}: "
                         f"{printed[diverge]} vs {derived[diverge]}")
    for m in range(6, m_max + 1):
        if m in observed and m - 1 in observed:
            ok = observed[m] > (k - 1) * observed[m - 1]
            rep.add(f"growth[{m}]", PASS if ok else FAIL, PROOF, None if ok else {"m": m},
                    lhs=observed[m], rhs=(k - 1) * observed[m - 1])
    for m in range(0, m_max + 1):
        if m in signs:
            expect = -signs[m - 6]
            ok = signs[m] == expect
            rep.add(f"sign[{m}]", PASS if ok else FAIL, PROOF, None if ok else {"m": m},
                    observed=signs[m], expected=expect)
    return rep


# ---------------------------------------------------------------------------
# the integer sequences g_s and h_s


def _family(p, q):
    if p == 1 and q >= 3:
        return "p1"
    if p == 2 and q % 2 == 1:
        return "p2"
    if p >= 3:
        return "p3"
    raise ValueError(f"(p, q) = {(p, q)} is outside the supported families")


def gs_values(p, q, k, variant="g", m_max=None):
    """Exact values of f_s under the substitution with a = b = 1.

    f_{-2p-2q} = 2, f_{-2q} = -1 (variant g) or f_{-2p} = -1 (variant h),
    every other initial value 1.  The value 2 is kept as a symbol t while
    iterating, since g_0 = 0 is later a divisor, and t = 2 is put in at
    the end.
    """
    if m_max is None:
        m_max = gs_default_range(p, q)
    spec = _unit_spec(p, q, k)
    neg = -2 * q if variant == "g" else -2 * p
    table = SymbolTable(["t"])
    seeds = {}
    for m in range(-spec.tau_depth, 0):
        if m == -spec.tau_depth:
            seeds[m] = LaurentPoly.gen(table, "t")
        else:
            seeds[m] = LaurentPoly.const(table, -1 if m == neg else 1)
    vals = tau_forward(spec, seeds, m_max, 1, 1)
    return {m: Fraction(v.specialize({"t": 2})) for m, v in vals.items() if m >= 0}


def gs_default_range(p, q):
    """Last index the nonvanishing argument needs for the family of (p, q)."""
    return {"p1": 2 * q + 2, "p2": 2 * q + 4, "p3": 2 * p + 2 * q}[_family(p, q)]


class _Claims:
    def __init__(self, rep, g, name):
        self.rep, self.g, self.nm = rep, g, name

    def has(self, *idx):
        return all(i in self.g for i in idx)

    def eq(self, label, s, expected, printed=False):
        if s not in self.g:
            return
        ok = self.g[s] == expected
        status = PASS if ok else (CONFLICT if printed else FAIL)
        self.rep.add(label, status, PROOF, None if ok else {"s": s},
                     index=s, expected=expected, observed=self.g[s], printed=printed)

    def odd(self, label, s):
        if s not in self.g:
            return
        v = self.g[s]
        ok = v.denominator == 1 and v.numerator % 2 == 1
        self.rep.add(label, PASS if ok else FAIL, PROOF, None if ok else {"s": s}, index=s, observed=v)

    def nonzero(self, s):
        if s not in self.g:
            return
        ok = self.g[s] != 0
        self.rep.add(f"{self.nm}[{s}] != 0", PASS if ok else FAIL, PROOF, None if ok else {"s": s},
                     index=s, observed=self.g[s])


def _claims_p1(c, q, k):
    g = c.g
    for s in range(3, q):
        if c.has(s, s - 2):
            c.eq(f"g[{s}] = g[{s - 2}]^(k^2)", s, g[s - 2] ** (k * k))
        c.eq(f"g[{s}] closed form", s, Fraction(1) if s % 2 else Fraction(2) ** (k ** (s - 2)), printed=True)
    if c.has(q - 1):
        base = g[q - 1]
        c.eq("g[q] = g[q-1]^k", q, base ** k)
        c.eq("g[q+1] = -g[q-1]^(k^2)", q + 1, -base ** (k * k))
        c.eq("g[q+2] = g[q-1]^(k^3)", q + 2, base ** (k ** 3))
    odd_vals = (Fraction(1), Fraction(1), Fraction(-1))
    even_vals = (Fraction(2) ** (k ** (q - 3)), Fraction(2) ** (k ** (q - 2)), -Fraction(2) ** (k ** (q - 1)))
    literal = odd_vals if q % 2 else even_vals
    swapped = even_vals if q % 2 else odd_vals
    label = "q odd" if q % 2 else "q even"
    for off, v in zip((q - 1, q, q + 1), literal):
        c.eq(f"g[{off}] printed value ({label})", off, v, printed=True)
    ok = all(g.get(s) == v for s, v in zip((q - 1, q, q + 1), swapped))
    c.rep.add("g[q-1], g[q], g[q+1] with the q-parity labels exchanged", PASS if ok else FAIL, PROOF,
              None if ok else {"s": q}, expected=list(swapped), observed=[g.get(s) for s in (q - 1, q, q + 1)])
    return 2 * q + 2


def _claims_p2(c, q, k):
    g = c.g

    def N(i):
        return Fraction(2) ** (k ** (2 * (i - 1)))
    for s in range(1, q):
        c.eq(f"g[{s}] for s < q", s, N(s // 4) if s % 4 == 0 else Fraction(1), printed=True)
    if c.has(q - 2):
        c.eq("g[q] = g[q-2]^k", q, g[q - 2] ** k)
    c.eq("g[q] = 1", q, Fraction(1), printed=True)
    if c.has(q - 3):
        c.eq("g[q+1] = g[q-3]^(k^2)", q + 1, g[q - 3] ** (k * k))
    if c.has(q):
        c.eq("g[q+2] = -g[q]^k", q + 2, -g[q] ** k)
    c.eq("g[q+2] = -1", q + 2, Fraction(-1), printed=True)
    if c.has(q - 1):
        c.eq("g[q+3] = g[q-1]^(k^2)", q + 3, g[q - 1] ** (k * k))
    c.eq("g[q+4] = 1", q + 4, Fraction(1), printed=True)
    if q + 5 <= 2 * q - 1 and c.has(q + 1):
        c.eq("g[q+5] = g[q+1]^(k^2)", q + 5, g[q + 1] ** (k * k))
    if q + 6 <= 2 * q - 1:
        c.eq("g[q+6] = 2^(k^2) - 1", q + 6, Fraction(2) ** (k * k) - 1, printed=True)
    if q + 7 <= 2 * q - 1 and c.has(q + 3):
        c.eq("g[q+7] = g[q+3]^(k^2)", q + 7, g[q + 3] ** (k * k))
    for r in range(3, q - 4):
        if r % 2 == 0:
            c.odd(f"g[q+{r}+4] odd", q + r + 4)
    if c.has(2 * q - 2, 2 * q - 4):
        c.eq("g[2q] = -g[2q-2]^k + g[2q-4]^(k^2)", 2 * q, -g[2 * q - 2] ** k + g[2 * q - 4] ** (k * k))
    c.odd("g[2q+1] odd", 2 * q + 1)
    if c.has(2 * q - 2):
        c.eq("g[2q+2] = g[2q-2]^(k^2)", 2 * q + 2, g[2 * q - 2] ** (k * k))
    return 2 * q + 4


def _claims_p3(c, p, q, k):
    g = c.g
    for i in range(1, q):
        c.eq(f"g[{i}p] closed form", i * p, Fraction(1) if i % 2 else Fraction(2) ** (k ** (i - 2)), printed=True)
    c.eq("g[q] = 1", q, Fraction(1), printed=True)
    c.eq("g[q+p] = -1", q + p, Fraction(-1), printed=True)
    c.eq("g[q+2p] = 1", q + 2 * p, Fraction(1), printed=True)
    for i in range(3, q):
        c.odd(f"g[q+{i}p] odd", q + i * p)
    c.eq("g[2q] = 0", 2 * q, Fraction(0), printed=True)
    c.eq("g[2q+p] = 1", 2 * q + p, Fraction(1), printed=True)
    c.eq("g[2q+2p] = 2^(k^2)", 2 * q + 2 * p, Fraction(2) ** (k * k), printed=True)
    if p >= 4:
        c.eq("g[3q] = 1", 3 * q, Fraction(1), printed=True)
    if (p, q) in ((3, 4), (3, 5)) and c.has((q - 1) * p, q):
        c.eq("g[pq] = g[(q-1)p]^k g[q]^(k^2)", p * q, g[(q - 1) * p] ** k * g[q] ** (k * k))
    return 2 * p + 2 * q


def gs_sequences(p: int, q: int, k: int, variant: str = "g", m_max: int | None = None) -> CheckReport:
    """Exact g_s (or h_s) values against the relations and printed values.

    Relations between terms are checked as stated.  Literal printed
    numbers that disagree with the exact values are reported with
    status ``conflict``; the nonvanishing claims g_s != 0 cover the range
    the irreducibility argument uses, minus the indices where a zero is
    stated (g_0, and g_{2q} when p >= 3).
    """
    fam = _family(p, q)
    if variant not in ("g", "h"):
        raise ValueError("variant must be g or h")
    if variant == "h" and fam != "p3":
        raise ValueError("the h substitution is used only when p >= 3")
    if m_max is None:
        m_max = gs_default_range(p, q)
    spec = _unit_spec(p, q, k)
    rep = CheckReport("gs_sequences", _spec_json(spec), {"m_min": 0, "m_max": m_max, "variant": variant})
    g = gs_values(p, q, k, variant, m_max)
    rep.data["values"] = {s: g[s] for s in sorted(g)}
    c = _Claims(rep, g, variant)
    c.eq(f"{variant}[0] = 0", 0, Fraction(0))
    zeros = {0}
    if variant == "h":
        c.eq("h[q] = 1", q, Fraction(1), printed=True)
        c.eq("h[2q] = 2", 2 * q, Fraction(2), printed=True)
        c.nonzero(2 * q)
        return rep
    if fam == "p1":
        top = _claims_p1(c, q, k)
    elif fam == "p2":
        top = _claims_p2(c, q, k)
    else:
        top = _claims_p3(c, p, q, k)
        zeros.add(2 * q)
    for s in range(1, min(top, m_max) + 1):
        if s not in zeros:
            c.nonzero(s)
    if rep.conflicts():
        rep.notes.append(f"{len(rep.conflicts())} printed value(s) disagree with the exact orbit")
    return rep


# ---------------------------------------------------------------------------
# c vectors


def exponent_vectors(p, q, k, m_max):
    """Exponent vectors of the a = b = 0 iterates over all initial f's.

    Entry j multiplies f_{-2p-2q+j}.  The a = b = 0 iterate is a signed
    monomial, so the vectors obey the linear recursion
    E_m = k E_{m-p} + k E_{m-q} + E_{m-2p-2q} - k E_{m-2p-q} - k E_{m-p-2q}.
    """
    n = 2 * (p + q)
    E = {}
    for i, m in enumerate(range(-n, 0)):
        E[m] = tuple(1 if j == i else 0 for j in range(n))
    for m in range(0, m_max + 1):
        E[m] = tuple(k * E[m - p][j] + k * E[m - q][j] + E[m - n][j] - k * E[m - 2 * p - q][j]
                     - k * E[m - p - 2 * q][j] for j in range(n))
    return E


def c_vector_table(spec, m_max: int, oracle_max: int = 10) -> CheckReport:
    """c_s = (c^(0)_s, ..., c^(p-1)_s) with the shift identity and family facts.

    ``spec`` is a ReductionSpec or a (p, q, k) triple.  Values for
    m <= ``oracle_max`` are compared with the degrees of symbolic a = b = 0
    iterates.
    """
    if not isinstance(spec, ReductionSpec):
        spec = _unit_spec(*spec)
    p, q, k = spec.p, spec.q, spec.k
    n = 2 * (p + q)
    rep = CheckReport("c_vectors", _spec_json(spec), {"m_min": -n, "m_max": m_max})
    E = exponent_vectors(p, q, k, m_max)

    def c(j, s):
        return E[s][j]
    rep.data["c0"] = {s: c(0, s) for s in range(-n, m_max + 1)}
    rep.data["c"] = {s: [c(j, s) for j in range(p)] for s in range(0, m_max + 1)}
    bad = [(j, s) for j in range(p) for s in range(j, m_max + 1) if c(j, s) != c(0, s - j)]
    rep.add("shift identity c^(j)_s = c^(0)_(s-j)", PASS if not bad else FAIL, PROOF,
            None if not bad else {"j": bad[0][0], "s": bad[0][1]}, checked=p * (m_max + 1))

    top = min(oracle_max, m_max)
    table = f_table(spec)
    seeds = {m: LaurentPoly.gen(table, f"f[{m}]") for m in range(-n, 0)}
    vals = tau_forward(spec, seeds, top, 0, 0)
    mism = [(j, s) for s in range(0, top + 1) for j in range(p)
            if vals[s].ord_var(f"f[{-n + j}]") != c(j, s)]
    rep.add("agrees with symbolic a = b = 0 iterates", PASS if not mism else FAIL, PROOF,
            None if not mism else {"j": mism[0][0], "s": mism[0][1]}, m_max=top)

    def fact(label, ok, witness=None, **info):
        rep.add(label, PASS if ok else FAIL, PROOF, None if ok else witness, **info)

    if p == 1:
        bad = [j for j in range(-2 * q, m_max + 1) if c(0, j) < k * c(0, j - 1)]
        fact("c^(0)_j >= k c^(0)_(j-1)", not bad, {"j": bad[0] if bad else None}, j_min=-2 * q)
        bad = [s for s in range(1, m_max + 1) if c(0, s) <= c(0, s - 1)]
        fact("c^(0)_s strictly increasing for s >= 0", not bad, {"s": bad[0] if bad else None})
    elif p == 2:
        for i in range(0, q):
            if 2 * i <= m_max:
                fact(f"c^(0)_{2 * i} = k^{i}", c(0, 2 * i) == k ** i, {"s": 2 * i}, observed=c(0, 2 * i))
        for i in range(0, (q - 3) // 2 + 1):
            if 2 * i + 1 <= m_max:
                fact(f"c^(0)_{2 * i + 1} = 0", c(0, 2 * i + 1) == 0, {"s": 2 * i + 1})
        if q <= m_max:
            fact("c^(0)_q = k", c(0, q) == k, {"s": q}, observed=c(0, q))
        for i in range(1, q):
            s = q + 2 * i
            if s <= m_max:
                exp = (i + 1) * k ** (i + 1) - (i - 1) * k ** (i - 1)
                fact(f"c^(0)_(q+{2 * i}) = {i + 1}k^{i + 1} - {i - 1}k^{i - 1}", c(0, s) == exp,
                     {"s": s}, observed=c(0, s), expected=exp)
        for s, exp, label in ((2 * q, k ** q + k ** 2, "k^q + k^2"),
                              (2 * q + 2, k ** (q + 1) + 3 * k ** 3 - k, "k^(q+1) + 3k^3 - k"),
                              (2 * q + 4, k ** (q + 2) + 6 * k ** 4 - 4 * k ** 2 + 1, "k^(q+2) + 6k^4 - 4k^2 + 1")):
            if s <= m_max:
                fact(f"c^(0)_{s} = {label}", c(0, s) == exp, {"s": s}, observed=c(0, s), expected=exp)
        _distinct(rep, c, p, min(2 * q + 4, m_max))
    else:
        bad = []
        for jj in range(0, m_max // p + 1):
            for i in range(-(p - 1), p):
                s = jj * p + i
                if i and -n <= s <= m_max and not c(0, s) < c(0, jj * p):
                    bad.append(s)
        label = "c^(0)_(jp+i) < c^(0)_(jp) for 0 < |i| < p"
        if bad:
            # a claimed bound that exact values contradict, so it is reported, not failed
            s0 = bad[0]
            jp = p * round(s0 / p)
            rep.add(label, CONFLICT, PROOF, {"s": s0, "jp": jp}, counterexamples=len(bad),
                    observed={s0: c(0, s0), jp: c(0, jp)})
        else:
            fact(label, True)
        bad = [mm for mm in range(1, m_max // p + 1) if c(0, mm * p) < c(0, (mm - 1) * p)]
        fact("c^(0)_(mp) >= c^(0)_((m-1)p)", not bad, {"m": bad[0] if bad else None})
        _distinct(rep, c, p, min(2 * p + 2 * q, m_max))
    return rep


def _distinct(rep, c, p, top):
    seen = {}
    clash = None
    for s in range(0, top + 1):
        vec = tuple(c(j, s) for j in range(p))
        if vec in seen:
            clash = (seen[vec], s)
            break
        seen[vec] = s
    rep.add(f"c_s pairwise distinct for 0 <= s <= {top}", PASS if clash is None else FAIL, PROOF,
            None if clash is None else {"s": clash[0], "r": clash[1]})


# ---------------------------------------------------------------------------
# pairwise coprimeness


def _line_images(spec, table, rng, prime):
    """Random affine images c + d t for every symbol of the f table."""
    return {name: PrimeFieldRatFun.linear(rng.randrange(1, prime), rng.randrange(1, prime), prime)
            for name in table.names}


def _strip(v: PrimeFieldRatFun, images):
    """Numerator of ``v`` with every line-image factor divided out."""
    num = v.num
    for img in images:
        lin = img.num
        while num.degree() > 0:
            q, r = divmod(num, lin)
            if r != 0:
                break
            num = q
    return num


def _restricted_parts(spec, vals, top, m_max, table, rng, prime):
    """Polynomial parts of f_0..f_m_max on one random line.

    For symbolic iterates the monomial factor is divided out exactly and
    ``exact[m]`` says whether the restriction kept the full degree.
    Beyond that the line-image factors are stripped from the numerator.
    """
    images = _line_images(spec, table, rng, prime)
    seeds = {m: images[f"f[{m}]"] for m in range(-spec.tau_depth, 0)}
    pr = {}
    for name in ("a", "b"):
        v = getattr(spec, name)
        pr[name] = images[name] if v is None else PrimeFieldRatFun.const(prime, v)
    orbit = tau_forward(spec, seeds, m_max, pr["a"], pr["b"])
    parts, exact = {}, {}
    for m in range(0, m_max + 1):
        v = orbit[m]
        if m <= top:
            u = vals[m]
            for i, s in enumerate(u.shift):
                if s:
                    v = v * images[table.names[i]] ** (-s)
            parts[m] = v.num
            exact[m] = v.is_polynomial() and v.num.degree() == u.poly.total_degree()
        else:
            parts[m] = _strip(v, list(images.values()))
            exact[m] = False
    return parts, exact


def planted_pair_control(spec: ReductionSpec, seed: int = 0, prime: int = DEFAULT_PRIME):
    """Probe (f_0 f_1, f_1 f_2): the shared factor f_1 must be detected."""
    vals, top, _ = _symbolic_f(spec, 2, None, VERIFY_TERM_BUDGET)
    if top < 2:
        raise TermBudgetExceeded(top + 1, None, VERIFY_TERM_BUDGET)
    return gcd_line_probe(vals[0] * vals[1], vals[1] * vals[2], seed=seed, prime=prime)


def coprime_pairs(spec: ReductionSpec, m_max: int, seed: int = 0, trials: int = 3,
                  term_budget: int = VERIFY_TERM_BUDGET, prime: int = DEFAULT_PRIME) -> CheckReport:
    """Line probes for every pair 0 <= i < j <= m_max.

    Each trial restricts all iterates to one random line over F_p and
    takes univariate gcds of the polynomial parts.  A pair is
    LikelyCoprime once some line gives a trivial gcd; when both
    restrictions kept their full degree on that line the verdict is
    proof-grade.  A pair with a nontrivial gcd on every line is reported
    as CommonFactorWitness, a warning rather than a failure.
    """
    rep = CheckReport("coprime_pairs", _spec_json(spec),
                      {"m_min": 0, "m_max": m_max, "trials": trials, "term_budget": term_budget},
                      seed=seed, prime=prime)
    vals, top, bad = _symbolic_f(spec, m_max, None, term_budget)
    if bad is not None:
        rep.add(f"f[{bad}]", FAIL, PROOF, {"m": bad}, detail="tau division is not exact")
        return rep
    if top < m_max:
        rep.notes.append(f"symbolic through m={top}; polynomial parts beyond it are approximated")
    table = f_table(spec)
    lines = []
    for t in range(trials):
        rng = random.Random(f"coprime:{seed}:{t}")
        lines.append(_restricted_parts(spec, vals, top, m_max, table, rng, prime))
    for i in range(0, m_max + 1):
        for j in range(i + 1, m_max + 1):
            degs, verdict, grade = [], None, EVIDENCE
            for t, (parts, exact) in enumerate(lines):
                g = parts[i].gcd(parts[j]).degree()
                degs.append(g)
                if g == 0:
                    verdict = LIKELY_COPRIME
                    grade = PROOF if exact[i] and exact[j] else EVIDENCE
                    break
            if verdict is None:
                rep.add(f"({i},{j})", WARN, EVIDENCE, {"i": i, "j": j, "trials": trials},
                        verdict=COMMON_FACTOR_WITNESS, gcd_degrees=degs)
            else:
                rep.add(f"({i},{j})", PASS, grade, verdict=verdict, gcd_degrees=degs)
    try:
        ctl = planted_pair_control(spec, seed, prime)
        ok = ctl.verdict == COMMON_FACTOR_WITNESS
        rep.add("planted control (f0 f1, f1 f2)", PASS if ok else FAIL, EVIDENCE,
                None if ok else {"control": True}, verdict=ctl.verdict, gcd_degrees=ctl.gcd_degrees)
    except TermBudgetExceeded:
        rep.notes.append("planted control skipped: budget")
    return rep


# ---------------------------------------------------------------------------
# characteristic roots


def root_bounds(p: int, q: int, k: int) -> CheckReport:
    """1 < Lambda and dominance of Lambda over all root moduli; Lambda < k is only recorded."""
    from .entropy import DOMINANCE_TOL, root_bounds_check

    spec = _unit_spec(p, q, k)
    rep = CheckReport("roots", _spec_json(spec), {"tolerance": DOMINANCE_TOL})
    r = root_bounds_check(p, q, k)
    rep.data.update(r)
    rep.add("1 < Lambda", PASS if r["gt_one"] else FAIL, PROOF, **{"lambda": r["lambda"]})
    rep.add("max |root| = Lambda", PASS if r["dominance"] else FAIL, EVIDENCE,
            None if r["dominance"] else {"max_modulus": r["max_modulus"]}, max_modulus=r["max_modulus"])
    rep.add("Lambda < k", RECORDED, EVIDENCE, value=r["lt_k"])
    return rep


# ---------------------------------------------------------------------------
# replay


def replay(witness: dict) -> bool:
    """Re-run the check named in a witness; True if the item fails again."""
    from .recurrences.specs import spec_from_json

    check, rng = witness["check"], witness["range"]
    seed = witness.get("seed") or 0
    prime = witness.get("prime") or DEFAULT_PRIME
    sp = witness["spec"]
    if check == "laurent":
        rep = check_laurent(spec_from_json(sp), rng["m_max"], rng["term_budget"], seed, prime)
    elif check == "constant_terms":
        rep = check_constant_terms(spec_from_json(sp), rng["m_max"], (witness["variant"],), rng["term_budget"],
                                   seed, prime)
    elif check == "alpha_special":
        rep = alpha_special(sp["k"], rng["m_max"])
    elif check == "gs_sequences":
        rep = gs_sequences(sp["p"], sp["q"], sp["k"], rng["variant"], rng["m_max"])
    elif check == "c_vectors":
        rep = c_vector_table((sp["p"], sp["q"], sp["k"]), rng["m_max"])
    elif check == "roots":
        rep = root_bounds(sp["p"], sp["q"], sp["k"])
    elif check == "coprime_pairs":
        rep = coprime_pairs(spec_from_json(sp), rng["m_max"], seed, rng["trials"], rng["term_budget"], prime)
    else:
        raise ValueError(f"no replay for check {check}")
    try:
        return rep.item(witness["item"])["status"] != PASS
    except KeyError:
        return False
