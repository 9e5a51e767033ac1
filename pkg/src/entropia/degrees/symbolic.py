"""Degree tables for the x-form recurrence.

Rows are indexed by m >= -2p-2q and hold Ord(x_m), the per-variable
degrees c_s(m) of g_m, the monomial-content exponents alpha_s(m), the
polynomial-part degrees beta_s(m) = c_s(m) - alpha_s(m), d_m (degree of
h_m in x_{-p-q}) and the linear model d*_m.

Rows come from exact expansion while it fits in the term budget.  Past
the budget the same quantities are read off specializations over F_p:
one initial variable becomes t and the rest random constants.  The
specialized exponent is a one-sided bound (it can only lose a leading
coefficient) and the tau step gives the other side when no cancellation
occurs, so a row is certified when the two bounds meet.
"""
from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass, field
from fractions import Fraction

import flint

from ..algebra import DEFAULT_PRIME, PrimeFieldRatFun
from ..errors import TermBudgetExceeded
from ..recurrences.decompose import g_seeds, h_seeds, symbolic_params, tau_forward, x_table
from ..recurrences.specs import ReductionSpec

DEFAULT_TERM_BUDGET = 5_000_000

WINDOW, EXPAND, CERTIFIED, SPECIALIZED, UNCERTIFIED = (
    "window", "expand", "certified", "specialized", "uncertified")


@dataclass
class DegreeRow:
    m: int
    c: dict
    alpha: dict
    beta: dict
    d: int
    dstar: int
    total: int = 0          # max total degree of g_m in x
    poly_degree: int = 0    # total degree of the polynomial part of g_m
    ord_x: int | None = None
    method: str = EXPAND
    coprime: bool | None = None


@dataclass
class DegreeSequence:
    spec: ReductionSpec
    rows: list = field(default_factory=list)
    term_budget: int = DEFAULT_TERM_BUDGET
    exact_through: int | None = None
    seed: int = 0
    prime: int = DEFAULT_PRIME
    notes: list = field(default_factory=list)

    @property
    def svars(self):
        return list(range(-self.spec.p - self.spec.q, 0))

    def row(self, m):
        for r in self.rows:
            if r.m == m:
                return r
        raise KeyError(m)

    def table(self, name, s=None):
        """Column as a dict m -> value; ``s`` picks a variable for c/alpha/beta."""
        out = {}
        for r in self.rows:
            v = getattr(r, name)
            out[r.m] = v[s] if s is not None else v
        return out

    @property
    def m_max(self):
        return self.rows[-1].m if self.rows else None

    def to_csv(self, m_min=None):
        """CSV with columns m, ord_x, c[s].., alpha[s].., d, dstar."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        sv = self.svars
        w.writerow(["m", "ord_x"] + [f"c[{s}]" for s in sv] + [f"alpha[{s}]" for s in sv] + ["d", "dstar"])
        for r in self.rows:
            if m_min is not None and r.m < m_min:
                continue
            w.writerow([r.m, "" if r.ord_x is None else r.ord_x] + [r.c[s] for s in sv]
                       + [r.alpha[s] for s in sv] + [r.d, r.dstar])
        return buf.getvalue()

    def to_json(self):
        return {
            "spec": self.spec.to_json(),
            "term_budget": self.term_budget,
            "exact_through": self.exact_through,
            "seed": self.seed,
            "prime": self.prime,
            "notes": list(self.notes),
            "rows": [
                {"m": r.m, "ord_x": r.ord_x, "method": r.method, "coprime": r.coprime,
                 "c": {str(s): v for s, v in r.c.items()},
                 "alpha": {str(s): v for s, v in r.alpha.items()},
                 "beta": {str(s): v for s, v in r.beta.items()},
                 "d": r.d, "dstar": r.dstar, "total": r.total, "poly_degree": r.poly_degree}
                for r in self.rows
            ],
        }


# ---------------------------------------------------------------------------
# d* model


def _dstar_table(spec, m_max):
    p, q, k = spec.p, spec.q, spec.k
    n = spec.tau_depth
    d = {m: 0 for m in range(-n, 0)}
    d[-n] = 1
    for m in range(0, m_max + 1):
        d[m] = k * (d[m - p] + d[m - q]) - k * (d[m - 2 * p - q] + d[m - p - 2 * q]) + d[m - n]
    return d


def dstar_sequence(spec: ReductionSpec, m_max: int):
    """d*_0 .. d*_{m_max}: the h-degrees of the a = b = 0 reduction."""
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    d = _dstar_table(spec, m_max)
    return [d[m] for m in range(m_max + 1)]


# ---------------------------------------------------------------------------
# bounds from the shape of the tau step


def _tau_bound(spec, vals, m, pick):
    """pick over the three numerator terms of an additive degree, minus the divisor."""
    p, q, k = spec.p, spec.q, spec.k
    kk = k * k
    t1 = k * vals[m - p] + k * vals[m - q] + vals[m - 2 * p - 2 * q]
    t2 = k * vals[m - p] + (kk - 1) * vals[m - p - q] + kk * vals[m - 2 * q] + k * vals[m - 2 * p - q]
    t3 = k * vals[m - q] + (kk - 1) * vals[m - p - q] + kk * vals[m - 2 * p] + k * vals[m - p - 2 * q]
    return pick(t1, t2, t3) - k * (vals[m - 2 * p - q] + vals[m - p - 2 * q])


# ---------------------------------------------------------------------------
# F_p specializations


def _mod(v, prime):
    v = Fraction(v)
    return v.numerator % prime * pow(v.denominator % prime, -1, prime) % prime


def _param_values(spec, rng, prime):
    out = []
    for name in ("a", "b"):
        v = getattr(spec, name)
        out.append(rng.randrange(1, prime) if v is None else _mod(v, prime))
    return out


def _texps(v: PrimeFieldRatFun):
    """(lowest, highest) exponent of t in a Laurent polynomial of t."""
    e = v.den.degree()
    if v.den != flint.nmod_poly([0] * e + [1], v.prime):
        raise ArithmeticError("specialized value is not a Laurent polynomial in t")
    co = v.num.coeffs()
    low = next(i for i, c in enumerate(co) if int(c))
    return low - e, v.num.degree() - e


def _run(spec, seeds, m_max, images, ab, prime):
    """Tau orbit of the specialized seeds through m_max."""
    vals = {m: u.specialize(images) for m, u in seeds.items()}
    for m, v in vals.items():
        if not isinstance(v, PrimeFieldRatFun):
            vals[m] = PrimeFieldRatFun.const(prime, v)
    return tau_forward(spec, vals, m_max, ab[0], ab[1])


def _svar(s):
    return f"x[{s}]"


class _Specializer:
    """All F_p runs needed to extend the degree tables."""

    def __init__(self, spec, m_max, seed, prime):
        self.spec, self.m_max, self.prime = spec, m_max, prime
        self.rng = random.Random(seed)
        self.table = x_table(spec)
        self.gs = g_seeds(spec, self.table)
        self.hs = h_seeds(spec, self.table)
        self.svars = list(range(-spec.p - spec.q, 0))
        t = PrimeFieldRatFun.t(prime)
        self.per_var = {}
        for s in self.svars:
            images = {_svar(j): (t if j == s else self.rng.randrange(1, prime)) for j in self.svars}
            self.per_var[s] = _run(spec, self.gs, m_max, images, _param_values(spec, self.rng, prime), prime)
        images = {_svar(j): PrimeFieldRatFun.linear(0, self.rng.randrange(1, prime), prime) for j in self.svars}
        self.scaled = _run(spec, self.gs, m_max, images, _param_values(spec, self.rng, prime), prime)
        s0 = self.svars[0]
        images = {_svar(j): (t if j == s0 else self.rng.randrange(1, prime)) for j in self.svars}
        self.h_run = _run(spec, self.hs, m_max, images, _param_values(spec, self.rng, prime), prime)

    def line(self):
        """A fresh random line, returned with its g orbit and the line images."""
        lin = {s: PrimeFieldRatFun.linear(self.rng.randrange(1, self.prime), self.rng.randrange(1, self.prime),
                                          self.prime) for s in self.svars}
        images = {_svar(s): v for s, v in lin.items()}
        return lin, _run(self.spec, self.gs, self.m_max, images, _param_values(self.spec, self.rng, self.prime),
                         self.prime)


# ---------------------------------------------------------------------------
# driver


def _exact_tables(spec, m_max, term_budget):
    table = x_table(spec)
    pr = symbolic_params(spec, table)
    out = []
    for seeds in (g_seeds(spec, table), h_seeds(spec, table)):
        try:
            vals = tau_forward(spec, seeds, m_max, pr["a"], pr["b"], term_budget)
        except TermBudgetExceeded as exc:
            vals = exc.partial
        out.append(vals)
    g, h = out
    top = min(max(g), max(h))
    return table, g, h, top


def _exact_row(spec, m, g, h, dstar, method):
    svars = list(range(-spec.p - spec.q, 0))
    keys = [_svar(s) for s in svars]
    content, rest = g.monomial_content(keys)
    alpha = {s: content[_svar(s)] for s in svars}
    c = {s: g.ord_var(_svar(s)) for s in svars}
    beta = {s: rest.ord_var(_svar(s)) for s in svars}
    total = g.degree_in(keys)
    d = h.ord_var(_svar(svars[0]))
    return DegreeRow(m, c, alpha, beta, d, dstar, total, total - sum(alpha.values()), method=method)


def symbolic_degrees(spec: ReductionSpec, m_max: int, term_budget: int = DEFAULT_TERM_BUDGET,
                     extend: bool = True, seed: int = 0, prime: int = DEFAULT_PRIME) -> DegreeSequence:
    """Degree table for -2p-2q <= m <= m_max.

    Exact expansion covers every row whose g_m and h_m fit in
    ``term_budget``.  With ``extend`` the remaining rows come from F_p
    specializations and carry the method tag ``certified`` (both bounds
    agree) or ``uncertified``.  Without it a TermBudgetExceeded is raised
    whose ``partial`` is the sequence computed so far.
    """
    if m_max < -spec.p - spec.q:
        raise ValueError("m_max lies below the initial window")
    n = spec.tau_depth
    svars = list(range(-spec.p - spec.q, 0))
    dstar = _dstar_table(spec, max(m_max, 0))
    _table, g, h, top = _exact_tables(spec, m_max, term_budget)
    seq = DegreeSequence(spec, term_budget=term_budget, exact_through=top, seed=seed, prime=prime)
    for m in range(-n, min(top, m_max) + 1):
        seq.rows.append(_exact_row(spec, m, g[m], h[m], dstar[m], WINDOW if m < 0 else EXPAND))
    if top < m_max and not extend:
        _fill_ord(seq, None)
        raise TermBudgetExceeded(top + 1, None, term_budget, partial=seq)
    runs = [_Specializer(spec, m_max, seed + i, prime) for i in range(2)] if m_max >= 0 else [None]
    if top < m_max:
        seq.notes.append(f"rows after m={top} come from F_p specializations")
        _extend(seq, runs, top, m_max, dstar)
    _fill_ord(seq, runs[0])
    return seq


def _extend(seq, runs, top, m_max, dstar):
    """Append rows top+1..m_max read off the specialized runs.

    Each quantity is taken from two independent specializations (the
    larger top exponent, the smaller bottom one).  A row is ``certified``
    when every value also meets the bound from the tau step and all
    earlier rows were exact or certified; otherwise it is ``specialized``
    when the two runs agree and ``uncertified`` when they do not.
    """
    spec = seq.spec
    svars = seq.svars
    c = {s: seq.table("c", s) for s in svars}
    al = {s: seq.table("alpha", s) for s in svars}
    tot = seq.table("total")
    dd = seq.table("d")
    sound = True
    for m in range(top + 1, m_max + 1):
        ok, agree = sound, True
        row_c, row_a = {}, {}
        for s in svars:
            ex = [_texps(sp.per_var[s][m]) for sp in runs]
            lo_e, hi_e = min(e[0] for e in ex), max(e[1] for e in ex)
            agree = agree and len(set(ex)) == 1
            ok = ok and hi_e == _tau_bound(spec, c[s], m, max) and lo_e == _tau_bound(spec, al[s], m, min)
            row_c[s], row_a[s] = hi_e, lo_e
            c[s][m], al[s][m] = hi_e, lo_e
        ex = [_texps(sp.scaled[m])[1] for sp in runs]
        t_hi = max(ex)
        agree = agree and len(set(ex)) == 1
        ok = ok and t_hi == _tau_bound(spec, tot, m, max)
        tot[m] = t_hi
        ex = [_texps(sp.h_run[m]) for sp in runs]
        d_lo, d_hi = min(e[0] for e in ex), max(e[1] for e in ex)
        agree = agree and len(set(ex)) == 1
        ok = ok and d_hi == _tau_bound(spec, dd, m, max) and d_lo == 0
        dd[m] = d_hi
        sound = ok
        beta = {s: row_c[s] - row_a[s] for s in svars}
        method = CERTIFIED if ok else SPECIALIZED if agree else UNCERTIFIED
        seq.rows.append(DegreeRow(m, row_c, row_a, beta, d_hi, dstar[m], t_hi, t_hi - sum(row_a.values()),
                                  method=method))


def _ord_pieces(seq, m):
    """(numerator degree, denominator degree) of x_m from the g-factorization."""
    spec = seq.spec
    p, q, k = spec.p, spec.q, spec.k
    r = {j: seq.row(j) for j in (m, m - p, m - q, m - p - q)}
    mono = {s: r[m].alpha[s] + r[m - p - q].alpha[s] - k * (r[m - p].alpha[s] + r[m - q].alpha[s])
            for s in seq.svars}
    num = r[m].poly_degree + r[m - p - q].poly_degree + sum(v for v in mono.values() if v > 0)
    den = k * (r[m - p].poly_degree + r[m - q].poly_degree) - sum(v for v in mono.values() if v < 0)
    return num, den


def _poly_parts_on_line(seq, lin, orbit, js):
    """P_j restricted to the line, or None when some restriction drops degree."""
    out = {}
    for j in js:
        row = seq.row(j)
        v = orbit[j]
        for s in seq.svars:
            if row.alpha[s]:
                v = v * lin[s] ** (-row.alpha[s])
        if not v.is_polynomial() or v.num.degree() != row.poly_degree:
            return None
        out[j] = v.num
    return out


def _fill_ord(seq, sp, tries=5):
    """Ord(x_m) from the factorization, with a line probe for coprimeness.

    x_m = g_m g_{m-p-q} / (g_{m-p} g_{m-q})^k.  Splitting each g_j into
    monomial times polynomial part P_j, the numerator and denominator
    are coprime once P_m P_{m-p-q} and P_{m-p} P_{m-q} are, and a
    degree-preserving line with trivial gcd proves that.
    """
    spec = seq.spec
    lo = -spec.p - spec.q
    lines = []
    for r in seq.rows:
        if r.m < lo:
            continue
        num, den = _ord_pieces(seq, r.m)
        r.ord_x = max(num, den)
        if r.m < 0:
            r.coprime = True
            continue
        if sp is None:
            continue
        js = (r.m, r.m - spec.p, r.m - spec.q, r.m - spec.p - spec.q)
        verdict = None
        for i in range(tries):
            if i >= len(lines):
                lines.append(sp.line())
            parts = _poly_parts_on_line(seq, *lines[i], js)
            if parts is None:
                continue
            a = parts[js[0]] * parts[js[3]]
            b = parts[js[1]] * parts[js[2]]
            verdict = a.gcd(b).degree() == 0
            break
        r.coprime = verdict
        if not verdict and r.method != UNCERTIFIED:
            r.method = UNCERTIFIED
            seq.notes.append(f"m={r.m}: coprimeness of the polynomial parts was not confirmed")


# ---------------------------------------------------------------------------
# cross-checks


def _seq(spec, m_max, seq, **kw):
    if seq is None or seq.m_max is None or seq.m_max < m_max:
        seq = symbolic_degrees(spec, m_max, **kw)
    return seq


def degree_consistency(spec: ReductionSpec, m_max: int, seq: DegreeSequence | None = None, **kw):
    """Compare the tropical Y/Z runs with increments of c and alpha.

    Y_m^{(s)} should equal c_s(m) - k(c_s(m-p) + c_s(m-q)) + c_s(m-p-q)
    and Z_m^{(s)} the same expression in alpha.  A mismatch means a
    cancellation the max/min recursion does not see.
    """
    from .tropical import tropical_Y, tropical_Z

    seq = _seq(spec, m_max, seq, **kw)
    p, q, k = spec.p, spec.q, spec.k
    mismatches, checked = [], 0
    for s in seq.svars:
        ys = tropical_Y(spec, s, m_max).states
        zs = tropical_Z(spec, s, m_max).states
        for name, col, states in (("Y", "c", ys), ("Z", "alpha", zs)):
            t = seq.table(col, s)
            for m in range(0, m_max + 1):
                inc = t[m] - k * (t[m - p] + t[m - q]) + t[m - p - q]
                checked += 1
                if inc != states[m].value:
                    mismatches.append({"kind": name, "s": s, "m": m, "tropical": states[m].value, "degrees": inc})
    return {"check": "degree_consistency", "spec": spec.to_json(), "m_max": m_max, "checked": checked,
            "mismatches": mismatches, "ok": not mismatches,
            "methods": {r.m: r.method for r in seq.rows if r.m >= 0}}


def main_inequality_rhs(seq: DegreeSequence, m: int) -> int:
    """Right-hand side of the upper bound on Ord(x_m) from the c and alpha tables."""
    spec = seq.spec
    p, q, k = spec.p, spec.q, spec.k
    r = {j: seq.row(j) for j in (m, m - p, m - q, m - p - q)}
    total = 0
    for s in seq.svars:
        a = [r[j].alpha[s] for j in (m, m - p, m - q, m - p - q)]
        c = [r[j].c[s] for j in (m, m - p, m - q, m - p - q)]
        total += 2 * abs(a[0] + a[3] - k * a[1] - k * a[2])
        total += abs(c[0] - k * c[1] - k * c[2] + c[3])
        total += k * (c[1] + c[2] - a[1] - a[2])
    return total


def bound_check(spec: ReductionSpec, m_max: int, seq: DegreeSequence | None = None, **kw):
    """d_m + d_{m-p-q} <= Ord(x_m) <= main inequality RHS for -p-q <= m <= m_max."""
    seq = _seq(spec, m_max, seq, **kw)
    p, q = spec.p, spec.q
    rows = []
    for m in range(-p - q, m_max + 1):
        r = seq.row(m)
        lower = r.d + seq.row(m - p - q).d
        upper = main_inequality_rhs(seq, m)
        rows.append({"m": m, "lower": lower, "ord_x": r.ord_x, "upper": upper,
                     "lower_margin": r.ord_x - lower, "upper_margin": upper - r.ord_x,
                     "ok": lower <= r.ord_x <= upper, "method": r.method})
    return {"check": "bound_check", "spec": spec.to_json(), "m_max": m_max, "rows": rows,
            "ok": all(row["ok"] for row in rows)}


def line_degree_oracle(spec: ReductionSpec, m_max: int, seed: int = 0, prime: int = DEFAULT_PRIME):
    """Ord(x_m) by iterating the x-form over F_p(t) on a random line.

    Each initial variable becomes c_s + d_s t and a, b random constants;
    the reduced degree max(deg num, deg den) of x_m equals Ord(x_m)
    outside a small exceptional set of lines.
    """
    from ..recurrences.iterate import iterate_x

    rng = random.Random(seed)
    init = [PrimeFieldRatFun.linear(rng.randrange(1, prime), rng.randrange(1, prime), prime)
            for _ in range(spec.p + spec.q)]
    a, b = _param_values(spec, rng, prime)
    xs = iterate_x(spec, init, m_max + 1, {"a": PrimeFieldRatFun.const(prime, a),
                                            "b": PrimeFieldRatFun.const(prime, b)})
    return [x.degree() for x in xs]
