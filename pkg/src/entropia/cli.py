"""Command-line entry point: entropy, degrees, heights, verify, lattice, repro.

Exit codes: 0 ok, 1 usage or bad input, 2 proof-grade failure,
3 budget stop under --strict.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

import mpmath

from . import __version__
from .errors import EntropiaError, GoodDomainError, InsufficientData, SingularOrbit, TermBudgetExceeded

EXIT_OK, EXIT_USAGE, EXIT_PROOF, EXIT_BUDGET = 0, 1, 2, 3
SUITES = ("laurent", "constant", "alpha", "gs", "cvec", "coprime", "roots")
# exact heights are printed in the trace only while they stay this short
HEIGHT_PRINT_DIGITS = 60
REPRO_SEED = 0


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# output helpers


def _clean(v):
    """JSON-ready copy; exact and high-precision numbers become decimal strings."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return v if abs(v) < 10**15 else str(v)
    if isinstance(v, float):
        return v if math.isfinite(v) else str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, mpmath.mpf):
        return mpmath.nstr(v, mpmath.mp.dps)
    if isinstance(v, dict):
        return {str(k): _clean(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_clean(x) for x in v]
    return str(v)


def dumps(obj) -> str:
    return json.dumps(_clean(obj), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _emit(text, out=None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def _header(args, spec, **budgets):
    """Provenance block embedded in every output."""
    return {"tool": "entropia", "version": __version__, "command": args.command,
            "spec": spec.to_json() if hasattr(spec, "to_json") else spec,
            "seed": getattr(args, "seed", None), "budgets": budgets}


def _csv(rows, header):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _comment(meta):
    return "# " + json.dumps(_clean(meta), sort_keys=True, ensure_ascii=False) + "\n"


def _threads(args):
    env = os.environ.get("ENTROPIA_THREADS")
    n = args.threads
    if env:
        try:
            n = int(env)
        except ValueError:
            raise UsageError(f"ENTROPIA_THREADS must be an integer, got {env!r}")
    if n < 1:
        raise UsageError("thread count must be positive")
    return n


def _run_jobs(jobs, threads):
    """Run (name, fn, args) jobs; results come back in job order."""
    if threads == 1 or len(jobs) < 2:
        return [fn(*a) for _, fn, a in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futs = [pool.submit(fn, *a) for _, fn, a in jobs]
        return [f.result() for f in futs]


# ---------------------------------------------------------------------------
# spec resolution


def _reduction(args, a="1", b="1"):
    from .recurrences.specs import ReductionSpec

    missing = [f"--{n}" for n in ("p", "q", "k") if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing {' '.join(missing)}")
    try:
        return ReductionSpec(args.p, args.q, args.k, a, b)
    except ValueError as exc:
        raise UsageError(str(exc))


def _spec_arg(args):
    from .recurrences.specs import load_spec

    if getattr(args, "spec", None):
        try:
            return load_spec(args.spec)
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"cannot load spec {args.spec}: {exc}")
    return _reduction(args)


# ---------------------------------------------------------------------------
# entropy


def cmd_entropy(args):
    from .entropy import INFERRED_RULE, largest_real_root, multiterm_charpoly, reduction_charpoly
    from .recurrences.specs import ReductionSpec

    spec = _spec_arg(args)
    if isinstance(spec, ReductionSpec):
        poly = reduction_charpoly(spec.p, spec.q, spec.k)
        notes = []
    else:
        poly = multiterm_charpoly(spec)
        notes = [INFERRED_RULE]
    rep = largest_real_root(poly, args.precision)
    digits = args.precision
    with mpmath.workdps(digits + 5):
        lam = rep.lambda_max
        out = _header(args, spec)
        out.update({
            "charpoly": poly.to_str(), "charpoly_coeffs": list(poly.coeffs),
            "lambda": mpmath.nstr(lam, digits), "entropy": mpmath.nstr(mpmath.log(lam), digits),
            "precision": digits, "dominance": rep.dominance, "moduli": rep.all_moduli,
            "bisection_steps": rep.iterations, "residual": mpmath.nstr(rep.residual, 5),
            "notes": notes + rep.notes,
        })
    if isinstance(spec, ReductionSpec):
        out["lambda_lt_k"] = bool(lam < spec.k)
    _emit(dumps(out), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# degrees


def _tropical_rows(spec, m_max):
    from .degrees import tropical_table

    rows = []
    for kind, runs in tropical_table(spec, m_max).items():
        for s, run in sorted(runs.items()):
            rows.append([kind, s, run.period, run.period_start] + run.rendered())
    return rows, ["kind", "s", "period", "period_start"] + [f"m={m}" for m in range(m_max + 1)]


def cmd_degrees(args):
    from .degrees import symbolic_degrees

    spec = _reduction(args, "sym", "sym")
    if args.max_m < 0:
        raise UsageError("--max-m must be nonnegative")
    budgets = {"terms": args.budget_terms}
    stopped = False
    try:
        seq = symbolic_degrees(spec, args.max_m, args.budget_terms, extend=args.extend,
                               seed=args.seed, prime=args.prime)
    except TermBudgetExceeded as exc:
        seq = exc.partial
        stopped = True
        _warn(f"term budget {args.budget_terms} reached; rows stop at m={seq.m_max}")
    trop, trop_header = _tropical_rows(spec, args.max_m)
    meta = _header(args, spec, **budgets)
    meta.update({"prime": args.prime, "max_m": args.max_m, "exact_through": seq.exact_through,
                 "budget_stop": stopped, "extend": args.extend})
    if args.format == "json":
        body = seq.to_json()
        body.update(meta)
        body["methods"] = {r.m: r.method for r in seq.rows}
        body["tropical"] = [dict(zip(trop_header, r)) for r in trop]
        text = dumps(body)
    else:
        text = (_comment(meta) + seq.to_csv()
                + "\n" + _comment({"table": "tropical"}) + _csv(trop, trop_header))
    _emit(text, args.out)
    return EXIT_BUDGET if stopped and args.strict else EXIT_OK


# ---------------------------------------------------------------------------
# heights


def _parse_init(text, depth):
    if text is None:
        return [Fraction(1)] * depth
    try:
        vals = [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse --init {text!r}")
    if len(vals) != depth:
        raise UsageError(f"--init needs {depth} values, got {len(vals)}")
    return vals


def cmd_heights(args):
    from .heights import dyndeg_from_degrees, dyndeg_from_heights, run_height_orbit, run_specialized_orbit

    spec = _spec_arg(args)
    if args.max_n < 1:
        raise UsageError("--max-n must be positive")
    if args.specialize:
        orbit = run_specialized_orbit(spec, args.prime, args.seed, args.max_n, args.degree_budget)
        budgets = {"degrees": args.degree_budget}
        degs = orbit.max_degrees()
        try:
            final, trace = dyndeg_from_degrees(orbit)
        except InsufficientData:
            final, trace = None, []
        ratio = dict(trace)
        rows = [[n, dn, dd, d, "" if n not in ratio else repr(ratio[n])]
                for n, (dn, dd), d in zip(orbit.indices, orbit.degrees, degs)]
        header = ["n", "deg_num", "deg_den", "degree", "ratio"]
        summary = {"method": "specialized", "prime": args.prime, "attempts": orbit.attempts,
                   "seed_used": args.seed + orbit.attempts - 1}
    else:
        depth = spec.lead_offset if hasattr(spec, "lead_offset") else spec.p + spec.q
        init = _parse_init(args.init, depth)
        orbit = run_height_orbit(spec, init, args.max_n, args.digit_budget, keep_values=True)
        budgets = {"digits": args.digit_budget}
        try:
            final, trace = dyndeg_from_heights(orbit)
        except InsufficientData:
            final, trace = None, []
        ratio = dict(trace)
        rows = []
        for i, n in enumerate(orbit.indices):
            v = orbit.values[i]
            h = "" if orbit.digits[i] > HEIGHT_PRINT_DIGITS else (max(abs(v.numerator), abs(v.denominator)) if v else 0)
            rows.append([n, orbit.digits[i], repr(orbit.log_heights[i]), h,
                         "" if n not in ratio else repr(ratio[n])])
        header = ["n", "digits", "log_height", "height", "ratio"]
        summary = {"method": "heights", "init": [str(v) for v in init]}
    meta = _header(args, spec, **budgets)
    meta.update(summary)
    meta.update({"max_n": args.max_n, "steps": len(rows), "budget_stop": orbit.budget_stop,
                 "final_ratio": final, "trace": trace})
    if orbit.budget_stop:
        _warn(f"budget reached after {len(rows)} steps")
    if args.format == "json":
        meta["rows"] = [dict(zip(header, r)) for r in rows]
        _emit(dumps(meta), args.out)
    else:
        _emit(_csv(rows, header), args.out)
        summary_path = args.summary or (f"{args.out}.summary.json" if args.out else None)
        if summary_path:
            Path(summary_path).write_text(dumps(meta))
        else:
            sys.stdout.write(_comment(meta))
    return EXIT_BUDGET if orbit.budget_stop and args.strict else EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _suite_job(suite, p, q, k, max_m, seed, prime, term_budget, variant):
    """One verification suite as a JSON-ready report (top level so it pickles)."""
    from . import verify as V

    spec = None
    if suite not in ("alpha", "gs", "cvec", "roots"):
        from .recurrences.specs import ReductionSpec
        spec = ReductionSpec(p, q, k, "sym", "sym")
    if suite == "laurent":
        rep = V.check_laurent(spec, max_m, term_budget, seed, prime)
    elif suite == "constant":
        rep = V.check_constant_terms(spec, max_m, V.VARIANTS, term_budget, seed, prime)
    elif suite == "coprime":
        rep = V.coprime_pairs(spec, max_m, seed, term_budget=term_budget, prime=prime)
    elif suite == "alpha":
        rep = V.alpha_special(k, max_m)
    elif suite == "gs":
        rep = V.gs_sequences(p, q, k, variant, max_m)
    elif suite == "cvec":
        rep = V.c_vector_table((p, q, k), max_m)
    elif suite == "roots":
        rep = V.root_bounds(p, q, k)
    else:
        raise UsageError(f"unknown suite {suite}")
    return rep.to_json()


_DEFAULT_MAX_M = {"laurent": 8, "constant": 8, "coprime": 8, "alpha": 12, "gs": None, "cvec": 20, "roots": None}


def _verify_jobs(suites, p, q, k, max_m, seed, prime, term_budget, variant):
    jobs = []
    for suite in suites:
        m = _DEFAULT_MAX_M[suite] if max_m is None else max_m
        variants = [variant] if suite == "gs" else [None]
        if suite == "gs" and variant is None:
            variants = ["g", "h"] if p >= 3 else ["g"]
        for v in variants:
            jobs.append((suite, _suite_job, (suite, p, q, k, m, seed, prime, term_budget, v)))
    return jobs


def _summarize(reports):
    counts = {}
    for r in reports:
        for it in r["items"]:
            counts[it["status"]] = counts.get(it["status"], 0) + 1
    return counts


def cmd_verify(args):
    from .verify import VERIFY_TERM_BUDGET

    suites = list(SUITES) if args.suite == "all" else [args.suite]
    p, q, k = args.p or 1, args.q or 2, args.k or 2
    if "alpha" in suites and (p, q) != (1, 2) and args.suite == "alpha":
        raise UsageError("the alpha suite is defined for p = 1, q = 2")
    if args.variant == "h" and p < 3:
        raise UsageError("the h variant needs p >= 3")
    if args.suite == "all" and (p, q) != (1, 2):
        suites.remove("alpha")
    budget = args.budget_terms or VERIFY_TERM_BUDGET
    try:
        reports = _run_jobs(_verify_jobs(suites, p, q, k, args.max_m, args.seed, args.prime, budget, args.variant),
                            _threads(args))
    except ValueError as exc:
        raise UsageError(str(exc))
    failed = any(r["proof_failure"] for r in reports)
    out = _header(args, {"p": p, "q": q, "k": k}, terms=budget)
    out.update({"suite": args.suite, "prime": args.prime, "max_m": args.max_m, "reports": reports,
                "counts": _summarize(reports), "proof_failure": failed, "expect_fail": args.expect_fail})
    code = EXIT_PROOF if failed else EXIT_OK
    if args.expect_fail:
        out["expected_failure_seen"] = failed
        code = EXIT_OK if failed else EXIT_PROOF
        if not failed:
            _warn("an expected failure did not occur")
    for r in reports:
        for it in r["items"]:
            if it["status"] == "conflict":
                _warn(f"{r['check']}: {it['name']} disagrees with the printed value")
    _emit(dumps(out), args.out)
    return code


# ---------------------------------------------------------------------------
# lattice


def _parse_points(text):
    try:
        pts = [tuple(int(v) for v in chunk.split(",")) for chunk in text.split(";") if chunk.strip()]
    except ValueError:
        raise UsageError(f"cannot parse --points {text!r}")
    if any(len(pt) != 2 for pt in pts):
        raise UsageError("points are t,n pairs separated by ';'")
    return pts


def _param_value(v):
    return None if v in (None, "sym") else Fraction(v)


def cmd_lattice(args):
    from .algebra import LaurentPoly, RationalFunction
    from .recurrences.lattice import TAU_FORM, band_points, in_band, iterate_lattice, laurent_check, symbolic_band
    from .recurrences.specs import LatticeSpec

    if args.tmax < 0 or args.nmax < 0:
        raise GoodDomainError("region bounds must be nonnegative")
    a, b = _param_value(args.a), _param_value(args.b)
    spec = LatticeSpec(args.k, a, b)
    extra = [n for n, v in (("a", a), ("b", b)) if v is None]
    region = _parse_points(args.points) if args.points else (args.tmax, args.nmax)
    t_band = max([args.tmax] + [t + 1 for t, _ in region] if args.points else [args.tmax])
    n_band = max([args.nmax] + [n + 1 for _, n in region] if args.points else [args.nmax])
    if args.init == "sym":
        table, init = symbolic_band(t_band, n_band, extra=extra)
        params = {n: LaurentPoly.gen(table, n) for n in extra}
        if args.form != TAU_FORM:
            init = {pt: RationalFunction.from_laurent(v) for pt, v in init.items()}
            params = {n: RationalFunction.from_laurent(v) for n, v in params.items()}
    else:
        if extra:
            raise UsageError("numeric --init needs numeric --a and --b")
        c = Fraction(args.init)
        init = {pt: c for pt in band_points(t_band, n_band)}
        params = {}
    grid = iterate_lattice(spec, args.form, init, region, params)
    # the Laurent test only means something for symbolic band values
    check = laurent_check(grid) if args.init == "sym" else {pt: None for pt in grid}
    rows = []
    for (t, n), v in sorted(grid.items()):
        if isinstance(v, (int, Fraction)):
            val, size = str(v), 1
        elif isinstance(v, LaurentPoly):
            val, size = (str(v.constant_value()) if v.is_constant() else ""), v.nterms()
        else:
            val, size = "", v.num.nterms()
        rows.append([t, n, "band" if in_band(t, n) else "computed",
                     "" if check[(t, n)] is None else check[(t, n)], size, val])
    meta = _header(args, {"kind": "lattice", "k": args.k, "a": args.a, "b": args.b})
    meta.update({"form": args.form, "tmax": args.tmax, "nmax": args.nmax, "init": args.init,
                 "points": len(grid), "laurent_pass": sum(1 for v in check.values() if v),
                 "laurent_fail": [list(pt) for pt, ok in sorted(check.items()) if ok is False],
                 "constant": len({v for v in grid.values()}) == 1 if args.init != "sym" else None})
    header = ["t", "n", "source", "laurent", "terms", "value"]
    if args.format == "json":
        meta["rows"] = [dict(zip(header, r)) for r in rows]
        _emit(dumps(meta), args.out)
    else:
        _emit(_comment(meta) + _csv(rows, header), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# repro


def _repro_entropy(p, q, k):
    from .entropy import largest_real_root, reduction_charpoly

    lam = largest_real_root(reduction_charpoly(p, q, k)).lambda_max
    return {"lambda": mpmath.nstr(lam, 15), "entropy": mpmath.nstr(mpmath.log(lam), 15)}


def _repro_example(name, seed):
    from .entropy import largest_real_root, multiterm_charpoly
    from .heights import dyndeg_from_degrees, run_specialized_orbit
    from .recurrences.specs import load_spec

    spec = load_spec(name)
    poly = multiterm_charpoly(spec)
    lam = largest_real_root(poly).lambda_max
    orbit = run_specialized_orbit(spec, seed=seed)
    final, _ = dyndeg_from_degrees(orbit)
    return {"charpoly": poly.to_str(), "root": mpmath.nstr(lam, 12), "specialized_ratio": final,
            "ratio_minus_root": final - float(lam), "steps": len(orbit.indices), "seed": seed,
            "budget_stop": orbit.budget_stop}


def _repro_dstar(p, q, k, m):
    from .degrees import dstar_sequence
    from .recurrences.specs import ReductionSpec

    d = dstar_sequence(ReductionSpec(p, q, k, 1, 1), m)
    return {"head": d[:7], "ratio": d[m] / d[m - 1]}


def _repro_verify(suite, p, q, k, m, variant="g"):
    from .verify import VERIFY_TERM_BUDGET, DEFAULT_PRIME

    rep = _suite_job(suite, p, q, k, m, REPRO_SEED, DEFAULT_PRIME, VERIFY_TERM_BUDGET, variant)
    return {"ok": rep["ok"], "proof_failure": rep["proof_failure"], "counts": _summarize([rep])}


def repro_jobs(quick=False):
    jobs = [
        ("entropy_p1_q2_k2", _repro_entropy, (1, 2, 2)),
        ("dstar_p1_q2_k2", _repro_dstar, (1, 2, 2, 60)),
        ("dstar_p2_q3_k2", _repro_dstar, (2, 3, 2, 60)),
        ("alpha_k2", _repro_verify, ("alpha", 1, 2, 2, 12)),
        ("gs_p1_q3_k2", _repro_verify, ("gs", 1, 3, 2, None)),
        ("gs_p2_q5_k2", _repro_verify, ("gs", 2, 5, 2, None)),
        ("gs_p3_q4_k2", _repro_verify, ("gs", 3, 4, 2, None)),
        ("hs_p3_q4_k2", _repro_verify, ("gs", 3, 4, 2, None, "h")),
        ("cvec_p2_q5_k2", _repro_verify, ("cvec", 2, 5, 2, 20)),
    ]
    for p, q in ((1, 2), (1, 3), (2, 3), (2, 5), (3, 4)):
        for k in (2, 4):
            jobs.append((f"roots_p{p}_q{q}_k{k}", _repro_verify, ("roots", p, q, k, None)))
    if not quick:
        for name in ("eq15", "sec3_second", "sec3_third"):
            jobs.append((f"example_{name}", _repro_example, (name, REPRO_SEED)))
        for suite in ("laurent", "constant", "coprime"):
            jobs.append((f"{suite}_p1_q2_k2", _repro_verify, (suite, 1, 2, 2, 8)))
            jobs.append((f"{suite}_p1_q3_k2", _repro_verify, (suite, 1, 3, 2, 6)))
    return jobs


def cmd_repro(args):
    jobs = repro_jobs(args.quick)
    results = _run_jobs(jobs, _threads(args))
    table = {name: res for (name, _, _), res in zip(jobs, results)}
    if args.out_dir:
        d = Path(args.out_dir)
        d.mkdir(parents=True, exist_ok=True)
        for name, res in table.items():
            (d / f"{name}.json").write_text(dumps(res))
    failed = any(isinstance(r, dict) and r.get("proof_failure") for r in results)
    out = _header(args, "repro", seed=REPRO_SEED)
    out.update({"seed": REPRO_SEED, "quick": args.quick, "results": table, "proof_failure": failed})
    _emit(dumps(out), args.out)
    return EXIT_PROOF if failed else EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser():
    from .algebra import DEFAULT_PRIME
    from .degrees import DEFAULT_TERM_BUDGET
    from .heights import DEFAULT_DEGREE_BUDGET, DEFAULT_DIGIT_BUDGET
    from .recurrences.lattice import TAU_FORM, X_FORM

    ap = _Parser(prog="entropia", description="Degree growth and entropy of Hietarinta-Viallet type recurrences.")
    ap.add_argument("--version", action="version", version=f"entropia {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, seed=True):
        sp.add_argument("--out", help="write the result here instead of stdout")
        sp.add_argument("--threads", type=int, default=1, help="worker processes (ENTROPIA_THREADS overrides)")
        if seed:
            sp.add_argument("--seed", type=int, default=0)

    def pqk(sp):
        sp.add_argument("--p", type=int)
        sp.add_argument("--q", type=int)
        sp.add_argument("--k", type=int)

    sp = sub.add_parser("entropy", help="dominant characteristic root and entropy")
    pqk(sp)
    sp.add_argument("--spec", help="spec JSON file or bundled name (eq15, sec3_second, ...)")
    sp.add_argument("--precision", type=int, default=30, help="decimal digits")
    common(sp, seed=False)
    sp.set_defaults(func=cmd_entropy)

    sp = sub.add_parser("degrees", help="degree table and tropical recursions")
    pqk(sp)
    sp.add_argument("--max-m", type=int, default=6)
    sp.add_argument("--budget-terms", type=int, default=DEFAULT_TERM_BUDGET)
    sp.add_argument("--extend", action="store_true", help="fill rows past the budget from F_p specializations")
    sp.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--strict", action="store_true", help="exit 3 when the budget stops the run")
    common(sp)
    sp.set_defaults(func=cmd_degrees)

    sp = sub.add_parser("heights", help="height or specialized-degree growth of an orbit")
    pqk(sp)
    sp.add_argument("--spec")
    sp.add_argument("--init", help="comma separated initial values (default all 1)")
    sp.add_argument("--max-n", type=int, default=40)
    sp.add_argument("--digit-budget", type=int, default=DEFAULT_DIGIT_BUDGET)
    sp.add_argument("--specialize", action="store_true", help="iterate over F_p(t) instead of Q")
    sp.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    sp.add_argument("--degree-budget", type=int, default=DEFAULT_DEGREE_BUDGET)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--summary", help="summary JSON path for CSV output")
    sp.add_argument("--strict", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_heights)

    sp = sub.add_parser("verify", help="finite instance checks")
    sp.add_argument("--suite", choices=SUITES + ("all",), required=True)
    pqk(sp)
    sp.add_argument("--max-m", type=int)
    sp.add_argument("--variant", choices=("g", "h"))
    sp.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    sp.add_argument("--budget-terms", type=int)
    sp.add_argument("--expect-fail", action="store_true", help="a proof-grade failure is the expected outcome")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("lattice", help="lattice equation on a rectangle")
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--a", default="sym")
    sp.add_argument("--b", default="sym")
    sp.add_argument("--tmax", type=int, default=4)
    sp.add_argument("--nmax", type=int, default=4)
    sp.add_argument("--form", choices=(X_FORM, TAU_FORM), default=TAU_FORM)
    sp.add_argument("--init", default="sym", help="'sym' for symbolic band values or a constant")
    sp.add_argument("--points", help="explicit region 't,n;t,n;...'")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    common(sp, seed=False)
    sp.set_defaults(func=cmd_lattice)

    sp = sub.add_parser("repro", help="reproduction table with pinned seeds")
    sp.add_argument("--quick", action="store_true", help="skip the slow orbit and appendix jobs")
    sp.add_argument("--out-dir", help="also write one JSON file per job")
    common(sp, seed=False)
    sp.set_defaults(func=cmd_repro)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"entropia {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SingularOrbit, GoodDomainError) as exc:
        print(f"entropia {args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EntropiaError as exc:
        print(f"entropia {args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
