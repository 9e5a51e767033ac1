import json
from fractions import Fraction

import pytest

from entropia.algebra import LaurentPoly
from entropia.errors import GoodDomainError, InvalidWeights, SingularOrbit
from entropia.recurrences import (FAILS, HOLDS, INDETERMINATE, TAU_FORM, X_FORM, LatticeSpec, MultiTermSpec,
                                  ReductionSpec, build_reduction, coprimeness_condition, f_table,
                                  iterate_lattice, iterate_tau, iterate_x, laurent_check, load_spec,
                                  spec_from_json, symbolic_band, symbolic_params, tau_forward, ug_decompose,
                                  vh_decompose, x_from_f)


def test_reduction_spec_validation():
    with pytest.raises(ValueError):
        ReductionSpec(2, 1, 2)
    with pytest.raises(ValueError):
        ReductionSpec(2, 4, 2)
    with pytest.raises(ValueError):
        ReductionSpec(1, 2, 0)
    with pytest.raises(ValueError):
        ReductionSpec(1, 2, 2, 0, 1)
    s = ReductionSpec(1, 2, 2, "sym", "3/2")
    assert s.a is None and s.b == Fraction(3, 2)
    assert s.symbolic == ["a"]
    assert s.tau_depth == 6


def test_spec_json_round_trip():
    s = ReductionSpec(2, 5, 4, "sym", 1)
    assert spec_from_json(json.dumps(s.to_json())) == s
    m = load_spec("eq15")
    assert spec_from_json(m.to_json()) == m
    with pytest.raises(ValueError):
        spec_from_json({"kind": "other"})


def test_bundled_specs_load():
    eq15 = load_spec("eq15.json")
    assert isinstance(eq15, MultiTermSpec)
    assert eq15.lead_offset == 5
    assert sorted((o, e) for o, e, _ in eq15.terms) == [(1, 4), (2, 2), (3, 4), (4, 2)]
    for name in ("hv122", "sec3_second", "sec3_third"):
        assert load_spec(name) is not None


def test_multiterm_validation():
    with pytest.raises(ValueError):
        MultiTermSpec(3, ((1, 2, 1), (1, 2, 1)))
    with pytest.raises(ValueError):
        MultiTermSpec(3, ((3, 2, 1),))
    with pytest.raises(ValueError):
        MultiTermSpec(3, ((1, 2, 0),))


def test_eq15_rational_orbit_starts():
    xs = iterate_x(load_spec("eq15"), [Fraction(1)] * 5, 3)
    assert xs[:2] == [3, Fraction(163, 81)]


def test_x_orbit_zero_divisor_is_singular():
    with pytest.raises(SingularOrbit):
        iterate_x(load_spec("eq15"), [1, 0, 1, 1, 1], 3)


def test_build_reduction_and_weights():
    s = build_reduction(5, 3, 1, 2, 2, 2, 2)
    assert s.lead_offset == 5
    assert sorted(o for o, _, _ in s.terms) == [1, 2, 3, 4]
    with pytest.raises(InvalidWeights):
        build_reduction(4, 3, 1, 2, 2, 2, 2)
    with pytest.raises(InvalidWeights):
        build_reduction(3, 5, 1, 2, 2, 2, 2)


def test_coprimeness_condition_readings():
    r = coprimeness_condition([2, 2], [2, 2])
    assert r["as_printed"] == FAILS and r["alternative"] == HOLDS
    assert r["verdict"] == INDETERMINATE
    r = coprimeness_condition([2, 4], [2, 2])
    assert r["verdict"] == FAILS


def test_tau_orbit_matches_x_orbit():
    # numeric tau values give back the x orbit through x_m = f_m f_{m-p-q} / (f_{m-p}^k f_{m-q}^k)
    spec = ReductionSpec(1, 2, 2, 1, 1)
    init = [Fraction(v) for v in (2, 3, 5, 7, 11, 13)]
    fs = init + iterate_tau(spec, init, 6)
    xs0 = [x_from_f(spec, fs[: 4 + j]) for j in range(3)]
    xs = iterate_x(spec, xs0, 6)
    for m in range(6):
        assert x_from_f(spec, fs[: 4 + 3 + m]) == xs[m]


def test_symbolic_tau_is_laurent_for_even_k():
    spec = ReductionSpec(1, 2, 2, "sym", "sym")
    table = f_table(spec)
    pr = symbolic_params(spec, table)
    seeds = {m: LaurentPoly.gen(table, f"f[{m}]") for m in range(-6, 0)}
    vals = tau_forward(spec, seeds, 2, pr["a"], pr["b"])
    assert [vals[m].nterms() for m in range(3)] == [3, 13, 185]


def test_decompositions_agree_with_tau():
    # f_m = u_m(f_a) g_m(x) = v_m(f_b) h_m(x), checked at a numeric point
    spec = ReductionSpec(1, 2, 2, "sym", "sym")
    f0 = {m: Fraction(v) for m, v in zip(range(-6, 0), (2, 3, 5, 7, 11, 13))}
    a, b = Fraction(3), Fraction(-2)
    fs = dict(f0)
    for m, v in enumerate(iterate_tau(spec, list(f0.values()), 3, {"a": a, "b": b})):
        fs[m] = v
    xs = {f"x[{m}]": x_from_f(spec, [fs[i] for i in range(m - 3, m + 1)]) for m in (-3, -2, -1)}
    at = dict(xs, a=a, b=b)
    for m in (0, 1, 2):
        u, g = ug_decompose(spec, m)
        v, h = vh_decompose(spec, m)
        um = 1
        for name, e in u.as_dict().items():
            um *= fs[int(name[2:-1])] ** e
        vm = 1
        for name, e in v.as_dict().items():
            vm *= fs[int(name[2:-1])] ** e
        assert um * Fraction(g.specialize(at)) == fs[m]
        assert vm * Fraction(h.specialize(at)) == fs[m]


def test_lattice_tau_is_laurent():
    table, init = symbolic_band(4, 4, extra=["a", "b"])
    params = {"a": LaurentPoly.gen(table, "a"), "b": LaurentPoly.gen(table, "b")}
    grid = iterate_lattice(LatticeSpec(2), TAU_FORM, init, (4, 4), params)
    assert all(laurent_check(grid).values())
    assert grid[(3, 3)].nterms() == 897


def test_lattice_constant_solution():
    init = {pt: Fraction(1) for pt in [(t, n) for t in range(5) for n in range(5) if t < 2 or n < 2]}
    for form in (X_FORM, TAU_FORM):
        grid = iterate_lattice(LatticeSpec(2, 1, 1), form, init, (5, 5))
        assert set(grid.values()) == {1}


def test_lattice_bad_domain():
    init = {pt: Fraction(1) for pt in [(t, n) for t in range(4) for n in range(4) if t < 2 or n < 2]}
    with pytest.raises(GoodDomainError):
        iterate_lattice(LatticeSpec(2, 1, 1), X_FORM, init, [(3, 3)])
    with pytest.raises(ValueError):
        iterate_lattice(LatticeSpec(2, 1, 1), "z", init, (3, 3))
