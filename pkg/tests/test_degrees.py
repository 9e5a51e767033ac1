import csv
import io

import pytest

from entropia.degrees import (CERTIFIED, EXPAND, bound_check, degree_consistency, dstar_sequence,
                              line_degree_oracle, symbolic_degrees, tropical_table, tropical_Y, tropical_Z)
from entropia.entropy import largest_real_root, reduction_charpoly
from entropia.errors import TermBudgetExceeded
from entropia.recurrences import ReductionSpec

GRID = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 4)]
ORD_122 = [5, 13, 37, 101, 265, 697, 1829]


def spec(p, q, k=2):
    return ReductionSpec(p, q, k, "sym", "sym")


@pytest.fixture(scope="module")
def seq122():
    return symbolic_degrees(spec(1, 2), 6)


def test_printed_Y_for_1_2():
    s = spec(1, 2)
    assert tropical_Y(s, -3, 5).rendered() == ["1_{1}", "0_{1,2}", "0_{1,3}"] * 2
    assert tropical_Y(s, -2, 5).rendered() == ["0_{1,3}", "1_{1}", "0_{1,2}"] * 2
    assert tropical_Y(s, -1, 5).rendered() == ["0_{1,2}", "0_{1,3}", "1_{1}"] * 2
    for j in (-3, -2, -1):
        run = tropical_Y(s, j, 5)
        assert (run.period, run.period_start) == (3, 0)


def test_printed_Z_for_1_2():
    s = spec(1, 2)
    assert tropical_Z(s, -3, 5).rendered() == ["0_{2,3}"] + ["0_{1,2,3}"] * 5
    assert tropical_Z(s, -2, 5).rendered() == ["-2_{2}", "0_{2}", "0_{1,3}", "-2_{1}", "0_{1,2}", "0_{1,3}"]
    assert tropical_Z(s, -1, 5).rendered() == ["-2_{3}", "-2_{2}", "1_{1}", "-2_{1,3}", "-2_{1,2}", "1_{1}"]
    assert tropical_Z(s, -1, 8).period == 3


def test_tropical_values_scale_with_k():
    z = tropical_Z(spec(1, 2, 4), -1, 2)
    assert [st.value for st in z.states] == [-4, -4, 1]


@pytest.mark.parametrize("p,q", GRID)
@pytest.mark.parametrize("k", [2, 4])
def test_periods_divide_p_plus_q(p, q, k):
    table = tropical_table(spec(p, q, k), 4 * (p + q))
    for kind in ("Y", "Z"):
        for run in table[kind].values():
            assert (p + q) % run.period == 0


@pytest.mark.parametrize("p,q", GRID)
def test_Y_is_indicator_of_residue_class(p, q):
    n = p + q
    for j in range(n):
        run = tropical_Y(spec(p, q), -n + j, 3 * n)
        assert run.values() == [1 if m % n == j else 0 for m in range(3 * n + 1)]


@pytest.mark.parametrize("p,q", GRID)
def test_Z_of_first_variable_vanishes(p, q):
    n = p + q
    assert set(tropical_Z(spec(p, q), -n, 3 * n).values()) == {0}


@pytest.mark.parametrize("p,q", [(1, 3), (1, 4), (2, 3), (2, 5), (3, 4)])
def test_Y_singleton_witness_for_every_m(p, q):
    table = tropical_table(spec(p, q), 3 * (p + q))
    for m in range(3 * (p + q) + 1):
        assert any(len(run.states[m].argset) == 1 for run in table["Y"].values())


def _printed_1q_z_minus_1(q):
    mid = ["0_{1,2,3}"] * (q - 3)
    return (["-2_{3}", "0_{1,2}"] + mid + ["-2_{2}", "1_{1}", "-2_{1,3}", "0_{1,2}"] + mid[1:]
            + ["0_{1,3}", "-2_{1,2}", "1_{1}"])


@pytest.mark.parametrize("q", [4, 5, 6, 7])
def test_printed_1q_Z_entries(q):
    s = spec(1, q)
    assert tropical_Z(s, -1, 2 * q + 1).rendered() == _printed_1q_z_minus_1(q)
    for j in range(-q, -1):
        z = tropical_Z(s, j, 3 * q).values()
        assert z == [-2 if m % (q + 1) == q + j else 0 for m in range(3 * q + 1)]


def test_1q_Z_pattern_overlaps_at_q_3():
    # q + 2 = 2q - 1 when q = 3, so the two printed entries collide
    assert tropical_Z(spec(1, 3), -1, 7).rendered()[5] == "0_{1}"


def test_general_pq_sketch_holds_only_for_small_shift():
    p, q = 2, 3
    for s in range(-p - q, 0):
        z = tropical_Z(spec(p, q), s, 4 * (p + q)).values()
        if s >= -p:
            assert (z[2 * p + q + s], z[p + 2 * q + s], z[2 * p + 2 * q + s]) == (-2, -2, 1)
        else:
            assert z[2 * p + 2 * q + s] == 0


def test_bad_window_index():
    with pytest.raises(ValueError):
        tropical_Y(spec(1, 2), 0, 3)
    with pytest.raises(ValueError):
        tropical_Z(spec(1, 2), -4, 3)


def test_dstar_values_and_window():
    assert dstar_sequence(spec(1, 2), 12) == [1, 2, 6, 16, 42, 110, 289, 756, 1980, 5184, 13572, 35532, 93025]
    with pytest.raises(ValueError):
        dstar_sequence(spec(1, 2), -1)


@pytest.mark.parametrize("pq", [(1, 2), (2, 3)])
def test_dstar_ratio_converges(pq):
    d = dstar_sequence(spec(*pq), 61)
    lam = float(largest_real_root(reduction_charpoly(*pq, 2)).lambda_max)
    assert abs(d[61] / d[60] - lam) < 1e-6


def test_dstar_two_sided_growth():
    d = dstar_sequence(spec(1, 2), 200)
    lam = float(largest_real_root(reduction_charpoly(1, 2, 2)).lambda_max)
    r = [d[m] / lam ** m for m in range(10, 201)]
    assert 0 < min(r) <= max(r) < 1.01 * min(r)


def test_symbolic_ord_matches_oracles(seq122):
    assert [seq122.row(m).ord_x for m in range(7)] == ORD_122
    assert line_degree_oracle(spec(1, 2), 6, seed=0) == ORD_122
    assert line_degree_oracle(spec(1, 2), 6, seed=1) == ORD_122
    assert seq122.exact_through == 4
    assert [seq122.row(m).method for m in range(7)] == [EXPAND] * 5 + [CERTIFIED] * 2


def test_h_degrees_follow_dstar(seq122):
    assert all(seq122.row(m).d == seq122.row(m).dstar for m in range(7))


def test_c_splits_into_alpha_and_beta(seq122):
    for r in seq122.rows:
        for s in seq122.svars:
            assert r.c[s] == r.alpha[s] + r.beta[s]


def test_bound_check_sandwich(seq122):
    rep = bound_check(spec(1, 2), 6, seq122)
    assert rep["ok"]
    assert [(r["lower"], r["upper"]) for r in rep["rows"] if r["m"] >= 0] == [
        (1, 9), (2, 15), (6, 39), (17, 103), (44, 265), (116, 697), (305, 1831)]


def test_degree_consistency_reports_alpha_cancellation(seq122):
    # the min recursion for alpha_{-1} predicts increments the expansion does not show
    rep = degree_consistency(spec(1, 2), 6, seq122)
    assert rep["checked"] == 42
    assert [(x["kind"], x["s"], x["m"]) for x in rep["mismatches"]] == [("Z", -1, m) for m in (3, 4, 5, 6)]
    assert all(x["degrees"] == 0 for x in rep["mismatches"])


def test_csv_layout(seq122):
    rows = list(csv.reader(io.StringIO(seq122.to_csv(m_min=0))))
    assert rows[0] == ["m", "ord_x", "c[-3]", "c[-2]", "c[-1]", "alpha[-3]", "alpha[-2]", "alpha[-1]", "d", "dstar"]
    assert [int(r[1]) for r in rows[1:]] == ORD_122


def test_budget_without_extension_raises_with_partial():
    with pytest.raises(TermBudgetExceeded) as exc:
        symbolic_degrees(spec(1, 2), 6, term_budget=1000, extend=False)
    part = exc.value.partial
    assert part.exact_through < 6
    assert part.row(0).ord_x == 5
