import json
from fractions import Fraction

import pytest

from entropia import verify as V
from entropia.recurrences import ReductionSpec, iterate_tau

ALPHA_2 = [1, 2, 6, 16, 42, 110, 289, 756, 1980, 5184, 13572, 35532, 93025]


def sym(p, q, k=2):
    return ReductionSpec(p, q, k, "sym", "sym")


def statuses(rep):
    return {it["name"]: it["status"] for it in rep.items}


def test_laurent_small_instances():
    for spec, m in ((sym(1, 2), 5), (sym(1, 3), 5)):
        rep = V.check_laurent(spec, m)
        assert rep.ok and not rep.proof_failure


def test_laurent_fails_for_odd_k_with_replayable_witness():
    rep = V.check_laurent(sym(1, 2, 3), 6)
    assert not rep.ok
    bad = rep.failures()
    assert [it["name"] for it in bad] == ["f[4]"]
    wit = bad[0]["witness"]
    assert wit["method"] == "specialized" and wit["m"] == 4
    # the witness alone is enough to reproduce the failure, also after a JSON round trip
    assert V.replay(json.loads(json.dumps(wit)))


def test_constant_terms_and_coprime_pairs():
    assert V.check_constant_terms(sym(1, 3), 6).ok
    rep = V.coprime_pairs(sym(1, 2), 5)
    assert rep.ok
    assert rep.grade == V.EVIDENCE


def test_planted_pair_positive_control():
    res = V.planted_pair_control(sym(1, 2))
    assert res.verdict == V.COMMON_FACTOR_WITNESS


def test_alpha_special_derived_and_printed_variant():
    rep = V.alpha_special(2, 12)
    assert [rep.data["alpha"][m] for m in range(13)] == ALPHA_2
    assert rep.data["printed_divergence"] == 5
    assert rep.data["printed"][5] == 114
    assert statuses(rep)["printed_variant"] == V.CONFLICT
    assert rep.ok


def test_alpha_recursion_window():
    a = V.alpha_recursion(2, 3)
    assert [a[m] for m in range(-6, 0)] == [1, 0, 0, 0, 0, 0]
    assert V.alpha_recursion(2, 12, printed=True)[4] == 42


def test_gs_values_are_exact_rationals():
    g = V.gs_values(2, 5, 2)
    assert all(isinstance(v, Fraction) for v in g.values())
    assert g[0] == 0 and g[7] == -1 and g[10] == -255


@pytest.mark.parametrize("p,q,variant", [(1, 3, "g"), (2, 5, "g"), (3, 4, "g"), (3, 4, "h")])
def test_gs_values_match_perturbed_numeric_orbit(p, q, variant):
    # f_s is Laurent in the initial values, so t = 2 + eps rounds to the value at t = 2
    spec = ReductionSpec(p, q, 2, 1, 1)
    n = spec.tau_depth
    neg = -2 * q if variant == "g" else -2 * p
    init = [2 + Fraction(1, 10 ** 40) if m == -n else Fraction(-1 if m == neg else 1) for m in range(-n, 0)]
    exact = V.gs_values(p, q, 2, variant)
    numeric = iterate_tau(spec, init, max(exact) + 1)
    assert [round(v) for v in numeric] == [exact[s] for s in range(max(exact) + 1)]


def test_gs_2_5_2_passes():
    rep = V.gs_sequences(2, 5, 2)
    assert rep.ok and not rep.conflicts()
    st = statuses(rep)
    assert st["g[q+2] = -1"] == V.PASS
    assert st["g[2q+1] odd"] == V.PASS


def test_gs_1_3_2_labels_exchanged():
    # the exact orbit follows the even-index formula 2^(k^(s-2)) at s = q - 1 = 2
    rep = V.gs_sequences(1, 3, 2)
    assert rep.ok
    assert [rep.data["values"][s] for s in range(6)] == [0, 1, 2, 4, -16, 256]
    assert sorted(it["name"] for it in rep.conflicts()) == [
        "g[2] printed value (q odd)", "g[3] printed value (q odd)", "g[4] printed value (q odd)"]
    assert statuses(rep)["g[q-1], g[q], g[q+1] with the q-parity labels exchanged"] == V.PASS


def test_gs_3_4_2_g_and_h():
    g = V.gs_sequences(3, 4, 2)
    assert g.data["values"][8] == 0 and g.data["values"][14] == -16
    assert [it["name"] for it in g.conflicts()] == ["g[2q+2p] = 2^(k^2)"]
    h = V.gs_sequences(3, 4, 2, "h")
    vals = h.data["values"]
    assert (vals[0], vals[4], vals[8]) == (0, 9, -2106)
    assert sorted(it["name"] for it in h.conflicts()) == ["h[2q] = 2", "h[q] = 1"]


def test_gs_unsupported_family():
    with pytest.raises(ValueError):
        V.gs_sequences(1, 2, 2)
    with pytest.raises(ValueError):
        V.gs_sequences(2, 5, 2, "h")


def test_c_vectors_2_5_2():
    rep = V.c_vector_table((2, 5, 2), 20)
    assert rep.ok and not rep.conflicts()
    c0 = rep.data["c0"]
    assert [c0[2 * i] for i in range(5)] == [1, 2, 4, 8, 16]
    assert c0[10] == 2 ** 5 + 2 ** 2


def test_c_vectors_other_families():
    assert V.c_vector_table((1, 3, 2), 12).ok
    rep = V.c_vector_table((3, 4, 2), 14)
    assert [it["name"] for it in rep.conflicts()] == ["c^(0)_(jp+i) < c^(0)_(jp) for 0 < |i| < p"]


def test_root_bounds_records_lt_k():
    rep = V.root_bounds(1, 2, 2)
    st = statuses(rep)
    assert st["1 < Lambda"] == V.PASS and st["max |root| = Lambda"] == V.PASS
    assert st["Lambda < k"] == V.RECORDED
    assert rep.data["lt_k"] is False
    assert rep.ok


def test_report_json_is_plain():
    rep = V.gs_sequences(1, 3, 2)
    doc = json.loads(json.dumps(rep.to_json()))
    assert doc["check"] == "gs_sequences"
    assert doc["ok"] is True
    assert isinstance(doc["data"]["values"]["8"], str)


def test_replay_rejects_unknown_check():
    with pytest.raises(ValueError):
        V.replay({"check": "nope", "range": {}, "spec": {}})
