from fractions import Fraction

import pytest

from entropia.errors import InsufficientData, SingularOrbit, ZeroInput
from entropia.heights import (dyndeg_from_degrees, dyndeg_from_heights, first_index, height, run_height_orbit,
                              run_specialized_orbit)
from entropia.recurrences import ReductionSpec, load_spec

ORD_122 = [5, 13, 37, 101, 265, 697, 1829, 4789]


def test_height():
    assert height(Fraction(-163, 81)) == 163
    assert height(Fraction(2, 7)) == 7
    assert height(5) == 5
    with pytest.raises(ZeroInput):
        height(0)


def test_first_index():
    assert first_index(load_spec("eq15")) == 5
    assert first_index(ReductionSpec(1, 2, 2)) == 0


def test_eq15_exact_orbit():
    orbit = run_height_orbit(load_spec("eq15"), [1] * 5, 8, keep_values=True)
    assert orbit.indices == list(range(5, 13))
    assert orbit.values[:2] == [3, Fraction(163, 81)]
    assert orbit.height_at(6) == 163
    assert orbit.digits[:4] == [2, 6, 20, 93]
    assert not orbit.budget_stop
    last, trace = dyndeg_from_heights(orbit)
    assert [n for n, _ in trace] == list(range(6, 13))
    assert abs(last - 4.6355) < 1e-3


def test_height_orbit_digit_budget_stops_early():
    orbit = run_height_orbit(load_spec("eq15"), [1] * 5, 30, digit_budget=2000)
    assert orbit.budget_stop
    assert orbit.indices[-1] == 10
    assert max(orbit.digits) <= 2000


def test_height_orbit_needs_values_to_report_heights():
    orbit = run_height_orbit(load_spec("eq15"), [1] * 5, 3)
    with pytest.raises(ValueError):
        orbit.height_at(5)
    with pytest.raises(ValueError):
        run_height_orbit(load_spec("eq15"), [1] * 5, 0)


def test_height_orbit_singular_start():
    with pytest.raises(SingularOrbit):
        run_height_orbit(load_spec("eq15"), [1, 0, 1, 1, 1], 3)


@pytest.mark.parametrize("spec", [load_spec("hv122"), ReductionSpec(1, 2, 2, "sym", "sym")])
def test_specialized_degrees_match_ord(spec):
    orbit = run_specialized_orbit(spec, n_max=8)
    assert orbit.max_degrees() == ORD_122
    assert orbit.attempts == 1


def test_specialized_budget_stop():
    orbit = run_specialized_orbit(load_spec("eq15"), n_max=40, degree_budget=10_000)
    assert orbit.budget_stop
    assert max(orbit.max_degrees()) <= 10_000
    last, _ = dyndeg_from_degrees(orbit)
    assert 4.5 < last < 4.7


def test_dyndeg_from_degree_list():
    last, trace = dyndeg_from_degrees(ORD_122)
    assert last == ORD_122[-1] / ORD_122[-2]
    assert len(trace) == len(ORD_122) - 1
    with pytest.raises(InsufficientData):
        dyndeg_from_degrees([3, 0])
