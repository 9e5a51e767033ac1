from fractions import Fraction

import pytest

from entropia.algebra import (COMMON_FACTOR_WITNESS, DEFAULT_PRIME, LIKELY_COPRIME, LaurentPoly, MultiIndex,
                              PrimeFieldRatFun, RationalFunction, SymbolTable, gcd_line_probe, indexed_name,
                              laurent_gens, ord_total, parse_name)
from entropia.errors import DivisionByZero, NotDivisible, ZeroInput


@pytest.fixture
def T():
    return SymbolTable(["x", "y", "z"])


def test_symbol_table_basics(T):
    assert len(T) == 3
    assert "y" in T and "w" not in T
    assert T.index("z") == 2
    with pytest.raises(ValueError):
        SymbolTable(["x", "x"])
    with pytest.raises(ValueError):
        SymbolTable([])


def test_indexed_names_round_trip():
    assert indexed_name("f", -3) == "f[-3]"
    assert parse_name("f[-3]") == ("f", -3)
    assert parse_name("a") == ("a", None)
    T = SymbolTable.indexed("x", range(-3, 0), extra=["a"])
    assert T.names == ("x[-3]", "x[-2]", "x[-1]", "a")


def test_laurent_normal_form_pulls_out_monomials(T):
    x, y, z = laurent_gens(T)
    u = x * x * y + x * y
    assert u.shift == (1, 1, 0)
    assert u.nterms() == 2
    assert sorted(u.terms()) == [((1, 1, 0), 1), ((2, 1, 0), 1)]


def test_laurent_negative_powers(T):
    x, y, _ = laurent_gens(T)
    xi = LaurentPoly.monomial(T, (-1, 0, 0))
    assert x * xi == LaurentPoly.one(T)
    assert (x + y) ** 0 == LaurentPoly.one(T)
    assert (x * xi + y).term_dict() == {(0, 0, 0): 1, (0, 1, 0): 1}


def test_from_terms_combines_and_drops_zeros(T):
    u = LaurentPoly.from_terms(T, [((1, 0, 0), 2), ((1, 0, 0), -2), ((0, -1, 0), 3)])
    assert u.term_dict() == {(0, -1, 0): 3}
    assert LaurentPoly.from_terms(T, {}).is_zero()


def test_exact_div(T):
    x, y, z = laurent_gens(T)
    u = (x + y) * (y - 2 * z + 1)
    assert u.exact_div(x + y) == y - 2 * z + 1
    assert (3 * x * y).exact_div(3 * y) == x
    with pytest.raises(NotDivisible):
        u.exact_div(x + z)
    with pytest.raises(NotDivisible):
        (3 * x).exact_div(2 * y)
    with pytest.raises(ZeroDivisionError):
        u.exact_div(LaurentPoly.zero(T))


def test_ord_var_and_degrees(T):
    x, y, z = laurent_gens(T)
    u = x ** 3 * y + LaurentPoly.monomial(T, (-2, 0, 1))
    assert u.ord_var("x") == 3
    assert u.valuation("x") == -2
    assert u.degree_in(["x", "y"]) == 4
    assert u.depends_on("z")
    assert not (x + y).depends_on("z")


def test_monomial_content(T):
    x, y, z = laurent_gens(T)
    u = x ** 2 * y * (y + z)
    m0, u1 = u.monomial_content()
    assert m0 == MultiIndex(T, (2, 1, 0))
    assert u1 == y + z
    m0, u1 = u.monomial_content(["x"])
    assert m0 == MultiIndex(T, (2, 0, 0))
    assert u1 == y * (y + z)
    with pytest.raises(ZeroInput):
        LaurentPoly.zero(T).monomial_content()


def test_specialize_rational_and_division_by_zero(T):
    x, y, z = laurent_gens(T)
    u = x * y + LaurentPoly.monomial(T, (0, 0, -1), 2)
    assert u.specialize({"x": 2, "y": 3, "z": Fraction(1, 2)}) == 10
    with pytest.raises(DivisionByZero):
        u.specialize({"x": 1, "y": 1, "z": 0})
    with pytest.raises(KeyError):
        u.specialize({"x": 1, "y": 1})


def test_substitute_keeps_laurent(T):
    x, y, z = laurent_gens(T)
    u = (x + y) * z
    v = u.substitute({"x": 2})
    assert isinstance(v, LaurentPoly)
    assert v == (2 + y) * z


def test_rational_function_normalization(T):
    x, y, z = laurent_gens(T)
    num, den = (x + y) * (x - z), (x + y) * (y + 1)
    r = RationalFunction(num, den)
    assert r == RationalFunction(x - z, y + 1)
    assert not r.is_laurent()
    # a monomial denominator is absorbed into the numerator
    assert RationalFunction(x - z, y).is_laurent()
    assert r * RationalFunction(y + 1, x - z) == RationalFunction.const(T, 1)
    assert r.ord_total() == 1
    assert ord_total(x * y) == 2


def test_rational_function_specialize(T):
    x, y, z = laurent_gens(T)
    r = RationalFunction(x + 1, y - z)
    assert r.specialize({"x": 1, "y": 3, "z": 1}) == 1
    with pytest.raises(ZeroInput):
        r.specialize({"x": 1, "y": 2, "z": 2})


def test_prime_field_ratfun_arithmetic():
    p = 101
    t = PrimeFieldRatFun.t(p)
    u = (t + 1) / (t - 1)
    assert u * (t - 1) == t + 1
    assert u.degrees() == (1, 1)
    assert (t ** 3).degree() == 3
    assert u(3) == 2
    assert (u - u).is_zero()
    assert PrimeFieldRatFun.const(p, 102) == PrimeFieldRatFun.const(p, 1)
    with pytest.raises(ZeroDivisionError):
        t / PrimeFieldRatFun.const(p, 0)


def test_prime_field_reduction_cancels_common_factor():
    p = DEFAULT_PRIME
    a = PrimeFieldRatFun.from_coeffs([1, 2, 1], [1, 1], p)
    assert a.degrees() == (1, 0)
    assert a.is_polynomial()


def test_gcd_line_probe_planted_and_coprime(T):
    x, y, z = laurent_gens(T)
    f, g, h = x + y + 1, y * z + 3, x - z
    assert gcd_line_probe(f * g, f * h).verdict == COMMON_FACTOR_WITNESS
    res = gcd_line_probe(f * g, h, seed=4)
    assert res.verdict == LIKELY_COPRIME and res.coprime
    # monomial factors are units and never count as common factors
    assert gcd_line_probe(x * f, x * g).verdict == LIKELY_COPRIME


def test_gcd_line_probe_rejects_bad_input(T):
    x, _, _ = laurent_gens(T)
    with pytest.raises(ValueError):
        gcd_line_probe(LaurentPoly.zero(T), x)
    other = LaurentPoly.gen(SymbolTable(["u"]), "u")
    with pytest.raises(ValueError):
        gcd_line_probe(x, other)
