"""Univariate rational functions over a prime field.

Elements of F_p(t) are kept as a coprime pair ``num/den`` with ``den``
monic.  FLINT's ``nmod_poly`` does the polynomial arithmetic, including
fast multiplication at high degree.
"""
from __future__ import annotations

from fractions import Fraction

import flint

DEFAULT_PRIME = 2**61 - 1


def _poly(coeffs, prime):
    return flint.nmod_poly([int(c) % prime for c in coeffs], prime)


class PrimeFieldRatFun:
    """Immutable element of F_p(t) in lowest terms."""

    __slots__ = ("prime", "num", "den")

    def __init__(self, num, den=None, prime=None, _normal=False):
        if prime is None:
            prime = int(num.modulus()) if isinstance(num, flint.nmod_poly) else DEFAULT_PRIME
        if not isinstance(num, flint.nmod_poly):
            num = _poly(num if isinstance(num, (list, tuple)) else [num], prime)
        if den is None:
            den = flint.nmod_poly([1], prime)
        elif not isinstance(den, flint.nmod_poly):
            den = _poly(den if isinstance(den, (list, tuple)) else [den], prime)
        self.prime = prime
        if not _normal:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num, den):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if num == 0:
            return num, flint.nmod_poly([1], int(den.modulus()))
        if den.degree() > 0 and num.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num // g
                den = den // g
        lc = den.leading_coefficient()
        if int(lc) != 1:
            inv = lc ** -1
            num = num * inv
            den = den * inv
        return num, den

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, like_or_prime, c):
        prime = like_or_prime.prime if isinstance(like_or_prime, PrimeFieldRatFun) else int(like_or_prime)
        if isinstance(c, Fraction):
            n = c.numerator % prime
            d = c.denominator % prime
            if d == 0:
                raise ZeroDivisionError("denominator vanishes modulo the prime")
            c = n * pow(d, -1, prime)
        return cls(_poly([c], prime), prime=prime, _normal=True)

    @classmethod
    def t(cls, prime=DEFAULT_PRIME):
        return cls(_poly([0, 1], prime), prime=prime, _normal=True)

    @classmethod
    def linear(cls, c0, c1, prime=DEFAULT_PRIME):
        """The degree-one polynomial ``c0 + c1*t``."""
        return cls(_poly([c0, c1], prime), prime=prime, _normal=True)

    @classmethod
    def from_coeffs(cls, num, den=(1,), prime=DEFAULT_PRIME):
        return cls(_poly(num, prime), _poly(den, prime), prime=prime)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldRatFun):
            if other.prime != self.prime:
                raise ValueError("operands use different primes")
            return other
        if isinstance(other, (int, Fraction)):
            return PrimeFieldRatFun.const(self, other)
        if type(other).__name__ in ("fmpz", "nmod"):
            return PrimeFieldRatFun.const(self, int(other))
        return NotImplemented

    # inspection ---------------------------------------------------------
    def is_zero(self):
        return self.num == 0

    def __bool__(self):
        return self.num != 0

    def degree(self):
        """max(deg num, deg den); the zero function has degree 0."""
        return max(max(self.num.degree(), 0), self.den.degree())

    def degrees(self):
        return (max(self.num.degree(), 0), self.den.degree())

    def is_polynomial(self):
        return self.den.degree() == 0

    def __call__(self, t):
        d = self.den(t)
        if int(d) == 0:
            raise ZeroDivisionError("pole at the evaluation point")
        return int(self.num(t)) * pow(int(d), -1, self.prime) % self.prime

    # arithmetic ---------------------------------------------------------
    def __neg__(self):
        return PrimeFieldRatFun(-self.num, self.den, self.prime, _normal=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return PrimeFieldRatFun(self.num + other.num, self.den, self.prime)
        return PrimeFieldRatFun(self.num * other.den + other.num * self.den, self.den * other.den, self.prime)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = PrimeFieldRatFun.const(self, other)
            if c.is_zero():
                return c
            return PrimeFieldRatFun(self.num * c.num, self.den, self.prime, _normal=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return PrimeFieldRatFun.const(self, 0)
        # both factors are reduced, so cross gcds are all that can cancel
        a, b, c, d = self.num, self.den, other.num, other.den
        g = a.gcd(d)
        if g.degree() > 0:
            a, d = a // g, d // g
        g = c.gcd(b)
        if g.degree() > 0:
            c, b = c // g, b // g
        num, den = a * c, b * d
        lc = den.leading_coefficient()
        if int(lc) != 1:
            inv = lc ** -1
            num, den = num * inv, den * inv
        return PrimeFieldRatFun(num, den, self.prime, _normal=True)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        inv = den.leading_coefficient() ** -1
        return PrimeFieldRatFun(num * inv, den * inv, self.prime, _normal=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        # coprimality survives powers, so no gcd is needed
        return PrimeFieldRatFun(self.num ** n, self.den ** n, self.prime, _normal=True)

    @classmethod
    def sum(cls, items):
        """Add many fractions with a single gcd at the end."""
        items = list(items)
        if not items:
            raise ValueError("empty sum")
        num, den = items[0].num, items[0].den
        for x in items[1:]:
            if x.den == den:
                num = num + x.num
            else:
                num, den = num * x.den + x.num * den, den * x.den
        return cls(num, den, items[0].prime)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldRatFun):
            return self.prime == other.prime and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            try:
                return self == PrimeFieldRatFun.const(self, other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.prime, tuple(int(c) for c in self.num.coeffs()), tuple(int(c) for c in self.den.coeffs())))

    def __repr__(self):
        return f"PrimeFieldRatFun(({self.num}) / ({self.den}) mod {self.prime})"


def reduce_fraction(value, prime=DEFAULT_PRIME):
    """Map a rational number into F_p as a constant rational function."""
    return PrimeFieldRatFun.const(prime, Fraction(value))
