"""Reduced rational functions in Laurent-polynomial numerator/denominator form."""
from __future__ import annotations

from fractions import Fraction

from ..errors import ZeroInput
from .laurent import LaurentPoly
from .symbols import SymbolTable


class RationalFunction:
    """Immutable quotient ``num / den`` of Laurent polynomials.

    After normalization ``den`` is an honest polynomial without monomial
    content whose leading term is positive, every monomial factor lives
    in ``num`` and ``num``, ``den`` share no polynomial factor.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, _normal=False):
        if den is None:
            den = LaurentPoly.one(num.table)
        if not _normal:
            num, den = self._normalize(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(num, den):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        table = num.table
        if num.is_zero():
            return num, LaurentPoly.one(table)
        shift = tuple(a - b for a, b in zip(num.shift, den.shift))
        p, q = num.poly, den.poly
        if len(q) > 1 or q.total_degree() > 0 or abs(int(q.coeffs()[0])) != 1:
            g = p.gcd(q)
            if g != 1:
                p = p / g
                q = q / g
        if int(q.coeffs()[0]) < 0:
            p, q = -p, -q
        return (LaurentPoly(table, p, shift, _normal=True),
                LaurentPoly(table, q, None, _normal=True))

    @property
    def table(self) -> SymbolTable:
        return self.num.table

    @classmethod
    def const(cls, table, c):
        c = Fraction(c)
        return cls(LaurentPoly.const(table, c.numerator), LaurentPoly.const(table, c.denominator))

    @classmethod
    def gen(cls, table, key):
        return cls(LaurentPoly.gen(table, key), _normal=True)

    @classmethod
    def from_laurent(cls, u: LaurentPoly):
        return cls(u, _normal=True)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.table != self.table:
                raise ValueError("operands live on different symbol tables")
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction.from_laurent(other)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.const(self.table, other)
        return NotImplemented

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def is_laurent(self):
        return self.den.is_constant() and self.den.constant_value() == 1

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _normal=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

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
        return RationalFunction(self.num ** n, self.den ** n, _normal=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def cleared(self):
        """Return polynomials ``(N, D)`` with negative exponents moved into ``D``."""
        table = self.table
        pos = tuple(max(s, 0) for s in self.num.shift)
        neg = tuple(max(-s, 0) for s in self.num.shift)
        n = LaurentPoly(table, self.num.poly, pos, _normal=True)
        d = LaurentPoly(table, self.den.poly, neg, _normal=True)
        return n, d

    def ord_total(self, keys=None) -> int:
        """max(total degree of numerator, of denominator) in ``keys``."""
        keys = self.table.names if keys is None else keys
        if self.is_zero():
            return 0
        n, d = self.cleared()
        return max(n.degree_in(keys), d.degree_in(keys))

    def specialize(self, assignment):
        num = self.num.specialize(assignment)
        den = self.den.specialize(assignment)
        if (isinstance(den, (int, Fraction)) and den == 0) or not den:
            raise ZeroInput("denominator vanishes under the specialization")
        return num / den if not isinstance(num, int) or not isinstance(den, int) else Fraction(num, den)

    def __repr__(self):
        return f"RationalFunction(({self.num.to_str(6)}) / ({self.den.to_str(6)}))"
