"""Sparse multivariate Laurent polynomials with integer coefficients.

A nonzero Laurent polynomial is stored as ``poly * x**shift`` where
``poly`` is a flint ``fmpz_mpoly`` with no monomial content, i.e. no
variable divides every term.  This form is unique, so equality is
structural.  The zero polynomial has a zero shift.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from ..errors import DivisionByZero, NotDivisible, ZeroInput
from .symbols import Symbol, SymbolTable


class MultiIndex:
    """A Laurent monomial exponent vector over a symbol table."""

    __slots__ = ("table", "exps")

    def __init__(self, table: SymbolTable, exps):
        if isinstance(exps, Mapping):
            dense = [0] * len(table)
            for k, e in exps.items():
                dense[table.index(k)] += int(e)
            exps = dense
        exps = tuple(int(e) for e in exps)
        if len(exps) != len(table):
            raise ValueError("exponent vector length does not match the symbol table")
        self.table = table
        self.exps = exps

    @classmethod
    def unit(cls, table, key=None):
        m = cls(table, [0] * len(table))
        if key is None:
            return m
        e = list(m.exps)
        e[table.index(key)] = 1
        return cls(table, e)

    def as_dict(self):
        """Nonzero entries keyed by symbol name, in symbol order."""
        return {self.table.names[i]: e for i, e in enumerate(self.exps) if e}

    def __getitem__(self, key):
        return self.exps[self.table.index(key)]

    def __mul__(self, other):
        return MultiIndex(self.table, [a + b for a, b in zip(self.exps, other.exps)])

    def __truediv__(self, other):
        return MultiIndex(self.table, [a - b for a, b in zip(self.exps, other.exps)])

    def __pow__(self, n):
        return MultiIndex(self.table, [n * a for a in self.exps])

    def __eq__(self, other):
        if not isinstance(other, MultiIndex):
            return NotImplemented
        return self.table == other.table and self.exps == other.exps

    def __lt__(self, other):
        return self.exps < other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        body = "*".join(f"{n}^{e}" if e != 1 else n for n, e in self.as_dict().items())
        return f"MultiIndex({body or '1'})"

    def is_trivial(self):
        return not any(self.exps)


def _coerce_int(c):
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise TypeError("LaurentPoly coefficients must be integers")
        return c.numerator
    return int(c)


class LaurentPoly:
    """Immutable Laurent polynomial over the integers."""

    __slots__ = ("table", "poly", "shift")

    def __init__(self, table: SymbolTable, poly, shift=None, _normal=False):
        self.table = table
        n = len(table)
        shift = tuple(int(s) for s in shift) if shift is not None else (0,) * n
        if not _normal:
            if poly == 0:
                shift = (0,) * n
            else:
                # term_content also carries the integer content; keep only its monomial
                e = poly.term_content().monoms()[0]
                if any(e):
                    poly = poly / table.ctx.from_dict({tuple(e): 1})
                    shift = tuple(int(s + d) for s, d in zip(shift, e))
        self.poly = poly
        self.shift = shift

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, table):
        return cls(table, table.ctx.from_dict({}), _normal=True)

    @classmethod
    def const(cls, table, c):
        c = _coerce_int(c)
        if c == 0:
            return cls.zero(table)
        return cls(table, table.ctx.from_dict({(0,) * len(table): c}), _normal=True)

    @classmethod
    def one(cls, table):
        return cls.const(table, 1)

    @classmethod
    def gen(cls, table, key):
        return cls.monomial(table, MultiIndex.unit(table, key))

    @classmethod
    def monomial(cls, table, index, coeff=1):
        if not isinstance(index, MultiIndex):
            index = MultiIndex(table, index)
        coeff = _coerce_int(coeff)
        if coeff == 0:
            return cls.zero(table)
        poly = table.ctx.from_dict({(0,) * len(table): coeff})
        return cls(table, poly, index.exps, _normal=True)

    @classmethod
    def from_terms(cls, table, terms):
        """Build from ``{exponent tuple or MultiIndex or dict: coeff}`` or pairs."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = {}
        for e, c in items:
            if isinstance(e, MultiIndex):
                e = e.exps
            elif isinstance(e, Mapping):
                e = MultiIndex(table, e).exps
            e = tuple(int(v) for v in e)
            acc[e] = acc.get(e, 0) + _coerce_int(c)
        acc = {e: c for e, c in acc.items() if c}
        if not acc:
            return cls.zero(table)
        n = len(table)
        low = tuple(min(e[i] for e in acc) for i in range(n))
        poly = table.ctx.from_dict({tuple(a - b for a, b in zip(e, low)): c for e, c in acc.items()})
        return cls(table, poly, low, _normal=True)

    def _wrap(self, poly, shift):
        return LaurentPoly(self.table, poly, shift)

    def _mono(self, exps):
        return self.table.ctx.from_dict({tuple(exps): 1})

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.table != self.table:
                raise ValueError("operands live on different symbol tables")
            return other
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "fmpz":
            return LaurentPoly.const(self.table, other)
        return NotImplemented

    # inspection ---------------------------------------------------------
    def is_zero(self):
        return self.poly == 0

    def __bool__(self):
        return not self.is_zero()

    def __len__(self):
        return len(self.poly)

    def nterms(self):
        return len(self.poly)

    def terms(self):
        """List of ``(exponent tuple, int coefficient)`` in canonical order."""
        s = self.shift
        return [(tuple(a + b for a, b in zip(e, s)), int(c)) for e, c in self.poly.terms()]

    def term_dict(self):
        return dict(self.terms())

    def is_monomial(self):
        return len(self.poly) == 1

    def is_unit(self):
        return self.is_monomial() and abs(int(self.poly.coeffs()[0])) == 1

    def is_polynomial(self, keys=None):
        """True when no symbol in ``keys`` (default: all) has a negative exponent."""
        idx = range(len(self.table)) if keys is None else self.table.indices(keys)
        return all(self.shift[i] >= 0 for i in idx)

    def is_constant(self):
        return self.is_zero() or (self.is_monomial() and not any(self.shift) and not any(self.poly.monoms()[0]))

    def constant_value(self):
        if self.is_zero():
            return 0
        if not self.is_constant():
            raise ValueError("not a constant")
        return int(self.poly.coeffs()[0])

    def coefficient(self, exps):
        if isinstance(exps, MultiIndex):
            exps = exps.exps
        return self.term_dict().get(tuple(exps), 0)

    def ord_var(self, key) -> int:
        """Largest exponent of one symbol across the terms."""
        if self.is_zero():
            raise ZeroInput("ord_var of zero")
        i = self.table.index(key)
        return self.poly.degrees()[i] + self.shift[i]

    def valuation(self, key) -> int:
        """Smallest exponent of one symbol across the terms."""
        if self.is_zero():
            raise ZeroInput("valuation of zero")
        return self.shift[self.table.index(key)]

    def depends_on(self, key) -> bool:
        i = self.table.index(key)
        return not self.is_zero() and self.poly.degrees()[i] > 0

    def support(self):
        """Names of symbols that occur with a nonzero exponent somewhere."""
        if self.is_zero():
            return []
        deg = self.poly.degrees()
        return [n for i, n in enumerate(self.table.names) if deg[i] > 0 or self.shift[i] != 0]

    def degree_in(self, keys) -> int:
        """Maximal total degree over ``keys`` among the terms."""
        if self.is_zero():
            raise ZeroInput("degree of zero")
        idx = self.table.indices(keys)
        base = sum(self.shift[i] for i in idx)
        if len(idx) == len(self.table):
            return self.poly.total_degree() + base
        return base + max(sum(e[i] for i in idx) for e in self.poly.monoms())

    def low_degree_in(self, keys) -> int:
        """Minimal total degree over ``keys`` among the terms."""
        if self.is_zero():
            raise ZeroInput("degree of zero")
        idx = self.table.indices(keys)
        base = sum(self.shift[i] for i in idx)
        return base + min(sum(e[i] for i in idx) for e in self.poly.monoms())

    def monomial_content(self, keys=None):
        """Split off the largest monomial in ``keys`` dividing every term.

        Returns ``(m0, u1)`` with ``self == m0 * u1``; ``u1`` is a
        polynomial in ``keys`` that does not vanish when any single one
        of them is set to zero.
        """
        if self.is_zero():
            raise ZeroInput("monomial content of zero")
        idx = set(range(len(self.table)) if keys is None else self.table.indices(keys))
        content = [self.shift[i] if i in idx else 0 for i in range(len(self.table))]
        rest = [0 if i in idx else self.shift[i] for i in range(len(self.table))]
        return MultiIndex(self.table, content), LaurentPoly(self.table, self.poly, rest, _normal=True)

    # arithmetic ---------------------------------------------------------
    def __neg__(self):
        return LaurentPoly(self.table, -self.poly, self.shift, _normal=True)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = tuple(min(a, b) for a, b in zip(self.shift, other.shift))
        p = self.poly
        if low != self.shift:
            p = p * self._mono(a - b for a, b in zip(self.shift, low))
        q = other.poly
        if low != other.shift:
            q = q * self._mono(a - b for a, b in zip(other.shift, low))
        return self._wrap(p + q, low)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "fmpz":
            c = _coerce_int(other)
            if c == 0:
                return LaurentPoly.zero(self.table)
            return LaurentPoly(self.table, self.poly * c, self.shift, _normal=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero(self.table)
        # a product of content-free polynomials is content-free
        shift = tuple(a + b for a, b in zip(self.shift, other.shift))
        return LaurentPoly(self.table, self.poly * other.poly, shift, _normal=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n >= 0:
            if n == 0:
                return LaurentPoly.one(self.table)
            return LaurentPoly(self.table, self.poly ** n, tuple(n * s for s in self.shift), _normal=True)
        if not self.is_unit():
            raise NotDivisible("negative power of a non-unit")
        c = int(self.poly.coeffs()[0]) ** (-n)
        poly = self.table.ctx.from_dict({(0,) * len(self.table): c})
        return LaurentPoly(self.table, poly, tuple(n * s for s in self.shift), _normal=True)

    def exact_div(self, other):
        """Return ``w`` with ``w * other == self``; raise NotDivisible otherwise."""
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot divide by this type")
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        shift = tuple(a - b for a, b in zip(self.shift, other.shift))
        if self.is_zero():
            return LaurentPoly.zero(self.table)
        if other.is_monomial():
            c = int(other.poly.coeffs()[0])
            if c in (1, -1):
                return LaurentPoly(self.table, self.poly * c, shift, _normal=True)
            # both operands are content-free, so only the integer content matters
            if any(int(v) % c for v in self.poly.coeffs()):
                raise NotDivisible("integer coefficients are not divisible")
            poly = self.table.ctx.from_dict({e: int(v) // c for e, v in self.poly.terms()})
            return LaurentPoly(self.table, poly, shift, _normal=True)
        q, r = divmod(self.poly, other.poly)
        if r != 0:
            raise NotDivisible("no exact Laurent quotient")
        return LaurentPoly(self.table, q, shift, _normal=True)

    __truediv__ = exact_div

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.table == other.table and self.shift == other.shift and self.poly == other.poly
        if isinstance(other, (int, Fraction)):
            try:
                return self.is_constant() and self.constant_value() == other
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.table, self.shift, tuple((e, int(c)) for e, c in self.poly.terms())))

    # substitution -------------------------------------------------------
    def substitute(self, values: Mapping):
        """Partially evaluate at integer values, staying a LaurentPoly."""
        vals = {}
        for k, v in values.items():
            vals[self.table.index(k)] = _coerce_int(v)
        if self.is_zero():
            return self
        poly = self.poly.subs({i: v for i, v in vals.items()})
        shift = list(self.shift)
        scale_num, scale_den = 1, 1
        for i, v in vals.items():
            s = shift[i]
            if s and v == 0:
                if s < 0:
                    raise DivisionByZero(self.table.names[i], s)
                return LaurentPoly.zero(self.table)
            if s > 0:
                scale_num *= v ** s
            elif s < 0:
                scale_den *= v ** (-s)
            shift[i] = 0
        res = LaurentPoly(self.table, poly, shift) * scale_num
        if scale_den != 1:
            res = res.exact_div(LaurentPoly.const(self.table, scale_den))
        return res

    def embed(self, table: SymbolTable, rename: Mapping | None = None):
        """Move into another table, mapping symbols by (renamed) name."""
        rename = dict(rename or {})
        target = [table.index(rename.get(n, n)) for n in self.table.names]
        if self.is_zero():
            return LaurentPoly.zero(table)
        gens = table.ctx.gens()
        poly = self.poly.compose(*[gens[j] for j in target], ctx=table.ctx)
        shift = [0] * len(table)
        for i, j in enumerate(target):
            shift[j] += self.shift[i]
        return LaurentPoly(table, poly, shift)

    def specialize(self, assignment: Mapping):
        """Evaluate in a field given a value for every symbol that occurs.

        Values may be ints, Fractions or any field element supporting
        ``+ * ** /`` (for example PrimeFieldRatFun).  Symbols with
        exponent zero everywhere may be left out.
        """
        vals = {}
        for k, v in assignment.items():
            vals[self.table.index(k)] = v
        deg = self.poly.degrees() if not self.is_zero() else (0,) * len(self.table)
        for i, name in enumerate(self.table.names):
            if i not in vals and (deg[i] > 0 or self.shift[i] != 0):
                raise KeyError(f"no value assigned to {name}")
        for i, v in vals.items():
            if self.shift[i] < 0 and _is_zero(v):
                raise DivisionByZero(self.table.names[i], self.shift[i])
        if self.is_zero():
            return 0
        sample = next(iter(vals.values()), 1)
        if all(isinstance(v, (int, Fraction)) for v in vals.values()):
            return _eval_rational(self, vals)
        from .primefield import PrimeFieldRatFun
        from .probes import specialize_polynomial_values

        pf = [v for v in vals.values() if isinstance(v, PrimeFieldRatFun)]
        if pf and all(isinstance(v, (int, Fraction)) or (isinstance(v, PrimeFieldRatFun) and v.is_polynomial())
                      for v in vals.values()) and not any(isinstance(v, Fraction) and v.denominator != 1 for v in vals.values()):
            prime = pf[0].prime
            values = []
            for i in range(len(self.table)):
                v = vals.get(i, 1)
                values.append(v if isinstance(v, PrimeFieldRatFun) else PrimeFieldRatFun.const(prime, v))
            return specialize_polynomial_values(self, values, prime)
        return _eval_generic(self, vals, sample)

    # display ------------------------------------------------------------
    def __repr__(self):
        return f"LaurentPoly({self.to_str(max_terms=8)})"

    def __str__(self):
        return self.to_str()

    def to_str(self, max_terms=None):
        if self.is_zero():
            return "0"
        parts = []
        terms = self.terms()
        shown = terms if max_terms is None else terms[:max_terms]
        for e, c in shown:
            mon = "*".join(
                (n if v == 1 else f"{n}^{v}") for n, v in zip(self.table.names, e) if v
            )
            if not mon:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mon
            else:
                body = f"{abs(c)}*{mon}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        if len(shown) < len(terms):
            out += f" + ... ({len(terms)} terms)"
        return out


def _is_zero(v):
    if isinstance(v, (int, Fraction)):
        return v == 0
    return not bool(v)


def _eval_rational(u, vals):
    """Exact evaluation at rational points via flint."""
    import flint

    n = len(u.table)
    qctx = flint.fmpq_mpoly_ctx.get(tuple(f"v{i}" for i in range(n)), "lex")
    args = []
    for i in range(n):
        v = Fraction(vals.get(i, 1))
        args.append(flint.fmpq(v.numerator, v.denominator))
    q = qctx.from_dict({e: int(c) for e, c in u.poly.terms()})
    r = q(*args)
    out = Fraction(int(r.p), int(r.q))
    for i, s in enumerate(u.shift):
        if s:
            out *= Fraction(vals[i]) ** int(s)
    return out


def _eval_generic(u, vals, sample):
    """Term-by-term evaluation with cached powers."""
    cache = {}

    def power(i, e):
        key = (i, e)
        if key not in cache:
            cache[key] = vals[i] ** e
        return cache[key]

    total = None
    n = len(u.table)
    for e, c in u.terms():
        term = None
        for i in range(n):
            if e[i]:
                f = power(i, e[i])
                term = f if term is None else term * f
        if term is None:
            term = _lift(sample, c)
        else:
            term = term * c
        total = term if total is None else total + term
    return total


def _lift(sample, c):
    if hasattr(type(sample), "const") and not isinstance(sample, (int, Fraction)):
        try:
            return type(sample).const(sample, c)
        except TypeError:
            pass
    return sample * 0 + c


def laurent_gens(table: SymbolTable, keys: Iterable | None = None):
    keys = table.names if keys is None else keys
    return [LaurentPoly.gen(table, k) for k in keys]


__all__ = ["LaurentPoly", "MultiIndex", "Symbol", "SymbolTable", "laurent_gens"]
