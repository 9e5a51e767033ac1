"""Restriction of Laurent polynomials to random lines over F_p.

The coprimeness probe restricts two Laurent polynomials to random affine
lines ``x_i = c_i + d_i*t`` and takes univariate gcds.  A line on which
both restrictions keep their full total degree and have a trivial gcd
rules out a common polynomial factor, since any such factor would
survive restriction with positive degree.  A nontrivial gcd on every
probed line is only evidence of a common factor.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import flint

from ..errors import DegenerateLine
from .laurent import LaurentPoly
from .primefield import DEFAULT_PRIME, PrimeFieldRatFun

LIKELY_COPRIME = "LikelyCoprime"
COMMON_FACTOR_WITNESS = "CommonFactorWitness"


def _tctx(prime):
    return flint.nmod_mpoly_ctx.get(("t",), modulus=prime)


def _nctx(n, prime):
    return flint.nmod_mpoly_ctx.get(tuple(f"v{i}" for i in range(n)), modulus=prime)


def _to_nmod_poly(mp, prime):
    d = mp.to_dict()
    if not d:
        return flint.nmod_poly([], prime)
    deg = max(e[0] for e in d)
    co = [0] * (deg + 1)
    for e, c in d.items():
        co[e[0]] = int(c)
    return flint.nmod_poly(co, prime)


def _from_nmod_poly(poly, prime):
    tctx = _tctx(prime)
    return tctx.from_dict({(i,): int(c) for i, c in enumerate(poly.coeffs()) if int(c)})


def poly_part_at(u: LaurentPoly, values, prime=DEFAULT_PRIME):
    """Evaluate the content-free polynomial part of ``u`` at univariate polynomials.

    ``values`` lists one ``nmod_poly`` per symbol.  The monomial factor
    ``x**shift`` is left out.
    """
    n = len(u.table)
    if u.is_zero():
        return flint.nmod_poly([], prime)
    nctx = _nctx(n, prime)
    mp = nctx.from_dict({e: int(c) % prime for e, c in u.poly.terms()})
    images = [_from_nmod_poly(v, prime) for v in values]
    return _to_nmod_poly(mp.compose(*images, ctx=_tctx(prime)), prime)


def specialize_polynomial_values(u: LaurentPoly, values, prime=DEFAULT_PRIME) -> PrimeFieldRatFun:
    """Evaluate ``u`` where every value is a polynomial PrimeFieldRatFun."""
    polys = [v.num if isinstance(v, PrimeFieldRatFun) else flint.nmod_poly([int(v) % prime], prime) for v in values]
    body = PrimeFieldRatFun(poly_part_at(u, polys, prime), prime=prime)
    num = body.num
    den = flint.nmod_poly([1], prime)
    for i, s in enumerate(u.shift):
        if s > 0:
            num = num * polys[i] ** s
        elif s < 0:
            den = den * polys[i] ** (-s)
    return PrimeFieldRatFun(num, den, prime)


@dataclass
class Line:
    base: list
    direction: list

    def images(self, prime):
        return [flint.nmod_poly([c, d], prime) for c, d in zip(self.base, self.direction)]


def random_line(n, rng, prime=DEFAULT_PRIME):
    return Line([rng.randrange(1, prime) for _ in range(n)], [rng.randrange(1, prime) for _ in range(n)])


@dataclass
class ProbeResult:
    verdict: str
    seed: int
    trials: int
    gcd_degrees: list = field(default_factory=list)
    witness_line: Line | None = None

    @property
    def coprime(self):
        return self.verdict == LIKELY_COPRIME


def gcd_line_probe(u: LaurentPoly, v: LaurentPoly, seed: int = 0, trials: int = 3,
                   prime: int = DEFAULT_PRIME, max_retries: int = 20) -> ProbeResult:
    """Decide coprimeness of two Laurent polynomials by random line restriction."""
    if u.is_zero() or v.is_zero():
        raise ValueError("probe operands must be nonzero")
    if u.table != v.table:
        raise ValueError("operands live on different symbol tables")
    rng = random.Random(seed)
    du, dv = u.poly.total_degree(), v.poly.total_degree()
    if du == 0 or dv == 0:
        # a monomial times a constant has no polynomial factor
        return ProbeResult(LIKELY_COPRIME, seed, 0)
    degrees = []
    n = len(u.table)
    for _ in range(trials):
        for _attempt in range(max_retries):
            line = random_line(n, rng, prime)
            imgs = line.images(prime)
            ru = poly_part_at(u, imgs, prime)
            rv = poly_part_at(v, imgs, prime)
            if ru.degree() == du and rv.degree() == dv:
                break
        else:
            raise DegenerateLine(f"no degree-preserving line after {max_retries} attempts")
        g = ru.gcd(rv)
        degrees.append(g.degree())
        if g.degree() == 0:
            return ProbeResult(LIKELY_COPRIME, seed, len(degrees), degrees, line)
    return ProbeResult(COMMON_FACTOR_WITNESS, seed, len(degrees), degrees)
