"""Limited exact factorization: univariate roots in Q / Q(i) and the
linear factors of homogeneous bivariate forms.

This is deliberately not a general factorizer.  It covers what the
classifiers need: splitting tangent cones into candidate tangent lines and
splitting principal singular-locus generators into components.  Factors
that do not split over the ground field are reported as an explicit
remainder, never dropped.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from .poly import Polynomial, PolynomialError, as_univariate, exact_divide
from .scalars import GaussianRational, Scalar, sqrt_gaussian, to_gaussian

# norm bound for Gaussian-integer divisor enumeration
_GAUSS_NORM_CAP = 10**6


def _int_divisors(n: int) -> List[int]:
    n = abs(n)
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


def _gauss_int_divisors(z: GaussianRational) -> List[GaussianRational]:
    """Divisors of a Gaussian integer by norm-bounded search."""
    a, b = int(z.re), int(z.im)
    n = a * a + b * b
    if n == 0 or n > _GAUSS_NORM_CAP:
        return []
    out = []
    r = math.isqrt(n)
    for x in range(-r, r + 1):
        for y in range(0, r + 1):
            if x == 0 and y == 0:
                continue
            m = x * x + y * y
            if m == 0 or n % m:
                continue
            d = GaussianRational(x, y)
            q = z / d
            if q.re.denominator == 1 and q.im.denominator == 1:
                out.append(d)
    return out


def _clear_denominators(coeffs: List[Scalar]) -> List[Scalar]:
    dens = []
    for c in coeffs:
        if isinstance(c, GaussianRational):
            dens.extend([c.re.denominator, c.im.denominator])
        else:
            dens.append(c.denominator)
    lcm = 1
    for d in dens:
        lcm = lcm * d // math.gcd(lcm, d)
    return [c * lcm for c in coeffs]


def _root_candidates(coeffs: List[Scalar], gaussian: bool) -> List[Scalar]:
    """Candidate roots p/q with p | constant term, q | leading term."""
    ic = _clear_denominators(coeffs)
    lo, hi = ic[0], ic[-1]
    cands: List[Scalar] = []
    if gaussian:
        lo_g, hi_g = to_gaussian(lo), to_gaussian(hi)
        if lo_g.re.denominator == 1 and lo_g.im.denominator == 1:
            num_div = _gauss_int_divisors(lo_g)
            den_div = _gauss_int_divisors(hi_g)
            units = [GaussianRational(1), GaussianRational(-1),
                     GaussianRational(0, 1), GaussianRational(0, -1)]
            for p, q, u in itertools.product(num_div, den_div, units):
                cands.append(u * p / q)
    else:
        for p in _int_divisors(int(lo)):
            for q in _int_divisors(int(hi)):
                cands.append(Fraction(p, q))
                cands.append(Fraction(-p, q))
    seen = set()
    out = []
    for c in cands:
        k = (c.re, c.im) if isinstance(c, GaussianRational) else (c, Fraction(0))
        if k not in seen:
            seen.add(k)
            out.append(c)
    return out


def _eval_poly(coeffs: List[Scalar], x: Scalar) -> Scalar:
    acc: Scalar = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _deflate(coeffs: List[Scalar], root: Scalar) -> List[Scalar]:
    """Synthetic division of sum c[k] x^k by (x - root)."""
    out = []
    acc = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        out.append(acc)
        acc = coeffs[k] + acc * root
    out.reverse()
    return out


def _quadratic_roots(coeffs: List[Scalar]) -> Optional[List[Scalar]]:
    """Roots of c0 + c1 x + c2 x^2 over Q(i), or None if irrational."""
    c0, c1, c2 = (to_gaussian(c) for c in coeffs)
    disc = c1 * c1 - GaussianRational(4) * c2 * c0
    s = sqrt_gaussian(disc)
    if s is None:
        return None
    two_a = GaussianRational(2) * c2
    return [(-c1 + s) / two_a, (-c1 - s) / two_a]


def univariate_roots(
    coeffs: List[Scalar], gaussian: bool
) -> Tuple[List[Tuple[Scalar, int]], List[Scalar]]:
    """All roots of the dense univariate polynomial lying in the field.

    Returns (roots with multiplicity, remaining nonsplit coefficients).
    The remainder is [] when the polynomial splits completely (it is then
    a nonzero constant, which is dropped).
    """
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    if not cs:
        raise PolynomialError("root search on the zero polynomial")
    roots: List[Tuple[Scalar, int]] = []
    # x = 0 roots
    zmult = 0
    while len(cs) > 1 and not cs[0]:
        cs = cs[1:]
        zmult += 1
    if zmult:
        roots.append((GaussianRational(0) if gaussian else Fraction(0), zmult))
    progress = True
    while len(cs) > 1 and progress:
        progress = False
        for cand in _root_candidates(cs, gaussian):
            if not _eval_poly(cs, cand):
                mult = 0
                while len(cs) > 1 and not _eval_poly(cs, cand):
                    cs = _deflate(cs, cand)
                    mult += 1
                roots.append((cand, mult))
                progress = True
                break
        if not progress and len(cs) == 3:
            qr = _quadratic_roots(cs)
            if qr is not None:
                if qr[0] == qr[1]:
                    roots.append((qr[0], 2))
                else:
                    roots.append((qr[0], 1))
                    roots.append((qr[1], 1))
                cs = cs[-1:]
                progress = True
    remainder = cs if len(cs) > 1 else []
    return roots, remainder


def factor_homogeneous_bivariate(
    h: Polynomial, gaussian: bool = False
) -> Tuple[List[Tuple[Polynomial, int]], Optional[Polynomial]]:
    """Linear factors (with multiplicity) of a homogeneous form in 2 variables.

    Returns (factors, remainder): factors are linear forms over the ground
    field (Q, or Q(i) when gaussian=True); remainder is the nonsplit
    cofactor of positive degree, or None when the form splits completely.
    """
    if h.is_zero:
        raise PolynomialError("cannot factor the zero polynomial")
    if not h.is_homogeneous():
        raise PolynomialError("form is not homogeneous")
    sup = h.support_vars()
    if len(sup) > 2:
        raise PolynomialError("form involves more than two variables")
    ring = h.vars
    if len(sup) < 2:
        # monomial c * x^d (or constant): pure axis powers
        factors = []
        if sup:
            v = sup[0]
            d = h.degree_in(v)
            factors.append((Polynomial.variable(v, ring), d))
        return factors, None
    u, v = tuple(w for w in ring if w in sup)
    iu, iv = ring.index(u), ring.index(v)
    a = min(e[iu] for e in h.terms)
    b = min(e[iv] for e in h.terms)
    factors: List[Tuple[Polynomial, int]] = []
    if a:
        factors.append((Polynomial.variable(u, ring), a))
    if b:
        factors.append((Polynomial.variable(v, ring), b))
    core = h
    if a or b:
        shift = {
            tuple(
                d - (a if i == iu else b if i == iv else 0)
                for i, d in enumerate(e)
            ): c
            for e, c in h.terms.items()
        }
        core = Polynomial(ring, shift)
    if core.total_degree() == 0:
        return factors, None
    # dehomogenize: roots r of P(t) = core(t, 1) give factors u - r*v
    deg = core.total_degree()
    coeffs: List[Scalar] = [Fraction(0)] * (deg + 1)
    for e, c in core.terms.items():
        coeffs[e[iu]] = c
    roots, remainder = univariate_roots(coeffs, gaussian)
    uv = Polynomial.variable(u, ring)
    vv = Polynomial.variable(v, ring)
    for r, mult in roots:
        factors.append((_normalize_linear(uv - vv * r), mult))
    rem_poly = None
    if remainder:
        terms = {}
        for k, c in enumerate(remainder):
            if c:
                e = [0] * len(ring)
                e[iu] = k
                e[iv] = len(remainder) - 1 - k
                terms[tuple(e)] = c
        rem_poly = Polynomial(ring, terms)
    return factors, rem_poly


def _normalize_linear(lin: Polynomial) -> Polynomial:
    """Scale a linear form so its graded-lex leading coefficient is 1."""
    lead = max(lin.terms, key=lambda e: (sum(e), e))
    c = lin.terms[lead]
    return lin * (Fraction(1) / c if isinstance(c, Fraction) else to_gaussian(1) / c)


def proper_factors(g: Polynomial, gaussian: bool = False) -> List[Polynomial]:
    """Nontrivial factors of g that this module can certify.

    Used to split varieties into components; returns [] when nothing is
    found (g may still be reducible).
    """
    if g.is_zero or g.total_degree() <= 0:
        return []
    out: List[Polynomial] = []
    ring = g.vars
    # variable (monomial) content
    reduced = g
    for i, v in enumerate(ring):
        m = min(e[i] for e in reduced.terms)
        if m > 0:
            out.append(Polynomial.variable(v, ring))
            q = reduced
            for _ in range(m):
                q = exact_divide(q, Polynomial.variable(v, ring))
                assert q is not None
            reduced = q
    if reduced.total_degree() <= 0:
        return out
    sup = reduced.support_vars()
    if len(sup) == 1:
        var = sup[0]
        coeffs = [c.constant_term() for c in as_univariate(reduced.restrict(sup), var)]
        roots, _ = univariate_roots(coeffs, gaussian)
        xv = Polynomial.variable(var, ring)
        for r, _mult in roots:
            out.append(_normalize_linear(xv - Polynomial.constant(r, ring)))
    elif len(sup) == 2 and reduced.is_homogeneous():
        try:
            factors, _rem = factor_homogeneous_bivariate(reduced, gaussian)
        except PolynomialError:
            factors = []
        for f, _mult in factors:
            if f.total_degree() >= 1 and f != reduced:
                out.append(f)
    if len(out) == 1 and out[0] == g:
        return []
    dedup = []
    seen = set()
    for f in out:
        if f.key() not in seen and f.total_degree() >= 1:
            seen.add(f.key())
            dedup.append(f)
    return dedup
