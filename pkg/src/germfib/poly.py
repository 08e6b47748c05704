"""Exact multivariate polynomials over Q or Q(i).

A polynomial is a map from exponent vectors (one entry per variable) to
nonzero exact scalars.  Everything is immutable by convention; all module
functions are pure.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .scalars import GaussianRational, Scalar, scalar_conj

Exponents = Tuple[int, ...]


class PolynomialError(ValueError):
    pass


class Polynomial:
    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Dict[Exponents, Scalar]):
        vs = tuple(vars)
        clean: Dict[Exponents, Scalar] = {}
        for exps, c in terms.items():
            if len(exps) != len(vs):
                raise PolynomialError(
                    f"exponent vector {exps} does not match variables {vs}"
                )
            if c:
                clean[tuple(exps)] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Polynomial":
        return cls(vars, {})

    @classmethod
    def constant(cls, c, vars: Sequence[str]) -> "Polynomial":
        c = _coerce_scalar(c)
        return cls(vars, {(0,) * len(tuple(vars)): c} if c else {})

    @classmethod
    def variable(cls, name: str, vars: Sequence[str]) -> "Polynomial":
        vs = tuple(vars)
        if name not in vs:
            raise PolynomialError(f"unknown variable {name!r}")
        e = tuple(1 if v == name else 0 for v in vs)
        return cls(vs, {e: Fraction(1)})

    # -- basic structure ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def order_at_origin(self) -> int:
        """Minimal total degree of a term; -1 for zero."""
        if not self.terms:
            return -1
        return max(0, min(sum(e) for e in self.terms))

    def degree_in(self, var: str) -> int:
        i = self._var_index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def _var_index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise PolynomialError(f"unknown variable {var!r}") from None

    def key(self):
        """Hashable structural key (used for seen-sets, not ordering)."""
        return (self.vars, frozenset(self.terms.items()))

    def support_vars(self) -> Tuple[str, ...]:
        used = [False] * len(self.vars)
        for e in self.terms:
            for i, d in enumerate(e):
                if d:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.vars != other.vars:
            raise PolynomialError(
                f"variable mismatch: {self.vars} vs {other.vars}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(other, self.vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(other, self.vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _coerce_scalar(other)
            if not c:
                return Polynomial.zero(self.vars)
            return Polynomial(
                self.vars, {e: c * v for e, v in self.terms.items()}
            )
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        out: Dict[Exponents, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Polynomial(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolynomialError("only nonnegative integer powers")
        out = Polynomial.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = Polynomial.constant(other, self.vars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        from .syntax import format_polynomial

        return f"<poly {format_polynomial(self)}>"

    # -- calculus & evaluation ----------------------------------------------

    def differentiate(self, var: str) -> "Polynomial":
        """Formal partial derivative with respect to var."""
        i = self._var_index(var)
        out: Dict[Exponents, Scalar] = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                s = out.get(ne, 0) + c * e[i]
                if s:
                    out[ne] = s
                else:
                    out.pop(ne, None)
        return Polynomial(self.vars, out)

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        """Exact evaluation; point gives one scalar per variable."""
        pt = tuple(point)
        if len(pt) != len(self.vars):
            raise PolynomialError(
                f"arity mismatch: {len(pt)} values for {len(self.vars)} variables"
            )
        total: Scalar = Fraction(0)
        for e, c in self.terms.items():
            v: Scalar = c
            for x, d in zip(pt, e):
                if d:
                    v = v * (_coerce_scalar(x) ** d)
            total = total + v
        return total

    def evaluate_map(self, point: Dict[str, Scalar]) -> Scalar:
        return self.evaluate([point[v] for v in self.vars])

    def substitute(
        self, mapping: Dict[str, "Polynomial"], target_vars: Sequence[str]
    ) -> "Polynomial":
        """Substitute polynomials for variables; unmapped variables must
        exist in the target ring."""
        tv = tuple(target_vars)
        images = []
        for v in self.vars:
            if v in mapping:
                img = mapping[v]
                if img.vars != tv:
                    raise PolynomialError("substitution image in wrong ring")
                images.append(img)
            else:
                images.append(Polynomial.variable(v, tv))
        out = Polynomial.zero(tv)
        pow_cache: Dict[Tuple[int, int], Polynomial] = {}
        for e, c in self.terms.items():
            term = Polynomial.constant(c, tv)
            for i, d in enumerate(e):
                if d:
                    key = (i, d)
                    if key not in pow_cache:
                        pow_cache[key] = images[i] ** d
                    term = term * pow_cache[key]
            out = out + term
        return out

    def extend(self, new_vars: Sequence[str]) -> "Polynomial":
        """Re-express in a larger ring containing all current variables."""
        nv = tuple(new_vars)
        idx = []
        for v in self.vars:
            if v not in nv:
                raise PolynomialError(f"extend drops variable {v!r}")
            idx.append(nv.index(v))
        out: Dict[Exponents, Scalar] = {}
        for e, c in self.terms.items():
            ne = [0] * len(nv)
            for j, d in zip(idx, e):
                ne[j] = d
            out[tuple(ne)] = c
        return Polynomial(nv, out)

    def restrict(self, sub_vars: Sequence[str]) -> "Polynomial":
        """Re-express in a subring; fails if other variables occur."""
        sv = tuple(sub_vars)
        pos = {v: i for i, v in enumerate(self.vars)}
        drop = [i for v, i in pos.items() if v not in sv]
        out: Dict[Exponents, Scalar] = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise PolynomialError("polynomial not contained in subring")
            out[tuple(e[pos[v]] for v in sv)] = c
        return Polynomial(sv, out)

    def conjugate_coefficients(self) -> "Polynomial":
        return Polynomial(
            self.vars, {e: scalar_conj(c) for e, c in self.terms.items()}
        )

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial(self.vars, {e: fn(c) for e, c in self.terms.items()})

    def tangent_cone(self) -> "Polynomial":
        """Sum of the terms of minimal total degree (initial form at 0)."""
        if self.is_zero:
            raise PolynomialError("tangent cone of the zero polynomial")
        if self.constant_term():
            raise PolynomialError("not a germ through origin")
        m = min(sum(e) for e in self.terms)
        return Polynomial(
            self.vars, {e: c for e, c in self.terms.items() if sum(e) == m}
        )


def _coerce_scalar(c) -> Scalar:
    if isinstance(c, (Fraction, GaussianRational)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise PolynomialError(f"bad coefficient {c!r}")


# -- single-divisor division and friends -------------------------------------


def _grlex_key(e: Exponents):
    return (sum(e), e)


def _lead(p: Polynomial) -> Tuple[Exponents, Scalar]:
    e = max(p.terms, key=_grlex_key)
    return e, p.terms[e]


def exact_divide(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """Quotient q with f == q*g when g divides f in the polynomial ring.

    Returns None when g does not divide f; raises on g == 0.
    """
    if g.is_zero:
        raise PolynomialError("division by the zero polynomial")
    f._check_ring(g)
    if f.is_zero:
        return Polynomial.zero(f.vars)
    ge, gc = _lead(g)
    q = Polynomial.zero(f.vars)
    r = f
    while not r.is_zero:
        re_, rc = _lead(r)
        diff = tuple(a - b for a, b in zip(re_, ge))
        if any(d < 0 for d in diff):
            return None
        c = rc / gc if isinstance(rc, Fraction) and isinstance(gc, Fraction) else _div_scalar(rc, gc)
        mono = Polynomial(f.vars, {diff: c})
        q = q + mono
        r = r - mono * g
    return q


def _div_scalar(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        from .scalars import to_gaussian

        return to_gaussian(a) / to_gaussian(b)
    return Fraction(a) / Fraction(b)


def as_univariate(p: Polynomial, var: str) -> list:
    """Coefficients of p as a polynomial in var, each over the other vars.

    Returns list c[0..d] with p = sum c[k] * var^k.
    """
    i = p._var_index(var)
    others = tuple(v for v in p.vars if v != var)
    d = max((e[i] for e in p.terms), default=0)
    buckets: list = [dict() for _ in range(d + 1)]
    for e, c in p.terms.items():
        rest = tuple(x for j, x in enumerate(e) if j != i)
        buckets[e[i]][rest] = c
    return [Polynomial(others, b) for b in buckets]


def det_bareiss(rows: list) -> Polynomial:
    """Fraction-free determinant of a square matrix of polynomials."""
    n = len(rows)
    if n == 0:
        raise PolynomialError("empty matrix")
    vars_ = rows[0][0].vars
    m = [list(r) for r in rows]
    sign = 1
    prev = Polynomial.constant(1, vars_)
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if pivot is None:
                return Polynomial.zero(vars_)
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = exact_divide(num, prev)
                assert q is not None, "Bareiss division must be exact"
                m[i][j] = q
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return out if sign == 1 else -out


def matrix_minors(rows: list, size: int) -> list:
    """All size x size minors of a rectangular polynomial matrix."""
    nr, nc = len(rows), len(rows[0]) if rows else 0
    if size > nr or size > nc:
        return []
    out = []
    for ri in itertools.combinations(range(nr), size):
        for ci in itertools.combinations(range(nc), size):
            sub = [[rows[i][j] for j in ci] for i in ri]
            out.append(det_bareiss(sub))
    return out


def resultant(f: Polynomial, g: Polynomial, var: str) -> Polynomial:
    """Sylvester resultant of f and g with respect to var."""
    if f.is_zero or g.is_zero:
        raise PolynomialError("resultant of zero polynomial")
    fc = as_univariate(f, var)
    gc = as_univariate(g, var)
    m, n = len(fc) - 1, len(gc) - 1
    if m == 0 and n == 0:
        raise PolynomialError(f"both polynomials constant in {var!r}")
    others = fc[0].vars
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    size = m + n
    zero = Polynomial.zero(others)
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return det_bareiss(rows)
