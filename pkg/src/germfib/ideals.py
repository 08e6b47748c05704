"""Polynomial ideals and Groebner machinery.

Buchberger completion with the normal selection strategy, the coprimality
and chain criteria, and a hard pair budget: running out of budget raises
BudgetExceeded, which callers surface as an explicit "indeterminate"
outcome rather than a wrong answer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .orders import MonomialOrder, block_elimination, grevlex
from .poly import Exponents, Polynomial, PolynomialError
from .scalars import GaussianRational, Scalar

DEFAULT_PAIR_BUDGET = 50_000


class BudgetExceeded(RuntimeError):
    def __init__(self, pairs: int):
        super().__init__(f"Groebner pair budget exceeded after {pairs} pairs")
        self.pairs = pairs


@dataclass(frozen=True)
class Ideal:
    vars: Tuple[str, ...]
    gens: Tuple[Polynomial, ...]

    @classmethod
    def of(cls, gens: Sequence[Polynomial], vars: Sequence[str]) -> "Ideal":
        vs = tuple(vars)
        out = []
        for g in gens:
            if g.vars != vs:
                g = g.extend(vs)
            if not g.is_zero:
                out.append(g)
        return cls(vs, tuple(out))

    @property
    def is_zero_ideal(self) -> bool:
        return not self.gens

    def key(self):
        return (self.vars, frozenset(g.key() for g in self.gens))

    def __str__(self):
        from .syntax import format_ideal

        return format_ideal(self.gens)


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    order: MonomialOrder
    basis: Tuple[Polynomial, ...]
    reduced: bool = True

    @property
    def vars(self) -> Tuple[str, ...]:
        return self.ideal.vars

    @property
    def is_unit(self) -> bool:
        return any(b.total_degree() == 0 and not b.is_zero for b in self.basis)

    def key(self):
        return (self.vars, tuple(sorted(b.key() for b in self.basis)))


# -- term helpers -------------------------------------------------------------


def _lead(p: Polynomial, order: MonomialOrder) -> Tuple[Exponents, Scalar]:
    e = max(p.terms, key=order.key)
    return e, p.terms[e]


def _monomial_div(a: Exponents, b: Exponents) -> Optional[Exponents]:
    q = tuple(x - y for x, y in zip(a, b))
    return q if all(d >= 0 for d in q) else None


def _monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exponents, b: Exponents) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _scalar_inv(c: Scalar) -> Scalar:
    if isinstance(c, GaussianRational):
        return GaussianRational(1) / c
    return Fraction(1) / c


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    if p.is_zero:
        return p
    _, c = _lead(p, order)
    return p * _scalar_inv(c)


def normal_form(p: Polynomial, gb: "GroebnerBasis") -> Polynomial:
    """Remainder of multivariate division of p by the basis."""
    return _reduce(p, list(gb.basis), gb.order)


def _reduce(p: Polynomial, basis: List[Polynomial], order: MonomialOrder) -> Polynomial:
    if p.vars != basis[0].vars if basis else False:
        raise PolynomialError("variable mismatch in reduction")
    leads = [_lead(b, order) for b in basis]
    rem = Polynomial.zero(p.vars)
    work = p
    while not work.is_zero:
        we, wc = _lead(work, order)
        hit = None
        for (be, bc), b in zip(leads, basis):
            q = _monomial_div(we, be)
            if q is not None:
                hit = (q, wc, bc, b)
                break
        if hit is None:
            mono = Polynomial(p.vars, {we: wc})
            rem = rem + mono
            work = work - mono
        else:
            q, wc, bc, b = hit
            factor = Polynomial(p.vars, {q: wc * _scalar_inv(bc)})
            work = work - factor * b
    return rem


def _s_poly(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    fe, fc = _lead(f, order)
    ge, gc = _lead(g, order)
    l = _monomial_lcm(fe, ge)
    mf = Polynomial(f.vars, {_monomial_div(l, fe): _scalar_inv(fc)})
    mg = Polynomial(g.vars, {_monomial_div(l, ge): _scalar_inv(gc)})
    return mf * f - mg * g


def buchberger(
    ideal: Ideal,
    order: Optional[MonomialOrder] = None,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal for the given order."""
    if order is None:
        order = grevlex(ideal.vars)
    gens = [g for g in ideal.gens if not g.is_zero]
    if not gens:
        return GroebnerBasis(ideal, order, ())
    basis = [_monic(g, order) for g in gens]
    leads = [_lead(b, order)[0] for b in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed = set()
    count = 0

    def lcm_of(p):
        return _monomial_lcm(leads[p[0]], leads[p[1]])

    while pairs:
        pair = min(pairs, key=lambda p: order.key(lcm_of(p)))
        pairs.remove(pair)
        count += 1
        if count > pair_budget:
            raise BudgetExceeded(count)
        i, j = pair
        if _coprime(leads[i], leads[j]):
            processed.add(pair)
            continue
        # chain criterion: skip if some k divides the lcm and both other
        # pairs were already handled
        l = lcm_of(pair)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _monomial_div(l, leads[k]) is not None:
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in processed and pjk in processed:
                    skip = True
                    break
        if skip:
            processed.add(pair)
            continue
        s = _s_poly(basis[i], basis[j], order)
        r = _reduce(s, basis, order)
        processed.add(pair)
        if not r.is_zero:
            r = _monic(r, order)
            basis.append(r)
            leads.append(_lead(r, order)[0])
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))
    reduced = _interreduce(basis, order)
    return GroebnerBasis(ideal, order, tuple(reduced))


def _interreduce(basis: List[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    # minimalize: drop generators whose lead is divisible by another's
    basis = sorted(basis, key=lambda b: order.key(_lead(b, order)[0]))
    minimal: List[Polynomial] = []
    for b in basis:
        be = _lead(b, order)[0]
        if not any(
            _monomial_div(be, _lead(m, order)[0]) is not None for m in minimal
        ):
            minimal.append(b)
    # full interreduction
    out = []
    for i, b in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        if others:
            b = _reduce(b, others, order)
        if not b.is_zero:
            out.append(_monic(b, order))
    out.sort(key=lambda b: order.key(_lead(b, order)[0]))
    return out


def groebner(
    gens: Sequence[Polynomial],
    vars: Sequence[str],
    order: Optional[MonomialOrder] = None,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> GroebnerBasis:
    return buchberger(Ideal.of(gens, vars), order, pair_budget)


def in_ideal(p: Polynomial, gb: GroebnerBasis) -> bool:
    if not gb.basis:
        return p.is_zero
    return normal_form(p, gb).is_zero


def ideal_equal(a: Ideal, b: Ideal, pair_budget: int = DEFAULT_PAIR_BUDGET) -> bool:
    """Ideal equality via mutual normal-form reduction."""
    ga = buchberger(a, grevlex(a.vars), pair_budget)
    gb = buchberger(b, grevlex(b.vars), pair_budget)
    return reduced_bases_equal(ga, gb)


def reduced_bases_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    return set(p.key() for p in a.basis) == set(p.key() for p in b.basis)


# -- derived operations --------------------------------------------------------


def _fresh_var(vars: Tuple[str, ...], stem: str = "_t") -> str:
    if stem not in vars:
        return stem
    k = 0
    while f"{stem}{k}" in vars:
        k += 1
    return f"{stem}{k}"


def eliminate(
    ideal: Ideal, drop: Iterable[str], pair_budget: int = DEFAULT_PAIR_BUDGET
) -> Ideal:
    """Generators of the ideal intersected with the subring without `drop`.

    Defines the Zariski closure of the projection of the variety.
    """
    drop = tuple(d for d in ideal.vars if d in set(drop))
    keep = tuple(v for v in ideal.vars if v not in set(drop))
    if not drop:
        return ideal
    order = block_elimination(ideal.vars, drop)
    gb = buchberger(ideal, order, pair_budget)
    dropset = set(drop)
    didx = [i for i, v in enumerate(ideal.vars) if v in dropset]
    kept = [
        b.restrict(keep)
        for b in gb.basis
        if all(all(e[i] == 0 for i in didx) for e in b.terms)
    ]
    return Ideal.of(kept, keep)


def dimension(gb: GroebnerBasis) -> int:
    """Krull dimension of the quotient ring (dimension of the variety).

    Computed as the largest set S of variables such that no leading
    monomial of the basis is supported inside S; -1 for the unit ideal.
    """
    if gb.is_unit:
        return -1
    n = len(gb.vars)
    if not gb.basis:
        return n
    lead_support = []
    for b in gb.basis:
        e = _lead(b, gb.order)[0]
        lead_support.append(frozenset(i for i, d in enumerate(e) if d))
    for size in range(n, -1, -1):
        for combo in itertools.combinations(range(n), size):
            s = set(combo)
            if all(not sup <= s for sup in lead_support):
                return size
    return 0


def contains_origin(ideal: Ideal) -> bool:
    """True iff every generator vanishes at 0."""
    return all(not g.constant_term() for g in ideal.gens)


def radical_membership(
    p: Polynomial, ideal: Ideal, pair_budget: int = DEFAULT_PAIR_BUDGET
) -> bool:
    """True iff p lies in the radical of the ideal (Rabinowitsch trick)."""
    if p.is_zero:
        return True
    t = _fresh_var(ideal.vars)
    ext = ideal.vars + (t,)
    gens = [g.extend(ext) for g in ideal.gens]
    tv = Polynomial.variable(t, ext)
    gens.append(Polynomial.constant(1, ext) - tv * p.extend(ext))
    gb = buchberger(Ideal.of(gens, ext), grevlex(ext), pair_budget)
    return gb.is_unit


def saturate_by_poly(
    ideal: Ideal, f: Polynomial, pair_budget: int = DEFAULT_PAIR_BUDGET
) -> Ideal:
    """I : f^infinity via elimination of the Rabinowitsch variable."""
    if f.is_zero:
        raise PolynomialError("saturation by the zero polynomial")
    t = _fresh_var(ideal.vars)
    ext = ideal.vars + (t,)
    gens = [g.extend(ext) for g in ideal.gens]
    tv = Polynomial.variable(t, ext)
    gens.append(Polynomial.constant(1, ext) - tv * f.extend(ext))
    return eliminate(Ideal.of(gens, ext), (t,), pair_budget)


def intersect(
    a: Ideal, b: Ideal, pair_budget: int = DEFAULT_PAIR_BUDGET
) -> Ideal:
    """Ideal intersection via the one-parameter homotopy trick."""
    if a.vars != b.vars:
        raise PolynomialError("intersection over different rings")
    if a.is_zero_ideal or b.is_zero_ideal:
        return Ideal.of((), a.vars)
    s = _fresh_var(a.vars, "_s")
    ext = a.vars + (s,)
    sv = Polynomial.variable(s, ext)
    one = Polynomial.constant(1, ext)
    gens = [sv * g.extend(ext) for g in a.gens]
    gens += [(one - sv) * g.extend(ext) for g in b.gens]
    return eliminate(Ideal.of(gens, ext), (s,), pair_budget)


def saturate(
    ideal: Ideal, j: Ideal, pair_budget: int = DEFAULT_PAIR_BUDGET
) -> Ideal:
    """Saturation I : J^infinity, intersected over J's generators."""
    if j.is_zero_ideal:
        raise PolynomialError("saturation by the zero ideal")
    result: Optional[Ideal] = None
    for g in j.gens:
        part = saturate_by_poly(ideal, g, pair_budget)
        result = part if result is None else intersect(result, part, pair_budget)
    assert result is not None
    return Ideal.of(
        buchberger(result, grevlex(result.vars), pair_budget).basis, result.vars
    )
