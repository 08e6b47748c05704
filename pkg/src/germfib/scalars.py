"""Exact coefficient arithmetic: rationals and Gaussian rationals.

Plain rationals are ``fractions.Fraction``; the Gaussian field Q(i) is a thin
pair-of-Fractions class that interoperates with Fraction and int so that
polynomial code never needs to care which field it is over.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

Rational = Fraction


class GaussianRational:
    """An element a + b*i of Q(i), with a, b exact rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- predicates ------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(x) -> Optional["GaussianRational"]:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure -------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|z|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        # real values must hash like their Fraction counterpart
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        istr = "i" if mag == 1 else f"{mag}i"
        return f"{self.re}{sign}{istr}"


I = GaussianRational(0, 1)

Scalar = Union[Fraction, GaussianRational]


def to_gaussian(x) -> GaussianRational:
    g = GaussianRational._coerce(x)
    if g is None:
        raise TypeError(f"cannot coerce {x!r} to GaussianRational")
    return g


def scalar_conj(x: Scalar) -> Scalar:
    return x.conjugate() if isinstance(x, GaussianRational) else x


def scalar_re(x: Scalar) -> Fraction:
    return x.re if isinstance(x, GaussianRational) else Fraction(x)


def scalar_im(x: Scalar) -> Fraction:
    return x.im if isinstance(x, GaussianRational) else Fraction(0)


def scalar_to_complex(x: Scalar) -> complex:
    if isinstance(x, GaussianRational):
        return complex(x)
    return complex(float(x), 0.0)


def _isqrt_exact(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def sqrt_fraction(q: Fraction) -> Optional[Fraction]:
    """Exact nonnegative square root of q in Q, or None."""
    if q < 0:
        return None
    a = _isqrt_exact(q.numerator)
    b = _isqrt_exact(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def sqrt_gaussian(q: Scalar) -> Optional[GaussianRational]:
    """Exact square root of q in Q(i), or None when no such root exists."""
    z = to_gaussian(q)
    if not z.im:
        r = sqrt_fraction(z.re)
        if r is not None:
            return GaussianRational(r)
        r = sqrt_fraction(-z.re)
        if r is not None:
            return GaussianRational(0, r)
        return None
    n = sqrt_fraction(z.norm2())
    if n is None:
        return None
    s2 = (z.re + n) / 2
    s = sqrt_fraction(s2)
    if s is None or not s:
        return None
    t = z.im / (2 * s)
    cand = GaussianRational(s, t)
    return cand if cand * cand == z else None


def _iroot_exact(n: int, k: int) -> Optional[int]:
    if n < 0:
        return None
    if n in (0, 1):
        return n
    r = round(n ** (1.0 / k))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    return None


def nth_root_gaussian(b: Scalar, p: int) -> Optional[GaussianRational]:
    """A p-th root of b inside Q(i) when one is exactly representable.

    Handles real radicands and repeated square roots; other cases return
    None and callers fall back to a unit-rescaled parametrization.
    """
    z = to_gaussian(b)
    if p == 1:
        return z
    if p == 2:
        return sqrt_gaussian(z)
    if not z.im:
        q = z.re
        neg = q < 0
        if neg and p % 2 == 0:
            # try i-multiples for even p only via repeated sqrt below
            pass
        else:
            mag = -q if neg else q
            a = _iroot_exact(mag.numerator, p)
            c = _iroot_exact(mag.denominator, p)
            if a is not None and c is not None:
                root = Fraction(a, c)
                return GaussianRational(-root if neg else root)
    if p % 2 == 0:
        half = sqrt_gaussian(z)
        if half is not None:
            return nth_root_gaussian(half, p // 2)
    return None
