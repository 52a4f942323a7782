"""Exact Gaussian rationals p/q + (r/s)i."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _norm(x):
    # integer-valued parts are kept as int: int arithmetic is far cheaper than Fraction
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _norm(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return _norm(Fraction(x))
    raise TypeError(f"not an exact rational: {x!r}")


def _fmt(x) -> str:
    if type(x) is int:
        return str(x)
    return f"{x.numerator}/{x.denominator}"


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _norm(re))
        object.__setattr__(self, "im", _norm(im))

    @classmethod
    def _raw(cls, re, im):
        g = object.__new__(cls)
        object.__setattr__(g, "re", re)
        object.__setattr__(g, "im", im)
        return g

    @classmethod
    def coerce(cls, x) -> GaussianRational:
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        return cls(x)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational._raw(self.re, _norm(-self.im))

    def __neg__(self):
        return GaussianRational._raw(_norm(-self.re), _norm(-self.im))

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(_norm(self.re + other.re), _norm(self.im + other.im))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussianRational._raw(_norm(self.re - other.re), _norm(self.im - other.im))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if b == 0 and d == 0:
            return GaussianRational._raw(_norm(a * c), 0)
        return GaussianRational._raw(_norm(a * c - b * d), _norm(a * d + b * c))

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        a, b = self.re, self.im
        if b == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return GaussianRational._raw(_norm(Fraction(1) / a), 0)
        n = Fraction(a * a + b * b)
        return GaussianRational._raw(_norm(a / n), _norm(-b / n))

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({_fmt(self.re)!r}, {_fmt(self.im)!r})"

    def render(self) -> str:
        """Canonical text: ``p/q``, ``r/s*i`` or ``(p/q+r/s*i)``."""
        if self.im == 0:
            return _fmt(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{_fmt(self.im)}*i"
        if self.re == 0:
            return im
        sign = "" if im.startswith("-") else "+"
        return f"({_fmt(self.re)}{sign}{im})"

    __str__ = render


ZERO = GaussianRational._raw(0, 0)
ONE = GaussianRational._raw(1, 0)
I = GaussianRational._raw(0, 1)
