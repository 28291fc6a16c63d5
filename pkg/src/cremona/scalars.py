"""Exact coefficient arithmetic: Q and a single quadratic extension Q(sqrt(d)).

A Scalar is a + b*sqrt(d) with a, b rational and d a fixed rational
discriminant.  Scalars from different extensions only mix when one of them
is plain rational (b = 0).  Perfect-square discriminants collapse to Q at
construction, so pure-rational computations never carry an extension around.
Towers of extensions are rejected: sqrt of a proper extension element that
does not land back in the field is simply unavailable (is_square returns
None).
"""

from __future__ import annotations

import cmath
import functools
import math
import re
from fractions import Fraction

from .errors import IncompatibleField

_Q = Fraction
_F0 = Fraction(0)


@functools.lru_cache(maxsize=4096)
def _sqrt_fraction(f):
    """Exact rational square root of a nonnegative Fraction, or None."""
    if f < 0:
        return None
    n, d = f.numerator, f.denominator
    rn = math.isqrt(n)
    rd = math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class Scalar:
    """Immutable element a + b*sqrt(d) of Q(sqrt(d))."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        if type(a) is not Fraction:
            a = Fraction(a)
        if type(b) is not Fraction:
            b = Fraction(b)
        if type(d) is not Fraction:
            d = Fraction(d)
        if b == 0:
            d = _F0
        else:
            r = _sqrt_fraction(d)
            if r is not None:
                a = a + b * r
                b = Fraction(0)
                d = Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def coerce(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar(x)
        raise TypeError(f"cannot coerce {x!r} to Scalar")

    def _join(self, other):
        """Common discriminant for an operation, or raise."""
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise IncompatibleField(f"sqrt({self.d}) vs sqrt({other.d})")

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def is_rational(self):
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return self.a == other.a
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = Scalar.coerce(other)
        d = self._join(other)
        return Scalar(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) + (-self)

    def __mul__(self, other):
        other = Scalar.coerce(other)
        d = self._join(other)
        return Scalar(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("scalar inverse of zero")
        n = self.a * self.a - self.b * self.b * self.d
        # n is the field norm; nonzero for nonzero elements of a real or
        # imaginary quadratic field with non-square d.
        return Scalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        r = Scalar(1)
        base = self
        while k:
            if k & 1:
                r = r * base
            base = base * base
            k >>= 1
        return r

    def conjugate(self):
        return Scalar(self.a, -self.b, self.d)

    # -- square roots inside the field ------------------------------------

    def sqrt_in_field(self, field_d=None):
        """A Scalar t with t*t == self, staying inside Q(sqrt(field_d)).

        field_d defaults to this scalar's own discriminant.  Returns None
        when no such square root exists in the field.
        """
        if field_d is None:
            field_d = self.d
        field_d = Fraction(field_d)
        if self.is_zero():
            return Scalar(0)
        if self.b == 0:
            r = _sqrt_fraction(self.a)
            if r is not None:
                return Scalar(r)
            if field_d != 0 and self.a != 0:
                q2 = self.a / field_d
                q = _sqrt_fraction(q2)
                if q is not None:
                    return Scalar(0, q, field_d)
            return None
        # self = a + b*sqrt(d), b != 0: solve (p + q*sqrt(d))^2 = self.
        # p^2 + q^2 d = a and 2pq = b  =>  p^2 solves X^2 - aX + b^2 d/4 = 0.
        disc = self.a * self.a - self.b * self.b * self.d
        rd = _sqrt_fraction(disc)
        if rd is None:
            return None
        for p2 in ((self.a + rd) / 2, (self.a - rd) / 2):
            p = _sqrt_fraction(p2)
            if p is not None and p != 0:
                q = self.b / (2 * p)
                cand = Scalar(p, q, self.d)
                if cand * cand == self:
                    return cand
        return None

    # -- embedding --------------------------------------------------------

    def to_complex(self):
        return embed_complex(self)

    # -- printing / parsing ------------------------------------------------

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        parts = []
        if self.a != 0:
            parts.append(str(self.a))
        bs = f"{self.b}*sqrt({self.d})"
        if self.b == 1:
            bs = f"sqrt({self.d})"
        elif self.b == -1:
            bs = f"-sqrt({self.d})"
        if parts and self.b > 0:
            parts.append("+ " + bs)
        elif parts:
            parts.append("- " + bs.lstrip("-"))
        else:
            parts.append(bs)
        return " ".join(parts)


ZERO = Scalar(0)
ONE = Scalar(1)


def scalar_arith(x, y, op):
    """Dispatch-style entry point used by the CLI layer."""
    x = Scalar.coerce(x)
    y = Scalar.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def embed_complex(x):
    """Lossy embedding Q(sqrt(d)) -> complex doubles."""
    x = Scalar.coerce(x)
    if x.b == 0:
        return complex(float(x.a), 0.0)
    s = cmath.sqrt(complex(float(x.d), 0.0))
    return complex(float(x.a), 0.0) + float(x.b) * s


_SQRT_TERM = re.compile(
    r"^\s*(?P<sign>[+-])?\s*(?P<coef>\d+(?:/\d+)?\s*\*)?\s*"
    r"sqrt\(\s*(?P<d>-?\d+(?:/\d+)?)\s*\)\s*$"
)


def parse_scalar(text, default_d=None):
    """Parse `p/q`, `sqrt(d)`, `r/s*sqrt(d)` or `p/q + r/s*sqrt(d)`."""
    text = text.strip()
    # split on the last top-level +/- that is not a leading sign
    for i in range(len(text) - 1, 0, -1):
        if text[i] in "+-" and text[i - 1] not in "*/+-eE(":
            left, right = text[:i], text[i:]
            if "sqrt" in right and "sqrt" not in left:
                rat = Fraction(left.replace(" ", ""))
                sq = _parse_sqrt_term(right)
                if sq is not None:
                    b, d = sq
                    return Scalar(rat, b, d)
            break
    sq = _parse_sqrt_term(text)
    if sq is not None:
        b, d = sq
        return Scalar(0, b, d)
    return Scalar(Fraction(text.replace(" ", "")))


def _parse_sqrt_term(text):
    m = _SQRT_TERM.match(text)
    if not m:
        return None
    coef = m.group("coef")
    if coef is None:
        b = Fraction(1)
    else:
        b = Fraction(coef.replace(" ", "").rstrip("*"))
    if m.group("sign") == "-":
        b = -b
    return b, Fraction(m.group("d"))
