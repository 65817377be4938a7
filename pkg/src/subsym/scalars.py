"""Exact scalar arithmetic: rationals and Gaussian rationals.

All computations in this package are exact.  The rational backend is
``gmpy2.mpq`` when available (noticeably faster on the large elimination
kernels) and ``fractions.Fraction`` otherwise.  Set the environment
variable ``SUBSYM_RATIONAL_BACKEND`` to ``gmpy2`` or ``fraction`` to force
a choice; the default ``auto`` prefers gmpy2.

A :class:`GaussianRational` is a + b*i with exact rational a, b.  Both
components are kept in lowest terms with positive denominator (the backend
types guarantee this).
"""

from __future__ import annotations

import os
from fractions import Fraction

_requested = os.environ.get("SUBSYM_RATIONAL_BACKEND", "auto").lower()

if _requested in ("auto", "gmpy2"):
    try:
        from gmpy2 import mpq as rat  # type: ignore

        RATIONAL_BACKEND = "gmpy2"
    except ImportError:
        if _requested == "gmpy2":
            raise
        rat = Fraction
        RATIONAL_BACKEND = "fraction"
elif _requested == "fraction":
    rat = Fraction
    RATIONAL_BACKEND = "fraction"
else:
    raise ValueError(
        f"unknown SUBSYM_RATIONAL_BACKEND {_requested!r}; use 'gmpy2', 'fraction' or 'auto'"
    )

RZERO = rat(0)
RONE = rat(1)


def rat_str(x) -> str:
    """Canonical string "p/q" for an exact rational (q always printed)."""
    f = Fraction(int(x.numerator), int(x.denominator))
    return f"{f.numerator}/{f.denominator}"


def parse_rat(s: str):
    if "/" in s:
        p, q = s.split("/")
        return rat(int(p), int(q))
    return rat(int(s))


class GaussianRational:
    """Exact complex number a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(RZERO) else rat(re)
        self.im = im if type(im) is type(RZERO) else rat(im)

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rational(x) -> "GaussianRational":
        return GaussianRational(x, RZERO)

    # -- predicates ---------------------------------------------------
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_rational(self) -> bool:
        return not self.im

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c, RZERO)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b = self.re, self.im
        n = a * a + b * b
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(a / n, -b / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if not other.im:
            if not other.re:
                raise ZeroDivisionError("division by zero Gaussian rational")
            return GaussianRational(self.re / other.re, self.im / other.re)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- comparison / hashing ------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)) or type(other) is type(RZERO):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- display --------------------------------------------------------
    def __str__(self):
        if not self.im:
            return rat_str(self.re)
        sign = "-" if self.im < 0 else "+"
        return f"{rat_str(self.re)}{sign}{rat_str(abs(self.im))}*i"

    def __repr__(self):
        return f"GaussianRational({self})"


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(rat(x), RZERO)


GR_ZERO = GaussianRational(0, 0)
GR_ONE = GaussianRational(1, 0)
GR_I = GaussianRational(0, 1)


def gr(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, Fractions and backend rationals."""
    return GaussianRational(rat(re), rat(im))


def parse_gr(s: str) -> GaussianRational:
    """Inverse of str(): parses "p/q" and "p/q+r/s*i" (also with '-')."""
    s = s.strip()
    if s.endswith("*i"):
        body = s[:-2]
        # split at the sign that separates the two fractions
        for pos in range(1, len(body)):
            if body[pos] in "+-" and body[pos - 1] not in "+-/":
                re_part, im_part = body[:pos], body[pos:]
                im = parse_rat(im_part[1:])
                if im_part[0] == "-":
                    im = -im
                return GaussianRational(parse_rat(re_part), im)
        raise ValueError(f"malformed Gaussian rational {s!r}")
    return GaussianRational(parse_rat(s), RZERO)
