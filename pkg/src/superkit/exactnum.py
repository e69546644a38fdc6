"""Exact complex-rational scalars.

Every identity suite in the algebra core runs at zero tolerance, so the
universal coefficient type must never round.  ``QC`` is a complex number with
``Fraction`` real and imaginary parts, closed under +, -, *, / (nonzero
divisor).  Mixing a QC with a float or a python complex silently degrades to
python ``complex``; the numeric spin-geometry path relies on that.
"""

from __future__ import annotations

from fractions import Fraction

_EXACT = (int, Fraction)
_FLOATY = (float, complex)


class QC:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QC):
            return QC(self.re + other.re, self.im + other.im)
        if isinstance(other, _EXACT):
            return QC(self.re + other, self.im)
        if isinstance(other, _FLOATY):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QC(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, QC):
            return QC(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)
        if isinstance(other, _EXACT):
            return QC(self.re * other, self.im * other)
        if isinstance(other, _FLOATY):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, _EXACT):
            other = QC(other)
        if isinstance(other, QC):
            d = other.re * other.re + other.im * other.im
            if d == 0:
                raise ZeroDivisionError("division by zero QC")
            return QC((self.re * other.re + self.im * other.im) / d,
                      (self.im * other.re - self.re * other.im) / d)
        if isinstance(other, _FLOATY):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, _EXACT):
            return QC(other) / self
        if isinstance(other, _FLOATY):
            return other / complex(self)
        return NotImplemented

    # -- structure --------------------------------------------------------

    def conjugate(self):
        return QC(self.re, -self.im)

    def abs2(self):
        return self.re * self.re + self.im * self.im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, QC):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _EXACT):
            return self.im == 0 and self.re == other
        if isinstance(other, _FLOATY):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"QC({self.re})"
        return f"QC({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = QC(0)
ONE = QC(1)
I = QC(0, 1)


def qc(re=0, im=0):
    return QC(re, im)


def is_exact(z):
    return isinstance(z, (QC, int, Fraction))


def conj(z):
    """Complex conjugate for any scalar flavor (QC, complex, real)."""
    if isinstance(z, (QC, complex)):
        return z.conjugate()
    return z


def as_complex(z):
    if isinstance(z, QC):
        return complex(z)
    return complex(z)


def scal_is_zero(z, tol=0.0):
    if isinstance(z, QC):
        return not z
    if isinstance(z, _EXACT):
        return z == 0
    return abs(z) <= tol


def coerce(z):
    """Normalize a scalar to QC when exact, complex otherwise."""
    if isinstance(z, QC):
        return z
    if isinstance(z, _EXACT):
        return QC(z)
    return complex(z)


def from_pairs(re_num, re_den, im_num, im_den):
    return QC(Fraction(re_num, re_den), Fraction(im_num, im_den))


def to_pairs(z):
    z = coerce(z)
    if not isinstance(z, QC):
        raise TypeError("exact serialization requires exact scalars")
    return [z.re.numerator, z.re.denominator, z.im.numerator, z.im.denominator]
