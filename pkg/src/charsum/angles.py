"""Exact angles on the circle and additive characters.

An Angle is a reduced fraction a/b taken mod 1, standing for the point
exp(2*pi*i*a/b).  All character values are produced as Angles; complex
doubles appear only when a caller asks for them.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .errors import CharsumError
from .ffield import ExtFieldDesc, FqElem, fq_trace


class Angle:
    __slots__ = ("frac",)

    def __init__(self, value):
        if isinstance(value, Angle):
            frac = value.frac
        else:
            frac = Fraction(value)
        self.frac = frac - (frac.numerator // frac.denominator)

    def __add__(self, other):
        return Angle(self.frac + Angle(other).frac)

    __radd__ = __add__

    def __neg__(self):
        return Angle(-self.frac)

    def __sub__(self, other):
        return Angle(self.frac - Angle(other).frac)

    def __rsub__(self, other):
        return Angle(Angle(other).frac - self.frac)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Angle(self.frac * k)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Angle):
            return self.frac == other.frac
        if isinstance(other, (int, Fraction)):
            return self == Angle(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.frac)

    def __lt__(self, other):
        return self.frac < Angle(other).frac

    def __repr__(self):
        return "Angle(%s)" % self

    def __str__(self):
        return "%d/%d" % (self.frac.numerator, self.frac.denominator)

    def to_complex(self) -> complex:
        return cmath.exp(2j * cmath.pi * float(self.frac))

    def circle_distance(self, other) -> Fraction:
        d = (self - Angle(other)).frac
        return min(d, 1 - d)

    def nearest_multiple(self, n: int):
        """(t, distance): the index t in [0, n) of the closest multiple
        t/n on the circle, and the exact distance to it."""
        if n < 1:
            raise CharsumError("n must be >= 1")
        scaled = self.frac * n
        t = (2 * scaled.numerator + scaled.denominator) // (
            2 * scaled.denominator)  # floor(scaled + 1/2)
        dist = abs(scaled - t) / n
        return t % n, dist


def angle_to_complex(angle: Angle) -> complex:
    return angle.to_complex()


def psi_p(a: int, p: int) -> Angle:
    """The standard character of F_p: a residue class goes to a/p."""
    return Angle(Fraction(int(a) % p, p))


@dataclass(frozen=True)
class CharacterDesc:
    """An additive character of F_q: the trace-lift of psi_p composed with
    multiplication by `twist`.  twist = 1 is the standard character; every
    character of F_q arises from exactly one twist (0 gives the trivial
    one)."""

    field: ExtFieldDesc
    twist: FqElem

    def psi(self, x) -> Angle:
        x = self.field.element(x)
        return psi_p(fq_trace(self.twist * x), self.field.p)


def standard_character(field: ExtFieldDesc) -> CharacterDesc:
    return CharacterDesc(field, field.one())


def twisted_character(field: ExtFieldDesc, c) -> CharacterDesc:
    return CharacterDesc(field, field.element(c))


def trivial_character(field: ExtFieldDesc) -> CharacterDesc:
    return CharacterDesc(field, field.zero())


def psi_q(x, char: CharacterDesc) -> Angle:
    """Character value at x as an exact angle."""
    return char.psi(x)
