"""Finite fields F_{p^e}: descriptors, elements, trace, Frobenius.

An extension is represented by its canonical modulus: the monic
irreducible of degree e whose coefficient vector (read from the x^{e-1}
coefficient down to the constant) is lexicographically smallest.  Elements
are immutable coefficient vectors in the power basis of that modulus.
"""

from __future__ import annotations

from itertools import product

from . import fppoly
from .errors import CharsumError
from .primes import is_prime


def _check_prime(p):
    if not is_prime(p):
        raise CharsumError("%d is not prime" % p)


def _is_irreducible_mod(coeffs, p):
    """Rabin's criterion for a monic polynomial over F_p."""
    e = len(coeffs) - 1
    if e < 1:
        return False
    f = [c % p for c in coeffs]
    x = [0, 1]
    # distinct prime divisors of e
    divs = []
    m = e
    d = 2
    while d * d <= m:
        if m % d == 0:
            divs.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        divs.append(m)
    for r in divs:
        h = fppoly.powmod(x, p ** (e // r), f, p)
        g = fppoly.gcd(fppoly.sub(h, x, p), f, p)
        if fppoly.degree(g) != 0:
            return False
    h = fppoly.powmod(x, p ** e, f, p)
    return fppoly.sub(h, x, p) == []


class ExtFieldDesc:
    """Descriptor of F_{p^e}.  For e = 1 the modulus is x (the convention
    that makes residues their own coefficient vectors)."""

    __slots__ = ("p", "e", "modulus")

    def __init__(self, p, e, modulus=None):
        _check_prime(p)
        if e < 1:
            raise CharsumError("extension degree must be >= 1")
        if modulus is None:
            if e != 1:
                raise CharsumError("extension fields need an explicit "
                                   "modulus; use build_extension")
            modulus = (0, 1)
        modulus = tuple(int(c) % p for c in modulus[:-1]) + (int(modulus[-1]),)
        if len(modulus) != e + 1 or modulus[-1] != 1:
            raise CharsumError("modulus must be monic of degree e")
        if e > 1 and not _is_irreducible_mod(list(modulus), p):
            raise CharsumError("modulus is reducible over F_%d" % p)
        self.p = p
        self.e = e
        self.modulus = modulus

    @property
    def order(self):
        return self.p ** self.e

    def element(self, coeffs):
        if isinstance(coeffs, FqElem):
            if coeffs.field is not self and coeffs.field != self:
                raise CharsumError("element from a different field")
            return coeffs
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) > self.e:
            raise CharsumError("coefficient vector longer than degree")
        coeffs = coeffs + (0,) * (self.e - len(coeffs))
        return FqElem(self, coeffs)

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def generator(self):
        """The class of x (equals 0 for e = 1)."""
        return self.element((0, 1)) if self.e > 1 else self.zero()

    def elements(self):
        """All q elements in canonical (coefficient-vector lex) order."""
        for vec in product(range(self.p), repeat=self.e):
            yield FqElem(self, vec)

    def __eq__(self, other):
        return (isinstance(other, ExtFieldDesc) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return "ExtFieldDesc(p=%d, e=%d)" % (self.p, self.e)


def prime_field(p) -> ExtFieldDesc:
    return ExtFieldDesc(p, 1)


def build_extension(p, e) -> ExtFieldDesc:
    """F_{p^e} on the canonical (smallest) irreducible modulus."""
    _check_prime(p)
    if e == 1:
        return prime_field(p)
    for upper in product(range(p), repeat=e):
        # upper = (c_{e-1}, ..., c_0) so the scan order matches the
        # "smallest written form" convention.
        coeffs = list(upper[::-1]) + [1]
        if _is_irreducible_mod(coeffs, p):
            return ExtFieldDesc(p, e, tuple(coeffs))
    raise AssertionError("no irreducible of degree %d over F_%d" % (e, p))


class FqElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(int(c) % field.p for c in coeffs)

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise CharsumError("field mismatch: %r vs %r"
                                   % (self.field, other.field))
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, [(a + b) % p
                                   for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, [(-a) % p for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        prod = fppoly.mul(list(self.coeffs), list(other.coeffs), p)
        if self.field.e == 1:
            red = prod
        else:
            red = fppoly.mod(prod, list(self.field.modulus), p)
        red = red + [0] * (self.field.e - len(red))
        return FqElem(self.field, red)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        p = self.field.p
        if self.field.e == 1:
            return self.field.element(pow(self.coeffs[0], -1, p))
        # extended Euclid in F_p[x] against the modulus
        a = list(self.field.modulus)
        b = fppoly.trim(list(self.coeffs))
        t0, t1 = [], [1]
        while b:
            q, r = fppoly.divmod_poly(a, b, p)
            a, b = b, r
            t0, t1 = t1, fppoly.sub(t0, fppoly.mul(q, t1, p), p)
        inv_lead = pow(a[-1], -1, p)
        inv = fppoly.scalar_mul(t0, inv_lead, p)
        return self.field.element(tuple(inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def in_prime_field(self):
        return all(c == 0 for c in self.coeffs[1:])

    def residue(self):
        """The residue in [0, p) when the element lies in the prime
        subfield."""
        if not self.in_prime_field():
            raise CharsumError("element is not in the prime subfield")
        return self.coeffs[0]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __lt__(self, other):
        other = self._coerce(other)
        return self.coeffs < other.coeffs

    def __repr__(self):
        return "FqElem(%r in GF(%d^%d))" % (list(self.coeffs),
                                            self.field.p, self.field.e)


def frobenius(x: FqElem) -> FqElem:
    return x ** x.field.p


def fq_trace(x: FqElem) -> int:
    """Trace down to F_p, returned as a residue in [0, p)."""
    acc = x
    term = x
    for _ in range(x.field.e - 1):
        term = frobenius(term)
        acc = acc + term
    return acc.residue()


def sqrt_mod(a, p):
    """A square root of a mod p (odd p), or None if a is a non-residue.
    Tonelli-Shanks with a deterministic non-residue scan."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t = t * c % p
        r = r * b % p
    return r
