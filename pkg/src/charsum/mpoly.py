"""Multivariate polynomials with exact rational coefficients.

Terms map exponent tuples to nonzero Fractions; the zero polynomial has no
terms.  Everything is immutable after construction, so instances can be
shared across worker processes freely.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import BadPrimeError, CharsumError


def _as_fraction(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError("coefficients must be int or Fraction, got %r" % (c,))


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        cleaned = {}
        for expts, c in (terms or {}).items():
            expts = tuple(int(e) for e in expts)
            if len(expts) != nvars or any(e < 0 for e in expts):
                raise ValueError("bad exponent tuple %r for %d variables"
                                 % (expts, nvars))
            c = _as_fraction(c)
            if c:
                cleaned[expts] = cleaned.get(expts, Fraction(0)) + c
                if not cleaned[expts]:
                    del cleaned[expts]
        self.nvars = nvars
        self.terms = cleaned

    # -- constructors ------------------------------------------------

    @classmethod
    def constant(cls, c, nvars):
        return cls(nvars, {(0,) * nvars: _as_fraction(c)})

    @classmethod
    def variable(cls, i, nvars):
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def from_univariate(cls, coeffs, nvars=1, var=0):
        """Little-endian coefficient list -> polynomial in variable `var`."""
        terms = {}
        for k, c in enumerate(coeffs):
            e = [0] * nvars
            e[var] = k
            terms[tuple(e)] = _as_fraction(c)
        return cls(nvars, terms)

    # -- ring operations ---------------------------------------------

    def _binop(self, other, sign):
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(other, self.nvars)
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + sign * c
        return MPoly(self.nvars, terms)

    def __add__(self, other):
        return self._binop(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, -1)

    def __rsub__(self, other):
        return (-self)._binop(other, 1)

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.nvars,
                         {e: c * other for e, c in self.terms.items()})
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, MPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return "MPoly(%d, %r)" % (self.nvars, self.terms)

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var):
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    def variables_used(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return used

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(),
                      key=lambda t: (sum(t[0]), t[0]), reverse=True)

    # -- substitution and views ----------------------------------------

    def substitute(self, var, repl):
        """Replace variable `var` by a scalar or an MPoly (same nvars)."""
        if isinstance(repl, (int, Fraction)):
            repl = MPoly.constant(repl, self.nvars)
        out = MPoly(self.nvars, {})
        powers = {0: MPoly.constant(1, self.nvars)}
        for e, c in self.terms.items():
            k = e[var]
            if k not in powers:
                powers[k] = repl ** k
            rest = list(e)
            rest[var] = 0
            out = out + powers[k] * MPoly(self.nvars, {tuple(rest): c})
        return out

    def as_univariate_in(self, var):
        """Little-endian list of coefficient polynomials in `var`.

        Coefficients keep the same nvars with the `var` exponent zeroed.
        """
        d = max(self.degree_in(var), 0)
        coeffs = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            rest = list(e)
            k = rest[var]
            rest[var] = 0
            coeffs[k][tuple(rest)] = c
        return [MPoly(self.nvars, t) for t in coeffs]

    def univariate_coeffs(self, var=0):
        """Little-endian Fraction list; error if other variables occur."""
        d = max(self.degree_in(var), 0)
        out = [Fraction(0)] * (d + 1)
        for e, c in self.terms.items():
            if any(k and i != var for i, k in enumerate(e)):
                raise CharsumError("polynomial is not univariate")
            out[e[var]] = c
        return out

    def drop_unused_variables(self, names=None):
        """Project onto the variables that actually occur (for canonical
        comparison after printing).  Returns (poly, kept_indices)."""
        used = sorted(self.variables_used())
        if not used and self.terms:
            used = []
        terms = {}
        for e, c in self.terms.items():
            terms[tuple(e[i] for i in used)] = c
        return MPoly(len(used), terms), used

    # -- reduction mod p ------------------------------------------------

    def reduce_mod(self, p):
        """Terms with int coefficients in [0, p); drops vanishing terms."""
        out = {}
        for e, c in self.terms.items():
            r = frac_mod(c, p)
            if r:
                out[e] = r
        return out

    def eval_mod(self, p, point):
        """Exact evaluation at a residue tuple."""
        total = 0
        for e, c in self.terms.items():
            t = frac_mod(c, p)
            for x, k in zip(point, e):
                if k:
                    t = t * pow(int(x), k, p) % p
            total = (total + t) % p
        return total

    def eval_mod_arrays(self, p, arrays):
        """Vectorized evaluation over aligned numpy int64 arrays mod p.

        Requires p < 2^31 so products of residues stay inside int64.
        """
        if p >= 1 << 31:
            raise CharsumError("vectorized evaluation requires p < 2^31")
        shape = np.broadcast(*arrays).shape if arrays else ()
        total = np.zeros(shape, dtype=np.int64)
        for e, c in self.sorted_terms():
            t = np.full(shape, frac_mod(c, p), dtype=np.int64)
            for x, k in zip(arrays, e):
                if not k:
                    continue
                base = x % p
                while True:
                    if k & 1:
                        t = t * base % p
                    k >>= 1
                    if not k:
                        break
                    base = base * base % p
            total = (total + t) % p
        return total

    def eval_exact(self, point):
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * Fraction(x) ** k
            total += t
        return total


def frac_mod(c, p):
    """Fraction -> residue in [0, p); BadPrimeError if p divides the
    denominator."""
    c = _as_fraction(c)
    den = c.denominator % p
    if den == 0:
        raise BadPrimeError("bad prime %d: divides denominator of %s" % (p, c))
    return c.numerator % p * pow(den, -1, p) % p


# -- univariate utilities over Q (little-endian coefficient lists) -------

def poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def poly_degree(coeffs):
    coeffs = poly_trim(coeffs)
    return len(coeffs) - 1 if coeffs else -1


def poly_derivative(coeffs):
    return [k * c for k, c in enumerate(coeffs)][1:]


def poly_rem(f, g):
    """Remainder of f modulo g over Q, little-endian coefficient lists."""
    f = [_as_fraction(c) for c in poly_trim(f)]
    g = [_as_fraction(c) for c in poly_trim(g)]
    if not g:
        raise CharsumError("division by the zero polynomial")
    d = len(g) - 1
    inv = 1 / g[-1]
    while len(f) - 1 >= d:
        q = f[-1] * inv
        shift = len(f) - 1 - d
        for i, c in enumerate(g):
            f[shift + i] -= q * c
        f = poly_trim(f)
    return f


def resultant(f, g):
    """Resultant of two rational univariate polynomials via the Sylvester
    determinant, exact Gaussian elimination over Q."""
    f = [_as_fraction(c) for c in poly_trim(f)]
    g = [_as_fraction(c) for c in poly_trim(g)]
    n, m = len(f) - 1, len(g) - 1
    if n < 0 or m < 0:
        return Fraction(0)
    if n == 0:
        return f[0] ** m
    if m == 0:
        return g[0] ** n
    size = n + m
    rows = []
    frev, grev = f[::-1], g[::-1]
    for i in range(m):
        rows.append([Fraction(0)] * i + frev + [Fraction(0)] * (m - 1 - i))
    for i in range(n):
        rows.append([Fraction(0)] * i + grev + [Fraction(0)] * (n - 1 - i))
    det = Fraction(1)
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, size):
            if rows[r][col]:
                factor = rows[r][col] * inv
                for c in range(col, size):
                    rows[r][c] -= factor * rows[col][c]
    return det


def discriminant(f):
    """Discriminant of a rational univariate polynomial of degree >= 1."""
    f = poly_trim([_as_fraction(c) for c in f])
    d = len(f) - 1
    if d < 1:
        raise CharsumError("discriminant needs degree >= 1")
    if d == 1:
        return Fraction(1)
    res = resultant(f, poly_derivative(f))
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * res / f[-1]
