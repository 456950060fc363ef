"""Number fields presented by a monic integer polynomial, with explicit
irreducibility certificates, reduction maps to prime fields, and exact
integer-lattice calculations on coordinate vectors.

Everything here is Fraction arithmetic; nothing is floated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import BadPrimeError, CharsumError
from .ffield import _is_irreducible_mod
from .mpoly import MPoly, discriminant, frac_mod, poly_rem, poly_trim
from .primes import primes_in
from .angles import Angle

CERT_PRIME_COUNT = 25


def _int_coeffs(f):
    """Little-endian integer coefficients of a monic defining polynomial."""
    if isinstance(f, MPoly):
        f = f.univariate_coeffs()
    coeffs = [Fraction(c) for c in f]
    coeffs = poly_trim(coeffs)
    if len(coeffs) < 2:
        raise CharsumError("defining polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise CharsumError("defining polynomial must be monic")
    if any(c.denominator != 1 for c in coeffs):
        raise CharsumError("defining polynomial must have integer coefficients")
    return [int(c) for c in coeffs]


def _poly_str(coeffs):
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "x" if mag == 1 else "%d*x" % mag
        else:
            body = "x^%d" % k if mag == 1 else "%d*x^%d" % (mag, k)
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts) if parts else "0"


def _integer_roots(coeffs):
    """Integer roots of a monic integer polynomial (all rational roots of a
    monic polynomial are integers dividing the constant term)."""
    c0 = coeffs[0]
    if c0 == 0:
        return [0]
    roots = []
    d = 1
    while d * d <= abs(c0):
        if c0 % d == 0:
            for r in {d, -d, c0 // d, -(c0 // d)}:
                val = 0
                for c in reversed(coeffs):
                    val = val * r + c
                if val == 0:
                    roots.append(r)
        d += 1
    return sorted(set(roots))


def _gcd_poly_q(f, g):
    """Monic gcd over Q of little-endian Fraction coefficient lists."""
    f = poly_trim([Fraction(c) for c in f])
    g = poly_trim([Fraction(c) for c in g])
    while g:
        f, g = g, poly_rem(f, g)
    if not f:
        return []
    inv = 1 / f[-1]
    return [c * inv for c in f]


@dataclass(frozen=True)
class NumberFieldDesc:
    coeffs: tuple       # little-endian integer, monic
    degree: int
    disc: Fraction
    certificate: str

    def __repr__(self):
        return "NumberFieldDesc(%s, certificate=%r)" % (
            _poly_str(self.coeffs), self.certificate)


def nf_build(f) -> NumberFieldDesc:
    """Build a number field from a monic integer polynomial, refusing to
    proceed without an irreducibility certificate.

    Certificates, in the order tried: degree 1; no rational roots (full
    proof for degrees 2 and 3); irreducible mod p for a good prime p.
    """
    coeffs = _int_coeffs(f)
    deg = len(coeffs) - 1
    disc = discriminant(coeffs)
    if disc == 0:
        der = [k * c for k, c in enumerate(coeffs)][1:]
        rep = _gcd_poly_q(coeffs, der)
        raise CharsumError("reducible: repeated factor %s"
                           % _poly_str([Fraction(c) for c in rep]))
    if deg == 1:
        return NumberFieldDesc(tuple(coeffs), 1, disc, "degree 1")
    roots = _integer_roots(coeffs)
    if roots:
        r = roots[0]
        factor = _poly_str([-r, 1])
        raise CharsumError("reducible: divisible by %s" % factor)
    if deg <= 3:
        return NumberFieldDesc(tuple(coeffs), deg, disc,
                               "no rational roots (degree %d)" % deg)
    tried = 0
    for p in primes_in(10 ** 4):
        if disc.numerator % p == 0:
            continue
        tried += 1
        if _is_irreducible_mod([c % p for c in coeffs], p):
            return NumberFieldDesc(tuple(coeffs), deg, disc,
                                   "irreducible mod %d" % p)
        if tried >= CERT_PRIME_COUNT:
            break
    raise CharsumError("certificate not found: no irreducibility proof "
                       "within %d primes" % CERT_PRIME_COUNT)


class NFElem:
    """Element of a number field, as Fraction coordinates in the power
    basis 1, b, ..., b^(deg-1) of the defining root b."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != field.degree:
            raise CharsumError("expected %d coordinates, got %d"
                               % (field.degree, len(coords)))
        self.field = field
        self.coords = coords

    @classmethod
    def rational(cls, field, value):
        return cls(field, (Fraction(value),) + (Fraction(0),) * (field.degree - 1))

    @classmethod
    def generator(cls, field):
        if field.degree == 1:
            return cls.rational(field, -field.coeffs[0])
        coords = [Fraction(0)] * field.degree
        coords[1] = Fraction(1)
        return cls(field, coords)

    def _check(self, other):
        if isinstance(other, NFElem):
            if other.field != self.field:
                raise CharsumError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return NFElem.rational(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElem(self.field,
                      [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return NFElem(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        deg = self.field.degree
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    prod[i + j] += a * b
        f = self.field.coeffs
        for k in range(len(prod) - 1, deg - 1, -1):
            c = prod[k]
            if not c:
                continue
            prod[k] = Fraction(0)
            for i in range(deg):
                prod[k - deg + i] -= c * f[i]
        return NFElem(self.field, prod[:deg])

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise CharsumError("exponent must be a nonnegative integer")
        out = NFElem.rational(self.field, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return (isinstance(other, NFElem) and other.field == self.field
                and other.coords == self.coords)

    def __hash__(self):
        return hash((self.field.coeffs, self.coords))

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise CharsumError("element is not rational")
        return self.coords[0]

    def __repr__(self):
        return "NFElem(%s)" % (self.coords,)


def nf_reduce(x: NFElem, p: int, b: int) -> int:
    """Reduce x at the place where the defining root maps to b mod p."""
    f = x.field.coeffs
    val = 0
    for c in reversed(f):
        val = (val * b + c) % p
    if val != 0:
        raise CharsumError(
            "%d is not a root of the defining polynomial mod %d" % (b, p))
    out = 0
    power = 1
    for c in x.coords:
        out = (out + frac_mod(c, p) * power) % p
        power = power * b % p
    return out


def hnf(rows):
    """Row Hermite normal form of an integer matrix.

    Pivots are positive, entries above each pivot are reduced into
    [0, pivot), zero rows are dropped.  Returns a list of row tuples.
    """
    mat = [list(map(int, r)) for r in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    out = []
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, len(mat)):
            if mat[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        for i in range(row + 1, len(mat)):
            while mat[i][col]:
                q = mat[i][col] // mat[row][col]
                if q:
                    mat[i] = [a - q * b for a, b in zip(mat[i], mat[row])]
                if mat[i][col]:
                    mat[row], mat[i] = mat[i], mat[row]
        if mat[row][col] < 0:
            mat[row] = [-a for a in mat[row]]
        row += 1
        if row == len(mat):
            break
    mat = [r for r in mat if any(r)]
    # reduce above the pivots, earliest pivot column first: each later
    # reducing row is zero in the columns already finished, so no step
    # disturbs a previous one
    for i in range(len(mat)):
        col = next(j for j, a in enumerate(mat[i]) if a)
        for k in range(i):
            q = mat[k][col] // mat[i][col]
            if q:
                mat[k] = [a - q * b for a, b in zip(mat[k], mat[i])]
    return [tuple(r) for r in mat]


def _express_in_hnf(vec, basis_rows):
    """Integer coordinates of vec in an HNF basis, or None."""
    vec = list(vec)
    coords = []
    for row in basis_rows:
        col = next(j for j, a in enumerate(row) if a)
        if vec[col] % row[col]:
            return None
        q = vec[col] // row[col]
        coords.append(q)
        vec = [a - q * b for a, b in zip(vec, row)]
    if any(vec):
        return None
    return coords


@dataclass(frozen=True)
class LatticeBasis:
    field: NumberFieldDesc
    basis: tuple        # NFElem rows, triangular
    expression: tuple   # expression[i][j]: elems[i] = sum_j e_ij basis[j]


def lattice_basis(elems) -> LatticeBasis:
    """Z-module basis of the lattice spanned by the given elements, plus
    the integer matrix expressing the inputs in that basis."""
    elems = list(elems)
    if not elems:
        raise CharsumError("need at least one element")
    field = elems[0].field
    if any(e.field != field for e in elems):
        raise CharsumError("elements of different fields")
    scale = lcm(*[c.denominator for e in elems for c in e.coords]) \
        if elems else 1
    rows = [[int(c * scale) for c in e.coords] for e in elems]
    h = hnf(rows)
    if not h:
        raise CharsumError("all elements are zero")
    basis = tuple(NFElem(field, [Fraction(a, scale) for a in row])
                  for row in h)
    expression = []
    for row in rows:
        coords = _express_in_hnf(row, h)
        if coords is None:
            raise CharsumError("hnf expression failed")
        expression.append(tuple(coords))
    return LatticeBasis(field=field, basis=basis, expression=tuple(expression))


def qlin_relations(elems):
    """Primitive integer basis of the Q-linear relations
    sum_i a_i elems[i] = 0, by exact nullspace computation."""
    elems = list(elems)
    if not elems:
        return ()
    deg = elems[0].field.degree
    k = len(elems)
    # columns of m are the elements; relations are the nullspace
    m = [[elems[i].coords[r] for i in range(k)] for r in range(deg)]
    pivots = []
    row = 0
    for col in range(k):
        piv = None
        for i in range(row, deg):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [a * inv for a in m[row]]
        for i in range(deg):
            if i != row and m[i][col]:
                c = m[i][col]
                m[i] = [a - c * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(k) if c not in pivots]
    relations = []
    for fc in free:
        vec = [Fraction(0)] * k
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        denom = lcm(*[v.denominator for v in vec])
        ints = [int(v * denom) for v in vec]
        g = 0
        for v in ints:
            g = gcd(g, v)
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v)
        if lead < 0:
            ints = [-v for v in ints]
        relations.append(tuple(ints))
    return tuple(relations)


@dataclass(frozen=True)
class RationalAnnotation:
    index: int            # which basis element
    value: Fraction       # the rational a/n it equals
    values: tuple         # ((Angle, galois_exponent), ...) allowed pairs


@dataclass(frozen=True)
class ValueSetDesc:
    lattice: LatticeBasis
    exponents: tuple      # same matrix as lattice.expression
    annotations: tuple    # RationalAnnotation for rational basis elements


def value_set(elems, sp_mode=False) -> ValueSetDesc:
    """Multiplicative description of the joint character values on the
    given elements: each input value is a monomial in the basis values
    with the listed integer exponents.

    With sp_mode, rational basis entries a/n carry the finite list of
    allowed values: angle (t*a mod n)/n paired with the residue
    k = -inverse(t) mod n that selects it.
    """
    lat = lattice_basis(elems)
    annotations = []
    if sp_mode:
        for j, b in enumerate(lat.basis):
            if not b.is_rational():
                continue
            a = b.rational_value()
            n = a.denominator
            if n == 1:
                annotations.append(RationalAnnotation(
                    index=j, value=a, values=((Angle(0), 0),)))
                continue
            pairs = []
            for t in range(1, n):
                if gcd(t, n) != 1:
                    continue
                angle = Angle(Fraction((t * a.numerator) % n, n))
                k = (-pow(t, -1, n)) % n
                pairs.append((angle, k))
            annotations.append(RationalAnnotation(
                index=j, value=a, values=tuple(pairs)))
    return ValueSetDesc(lattice=lat, exponents=lat.expression,
                        annotations=tuple(annotations))
