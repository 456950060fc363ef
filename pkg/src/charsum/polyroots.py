"""Roots of univariate polynomials over finite fields.

Small fields (q <= 2^16) are handled by an exhaustive scan, vectorized in
the prime-field case.  Larger fields go through gcd with x^q - x followed
by equal-degree splitting down to linear factors; the splitting randomness
is seeded from (p, f) so repeated runs and parallel sweeps agree.
"""

from __future__ import annotations

import random
import zlib

import numpy as np

from . import fppoly
from .errors import CharsumError
from .ffield import ExtFieldDesc, FqElem, sqrt_mod

SCAN_LIMIT = 1 << 16


def _splitting_rng(p, coeffs):
    key = repr((p, tuple(coeffs))).encode()
    return random.Random(zlib.crc32(key))


def eval_many(coeffs, p, xs):
    """Horner evaluation of an int coefficient list over an int64 array."""
    acc = np.zeros_like(xs)
    for c in reversed(coeffs):
        acc = (acc * xs + c % p) % p
    return acc


def _multiplicities(f, roots, p):
    out = []
    for r in roots:
        g = list(f)
        m = 0
        while True:
            q, rem = fppoly.deflate_root(g, r, p)
            if rem != 0:
                break
            m += 1
            g = q
            if not g:
                break
        out.extend([r] * m)
    return out


def _split_linear(g, p, rng):
    """Distinct roots of a monic product of distinct linear factors."""
    d = fppoly.degree(g)
    if d <= 0:
        return []
    if d == 1:
        return [(-g[0]) * pow(g[1], -1, p) % p]
    if d == 2:
        # x^2 + bx + c after normalization; p is odd on this path
        b, c = g[1], g[0]
        disc = (b * b - 4 * c) % p
        s = sqrt_mod(disc, p)
        inv2 = pow(2, -1, p)
        r1 = (-b + s) * inv2 % p
        r2 = (-b - s) * inv2 % p
        return [r1, r2]
    while True:
        a = rng.randrange(p)
        h = fppoly.powmod([a, 1], (p - 1) // 2, g, p)
        h = fppoly.sub(h, [1], p)
        d1 = fppoly.gcd(h, g, p)
        if 0 < fppoly.degree(d1) < fppoly.degree(g):
            d2, rem = fppoly.divmod_poly(g, d1, p)
            assert rem == []
            return _split_linear(d1, p, rng) + _split_linear(d2, p, rng)


def roots_mod_p(coeffs, p) -> list:
    """Sorted roots (with multiplicity) of f over F_p.

    coeffs is little-endian over Z; reduction happens here.  The zero
    polynomial has no well-defined root set and is an error.
    """
    f = fppoly.trim([c % p for c in coeffs])
    if not f:
        raise CharsumError("zero polynomial")
    if fppoly.degree(f) == 0:
        return []
    if p <= SCAN_LIMIT:
        xs = np.arange(p, dtype=np.int64)
        vals = eval_many(f, p, xs)
        hits = [int(r) for r in xs[vals == 0]]
        if fppoly.degree(f) == 1:
            return hits
        return sorted(_multiplicities(f, hits, p))
    fm = fppoly.monic(f, p)
    xp = fppoly.powmod([0, 1], p, fm, p)
    g = fppoly.gcd(fppoly.sub(xp, [0, 1], p), fm, p)
    if fppoly.degree(g) <= 0:
        return []
    rng = _splitting_rng(p, f)
    roots = _split_linear(g, p, rng)
    return sorted(_multiplicities(f, roots, p))


# -- generic path over F_q ------------------------------------------------

def _fq_trim(f):
    while f and f[-1].is_zero():
        f.pop()
    return f


def _fq_divmod(f, g, field):
    f = list(f)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    dg = len(g) - 1
    inv_lead = g[-1].inverse()
    q = [field.zero()] * max(len(f) - dg, 0)
    while f and len(f) - 1 >= dg:
        c = f[-1] * inv_lead
        k = len(f) - 1 - dg
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] = f[k + i] - c * b
        _fq_trim(f)
    return q, f


def _fq_mul(f, g, field):
    if not f or not g:
        return []
    out = [field.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a.is_zero():
            for j, b in enumerate(g):
                out[i + j] = out[i + j] + a * b
    return _fq_trim(out)


def _fq_sub(f, g, field):
    n = max(len(f), len(g))
    out = [field.zero()] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = out[i] - c
    return _fq_trim(out)


def _fq_add(f, g, field):
    n = max(len(f), len(g))
    out = [field.zero()] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = out[i] + c
    return _fq_trim(out)


def _fq_monic(f, field):
    if not f:
        return []
    inv = f[-1].inverse()
    return [c * inv for c in f]


def _fq_gcd(f, g, field):
    a, b = list(f), list(g)
    while b:
        a, b = b, _fq_divmod(a, b, field)[1]
    return _fq_monic(a, field)


def _fq_powmod(f, e, m, field):
    out = [field.one()]
    base = _fq_divmod(list(f), m, field)[1]
    while e:
        if e & 1:
            out = _fq_divmod(_fq_mul(out, base, field), m, field)[1]
        base = _fq_divmod(_fq_mul(base, base, field), m, field)[1]
        e >>= 1
    return out


def _fq_split_linear(g, field, rng):
    d = len(g) - 1
    if d <= 0:
        return []
    if d == 1:
        return [-(g[0] * g[1].inverse())]
    q = field.order
    while True:
        a = field.element(tuple(rng.randrange(field.p)
                                for _ in range(field.e)))
        if field.p == 2:
            # additive splitting: trace map T(a*x) = sum (a*x)^{2^i}, i < e
            cur = _fq_divmod([field.zero(), a], g, field)[1]
            h = list(cur)
            for _ in range(field.e - 1):
                cur = _fq_divmod(_fq_mul(cur, cur, field), g, field)[1]
                h = _fq_add(h, cur, field)
        else:
            h = _fq_powmod([a, field.one()], (q - 1) // 2, g, field)
            h = _fq_sub(h, [field.one()], field)
        d1 = _fq_gcd(h, g, field)
        if 0 < len(d1) - 1 < len(g) - 1:
            d2, rem = _fq_divmod(g, d1, field)
            assert not rem
            return (_fq_split_linear(d1, field, rng)
                    + _fq_split_linear(d2, field, rng))


def _fq_multiplicities(f, roots, field):
    out = []
    for r in roots:
        g = list(f)
        m = 0
        while g:
            # synthetic division by (x - r)
            acc = field.zero()
            coeffs = []
            for c in reversed(g):
                acc = acc * r + c
                coeffs.append(acc)
            rem = coeffs.pop()
            if not rem.is_zero():
                break
            m += 1
            coeffs.reverse()
            g = _fq_trim(coeffs)
        out.extend([r] * m)
    return out


def poly_roots_fq(coeffs, field: ExtFieldDesc) -> list:
    """Sorted roots (with multiplicity, canonical element order) of a
    univariate polynomial over F_q.  Coefficients may be ints or FqElems."""
    f = [field.element(c) for c in coeffs]
    f = _fq_trim(list(f))
    if not f:
        raise CharsumError("zero polynomial")
    if field.e == 1:
        ints = [c.residue() for c in f]
        return [field.element(r) for r in roots_mod_p(ints, field.p)]
    if len(f) == 1:
        return []
    if field.order <= SCAN_LIMIT:
        hits = []
        for x in field.elements():
            acc = field.zero()
            for c in reversed(f):
                acc = acc * x + c
            if acc.is_zero():
                hits.append(x)
        return sorted(_fq_multiplicities(f, hits, field))
    fm = _fq_monic(f, field)
    xq = _fq_powmod([field.zero(), field.one()], field.order, fm, field)
    g = _fq_gcd(_fq_sub(xq, [field.zero(), field.one()], field), fm, field)
    if len(g) - 1 <= 0:
        return []
    rng = _splitting_rng(field.p, tuple(c.coeffs for c in f))
    roots = _fq_split_linear(g, field, rng)
    return sorted(_fq_multiplicities(f, roots, field))
