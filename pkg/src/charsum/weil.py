"""Exponential sums, Weil-bound records, the curve sup test, hyperplane
detection, and box counts."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import gcd

import numpy as np

from .angles import CharacterDesc, standard_character
from .errors import BadPrimeError, CharsumError
from .ffield import ExtFieldDesc, prime_field
from .laurent import LaurentPoly
from .mpoly import MPoly, frac_mod
from .points import DEFAULT_BUDGET, enumerate_points, sample_points
from .polyroots import eval_many
from .primes import next_prime

PASS_SLACK = 1e-6
HEIGHT_CAP = 20


@lru_cache(maxsize=64)
def _exp_table(p):
    t = np.exp(2j * np.pi * np.arange(p) / p)
    t.setflags(write=False)
    return t


@dataclass(frozen=True)
class WeilRecord:
    p: int
    degree: int
    value: complex
    magnitude: float
    bound: float
    normalized: float
    passed: bool
    heuristic: bool = False


def exp_sum_points(points, f: MPoly, char: CharacterDesc) -> complex:
    """Sum of Psi(f(x)) over an explicit point set (exact angles, summed
    with compensated float addition)."""
    field = char.field
    res = []
    ims = []
    for x in points:
        elems = tuple(field.element(v) for v in x)
        acc = field.zero()
        for e, c in f.sorted_terms():
            t = field.element(_coeff_elem(c, field))
            for xi, k in zip(elems, e):
                if k:
                    t = t * xi ** k
            acc = acc + t
        z = char.psi(acc).to_complex()
        res.append(z.real)
        ims.append(z.imag)
    return complex(math.fsum(res), math.fsum(ims))


def _coeff_elem(c, field):
    return frac_mod(c, field.p)


def exp_sum(system, f: MPoly, char: CharacterDesc, box=None,
            budget=DEFAULT_BUDGET) -> complex:
    """Sum of Psi(f(x)) over the zero set of `system` (empty system: all
    of affine space)."""
    field = char.field
    n = f.nvars
    if (field.e == 1 and not system and n == 1 and box is None
            and field.p < 1 << 31):
        return _exp_sum_line(f, field.p, char, budget)
    pts = enumerate_points(system, field, nvars=n, box=box, budget=budget)
    return exp_sum_points(pts, f, char)


def _exp_sum_line(f, p, char, budget):
    if p > budget:
        raise CharsumError("enumeration budget exceeded: %d > %d"
                           % (p, budget))
    twist = char.twist.residue()
    xs = np.arange(p, dtype=np.int64)
    vals = f.eval_mod_arrays(p, [xs])
    vals = vals * twist % p
    counts = np.bincount(vals, minlength=p)
    return complex(counts @ _exp_table(p))


def weil_check(f, p, char=None) -> WeilRecord:
    """Archimedean check of |sum Psi(f(x))| <= (d-1) sqrt(p) on the affine
    line over F_p.

    f: univariate MPoly or little-endian rational coefficient list.  The
    degree is taken after reduction mod p; a degree sharing a factor with
    p is outside the bound's hypotheses and is an error.
    """
    if not isinstance(f, MPoly):
        f = MPoly.from_univariate(f)
    field = prime_field(p)
    if char is None:
        char = standard_character(field)
    coeffs = [c for c in f.univariate_coeffs()]
    red = [_coeff_elem(c, field) for c in coeffs]
    while red and red[-1] == 0:
        red.pop()
    d = len(red) - 1
    if d < 1:
        raise CharsumError("degree mod %d is %d; need >= 1" % (p, d))
    if gcd(d, p) != 1:
        raise CharsumError("wild degree %d at p = %d; bound not applicable"
                           % (d, p))
    twist = char.twist.residue()
    xs = np.arange(p, dtype=np.int64)
    vals = eval_many(red, p, xs) * twist % p
    counts = np.bincount(vals, minlength=p)
    value = complex(counts @ _exp_table(p))
    magnitude = abs(value)
    bound = (d - 1) * math.sqrt(p)
    return WeilRecord(p=p, degree=d, value=value, magnitude=magnitude,
                      bound=bound, normalized=magnitude / math.sqrt(p),
                      passed=magnitude <= bound + PASS_SLACK)


def weil_check_curve(system, f, p, constant=None,
                     budget=DEFAULT_BUDGET) -> WeilRecord:
    """Same record shape for a sum over a curve, with a configurable bound
    constant (default: (total degree of system + deg f)^2, flagged
    heuristic)."""
    field = prime_field(p)
    char = standard_character(field)
    value = exp_sum(system, f, char, budget=budget)
    sysdeg = max((g.total_degree() for g in system), default=0)
    if constant is None:
        constant = (sysdeg + max(f.total_degree(), 0)) ** 2
    magnitude = abs(value)
    bound = constant * math.sqrt(p)
    return WeilRecord(p=p, degree=max(f.total_degree(), 0), value=value,
                      magnitude=magnitude, bound=bound,
                      normalized=magnitude / math.sqrt(p),
                      passed=magnitude <= bound + PASS_SLACK,
                      heuristic=True)


@dataclass(frozen=True)
class SupResult:
    sup: float
    tolerance: float
    npoints: int
    passed: bool


def axiom3_sup(system, h: LaurentPoly, p, nvars=None,
               budget=DEFAULT_BUDGET) -> SupResult:
    """Finite-p form of the positivity axiom: for a real-valued Laurent
    polynomial h with no constant term, max of h over the character image
    of the curve must clear -b' sqrt(p) / |C(F_p)| where b' is the sum of
    coefficient magnitudes."""
    if not h.is_real_mode():
        raise CharsumError("h must be real-valued (coefficient at -m must "
                           "conjugate the one at m)")
    if h.has_constant_term():
        raise CharsumError("h must have no constant term")
    n = nvars or h.nvars
    pts = enumerate_points(system, p, nvars=n, budget=budget)
    if not pts:
        raise CharsumError("no points on the curve mod %d" % p)
    mat = np.array(pts, dtype=np.int64)
    vals = h.eval_real_on_residues(mat, p)
    sup = float(vals.max())
    tol = h.coeff_abs_sum() * math.sqrt(p) / len(pts)
    return SupResult(sup=sup, tolerance=tol, npoints=len(pts),
                     passed=sup >= -tol)


@dataclass(frozen=True)
class HyperplaneResult:
    vector: tuple
    constant: object  # small int when consistent across primes, else None
    exact: bool
    primes: tuple


def _graph_shape(system, n):
    """Recognize {x_j - f_j(x_i0)} graph systems; returns (param_var,
    {var: poly}) or None."""
    defs = {}
    base_vars = set()
    for g in system:
        linear = None
        for v in range(n):
            if g.degree_in(v) == 1:
                coeffs = g.as_univariate_in(v)
                cv = coeffs[1]
                if cv.is_constant() and abs(cv.constant_value()) == 1 \
                        and v not in coeffs[0].variables_used():
                    linear = (v, coeffs)
                    break
        if linear is None:
            return None
        v, coeffs = linear
        rest = -coeffs[0] * (Fraction(1) / coeffs[1].constant_value())
        if v in defs:
            return None
        defs[v] = rest
        base_vars |= rest.variables_used()
    if len(base_vars) > 1 or any(v in defs for v in base_vars):
        return None
    param = min(base_vars) if base_vars else None
    if param is None:
        free = [v for v in range(n) if v not in defs]
        if not free:
            return None
        param = free[0]
    if set(defs) | {param} != set(range(n)):
        return None
    return param, defs


def _candidate_vectors(n, m):
    """Primitive integer vectors with sup norm <= m, last nonzero entry
    positive, by increasing height then lex order."""
    for height in range(1, m + 1):
        for vec in iproduct(range(-height, height + 1), repeat=n):
            if max(abs(v) for v in vec) != height:
                continue
            nz = [v for v in vec if v]
            if not nz or nz[-1] < 0:
                continue
            g = 0
            for v in vec:
                g = gcd(g, abs(v))
            if g != 1:
                continue
            yield vec


def hyperplane_height_test(system, m, nvars=None, primes=None,
                           points_per_prime=None):
    """Search for a height <= m affine hyperplane containing the variety.

    Evidence is A.x constant on sampled points over three large primes;
    graph systems get an exact symbolic confirmation.  Returns None when
    nothing is found (a probabilistic answer), else a HyperplaneResult.
    """
    n = _system_nvars_local(system, nvars)
    if m < 1 or m > HEIGHT_CAP:
        raise CharsumError("height bound must be in [1, %d]" % HEIGHT_CAP)
    deg = max((g.total_degree() for g in system), default=1)
    if points_per_prime is None:
        points_per_prime = 2 * max(deg, 1) + 2
    if primes is None:
        primes = []
        q = 10 ** 6
        while len(primes) < 3:
            q = next_prime(q)
            try:
                for g in system:
                    g.reduce_mod(q)
            except BadPrimeError:
                continue
            primes.append(q)
    samples = {}
    for q in primes:
        samples[q] = sample_points(system, q, points_per_prime, nvars=n)

    graph = _graph_shape(system, n)
    for vec in _candidate_vectors(n, m):
        consts = []
        ok = True
        for q in primes:
            pts = samples[q]
            c0 = sum(a * x for a, x in zip(vec, pts[0])) % q
            if any(sum(a * x for a, x in zip(vec, pt)) % q != c0
                   for pt in pts[1:]):
                ok = False
                break
            consts.append(c0)
        if not ok:
            continue
        exact = False
        if graph is not None:
            param, defs = graph
            expr = MPoly(n, {})
            for v, a in enumerate(vec):
                if not a:
                    continue
                term = defs[v] if v in defs else MPoly.variable(param, n)
                expr = expr + a * term
            if not expr.is_constant():
                continue  # sampling coincidence; symbolic check rules it out
            exact = True
        constant = _consistent_constant(consts, primes)
        return HyperplaneResult(vector=vec, constant=constant, exact=exact,
                                primes=tuple(primes))
    return None


def _consistent_constant(consts, primes):
    reps = []
    for c, q in zip(consts, primes):
        reps.append(c - q if c > q // 2 else c)
    if all(r == reps[0] for r in reps):
        return reps[0]
    return None


def _system_nvars_local(system, nvars):
    if nvars is None:
        if not system:
            raise CharsumError("empty system needs an explicit nvars")
        nvars = system[0].nvars
    return nvars


@dataclass(frozen=True)
class BoxCountResult:
    count: int
    fraction: float
    expected: float
    hyperplane: object  # HyperplaneResult or None


def box_count(system, p, box, declared_dim, nvars=None, flag_height=None,
              budget=DEFAULT_BUDGET) -> BoxCountResult:
    """Points of the variety inside a product of residue ranges, with the
    random-model expectation p^dim * prod(box fractions) and a contained-
    in-a-hyperplane flag (the one caveat to that model)."""
    n = _system_nvars_local(system, nvars)
    pts = enumerate_points(system, p, nvars=n, box=box, budget=budget)
    count = len(pts)
    fraction = count / p ** declared_dim
    expected = float(p ** declared_dim)
    for lo, hi in box:
        expected *= (hi - lo) / p
    flag = None
    if flag_height is None:
        flag_height = HEIGHT_CAP
    if flag_height:
        try:
            flag = hyperplane_height_test(system, flag_height, nvars=n)
        except CharsumError:
            flag = None
    return BoxCountResult(count=count, fraction=fraction, expected=expected,
                          hyperplane=flag)
