"""Point enumeration and counting for polynomial systems over F_q.

The contract is brute force with a q^n candidate budget.  Within that
budget three elementary shortcuts keep desk-scale sweeps fast without any
point-counting machinery:

  * variables that occur linearly with a unit (constant, invertible)
    coefficient are eliminated by substitution, so graphs, lines and
    diagonals cost p instead of p^n;
  * a single remaining equation of degree <= 2 in its last free variable
    is solved by the quadratic formula, vectorized over the other one;
  * everything else is a chunked vectorized scan of the full grid.

Extension fields take the plain object scan (small q only).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .errors import BudgetError, CharsumError
from .ffield import ExtFieldDesc
from .mpoly import MPoly, frac_mod
from .polyroots import roots_mod_p

DEFAULT_BUDGET = 10 ** 9
_CHUNK = 1 << 19
_DENSE_ROW_CAP = 5 * 10 ** 6


def _system_nvars(system, nvars):
    if nvars is None:
        if not system:
            raise CharsumError("empty system needs an explicit nvars")
        nvars = system[0].nvars
    for f in system:
        if f.nvars != nvars:
            raise CharsumError("system polynomials disagree on nvars")
    if nvars < 1:
        raise CharsumError("need at least one variable")
    return nvars


def _check_budget(q, n, budget):
    if q ** n > budget:
        raise BudgetError("enumeration budget exceeded: %d^%d > %d"
                          % (q, n, budget))


def _validate_box(box, n, p):
    if box is None:
        return None
    if len(box) != n:
        raise CharsumError("box must give a range per variable")
    out = []
    for lo, hi in box:
        lo, hi = int(lo), int(hi)
        if not (0 <= lo <= hi <= p):
            raise CharsumError("box ranges must satisfy 0 <= lo <= hi <= p")
        out.append((lo, hi))
    return out


def _reduce_poly(f: MPoly, p) -> MPoly:
    return MPoly(f.nvars, {e: Fraction(c) for e, c in f.reduce_mod(p).items()})


def _prepare(system, p):
    """Reduce mod p; returns (polys, empty) where empty means provably no
    points."""
    reduced = []
    for f in system:
        g = _reduce_poly(f, p)
        if g.is_zero():
            continue
        if g.is_constant():
            return [], True
        reduced.append(g)
    return reduced, False


def _eliminate(system, n, p):
    """Substitute out unit-linear variables.

    Returns (substitutions, residual, free, empty): substitutions is a list
    of (var, replacement MPoly) in elimination order; every replacement
    references only variables free at its own elimination step.
    """
    sys_ = list(system)
    free = sorted(range(n))
    subs = []
    while True:
        found = None
        for idx, f in enumerate(sys_):
            for v in free:
                if f.degree_in(v) != 1:
                    continue
                coeffs = f.as_univariate_in(v)
                if not coeffs[1].is_constant():
                    continue
                c = int(coeffs[1].constant_value())
                repl = _reduce_poly(coeffs[0] * Fraction(-pow(c, -1, p)), p)
                found = (idx, v, repl)
                break
            if found:
                break
        if not found:
            return subs, sys_, free, False
        idx, v, repl = found
        del sys_[idx]
        free.remove(v)
        subs.append((v, repl))
        nxt = []
        for g in sys_:
            h = _reduce_poly(g.substitute(v, repl), p)
            if h.is_zero():
                continue
            if h.is_constant():
                return subs, [], free, True
            nxt.append(h)
        sys_ = nxt


@lru_cache(maxsize=16)
def _sq_count_table(p):
    """t[c] = number of y in F_p with y^2 = c."""
    ys = np.arange(p, dtype=np.int64)
    return np.bincount(ys * ys % p, minlength=p)


@lru_cache(maxsize=16)
def _sqrt_table(p):
    """t[c] = the smaller square root of c, or -1."""
    ys = np.arange(p, dtype=np.int64)
    tbl = np.full(p, -1, dtype=np.int64)
    idx = ys * ys % p
    tbl[idx[::-1]] = ys[::-1]
    return tbl


def _pow_mod_array(a, e, p):
    out = np.ones_like(a)
    base = a % p
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out


def _inv_mod_array(a, p):
    return _pow_mod_array(a, p - 2, p)


def _free_grid(free_count, p, flat):
    """Columns of the lex-ordered grid over the free variables for the
    given flat indices."""
    cols = []
    div = p ** (free_count - 1)
    for _ in range(free_count):
        cols.append(flat // div % p)
        div //= p
    return cols


def _eval_on(f, p, n, assign):
    """assign: dict var -> array; absent variables do not occur in f."""
    probe = next(iter(assign.values())) if assign else np.zeros(1, np.int64)
    arrays = [assign.get(i, np.zeros_like(probe)) for i in range(n)]
    return f.eval_mod_arrays(p, arrays)


def _solve_residual(residual, free, n, p, budget):
    """Solutions of the residual system over the free variables.

    Returns a dict var -> int64 array (aligned solution columns).
    """
    k = len(free)
    if k == 0:
        return {}, 1  # the empty assignment
    if not residual:
        total = p ** k
        flat = np.arange(total, dtype=np.int64)
        cols = _free_grid(k, p, flat)
        return dict(zip(free, cols)), total

    if k == 1:
        v = free[0]
        base = residual[0].as_univariate_in(v)
        coeffs = [int(c.constant_value()) for c in base]
        roots = sorted(set(roots_mod_p(coeffs, p)))
        arr = np.array(roots, dtype=np.int64)
        for g in residual[1:]:
            vals = _eval_on(g, p, n, {v: arr})
            arr = arr[vals == 0]
        return {v: arr}, len(arr)

    if k == 2 and len(residual) == 1 and p > 2:
        f = residual[0]
        for xv, yv in ((free[0], free[1]), (free[1], free[0])):
            if 1 <= f.degree_in(yv) <= 2:
                sol = _solve_plane_quadratic(f, xv, yv, n, p)
                if sol is not None:
                    return sol
                break

    # chunked scan of the full grid over the free variables
    total = p ** k
    keep = {v: [] for v in free}
    count = 0
    start = 0
    while start < total:
        stop = min(start + _CHUNK, total)
        flat = np.arange(start, stop, dtype=np.int64)
        cols = dict(zip(free, _free_grid(k, p, flat)))
        mask = np.ones(stop - start, dtype=bool)
        for g in residual:
            mask &= _eval_on(g, p, n, cols) == 0
        for v in free:
            keep[v].append(cols[v][mask])
        count += int(mask.sum())
        start = stop
    return {v: np.concatenate(keep[v]) for v in free}, count


def _solve_plane_quadratic(f, xv, yv, n, p):
    """Vectorized roots of c2(x) y^2 + c1(x) y + c0(x) = 0 over all x.
    Returns None when the degenerate all-y locus is too large to
    materialize (caller falls back to the scan)."""
    coeffs = f.as_univariate_in(yv)
    while len(coeffs) < 3:
        coeffs.append(MPoly(f.nvars, {}))
    xs = np.arange(p, dtype=np.int64)
    c0 = _eval_on(coeffs[0], p, n, {xv: xs})
    c1 = _eval_on(coeffs[1], p, n, {xv: xs})
    c2 = _eval_on(coeffs[2], p, n, {xv: xs})

    xs_out = []
    ys_out = []

    quad = c2 != 0
    if quad.any():
        xq, aq, bq, cq = xs[quad], c2[quad], c1[quad], c0[quad]
        disc = (bq * bq - 4 * aq * cq) % p
        s = _sqrt_table(p)[disc]
        has = s >= 0
        double = (disc == 0) & has
        inv2a = _inv_mod_array(2 * aq % p, p)
        y1 = (p - bq + s) * inv2a % p
        y2 = (2 * p - bq - s) * inv2a % p
        xs_out.append(xq[has])
        ys_out.append(y1[has])
        second = has & ~double
        xs_out.append(xq[second])
        ys_out.append(y2[second])

    lin = (c2 == 0) & (c1 != 0)
    if lin.any():
        xl = xs[lin]
        yl = (p - c0[lin]) * _inv_mod_array(c1[lin], p) % p
        xs_out.append(xl)
        ys_out.append(yl)

    full = (c2 == 0) & (c1 == 0) & (c0 == 0)
    nfull = int(full.sum())
    if nfull:
        if nfull * p > _DENSE_ROW_CAP:
            return None
        xf = np.repeat(xs[full], p)
        yf = np.tile(np.arange(p, dtype=np.int64), nfull)
        xs_out.append(xf)
        ys_out.append(yf)

    xcol = np.concatenate(xs_out) if xs_out else np.zeros(0, np.int64)
    ycol = np.concatenate(ys_out) if ys_out else np.zeros(0, np.int64)
    return {xv: xcol, yv: ycol}, len(xcol)


def _count_plane_quadratic(f, xv, yv, n, p):
    coeffs = f.as_univariate_in(yv)
    while len(coeffs) < 3:
        coeffs.append(MPoly(f.nvars, {}))
    xs = np.arange(p, dtype=np.int64)
    c0 = _eval_on(coeffs[0], p, n, {xv: xs})
    c1 = _eval_on(coeffs[1], p, n, {xv: xs})
    c2 = _eval_on(coeffs[2], p, n, {xv: xs})
    count = 0
    quad = c2 != 0
    if quad.any():
        disc = (c1[quad] ** 2 - 4 * c2[quad] * c0[quad]) % p
        count += int(_sq_count_table(p)[disc].sum())
    lin = (c2 == 0) & (c1 != 0)
    count += int(lin.sum())
    full = (c2 == 0) & (c1 == 0) & (c0 == 0)
    count += int(full.sum()) * p
    return count


def _reconstruct(subs, columns, n, p, length):
    """Fill eliminated coordinates; columns maps var -> aligned array."""
    zero = np.zeros(length, dtype=np.int64)
    for v, repl in reversed(subs):
        arrays = [columns.get(i, zero) for i in range(n)]
        columns[v] = repl.eval_mod_arrays(p, arrays) if repl.terms else \
            np.zeros(length, dtype=np.int64)
    return columns


def _assemble(columns, n, length, box, p):
    mat = np.empty((length, n), dtype=np.int64)
    for i in range(n):
        mat[:, i] = columns[i]
    if box is not None:
        mask = np.ones(length, dtype=bool)
        for i, (lo, hi) in enumerate(box):
            mask &= (mat[:, i] >= lo) & (mat[:, i] < hi)
        mat = mat[mask]
    order = np.lexsort(tuple(mat[:, i] for i in range(n - 1, -1, -1)))
    mat = mat[order]
    return [tuple(int(v) for v in row) for row in mat]


def enumerate_points(system, field, nvars=None, box=None,
                     budget=DEFAULT_BUDGET):
    """All common zeros, sorted lexicographically.

    `field` is an ExtFieldDesc or a prime.  Boxes (half-open residue
    ranges, one per variable) are a prime-field notion.
    """
    if isinstance(field, int):
        field = ExtFieldDesc(field, 1)
    n = _system_nvars(system, nvars)
    _check_budget(field.order, n, budget)
    if field.e > 1:
        if box is not None:
            raise CharsumError("box requires prime field")
        return _enumerate_fq(system, field, n)
    p = field.p
    box = _validate_box(box, n, p)
    reduced, empty = _prepare(system, p)
    if empty:
        return []
    subs, residual, free, empty = _eliminate(reduced, n, p)
    if empty:
        return []
    columns, _ = _solve_residual(residual, free, n, p, budget)
    columns = {v: np.asarray(col, dtype=np.int64)
               for v, col in columns.items()}
    length = len(columns[free[0]]) if free else 1
    _reconstruct(subs, columns, n, p, length)
    return _assemble(columns, n, length, box, p)


def count_points(system, field, nvars=None, box=None, budget=DEFAULT_BUDGET):
    """|V(F_q)| (or the count inside a box), without materializing points
    when a shortcut applies."""
    if isinstance(field, int):
        field = ExtFieldDesc(field, 1)
    n = _system_nvars(system, nvars)
    if box is not None or field.e > 1:
        return len(enumerate_points(system, field, nvars=n, box=box,
                                    budget=budget))
    _check_budget(field.order, n, budget)
    p = field.p
    reduced, empty = _prepare(system, p)
    if empty:
        return 0
    subs, residual, free, empty = _eliminate(reduced, n, p)
    if empty:
        return 0
    k = len(free)
    if not residual:
        return p ** k
    if k == 2 and len(residual) == 1 and p > 2:
        f = residual[0]
        for xv, yv in ((free[0], free[1]), (free[1], free[0])):
            if 1 <= f.degree_in(yv) <= 2:
                return _count_plane_quadratic(f, xv, yv, n, p)
    _, count = _solve_residual(residual, free, n, p, budget)
    return count


def _enumerate_fq(system, field, n):
    out = []
    coeff_cache = []
    for f in system:
        terms = []
        for e, c in f.sorted_terms():
            terms.append((e, field.element(frac_mod(c, field.p))))
        coeff_cache.append(terms)
    for point in product(field.elements(), repeat=n):
        ok = True
        for terms in coeff_cache:
            acc = field.zero()
            for e, c in terms:
                t = c
                for x, k in zip(point, e):
                    if k:
                        t = t * x ** k
                acc = acc + t
            if not acc.is_zero():
                ok = False
                break
        if ok:
            out.append(point)
    return out


def sample_points(system, p, count, nvars=None, tmax=None):
    """Deterministic point sampling for large p (no full enumeration).

    Supports systems that reduce, after unit-linear elimination, to at
    most a plane curve.  Raises when it cannot produce `count` points.
    """
    n = _system_nvars(system, nvars)
    reduced, empty = _prepare(system, p)
    if empty:
        raise CharsumError("insufficient samples: no points mod %d" % p)
    subs, residual, free, empty = _eliminate(reduced, n, p)
    if empty:
        raise CharsumError("insufficient samples: no points mod %d" % p)
    if tmax is None:
        tmax = 60 * count + 120

    sol_rows = []
    k = len(free)
    if not residual:
        for flat in range(min(count, p ** k)):
            assign = {}
            rem = flat
            for v in reversed(free):
                assign[v] = rem % p
                rem //= p
            sol_rows.append(assign)
    elif k == 1:
        v = free[0]
        coeffs = [int(c.constant_value())
                  for c in residual[0].as_univariate_in(v)]
        roots = sorted(set(roots_mod_p(coeffs, p)))
        for r in roots:
            if all(g.eval_mod(p, _point_of({v: r}, n)) == 0
                   for g in residual[1:]):
                sol_rows.append({v: r})
    elif k == 2:
        xv, yv = free
        for t in range(tmax):
            uni = [g.substitute(xv, t) for g in residual]
            uni = [_reduce_poly(g, p) for g in uni]
            uni = [g for g in uni if not g.is_zero()]
            if any(g.is_constant() for g in uni):
                continue
            if not uni:
                sol_rows.append({xv: t, yv: 0})
            else:
                coeffs = [int(c.constant_value())
                          for c in uni[0].as_univariate_in(yv)]
                for r in sorted(set(roots_mod_p(coeffs, p))):
                    if all(g.eval_mod(p, _point_of({xv: t, yv: r}, n)) == 0
                           for g in uni[1:]):
                        sol_rows.append({xv: t, yv: r})
            if len(sol_rows) >= count:
                break
    else:
        raise CharsumError("insufficient samples: system too wide for "
                           "large-prime sampling")

    if len(sol_rows) < count:
        raise CharsumError("insufficient samples: found %d of %d mod %d"
                           % (len(sol_rows), count, p))
    points = []
    for assign in sol_rows[:count]:
        assign = dict(assign)
        for v, repl in reversed(subs):
            assign[v] = repl.eval_mod(p, _point_of(assign, n))
        points.append(_point_of(assign, n))
    return points


def _point_of(assign, n):
    return tuple(assign.get(i, 0) for i in range(n))
