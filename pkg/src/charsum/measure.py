"""Counting-measure sweeps, the finite Fourier transform, and pushforward
moments on the torus.

The leading-order measure of a variety at p is |D(F_p)| / p^dim; the
signed refinement compares two varieties at the sqrt(p) scale.  Dimension
is always the caller's declared dimension: a log-log slope estimate is
attached as a warning, never as a correction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import partial

import numpy as np

from .errors import BadPrimeError, BudgetError, CharsumError
from .parallel import pmap
from .points import DEFAULT_BUDGET, count_points, enumerate_points

FOURIER_BUDGET = 1 << 24


@dataclass(frozen=True)
class MeasureSeries:
    declared_dim: int
    records: tuple          # (p, counts..., normalized) tuples
    skipped: tuple          # (p, reason)
    dim_estimate: float | None
    dim_warning: bool


def _slope(points):
    """Least-squares slope of log(count) against log(p)."""
    pts = [(math.log(p), math.log(c)) for p, c in points if c > 0]
    if len(pts) < 2:
        return None
    mx = sum(x for x, _ in pts) / len(pts)
    my = sum(y for _, y in pts) / len(pts)
    sxx = sum((x - mx) ** 2 for x, _ in pts)
    if sxx == 0:
        return None
    sxy = sum((x - mx) * (y - my) for x, y in pts)
    return sxy / sxx


def _count_worker(system, nvars, budget, p):
    try:
        return p, count_points(system, p, nvars=nvars, budget=budget), None
    except BadPrimeError:
        return p, None, "bad prime"
    except BudgetError:
        return p, None, "budget exceeded"


def mu0_sweep(system, declared_dim, primes, nvars=None,
              budget=DEFAULT_BUDGET, jobs=1) -> MeasureSeries:
    """|D(F_p)| / p^dim along the prime list; bad or over-budget primes are
    recorded as skipped, not silently dropped."""
    worker = partial(_count_worker, system, nvars, budget)
    results = pmap(worker, list(primes), jobs)
    records, skipped = [], []
    for p, count, reason in sorted(results):
        if reason is not None:
            skipped.append((p, reason))
            continue
        records.append((p, count, count / p ** declared_dim))
    slope = _slope([(p, c) for p, c, _ in records])
    warn = slope is not None and abs(slope - declared_dim) >= 0.25
    return MeasureSeries(declared_dim=declared_dim, records=tuple(records),
                         skipped=tuple(skipped), dim_estimate=slope,
                         dim_warning=warn)


def _pair_count_worker(sys_x, sys_xp, nvars_x, nvars_xp, budget, p):
    try:
        cx = count_points(sys_x, p, nvars=nvars_x, budget=budget)
        cxp = count_points(sys_xp, p, nvars=nvars_xp, budget=budget)
        return p, cx, cxp, None
    except BadPrimeError:
        return p, None, None, "bad prime"
    except BudgetError:
        return p, None, None, "budget exceeded"


def mu1_sweep(system_x, system_xp, declared_dim, primes, nvars_x=None,
              nvars_xp=None, budget=DEFAULT_BUDGET, jobs=1) -> MeasureSeries:
    """p^(1/2 - dim) (|X| - |X'|): the sqrt-scale signed comparison of two
    varieties whose leading-order counts agree."""
    worker = partial(_pair_count_worker, system_x, system_xp,
                     nvars_x, nvars_xp, budget)
    results = pmap(worker, list(primes), jobs)
    records, skipped = [], []
    for p, cx, cxp, reason in sorted(results):
        if reason is not None:
            skipped.append((p, reason))
            continue
        normalized = p ** (0.5 - declared_dim) * (cx - cxp)
        records.append((p, cx, cxp, normalized))
    slope = _slope([(p, c) for p, c, _, _ in records])
    warn = slope is not None and abs(slope - declared_dim) >= 0.25
    return MeasureSeries(declared_dim=declared_dim, records=tuple(records),
                         skipped=tuple(skipped), dim_estimate=slope,
                         dim_warning=warn)


class ValueTable:
    """A complex-valued function on F_p^n, stored densely."""

    __slots__ = ("p", "n", "values")

    def __init__(self, p, n, values):
        values = np.asarray(values, dtype=np.complex128)
        if values.shape != (p,) * n:
            raise CharsumError("value table must have shape (p,)*n")
        values = values.copy()
        values.setflags(write=False)
        self.p = p
        self.n = n
        self.values = values

    @classmethod
    def from_function(cls, p, n, fn):
        if p ** n > FOURIER_BUDGET:
            raise BudgetError("table budget exceeded: %d^%d > %d"
                              % (p, n, FOURIER_BUDGET))
        arr = np.zeros((p,) * n, dtype=np.complex128)
        for idx in np.ndindex(*arr.shape):
            arr[idx] = fn(idx)
        return cls(p, n, arr)

    @classmethod
    def indicator(cls, p, n, points):
        arr = np.zeros((p,) * n, dtype=np.complex128)
        for pt in points:
            arr[tuple(int(v) % p for v in pt)] = 1.0
        return cls(p, n, arr)

    def __getitem__(self, idx):
        if isinstance(idx, int):
            idx = (idx,)
        return complex(self.values[tuple(int(v) % self.p for v in idx)])

    def norm_sq_mean(self) -> float:
        """p^{-n} sum |phi|^2 (the measure-side Plancherel quantity)."""
        return float(np.sum(np.abs(self.values) ** 2).real) / self.p ** self.n


def fourier_table(table: ValueTable, budget=FOURIER_BUDGET) -> ValueTable:
    """F(phi)(y) = p^{-n} sum_x Psi_p(x.y) phi(x).

    Axis-by-axis kernel application, O(p^{n+1}) per axis; this is the
    plain transform, not an FFT, so the defining sum is read off the code.
    """
    p, n = table.p, table.n
    if p ** n > budget:
        raise BudgetError("transform budget exceeded: %d^%d > %d"
                          % (p, n, budget))
    r = np.arange(p)
    kernel = np.exp(2j * np.pi * np.outer(r, r) / p)
    out = table.values
    for axis in range(n):
        out = np.moveaxis(np.tensordot(kernel, out, axes=([1], [axis])),
                          0, axis)
    return ValueTable(p, n, out / p ** n)


def delta_table(p, n, at=None) -> ValueTable:
    arr = np.zeros((p,) * n, dtype=np.complex128)
    arr[tuple((at or (0,) * n))] = 1.0
    return ValueTable(p, n, arr)


def constant_table(p, n, value=1.0) -> ValueTable:
    arr = np.full((p,) * n, value, dtype=np.complex128)
    return ValueTable(p, n, arr)


@dataclass(frozen=True)
class PushforwardMoments:
    p: int
    npoints: int
    moments: tuple  # ((m, complex value), ...) with W_0 first, then lex


def pushforward_weyl(system, p, max_moment, nvars=None,
                     budget=DEFAULT_BUDGET) -> PushforwardMoments:
    """Moments W_m = |D|^{-1} sum_x Psi_p(m.x) of the pushforward of the
    normalized counting measure of D under x -> (Psi(x_1), ..., Psi(x_n)).
    """
    pts = enumerate_points(system, p, nvars=nvars, budget=budget)
    if not pts:
        raise CharsumError("no points mod %d" % p)
    mat = np.array(pts, dtype=np.int64)
    n = mat.shape[1]
    table = np.exp(2j * np.pi * np.arange(p) / p)
    moments = [((0,) * n, 1.0 + 0.0j)]
    for m in np.ndindex(*((2 * max_moment + 1,) * n)):
        vec = tuple(int(v) - max_moment for v in m)
        if all(v == 0 for v in vec):
            continue
        dots = np.zeros(len(mat), dtype=np.int64)
        for i, c in enumerate(vec):
            if c:
                dots = (dots + mat[:, i] * c) % p
        counts = np.bincount(dots % p, minlength=p)
        moments.append((vec, complex(counts @ table) / len(mat)))
    return PushforwardMoments(p=p, npoints=len(mat), moments=tuple(moments))
