"""Hot numeric kernels with a numba fast path and a pure-numpy fallback.

Two inner loops dominate runtime in this package:

* the criterion sweep, which accumulates running log-products of translated
  weights over a window for every power k up to a budget and tracks the
  window max/min per k;
* the Frank-Wolfe iteration for the nearest-point problem over the simplex.

Both are compiled with ``numba.njit`` when numba is importable. Setting the
environment variable ``CONVEXSHIFT_DISABLE_NUMBA=1`` selects the pure-numpy
implementations instead (they compute the same quantities with the same
update rules). ``benchmarks/bench_kernels.py`` compares the two paths.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "backend",
    "using_numba",
    "running_extrema",
    "fw_simplex_minimize",
]

_DISABLED = os.environ.get("CONVEXSHIFT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


_USE_NUMBA = _HAVE_NUMBA and not _DISABLED


def using_numba() -> bool:
    return _USE_NUMBA


def backend() -> str:
    return "numba" if _USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# Running log-product extrema over a window
# ---------------------------------------------------------------------------
#
# For k = 1..budget the accumulator holds, at window offset j,
#   acc_k(j) = sum_{i=start..start+k-1} logw(lo + j + sign*i*step)
# and the outputs are max_j acc_k(j) and min_j acc_k(j).
# Backward products use (start=1, sign=+1); forward products (start=0, sign=-1).


def _running_extrema_numpy(logw, base, lo, hi, step, budget, start, sign):
    width = hi - lo + 1
    acc = np.zeros(width)
    maxs = np.empty(budget)
    mins = np.empty(budget)
    for k in range(budget):
        off = sign * (start + k) * step
        j0 = lo + off - base
        acc += logw[j0 : j0 + width]
        maxs[k] = acc.max()
        mins[k] = acc.min()
    return maxs, mins


@njit(cache=True)
def _running_extrema_numba(logw, base, lo, hi, step, budget, start, sign):  # pragma: no cover - jitted
    width = hi - lo + 1
    acc = np.zeros(width)
    maxs = np.empty(budget)
    mins = np.empty(budget)
    for k in range(budget):
        off = sign * (start + k) * step
        j0 = lo + off - base
        hi_v = -1e308
        lo_v = 1e308
        for j in range(width):
            acc[j] += logw[j0 + j]
            if acc[j] > hi_v:
                hi_v = acc[j]
            if acc[j] < lo_v:
                lo_v = acc[j]
        maxs[k] = hi_v
        mins[k] = lo_v
    return maxs, mins


def running_extrema(logw, base, lo, hi, step, budget, start, sign):
    """Window max/min of running log-products for k = 1..budget.

    ``logw`` must cover every index ``x + sign*i*step`` touched by the sweep,
    with ``logw[0]`` holding the value at lattice index ``base``.
    """
    logw = np.ascontiguousarray(logw, dtype=np.float64)
    args = (logw, int(base), int(lo), int(hi), int(step), int(budget), int(start), int(sign))
    if _USE_NUMBA:
        return _running_extrema_numba(*args)
    return _running_extrema_numpy(*args)


# ---------------------------------------------------------------------------
# Frank-Wolfe over the probability simplex
# ---------------------------------------------------------------------------
#
# Minimizes F(a) = 0.5*a'Ga - b'a over the simplex. The gradient is Ga - b;
# the linear minimization oracle picks the smallest-index minimizing vertex;
# the step size is the exact minimizer of the quadratic along the segment.
# G*a, a'Ga and b'a are maintained incrementally (rank-one updates).


def _fw_numpy(G, b, a0, max_iters, gap_tol):
    a = a0.copy()
    Ga = G @ a
    quad = float(a @ Ga)
    lin = float(b @ a)
    gap = np.inf
    it = 0
    for it in range(1, max_iters + 1):
        grad = Ga - b
        j = int(np.argmin(grad))
        gap = (quad - lin) - float(grad[j])
        if gap <= gap_tol:
            break
        denom = float(G[j, j]) - 2.0 * float(Ga[j]) + quad
        gamma = 1.0 if denom <= 0.0 else min(gap / denom, 1.0)
        keep = 1.0 - gamma
        Gaj = float(Ga[j])
        a *= keep
        a[j] += gamma
        quad = keep * keep * quad + 2.0 * keep * gamma * Gaj + gamma * gamma * float(G[j, j])
        lin = keep * lin + gamma * float(b[j])
        Ga = keep * Ga + gamma * G[:, j]
    return a, float(gap), it


@njit(cache=True)
def _fw_numba(G, b, a0, max_iters, gap_tol):  # pragma: no cover - jitted
    n = G.shape[0]
    a = a0.copy()
    Ga = np.zeros(n)
    for i in range(n):
        s = 0.0
        for j in range(n):
            s += G[i, j] * a[j]
        Ga[i] = s
    quad = 0.0
    lin = 0.0
    for i in range(n):
        quad += a[i] * Ga[i]
        lin += b[i] * a[i]
    gap = np.inf
    it = 0
    for it in range(1, max_iters + 1):
        j = 0
        gmin = Ga[0] - b[0]
        for i in range(1, n):
            gi = Ga[i] - b[i]
            if gi < gmin:
                gmin = gi
                j = i
        gap = (quad - lin) - gmin
        if gap <= gap_tol:
            break
        denom = G[j, j] - 2.0 * Ga[j] + quad
        if denom <= 0.0:
            gamma = 1.0
        else:
            gamma = gap / denom
            if gamma > 1.0:
                gamma = 1.0
        keep = 1.0 - gamma
        Gaj = Ga[j]
        for i in range(n):
            a[i] *= keep
        a[j] += gamma
        quad = keep * keep * quad + 2.0 * keep * gamma * Gaj + gamma * gamma * G[j, j]
        lin = keep * lin + gamma * b[j]
        for i in range(n):
            Ga[i] = keep * Ga[i] + gamma * G[j, i]
    return a, gap, it


def fw_simplex_minimize(G, b, a0=None, max_iters=20000, gap_tol=1e-12):
    """Frank-Wolfe for min_{a in simplex} 0.5*a'Ga - b'a.

    Returns (a, gap, iters) where ``gap`` is recomputed from scratch at the
    final iterate, so it is a true duality-gap certificate for F(a) - F*.
    """
    G = np.ascontiguousarray(G, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    n = G.shape[0]
    if a0 is None:
        a0 = np.zeros(n)
        a0[0] = 1.0
    else:
        a0 = np.ascontiguousarray(a0, dtype=np.float64)
    if _USE_NUMBA:
        a, _, it = _fw_numba(G, b, a0, int(max_iters), float(gap_tol))
    else:
        a, _, it = _fw_numpy(G, b, a0, int(max_iters), float(gap_tol))
    grad = G @ a - b
    gap = float(grad @ a - grad.min())
    return a, gap, it
