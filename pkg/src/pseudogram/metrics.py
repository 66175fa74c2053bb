"""Curve metrics: discrete cyclic Frechet distance and helpers.

The weighted Frechet distance between weighted pseudocircles is approximated
by the discrete Frechet distance between constant-speed resamplings of the
scaled curves, minimized over all cyclic shifts of one parameterization.
This is an upper bound of the continuous infimum within O(r * pi / N).
"""

from __future__ import annotations

import math

import numpy as np

try:
    from numba import config as _numba_config
    from numba import njit, prange

    _numba_config.THREADING_LAYER = "workqueue"
    _HAVE_NUMBA = True
except Exception:  # pragma: no cover
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        if args and callable(args[0]):
            return args[0]
        return wrap

    prange = range

FRECHET_SAMPLES = 256


def resample_closed(vertices: np.ndarray, count: int) -> np.ndarray:
    """Constant-speed resampling of a closed spherical polygon.

    Vertex k of the output sits at arc-length fraction k/count along the
    curve, starting at the first input vertex and preserving travel order.
    """
    v = np.asarray(vertices, dtype=float)
    k = len(v)
    nxt = np.roll(v, -1, axis=0)
    dots = np.clip(np.einsum("ij,ij->i", v, nxt), -1.0, 1.0)
    seg = np.arccos(dots)
    total = float(np.sum(seg))
    if total < 1e-12:
        return np.repeat(v[:1], count, axis=0)
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    targets = np.arange(count) * (total / count)
    idx = np.clip(np.searchsorted(cum, targets, side="right") - 1, 0, k - 1)
    out = np.empty((count, 3))
    for i, (j, s) in enumerate(zip(idx, targets)):
        ang = seg[j]
        if ang < 1e-15:
            out[i] = v[j]
            continue
        t = (s - cum[j]) / ang
        sa = math.sin(ang)
        out[i] = (math.sin((1 - t) * ang) * v[j] + math.sin(t * ang) * nxt[j]) / sa
    return out


@njit(cache=True, fastmath=True)
def _frechet_one_shift(dist: np.ndarray, shift: int) -> float:  # pragma: no cover
    n = dist.shape[0]
    m = n + 1  # closed curves: couple index 0 back to itself
    prev = np.empty(m)
    cur = np.empty(m)
    for j in range(m):
        d = dist[0, (j + shift) % n]
        prev[j] = d if j == 0 else max(prev[j - 1], d)
    for i in range(1, m):
        ii = i % n
        cur[0] = max(prev[0], dist[ii, shift % n])
        for j in range(1, m):
            d = dist[ii, (j + shift) % n]
            best = prev[j]
            if prev[j - 1] < best:
                best = prev[j - 1]
            if cur[j - 1] < best:
                best = cur[j - 1]
            cur[j] = d if d > best else best
        prev, cur = cur, prev
    return prev[m - 1]


@njit(cache=True, fastmath=True, parallel=True)
def _frechet_all_shifts(dist: np.ndarray) -> float:  # pragma: no cover
    n = dist.shape[0]
    res = np.empty(n)
    for s in prange(n):
        res[s] = _frechet_one_shift(dist, s)
    best = res[0]
    for s in range(1, n):
        if res[s] < best:
            best = res[s]
    return best


def _frechet_all_shifts_py(dist: np.ndarray) -> float:
    n = dist.shape[0]
    best = math.inf
    for s in range(n):
        best = min(best, float(_frechet_one_shift(dist, s)))
    return best


def cyclic_frechet(p: np.ndarray, q: np.ndarray) -> float:
    """Discrete cyclic Frechet distance between two closed point sequences.

    Both sequences must have the same length and traverse their curves in the
    intended (matching) orientation.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if len(p) != len(q):
        raise ValueError("sequences must have equal length")
    diff = p[:, None, :] - q[None, :, :]
    dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    if _HAVE_NUMBA:
        return float(_frechet_all_shifts(dist))
    return _frechet_all_shifts_py(dist)


def hausdorff(p: np.ndarray, q: np.ndarray) -> float:
    """Symmetric Hausdorff distance between two point clouds."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    diff = p[:, None, :] - q[None, :, :]
    d = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))
