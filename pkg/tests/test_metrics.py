import numpy as np

import pseudogram as pg
from pseudogram import metrics
from pseudogram.arrangement import WeightedPseudocircle, weighted_frechet

from conftest import random_spanning


def unit_equator(count=64):
    t = 2 * np.pi * np.arange(count) / count
    v = np.stack([np.cos(t), np.sin(t), np.zeros_like(t)], axis=1)
    return WeightedPseudocircle(1.0, v)


def test_resample_preserves_curve():
    eq = unit_equator()
    r = metrics.resample_closed(eq.vertices, 128)
    assert len(r) == 128
    assert np.max(np.abs(np.linalg.norm(r, axis=1) - 1)) <= 1e-12
    assert np.max(np.abs(r[:, 2])) <= 1e-12


def test_weighted_frechet_identity():
    eq = unit_equator()
    assert weighted_frechet(eq, eq) == 0.0


def test_weighted_frechet_scaled_copy():
    eq = unit_equator()
    half = WeightedPseudocircle(0.5, eq.vertices.copy())
    assert abs(weighted_frechet(eq, half) - 0.5) <= 1e-9


def test_weighted_frechet_reversal_reaches_sum_of_weights():
    # antipodally symmetric reversal pair: distance equals |a| + |b|
    eq = unit_equator()
    rev = eq.reversed()
    d = weighted_frechet(eq, rev)
    assert abs(d - 2.0) <= 0.02


def test_weighted_frechet_trivial_elements():
    eq = unit_equator()
    zero = WeightedPseudocircle(0.0)
    light = WeightedPseudocircle(0.3, eq.vertices)
    assert weighted_frechet(zero, zero) == 0.0
    assert weighted_frechet(eq, zero) == 1.0
    assert weighted_frechet(zero, light) == 0.3


def test_weighted_frechet_upper_bound():
    rng = np.random.default_rng(5)
    for seed in range(8):
        arr = random_spanning(seed, 4, amplitude=0.05)
        a, b = arr.elements[0], arr.elements[1]
        assert weighted_frechet(a, b) <= a.weight + b.weight + 0.02


def test_arrangement_dist_examples():
    arr = random_spanning(2, 4)
    assert pg.arrangement_dist(arr, arr) == 0.0
    other = arr.copy()
    other.elements[1] = WeightedPseudocircle(1.25, other.elements[1].vertices.copy())
    d = pg.arrangement_dist(arr, other)
    assert abs(d - 0.25) <= 1e-9
    # max bound: at least every single pair distance
    for ea, eb in zip(arr.elements, other.elements):
        assert d >= weighted_frechet(ea, eb) - 1e-12


def test_hausdorff_symmetric():
    rng = np.random.default_rng(0)
    p = rng.standard_normal((40, 3))
    q = rng.standard_normal((30, 3))
    assert metrics.hausdorff(p, q) == metrics.hausdorff(q, p)


def test_frechet_fallback_matches_numba():
    # the pure-Python DP and the jitted kernel agree exactly
    rng = np.random.default_rng(3)
    p = metrics.resample_closed(unit_equator().vertices, 32)
    q = rng.standard_normal((32, 3))
    q /= np.linalg.norm(q, axis=1)[:, None]
    q = metrics.resample_closed(q[np.argsort(np.arctan2(q[:, 1], q[:, 0]))], 32)
    diff = p[:, None, :] - q[None, :, :]
    dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    slow = metrics._frechet_all_shifts_py(dist)
    if metrics._HAVE_NUMBA:
        fast = float(metrics._frechet_all_shifts(dist))
        assert abs(fast - slow) <= 1e-12
