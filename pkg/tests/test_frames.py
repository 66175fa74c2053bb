import math

import numpy as np
import pytest

import pseudogram as pg
from pseudogram.arrangement import Arrangement, WeightedPseudocircle
from pseudogram.frames import _jacobi_eigh, longitude_warp
from pseudogram.sphere import random_rotation, unit

from conftest import random_spanning


def random_full_rank_frame(rng, n):
    while True:
        rows = rng.standard_normal((n, 3))
        if np.linalg.svd(rows, compute_uv=False)[-1] > 0.2:
            return pg.Frame(rows)


def test_parseval_examples():
    ok, r = pg.parseval_check(pg.Frame(np.eye(3)))
    assert ok and r == 0.0
    s = 1 / math.sqrt(2)
    split = pg.Frame([[s, 0, 0], [s, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert pg.parseval_check(split)[0]
    bad, r = pg.parseval_check(pg.Frame([[2, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert not bad and abs(r - 3.0) <= 1e-12


def test_stiefel_and_procrustes():
    rng = np.random.default_rng(2)
    f = random_full_rank_frame(rng, 5)
    assert pg.stiefel_dist(f, f) == 0.0
    assert pg.procrustes_gap(f, f) <= 1e-12
    q = random_rotation(rng)
    assert pg.procrustes_gap(f, f.act(q)) <= 1e-9
    g = pg.Frame(f.rows.copy())
    g.rows[2] += [0.0, 0.0, 0.25]
    assert abs(pg.stiefel_dist(f, g) - 0.25) <= 1e-12


def test_procrustes_gap_random_rotations():
    rng = np.random.default_rng(4)
    for _ in range(100):
        f = random_full_rank_frame(rng, 4)
        q = random_rotation(rng)
        assert pg.procrustes_gap(f, f.act(q)) <= 1e-9


def test_spd_inv_sqrt_examples():
    assert np.allclose(pg.spd_inv_sqrt(np.eye(3)), np.eye(3))
    r = pg.spd_inv_sqrt(np.diag([4.0, 1.0, 1.0]))
    assert np.allclose(r, np.diag([0.5, 1.0, 1.0]))
    rng = np.random.default_rng(6)
    for _ in range(50):
        a = rng.standard_normal((3, 3))
        m = a @ a.T + 0.1 * np.eye(3)
        r = pg.spd_inv_sqrt(m)
        assert np.max(np.abs(r @ m @ r - np.eye(3))) <= 1e-10


def test_spd_inv_sqrt_rejects_non_spd():
    with pytest.raises(ValueError):
        pg.spd_inv_sqrt(np.diag([1.0, -1.0, 1.0]))
    with pytest.raises(ValueError):
        pg.spd_inv_sqrt(np.array([[1.0, 0.5, 0], [0, 1, 0], [0, 0, 1.0]]))


def test_jacobi_matches_numpy():
    rng = np.random.default_rng(9)
    for _ in range(25):
        a = rng.standard_normal((3, 3))
        m = a @ a.T
        vals, vecs = _jacobi_eigh(m)
        assert np.max(np.abs(vecs @ np.diag(vals) @ vecs.T - m)) <= 1e-11


def test_orthonormalize_path_examples():
    f = pg.Frame([[2.0, 0, 0], [0, 1.0, 0], [0, 0, 1.0]])
    out = pg.orthonormalize_path(f, 1.0)
    assert np.allclose(out.rows, np.eye(3))
    assert np.allclose(pg.orthonormalize_path(f, 0.0).rows, f.rows)
    # Parseval input is fixed at every t
    p = pg.Frame(np.eye(3))
    for t in np.linspace(0, 1, 5):
        assert np.allclose(pg.orthonormalize_path(p, t).rows, p.rows)


def test_orthonormalize_path_properties():
    rng = np.random.default_rng(13)
    for _ in range(100):
        f = random_full_rank_frame(rng, 5)
        out = pg.orthonormalize_path(f, 1.0)
        assert pg.parseval_check(out)[1] <= 1e-10
        for t in np.linspace(0, 1, 11):
            q = pg.orthonormalize_path(f, t)
            assert np.linalg.svd(q.rows, compute_uv=False)[-1] > 0
        rot = random_rotation(rng)
        lhs = pg.orthonormalize_path(f.act(rot), 1.0).rows
        rhs = pg.orthonormalize_path(f, 1.0).act(rot).rows
        assert np.max(np.abs(lhs - rhs)) <= 1e-9


def test_orthonormalize_rejects_rank_deficient():
    with pytest.raises(ValueError):
        pg.orthonormalize_path(pg.Frame([[1, 0, 0], [1, 0, 0], [2, 0, 0]]), 0.5)


def test_frame_circle_roundtrip(coordinate_circles):
    f = pg.frame_from_circles(coordinate_circles)
    assert np.allclose(f.rows, np.eye(3))
    els = [e.copy() for e in coordinate_circles.elements]
    els[1] = els[1].reversed()
    f2 = pg.frame_from_circles(Arrangement(els, symmetric=True))
    assert np.allclose(f2.rows[1], [0, -1, 0])
    rng = np.random.default_rng(10)
    for _ in range(100):
        rows = rng.standard_normal((4, 3))
        rows[rng.integers(0, 4)] *= 0.0
        back = pg.frame_from_circles(pg.circles_from_frame(pg.Frame(rows)))
        assert np.max(np.abs(back.rows - rows)) <= 1e-8


def test_frame_from_circles_rejects_bent(coordinate_circles):
    arr = pg.non_pappus()
    with pytest.raises(ValueError):
        pg.frame_from_circles(arr)


def test_coord_identity(coordinate_circles):
    q = pg.coord_frame((0, 1, 2), coordinate_circles)
    assert np.array_equal(q, np.eye(3))


def test_coord_equivariance_and_self_normalization():
    rng = np.random.default_rng(14)
    for seed in range(10):
        arr = random_spanning(seed + 50, 5, amplitude=0.04)
        q = random_rotation(rng)
        c = pg.coord_frame((0, 1, 2), arr)
        c_rot = pg.coord_frame((0, 1, 2), pg.act_rotation(arr, q))
        assert np.max(np.abs(c_rot - q.T @ c)) <= 1e-8
        c_self = pg.coord_frame((0, 1, 2), pg.act_rotation(arr, c))
        assert np.max(np.abs(c_self - np.eye(3))) <= 1e-8


def test_coord_rejects_non_basis(coordinate_circles):
    els = [e.copy() for e in coordinate_circles.elements]
    arr = Arrangement([els[0], els[0].copy(), els[1]], symmetric=True)
    with pytest.raises(ValueError):
        pg.coord_frame((0, 1, 2), arr)


def test_longitude_warp_formula():
    fwd, inv = longitude_warp(math.pi / 2)
    assert abs(fwd(math.pi) - math.pi / 2) <= 1e-12
    assert abs(inv(math.pi / 2) - math.pi) <= 1e-12
    fwd, inv = longitude_warp(math.pi)
    for t in np.linspace(-math.pi + 0.01, math.pi, 7):
        assert abs(fwd(t) - t) <= 1e-12


def test_antipodal_warp_identity_on_antipodal(coordinate_circles):
    p = unit([0.0, 1.0, 0.0])
    out = pg.antipodal_warp(coordinate_circles, p, -p)
    for a, b in zip(out.elements, coordinate_circles.elements):
        assert np.max(np.abs(a.vertices - b.vertices)) == 0.0


def test_antipodal_warp_antipodalizes():
    # squash a symmetric arrangement so the S_2 x S_3 vertices stop being
    # antipodal, then check the warp restores antipodality for coord
    arr = random_spanning(61, 4)

    def squash(v):
        w = v + np.array([0.25, 0.0, 0.0])
        return w / np.linalg.norm(w)

    els = []
    for e in arr.elements:
        pts = np.array([squash(v) for v in e.resampled(96)])
        els.append(WeightedPseudocircle(e.weight, pts))
    skew = Arrangement(els, symmetric=False)

    from pseudogram.frames import _basis_vertex

    p1, pm1 = _basis_vertex(skew, 1, 2, 0)
    assert np.linalg.norm(p1 + pm1) > 1e-3  # genuinely non-antipodal
    warped = pg.antipodal_warp(skew, p1, pm1)
    q1, qm1 = _basis_vertex(warped, 1, 2, 0)
    assert np.linalg.norm(q1 + qm1) <= 1e-6
    # coord accepts the skewed arrangement via its internal warp
    q = pg.coord_frame((0, 1, 2), skew)
    assert np.max(np.abs(q.T @ q - np.eye(3))) <= 1e-10
