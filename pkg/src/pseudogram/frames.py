"""Vector-configuration side: Parseval frames, metrics, coord, and the
polar-decomposition orthonormalization path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import sphere
from .arrangement import (
    Arrangement,
    WeightedPseudocircle,
    aim_eval,
    is_spanning,
    pair_relation,
    proj_subset,
)

PARSEVAL_TOL = 1e-9
CIRCLE_SAMPLES = 64


@dataclass
class Frame:
    """Ordered list of n vectors in R^3, stored as the rows of an (n,3) matrix."""

    rows: np.ndarray

    def __post_init__(self):
        self.rows = np.asarray(self.rows, dtype=float)
        if self.rows.ndim != 2 or self.rows.shape[1] != 3:
            raise ValueError("frame rows must form an (n, 3) matrix")

    @property
    def n(self) -> int:
        return len(self.rows)

    def gram(self) -> np.ndarray:
        return self.rows.T @ self.rows

    def act(self, q: np.ndarray) -> "Frame":
        return Frame(self.rows @ sphere.check_rotation(q))

    def to_json_dict(self) -> dict:
        return {"rows": self.rows.tolist()}

    @staticmethod
    def from_json_dict(d: dict) -> "Frame":
        return Frame(np.asarray(d["rows"], dtype=float))


def parseval_check(f: Frame) -> tuple[bool, float]:
    """(is Parseval, max-norm residual of the column Gram minus identity)."""
    residual = float(np.max(np.abs(f.gram() - np.eye(3))))
    return residual <= PARSEVAL_TOL, residual


def stiefel_dist(f: Frame, g: Frame) -> float:
    """max over rows of the Euclidean row distance."""
    if f.n != g.n:
        raise ValueError("frames must have the same number of rows")
    return float(np.max(np.linalg.norm(f.rows - g.rows, axis=1))) if f.n else 0.0


def procrustes_gap(f: Frame, g: Frame) -> float:
    """stiefel_dist(F, G*Q) at the least-squares orthogonal aligner Q.

    Upper-bound surrogate for the Grassmannian quotient metric: the aligner
    minimizes the Frobenius norm, not the row-wise max.
    """
    if f.n != g.n:
        raise ValueError("frames must have the same number of rows")
    u, _, vt = np.linalg.svd(g.rows.T @ f.rows)
    q = u @ vt
    return stiefel_dist(f, g.act(q))


# ---------------------------------------------------------------------------
# SPD roots and the orthonormalization path
# ---------------------------------------------------------------------------


def _jacobi_eigh(m: np.ndarray, tol: float = 1e-14, sweeps: int = 64):
    """Cyclic Jacobi eigendecomposition of a small symmetric matrix."""
    a = np.array(m, dtype=float)
    k = a.shape[0]
    v = np.eye(k)
    for _ in range(sweeps):
        off = 0.0
        for p in range(k - 1):
            for q in range(p + 1, k):
                off = max(off, abs(a[p, q]))
        if off <= tol:
            break
        for p in range(k - 1):
            for q in range(p + 1, k):
                if abs(a[p, q]) <= tol:
                    continue
                theta = 0.5 * math.atan2(2 * a[p, q], a[q, q] - a[p, p])
                c, s = math.cos(theta), math.sin(theta)
                rot = np.eye(k)
                rot[p, p] = c
                rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                v = v @ rot
    return np.diag(a).copy(), v


def spd_inv_sqrt(m: np.ndarray) -> np.ndarray:
    """Inverse square root of a symmetric positive definite matrix."""
    m = np.asarray(m, dtype=float)
    if np.max(np.abs(m - m.T)) > 1e-10:
        raise ValueError("matrix is not symmetric within 1e-10")
    vals, vecs = _jacobi_eigh(m)
    if np.min(vals) <= 1e-12:
        raise ValueError("matrix is not positive definite")
    r = vecs @ np.diag(1.0 / np.sqrt(vals)) @ vecs.T
    if np.max(np.abs(r @ m @ r - np.eye(len(m)))) > 1e-10:
        raise ValueError("inverse square root residual exceeded 1e-10")
    return r


def orthonormalize_path(f: Frame, t: float) -> Frame:
    """q(F, t) = F (t (F^T F)^{-1/2} + (1-t) I); q(F, 1) is Parseval."""
    gram = f.gram()
    vals, _ = _jacobi_eigh(gram)
    if math.sqrt(max(float(np.min(vals)), 0.0)) <= 1e-10:
        raise ValueError("frame is rank deficient")
    mix = t * spd_inv_sqrt(gram) + (1.0 - t) * np.eye(3)
    return Frame(f.rows @ mix)


# ---------------------------------------------------------------------------
# Great circles <-> frames
# ---------------------------------------------------------------------------


def circle_element(normal: np.ndarray, count: int = CIRCLE_SAMPLES) -> WeightedPseudocircle:
    """Symmetric polygon approximating the great circle with the given
    weighted normal; the + side is the side the normal points to."""
    w = float(np.linalg.norm(normal))
    if w < 1e-15:
        return WeightedPseudocircle(0.0)
    n = np.asarray(normal, dtype=float) / w
    t1, t2 = sphere.tangent_basis(n)
    angles = 2 * math.pi * np.arange(count) / count
    verts = np.cos(angles)[:, None] * t1[None, :] + np.sin(angles)[:, None] * t2[None, :]
    return WeightedPseudocircle(w, verts)


def circles_from_frame(f: Frame, count: int = CIRCLE_SAMPLES) -> Arrangement:
    """Arrangement of symmetric great-circle polygons with the frame's rows
    as weighted normals; zero rows become trivial elements."""
    return Arrangement([circle_element(r, count) for r in f.rows], symmetric=True)


def fitted_normal(element: WeightedPseudocircle, tol: float = 1e-6) -> np.ndarray:
    """Oriented unit normal of a great-circle element.

    Rejects curves whose vertices stray more than tol from a common plane.
    """
    v = element.vertices
    _, vecs = _jacobi_eigh(v.T @ v)
    resid = [float(np.max(np.abs(v @ vecs[:, k]))) for k in range(3)]
    k = int(np.argmin(resid))
    if resid[k] > tol:
        raise ValueError("element is not a great circle within tolerance")
    n = vecs[:, k]
    if float(np.dot(n, element.pole())) < 0:
        n = -n
    return n


def frame_from_circles(arr: Arrangement, tol: float = 1e-6) -> Frame:
    """Weighted oriented normals of a great-circle arrangement."""
    rows = []
    for e in arr.elements:
        if e.trivial:
            rows.append(np.zeros(3))
        else:
            rows.append(e.weight * fitted_normal(e, tol))
    return Frame(np.array(rows))


# ---------------------------------------------------------------------------
# coord and the polar warp
# ---------------------------------------------------------------------------


def _basis_vertex(arr: Arrangement, j: int, k: int, i_plus: int) -> tuple[np.ndarray, np.ndarray]:
    """(p, p_opposite): crossing points of S_j and S_k, p on the + side of i_plus."""
    rel = pair_relation(arr, j, k)
    if rel.kind != "crossing" or rel.count != 2:
        raise ValueError(f"elements {j} and {k} do not cross transversally twice")
    a, b = rel.crossings[0].point, rel.crossings[1].point
    sa = aim_eval(arr.elements[i_plus], a)
    sb = aim_eval(arr.elements[i_plus], b)
    if sa == sb or sa == 0 or sb == 0:
        raise ValueError("basis vertex signs are degenerate")
    return (a, b) if sa > 0 else (b, a)


def chirotope_value(arr: Arrangement, i: int, j: int, k: int) -> int:
    """chi(i, j, k) computed directly from the crossing-point rule."""
    from .om import _minus_to_plus_crossing

    p = _minus_to_plus_crossing(arr, j, k)
    if p is None:
        return 0
    return aim_eval(arr.elements[i], p)


def longitude_warp(omega: float):
    """(forward, inverse) longitude maps of the polar warp.

    forward sends longitude pi to omega (rescaling [0, pi] -> [0, omega] and
    [-pi, 0] -> [omega - 2 pi, 0]); the inverse straightens a point at
    longitude omega out to pi.  Longitudes are taken in (-pi, pi].
    """
    if not (0 < omega <= math.pi):
        raise ValueError("omega must lie in (0, pi]")

    def forward(theta: float) -> float:
        if theta >= 0:
            return theta * omega / math.pi
        return theta * (2.0 - omega / math.pi)

    def inverse(theta: float) -> float:
        if theta >= 0:
            if theta <= omega:
                return theta * math.pi / omega
            return math.pi + (theta - omega) * math.pi / (2 * math.pi - omega)
        return theta * math.pi / (2 * math.pi - omega)

    return forward, inverse


def antipodal_warp(
    arr: Arrangement, p1: np.ndarray, p_minus1: np.ndarray, resample: int = 64
) -> Arrangement:
    """Longitude-rescaling homeomorphism making the images of p1 and
    p_minus1 antipodal; already-antipodal inputs return an identical copy."""
    p1 = sphere.unit(p1)
    p_minus1 = sphere.unit(p_minus1)
    if np.linalg.norm(p1 + p_minus1) <= 1e-9:
        return arr.copy()
    if np.linalg.norm(p1 - p_minus1) <= 1e-9:
        raise ValueError("warp endpoints coincide")
    axis = sphere.unit(np.cross(p1, p_minus1))
    e_y = np.cross(axis, p1)
    omega = math.atan2(float(np.dot(p_minus1, e_y)), float(np.dot(p_minus1, p1)))
    if omega <= 0:  # p_minus1 is at positive longitude by construction of axis
        raise sphere.DegeneracyError("warp frame construction failed")
    _, inverse = longitude_warp(omega)

    def warp_point(v):
        h = float(np.dot(v, axis))
        x = float(np.dot(v, p1))
        y = float(np.dot(v, e_y))
        r = math.hypot(x, y)
        if r < 1e-14:
            return v.copy()
        theta = math.atan2(y, x)
        theta2 = inverse(theta)
        return x_axis_point(p1, e_y, axis, r, theta2, h)

    els = []
    for e in arr.elements:
        if e.trivial:
            els.append(WeightedPseudocircle(0.0))
            continue
        pts = e.resampled(max(resample, len(e.vertices)))
        # keep the marked points exact: curves through p1 or p_minus1 get
        # them as vertices, so their warped images stay crossing points
        pts = _insert_on_curve(e, pts, (p1, p_minus1))
        warped = np.array([warp_point(v) for v in pts])
        els.append(WeightedPseudocircle(e.weight, sphere.unit_rows(warped)))
    out = Arrangement(els, symmetric=False)
    return out


def _insert_on_curve(e: WeightedPseudocircle, pts: np.ndarray, marks) -> np.ndarray:
    out = pts
    for q in marks:
        if float(e.distance_to(q[None, :])[0]) > 1e-6:
            continue
        if np.min(np.linalg.norm(out - q[None, :], axis=1)) <= 1e-12:
            continue
        tmp = WeightedPseudocircle(e.weight, out)
        s = tmp.param_of(q)
        _, _, _, _, cum = tmp._edges()
        idx = int(np.searchsorted(cum, s, side="right"))
        out = np.insert(out, min(idx, len(out)), q, axis=0)
    return out


def x_axis_point(ex, ey, ez, r, theta, h):
    return r * math.cos(theta) * ex + r * math.sin(theta) * ey + h * ez


def coord_frame(basis, arr: Arrangement, _warped: bool = False) -> np.ndarray:
    """The coordinate-fixing rotation of an ordered basis.

    Columns: u1 = p1 (the S_{i2} x S_{i3} vertex positive on element i1),
    u2 = the normalized component of p2 orthogonal to u1, and
    u3 = chi(i1,i2,i3) (u1 x u2).  Arrangements whose p_{-1} is not the
    antipode of p1 are first straightened by the polar warp.
    """
    i1, i2, i3 = (int(i) for i in basis)
    if len({i1, i2, i3}) < 3:
        raise ValueError("basis indices must be distinct")
    if not is_spanning(proj_subset(arr, (i1, i2, i3))):
        raise ValueError(f"({i1},{i2},{i3}) is not a basis of the arrangement")
    p1, pm1 = _basis_vertex(arr, i2, i3, i1)
    if np.linalg.norm(p1 + pm1) > 1e-6:
        if _warped:
            raise sphere.DegeneracyError("polar warp failed to antipodalize p1")
        warped = antipodal_warp(arr, p1, pm1)
        return coord_frame(basis, warped, _warped=True)
    p2, _ = _basis_vertex(arr, i1, i3, i2)
    u1 = p1
    u2 = p2 - float(np.dot(u1, p2)) * u1
    nu2 = np.linalg.norm(u2)
    if nu2 < 1e-9:
        raise sphere.DegeneracyError("p2 collinear with p1")
    u2 = u2 / nu2
    chi = chirotope_value(arr, i1, i2, i3)
    if chi == 0:
        raise sphere.DegeneracyError("chirotope vanished on a spanning basis")
    u3 = chi * np.cross(u1, u2)
    return np.column_stack([u1, u2, u3])
