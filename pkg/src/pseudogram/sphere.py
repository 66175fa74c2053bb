"""Low-level spherical and projective geometry kernel.

Everything here works on unit vectors in R^3 represented as numpy arrays of
shape (3,) (or stacks of shape (k, 3)).  Curves are handled one level up, in
``pseudogram.arrangement``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Incidence tolerance (chordal distance / normalized inner products).
EPS_GEO_DEFAULT = 1e-9
EPS_GEO = EPS_GEO_DEFAULT

# Determinant threshold for the orientation predicate.
EPS_ORIENT = 1e-12

# Crossing points closer than this are merged into a single vertex.
VERTEX_MERGE_TOL = 1e-7

# Angle of the seeded retry rotations used to resolve near-degeneracies.
PERTURB_ANGLE = 1e-7
PERTURB_RETRIES = 3


class DegeneracyError(Exception):
    """An incidence decision stayed unstable under the retry policy."""


def set_tolerance(eps: float) -> None:
    """Override the global incidence tolerance (CLI --tolerance)."""
    global EPS_GEO
    if not (0 < eps < 1e-2):
        raise ValueError(f"tolerance out of range: {eps}")
    EPS_GEO = float(eps)


def reset_tolerance() -> None:
    global EPS_GEO
    EPS_GEO = EPS_GEO_DEFAULT


def unit(v) -> np.ndarray:
    """Normalize to a unit vector; rejects near-zero input."""
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if n < 1e-15:
        raise ValueError("cannot normalize a (near-)zero vector")
    return v / n


def unit_rows(vs: np.ndarray) -> np.ndarray:
    vs = np.asarray(vs, dtype=float)
    n = np.linalg.norm(vs, axis=-1, keepdims=True)
    if np.any(n < 1e-15):
        raise ValueError("cannot normalize a (near-)zero row")
    return vs / n


def angle_between(a: np.ndarray, b: np.ndarray) -> float:
    """Numerically stable angle between unit vectors."""
    return math.atan2(np.linalg.norm(np.cross(a, b)), float(np.dot(a, b)))


def orient(a, b, c) -> int:
    """Sign of det[a b c]; 0 within EPS_ORIENT."""
    d = float(np.linalg.det(np.array([a, b, c], dtype=float)))
    if abs(d) <= EPS_ORIENT:
        return 0
    return 1 if d > 0 else -1


def sign_with_tol(x: float, tol: float) -> int:
    if abs(x) <= tol:
        return 0
    return 1 if x > 0 else -1


def edge_side(u, v, x) -> int:
    """Side of x relative to the oriented geodesic edge u -> v.

    + is the side the normal u x v points to; for the counterclockwise
    equator this assigns + to the north pole.
    """
    n = np.cross(u, v)
    nn = np.linalg.norm(n)
    if nn < 1e-15:
        raise ValueError("degenerate edge (parallel or antipodal endpoints)")
    return sign_with_tol(float(np.dot(n, x)) / nn, EPS_ORIENT)


@dataclass(frozen=True)
class Arc:
    """Minor geodesic arc between two non-antipodal unit vectors."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = unit(self.a)
        b = unit(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if np.linalg.norm(a - b) <= 1e-9:
            raise ValueError("arc endpoints coincide")
        if np.linalg.norm(a + b) <= 1e-9:
            raise ValueError("arc endpoints are antipodal (no unique minor arc)")

    @property
    def normal(self) -> np.ndarray:
        return unit(np.cross(self.a, self.b))

    @property
    def angle(self) -> float:
        return angle_between(self.a, self.b)

    def point_at(self, t: float) -> np.ndarray:
        """Constant-speed parameterization, t in [0, 1]."""
        ang = self.angle
        if ang < 1e-15:
            return self.a.copy()
        s = math.sin(ang)
        return (math.sin((1 - t) * ang) * self.a + math.sin(t * ang) * self.b) / s

    def contains(self, x, tol: float | None = None) -> bool:
        tol = EPS_GEO if tol is None else tol
        if abs(float(np.dot(self.normal, x))) > math.sqrt(2 * tol):
            # quick reject on the plane test; sqrt keeps the chordal
            # tolerance roughly consistent for shallow angles
            if abs(float(np.dot(self.normal, x))) > 1e-6:
                return False
        ang = self.angle
        return angle_between(self.a, x) + angle_between(x, self.b) <= ang + 4 * tol + 1e-12


@dataclass(frozen=True)
class ArcHit:
    """One intersection point of two arcs."""

    point: np.ndarray
    transversal: bool


def _near_endpoint(x, arc: Arc, tol: float) -> bool:
    return (
        np.linalg.norm(x - arc.a) <= tol
        or np.linalg.norm(x - arc.b) <= tol
    )


def arc_intersect(p: Arc, q: Arc, tol: float | None = None) -> list[ArcHit]:
    """Intersection points of two minor arcs.

    Returns 0, 1 or 2 hits; 2 hits only arise when the arcs overlap along a
    common great circle, in which case the overlap endpoints are returned.
    Hits interior to both arcs are flagged transversal; hits at an endpoint
    of either arc are touching.
    """
    tol = EPS_GEO if tol is None else tol
    n1, n2 = p.normal, q.normal
    axis = np.cross(n1, n2)
    na = np.linalg.norm(axis)
    if na <= 1e-12:
        # same (or opposite) great circle: report overlap endpoints
        hits = []
        for x in (p.a, p.b):
            if q.contains(x, tol):
                hits.append(x)
        for x in (q.a, q.b):
            if p.contains(x, tol) and all(np.linalg.norm(x - h) > tol for h in hits):
                hits.append(x)
        hits = hits[:2]
        return [ArcHit(point=h, transversal=False) for h in hits]
    axis = axis / na
    out = []
    for x in (axis, -axis):
        if p.contains(x, tol) and q.contains(x, tol):
            trans = not (_near_endpoint(x, p, 10 * tol) or _near_endpoint(x, q, 10 * tol))
            out.append(ArcHit(point=x, transversal=trans))
    return out


# ---------------------------------------------------------------------------
# Chart: the 2-to-1 projection onto RP^2 determined by a basis of weighted
# normals.  Affine points are ordinary R^2 coordinates, horizon points are
# direction classes d ~ -d.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChartPoint:
    """Point of RP^2: either Affine(u, v) or Horizon(direction class)."""

    u: float = 0.0
    v: float = 0.0
    horizon: bool = False
    direction: np.ndarray | None = None

    @staticmethod
    def affine(u: float, v: float) -> "ChartPoint":
        return ChartPoint(u=float(u), v=float(v))

    @staticmethod
    def at_horizon(direction) -> "ChartPoint":
        d = np.asarray(direction, dtype=float)
        n = np.linalg.norm(d)
        if n < 1e-15:
            raise ValueError("horizon direction must be nonzero")
        d = d / n
        d = canonical_direction(d)
        return ChartPoint(horizon=True, direction=d)

    def close_to(self, other: "ChartPoint", tol: float = 1e-9) -> bool:
        if self.horizon != other.horizon:
            return False
        if self.horizon:
            return bool(np.linalg.norm(self.direction - other.direction) <= tol)
        return abs(self.u - other.u) <= tol and abs(self.v - other.v) <= tol


def canonical_direction(d: np.ndarray) -> np.ndarray:
    """Pick the representative of {d, -d} with positive leading coordinate."""
    if d[0] < 0 or (abs(d[0]) < 1e-15 and d[1] < 0):
        return -d
    return d


@dataclass(frozen=True)
class ChartBasis:
    """Triple of independent vectors; a1 spans the horizon circle."""

    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray

    def __post_init__(self):
        m = self.matrix
        s = np.prod(np.linalg.norm(m, axis=1))
        if s < 1e-30 or abs(np.linalg.det(m)) / s <= 1e-12:
            raise ValueError("chart basis is (near-)degenerate")

    @property
    def matrix(self) -> np.ndarray:
        return np.array([self.a1, self.a2, self.a3], dtype=float)


STANDARD_CHART = None  # initialized below


def to_chart(basis: ChartBasis, x) -> ChartPoint:
    """Project a sphere point to the chart: (<a2,x>/<a1,x>, <a3,x>/<a1,x>)."""
    x = np.asarray(x, dtype=float)
    d1 = float(np.dot(basis.a1, x))
    d2 = float(np.dot(basis.a2, x))
    d3 = float(np.dot(basis.a3, x))
    if abs(d1) <= EPS_ORIENT * max(1.0, abs(d2), abs(d3)):
        return ChartPoint.at_horizon((d2, d3))
    return ChartPoint.affine(d2 / d1, d3 / d1)


def from_chart(basis: ChartBasis, p: ChartPoint) -> tuple[np.ndarray, np.ndarray]:
    """Antipodal preimage pair of a chart point."""
    m = basis.matrix
    if p.horizon:
        rhs = np.array([0.0, p.direction[0], p.direction[1]])
    else:
        rhs = np.array([1.0, p.u, p.v])
    x = np.linalg.solve(m, rhs)
    x = unit(x)
    if not p.horizon and float(np.dot(basis.a1, x)) < 0:
        x = -x
    return x, -x


STANDARD_CHART = ChartBasis(
    a1=np.array([1.0, 0.0, 0.0]),
    a2=np.array([0.0, 1.0, 0.0]),
    a3=np.array([0.0, 0.0, 1.0]),
)


# ---------------------------------------------------------------------------
# Rotations
# ---------------------------------------------------------------------------


def check_rotation(q: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    if q.shape != (3, 3):
        raise ValueError("expected a 3x3 matrix")
    if np.max(np.abs(q.T @ q - np.eye(3))) > tol:
        raise ValueError("matrix is not orthogonal within tolerance")
    return q


def rotation_about(axis, angle: float) -> np.ndarray:
    """Rodrigues rotation matrix about a unit axis."""
    k = unit(axis)
    kx = np.array([
        [0.0, -k[2], k[1]],
        [k[2], 0.0, -k[0]],
        [-k[1], k[0], 0.0],
    ])
    return np.eye(3) + math.sin(angle) * kx + (1 - math.cos(angle)) * (kx @ kx)


def random_rotation(rng: np.random.Generator, special: bool = False) -> np.ndarray:
    """Haar-ish random element of O(3) (or SO(3) when special=True)."""
    a = rng.standard_normal((3, 3))
    q, r = np.linalg.qr(a)
    q = q @ np.diag(np.sign(np.diag(r)))
    if special and np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def perturbation_rotation(seed: int, retry: int, index: int) -> np.ndarray:
    """Deterministic tiny rotation used by the degeneracy retry policy."""
    rng = np.random.default_rng(
        np.random.SeedSequence(entropy=0x5EED, spawn_key=(seed, retry, index))
    )
    axis = unit(rng.standard_normal(3))
    return rotation_about(axis, PERTURB_ANGLE)


def tangent_basis(v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Right-handed orthonormal (t1, t2) spanning the tangent plane at v."""
    a = np.array([1.0, 0.0, 0.0])
    if abs(float(np.dot(a, v))) > 0.9:
        a = np.array([0.0, 1.0, 0.0])
    t1 = unit(np.cross(v, a))
    t2 = np.cross(v, t1)
    return t1, t2


def batch_arc_hits(v1, w1, n1, ang1, v2, w2, n2, ang2, pairs, tol: float = 1e-8):
    """Vectorized transversal arc-arc intersections for index pairs.

    Returns (hits, coplanar) where hits is a list of (a, b, point) for
    transversal candidates on both arcs and coplanar the index pairs whose
    edge planes are (near-)parallel, to be refined separately.
    """
    if len(pairs) == 0:
        return [], np.empty((0, 2), dtype=int)
    pairs = np.asarray(pairs, dtype=int)
    a = pairs[:, 0]
    b = pairs[:, 1]
    axis = np.cross(n1[a], n2[b])
    nn = np.linalg.norm(axis, axis=1)
    coplanar = pairs[nn <= 1e-12]
    ok = nn > 1e-12
    hits = []
    if np.any(ok):
        ia, ib = a[ok], b[ok]
        x = axis[ok] / nn[ok][:, None]
        for sgn in (1.0, -1.0):
            p = sgn * x
            ina = _angles_to(p, v1[ia]) + _angles_to(p, w1[ia]) <= ang1[ia] + tol
            inb = _angles_to(p, v2[ib]) + _angles_to(p, w2[ib]) <= ang2[ib] + tol
            for idx in np.nonzero(ina & inb)[0]:
                hits.append((int(ia[idx]), int(ib[idx]), p[idx]))
    return hits, coplanar


def _angles_to(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Row-wise angles between unit vectors, stable near 0 and pi."""
    cr = np.linalg.norm(np.cross(p, q), axis=1)
    dt = np.einsum("ij,ij->i", p, q)
    return np.arctan2(cr, dt)
