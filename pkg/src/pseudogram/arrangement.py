"""Weighted pseudocircle arrangements on the 2-sphere.

An element is a nonnegative weight plus (when the weight is positive) an
oriented simple closed piecewise-geodesic curve, stored as its vertex list in
positive travel order.  The + side of every edge (u, v) is the side the
normal u x v points to.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import metrics, sphere
from .sphere import DegeneracyError

COINCIDENCE_TOL = 1e-6
SYMMETRY_TOL = 1e-9


class InvalidArrangementError(Exception):
    """Raised when an operation requires a valid (or spanning) arrangement."""


# ---------------------------------------------------------------------------
# Elements and arrangements
# ---------------------------------------------------------------------------


class WeightedPseudocircle:
    """A weight plus an oriented closed spherical polygon (kernel curve)."""

    def __init__(self, weight: float, vertices=None):
        self.weight = float(weight)
        if self.weight < 0:
            raise ValueError("weight must be nonnegative")
        if self.weight == 0.0:
            self.vertices = None
        else:
            if vertices is None:
                raise ValueError("positive-weight element requires a curve")
            v = np.asarray(vertices, dtype=float)
            if v.ndim != 2 or v.shape[1] != 3 or len(v) < 3:
                raise ValueError("curve must be a list of >= 3 points in R^3")
            norms = np.linalg.norm(v, axis=1)
            if np.any(np.abs(norms - 1.0) > 1e-6):
                raise ValueError("curve vertices must be unit within 1e-6")
            self.vertices = v / norms[:, None]
        self._cache: dict = {}

    # -- basic structure ----------------------------------------------------

    @property
    def trivial(self) -> bool:
        return self.vertices is None

    def __len__(self) -> int:
        return 0 if self.trivial else len(self.vertices)

    def copy(self) -> "WeightedPseudocircle":
        if self.trivial:
            return WeightedPseudocircle(0.0)
        return WeightedPseudocircle(self.weight, self.vertices.copy())

    def reversed(self) -> "WeightedPseudocircle":
        if self.trivial:
            return WeightedPseudocircle(0.0)
        return WeightedPseudocircle(self.weight, self.vertices[::-1].copy())

    def is_symmetric(self, tol: float = SYMMETRY_TOL) -> bool:
        if self.trivial:
            return True
        k = len(self.vertices)
        if k % 2 != 0:
            return False
        half = k // 2
        return bool(
            np.max(np.linalg.norm(self.vertices + np.roll(self.vertices, -half, axis=0), axis=1))
            <= tol
        )

    # -- cached per-curve geometry -------------------------------------------

    def _edges(self):
        """(starts, ends, unit normals, edge angles, cumulative params)."""
        if "edges" not in self._cache:
            v = self.vertices
            w = np.roll(v, -1, axis=0)
            n = np.cross(v, w)
            nn = np.linalg.norm(n, axis=1)
            if np.any(nn < 1e-14):
                raise ValueError("curve has a degenerate edge")
            n = n / nn[:, None]
            dots = np.clip(np.einsum("ij,ij->i", v, w), -1.0, 1.0)
            ang = np.arccos(dots)
            cum = np.concatenate([[0.0], np.cumsum(ang)])
            self._cache["edges"] = (v, w, n, ang, cum)
        return self._cache["edges"]

    @property
    def total_angle(self) -> float:
        return float(self._edges()[4][-1])

    def _edge_frames(self):
        """Per-edge orthonormal in-plane frames for fast point queries."""
        if "frames" not in self._cache:
            v, w, n, ang, _ = self._edges()
            sin = np.sin(ang)[:, None]
            b = (w - np.cos(ang)[:, None] * v) / np.where(sin < 1e-15, 1.0, sin)
            self._cache["frames"] = (v, b, n, ang)
        return self._cache["frames"]

    def pole(self) -> np.ndarray:
        """A point far from the curve, on its + side."""
        if "pole" not in self._cache:
            v, w, n, ang, _ = self._edges()
            s = (n * ang[:, None]).sum(axis=0)
            if np.linalg.norm(s) < 1e-9:
                s = n[0]
            self._cache["pole"] = sphere.unit(s)
        return self._cache["pole"]

    def point_at(self, param: float) -> np.ndarray:
        """Point at a cyclic arc-length parameter in [0, total_angle)."""
        v, w, n, ang, cum = self._edges()
        total = cum[-1]
        s = param % total
        j = int(np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(ang) - 1))
        if ang[j] < 1e-15:
            return v[j].copy()
        t = (s - cum[j]) / ang[j]
        sa = math.sin(ang[j])
        return (math.sin((1 - t) * ang[j]) * v[j] + math.sin(t * ang[j]) * w[j]) / sa

    def param_of(self, x: np.ndarray) -> float:
        """Arc-length parameter of the curve point nearest to x."""
        v, w, n, ang, cum = self._edges()
        d, feet, inspan = _edge_distances(np.asarray(x, float)[None, :], v, w, n, ang)
        j = int(np.argmin(d[0]))
        if inspan[0, j]:
            foot = feet[0, j]
            t = sphere.angle_between(v[j], foot)
        else:
            t = 0.0 if np.linalg.norm(x - v[j]) <= np.linalg.norm(x - w[j]) else ang[j]
        return float((cum[j] + min(t, ang[j])) % cum[-1])

    def distance_to(self, points: np.ndarray) -> np.ndarray:
        """Chordal distance from each query point to the curve."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        v, w, n, ang, _ = self._edges()
        d, _, _ = _edge_distances(pts, v, w, n, ang)
        return d.min(axis=1)

    def resampled(self, count: int) -> np.ndarray:
        key = ("resampled", count)
        if key not in self._cache:
            self._cache[key] = metrics.resample_closed(self.vertices, count)
        return self._cache[key]


def _edge_distances(pts, v, w, n, ang):
    """Distances from points (m,3) to each edge arc (k,): (m,k) array.

    Also returns the normalized feet on each great circle and an in-span mask
    telling whether the foot lies on the arc.
    """
    t = pts @ n.T  # (m, k) signed plane offsets
    foot = pts[:, None, :] - t[:, :, None] * n[None, :, :]
    fn = np.linalg.norm(foot, axis=2)
    fn = np.maximum(fn, 1e-15)
    foot = foot / fn[:, :, None]
    ang_av = np.arccos(np.clip(np.einsum("mkj,kj->mk", foot, v), -1.0, 1.0))
    ang_bw = np.arccos(np.clip(np.einsum("mkj,kj->mk", foot, w), -1.0, 1.0))
    inspan = ang_av + ang_bw <= ang[None, :] + 1e-9
    d_circle = np.linalg.norm(pts[:, None, :] - foot, axis=2)
    d_a = np.linalg.norm(pts[:, None, :] - v[None, :, :], axis=2)
    d_b = np.linalg.norm(pts[:, None, :] - w[None, :, :], axis=2)
    d_end = np.minimum(d_a, d_b)
    d = np.where(inspan, d_circle, d_end)
    return d, foot, inspan


@dataclass
class Arrangement:
    """Ordered list of weighted pseudocircles plus the declared symmetry flag."""

    elements: list
    symmetric: bool = True

    def __post_init__(self):
        self.elements = list(self.elements)
        self._pairs: dict = {}

    @property
    def n(self) -> int:
        return len(self.elements)

    def nonzero_indices(self) -> list[int]:
        return [i for i, e in enumerate(self.elements) if not e.trivial]

    def copy(self) -> "Arrangement":
        return Arrangement([e.copy() for e in self.elements], symmetric=self.symmetric)

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        els = []
        for e in self.elements:
            if e.trivial:
                els.append({"weight": 0.0})
            else:
                els.append({"weight": e.weight, "vertices": e.vertices.tolist()})
        return {"n": self.n, "elements": els, "symmetric": bool(self.symmetric)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(d: dict) -> "Arrangement":
        els = []
        for rec in d["elements"]:
            w = float(rec["weight"])
            if w == 0.0:
                els.append(WeightedPseudocircle(0.0))
            else:
                els.append(WeightedPseudocircle(w, np.asarray(rec["vertices"], dtype=float)))
        arr = Arrangement(els, symmetric=bool(d.get("symmetric", True)))
        if arr.n != int(d.get("n", arr.n)):
            raise ValueError("element count does not match declared n")
        return arr

    @staticmethod
    def from_json(s: str) -> "Arrangement":
        return Arrangement.from_json_dict(json.loads(s))


# ---------------------------------------------------------------------------
# Sign evaluation
# ---------------------------------------------------------------------------


def aim_eval(element: WeightedPseudocircle, x) -> int:
    """Side of x relative to the oriented curve: +1, 0 or -1.

    0 for the trivial element and for points within EPS_GEO of the curve.
    The side is decided by the nearest edge; queries nearest to a corner use
    the local corner sector, with a parity ray cast as the last resort.
    """
    if element.trivial:
        return 0
    x = np.asarray(x, dtype=float)
    v, b, n, ang = element._edge_frames()
    dv = v @ x
    db = b @ x
    dn = n @ x
    alpha = np.arctan2(db, dv)
    inspan = (alpha >= 0.0) & (alpha <= ang)
    # angular distances: to the great circle when the foot is on the arc,
    # else to the nearer endpoint (dv and the rolled dv are the endpoint cosines)
    d_circ = np.abs(np.arcsin(np.clip(dn, -1.0, 1.0)))
    cos_end = np.maximum(dv, np.roll(dv, -1))
    d_end = np.arccos(np.clip(cos_end, -1.0, 1.0))
    d = np.where(inspan, d_circ, d_end)
    j = int(np.argmin(d))
    if d[j] <= sphere.EPS_GEO:
        return 0
    if inspan[j]:
        margin = abs(float(dn[j]))
        if margin > 10 * sphere.EPS_GEO:
            return 1 if dn[j] > 0 else -1
        return _ray_cast_side(element, x)
    # nearest feature is an endpoint: corner rule at that vertex
    k = len(v)
    c_idx = (j + 1) % k if dv[(j + 1) % k] > dv[j] else j
    return _corner_side(element, c_idx, x)


def _corner_side(element: WeightedPseudocircle, c_idx: int, x) -> int:
    """Side of x when the nearest curve point is the corner c_idx.

    The + side is the region to the left of travel, i.e. the tangent sector
    swept counterclockwise from the outgoing direction to the reversed
    incoming direction.
    """
    v, w, n, ang, cum = element._edges()
    k = len(v)
    c = v[c_idx]
    prev_v = v[(c_idx - 1) % k]
    next_v = w[c_idx]
    t1, t2 = sphere.tangent_basis(c)

    def dir_angle(p):
        u = p - float(np.dot(p, c)) * c
        nu = np.linalg.norm(u)
        if nu < 1e-12:
            return None
        u = u / nu
        return math.atan2(float(np.dot(u, t2)), float(np.dot(u, t1)))

    a_out = dir_angle(next_v)
    a_in = dir_angle(prev_v)  # reversed incoming direction
    a_x = dir_angle(x)
    if a_out is None or a_in is None or a_x is None:
        return _ray_cast_side(element, x)
    sector = (a_in - a_out) % (2 * math.pi)
    pos = (a_x - a_out) % (2 * math.pi)
    if min(pos, abs(pos - sector)) < 1e-12:
        return _ray_cast_side(element, x)
    return 1 if pos < sector else -1


def _ray_cast_side(element: WeightedPseudocircle, x) -> int:
    """Crossing-parity sign along a geodesic from x to the cached curve pole."""
    pole = element.pole()
    if np.linalg.norm(x - pole) <= 1e-9:
        return 1
    target = pole
    if np.linalg.norm(x + pole) <= 1e-6:
        # x nearly antipodal to the pole: bend the ray through a waypoint
        t1, _ = sphere.tangent_basis(pole)
        target = sphere.unit(pole + 0.1 * t1)
    ray = sphere.Arc(x, target)
    v, w, n, ang, cum = element._edges()
    hits = []
    for j in range(len(v)):
        try:
            edge = sphere.Arc(v[j], w[j])
        except ValueError:
            continue
        for h in sphere.arc_intersect(ray, edge, tol=sphere.EPS_GEO):
            hits.append((h.point, j))
    # cluster hits so a pass through a shared corner counts once
    clusters: list[list] = []
    for p, j in hits:
        for cl in clusters:
            if np.linalg.norm(cl[0][0] - p) <= sphere.VERTEX_MERGE_TOL:
                cl.append((p, j))
                break
        else:
            clusters.append([(p, j)])
    ray_n = ray.normal
    parity = 0
    total = element.total_angle
    for cl in clusters:
        p = cl[0][0]
        s = element.param_of(p)
        delta = min(0.05, total / (4 * len(v)))
        before = element.point_at(s - delta)
        after = element.point_at(s + delta)
        sb = sphere.sign_with_tol(float(np.dot(ray_n, before)), sphere.EPS_ORIENT)
        sa = sphere.sign_with_tol(float(np.dot(ray_n, after)), sphere.EPS_ORIENT)
        if sb != 0 and sa != 0 and sb != sa:
            parity += 1
    s_pole = 1  # the pole is on the + side by construction
    return s_pole if parity % 2 == 0 else -s_pole


def aim_vector(arr: Arrangement, x) -> tuple:
    """Sign vector of a point across all elemnts of the arrangement."""
    return tuple(aim_eval(e, x) for e in arr.elements)


# ---------------------------------------------------------------------------
# Pairwise classification
# ---------------------------------------------------------------------------


@dataclass
class Crossing:
    point: np.ndarray
    param_i: float
    param_j: float
    # sign of curve j just after the crossing while traveling along curve i
    sign_after_on_i: int


@dataclass
class PairRelation:
    kind: str  # "coincident" | "crossing"
    orientation: int = 0  # for coincident pairs: +1 same travel, -1 reversed
    crossings: list = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.crossings)


def _kernel_coincident(ci: WeightedPseudocircle, cj: WeightedPseudocircle) -> bool:
    da = float(np.max(cj.distance_to(ci.vertices)))
    if da > COINCIDENCE_TOL:
        return False
    db = float(np.max(ci.distance_to(cj.vertices)))
    return db <= COINCIDENCE_TOL


def _coincident_orientation(ci, cj) -> int:
    votes = 0
    total = ci.total_angle
    for f in (0.1, 0.35, 0.6, 0.85):
        p0 = ci.point_at(f * total)
        p1 = ci.point_at(f * total + 0.02 * total)
        s0 = cj.param_of(p0)
        s1 = cj.param_of(p1)
        ahead = (s1 - s0) % cj.total_angle
        votes += 1 if ahead < cj.total_angle / 2 else -1
    return 1 if votes >= 0 else -1


def _raw_intersections(ci: WeightedPseudocircle, cj: WeightedPseudocircle):
    """Candidate intersection points of two curves."""
    vi, wi, ni, angi, cumi = ci._edges()
    vj, wj, nj, angj, cumj = cj._edges()
    # straddle prefilter: arcs can only meet when each straddles (or nearly
    # touches) the other's great-circle plane
    band = 1e-9
    da = vj @ ni.T  # (kj, ki)
    db = wj @ ni.T
    straddle_i = (np.minimum(da, db) < band) & (np.maximum(da, db) > -band)
    da = vi @ nj.T  # (ki, kj)
    db = wi @ nj.T
    straddle_j = (np.minimum(da, db) < band) & (np.maximum(da, db) > -band)
    pairs = np.argwhere(straddle_i.T & straddle_j)
    hits, coplanar = sphere.batch_arc_hits(vi, wi, ni, angi, vj, wj, nj, angj, pairs)
    pts = [p for _, _, p in hits]
    for a, b in coplanar:
        try:
            ea = sphere.Arc(vi[a], wi[a])
            eb = sphere.Arc(vj[b], wj[b])
        except ValueError:
            continue
        for h in sphere.arc_intersect(ea, eb):
            pts.append(h.point)
    return pts


def classify_pair(ci: WeightedPseudocircle, cj: WeightedPseudocircle) -> PairRelation:
    """Classify two nonzero elements: coincident kernels or crossing points.

    Crossings are genuine transversal side changes of curve j along curve i;
    touch points do not count.  Near-degenerate sign patterns are retried
    under the seeded perturbation policy and reported as DegeneracyError if
    they stay unstable.
    """
    if _kernel_coincident(ci, cj):
        return PairRelation(kind="coincident", orientation=_coincident_orientation(ci, cj))
    result = _count_crossings(ci, cj)
    if result is not None:
        return result
    counts = []
    last = None
    for retry in range(1, sphere.PERTURB_RETRIES + 1):
        qa = sphere.perturbation_rotation(7, retry, 0)
        qb = sphere.perturbation_rotation(7, retry, 1)
        pa = WeightedPseudocircle(ci.weight, ci.vertices @ qa.T)
        pb = WeightedPseudocircle(cj.weight, cj.vertices @ qb.T)
        r = _count_crossings(pa, pb)
        if r is None:
            continue
        counts.append(r.count)
        last = (r, qa)
    if len(counts) >= 2 and len(set(counts)) == 1 and last is not None:
        r, qa = last
        # map the perturbed crossing data back (error bounded by the 1e-7
        # perturbation, below the vertex merge tolerance)
        for c in r.crossings:
            c.point = sphere.unit(qa.T @ c.point)
            c.param_i = ci.param_of(c.point)
            c.param_j = cj.param_of(c.point)
        return r
    raise DegeneracyError("pair crossing count unstable under perturbation policy")


def _count_crossings(ci, cj) -> PairRelation | None:
    pts = _raw_intersections(ci, cj)
    if not pts:
        return PairRelation(kind="crossing", crossings=[])
    params = sorted((ci.param_of(p), tuple(p)) for p in pts)
    total = ci.total_angle
    clusters: list[list] = []
    for s, p in params:
        if clusters and (
            abs(s - clusters[-1][-1][0]) <= 1e-6 * total
            or np.linalg.norm(np.array(p) - np.array(clusters[-1][-1][1])) <= sphere.VERTEX_MERGE_TOL
        ):
            clusters[-1].append((s, p))
        else:
            clusters.append([(s, p)])
    if len(clusters) > 1:
        # cyclic wrap: first and last cluster may be the same point
        gap = (clusters[0][0][0] - clusters[-1][-1][0]) % total
        if gap <= 1e-6 * total or np.linalg.norm(
            np.array(clusters[0][0][1]) - np.array(clusters[-1][-1][1])
        ) <= sphere.VERTEX_MERGE_TOL:
            clusters[0] = clusters.pop() + clusters[0]
    reps = [(cl[len(cl) // 2][0], np.array(cl[len(cl) // 2][1])) for cl in clusters]
    k = len(reps)
    signs = []
    for a in range(k):
        s0 = reps[a][0]
        s1 = reps[(a + 1) % k][0]
        mid = ci.point_at(s0 + (((s1 - s0) % total) or total) / 2.0)
        signs.append(aim_eval(cj, mid))
    if any(s == 0 for s in signs):
        return None  # ambiguous: midpoint sits on the other curve
    crossings = []
    for a in range(k):
        before = signs[(a - 1) % k]
        after = signs[a]
        if before != after:
            s, p = reps[a]
            crossings.append(
                Crossing(
                    point=p,
                    param_i=s,
                    param_j=cj.param_of(p),
                    sign_after_on_i=after,
                )
            )
    return PairRelation(kind="crossing", crossings=crossings)


def pair_relation(arr: Arrangement, i: int, j: int) -> PairRelation:
    """Cached pair classification for nonzero elements i, j of an arrangement."""
    key = (i, j)
    if key in arr._pairs:
        return arr._pairs[key]
    rel = classify_pair(arr.elements[i], arr.elements[j])
    arr._pairs[key] = rel
    # derive the mirrored relation rather than recomputing
    if rel.kind == "coincident":
        mirror = PairRelation(kind="coincident", orientation=rel.orientation)
    else:
        gap = _min_cyclic_gap([c.param_j for c in rel.crossings], arr.elements[j].total_angle)
        mirror = PairRelation(
            kind="crossing",
            crossings=[
                Crossing(
                    point=c.point,
                    param_i=c.param_j,
                    param_j=c.param_i,
                    sign_after_on_i=_sign_after(arr.elements[j], arr.elements[i], c, gap),
                )
                for c in rel.crossings
            ],
        )
    arr._pairs[(j, i)] = mirror
    return arr._pairs[key]


def _min_cyclic_gap(params, total: float) -> float:
    if len(params) < 2:
        return total
    s = sorted(params)
    gaps = [b - a for a, b in zip(s, s[1:])] + [s[0] + total - s[-1]]
    return max(min(gaps), 1e-9)


def _sign_after(cj, ci, crossing: Crossing, gap: float) -> int:
    """Sign of ci just after the crossing while traveling along cj.

    The probe offset stays well inside the gap to the neighboring crossing.
    """
    total = cj.total_angle
    delta = min(0.02 * total, 0.05, 0.4 * gap)
    for scale in (1.0, 0.3, 0.09):
        p = cj.point_at(crossing.param_j + delta * scale)
        s = aim_eval(ci, p)
        if s != 0:
            return s
    raise DegeneracyError("could not resolve crossing direction")


# ---------------------------------------------------------------------------
# Validity
# ---------------------------------------------------------------------------


@dataclass
class ValidityReport:
    valid: bool
    spanning: bool
    symmetric: bool
    pair_counts: dict
    violations: list

    def __bool__(self) -> bool:
        return self.valid


def _star_shaped_about_pole(c: WeightedPseudocircle) -> bool:
    """Sufficient simplicity test: azimuth about the pole is strictly
    monotone with small steps, winding exactly once."""
    v = c.vertices
    pole = c.pole()
    heights = v @ pole
    if np.max(np.abs(heights)) > 0.5:
        return False
    t1, t2 = sphere.tangent_basis(pole)
    az = np.arctan2(v @ t2, v @ t1)
    steps = np.diff(np.concatenate([az, az[:1]]))
    steps = (steps + math.pi) % (2 * math.pi) - math.pi
    if np.max(np.abs(steps)) > math.pi / 4:
        return False
    if np.any(steps == 0):
        return False
    same = np.all(steps > 0) or np.all(steps < 0)
    return bool(same and abs(abs(float(np.sum(steps))) - 2 * math.pi) < 1e-6)


def _self_intersects(c: WeightedPseudocircle) -> bool:
    """True when any two non-adjacent edges meet, or adjacent edges meet
    away from their shared vertex."""
    if _star_shaped_about_pole(c):
        return False
    v, w, n, ang, _ = c._edges()
    k = len(v)
    ia, ib = np.triu_indices(k, 1)
    adjacent = (ib == ia + 1) | ((ia == 0) & (ib == k - 1))
    pairs = np.stack([ia[~adjacent], ib[~adjacent]], axis=1)
    hits, coplanar = sphere.batch_arc_hits(v, w, n, ang, v, w, n, ang, pairs, tol=1e-9)
    if hits:
        return True
    if len(coplanar):
        # same great circle: overlap iff an endpoint of one lies on the other
        ca, cb = coplanar[:, 0], coplanar[:, 1]
        for xs, va, wa, aa in (
            (v[cb], v[ca], w[ca], ang[ca]),
            (w[cb], v[ca], w[ca], ang[ca]),
            (v[ca], v[cb], w[cb], ang[cb]),
            (w[ca], v[cb], w[cb], ang[cb]),
        ):
            on = sphere._angles_to(xs, va) + sphere._angles_to(xs, wa) <= aa + 1e-9
            if np.any(on):
                return True
    # adjacent pairs may only meet at the shared vertex
    pairs_adj = np.stack([ia[adjacent], ib[adjacent]], axis=1)
    hits, _ = sphere.batch_arc_hits(v, w, n, ang, v, w, n, ang, pairs_adj, tol=1e-9)
    for a, b, p in hits:
        shared = w[a] if b == a + 1 else v[a]
        if np.linalg.norm(p - shared) > 1e-9:
            return True
    return False


def validate(arr: Arrangement) -> ValidityReport:
    """Check simplicity, symmetry, pairwise crossing counts, and spanning."""
    violations = []
    nz = arr.nonzero_indices()
    for i in nz:
        e = arr.elements[i]
        if _self_intersects(e):
            violations.append(("curve", i, "not simple"))
        if arr.symmetric and not e.is_symmetric():
            violations.append(("curve", i, "not antipodally symmetric"))
    pair_counts = {}
    for a in range(len(nz)):
        for b in range(a + 1, len(nz)):
            i, j = nz[a], nz[b]
            try:
                rel = pair_relation(arr, i, j)
            except DegeneracyError:
                raise
            if rel.kind == "coincident":
                pair_counts[(i, j)] = "coincident"
                continue
            pair_counts[(i, j)] = rel.count
            if rel.count != 2:
                violations.append(("pair", (i, j), f"{rel.count} crossings (expected 2)"))
            elif arr.symmetric:
                p, q = rel.crossings[0].point, rel.crossings[1].point
                if np.linalg.norm(p + q) > 1e-6:
                    violations.append(("pair", (i, j), "crossing points not antipodal"))
    spanning = is_spanning(arr) if not violations else False
    ok = not violations
    return ValidityReport(
        valid=ok,
        spanning=spanning,
        symmetric=all(arr.elements[i].is_symmetric() for i in nz),
        pair_counts=pair_counts,
        violations=violations,
    )


def is_spanning(arr: Arrangement) -> bool:
    """True iff no single point lies on every nonzero kernel and rank is 3."""
    nz = arr.nonzero_indices()
    if len(nz) < 3:
        return False
    # group coincident kernels
    groups = kernel_groups(arr)
    if len(groups) < 2:
        return False
    # some pair of distinct kernels must exist; check their crossing points
    # against all other kernels, and require a third kernel avoiding them
    g0, g1 = groups[0][0], groups[1][0]
    rel = pair_relation(arr, g0, g1)
    if rel.kind != "crossing" or not rel.crossings:
        return False
    for c in rel.crossings:
        on_all = True
        for grp in groups:
            e = arr.elements[grp[0]]
            if float(e.distance_to(c.point[None, :])[0]) > sphere.EPS_GEO * 10:
                on_all = False
                break
        if on_all:
            return False
    return True


def kernel_groups(arr: Arrangement) -> list[list[int]]:
    """Partition nonzero element indices into classes of coincident kernels."""
    nz = arr.nonzero_indices()
    groups: list[list[int]] = []
    for i in nz:
        placed = False
        for grp in groups:
            rel = pair_relation(arr, grp[0], i)
            if rel.kind == "coincident":
                grp.append(i)
                placed = True
                break
        if not placed:
            groups.append([i])
    return groups


# ---------------------------------------------------------------------------
# Group action, subsetting, metrics
# ---------------------------------------------------------------------------


def act_rotation(arr: Arrangement, q: np.ndarray) -> Arrangement:
    """Right action of Q in O(3): every curve vertex v is replaced by Q^T v.

    A reflection (det Q = -1) reverses the left-of-travel convention, so the
    vertex order flips to keep each element's sign map equal to x -> aim(Qx).
    """
    q = sphere.check_rotation(q)
    reverse = float(np.linalg.det(q)) < 0
    els = []
    for e in arr.elements:
        if e.trivial:
            els.append(WeightedPseudocircle(0.0))
        else:
            verts = e.vertices @ q
            if reverse:
                verts = verts[::-1]
            els.append(WeightedPseudocircle(e.weight, verts))
    return Arrangement(els, symmetric=arr.symmetric)


def proj_subset(arr: Arrangement, indices) -> Arrangement:
    """Replace elements off the index set by the trivial element."""
    keep = set(int(i) for i in indices)
    els = []
    for i, e in enumerate(arr.elements):
        if i in keep and not e.trivial:
            els.append(e.copy())
        else:
            els.append(WeightedPseudocircle(0.0))
    return Arrangement(els, symmetric=arr.symmetric)


def weighted_frechet(
    a: WeightedPseudocircle, b: WeightedPseudocircle, samples: int = metrics.FRECHET_SAMPLES
) -> float:
    """Weighted Frechet distance between two elements (discrete upper bound)."""
    if a.trivial and b.trivial:
        return 0.0
    if a.trivial:
        return b.weight
    if b.trivial:
        return a.weight
    p = a.weight * a.resampled(samples)
    q = b.weight * b.resampled(samples)
    return metrics.cyclic_frechet(p, q)


def arrangement_dist(a: Arrangement, b: Arrangement, samples: int = metrics.FRECHET_SAMPLES) -> float:
    """max over elements of the weighted Frechet distances."""
    if a.n != b.n:
        raise ValueError("arrangements must have the same number of elements")
    return max(
        (weighted_frechet(ea, eb, samples) for ea, eb in zip(a.elements, b.elements)),
        default=0.0,
    )
