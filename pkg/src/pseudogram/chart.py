"""Chart-side pseudoline geometry.

A symmetric pseudocircle projects 2-to-1 onto a pseudoline of RP^2.  In the
affine chart a pseudoline is a horizon, a straight line, or a polyline whose
two unbounded ends are parallel rays in the directions -dir and +dir (the
curve passes through the horizon point [dir]).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import sphere
from .arrangement import WeightedPseudocircle, classify_pair
from .sphere import ChartBasis, DegeneracyError

STRAIGHT_TOL = 1e-9


@dataclass
class ChartPseudoline:
    kind: str  # "horizon" | "line" | "polyline"
    vertices: np.ndarray = None  # (k, 2) for polyline, (1, 2) anchor for line
    direction: np.ndarray = None  # unit 2-vector (travel direction toward +infinity)

    @staticmethod
    def horizon() -> "ChartPseudoline":
        return ChartPseudoline(kind="horizon")

    @staticmethod
    def line(anchor, direction) -> "ChartPseudoline":
        d = np.asarray(direction, dtype=float)
        d = d / np.linalg.norm(d)
        return ChartPseudoline(kind="line", vertices=np.atleast_2d(np.asarray(anchor, float)), direction=d)

    @staticmethod
    def polyline(vertices, direction) -> "ChartPseudoline":
        v = np.atleast_2d(np.asarray(vertices, dtype=float))
        if len(v) < 1:
            raise ValueError("polyline needs at least one vertex")
        d = np.asarray(direction, dtype=float)
        d = d / np.linalg.norm(d)
        return ChartPseudoline(kind="polyline", vertices=v, direction=d)

    def pieces(self):
        """Geometric pieces: ('ray', origin, outward_dir) and ('seg', a, b)."""
        if self.kind == "horizon":
            return []
        if self.kind == "line":
            a = self.vertices[0]
            return [("ray", a, -self.direction), ("seg", a, a), ("ray", a, self.direction)]
        v = self.vertices
        out = [("ray", v[0], -self.direction)]
        for i in range(len(v) - 1):
            out.append(("seg", v[i], v[i + 1]))
        out.append(("ray", v[-1], self.direction))
        return out

    def is_straight(self, tol: float = STRAIGHT_TOL) -> bool:
        if self.kind in ("horizon", "line"):
            return True
        v = self.vertices
        d = self.direction
        ref = v[0]
        for p in v[1:]:
            if abs(_cross2(p - ref, d)) > tol * (1.0 + np.linalg.norm(p - ref)):
                return False
        return True

    def max_exterior_angle(self) -> float:
        """Largest absolute turning angle along the curve (0 when straight)."""
        if self.kind in ("horizon", "line"):
            return 0.0
        v = self.vertices
        # travel runs from the -dir ray through the polyline toward +dir, so
        # both unbounded pieces contribute travel direction +dir
        dirs = [self.direction.copy()]
        for i in range(len(v) - 1):
            seg = v[i + 1] - v[i]
            n = np.linalg.norm(seg)
            if n > 1e-14:
                dirs.append(seg / n)
        dirs.append(self.direction.copy())
        worst = 0.0
        for a, b in zip(dirs[:-1], dirs[1:]):
            ang = abs(math.atan2(_cross2(a, b), float(np.dot(a, b))))
            worst = max(worst, ang)
        return worst


def _cross2(a, b) -> float:
    return float(a[0] * b[1] - a[1] * b[0])


# ---------------------------------------------------------------------------
# Sphere -> chart -> sphere
# ---------------------------------------------------------------------------


def _horizon_crossings(element: WeightedPseudocircle, a1: np.ndarray):
    """Indices and exact points where the curve crosses the plane <a1, x> = 0."""
    v = element.vertices
    k = len(v)
    dots = v @ a1
    zero = 1e-15
    hits = []
    for i in range(k):
        d0, d1 = dots[i], dots[(i + 1) % k]
        if abs(d0) <= zero:
            hits.append((i, 0.0, v[i].copy()))
            continue
        if (d0 > 0) != (d1 > 0) and abs(d1) > zero:
            u, w = v[i], v[(i + 1) % k]
            phi = sphere.angle_between(u, w)
            t = math.atan2(math.sin(phi) * d0, math.cos(phi) * d0 - d1) / phi
            t = min(max(t, 0.0), 1.0)
            p = sphere.Arc(u, w).point_at(t)
            hits.append((i, t, p))
    return hits


def chart_from_element(element: WeightedPseudocircle, basis: ChartBasis) -> ChartPseudoline:
    """Chart pseudoline of a symmetric element crossing the horizon twice.

    The polyline lists the chart images of the curve vertices on the
    positive side of the horizon plane, in travel order; dir points toward
    the exit crossing.
    """
    a1 = basis.a1
    hits = _horizon_crossings(element, a1)
    if len(hits) != 2:
        raise DegeneracyError(
            f"curve crosses the chart horizon {len(hits)} times (expected 2)"
        )
    v = element.vertices
    k = len(v)
    dots = v @ a1

    def _is_entry(i):
        j = (i + 1) % k
        for _ in range(k):
            if abs(dots[j]) > 1e-15:
                return dots[j] > 0
            j = (j + 1) % k
        raise DegeneracyError("curve is contained in the horizon plane")

    if _is_entry(hits[0][0]):
        enter, exit_ = hits
    else:
        exit_, enter = hits
    idx = (enter[0] + 1) % k
    inside = []
    while idx != (exit_[0] + 1) % k:
        # vertices within EPS_GEO of the horizon plane are crossings, not
        # interior polyline corners (their chart images blow up)
        if dots[idx] > sphere.EPS_GEO:
            inside.append(v[idx])
        idx = (idx + 1) % k
    pts = []
    for x in inside:
        cp = sphere.to_chart(basis, x)
        if cp.horizon:
            raise DegeneracyError("curve vertex sits on the chart horizon")
        pts.append((cp.u, cp.v))
    exit_dir = np.array([float(np.dot(basis.a2, exit_[2])), float(np.dot(basis.a3, exit_[2]))])
    nd = np.linalg.norm(exit_dir)
    if nd < 1e-12:
        raise DegeneracyError("horizon crossing has no chart direction")
    exit_dir /= nd
    if not pts:
        # synthesize one interior vertex at the middle of the positive half
        mid = sphere.unit(enter[2] + exit_[2]) if np.linalg.norm(enter[2] + exit_[2]) > 1e-9 else None
        if mid is None:
            raise DegeneracyError("positive half-curve has no representable midpoint")
        cp = sphere.to_chart(basis, mid)
        pts.append((cp.u, cp.v))
    return ChartPseudoline.polyline(np.array(pts), exit_dir)


def lift_polyline(
    cpl: ChartPseudoline, basis: ChartBasis, weight: float, reverse: bool = False
) -> WeightedPseudocircle:
    """Exact symmetric lift of a polyline pseudoline back to the sphere.

    Travel runs from the -dir ray end through the polyline toward +dir; the
    lifted half starts at the horizon point approached by the entry ray.
    """
    if cpl.kind == "horizon":
        raise ValueError("the horizon lifts to the chart basis circle itself")
    g = basis.matrix
    d = cpl.direction
    v_start = sphere.unit(np.linalg.solve(g, np.array([0.0, -d[0], -d[1]])))
    half = [v_start]
    if cpl.kind == "line":
        # synthesize two points along the line for a clean polygon
        a = cpl.vertices[0]
        samples = [a - 0.5 * d, a + 0.5 * d]
    else:
        samples = list(cpl.vertices)
    for u, w in samples:
        x = sphere.unit(np.linalg.solve(g, np.array([1.0, u, w])))
        if float(np.dot(basis.a1, x)) < 0:
            x = -x
        half.append(x)
    pts = half + [-p for p in half]
    poly = np.array(pts)
    # drop consecutive duplicates
    keep = [0]
    for i in range(1, len(poly)):
        if np.linalg.norm(poly[i] - poly[keep[-1]]) > 1e-12:
            keep.append(i)
    if np.linalg.norm(poly[keep[-1]] - poly[keep[0]]) <= 1e-12:
        keep.pop()
    poly = poly[keep]
    if reverse:
        poly = poly[::-1]
    return WeightedPseudocircle(weight, poly)


def chart_crossing_count(a: ChartPseudoline, b: ChartPseudoline, basis: ChartBasis | None = None):
    """Number of RP^2 crossings of two chart pseudolines ('coincident' or int)."""
    basis = sphere.STANDARD_CHART if basis is None else basis
    ea = _as_element(a, basis)
    eb = _as_element(b, basis)
    rel = classify_pair(ea, eb)
    if rel.kind == "coincident":
        return "coincident"
    if rel.count % 2 != 0:
        raise DegeneracyError("odd spherical crossing count for symmetric lifts")
    return rel.count // 2


def _as_element(cpl: ChartPseudoline, basis: ChartBasis) -> WeightedPseudocircle:
    if cpl.kind == "horizon":
        from .frames import circle_element

        return circle_element(sphere.unit(basis.a1))
    return lift_polyline(cpl, basis, 1.0)


# ---------------------------------------------------------------------------
# Affine helpers shared by the pivot deformations
# ---------------------------------------------------------------------------


def line_from_two_points(p, q) -> ChartPseudoline:
    return ChartPseudoline.line(p, np.asarray(q, float) - np.asarray(p, float))


def intersect_piece_with_line(piece, p0, u):
    """Intersection of a ray/segment piece with the line p0 + s*u, or None."""
    kind, a, b = piece
    if kind == "seg":
        r = np.asarray(b, float) - np.asarray(a, float)
        denom = _cross2(r, u)
        if abs(denom) < 1e-14:
            return None
        t = _cross2(np.asarray(p0, float) - np.asarray(a, float), u) / denom
        if -1e-12 <= t <= 1 + 1e-12:
            return np.asarray(a, float) + t * r
        return None
    origin, d = np.asarray(a, float), np.asarray(b, float)
    denom = _cross2(d, u)
    if abs(denom) < 1e-14:
        return None
    t = _cross2(np.asarray(p0, float) - origin, u) / denom
    if t >= -1e-12:
        return origin + t * d
    return None


def crossing_with_line(cpl: ChartPseudoline, p0, u) -> list[np.ndarray]:
    """All intersection points of a chart pseudoline with a straight line."""
    hits = []
    for piece in cpl.pieces():
        if piece[0] == "seg" and np.allclose(piece[1], piece[2]):
            continue
        p = intersect_piece_with_line(piece, p0, u)
        if p is None:
            continue
        if all(np.linalg.norm(p - q) > 1e-9 for q in hits):
            hits.append(p)
    return hits


def _piece_piece(p1, p2):
    """Intersection point of two ray/segment pieces, or None."""
    k1, a1, b1 = p1
    k2, a2, b2 = p2
    if k1 == "seg":
        o1, d1 = np.asarray(a1, float), np.asarray(b1, float) - np.asarray(a1, float)
        r1 = (0.0, 1.0)
    else:
        o1, d1 = np.asarray(a1, float), np.asarray(b1, float)
        r1 = (0.0, math.inf)
    if k2 == "seg":
        o2, d2 = np.asarray(a2, float), np.asarray(b2, float) - np.asarray(a2, float)
        r2 = (0.0, 1.0)
    else:
        o2, d2 = np.asarray(a2, float), np.asarray(b2, float)
        r2 = (0.0, math.inf)
    denom = _cross2(d1, d2)
    scale = max(np.linalg.norm(d1) * np.linalg.norm(d2), 1e-30)
    if abs(denom) <= 1e-13 * scale:
        return None
    diff = o2 - o1
    t1 = _cross2(diff, d2) / denom
    t2 = _cross2(diff, d1) / denom
    if r1[0] - 1e-12 <= t1 <= r1[1] + 1e-12 and r2[0] - 1e-12 <= t2 <= r2[1] + 1e-12:
        return o1 + t1 * d1
    return None


def pseudoline_crossings(a: ChartPseudoline, b: ChartPseudoline) -> list[np.ndarray]:
    """Affine intersection points of two chart pseudolines (deduped)."""
    hits: list[np.ndarray] = []
    for pa in a.pieces():
        if pa[0] == "seg" and np.allclose(pa[1], pa[2]):
            continue
        for pb in b.pieces():
            if pb[0] == "seg" and np.allclose(pb[1], pb[2]):
                continue
            p = _piece_piece(pa, pb)
            if p is None:
                continue
            if all(np.linalg.norm(p - q) > 1e-9 for q in hits):
                hits.append(p)
    return hits


def point_to_pseudoline(x, cpl: ChartPseudoline) -> float:
    """Affine distance from a point to a chart pseudoline."""
    x = np.asarray(x, dtype=float)
    best = math.inf
    for kind, a, b in cpl.pieces():
        if kind == "seg":
            o = np.asarray(a, float)
            d = np.asarray(b, float) - o
            ln2 = float(d @ d)
            if ln2 < 1e-28:
                best = min(best, float(np.linalg.norm(x - o)))
                continue
            t = min(max(float((x - o) @ d) / ln2, 0.0), 1.0)
            best = min(best, float(np.linalg.norm(x - (o + t * d))))
        else:
            o, d = np.asarray(a, float), np.asarray(b, float)
            t = max(float((x - o) @ d), 0.0)
            best = min(best, float(np.linalg.norm(x - (o + t * d))))
    return best
