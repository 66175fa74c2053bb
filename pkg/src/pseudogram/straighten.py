"""Discrete straightening deformations.

A single-instance greedy pipeline carries any valid spanning symmetric
arrangement to a Parseval frame: pick a basis by surrogate openness radii,
straighten the basis curves, redraw every other curve as geodesic chords
over the basis octants, pivot the chart pseudolines straight, read off the
weighted normals, and orthonormalize along the polar-decomposition path.
Only deformation endpoints plus sampled intermediate frames are computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import chart as chartmod
from . import sphere
from .arrangement import (
    Arrangement,
    InvalidArrangementError,
    WeightedPseudocircle,
    aim_eval,
    aim_vector,
    is_spanning,
    pair_relation,
    proj_subset,
    validate,
    weighted_frechet,
)
from .cells import CellComplex, build_complex
from .chart import ChartPseudoline
from .frames import (
    chirotope_value,
    circle_element,
    circles_from_frame,
    coord_frame,
    fitted_normal,
    frame_from_circles,
    orthonormalize_path,
)
from .sphere import ChartBasis, DegeneracyError

TIE_SLACK = 1e-12
STRAIGHT_CURVE_TOL = 1e-9


@dataclass
class StageState:
    """Prefix bookkeeping for the Y/Z state machine of the pipeline."""

    prefix: tuple
    mode: str  # "Y" | "Z"

    def check(self, arr: Arrangement, tol: float = 1e-7) -> bool:
        """Verify the state conditions on an arrangement.

        Y: the prefix curves are great circles.  Z: additionally every other
        nonzero curve is geodesic on the prefix cells, i.e. its corners lie
        on the union of the prefix kernels.
        """
        from .frames import fitted_normal

        prefix = [int(i) for i in self.prefix]
        for i in prefix[:3]:
            try:
                fitted_normal(arr.elements[i], tol=tol)
            except ValueError:
                return False
        if self.mode == "Y":
            return True
        kernels = [arr.elements[i] for i in prefix if not arr.elements[i].trivial]
        for j, e in enumerate(arr.elements):
            if j in prefix or e.trivial:
                continue
            d = np.full(len(e.vertices), np.inf)
            for k in kernels:
                d = np.minimum(d, k.distance_to(e.vertices))
            if np.max(d) > tol:
                return False
        return True


@dataclass
class TraceFrame:
    t: float
    stage: str
    arrangement: Arrangement
    valid: bool = True


@dataclass
class DeformationTrace:
    basis: tuple
    frames: list = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "basis": [int(i) for i in self.basis],
            "frames": [
                {"t": f.t, "stage": f.stage, "arrangement": f.arrangement.to_json_dict()}
                for f in self.frames
            ],
        }


# ---------------------------------------------------------------------------
# Surrogate openness radii and the greedy basis
# ---------------------------------------------------------------------------


def surrogate_radius(arr: Arrangement, prefix) -> float:
    """Lower-bound openness radius of X_{I.j} around the arrangement.

    For prefix length 1 or > 3 this is the weight of the appended element;
    for lengths 2 and 3 it is the minimum prefix weight times half the
    minimum distance from interior cell samples to the union of the prefix
    kernels; 0 when the prefix is not independent.
    """
    prefix = [int(i) for i in prefix]
    if len(set(prefix)) != len(prefix):
        raise ValueError("prefix indices must be distinct")
    j = prefix[-1]
    el = arr.elements[j]
    if el.trivial:
        return 0.0
    m = len(prefix)
    if m == 1 or m > 3:
        return el.weight
    curves = [arr.elements[i] for i in prefix]
    if any(c.trivial for c in curves):
        return 0.0
    if m == 2:
        if pair_relation(arr, prefix[0], prefix[1]).kind == "coincident":
            return 0.0
    else:
        if not is_spanning(proj_subset(arr, prefix)):
            return 0.0
    sub = Arrangement([c.copy() for c in curves], symmetric=arr.symmetric)
    cx = build_complex(sub, require_spanning=False)
    samples = np.array(cx.face_samples())
    dmin = math.inf
    for c in curves:
        dmin = min(dmin, float(np.min(c.distance_to(samples))))
    wmin = min(c.weight for c in curves)
    return wmin * 0.5 * dmin


def pick_basis(arr: Arrangement) -> tuple:
    """Greedy ordered basis: extend the prefix by the element of maximal
    surrogate radius, lowest index winning ties within 1e-12."""
    chosen: list[int] = []
    for _ in range(3):
        best, best_r = None, 0.0
        for j in range(arr.n):
            if j in chosen:
                continue
            r = surrogate_radius(arr, chosen + [j])
            if r > best_r + TIE_SLACK:
                best, best_r = j, r
        if best is None:
            raise InvalidArrangementError("no basis: arrangement is not spanning")
        chosen.append(best)
    return tuple(chosen)


# ---------------------------------------------------------------------------
# Chord redraw
# ---------------------------------------------------------------------------


def _symmetrized(points: np.ndarray) -> np.ndarray:
    k = len(points)
    if k % 2 != 0:
        return points
    half = k // 2
    top = points[:half]
    bottom = points[half:]
    avg = (top - bottom) / 2.0
    norms = np.linalg.norm(avg, axis=1)
    if np.any(norms < 1e-12):
        return points
    avg = avg / norms[:, None]
    return np.vstack([avg, -avg])


def _station_list(arr: Arrangement, j: int, prefix) -> list:
    """Crossing points of curve j with the prefix kernels, in travel order."""
    stations = []
    for i in prefix:
        if arr.elements[i].trivial:
            continue
        rel = pair_relation(arr, j, i)
        if rel.kind == "coincident":
            continue
        for c in rel.crossings:
            stations.append((c.param_i, c.point))
    stations.sort(key=lambda s: s[0])
    total = arr.elements[j].total_angle
    merged = []
    for s, p in stations:
        if merged and (
            np.linalg.norm(p - merged[-1][1]) <= sphere.VERTEX_MERGE_TOL
        ):
            continue
        merged.append((s, p))
    if len(merged) > 1 and np.linalg.norm(merged[0][1] - merged[-1][1]) <= sphere.VERTEX_MERGE_TOL:
        merged.pop()
    return merged


def chord_redraw(arr: Arrangement, basis_prefix) -> Arrangement:
    """Replace every non-prefix curve by the geodesic chords joining its
    consecutive crossing points with the prefix kernels.

    Crossing points with the prefix curves are kept exactly; the prefix
    curves themselves are unchanged.  Already-chordal curves come back
    unchanged up to floating error.
    """
    prefix = [int(i) for i in basis_prefix]
    pset = set(prefix)
    els = []
    for j, e in enumerate(arr.elements):
        if j in pset or e.trivial:
            els.append(e.copy())
            continue
        if any(
            not arr.elements[i].trivial
            and pair_relation(arr, i, j).kind == "coincident"
            for i in prefix
        ):
            els.append(e.copy())
            continue
        merged = _station_list(arr, j, prefix)
        if len(merged) < 4:
            raise DegeneracyError(
                f"curve {j} meets the prefix kernels at {len(merged)} points; cannot redraw"
            )
        pts = np.array([p for _, p in merged])
        if arr.symmetric:
            pts = _symmetrized(pts)
        els.append(WeightedPseudocircle(e.weight, pts))
    return Arrangement(els, symmetric=arr.symmetric)


# ---------------------------------------------------------------------------
# Basis normalization
# ---------------------------------------------------------------------------


def _basis_is_straight(arr: Arrangement, basis) -> bool:
    for i in basis:
        e = arr.elements[i]
        if e.trivial:
            return False
        try:
            fitted_normal(e, tol=STRAIGHT_CURVE_TOL)
        except ValueError:
            return False
    return True


def _corner_labels(arr: Arrangement, basis, k: int) -> list:
    """Corners of basis curve k on the other two basis curves, in travel
    order: list of (param, label) with label = (other_slot, third_sign)."""
    others = [s for s in range(3) if s != k]
    out = []
    for o in others:
        third = next(s for s in range(3) if s not in (k, o))
        rel = pair_relation(arr, basis[k], basis[o])
        if rel.kind != "crossing" or rel.count != 2:
            raise DegeneracyError("basis curves do not cross twice")
        for c in rel.crossings:
            s3 = aim_eval(arr.elements[basis[third]], c.point)
            if s3 == 0:
                raise DegeneracyError("basis corner lies on the third basis curve")
            out.append((c.param_i, (o, s3), c.point))
    out.sort(key=lambda r: r[0])
    if len(out) != 4:
        raise DegeneracyError("basis curve does not carry exactly 4 corners")
    return out


def _align_cyclic(old_labels, new_labels):
    """Rotation r such that new rotated by r matches old label-wise."""
    k = len(old_labels)
    for r in range(k):
        if all(new_labels[(a + r) % k] == old_labels[a] for a in range(k)):
            return r
    raise DegeneracyError("basis corner orders do not match the straight model")


class _BasisTransport:
    """Param transport from the old basis curves onto the target circles."""

    def __init__(self, old: Arrangement, new: Arrangement, basis):
        self.maps = []
        for k in range(3):
            old_corners = _corner_labels(old, basis, k)
            new_corners = _corner_labels(new, (0, 1, 2), k)
            r = _align_cyclic(
                [lab for _, lab, _ in old_corners], [lab for _, lab, _ in new_corners]
            )
            self.maps.append((old_corners, new_corners, r))
        self.old = old
        self.new = new
        self.basis = basis

    def transport(self, k: int, param: float) -> np.ndarray:
        old_corners, new_corners, r = self.maps[k]
        old_curve = self.old.elements[self.basis[k]]
        new_curve = self.new.elements[k]
        tot_old = old_curve.total_angle
        tot_new = new_curve.total_angle
        params = [c[0] for c in old_corners]
        for a in range(4):
            s0 = params[a]
            span = (params[(a + 1) % 4] - s0) % tot_old
            if span == 0:
                span = tot_old
            off = (param - s0) % tot_old
            if off <= span + 1e-12:
                frac = min(off / span, 1.0)
                n0 = new_corners[(a + r) % 4][0]
                n_span = (new_corners[(a + r + 1) % 4][0] - n0) % tot_new
                if n_span == 0:
                    n_span = tot_new
                return new_curve.point_at(n0 + frac * n_span)
        raise DegeneracyError("transport parameter fell outside every sub-arc")


def _metric_gamma(arr: Arrangement, gauge: Arrangement, basis, chi: int):
    """Frechet-preserving basis normals (metric mode)."""
    w = [arr.elements[i].weight for i in basis]
    p2, _ = _basis_vertex_of(gauge, basis, 1, 0, 2)
    p3, _ = _basis_vertex_of(gauge, basis, 2, 0, 1)
    gammas = [np.array([1.0, 0.0, 0.0])]
    for slot, perp_pt, pos_pt in ((1, p3, p2), (2, p2, p3)):
        d = weighted_frechet(arr.elements[basis[slot]], arr.elements[basis[0]])
        c = (w[0] ** 2 + w[slot] ** 2 - d**2) / (2 * w[0] * w[slot])
        c = min(max(c, -1.0), 1.0)
        # unit g with <g,e1> = c, <g,perp_pt> = 0, <g,pos_pt> > 0
        rhs = -c * perp_pt[0]
        a2, a3 = perp_pt[1], perp_pt[2]
        nrm = math.hypot(a2, a3)
        if nrm < 1e-12:
            raise DegeneracyError("metric-mode vertex degenerate")
        rad2 = 1.0 - c * c
        base = rhs / (nrm * nrm)
        y0 = np.array([a2, a3]) * base
        perp = np.array([-a3, a2]) / nrm
        extra2 = rad2 - float(y0 @ y0)
        if extra2 < -1e-12:
            raise DegeneracyError("metric-mode placement infeasible")
        s = math.sqrt(max(extra2, 0.0))
        cands = []
        for sgn in (1.0, -1.0):
            y = y0 + sgn * s * perp
            g = np.array([c, y[0], y[1]])
            cands.append(g)
        g = max(cands, key=lambda gg: float(np.dot(gg, pos_pt)))
        if float(np.dot(g, pos_pt)) <= 0:
            raise DegeneracyError("metric-mode orientation infeasible")
        gammas.append(sphere.unit(g))
    n1 = w[0] * gammas[0]
    n2 = w[1] * gammas[1]
    n3 = w[2] * gammas[2]
    # chirotope of the metric triple must match; flip the third if needed
    if np.sign(np.linalg.det(np.array([n1, n2, n3]))) != chi:
        n3 = -n3
    return n1, n2, n3


def _basis_vertex_of(arr: Arrangement, basis, i_plus_slot, j_slot, k_slot):
    from .frames import _basis_vertex

    return _basis_vertex(arr, basis[j_slot], basis[k_slot], basis[i_plus_slot])


def basis_normalize(arr: Arrangement, basis, metric: bool = False) -> Arrangement:
    """Straighten the three basis curves and transport every other curve.

    Works in the gauge fixed by coord (so the target circles sit on the
    coordinate axes, scaled by the original weights, oriented to match the
    chirotope) and conjugates back, which makes the operation commute with
    the rotation action.  Inputs whose basis curves are already great
    circles are returned unchanged.
    """
    basis = tuple(int(i) for i in basis)
    if len(set(basis)) != 3:
        raise ValueError("basis must consist of three distinct indices")
    if not is_spanning(proj_subset(arr, basis)):
        raise ValueError("index triple is not a basis of the arrangement")
    if _basis_is_straight(arr, basis):
        return arr.copy()
    from .arrangement import act_rotation

    q = coord_frame(basis, arr)
    gauge = act_rotation(arr, q)
    chi = chirotope_value(gauge, *basis)
    if chi == 0:
        raise DegeneracyError("chirotope vanished on the chosen basis")
    w = [arr.elements[i].weight for i in basis]
    if metric:
        n1, n2, n3 = _metric_gamma(arr, gauge, basis, chi)
    else:
        n1 = w[0] * np.array([1.0, 0.0, 0.0])
        n2 = w[1] * np.array([0.0, 1.0, 0.0])
        n3 = chi * w[2] * np.array([0.0, 0.0, 1.0])
    new_basis = Arrangement(
        [circle_element(n1), circle_element(n2), circle_element(n3)], symmetric=True
    )
    transport = _BasisTransport(gauge, new_basis, basis)

    els: list = [None] * arr.n
    for slot, i in enumerate(basis):
        els[i] = WeightedPseudocircle(w[slot], new_basis.elements[slot].vertices.copy())
    for j in range(arr.n):
        if els[j] is not None:
            continue
        e = gauge.elements[j]
        if e.trivial:
            els[j] = WeightedPseudocircle(0.0)
            continue
        coincident_slot = None
        for slot, i in enumerate(basis):
            rel = pair_relation(gauge, i, j)
            if rel.kind == "coincident":
                coincident_slot = (slot, rel.orientation)
                break
        if coincident_slot is not None:
            slot, orient = coincident_slot
            verts = new_basis.elements[slot].vertices
            els[j] = WeightedPseudocircle(e.weight, verts[::orient].copy())
            continue
        stations = []
        for slot, i in enumerate(basis):
            rel = pair_relation(gauge, j, i)
            for c in rel.crossings:
                stations.append((c.param_i, transport.transport(slot, c.param_j)))
        stations.sort(key=lambda s: s[0])
        pts = []
        for s, p in stations:
            if pts and np.linalg.norm(p - pts[-1]) <= sphere.VERTEX_MERGE_TOL:
                continue
            pts.append(p)
        if len(pts) > 1 and np.linalg.norm(pts[0] - pts[-1]) <= sphere.VERTEX_MERGE_TOL:
            pts.pop()
        if len(pts) < 4:
            raise DegeneracyError(f"transported curve {j} has too few corners")
        pts = np.array(pts)
        if arr.symmetric:
            pts = _symmetrized(pts)
        els[j] = WeightedPseudocircle(e.weight, pts)
    result = Arrangement(els, symmetric=arr.symmetric)
    return act_rotation(result, q.T)


# ---------------------------------------------------------------------------
# Pivot deformations (chart level)
# ---------------------------------------------------------------------------


def _rotate2(v: np.ndarray, angle: float) -> np.ndarray:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([c * v[0] - s * v[1], s * v[0] + c * v[1]])


def _phi_schedule(phi0: float, t: float) -> float:
    """Pivot angle: magnitude-with-sign form of min(phi0, (pi/2)(1-t))."""
    return math.copysign(min(abs(phi0), (math.pi / 2) * (1.0 - t)), phi0)


def _travel_position(cpl: ChartPseudoline, point: np.ndarray) -> float:
    """Signed position of a point along the travel of a polyline pseudoline.

    0 at the first polyline vertex, negative on the entry ray, increasing
    through the polyline and out along the exit ray.
    """
    point = np.asarray(point, dtype=float)
    v = cpl.vertices
    d = cpl.direction
    s = max(float(np.dot(point - v[0], -d)), 0.0)
    proj = v[0] - s * d
    best = (float(np.linalg.norm(point - proj)), -s)
    acc = 0.0
    for i in range(len(v) - 1):
        seg = v[i + 1] - v[i]
        ln = float(np.linalg.norm(seg))
        if ln > 1e-14:
            t = min(max(float(np.dot(point - v[i], seg)) / (ln * ln), 0.0), 1.0)
            proj = v[i] + t * seg
            cand = (float(np.linalg.norm(point - proj)), acc + t * ln)
            if cand[0] < best[0]:
                best = cand
            acc += ln
    s = max(float(np.dot(point - v[-1], d)), 0.0)
    proj = v[-1] + s * d
    cand = (float(np.linalg.norm(point - proj)), acc + s)
    if cand[0] < best[0]:
        best = cand
    return best[1]


def h_projective_pivot(pseudolines, samples) -> list:
    """Pivot every bent chart pseudoline about its foot point q0.

    Input: a chart arrangement over the three basis lines (horizon plus the
    two coordinate axes); every bent curve must be a polyline with corners
    only on the axes.  Straight entries are fixed.  Returns one arrangement
    (list of pseudolines) per sample value.
    """
    samples = [float(t) for t in samples]
    plans = []
    for lam in pseudolines:
        if lam.kind != "polyline" or lam.is_straight():
            plans.append(("fixed", lam))
            continue
        d = lam.direction
        hits2 = chartmod.crossing_with_line(lam, np.zeros(2), np.array([1.0, 0.0]))
        hits3 = chartmod.crossing_with_line(lam, np.zeros(2), np.array([0.0, 1.0]))
        if len(hits2) != 1 or len(hits3) != 1:
            raise DegeneracyError("pivot curve must cross each axis exactly once")
        p2, p3 = hits2[0], hits3[0]
        if np.linalg.norm(p2) < 1e-9 or np.linalg.norm(p3) < 1e-9 or np.linalg.norm(p2 - p3) < 1e-9:
            raise DegeneracyError("pivot crossings collide with the origin")
        perp = np.array([-d[1], d[0]])
        q0_hits = chartmod.crossing_with_line(lam, np.zeros(2), perp)
        if len(q0_hits) != 1:
            raise DegeneracyError("foot line P meets the curve more than once")
        q0 = q0_hits[0]
        u = p3 - p2
        nu = np.linalg.norm(u)
        if nu < 1e-12:
            raise DegeneracyError("degenerate middle segment")
        u = u / nu
        if float(np.dot(u, d)) < 0:
            u = -u
        phi0 = math.atan2(chartmod._cross2(d, u), float(np.dot(d, u)))
        if abs(phi0) >= math.pi / 2 - 1e-9:
            raise DegeneracyError("pivot angle at the quarter-turn limit")
        order23 = _travel_position(lam, p2) < _travel_position(lam, p3)
        plans.append(("pivot", lam, d, q0, phi0, order23))
    out = []
    for t in samples:
        frame = []
        for plan in plans:
            if plan[0] == "fixed":
                frame.append(plan[1])
                continue
            _, lam, d, q0, phi0, order23 = plan
            phi = _phi_schedule(phi0, t)
            u_t = _rotate2(d, phi)
            if abs(u_t[1]) < 1e-13 or abs(u_t[0]) < 1e-13:
                raise DegeneracyError("pivot line became axis-parallel")
            p2t = q0 + (-q0[1] / u_t[1]) * u_t
            p3t = q0 + (-q0[0] / u_t[0]) * u_t
            verts = [p2t, p3t] if order23 else [p3t, p2t]
            frame.append(ChartPseudoline.polyline(np.array(verts), d))
        out.append(frame)
    return out


def h_pivot_cell(pseudolines, prefix, m_index: int, j: int, samples) -> list:
    """Slide the corner of curve j on L_{i_m} onto the local chord.

    The curve deforms only inside the 2-cell C of the earlier curves
    containing its single crossing with L_{i_m}: the portion between the
    boundary points a, b is replaced by [a, p(t), b] with
    p(t) = t p(1) + (1-t) p(0), where p(1) is the chord's crossing with
    L_{i_m}.  Every other configuration (already straight, crossing on a
    cell boundary, no usable chord) returns the input unchanged at every
    sample.
    """
    samples = [float(t) for t in samples]
    lam = pseudolines[j]
    m_line = pseudolines[m_index]
    if lam.kind != "polyline" or lam.is_straight() or m_line.kind == "horizon":
        return [lam for _ in samples]
    hits = chartmod.pseudoline_crossings(lam, m_line)
    if len(hits) != 1:
        return [lam for _ in samples]
    p0 = hits[0]
    earlier = [pseudolines[i] for i in prefix if pseudolines[i].kind != "horizon"]
    # p0 must be interior to a 2-cell of the earlier curves
    if any(chartmod.point_to_pseudoline(p0, e) <= 1e-9 for e in earlier):
        return [lam for _ in samples]
    a_end, b_end = _walk_to_cell_boundary(lam, p0, earlier)
    if a_end is None and b_end is None:
        return [lam for _ in samples]
    p1 = _chord_hit(a_end, b_end, lam.direction, m_line)
    if p1 is None:
        return [lam for _ in samples]
    out = []
    for t in samples:
        pt = t * p1 + (1.0 - t) * p0
        out.append(_splice(lam, a_end, b_end, pt))
    return out


def _walk_to_cell_boundary(lam: ChartPseudoline, p0, earlier):
    """Walk from p0 along the curve both ways to the first earlier-curve hit.

    Returns (a, b) as points, using None for an end that escapes to the
    horizon.  a precedes p0 in travel order, b follows it.
    """
    pos0 = _travel_position(lam, p0)
    backward = []
    forward = []
    for e in earlier:
        for p in chartmod.pseudoline_crossings(lam, e):
            pos = _travel_position(lam, p)
            if pos < pos0 - 1e-12:
                backward.append((pos, p))
            elif pos > pos0 + 1e-12:
                forward.append((pos, p))
    a = max(backward, key=lambda r: r[0])[1] if backward else None
    b = min(forward, key=lambda r: r[0])[1] if forward else None
    return a, b


def _chord_hit(a, b, d, m_line: ChartPseudoline):
    if a is not None and b is not None:
        piece = ("seg", a, b)
    elif a is None and b is not None:
        piece = ("ray", b, -d)
    else:
        piece = ("ray", a, d)
    for mp in m_line.pieces():
        if mp[0] == "seg" and np.allclose(mp[1], mp[2]):
            continue
        p = chartmod._piece_piece(piece, mp)
        if p is not None:
            return p
    return None


def _splice(lam: ChartPseudoline, a, b, pt) -> ChartPseudoline:
    pos_a = -math.inf if a is None else _travel_position(lam, a)
    pos_b = math.inf if b is None else _travel_position(lam, b)
    head, tail = [], []
    for v in lam.vertices:
        pos = _travel_position(lam, v)
        if pos <= pos_a + 1e-12:
            head.append(v)
        elif pos >= pos_b - 1e-12:
            tail.append(v)
    mid = []
    if a is not None:
        mid.append(a)
    mid.append(pt)
    if b is not None:
        mid.append(b)
    verts = head + mid + tail
    out = [verts[0]]
    for v in verts[1:]:
        if np.linalg.norm(np.asarray(v) - np.asarray(out[-1])) > 1e-12:
            out.append(v)
    return ChartPseudoline.polyline(np.array(out), lam.direction)


# ---------------------------------------------------------------------------
# Piecewise-linear interpolation between equal-covector arrangements
# ---------------------------------------------------------------------------


def _stereo_project(center, t1, t2, pts):
    pts = np.atleast_2d(pts)
    denom = 1.0 + pts @ center
    if np.any(denom < 1e-9):
        raise DegeneracyError("cell reaches the antipode of its sample point")
    return np.stack([(pts @ t1) * 2 / denom, (pts @ t2) * 2 / denom], axis=1)


def _stereo_unproject(center, t1, t2, uv):
    rho2 = float(uv @ uv)
    xc = (4.0 - rho2) / (4.0 + rho2)
    scale = 4.0 / (4.0 + rho2)
    return sphere.unit(xc * center + scale * (uv[0] * t1 + uv[1] * t2))


def _mean_value_weights(poly: np.ndarray, x: np.ndarray) -> np.ndarray:
    m = len(poly)
    d = poly - x[None, :]
    r = np.linalg.norm(d, axis=1)
    if np.any(r < 1e-12):
        w = np.zeros(m)
        w[int(np.argmin(r))] = 1.0
        return w
    tans = np.empty(m)
    for i in range(m):
        a, b = d[i], d[(i + 1) % m]
        cross = a[0] * b[1] - a[1] * b[0]
        dot = float(a @ b)
        ang = math.atan2(cross, dot)
        tans[i] = math.tan(ang / 2.0)
    w = np.array([(tans[i - 1] + tans[i]) / r[i] for i in range(m)])
    total = float(np.sum(w))
    if abs(total) < 1e-14:
        raise DegeneracyError("mean value weights degenerate")
    return w / total


class InterpMap:
    """interp(A, B): maps points of B's sphere onto A's, cell by cell."""

    def __init__(self, a: Arrangement, b: Arrangement):
        from .om import covectors

        cov_a = covectors(a)
        cov_b = covectors(b)
        if cov_a.vectors != cov_b.vectors:
            raise ValueError("arrangements have different covector sets")
        self.a = a
        self.b = b
        self.cx_a = build_complex(a)
        self.cx_b = build_complex(b)
        self._face_cache: dict = {}

    def __call__(self, x) -> np.ndarray:
        x = sphere.unit(np.asarray(x, dtype=float))
        sig = aim_vector(self.b, x)
        kind, idx = self.cx_b.cell_of(sig)
        akind, aidx = self.cx_a.cell_of(sig)
        if kind != akind:
            raise DegeneracyError("covector names different cell kinds")
        if kind == "vertex":
            return self.cx_a.vertices[aidx].point.copy()
        if kind == "edge":
            return self._map_edge(idx, aidx, x)
        return self._map_face(idx, aidx, x)

    def _rep_curve(self, cx: CellComplex, arr: Arrangement, group: int):
        return arr.elements[cx.groups[group][0]]

    def _map_edge(self, bid: int, aid: int, x) -> np.ndarray:
        eb = self.cx_b.edges[bid]
        ea = self.cx_a.edges[aid]
        cb = self._rep_curve(self.cx_b, self.b, eb.group)
        ca = self._rep_curve(self.cx_a, self.a, ea.group)
        span_b = eb.param_to - eb.param_from
        off = (cb.param_of(x) - eb.param_from) % cb.total_angle
        if off > span_b:
            # floating wrap at the edge start lands near the full period
            off = 0.0 if (cb.total_angle - off) < (off - span_b) else span_b
        frac = min(max(off / span_b, 0.0), 1.0)
        span_a = ea.param_to - ea.param_from
        return ca.point_at(ea.param_from + frac * span_a)

    def _boundary_points(self, sig) -> tuple[np.ndarray, np.ndarray]:
        if sig in self._face_cache:
            return self._face_cache[sig]
        _, bid = self.cx_b.cell_of(sig)
        _, aid = self.cx_a.cell_of(sig)
        fb = self.cx_b.faces[bid]
        fa = self.cx_a.faces[aid]
        bnd_a = {self.cx_a.edges[eid].sign: (eid, d) for eid, d in fa.boundary}
        pts_b, pts_a = [], []
        for eid, direction in fb.boundary:
            eb = self.cx_b.edges[eid]
            if eb.sign not in bnd_a:
                raise DegeneracyError("face boundaries do not match edge-wise")
            aeid, adir = bnd_a[eb.sign]
            if adir != direction:
                # equal covectors force equal side relations, hence equal
                # traversal directions on matching edges
                raise DegeneracyError("matched boundary edges traversed oppositely")
            ea = self.cx_a.edges[aeid]
            cb = self._rep_curve(self.cx_b, self.b, eb.group)
            ca = self._rep_curve(self.cx_a, self.a, ea.group)
            span_b = eb.param_to - eb.param_from
            span_a = ea.param_to - ea.param_from
            fracs = {0.0, 1.0}
            for p in eb.polyline[1:-1]:
                fracs.add(((cb.param_of(p) - eb.param_from) % cb.total_angle) / span_b)
            for p in ea.polyline[1:-1]:
                fracs.add(((ca.param_of(p) - ea.param_from) % ca.total_angle) / span_a)
            fr = sorted(f for f in fracs if -1e-9 <= f <= 1 + 1e-9)
            if direction < 0:
                fr = list(reversed(fr))
            for f in fr[:-1]:  # the next boundary edge starts at the last point
                pts_b.append(cb.point_at(eb.param_from + f * span_b))
                pts_a.append(ca.point_at(ea.param_from + f * span_a))
        out = (np.array(pts_b), np.array(pts_a))
        self._face_cache[sig] = out
        return out

    def _map_face(self, bid: int, aid: int, x) -> np.ndarray:
        fb = self.cx_b.faces[bid]
        fa = self.cx_a.faces[aid]
        pts_b, pts_a = self._boundary_points(fb.sign)
        cb_center = fb.sample
        ca_center = fa.sample
        t1b, t2b = sphere.tangent_basis(cb_center)
        t1a, t2a = sphere.tangent_basis(ca_center)
        poly_b = _stereo_project(cb_center, t1b, t2b, pts_b)
        poly_a = _stereo_project(ca_center, t1a, t2a, pts_a)
        ux = _stereo_project(cb_center, t1b, t2b, x[None, :])[0]
        w = _mean_value_weights(poly_b, ux)
        ya = w @ poly_a
        y = _stereo_unproject(ca_center, t1a, t2a, ya)
        if aim_vector(self.a, y) == fb.sign:
            return y
        # nonconvex spill: blend toward the face sample until the sign matches
        target = _stereo_project(ca_center, t1a, t2a, ca_center[None, :])[0]
        lo, hi = 0.0, 1.0
        for _ in range(60):
            mid = (lo + hi) / 2.0
            cand = _stereo_unproject(ca_center, t1a, t2a, (1 - mid) * ya + mid * target)
            if aim_vector(self.a, cand) == fb.sign:
                hi = mid
            else:
                lo = mid
        y = _stereo_unproject(ca_center, t1a, t2a, (1 - hi) * ya + hi * target)
        if aim_vector(self.a, y) != fb.sign:
            return fa.sample.copy()
        return y


def interp_pl(a: Arrangement, b: Arrangement, x) -> np.ndarray:
    """Point of A's sphere matching x on B's sphere (sign-vector preserving)."""
    return InterpMap(a, b)(x)


# ---------------------------------------------------------------------------
# The greedy pipeline
# ---------------------------------------------------------------------------


def _stage(name: str):
    class _Ctx:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            if exc_type is not None and issubclass(exc_type, DegeneracyError):
                raise DegeneracyError(f"stage {name}: {exc}") from exc
            return False

    return _Ctx()


def greedy_pipeline(arr: Arrangement, frame_count: int = 20, basis=None):
    """Straighten a valid spanning symmetric arrangement to a Parseval frame.

    Stages: basis pick, basis_normalize, chord_redraw over the basis
    octants, projective pivots sampled to straight lines, frame extraction,
    and the orthonormalization path sampled to t = 1.  Element weights are
    unchanged before the orthonormalization stage.  Returns the frame and a
    trace with frame_count validated arrangement snapshots.
    """
    if frame_count < 6:
        raise ValueError("frame_count must be at least 6")
    report = validate(arr)
    if not report.valid:
        raise InvalidArrangementError(f"invalid input: {report.violations[:3]}")
    if not report.spanning:
        raise InvalidArrangementError("input arrangement is not spanning")
    if not report.symmetric:
        raise InvalidArrangementError("pipeline requires a symmetric arrangement")
    with _stage("basis-pick"):
        basis = pick_basis(arr) if basis is None else tuple(int(i) for i in basis)
    with _stage("basis_normalize"):
        a1 = basis_normalize(arr, basis)
        if not StageState(basis, "Y").check(a1):
            raise DegeneracyError("basis curves did not straighten")
    with _stage("chord_redraw"):
        a2 = chord_redraw(a1, basis)
        if not StageState(basis, "Z").check(a2):
            raise DegeneracyError("chord redraw left corners off the prefix kernels")

    pivot_n = max((frame_count - 3) // 2, 1)
    ortho_n = max(frame_count - 3 - pivot_n, 1)

    with _stage("pivot"):
        chart_basis = ChartBasis(
            *(a2.elements[i].weight * fitted_normal(a2.elements[i]) for i in basis)
        )
        fixed_elements: dict[int, WeightedPseudocircle] = {}
        moving: dict[int, ChartPseudoline] = {}
        for j in range(arr.n):
            e = a2.elements[j]
            if j in basis or e.trivial:
                fixed_elements[j] = e
                continue
            coincident = any(
                not a2.elements[i].trivial
                and pair_relation(a2, i, j).kind == "coincident"
                for i in basis
            )
            if coincident:
                fixed_elements[j] = e
                continue
            cpl = chartmod.chart_from_element(e, chart_basis)
            if cpl.is_straight():
                fixed_elements[j] = e
            else:
                moving[j] = cpl
        ts = [k / pivot_n for k in range(1, pivot_n + 1)]
        pivot_frames = h_projective_pivot(list(moving.values()), ts)
        pivot_arrangements = []
        for t_local, frame in zip(ts, pivot_frames):
            els = []
            for j in range(arr.n):
                if j in fixed_elements:
                    els.append(fixed_elements[j].copy())
                else:
                    k = list(moving.keys()).index(j)
                    els.append(
                        chartmod.lift_polyline(frame[k], chart_basis, a2.elements[j].weight)
                    )
            pivot_arrangements.append(Arrangement(els, symmetric=arr.symmetric))
    a3 = pivot_arrangements[-1] if pivot_arrangements else a2

    with _stage("frame-extraction"):
        f0 = frame_from_circles(a3, tol=1e-6)
    with _stage("orthonormalize"):
        ortho_ts = [k / ortho_n for k in range(1, ortho_n + 1)]
        ortho_frames = [orthonormalize_path(f0, t) for t in ortho_ts]
        final = ortho_frames[-1]

    snapshots = (
        [("input", arr), ("basis_normalize", a1), ("chord_redraw", a2)]
        + [("pivot", a) for a in pivot_arrangements]
        + [("orthonormalize", circles_from_frame(f)) for f in ortho_frames]
    )
    trace = DeformationTrace(basis=basis)
    total = len(snapshots)
    for idx, (stage_name, snap) in enumerate(snapshots):
        rep = validate(snap)
        if not rep.valid:
            raise DegeneracyError(
                f"stage {stage_name}: intermediate frame invalid: {rep.violations[:3]}"
            )
        trace.frames.append(
            TraceFrame(
                t=idx / (total - 1),
                stage=stage_name,
                arrangement=snap,
                valid=rep.valid,
            )
        )
    return final, trace
