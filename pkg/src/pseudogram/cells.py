"""Cell complex of the sphere subdivision induced by an arrangement.

Vertices are the pairwise crossing points (merged across coincident kernels
and concurrences), edges are the kernel sub-arcs between consecutive
vertices, and faces are traced with the interior on the left of each
directed boundary edge.  Every cell carries its sign vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import sphere
from .arrangement import (
    Arrangement,
    InvalidArrangementError,
    aim_eval,
    is_spanning,
    kernel_groups,
    pair_relation,
)
from .sphere import DegeneracyError


@dataclass
class Vertex:
    point: np.ndarray
    sign: tuple = ()
    groups: dict = field(default_factory=dict)  # group id -> param on rep curve


@dataclass
class EdgeCell:
    group: int
    v_from: int
    v_to: int
    param_from: float
    param_to: float
    polyline: np.ndarray = None
    sign: tuple = ()
    full_circle: bool = False
    midpoint: np.ndarray = None

    @property
    def gap(self) -> float:
        return self.param_to - self.param_from  # param_to may exceed the period


@dataclass
class FaceCell:
    boundary: list  # list of (edge_id, direction) with direction in {+1,-1}
    sample: np.ndarray = None
    sign: tuple = ()


class CellComplex:
    def __init__(self, arr: Arrangement):
        self.arrangement = arr
        self.n = arr.n
        self.groups: list[list[int]] = []
        self.group_orient: dict = {}  # element index -> +-1 relative to its rep
        self.vertices: list[Vertex] = []
        self.edges: list[EdgeCell] = []
        self.faces: list[FaceCell] = []
        self._lookup: dict = {}

    # -- queries --------------------------------------------------------------

    @property
    def euler(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def covector_index(self) -> dict:
        return dict(self._lookup)

    def cell_of(self, sign) -> tuple:
        """(kind, index) of the unique cell with this sign vector.

        The all-zero vector maps to ("bottom", None); unknown vectors raise.
        """
        sign = tuple(int(s) for s in sign)
        if len(sign) != self.n:
            raise KeyError(f"sign vector length {len(sign)} != n = {self.n}")
        if all(s == 0 for s in sign):
            return ("bottom", None)
        if sign not in self._lookup:
            raise KeyError(f"sign vector {sign} absent from the complex")
        return self._lookup[sign]

    def face_samples(self) -> list[np.ndarray]:
        return [f.sample for f in self.faces]


def cell_of(complex_: CellComplex, sign) -> tuple:
    return complex_.cell_of(sign)


def build_complex(arr: Arrangement, require_spanning: bool = True) -> CellComplex:
    """Build the cell complex of a valid arrangement.

    The public contract requires a spanning arrangement; internal callers
    (openness radii) may build subdivisions by fewer curves.
    """
    if require_spanning and not is_spanning(arr):
        raise InvalidArrangementError("arrangement is not spanning")
    cx = CellComplex(arr)
    cx.groups = kernel_groups(arr)
    for grp in cx.groups:
        rep = grp[0]
        cx.group_orient[rep] = 1
        for e in grp[1:]:
            cx.group_orient[e] = pair_relation(arr, rep, e).orientation
    reps = [grp[0] for grp in cx.groups]
    if not reps:
        raise InvalidArrangementError("arrangement has no nonzero elements")

    _collect_vertices(arr, cx, reps)
    if not cx.vertices:
        if len(reps) > 1:
            raise DegeneracyError("distinct kernels produced no crossings")
        _build_full_circle(arr, cx)
        _assign_lookup(cx)
        return cx
    _build_edges(arr, cx, reps)
    _trace_faces(arr, cx, reps)
    _assign_signs(arr, cx, reps)
    if cx.euler != 2:
        raise DegeneracyError(f"Euler relation violated: V-E+F = {cx.euler}")
    _assign_lookup(cx)
    return cx


# -- construction stages ------------------------------------------------------


def _collect_vertices(arr, cx, reps):
    raw = []  # (point, {gi: param_i, gj: param_j})
    for a in range(len(reps)):
        for b in range(a + 1, len(reps)):
            rel = pair_relation(arr, reps[a], reps[b])
            if rel.kind == "coincident":
                raise DegeneracyError("coincident kernels with distinct group reps")
            if rel.count != 2:
                raise InvalidArrangementError(
                    f"pair ({reps[a]}, {reps[b]}) crosses {rel.count} times"
                )
            for c in rel.crossings:
                raw.append((c.point, {a: c.param_i, b: c.param_j}))
    for point, incid in raw:
        for v in cx.vertices:
            if np.linalg.norm(v.point - point) <= sphere.VERTEX_MERGE_TOL:
                for g, p in incid.items():
                    v.groups.setdefault(g, p)
                break
        else:
            cx.vertices.append(Vertex(point=point.copy(), groups=dict(incid)))
    # refresh params against the merged representative points
    for v in cx.vertices:
        for g in list(v.groups):
            v.groups[g] = arr.elements[reps[g]].param_of(v.point)


def _build_edges(arr, cx, reps):
    for g, rep in enumerate(reps):
        curve = arr.elements[rep]
        total = curve.total_angle
        stations = sorted(
            (v.groups[g], vid) for vid, v in enumerate(cx.vertices) if g in v.groups
        )
        if not stations:
            raise DegeneracyError(f"kernel group {g} carries no vertex")
        k = len(stations)
        for a in range(k):
            p0, v0 = stations[a]
            p1, v1 = stations[(a + 1) % k]
            span = (p1 - p0) % total
            if span <= 0:
                span += total
            poly = _polyline_between(curve, cx.vertices[v0].point, cx.vertices[v1].point, p0, p0 + span)
            cx.edges.append(
                EdgeCell(
                    group=g,
                    v_from=v0,
                    v_to=v1,
                    param_from=p0,
                    param_to=p0 + span,
                    polyline=poly,
                )
            )


def _polyline_between(curve, pt0, pt1, s0, s1):
    """Geometric polyline of the curve between params s0 < s1 (s1 may wrap)."""
    total = curve.total_angle
    _, _, _, _, cum = curve._edges()
    pts = [pt0]
    base = math.floor(s0 / total)
    for lap in (base, base + 1):
        for c, vtx in zip(cum[:-1], curve.vertices):
            s = c + lap * total
            if s0 + 1e-12 < s < s1 - 1e-12:
                pts.append(vtx)
    pts.append(pt1)
    out = [pts[0]]
    for p in pts[1:]:
        if np.linalg.norm(p - out[-1]) > 1e-12:
            out.append(p)
    if len(out) < 2:
        out = [pt0, pt1]
    return np.array(out)


def _edge_dir_at(curve, edge: EdgeCell, at_from: bool) -> float:
    span = edge.param_to - edge.param_from
    delta = min(span / 3.0, 1e-3)
    if at_from:
        return edge.param_from + delta
    return edge.param_to - delta


def _outgoing_directions(arr, cx, reps):
    """For every vertex: list of (angle, half_edge) in its tangent plane."""
    out = [[] for _ in cx.vertices]
    for eid, e in enumerate(cx.edges):
        curve = arr.elements[reps[e.group]]
        for direction, vid, at_from in ((1, e.v_from, True), (-1, e.v_to, False)):
            v = cx.vertices[vid]
            probe = curve.point_at(_edge_dir_at(curve, e, at_from))
            d = probe - float(np.dot(probe, v.point)) * v.point
            nd = np.linalg.norm(d)
            if nd < 1e-12:
                raise DegeneracyError("edge leaves a vertex with no usable tangent")
            d /= nd
            t1, t2 = sphere.tangent_basis(v.point)
            ang = math.atan2(float(np.dot(d, t2)), float(np.dot(d, t1)))
            out[vid].append((ang, (eid, direction)))
    return out


def _trace_faces(arr, cx, reps):
    outgoing = _outgoing_directions(arr, cx, reps)
    angle_of = {}
    for vid, lst in enumerate(outgoing):
        for ang, he in lst:
            angle_of[(vid, he)] = ang

    def head(he):
        e = cx.edges[he[0]]
        return e.v_to if he[1] == 1 else e.v_from

    def nxt(he):
        eid, direction = he
        v = head(he)
        back = angle_of[(v, (eid, -direction))]
        best = None
        for ang, cand in outgoing[v]:
            if cand == (eid, -direction):
                continue
            cw = (back - ang) % (2 * math.pi)
            if cw <= 1e-12:
                cw += 2 * math.pi
            if best is None or cw < best[0]:
                best = (cw, cand)
        if best is None:
            raise DegeneracyError("vertex with a dangling edge")
        return best[1]

    seen = set()
    for eid in range(len(cx.edges)):
        for direction in (1, -1):
            start = (eid, direction)
            if start in seen:
                continue
            cycle = []
            he = start
            for _ in range(8 * len(cx.edges) + 8):
                cycle.append(he)
                seen.add(he)
                he = nxt(he)
                if he == start:
                    break
            else:
                raise DegeneracyError("face traversal did not close")
            cx.faces.append(FaceCell(boundary=cycle))


def _group_aim(arr, cx, reps, g, point) -> int:
    return aim_eval(arr.elements[reps[g]], point)


def _element_sign_from_groups(arr, cx, group_signs) -> tuple:
    sign = []
    group_of = {}
    for g, grp in enumerate(cx.groups):
        for e in grp:
            group_of[e] = g
    for i, el in enumerate(arr.elements):
        if el.trivial:
            sign.append(0)
            continue
        g = group_of[i]
        s = group_signs[g]
        sign.append(s * cx.group_orient[i])
    return tuple(sign)


def _assign_signs(arr, cx, reps):
    ngroups = len(cx.groups)
    # vertices
    for v in cx.vertices:
        gs = {}
        for g in range(ngroups):
            if g in v.groups:
                gs[g] = 0
            else:
                s = _group_aim(arr, cx, reps, g, v.point)
                if s == 0:
                    raise DegeneracyError("vertex lies on a non-incident kernel")
                gs[g] = s
        v.sign = _element_sign_from_groups(arr, cx, gs)
    # edges
    for e in cx.edges:
        curve = arr.elements[reps[e.group]]
        mid = curve.point_at((e.param_from + e.param_to) / 2.0)
        gs = {}
        for g in range(ngroups):
            if g == e.group:
                gs[g] = 0
            else:
                s = _group_aim(arr, cx, reps, g, mid)
                if s == 0:
                    raise DegeneracyError("edge midpoint lies on another kernel")
                gs[g] = s
        e.sign = _element_sign_from_groups(arr, cx, gs)
        e.midpoint = mid
    # faces: combinatorial composition over the boundary
    for f in cx.faces:
        gs = {}
        for eid, direction in f.boundary:
            e = cx.edges[eid]
            own = direction  # left of positive travel is the + side
            if e.group in gs and gs[e.group] != own:
                raise DegeneracyError("inconsistent face boundary orientation")
            gs[e.group] = own
        # fill remaining groups from the boundary edges' midpoint signs
        for g in range(ngroups):
            if g in gs:
                continue
            votes = set()
            for eid, direction in f.boundary:
                e = cx.edges[eid]
                if e.group == g:
                    continue
                s = _group_sign_of_edge(cx, e, g)
                if s != 0:
                    votes.add(s)
            if len(votes) != 1:
                raise DegeneracyError("ambiguous face sign from boundary edges")
            gs[g] = votes.pop()
        f.sign = _element_sign_from_groups(arr, cx, gs)
        f.sample = _face_sample(arr, cx, reps, f)


def _group_sign_of_edge(cx, e: EdgeCell, g: int) -> int:
    # recover the group-level sign of an edge from its element-level sign
    grp = cx.groups[g]
    i = grp[0]
    return e.sign[i] * cx.group_orient[i]


def _face_sample(arr, cx, reps, f: FaceCell) -> np.ndarray:
    best = None
    for eid, direction in f.boundary:
        e = cx.edges[eid]
        span = e.param_to - e.param_from
        if best is None or span > best[0]:
            best = (span, eid, direction)
    _, eid, direction = best
    e = cx.edges[eid]
    curve = arr.elements[reps[e.group]]
    smid = (e.param_from + e.param_to) / 2.0
    m = curve.point_at(smid)
    tangent = curve.point_at(smid + 1e-4) - curve.point_at(smid - 1e-4)
    tangent = tangent - float(np.dot(tangent, m)) * m
    tangent = sphere.unit(tangent) * direction
    left = np.cross(m, tangent)
    delta = min(0.2, (e.param_to - e.param_from) / 2)
    for _ in range(60):
        sample = sphere.unit(m + delta * left)
        sig = []
        ok = True
        for g in range(len(cx.groups)):
            s = _group_aim(arr, cx, reps, g, sample)
            if s == 0:
                ok = False
                break
            sig.append(s)
        if ok:
            gs = {g: sig[g] for g in range(len(cx.groups))}
            if _element_sign_from_groups(arr, cx, gs) == f.sign:
                return sample
        delta *= 0.5
        if delta < 1e-13:
            break
    raise DegeneracyError("could not place a face sample point")


def _build_full_circle(arr, cx):
    # single kernel, no crossings: one full-circle edge and two faces
    grp = cx.groups[0]
    rep = grp[0]
    curve = arr.elements[rep]
    gs_zero = {0: 0}
    edge = EdgeCell(
        group=0,
        v_from=-1,
        v_to=-1,
        param_from=0.0,
        param_to=curve.total_angle,
        polyline=curve.vertices.copy(),
        full_circle=True,
    )
    edge.sign = _element_sign_from_groups(arr, cx, gs_zero)
    cx.edges.append(edge)
    pole = curve.pole()
    for s, sample in ((1, pole), (-1, -pole)):
        face = FaceCell(boundary=[(0, s)], sample=sample)
        face.sign = _element_sign_from_groups(arr, cx, {0: s})
        cx.faces.append(face)


def _assign_lookup(cx):
    for vid, v in enumerate(cx.vertices):
        cx._lookup[v.sign] = ("vertex", vid)
    for eid, e in enumerate(cx.edges):
        cx._lookup[e.sign] = ("edge", eid)
    for fid, f in enumerate(cx.faces):
        cx._lookup[f.sign] = ("face", fid)
