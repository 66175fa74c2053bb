import itertools
import math

import numpy as np
import pytest

import pseudogram as pg
from pseudogram.arrangement import Arrangement, WeightedPseudocircle, pair_relation
from pseudogram.chart import ChartPseudoline, chart_crossing_count
from pseudogram.sphere import random_rotation
from pseudogram.straighten import InterpMap, _phi_schedule, pick_basis

from conftest import max_vertex_gap, random_spanning


def crossing_counts(arr):
    out = {}
    nz = arr.nonzero_indices()
    for a in range(len(nz)):
        for b in range(a + 1, len(nz)):
            i, j = nz[a], nz[b]
            rel = pair_relation(arr, i, j)
            out[(i, j)] = rel.count if rel.kind == "crossing" else "coincident"
    return out


# -- surrogate radii ----------------------------------------------------------


def test_surrogate_radius_trivial_element(coordinate_circles):
    els = [e.copy() for e in coordinate_circles.elements] + [WeightedPseudocircle(0.0)]
    arr = Arrangement(els, symmetric=True)
    assert pg.surrogate_radius(arr, (0, 1, 3)) == 0.0


def test_surrogate_radius_long_prefix_returns_weight():
    arr = random_spanning(2, 6)
    arr.elements[4] = WeightedPseudocircle(0.7, arr.elements[4].vertices.copy())
    assert pg.surrogate_radius(arr, (0, 1, 2, 3, 4)) == 0.7
    assert pg.surrogate_radius(arr, (0,)) == 1.0


def test_surrogate_radius_coincident_pair_zero(coordinate_circles):
    els = [e.copy() for e in coordinate_circles.elements]
    arr = Arrangement([els[0], els[0].copy(), els[1], els[2]], symmetric=True)
    assert pg.surrogate_radius(arr, (0, 1)) == 0.0
    assert pg.surrogate_radius(arr, (0, 2)) > 0.0


def test_surrogate_radius_octant_formula(coordinate_circles):
    # 3 coordinate circles: face samples are the octant centers; the nearest
    # kernel distance is bounded by the octant inradius
    r = pg.surrogate_radius(coordinate_circles, (0, 1, 2))
    assert 0.0 < r < 1.0


def test_pick_basis_prefers_heavier_elements():
    arr = random_spanning(3, 5)
    arr.elements[2] = WeightedPseudocircle(2.0, arr.elements[2].vertices.copy())
    basis = pick_basis(arr)
    assert basis[0] == 2


# -- chord redraw --------------------------------------------------------------


def test_chord_redraw_fixed_point():
    arr = random_spanning(7, 5, amplitude=0.03)
    basis = pick_basis(arr)
    a1 = pg.basis_normalize(arr, basis)
    a2 = pg.chord_redraw(a1, basis)
    a3 = pg.chord_redraw(a2, basis)
    assert max_vertex_gap(a2, a3) <= 1e-10


def test_chord_redraw_octant_chord(coordinate_circles):
    # a wiggly symmetric curve; redrawn over the octants it becomes the
    # geodesic chords with crossing points kept exactly
    t = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    wig = np.stack(
        [np.cos(t), np.sin(t) * 0.8 + 0.2 * np.sin(3 * t), 0.55 + 0.1 * np.sin(5 * t)], axis=1
    )
    half = wig[:32] / np.linalg.norm(wig[:32], axis=1)[:, None]
    curve = WeightedPseudocircle(1.0, np.vstack([half, -half]))
    els = [e.copy() for e in coordinate_circles.elements] + [curve]
    arr = Arrangement(els, symmetric=True)
    assert pg.validate(arr).valid
    before = crossing_counts(arr)
    out = pg.chord_redraw(arr, (0, 1, 2))
    after = crossing_counts(out)
    assert before == after
    redrawn = out.elements[3]
    # endpoints exact: every redrawn vertex lies on a coordinate plane
    planes = np.abs(redrawn.vertices)
    assert np.all(np.min(planes, axis=1) <= 1e-9)


def test_chord_redraw_preserves_crossing_counts_random():
    for seed in range(8):
        arr = random_spanning(seed + 70, 5, amplitude=0.05)
        basis = pick_basis(arr)
        a1 = pg.basis_normalize(arr, basis)
        before = crossing_counts(a1)
        a2 = pg.chord_redraw(a1, basis)
        assert crossing_counts(a2) == before


# -- basis normalization ---------------------------------------------------------


def test_basis_normalize_fixed_on_coordinate_plus_chords(coordinate_circles):
    arr = random_spanning(9, 5, amplitude=0.02)
    basis = pick_basis(arr)
    a2 = pg.chord_redraw(pg.basis_normalize(arr, basis), basis)
    again = pg.basis_normalize(a2, basis)
    assert max_vertex_gap(a2, again) <= 1e-9


def test_basis_normalize_straightens_and_preserves_counts():
    arr = random_spanning(11, 5, amplitude=0.05)
    basis = pick_basis(arr)
    before = crossing_counts(arr)
    out = pg.basis_normalize(arr, basis)
    from pseudogram.frames import fitted_normal

    for i in basis:
        fitted_normal(out.elements[i], tol=1e-9)  # exact great circles
    assert crossing_counts(out) == before
    assert pg.validate(out).valid


def test_basis_normalize_commutes_with_rotation():
    arr = random_spanning(13, 5, amplitude=0.04)
    basis = pick_basis(arr)
    q = random_rotation(np.random.default_rng(5))
    lhs = pg.basis_normalize(pg.act_rotation(arr, q), basis)
    rhs = pg.act_rotation(pg.basis_normalize(arr, basis), q)
    assert max_vertex_gap(lhs, rhs) <= 1e-8


def test_basis_normalize_metric_mode_matches_frechet():
    arr = random_spanning(15, 4, amplitude=0.03)
    basis = pick_basis(arr)
    out = pg.basis_normalize(arr, basis, metric=True)
    d_in = pg.weighted_frechet(arr.elements[basis[1]], arr.elements[basis[0]])
    d_out = pg.weighted_frechet(out.elements[basis[1]], out.elements[basis[0]])
    assert abs(d_in - d_out) <= 0.05
    assert pg.validate(out).valid


def test_basis_normalize_rejects_non_basis(coordinate_circles):
    els = [e.copy() for e in coordinate_circles.elements]
    arr = Arrangement([els[0], els[0].copy(), els[1], els[2]], symmetric=True)
    with pytest.raises(ValueError):
        pg.basis_normalize(arr, (0, 1, 2))


# -- pivots ---------------------------------------------------------------------


BASIS_LINES = [
    ChartPseudoline.horizon(),
    ChartPseudoline.line([0.0, 0.0], [1.0, 0.0]),
    ChartPseudoline.line([0.0, 0.0], [0.0, 1.0]),
]


def test_phi_schedule():
    assert _phi_schedule(0.4, 0.0) == 0.4
    assert _phi_schedule(-0.4, 0.0) == -0.4
    assert _phi_schedule(0.4, 1.0) == 0.0
    # magnitude-with-sign of min(|phi0|, (pi/2)(1-t))
    assert _phi_schedule(-1.2, 0.5) == -min(1.2, math.pi / 4)


def test_h_projective_pivot_spec_example():
    lam = ChartPseudoline.polyline(
        np.array([[2.0, 0.0], [0.0, 1.0]]), np.array([-1.0, 1.0]) / math.sqrt(2)
    )
    frames = pg.h_projective_pivot(BASIS_LINES + [lam], [0.0, 1.0])
    assert np.allclose(frames[0][3].vertices, lam.vertices)
    final = frames[1][3]
    # q0 = (2/3, 2/3); lambda(1) is the line x + y = 4/3
    for v in final.vertices:
        assert abs(v[0] + v[1] - 4.0 / 3.0) <= 1e-12
    assert final.is_straight()


def test_h_projective_pivot_fixes_straight_lines():
    line = ChartPseudoline.line([0.4, 0.2], [1.0, 2.0])
    frames = pg.h_projective_pivot(BASIS_LINES + [line], [0.3, 0.9])
    assert all(f[3] is line for f in frames)


def pivot_instances(count, seed0=300):
    """Z-state chart instances derived from perturbed circle arrangements."""
    out = []
    made = 0
    seed = seed0
    while made < count:
        arr = random_spanning(seed, 5, amplitude=0.05)
        seed += 1
        basis = pick_basis(arr)
        a2 = pg.chord_redraw(pg.basis_normalize(arr, basis), basis)
        from pseudogram.frames import fitted_normal
        from pseudogram.sphere import ChartBasis

        cb = ChartBasis(*(a2.elements[i].weight * fitted_normal(a2.elements[i]) for i in basis))
        from pseudogram.chart import chart_from_element

        lams = []
        for j in range(a2.n):
            if j in basis:
                continue
            c = chart_from_element(a2.elements[j], cb)
            if not c.is_straight():
                lams.append(c)
        if lams:
            out.append(BASIS_LINES + lams)
            made += 1
    return out


def test_h_projective_pivot_preserves_crossings():
    ts = np.linspace(0, 1, 6)
    for inst in pivot_instances(6):
        frames = pg.h_projective_pivot(inst, ts)
        prev_angles = None
        for frame in frames:
            for a, b in itertools.combinations(range(len(frame)), 2):
                assert chart_crossing_count(frame[a], frame[b]) == 1
            angles = [f.max_exterior_angle() for f in frame[3:]]
            if prev_angles is not None:
                assert all(x <= y + 1e-9 for x, y in zip(angles, prev_angles))
            prev_angles = angles
        assert all(f.max_exterior_angle() <= 1e-9 for f in frames[-1][3:])


def h_cell_instance():
    """Prefix horizon + axes + L4 (x + y = 2), curve bent at p0 on L4."""
    l4 = ChartPseudoline.line([2.0, 0.0], [-1.0, 1.0])
    d = np.array([-2.0, 1.0]) / math.sqrt(5)
    lam = ChartPseudoline.polyline(np.array([[4.0, 0.0], [1.5, 0.5], [0.0, 1.5]]), d)
    return [BASIS_LINES[0], BASIS_LINES[1], BASIS_LINES[2], l4, lam]


def test_h_pivot_cell_slides_corner_to_chord():
    lines = h_cell_instance()
    ts = [0.0, 0.5, 1.0]
    out = pg.h_pivot_cell(lines, (0, 1, 2), 3, 4, ts)
    assert np.allclose(out[0].vertices, lines[4].vertices)
    # p(0) = (1.5, 0.5); p(1) = chord (4,0)-(0,1.5) meets x+y=2 at (0.8, 1.2)
    assert np.allclose(out[2].vertices[1], [0.8, 1.2])
    mid = 0.5 * np.array([1.5, 0.5]) + 0.5 * np.array([0.8, 1.2])
    assert np.allclose(out[1].vertices[1], mid)
    # endpoints a, b stay fixed
    for o in out:
        assert np.allclose(o.vertices[0], [4.0, 0.0])
        assert np.allclose(o.vertices[-1], [0.0, 1.5])
    # crossing counts with every line stay 1 throughout
    for o in out:
        for ell in lines[1:4]:
            assert chart_crossing_count(o, ell) == 1


def test_h_pivot_cell_fixed_cases():
    lines = h_cell_instance()
    straight = ChartPseudoline.line([0.3, 0.1], [1.0, 3.0])
    lines[4] = straight
    out = pg.h_pivot_cell(lines, (0, 1, 2), 3, 4, [0.5, 1.0])
    assert all(o is straight for o in out)


# -- interp ----------------------------------------------------------------------


def test_interp_diagonal_identity():
    arr = random_spanning(19, 4)
    m = InterpMap(arr, arr)
    cx = pg.build_complex(arr)
    for v in cx.vertices:
        assert np.array_equal(m(v.point), v.point)
    rng = np.random.default_rng(1)
    for _ in range(200):
        x = rng.standard_normal(3)
        x /= np.linalg.norm(x)
        assert np.linalg.norm(m(x) - x) <= 1e-9


def test_interp_vertex_maps_to_matching_vertex():
    arr = random_spanning(19, 4)
    q = random_rotation(np.random.default_rng(3), special=True)
    rot = pg.act_rotation(arr, q)
    m = InterpMap(arr, rot)
    cxb = pg.build_complex(rot)
    cxa = pg.build_complex(arr)
    for v in cxb.vertices:
        y = m(v.point)
        kind, idx = cxa.cell_of(v.sign)
        assert kind == "vertex"
        assert np.linalg.norm(y - cxa.vertices[idx].point) <= 1e-9


def test_interp_preserves_sign_vectors():
    arr = random_spanning(19, 4)
    q = random_rotation(np.random.default_rng(3), special=True)
    rot = pg.act_rotation(arr, q)
    m = InterpMap(arr, rot)
    rng = np.random.default_rng(8)
    for _ in range(300):
        x = rng.standard_normal(3)
        x /= np.linalg.norm(x)
        assert pg.aim_vector(arr, m(x)) == pg.aim_vector(rot, x)


def test_interp_rejects_covector_mismatch():
    a = random_spanning(19, 4)
    b = random_spanning(77, 4)
    if pg.covectors(a).vectors != pg.covectors(b).vectors:
        with pytest.raises(ValueError):
            InterpMap(a, b)


# -- pipeline ---------------------------------------------------------------------


def test_pipeline_on_perturbed_circles():
    arr = random_spanning(23, 5, amplitude=0.04)
    frame, trace = pg.greedy_pipeline(arr, frame_count=20)
    ok, resid = pg.parseval_check(frame)
    assert ok and resid <= 1e-9
    assert len(trace.frames) == 20
    assert trace.frames[0].t == 0.0 and trace.frames[-1].t == 1.0
    ts = [f.t for f in trace.frames]
    assert all(a < b for a, b in zip(ts, ts[1:]))
    assert all(f.valid for f in trace.frames)
    for f in trace.frames:
        if f.stage != "orthonormalize":
            assert [e.weight for e in f.arrangement.elements] == [
                e.weight for e in arr.elements
            ]


def test_pipeline_retraction_on_parseval_input():
    f = pg.orthonormalize_path(
        pg.Frame(np.random.default_rng(2).standard_normal((5, 3))), 1.0
    )
    arr = pg.circles_from_frame(f)
    out, trace = pg.greedy_pipeline(arr, frame_count=10)
    assert np.max(np.abs(out.rows - f.rows)) <= 1e-9
    first = trace.frames[0].arrangement
    for fr in trace.frames:
        assert max_vertex_gap(fr.arrangement, first) <= 1e-9


def test_pipeline_equivariance():
    arr = random_spanning(29, 4, amplitude=0.03)
    basis = pick_basis(arr)
    q = random_rotation(np.random.default_rng(7))
    out1, _ = pg.greedy_pipeline(pg.act_rotation(arr, q), frame_count=8, basis=basis)
    out0, _ = pg.greedy_pipeline(arr, frame_count=8, basis=basis)
    assert np.max(np.abs(out1.rows - out0.act(q).rows)) <= 1e-8


def test_pipeline_rejects_bad_inputs(coordinate_circles):
    two = pg.proj_subset(coordinate_circles, [0, 1])
    with pytest.raises(pg.InvalidArrangementError):
        pg.greedy_pipeline(two, frame_count=8)
    with pytest.raises(ValueError):
        pg.greedy_pipeline(coordinate_circles, frame_count=2)


def test_trace_json_schema():
    arr = random_spanning(23, 4, amplitude=0.02)
    _, trace = pg.greedy_pipeline(arr, frame_count=8)
    d = trace.to_json_dict()
    assert set(d) == {"basis", "frames"}
    assert len(d["basis"]) == 3
    for fr in d["frames"]:
        assert set(fr) == {"t", "stage", "arrangement"}
        pg.Arrangement.from_json_dict(fr["arrangement"])


def test_stage_state_check(coordinate_circles):
    from pseudogram.straighten import StageState

    arr = random_spanning(33, 5, amplitude=0.04)
    basis = pick_basis(arr)
    assert not StageState(basis, "Y").check(arr)  # perturbed basis is bent
    a1 = pg.basis_normalize(arr, basis)
    # basis_normalize rebuilds the other curves as chords, so Y and Z both hold
    assert StageState(basis, "Y").check(a1)
    assert StageState(basis, "Z").check(a1)
    # straight basis with a wiggly extra curve: Y holds, Z does not
    t = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    wig = np.stack(
        [np.cos(t), np.sin(t) * 0.8 + 0.2 * np.sin(3 * t), 0.55 + 0.1 * np.sin(5 * t)], axis=1
    )
    half = wig[:32] / np.linalg.norm(wig[:32], axis=1)[:, None]
    curve = WeightedPseudocircle(1.0, np.vstack([half, -half]))
    els = [e.copy() for e in coordinate_circles.elements] + [curve]
    mixed = Arrangement(els, symmetric=True)
    assert StageState((0, 1, 2), "Y").check(mixed)
    assert not StageState((0, 1, 2), "Z").check(mixed)
    assert StageState((0, 1, 2), "Z").check(pg.chord_redraw(mixed, (0, 1, 2)))


def test_pipeline_with_mixed_weights():
    rng = np.random.default_rng(77)
    arr = random_spanning(501, 5, amplitude=0.03)
    els = [
        WeightedPseudocircle(float(rng.uniform(0.3, 2.5)), e.vertices.copy())
        for e in arr.elements
    ]
    warr = Arrangement(els, symmetric=True)
    weights = [e.weight for e in warr.elements]
    out, trace = pg.greedy_pipeline(warr, frame_count=12)
    assert pg.parseval_check(out)[0]
    for fr in trace.frames:
        if fr.stage != "orthonormalize":
            assert [e.weight for e in fr.arrangement.elements] == weights


def test_pipeline_with_trivial_element():
    arr = random_spanning(41, 5, amplitude=0.03)
    els = [e.copy() for e in arr.elements] + [WeightedPseudocircle(0.0)]
    warr = Arrangement(els, symmetric=True)
    out, trace = pg.greedy_pipeline(warr, frame_count=10)
    assert pg.parseval_check(out)[0]
    assert np.allclose(out.rows[5], 0.0)
    for fr in trace.frames:
        assert fr.arrangement.elements[5].trivial
