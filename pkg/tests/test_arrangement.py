import itertools

import numpy as np
import pytest

import pseudogram as pg
from pseudogram.arrangement import Arrangement, WeightedPseudocircle
from pseudogram.sphere import random_rotation, rotation_about

from conftest import random_spanning


def test_validate_coordinate_circles(coordinate_circles):
    rep = pg.validate(coordinate_circles)
    assert rep.valid and rep.symmetric and rep.spanning


def test_validate_coincident_pair_allowed(coordinate_circles):
    els = [e.copy() for e in coordinate_circles.elements]
    arr = Arrangement([els[0], els[0].copy()] + els[1:], symmetric=True)
    rep = pg.validate(arr)
    assert rep.valid
    assert rep.pair_counts[(0, 1)] == "coincident"


def test_validate_excess_crossings_invalid(coordinate_circles):
    # odd harmonic keeps the curve antipodally symmetric and crosses the
    # equator six times
    t = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    wob = np.stack([np.cos(t), np.sin(t), 0.3 * np.sin(3 * t)], axis=1)
    wob /= np.linalg.norm(wob, axis=1)[:, None]
    wob = WeightedPseudocircle(1.0, wob)
    eq = coordinate_circles.elements[2].copy()
    rep = pg.validate(Arrangement([wob, eq], symmetric=True))
    assert not rep.valid
    assert any(kind == "pair" for kind, *_ in rep.violations)
    assert rep.pair_counts[(0, 1)] == 6


def test_aim_eval_examples(coordinate_circles):
    eq = coordinate_circles.elements[2]  # normal e3: counterclockwise equator
    north = np.array([0.0, 0.0, 1.0])
    assert pg.aim_eval(eq, north) == 1
    assert pg.aim_eval(eq, np.array([1.0, 0.0, 0.0])) == 0
    assert pg.aim_eval(WeightedPseudocircle(0.0), north) == 0


def test_act_rotation_identity(coordinate_circles):
    out = pg.act_rotation(coordinate_circles, np.eye(3))
    for a, b in zip(out.elements, coordinate_circles.elements):
        assert np.allclose(a.vertices, b.vertices)


def test_act_rotation_preserves_covectors(coordinate_circles):
    q = rotation_about([0.0, 0.0, 1.0], np.pi / 2)
    rotated = pg.act_rotation(coordinate_circles, q)
    assert pg.covectors(rotated).vectors == pg.covectors(coordinate_circles).vectors


def test_act_rotation_rejects_non_orthogonal(coordinate_circles):
    with pytest.raises(ValueError):
        pg.act_rotation(coordinate_circles, np.eye(3) * 1.1)


def test_act_rotation_chirotope_det_relation():
    rng = np.random.default_rng(8)
    arr = random_spanning(4, 5)
    chi = pg.chirotope(arr)
    for _ in range(4):
        q = random_rotation(rng)
        d = int(np.sign(np.linalg.det(q)))
        chi2 = pg.chirotope(pg.act_rotation(arr, q))
        for i, j, k in itertools.combinations(range(5), 3):
            assert chi2(i, j, k) == d * chi(i, j, k)


def test_proj_subset(coordinate_circles):
    full = pg.proj_subset(coordinate_circles, range(3))
    assert all(not e.trivial for e in full.elements)
    empty = pg.proj_subset(coordinate_circles, [])
    assert all(e.trivial for e in empty.elements)
    assert not pg.is_spanning(empty)
    two = pg.proj_subset(coordinate_circles, [0, 1])
    assert not pg.is_spanning(two)


def test_build_complex_octants(coordinate_circles):
    cx = pg.build_complex(coordinate_circles)
    assert (len(cx.vertices), len(cx.edges), len(cx.faces)) == (6, 12, 8)
    assert cx.euler == 2


@pytest.mark.parametrize("n", [4, 5, 6])
def test_build_complex_generic_counts(n):
    arr = random_spanning(17 + n, n)
    cx = pg.build_complex(arr)
    v = n * (n - 1)
    assert (len(cx.vertices), len(cx.edges), len(cx.faces)) == (v, 2 * v, v + 2)


def test_build_complex_rejects_non_spanning(coordinate_circles):
    two = pg.proj_subset(coordinate_circles, [0, 1])
    with pytest.raises(pg.InvalidArrangementError):
        pg.build_complex(two)


def test_cell_of_examples(coordinate_circles):
    cx = pg.build_complex(coordinate_circles)
    kind, idx = cx.cell_of((1, 1, 1))
    assert kind == "face"
    sample = cx.faces[idx].sample
    assert all(sample > 0)
    kind, idx = cx.cell_of((0, 0, 1))
    assert kind == "vertex"
    # the S_1 x S_2 vertex positive on curve 3 is the north pole
    assert np.allclose(cx.vertices[idx].point, [0, 0, 1], atol=1e-9)
    assert cx.cell_of((0, 0, 0)) == ("bottom", None)
    with pytest.raises(KeyError):
        cx.cell_of((1, 1))


def test_is_spanning_examples(coordinate_circles):
    assert pg.is_spanning(coordinate_circles)
    single = pg.proj_subset(coordinate_circles, [0])
    assert not pg.is_spanning(single)
    copies = Arrangement(
        [coordinate_circles.elements[0].copy() for _ in range(3)], symmetric=True
    )
    assert not pg.is_spanning(copies)


def test_covector_cell_bijection():
    arr = random_spanning(23, 5)
    cx = pg.build_complex(arr)
    cov = pg.covectors(arr)
    nonzero = {v for v in cov.vectors if any(v)}
    assert len(nonzero) == len(cx.vertices) + len(cx.edges) + len(cx.faces)
    for sigma in nonzero:
        kind, idx = cx.cell_of(sigma)
        cell = {"vertex": cx.vertices, "edge": cx.edges, "face": cx.faces}[kind][idx]
        assert cell.sign == sigma


def test_act_rotation_preserves_validity_and_covectors_random():
    rng = np.random.default_rng(99)
    arrs = [random_spanning(seed + 40, 4, amplitude=0.03) for seed in range(4)]
    covs = [pg.covectors(a).vectors for a in arrs]
    for trial in range(100):
        arr = arrs[trial % 4]
        q = random_rotation(rng)
        rotated = pg.act_rotation(arr, q)
        rep = pg.validate(rotated)
        assert rep.valid and rep.spanning
        assert pg.covectors(rotated).vectors == covs[trial % 4]


def _leq(sigma, tau):
    # 0 <= anything; + and - incomparable
    return all(s == 0 or s == t for s, t in zip(sigma, tau))


def test_complex_is_graded_poset():
    arr = random_spanning(57, 5)
    cx = pg.build_complex(arr)
    nz = arr.nonzero_indices()
    for v in cx.vertices:
        assert sum(1 for i in nz if v.sign[i] == 0) >= 2
    for f in cx.faces:
        assert all(f.sign[i] != 0 for i in nz)
    # every edge covers its endpoint vertices; every face covers its edges
    for e in cx.edges:
        for vid in (e.v_from, e.v_to):
            assert _leq(cx.vertices[vid].sign, e.sign)
    for f in cx.faces:
        for eid, _ in f.boundary:
            assert _leq(cx.edges[eid].sign, f.sign)


def test_json_roundtrip():
    arr = random_spanning(31, 4, amplitude=0.02)
    back = Arrangement.from_json(arr.to_json())
    assert back.n == arr.n
    assert back.symmetric == arr.symmetric
    for a, b in zip(arr.elements, back.elements):
        assert a.weight == b.weight
        assert np.max(np.abs(a.vertices - b.vertices)) <= 1e-12


def test_json_rejects_non_unit_vertices():
    bad = {
        "n": 1,
        "elements": [{"weight": 1.0, "vertices": [[2.0, 0, 0], [0, 2.0, 0], [0, 0, 2.0]]}],
        "symmetric": True,
    }
    with pytest.raises(ValueError):
        Arrangement.from_json_dict(bad)


def _partial_overlap_pair():
    # half of the first curve runs exactly along the equator
    t_eq = np.linspace(0, np.pi / 2, 16)
    on_eq = np.stack([np.cos(t_eq), np.sin(t_eq), np.zeros_like(t_eq)], axis=1)
    t_b = np.linspace(np.pi / 2, np.pi, 17)[1:-1]
    bulge = np.stack([np.cos(t_b), np.sin(t_b), 0.3 * np.sin(2 * (t_b - np.pi / 2))], axis=1)
    half = np.vstack([on_eq, bulge])
    half /= np.linalg.norm(half, axis=1)[:, None]
    curve = WeightedPseudocircle(1.0, np.vstack([half, -half]))
    eq = pg.circles_from_frame(pg.Frame(np.eye(3))).elements[2]
    return Arrangement([curve, eq.copy()], symmetric=True)


def test_partial_overlap_raises_degeneracy():
    with pytest.raises(pg.DegeneracyError):
        pg.validate(_partial_overlap_pair())
