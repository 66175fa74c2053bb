import json
from pathlib import Path

import pytest

import pseudogram as pg
from pseudogram.render import RenderSpec, render_arrangement, render_trace

from conftest import random_spanning


def test_render_deterministic(coordinate_circles):
    spec = RenderSpec()
    a = render_arrangement(coordinate_circles, spec)
    b = render_arrangement(coordinate_circles, RenderSpec())
    assert a == b
    assert a.encode() == b.encode()


def test_render_three_closed_paths(coordinate_circles):
    svg = render_arrangement(coordinate_circles, RenderSpec())
    assert svg.count(" Z\"") == 3
    assert svg.startswith("<?xml")
    assert svg.rstrip().endswith("</svg>")


def test_render_views(coordinate_circles):
    for view in ("sphere-orthographic-north", "sphere-orthographic-south", "chart"):
        svg = render_arrangement(coordinate_circles, RenderSpec(view=view))
        assert "<path" in svg


def test_render_labels(coordinate_circles):
    svg = render_arrangement(coordinate_circles, RenderSpec(show_labels=True))
    assert "<text" in svg


def test_render_spec_validation():
    with pytest.raises(ValueError):
        RenderSpec(width=32)
    with pytest.raises(ValueError):
        RenderSpec(height=10000)
    with pytest.raises(ValueError):
        RenderSpec(view="isometric")


def test_render_trace_files():
    arr = random_spanning(23, 4, amplitude=0.02)
    _, trace = pg.greedy_pipeline(arr, frame_count=10)
    docs, index = render_trace(trace, RenderSpec())
    assert len(docs) == 10
    idx = json.loads(index)
    assert [f["file"] for f in idx["frames"]] == [f"frame_{k:03d}.svg" for k in range(10)]
    docs2, index2 = render_trace(trace, RenderSpec())
    assert docs == docs2 and index == index2


def test_render_dispatch(coordinate_circles):
    out = pg.render(coordinate_circles, RenderSpec())
    assert isinstance(out, str)
    with pytest.raises(TypeError):
        pg.render(42, RenderSpec())


GOLDEN = Path(__file__).parent / "golden"


def test_render_matches_golden_sphere():
    import numpy as np

    arr = pg.circles_from_frame(pg.Frame(np.eye(3)))
    svg = render_arrangement(
        arr, RenderSpec(view="sphere-orthographic-north", width=320, height=320, show_labels=True)
    )
    assert svg == (GOLDEN / "coordinate_circles.svg").read_text()


def test_render_matches_golden_chart():
    arr = pg.gen(pg.GenSpec(kind="random-circles", n=4, seed=11))
    svg = render_arrangement(arr, RenderSpec(view="chart", width=320, height=320))
    assert svg == (GOLDEN / "random_chart.svg").read_text()
