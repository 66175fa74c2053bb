import numpy as np
import pytest

import pseudogram as pg


@pytest.fixture
def coordinate_circles() -> pg.Arrangement:
    """The three coordinate great circles with standard orientations."""
    return pg.circles_from_frame(pg.Frame(np.eye(3)))


def random_spanning(seed: int, n: int, amplitude: float = 0.0) -> pg.Arrangement:
    kind = "perturbed" if amplitude > 0 else "random-circles"
    return pg.gen(pg.GenSpec(kind=kind, n=n, amplitude=amplitude, seed=seed))


def max_vertex_gap(a: pg.Arrangement, b: pg.Arrangement) -> float:
    """max distance from either arrangement's curve vertices to the other curve."""
    worst = 0.0
    for ea, eb in zip(a.elements, b.elements):
        if ea.trivial or eb.trivial:
            assert ea.trivial == eb.trivial
            continue
        worst = max(worst, float(np.max(eb.distance_to(ea.vertices))))
        worst = max(worst, float(np.max(ea.distance_to(eb.vertices))))
    return worst
