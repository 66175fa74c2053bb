"""Seeded arrangement generators and the embedded non-Pappus arrangement."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .arrangement import Arrangement, WeightedPseudocircle, validate
from .frames import Frame, circles_from_frame
from .sphere import DegeneracyError, unit_rows

REJECTION_CAP = 1000


@dataclass
class GenSpec:
    kind: str  # "random-circles" | "perturbed" | "non-pappus"
    n: int = 5
    amplitude: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("random-circles", "perturbed", "non-pappus"):
            raise ValueError(f"unknown generator kind: {self.kind}")
        if not (0.0 <= self.amplitude <= 0.2):
            raise ValueError("amplitude must lie in [0, 0.2]")
        if self.kind != "non-pappus" and self.n < 3:
            raise ValueError("need at least 3 elements")


def gen(spec: GenSpec) -> Arrangement:
    """Deterministic arrangement from a generator spec."""
    if spec.kind == "non-pappus":
        return non_pappus()
    rng = np.random.default_rng(int(spec.seed) & 0xFFFFFFFFFFFFFFFF)
    for _ in range(REJECTION_CAP):
        arr = _random_circles(rng, spec.n)
        if spec.kind == "perturbed" and spec.amplitude > 0:
            arr = _perturb(rng, arr, spec.amplitude)
        try:
            report = validate(arr)
        except DegeneracyError:
            continue
        if report.valid and report.spanning:
            return arr
    raise DegeneracyError(f"rejection cap of {REJECTION_CAP} tries exceeded")


def _random_circles(rng: np.random.Generator, n: int) -> Arrangement:
    normals = unit_rows(rng.standard_normal((n, 3)))
    base = circles_from_frame(Frame(normals))
    # exact unit weights (norms of normalized vectors wobble in the last ulp)
    els = [WeightedPseudocircle(1.0, e.vertices) for e in base.elements]
    return Arrangement(els, symmetric=True)


def _perturb(rng: np.random.Generator, arr: Arrangement, amplitude: float) -> Arrangement:
    """Smooth antipodally-odd vertex noise of the given amplitude.

    Low odd harmonics along the curve keep the perturbed polygon simple at
    amplitudes up to 0.2; odd frequencies flip sign under the antipodal map,
    so the noise field respects the symmetry it must preserve.
    """
    els = []
    for e in arr.elements:
        if e.trivial:
            els.append(WeightedPseudocircle(0.0))
            continue
        v = e.vertices
        k = len(v)
        half = k // 2
        theta = 2 * np.pi * np.arange(half) / k
        noise = np.zeros((half, 3))
        for freq in (1, 3, 5):
            a = rng.standard_normal(3)
            b = rng.standard_normal(3)
            noise += np.outer(np.cos(freq * theta), a) + np.outer(np.sin(freq * theta), b)
        noise *= amplitude / np.sqrt(6.0)
        top = unit_rows(v[:half] + noise)
        els.append(WeightedPseudocircle(e.weight, np.vstack([top, -top])))
    return Arrangement(els, symmetric=True)


_NON_PAPPUS_CACHE = None


def non_pappus() -> Arrangement:
    """The embedded 9-element non-Pappus arrangement.

    Eight great circles realize the Pappus configuration exactly (six triple
    points kept concurrent), and the ninth element is a bent pseudoline that
    weaves around the three points Pappus's theorem forces to be collinear.
    No straight-line realization can reproduce this order type.
    """
    global _NON_PAPPUS_CACHE
    if _NON_PAPPUS_CACHE is None:
        from ._nonpappus_data import ELEMENTS

        els = [
            WeightedPseudocircle(1.0, np.asarray(v, dtype=float)) for v in ELEMENTS
        ]
        _NON_PAPPUS_CACHE = Arrangement(els, symmetric=True)
    return _NON_PAPPUS_CACHE.copy()
