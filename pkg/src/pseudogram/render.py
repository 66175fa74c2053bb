"""Deterministic SVG rendering of arrangements and deformation traces."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import sphere
from .arrangement import Arrangement
from .straighten import DeformationTrace

VIEWS = ("sphere-orthographic-north", "sphere-orthographic-south", "chart")
PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)
CHART_BOX = 4.0


@dataclass
class RenderSpec:
    view: str = "sphere-orthographic-north"
    width: int = 640
    height: int = 640
    strokes: dict = field(default_factory=dict)  # element index -> color
    show_labels: bool = False

    def __post_init__(self):
        if self.view not in VIEWS:
            raise ValueError(f"unknown view: {self.view}")
        for dim in (self.width, self.height):
            if not (64 <= dim <= 8192):
                raise ValueError("width and height must lie in [64, 8192]")

    def color(self, i: int) -> str:
        return self.strokes.get(i, PALETTE[i % len(PALETTE)])


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def _svg_header(spec: RenderSpec) -> str:
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">\n'
        f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>\n'
    )


def _sphere_xy(spec: RenderSpec, p, south: bool):
    r = 0.45 * min(spec.width, spec.height)
    cx, cy = spec.width / 2.0, spec.height / 2.0
    if south:
        return cx - r * p[0], cy - r * p[1]
    return cx + r * p[0], cy - r * p[1]


def _chart_xy(spec: RenderSpec, u: float, v: float):
    scale = min(spec.width, spec.height) / (2.0 * CHART_BOX)
    return spec.width / 2.0 + scale * u, spec.height / 2.0 - scale * v


def render_arrangement(arr: Arrangement, spec: RenderSpec) -> str:
    parts = [_svg_header(spec)]
    south = spec.view == "sphere-orthographic-south"
    if spec.view != "chart":
        r = 0.45 * min(spec.width, spec.height)
        parts.append(
            f'<circle cx="{_fmt(spec.width / 2)}" cy="{_fmt(spec.height / 2)}" '
            f'r="{_fmt(r)}" fill="none" stroke="#cccccc" stroke-width="1"/>\n'
        )
    for i, e in enumerate(arr.elements):
        if e.trivial:
            continue
        color = spec.color(i)
        if spec.view == "chart":
            paths = _chart_paths(spec, e.vertices)
        else:
            pts = [_sphere_xy(spec, p, south) for p in e.vertices]
            d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts) + " Z"
            paths = [d]
        for d in paths:
            parts.append(
                f'<path d="{d}" fill="none" stroke="{color}" stroke-width="2"/>\n'
            )
        if spec.show_labels and paths:
            if spec.view == "chart":
                anchor = None
                for p in e.vertices:
                    cp = sphere.to_chart(sphere.STANDARD_CHART, p)
                    if not cp.horizon and abs(cp.u) < CHART_BOX and abs(cp.v) < CHART_BOX:
                        anchor = _chart_xy(spec, cp.u, cp.v)
                        break
            else:
                anchor = _sphere_xy(spec, e.vertices[0], south)
            if anchor is not None:
                parts.append(
                    f'<text x="{_fmt(anchor[0])}" y="{_fmt(anchor[1])}" '
                    f'font-size="12" fill="{color}">{i}</text>\n'
                )
    parts.append("</svg>\n")
    return "".join(parts)


def _chart_paths(spec: RenderSpec, vertices: np.ndarray) -> list[str]:
    runs = []
    current = []
    for p in vertices:
        cp = sphere.to_chart(sphere.STANDARD_CHART, p)
        ok = (not cp.horizon) and abs(cp.u) <= CHART_BOX and abs(cp.v) <= CHART_BOX
        if ok:
            current.append(_chart_xy(spec, cp.u, cp.v))
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)
    paths = []
    for run in runs:
        if len(run) < 2:
            continue
        paths.append("M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in run))
    return paths


def render_trace(trace: DeformationTrace, spec: RenderSpec):
    """(svg document list, index json string) with one document per frame."""
    docs = []
    entries = []
    for k, frame in enumerate(trace.frames):
        docs.append(render_arrangement(frame.arrangement, spec))
        entries.append({"file": f"frame_{k:03d}.svg", "t": frame.t, "stage": frame.stage})
    index = json.dumps({"basis": list(trace.basis), "frames": entries}, indent=1)
    return docs, index


def render(obj, spec: RenderSpec):
    """Dispatch: an Arrangement yields one SVG string, a trace yields many."""
    if isinstance(obj, Arrangement):
        return render_arrangement(obj, spec)
    if isinstance(obj, DeformationTrace):
        return render_trace(obj, spec)
    raise TypeError("render expects an Arrangement or a DeformationTrace")
