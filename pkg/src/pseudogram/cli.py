"""Command-line interface.

Subcommands read an arrangement (or frame, or trace) as JSON from --in or
stdin and write JSON (or SVG) to --out or stdout.  Exit codes: 0 success,
1 invalid arrangement, 2 numerical degeneracy, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import om, sphere, straighten
from .render import VIEWS, RenderSpec, render_arrangement, render_trace
from .arrangement import (
    Arrangement,
    InvalidArrangementError,
    arrangement_dist,
    validate,
)
from .frames import Frame, coord_frame, orthonormalize_path
from .generators import GenSpec, gen
from .sphere import DegeneracyError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DEGENERATE = 2
EXIT_USAGE = 3


def _read_json(path: str | None) -> dict:
    if path is None or path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
        return
    with open(path, "w") as fh:
        fh.write(text)


def _write_json(path: str | None, obj) -> None:
    _write_text(path, json.dumps(obj, indent=1))


def _default_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("PSEUDOGRAM_SEED")
    return int(env) if env else 0


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--in", dest="infile", default=d, help="input JSON (default stdin)")
    parser.add_argument("--out", dest="outfile", default=d, help="output path (default stdout)")
    parser.add_argument("--seed", type=int, default=d, help="seed (default $PSEUDOGRAM_SEED or 0)")
    parser.add_argument("--tolerance", type=float, default=d, help="override the geometric tolerance")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, suppress=True)
    p = argparse.ArgumentParser(
        prog="pseudogram",
        description="Rank-3 weighted pseudocircle arrangements: validation, "
        "oriented-matroid data, and straightening to Parseval frames.",
    )
    _add_common(p, suppress=False)
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="validity report for an arrangement")
    sub.add_parser("covectors", parents=[common], help="covector set of a valid spanning arrangement")
    sub.add_parser("chirotope", parents=[common], help="chirotope of a valid spanning arrangement")
    sub.add_parser("om-check", parents=[common], help="covector and chirotope axioms plus consistency")

    pc = sub.add_parser("coord", parents=[common], help="coordinate-fixing rotation of a basis")
    pc.add_argument("--basis", type=int, nargs=3, required=True, metavar=("I1", "I2", "I3"))

    pd = sub.add_parser(
        "distance", parents=[common], help="weighted Frechet distance between two arrangements"
    )
    pd.add_argument("--other", required=True, help="second arrangement JSON path")

    ps = sub.add_parser("straighten", parents=[common], help="run the greedy straightening pipeline")
    ps.add_argument("--frames", type=int, default=20, help="trace frame count")
    ps.add_argument("--trace", default=None, help="write the deformation trace here")

    po = sub.add_parser(
        "orthonormalize", parents=[common], help="polar-decomposition orthonormalization"
    )
    po.add_argument("--t", type=float, default=1.0, help="path parameter in [0, 1]")

    pg = sub.add_parser("gen", parents=[common], help="generate an arrangement")
    pg.add_argument("--kind", required=True, choices=("random-circles", "perturbed", "non-pappus"))
    pg.add_argument("--n", type=int, default=5)
    pg.add_argument("--amplitude", type=float, default=0.0)

    pr = sub.add_parser("render", parents=[common], help="render an arrangement or trace to SVG")
    pr.add_argument("--view", default="sphere-orthographic-north", choices=VIEWS)
    pr.add_argument("--width", type=int, default=640)
    pr.add_argument("--height", type=int, default=640)
    pr.add_argument("--labels", action="store_true")
    return p


def _cmd_validate(args) -> int:
    arr = Arrangement.from_json_dict(_read_json(args.infile))
    report = validate(arr)
    _write_json(
        args.outfile,
        {
            "valid": report.valid,
            "spanning": report.spanning,
            "symmetric": report.symmetric,
            "violations": [list(map(str, v)) for v in report.violations],
        },
    )
    return EXIT_OK if report.valid else EXIT_INVALID

def _cmd_covectors(args) -> int:
    arr = Arrangement.from_json_dict(_read_json(args.infile))
    cov = om.covectors(arr)
    _write_json(args.outfile, {"n": cov.n, "covectors": cov.to_strings()})
    return EXIT_OK


def _cmd_chirotope(args) -> int:
    arr = Arrangement.from_json_dict(_read_json(args.infile))
    chi = om.chirotope(arr)
    triples = [
        [i, j, k, om.sign_to_str([s])] for i, j, k, s in chi.triples()
    ]
    _write_json(args.outfile, {"n": chi.n, "triples": triples})
    return EXIT_OK


def _cmd_om_check(args) -> int:
    arr = Arrangement.from_json_dict(_read_json(args.infile))
    cov = om.covectors(arr)
    chi = om.chirotope(arr)
    rep_v = om.check_covector_axioms(cov)
    rep_c = om.check_chirotope_axioms(chi)
    consistent = om.om_consistency(cov, chi)
    ok = bool(rep_v) and bool(rep_c) and consistent
    _write_json(
        args.outfile,
        {
            "covector_axioms": rep_v.ok,
            "covector_failures": [list(map(str, f)) for f in rep_v.failures],
            "chirotope_axioms": rep_c.ok,
            "chirotope_failures": [list(map(str, f)) for f in rep_c.failures],
            "consistent": consistent,
            "ok": ok,
        },
    )
    return EXIT_OK if ok else EXIT_INVALID


def _cmd_coord(args) -> int:
    arr = Arrangement.from_json_dict(_read_json(args.infile))
    if any(not (0 <= i < arr.n) for i in args.basis):
        print(f"usage error: basis indices must lie in [0, {arr.n})", file=sys.stderr)
        return EXIT_USAGE
    q = coord_frame(tuple(args.basis), arr)
    _write_json(args.outfile, {"rotation": [float(x) for x in q.reshape(-1)]})
    return EXIT_OK


def _cmd_distance(args) -> int:
    arr = Arrangement.from_json_dict(_read_json(args.infile))
    other = Arrangement.from_json_dict(_read_json(args.other))
    _write_json(args.outfile, {"distance": arrangement_dist(arr, other)})
    return EXIT_OK


def _cmd_straighten(args) -> int:
    if args.frames < 6:
        print("usage error: --frames must be at least 6", file=sys.stderr)
        return EXIT_USAGE
    arr = Arrangement.from_json_dict(_read_json(args.infile))
    frame, trace = straighten.greedy_pipeline(arr, frame_count=args.frames)
    if args.trace:
        _write_json(args.trace, trace.to_json_dict())
    _write_json(args.outfile, frame.to_json_dict())
    return EXIT_OK


def _cmd_orthonormalize(args) -> int:
    if not (0.0 <= args.t <= 1.0):
        print("usage error: --t must lie in [0, 1]", file=sys.stderr)
        return EXIT_USAGE
    frame = Frame.from_json_dict(_read_json(args.infile))
    out = orthonormalize_path(frame, args.t)
    _write_json(args.outfile, out.to_json_dict())
    return EXIT_OK


def _cmd_gen(args) -> int:
    spec = GenSpec(kind=args.kind, n=args.n, amplitude=args.amplitude, seed=_default_seed(args))
    arr = gen(spec)
    _write_json(args.outfile, arr.to_json_dict())
    return EXIT_OK


def _cmd_render(args) -> int:
    data = _read_json(args.infile)
    spec = RenderSpec(
        view=args.view, width=args.width, height=args.height, show_labels=args.labels
    )
    if "frames" in data and "basis" in data:
        frames = [
            straighten.TraceFrame(
                t=f["t"], stage=f["stage"], arrangement=Arrangement.from_json_dict(f["arrangement"])
            )
            for f in data["frames"]
        ]
        trace = straighten.DeformationTrace(basis=tuple(data["basis"]), frames=frames)
        if args.outfile is None or args.outfile == "-":
            print("usage error: rendering a trace requires --out DIRECTORY", file=sys.stderr)
            return EXIT_USAGE
        docs, index = render_trace(trace, spec)
        outdir = Path(args.outfile)
        outdir.mkdir(parents=True, exist_ok=True)
        for k, doc in enumerate(docs):
            (outdir / f"frame_{k:03d}.svg").write_text(doc)
        (outdir / "index.json").write_text(index)
        return EXIT_OK
    arr = Arrangement.from_json_dict(data)
    _write_text(args.outfile, render_arrangement(arr, spec))
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "covectors": _cmd_covectors,
    "chirotope": _cmd_chirotope,
    "om-check": _cmd_om_check,
    "coord": _cmd_coord,
    "distance": _cmd_distance,
    "straighten": _cmd_straighten,
    "orthonormalize": _cmd_orthonormalize,
    "gen": _cmd_gen,
    "render": _cmd_render,
}


def cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.tolerance is not None:
            sphere.set_tolerance(args.tolerance)
        try:
            return _COMMANDS[args.command](args)
        finally:
            if args.tolerance is not None:
                sphere.reset_tolerance()
    except InvalidArrangementError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DegeneracyError as exc:
        print(f"degeneracy: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(cli())


if __name__ == "__main__":
    main()
