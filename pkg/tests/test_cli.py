import json
import subprocess
import sys

import numpy as np
import pytest

import pseudogram as pg
from pseudogram.cli import cli


def run_cli(args, stdin_text=None):
    proc = subprocess.run(
        [sys.executable, "-m", "pseudogram.cli", *args],
        input=stdin_text,
        capture_output=True,
        text=True,
    )
    return proc


@pytest.fixture(scope="module")
def arrangement_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("data") / "arr.json"
    arr = pg.gen(pg.GenSpec(kind="random-circles", n=4, seed=11))
    path.write_text(arr.to_json())
    return path


def test_gen_validate_roundtrip(tmp_path, arrangement_file):
    assert cli(["validate", "--in", str(arrangement_file)]) == 0


def test_gen_determinism_bytes(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert cli(["gen", "--kind", "random-circles", "--n", "5", "--seed", "7", "--out", str(a)]) == 0
    assert cli(["gen", "--kind", "random-circles", "--n", "5", "--seed", "7", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_covectors_coordinate_circles(tmp_path, capsys):
    path = tmp_path / "cc.json"
    path.write_text(pg.circles_from_frame(pg.Frame(np.eye(3))).to_json())
    assert cli(["covectors", "--in", str(path)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["covectors"]) == 27
    assert "+++" in out["covectors"]


def test_chirotope_and_om_check(tmp_path, arrangement_file, capsys):
    assert cli(["chirotope", "--in", str(arrangement_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert all(len(t) == 4 and t[0] < t[1] < t[2] for t in out["triples"])
    assert cli(["om-check", "--in", str(arrangement_file)]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["ok"]


def test_coord_identity(tmp_path, capsys):
    path = tmp_path / "cc.json"
    path.write_text(pg.circles_from_frame(pg.Frame(np.eye(3))).to_json())
    assert cli(["coord", "--in", str(path), "--basis", "0", "1", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert np.allclose(np.array(out["rotation"]).reshape(3, 3), np.eye(3))


def test_distance_self_zero(arrangement_file, capsys):
    assert cli(["distance", "--in", str(arrangement_file), "--other", str(arrangement_file)]) == 0
    assert json.loads(capsys.readouterr().out)["distance"] == 0.0


def test_straighten_and_orthonormalize(tmp_path, arrangement_file, capsys):
    tr = tmp_path / "trace.json"
    out = tmp_path / "frame.json"
    code = cli(
        [
            "straighten",
            "--in",
            str(arrangement_file),
            "--frames",
            "8",
            "--trace",
            str(tr),
            "--out",
            str(out),
        ]
    )
    assert code == 0
    frame = pg.Frame.from_json_dict(json.loads(out.read_text()))
    assert pg.parseval_check(frame)[0]
    trace = json.loads(tr.read_text())
    assert len(trace["frames"]) == 8
    # every trace frame validates through the CLI too
    frame_file = tmp_path / "one.json"
    frame_file.write_text(json.dumps(trace["frames"][3]["arrangement"]))
    assert cli(["validate", "--in", str(frame_file)]) == 0
    capsys.readouterr()  # drain the validate report
    # orthonormalize a frame
    raw = tmp_path / "raw.json"
    raw.write_text(json.dumps({"rows": [[2, 0, 0], [0, 1, 0], [0, 0, 1]]}))
    assert cli(["orthonormalize", "--in", str(raw)]) == 0
    rows = json.loads(capsys.readouterr().out)["rows"]
    assert np.allclose(rows, np.eye(3))


def test_straighten_rejects_non_spanning(tmp_path):
    bad = tmp_path / "bad.json"
    arr = pg.proj_subset(pg.circles_from_frame(pg.Frame(np.eye(3))), [0, 1])
    bad.write_text(arr.to_json())
    assert cli(["straighten", "--in", str(bad)]) == 1


def test_render_single_and_trace(tmp_path, arrangement_file):
    svg = tmp_path / "out.svg"
    assert cli(["render", "--in", str(arrangement_file), "--out", str(svg)]) == 0
    assert svg.read_text().startswith("<?xml")
    tr = tmp_path / "trace.json"
    cli(["straighten", "--in", str(arrangement_file), "--frames", "6", "--trace", str(tr), "--out", str(tmp_path / "f.json")])
    outdir = tmp_path / "frames"
    assert cli(["render", "--in", str(tr), "--out", str(outdir)]) == 0
    files = sorted(p.name for p in outdir.iterdir())
    assert files == [f"frame_{k:03d}.svg" for k in range(6)] + ["index.json"]


def test_usage_error_exit_code():
    proc = run_cli(["gen", "--kind", "bogus"])
    assert proc.returncode == 3
    proc = run_cli(["no-such-command"])
    assert proc.returncode == 3


def test_invalid_json_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli(["validate", "--in", str(bad)]) == 3


def test_env_seed(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("PSEUDOGRAM_SEED", "7")
    assert cli(["gen", "--kind", "random-circles", "--n", "5"]) == 0
    via_env = capsys.readouterr().out
    assert cli(["gen", "--kind", "random-circles", "--n", "5", "--seed", "7"]) == 0
    explicit = capsys.readouterr().out
    assert via_env == explicit


def test_tolerance_flag(arrangement_file):
    assert cli(["validate", "--in", str(arrangement_file), "--tolerance", "1e-8"]) == 0
    from pseudogram import sphere

    assert sphere.EPS_GEO == sphere.EPS_GEO_DEFAULT  # restored afterwards


def test_stdin_stdout(arrangement_file, capsys):
    proc = run_cli(["validate"], stdin_text=arrangement_file.read_text())
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["valid"]


def test_degeneracy_exit_code(tmp_path):
    from test_arrangement import _partial_overlap_pair

    bad = tmp_path / "degenerate.json"
    bad.write_text(_partial_overlap_pair().to_json())
    assert cli(["validate", "--in", str(bad)]) == 2


def test_render_trace_to_stdout_is_usage_error(tmp_path, arrangement_file):
    tr = tmp_path / "t.json"
    cli(["straighten", "--in", str(arrangement_file), "--frames", "6", "--trace", str(tr), "--out", str(tmp_path / "f.json")])
    assert cli(["render", "--in", str(tr)]) == 3


def test_cli_argument_bounds(tmp_path, arrangement_file):
    assert cli(["coord", "--in", str(arrangement_file), "--basis", "0", "1", "9"]) == 3
    assert cli(["straighten", "--in", str(arrangement_file), "--frames", "2"]) == 3
    raw = tmp_path / "f.json"
    raw.write_text('{"rows": [[1,0,0],[0,1,0],[0,0,1]]}')
    assert cli(["orthonormalize", "--in", str(raw), "--t", "1.5"]) == 3
