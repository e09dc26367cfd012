"""Scene serialization round-trips and end-to-end CLI runs (subprocess)."""

import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from orthoconvex.core import Pt2, rat
from orthoconvex.errors import ParseError, UnknownObject
from orthoconvex.regions import GridRegion
from orthoconvex.representation import four_chain_decomposition
from orthoconvex.scene import (
    cert_from_json,
    cert_to_json,
    family_from_json,
    family_to_json,
    line_from_json,
    line_to_json,
    load_scene,
    region_from_json,
    region_to_json,
)
from orthoconvex.separation import StaircaseLine, separate_sets, verify_certificate

L_CELLS = [[0, 0], [1, 0], [0, 1]]
FAR_CELLS = [[5, 4], [5, 5], [6, 5]]


def write_scene(tmp_path: Path, objects: dict, name: str = "scene.json") -> Path:
    path = tmp_path / name
    path.write_text(json.dumps({"objects": objects}))
    return path


def run_cli(*argv, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        [sys.executable, "-m", "orthoconvex.cli", *argv],
        capture_output=True,
        text=True,
        env=full_env,
    )


# --- serialization ----------------------------------------------------------


def test_region_roundtrip():
    r = GridRegion.from_cells([(0, 0), (2, 1)], origin=("1/2", "-3/4"), cell="1/8")
    back = region_from_json(region_to_json(r))
    assert back == r


def test_line_roundtrip():
    ln = StaircaseLine(
        (Pt2(rat(0), rat(0)), Pt2(rat(1), rat(0)), Pt2(rat(1), rat("3/2"))),
        (-1, 0),
        (0, 1),
    )
    back = line_from_json(line_to_json(ln))
    assert back.vertices == ln.vertices
    assert back.tail_dir == ln.tail_dir and back.head_dir == ln.head_dir
    for p in (Pt2(rat(0), rat(1)), Pt2(rat(2), rat(0)), Pt2(rat("1/2"), rat(0))):
        assert back.side_of(p) == ln.side_of(p)


def test_cert_roundtrip_still_verifies():
    a = GridRegion.from_cells([tuple(c) for c in L_CELLS])
    b = GridRegion.from_cells([tuple(c) for c in FAR_CELLS])
    cert = separate_sets(a, b)
    back = cert_from_json(cert_to_json(cert))
    assert verify_certificate(back, a, b)["valid"] is True


def test_family_roundtrip_contains_agreement():
    r = GridRegion.from_cells([(0, 0), (1, 0), (1, 1)])
    fam = four_chain_decomposition(r)
    back = family_from_json(family_to_json(fam))
    assert len(back) == len(fam)
    probes = [
        Pt2(rat(x) / 2, rat(y) / 2) for x in range(-2, 7) for y in range(-2, 7)
    ]
    for p in probes:
        assert back.contains(p) == fam.contains(p)


def test_scene_rejects_floats(tmp_path):
    path = write_scene(
        tmp_path,
        {"r": {"type": "grid_region", "cells": [[0, 0]], "cell": 0.5}},
    )
    with pytest.raises(ParseError):
        load_scene(path)


def test_scene_rejects_unknown_type(tmp_path):
    path = write_scene(tmp_path, {"x": {"type": "mystery"}})
    with pytest.raises(ParseError):
        load_scene(path)


def test_scene_rejects_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_scene(path)
    with pytest.raises(ParseError):
        load_scene(tmp_path / "missing.json")


def test_sequence_needs_earlier_regions(tmp_path):
    objects = {
        "a": {"type": "grid_region", "cells": [[0, 0]]},
        "seq": {"type": "sequence", "items": ["a", "a"]},
    }
    scene = load_scene(write_scene(tmp_path, objects))
    assert len(scene["seq"]) == 2
    # forward reference: sequences may only use objects defined before them
    forward = {
        "seq": {"type": "sequence", "items": ["a"]},
        "a": {"type": "grid_region", "cells": [[0, 0]]},
    }
    with pytest.raises(UnknownObject):
        load_scene(write_scene(tmp_path, forward, "fwd.json"))
    nonregion = {
        "p": {"type": "point", "at": [0, 0]},
        "seq": {"type": "sequence", "items": ["p"]},
    }
    with pytest.raises(ParseError):
        load_scene(write_scene(tmp_path, nonregion, "nr.json"))


def test_scene_parses_every_type(tmp_path):
    objects = {
        "r": {"type": "grid_region", "cells": [[0, 0]], "origin": ["1/2", 0], "cell": "1/2"},
        "poly": {"type": "polygon", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]},
        "pts": {"type": "points", "points": [[0, 0], ["3/2", 2]]},
        "p": {"type": "point", "at": ["7/3", "-1/2"]},
        "g": {"type": "polyline", "vertices": [[0, 0], [1, 0], [1, 1]]},
        "r3": {"type": "grid_region_n", "dim": 3, "cells": [[0, 0, 0], [1, 0, 0]]},
        "ln": {
            "type": "staircase_line",
            "vertices": [[0, 0], [1, 0]],
            "tail": [-1, 0],
            "head": [0, 1],
        },
        "segs": {
            "type": "segments",
            "segments": [
                {"p": [0, 0], "q": [1, 0], "include_p": False},
            ],
        },
        "seq": {"type": "sequence", "items": ["r", "r"]},
    }
    scene = load_scene(write_scene(tmp_path, objects))
    assert set(scene) == set(objects)
    assert scene["p"] == Pt2(Fraction(7, 3), Fraction(-1, 2))
    assert scene["r"].cell == Fraction(1, 2)
    assert scene["r3"].dim == 3
    assert scene["segs"].segments[0].include_p is False


# --- CLI --------------------------------------------------------------------


@pytest.fixture
def demo_scene(tmp_path):
    objects = {
        "L": {"type": "grid_region", "cells": L_CELLS},
        "far": {"type": "grid_region", "cells": FAR_CELLS},
        "bad": {"type": "grid_region", "cells": [[0, 0], [2, 2]]},
        "p": {"type": "point", "at": [3, 3]},
        "g": {"type": "polyline", "vertices": [[0, 0], [2, 0], [2, 3]]},
        "square": {"type": "polygon", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]},
        "seq": {"type": "sequence", "items": ["L", "L", "far", "L"]},
    }
    return write_scene(tmp_path, objects)


def test_cli_check_region(demo_scene):
    res = run_cli("check", "--scene", str(demo_scene), "--object", "L")
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["ortho_convex"] is True
    assert rep["path_connected"] is True


def test_cli_check_polyline(demo_scene):
    res = run_cli("check", "--scene", str(demo_scene), "--object", "g")
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["monotone"] == "increasing"
    assert rep["ortho_convex_path"] is True
    assert rep["sandwich"]["lower_ok"] and rep["sandwich"]["upper_ok"]


def test_cli_unknown_object_exit_1(demo_scene):
    res = run_cli("check", "--scene", str(demo_scene), "--object", "nope")
    assert res.returncode == 1
    rep = json.loads(res.stdout)
    assert rep["error"] == "UnknownObject"
    assert rep["code"] == "unknown_object"


def test_cli_precondition_exit_2(demo_scene):
    res = run_cli(
        "separate", "--scene", str(demo_scene), "--a", "bad", "--b", "far"
    )
    assert res.returncode == 2
    rep = json.loads(res.stdout)
    assert rep["error"] == "NotPathConnected"
    assert rep["code"] == "not_path_connected"


def test_cli_separate_deterministic(demo_scene, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    r1 = run_cli(
        "separate", "--scene", str(demo_scene), "--a", "L", "--b", "far",
        "--out", str(out1),
    )
    r2 = run_cli(
        "separate", "--scene", str(demo_scene), "--a", "L", "--b", "far",
        "--out", str(out2),
    )
    assert r1.returncode == r2.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    rep = json.loads(out1.read_text())
    assert rep["verification"]["valid"] is True


def test_cli_separate_point(demo_scene):
    res = run_cli(
        "separate-point", "--scene", str(demo_scene), "--set", "L", "--point", "p"
    )
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["verification"]["valid"] is True
    # literal coordinates work in place of a scene object name
    res2 = run_cli(
        "separate-point", "--scene", str(demo_scene), "--set", "L",
        "--point", "7/2,-2",
    )
    assert res2.returncode == 0


def test_cli_hull_polygon_with_cell(demo_scene):
    res = run_cli(
        "hull", "--scene", str(demo_scene), "--object", "square", "--cell", "1/2"
    )
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["cell_count"] == 4
    assert rep["cell"] == "1/2"


def test_cli_represent_intersect_roundtrip(demo_scene, tmp_path):
    fam_path = tmp_path / "family.json"
    r1 = run_cli(
        "represent", "--scene", str(demo_scene), "--object", "L",
        "--out", str(fam_path),
    )
    assert r1.returncode == 0
    res = run_cli(
        "intersect", "--scene", str(demo_scene), "--halfplanes", str(fam_path),
        "--window=-3,5,-3,5",
    )
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert sorted(map(tuple, rep["cells"])) == sorted(map(tuple, L_CELLS))


def test_cli_verify_cert_file(demo_scene, tmp_path):
    cert_path = tmp_path / "cert.json"
    r1 = run_cli(
        "separate", "--scene", str(demo_scene), "--a", "L", "--b", "far",
        "--out", str(cert_path),
    )
    assert r1.returncode == 0
    res = run_cli(
        "verify", "--scene", str(demo_scene), "--cert", str(cert_path),
        "--a", "L", "--b", "far",
    )
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["result"]["valid"] is True


def test_cli_hausdorff(demo_scene):
    res = run_cli(
        "hausdorff", "--scene", str(demo_scene), "--a", "L", "--b", "far",
        "--refine", "1/4",
    )
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    lo, hi = rat(rep["lo"]), rat(rep["hi"])
    assert 0 < lo <= hi


def test_cli_blaschke(demo_scene):
    res = run_cli(
        "blaschke", "--scene", str(demo_scene), "--sequence", "seq",
        "--schedule", "1,1/2",
    )
    assert res.returncode == 0
    rep = json.loads(res.stdout)
    assert rep["indices"] == [0, 1, 3]


def test_cli_render_deterministic(demo_scene, tmp_path):
    s1, s2 = tmp_path / "a.svg", tmp_path / "b.svg"
    for out in (s1, s2):
        res = run_cli(
            "render", "--scene", str(demo_scene), "--objects", "L,far,g",
            "--out", str(out),
        )
        assert res.returncode == 0
    data = s1.read_bytes()
    assert data == s2.read_bytes()
    text = data.decode()
    assert text.startswith("<svg")
    assert "<rect" in text and "<polyline" in text


def test_cli_log_env_does_not_change_report(demo_scene):
    plain = run_cli("check", "--scene", str(demo_scene), "--object", "L")
    logged = run_cli(
        "check", "--scene", str(demo_scene), "--object", "L",
        env={"STAIRCASE_LOG": "debug"},
    )
    assert logged.returncode == 0
    assert logged.stdout == plain.stdout
    assert "scene" in logged.stderr  # progress goes to stderr only


def test_cli_usage_error_exit_1(demo_scene):
    res = run_cli("check", "--scene", str(demo_scene))
    assert res.returncode == 1
    res2 = run_cli("frobnicate", "--scene", str(demo_scene))
    assert res2.returncode == 1
