import json

import pytest

from insideout.cli import main
from insideout.dissect3d import CANONICAL_OCT, CANONICAL_TET


def _json(data):
    return json.loads(data)


def _pts(vertices, k=1):
    return [[str(k * x) for x in v] for v in vertices]


@pytest.fixture
def run(capsys):
    def go(*argv):
        code = main([str(a) for a in argv])
        out = capsys.readouterr()
        return code, out.out, out.err
    return go


def test_regular_hexagon_verifies(run, tmp_path):
    rec = tmp_path / "hex.json"
    assert run("dissect", "regular", "--n", 6, "-o", rec)[0] == 0
    code, out, _ = run("verify", rec)
    assert code == 0
    report = _json(out)
    assert report["pass"] and report["piece_count"] == 3


def test_generic_from_file(run, tmp_path):
    poly = tmp_path / "tri.json"
    poly.write_text('{"polygon": [[0, 0], [4, 0], [1, 3]]}')
    rec = tmp_path / "out.json"
    assert run("dissect", "generic", "--input", poly, "--t-start", 3, "-o", rec)[0] == 0
    assert len(_json(rec.read_text())["pieces"]) == 7
    assert run("verify", rec)[0] == 0


def test_tet_census(run, tmp_path):
    rec = tmp_path / "tet.json"
    assert run("dissect", "tet", "-o", rec)[0] == 0
    code, out, _ = run("census", rec)
    assert code == 0
    assert _json(out) == {"tet": {"3": 4, "2": 12, "1": 4, "0": 4}, "oct": {"3": 4, "2": 6}}
    off = tmp_path / "tet.off"
    assert run("render", rec, "--off", off, "--explode", 1.5)[0] == 0
    assert off.read_text().splitlines()[1].split()[1] == "176"


def test_tet_with_vertices(run, tmp_path):
    cell = tmp_path / "cell.json"
    cell.write_text(json.dumps({"vertices": _pts(CANONICAL_TET, 2)}))
    rec = tmp_path / "tet2.json"
    assert run("dissect", "tet", "--vertices", cell, "-o", rec)[0] == 0
    assert run("verify", rec)[0] == 0


def test_complex_rejects_overlap(run, tmp_path):
    cells = tmp_path / "cells.json"
    cells.write_text(json.dumps({"cells": [{"vertices": _pts(CANONICAL_TET)},
                                           {"vertices": _pts(CANONICAL_TET)}]}))
    code, _, err = run("dissect", "complex", "--cells", cells)
    assert code == 2 and "overlap" in err


def test_corrupted_record_fails(run, tmp_path):
    rec = tmp_path / "hex.json"
    run("dissect", "regular", "--n", 6, "-o", rec)
    obj = _json(rec.read_text())
    obj["pieces"][0]["facet_origin"][0] = "cut"
    rec.write_text(json.dumps(obj))
    code, out, _ = run("verify", rec)
    assert code == 1
    assert _json(out)["diagnostics"]


def test_svg_render(run, tmp_path):
    rec = tmp_path / "sq.json"
    run("dissect", "regular", "--n", 4, "-o", rec)
    svg = tmp_path / "sq.svg"
    assert run("render", rec, "--svg", svg)[0] == 0
    assert svg.read_text().count("<polygon") == 18


@pytest.mark.parametrize("argv", [
    ("verify", "/nonexistent/record.json"),
    ("dissect", "generic"),
    ("dissect", "regular"),
    ("frobnicate",),
    ("render", "x.json"),
])
def test_usage_and_io_errors(run, argv):
    assert run(*argv)[0] == 2


def test_render_without_target(run, tmp_path):
    rec = tmp_path / "hex.json"
    run("dissect", "regular", "--n", 6, "-o", rec)
    assert run("render", rec)[0] == 2


def test_stdout_output_is_deterministic(run):
    first = run("dissect", "regular", "--n", 9)[1]
    second = run("dissect", "regular", "--n", 9)[1]
    assert first == second and first.startswith("{")


def test_oct_vertices_file(run, tmp_path):
    cell = tmp_path / "oct.json"
    cell.write_text(json.dumps({"cells": [{"vertices": _pts(CANONICAL_OCT), "kind": "oct"}]}))
    rec = tmp_path / "oct.json"
    assert run("dissect", "oct", "--vertices", cell, "-o", rec)[0] == 0
    assert len(_json(rec.read_text())["pieces"]) == 124
