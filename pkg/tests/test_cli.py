"""CLI behaviour and golden outputs.

Regenerate the golden files with ``GRAY16_REGEN=1 pytest tests/test_cli.py``.
"""

import os
import pathlib
import subprocess
import sys

import pytest

import reference_tables as P
from gray16 import loads_graymap, verify_gray_map
from gray16.cli import main, run
from gray16.io import resolve_group

GOLDEN = pathlib.Path(__file__).parent / "golden"

CASES = {
    "classify.txt": ["classify"],
    "graymap_type1_G1.txt": ["graymap", "type1", "G1"],
    "graymap_type1_G7.txt": ["graymap", "type1", "G7"],
    "graymap_type2_G9.txt": ["graymap", "type2", "G9"],
    "survey.tsv": ["survey", "--format", "tsv"],
    "aut_K8.txt": ["aut", "K8"],
}


@pytest.mark.parametrize("fname", list(CASES))
def test_golden_outputs(fname):
    res = run(CASES[fname])
    assert res.status == 0, res.error
    path = GOLDEN / fname
    if os.environ.get("GRAY16_REGEN"):
        path.write_text(res.output, encoding="utf-8")
    assert res.output == path.read_text(encoding="utf-8")


def test_deterministic():
    for argv in (["survey"], ["classify", "--format", "json"], ["graymap", "type1", "G12", "--format", "map"]):
        assert run(argv).output == run(argv).output


def test_classify_lists_fourteen():
    out = run(["classify"]).output.splitlines()
    assert len(out) == 14 and out[0].startswith("G0") and out[-1].startswith("G13")


def test_type1_g1_words():
    lines = run(["graymap", "type1", "G1", "--format", "tsv"]).output.splitlines()[1:]
    assert dict(l.split("\t") for l in lines) == P.G1_TYPE1


def test_survey_feasible_line():
    out = run(["survey"]).output
    assert out.splitlines()[-1] == "feasible: G0, G7, G8, G9, G12, G13"
    rows = [l.split("\t") for l in run(["survey", "--format", "tsv"]).output.splitlines()[1:]]
    assert {r[0] for r in rows if r[3] == "valid"} == P.FEASIBLE


@pytest.mark.parametrize("argv,status", [
    (["groups", "list"], 0),
    (["groups", "show", "Q8"], 0),
    (["feasible", "K8", "--length", "3"], 0),
    (["feasible", "C8", "--length", "3"], 1),
    (["graymap", "type2", "Q8"], 1),
    (["graymap", "type2", "G11"], 1),
    (["graymap", "type2", "G3"], 1),
    (["graymap", "type1", "G10"], 0),
    (["graymap", "type2", "G4", "--decomp", "(N=K8, n=2, tau=x->x;y->y, v=e)"], 0),
    (["groups", "show", "C7"], 2),
    (["bogus"], 2),
    (["graymap", "type1", "G1", "--decomp", "(N=K8, n=2, tau=x->x, v=e)"], 2),
    (["feasible", "C8"], 2),
    (["verify", "/nonexistent/map.txt"], 2),
    (["graymap", "type2", "G9", "--decomp", "(N=K8, n=two)"], 2),
])
def test_exit_codes(argv, status):
    assert run(argv).status == status


def test_q8_refutation_names_witness():
    res = run(["graymap", "type2", "Q8"])
    assert "C2" in res.error and "y" in res.error


def test_map_round_trip(tmp_path):
    for name in ("G7", "G10"):
        text = run(["graymap", "type1", name, "--format", "map"]).output
        path = tmp_path / f"{name}.map"
        path.write_text(text)
        res = run(["verify", str(path)])
        assert res.status == 0 and res.output.startswith(f"{name}: Gray map")
        _, phi = loads_graymap(text, resolve_group)
        assert verify_gray_map(phi).passed


def test_verify_rejects_broken_map(tmp_path):
    text = run(["graymap", "type2", "Q8", "--format", "map"]).output
    path = tmp_path / "q8.map"
    path.write_text(text)
    res = run(["verify", str(path)])
    assert res.status == 1 and "not a Gray map" in res.output


def test_type2_from_literal_header_round_trips(tmp_path):
    text = run(["graymap", "type2", "G8", "--format", "map"]).output
    path = tmp_path / "g8.map"
    path.write_text(text)
    assert run(["verify", str(path)]).status == 0


def test_main_writes_streams(capsys):
    assert main(["feasible", "C8", "--length", "3"]) == 1
    assert "infeasible" in capsys.readouterr().out
    assert main(["bogus"]) == 2
    assert "error" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gray16.cli", "feasible", "K4", "--length", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "feasible" in proc.stdout
