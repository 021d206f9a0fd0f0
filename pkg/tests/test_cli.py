import json
import subprocess
import sys

import pytest

from hamxray.cli import main
from hamxray.scenarios import tolman_fixture, tolman_m3
from hamxray.serialize import decode


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_flag_xray(capsys):
    code, out, _ = run(capsys, "xray", "flag", "--lambda", "5,1,0")
    assert code == 0
    doc = decode(out)
    assert doc.kind == "xray" and len(doc.payload.edges) == 9


def test_pipeline(tmp_path, capsys):
    cd, m3c, m3, ver = (str(tmp_path / n) for n in ("cd.json", "m3c.json", "m3.json", "v.json"))
    assert run(capsys, "scenario", "gc", "--lambda", "5,1,0", "--out", cd)[0] == 0
    assert run(capsys, "cut", "--chamber", cd, "--circle", "1,2", "--level", "4", "--out", m3c)[0] == 0
    assert run(capsys, "xray", "chamber", "--file", m3c, "--out", m3)[0] == 0
    with open(m3) as fh:
        assert decode(fh.read()).payload == tolman_fixture()
    assert run(capsys, "check", "--xray", m3, "--out", ver)[0] == 0
    with open(ver) as fh:
        assert decode(fh.read()).payload == tolman_m3().verdict
    code, out, _ = run(capsys, "render", "--xray", m3, "--verdict", ver, "--cut", "1,2:4", "--wall")
    assert code == 0 and out.count("<circle") == 6


def test_toric_and_polytope_cut(tmp_path, capsys):
    p = str(tmp_path / "p.json")
    assert run(capsys, "scenario", "m2", "--emit", "polytope", "--out", p)[0] == 0
    code, out, _ = run(capsys, "xray", "toric", "--file", p)
    assert code == 0 and len(decode(out).payload.fixed_points) == 6
    code, out, _ = run(capsys, "cut", "--polytope", p, "--circle", "0,0,1", "--level", "1/2")
    assert code == 0 and decode(out).kind == "polytope3"


def test_sweep_and_hn(capsys):
    code, out, _ = run(capsys, "scenario", "sweep", "--from", "-3", "--to", "5")
    rows = decode(out).payload
    assert [n for n, v in rows if v.obstructed] == [2, 3, 4, 5]
    code, out, _ = run(capsys, "scenario", "hn", "--n", "-1", "--emit", "chamber")
    assert code == 0 and decode(out).kind == "chamber"
    code, out, _ = run(capsys, "scenario", "hn", "--n", "2", "--level", "9/2")
    assert code == 0 and decode(out).payload.obstructed


@pytest.mark.parametrize(
    "argv, error",
    [
        (("cut", "--chamber", "CD", "--circle", "2,1", "--level", "5"), "NonFreeAction"),
        (("cut", "--chamber", "CD", "--circle", "1,2", "--level", "3"), "WallNotPerpendicular"),
        (("cut", "--chamber", "CD", "--circle", "1,2", "--level", "5"), "VertexOnCutLine"),
        (("cut", "--chamber", "CD", "--circle", "2,4", "--level", "5"), "InvalidParams"),
        (("xray", "flag", "--lambda", "1,1,0"), "NonGenericLambda"),
        (("check", "--xray", "CD"), "DocumentError"),
        (("check", "--xray", "/nonexistent.json"), "DocumentError"),
        (("scenario", "hn", "--n", "2", "--level", "1"), "InvalidParams"),
        (("scenario", "hn"), "UsageError"),
    ],
)
def test_errors_are_json(tmp_path, capsys, argv, error):
    cd = str(tmp_path / "cd.json")
    run(capsys, "scenario", "gc", "--out", cd)
    code, out, err = run(capsys, *(cd if a == "CD" else a for a in argv))
    assert code == 1 and out == ""
    assert json.loads(err)["error"] == error


def test_bad_arguments_are_json(capsys):
    with pytest.raises(SystemExit) as info:
        main(["cut", "--chamber", "x.json", "--circle", "a,b", "--level", "1"])
    assert info.value.code == 1
    assert json.loads(capsys.readouterr().err)["error"] == "UsageError"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hamxray", "scenario", "sweep", "--from", "0", "--to", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert decode(proc.stdout).kind == "sweep"
