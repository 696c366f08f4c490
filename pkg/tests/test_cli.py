import io
import json
import subprocess
import sys

import pytest

from cases import M1, N2, SATZX_IN, SATZX_OUT
from zxlat.cli import main, parse_coeff, fmt_coeff
from zxlat.coeffgroup import generator, root_of_unity
from zxlat.lattice import groebner


def cols_json(cols):
    return [[list(a) for a in c] for c in cols]


def run(capsys, argv, doc=None, stdin=None, monkeypatch=None):
    if doc is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(doc if isinstance(doc, str) else json.dumps(doc)))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_ghnf_m1_unchanged(tmp_path, capsys):
    f = tmp_path / "m1.json"
    f.write_text(json.dumps(cols_json(M1)))
    code, out, _ = run(capsys, ["ghnf", "--in", str(f)])
    assert code == 0
    assert json.loads(out) == {"n": 2, "columns": cols_json(M1), "rank": 2}


def test_satzx_via_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, ["satzx"], cols_json(SATZX_IN), monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["columns"] == cols_json(groebner(SATZX_OUT).columns)


def test_implicitize_n2_and_out_file(tmp_path, capsys, monkeypatch):
    out_file = tmp_path / "out.json"
    code, out, _ = run(capsys, ["implicitize", "--out", str(out_file)],
                       [[0, -1], [1, 1], [0, 1]], monkeypatch=monkeypatch)
    assert code == 0 and out == ""
    doc = json.loads(out_file.read_text())
    assert doc["family"] == "+1" and doc["n"] == 3
    (g,) = doc["generators"]
    assert g["support"] == [[1], [], [1]]
    assert g["coeff"] == {"torsion": "0/1", "rational": {}, "trans": {}}
    assert cols_json(N2) == [[[], [-1]], [[1], [1]], [[], [1]]]


def test_family_flag(capsys, monkeypatch):
    # x - o_3 = x - 2 under u = -1, printed reduced modulo 3 as x + 1
    doc = {"n": 1, "generators": [{"support": [3]}]}
    code, out, _ = run(capsys, ["perfect", "--family", "-1"], doc, monkeypatch=monkeypatch)
    assert code == 0
    closure = json.loads(out)["closure"]
    assert closure["family"] == "-1"
    assert [g["support"] for g in closure["generators"]] == [[[3]], [[1, 1]]]


def test_orderbound_and_kernel(capsys, monkeypatch):
    code, out, _ = run(capsys, ["orderbound"], [[2], ["x"]], monkeypatch=monkeypatch)
    assert (code, json.loads(out)) == (0, {"order_bound": 1})
    code, out, _ = run(capsys, ["kernel"], cols_json(M1), monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["kernel"] in ([[[-2], [0, 1], [-2]]], [[[2], [0, -1], [2]]])


def test_exit_codes(capsys, monkeypatch):
    assert run(capsys, ["frobnicate"])[0] == 64
    code, _, err = run(capsys, ["ghnf"], "{not json", monkeypatch=monkeypatch)
    assert code == 2 and err
    code, _, err = run(capsys, ["ghnf"], [[1, 2], [3]], monkeypatch=monkeypatch)
    assert code == 2 and err
    doc = {"n": 1, "generators": [{"support": [1], "coeff": "sqrt(2)"}]}
    code, _, err = run(capsys, ["charset"], doc, monkeypatch=monkeypatch)
    assert code == 3 and "unsupported" in err
    code, _, _ = run(capsys, ["implicitize"], [[1, 0], [2, 0]], monkeypatch=monkeypatch)
    assert code == 2


def test_coefficient_round_trip():
    for c in (root_of_unity(1, 6) * generator("lambda", (1, "1/2"), -1), parse_coeff("-3/4")):
        assert parse_coeff(fmt_coeff(c)) == c


def test_deterministic_output_bytes(tmp_path):
    f = tmp_path / "in.json"
    f.write_text(json.dumps(cols_json(SATZX_IN)))
    outs = {subprocess.run([sys.executable, "-m", "zxlat.cli", "sat", "--in", str(f)],
                           capture_output=True, check=True).stdout for _ in range(2)}
    assert len(outs) == 1


@pytest.mark.parametrize("command", ["ghnf", "kernel", "satx", "satz", "satzx", "sat", "pcheck", "parametrize",
                                     "orderbound", "implicitize"])
def test_matrix_subcommands(command, capsys, monkeypatch):
    code, out, _ = run(capsys, [command], [[1, 0], [0, 1], [2, "x"]], monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)


@pytest.mark.parametrize("command", ["pcheck", "parametrize"])
def test_unsaturated_input_is_rejected(command, capsys, monkeypatch):
    code, _, err = run(capsys, [command], cols_json(M1), monkeypatch=monkeypatch)
    assert code == 2 and err


@pytest.mark.parametrize("command", ["charset", "classify", "reflexive", "declaurent", "perfect"])
def test_presentation_subcommands(command, capsys, monkeypatch):
    doc = {"n": 2, "family": "+1", "generators": [{"support": ["1-x", "x-1"], "coeff": 1}]}
    code, out, _ = run(capsys, [command], doc, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)
