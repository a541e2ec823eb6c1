import json

import pytest

from betaforge import codec
from betaforge.__main__ import EXIT_FAILED, EXIT_IMPOSSIBLE, \
    EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK, build_parser, main
from betaforge.plmaps import x01
from betaforge.treepairs.figures import composition_figure


def write_json(path, data):
    path.write_text(codec.dumps(data))
    return str(path)


def test_group(capsys):
    assert main(["group", "1", "1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "polynomial: x^2 + x - 1" in out
    assert "reciprocal relation: λ^2 = λ + 1" in out
    assert "caret shapes: 2" in out


def test_group_from_polynomial_text(capsys):
    assert main(["group", "x^2+x-1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "polynomial: x^2 + x - 1"
    assert lines[1].startswith("root interval: [")
    lo, hi = (float(v) for v in lines[1][16:-1].split(", "))
    assert lo < (5 ** 0.5 - 1) / 2 < hi
    assert hi - lo < 1e-9
    assert "caret shapes: 2" in lines


@pytest.mark.parametrize("coeffs", [["1"], ["0", "0"], ["1", "-2"],
                                    ["a"]])
def test_group_invalid(coeffs):
    assert main(["group"] + coeffs) == EXIT_INVALID


def test_carets(capsys):
    assert main(["carets", "1", "1"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == [["1", "2"], ["2", "1"]]


def test_carets_cap():
    assert main(["carets", "3", "3", "--cap", "5"]) == EXIT_INVALID


def test_obstruct_and_verify(tmp_path, capsys):
    cert = str(tmp_path / "cert.json")
    code = main(["obstruct", "0", "1", "0", "1", "--vec", "-1", "0", "1",
                 "1", "--out", cert])
    assert code == EXIT_IMPOSSIBLE
    assert json.loads(open(cert).read())["kind"] == "impossible"
    capsys.readouterr()
    assert main(["verify-cert", cert]) == EXIT_OK
    assert "impossible certificate: valid" in capsys.readouterr().out

    data = json.loads(open(cert).read())
    data["period"] = "3"
    assert main(["verify-cert", write_json(tmp_path / "bad.json", data)]) \
        == EXIT_FAILED


def test_obstruct_witness(tmp_path):
    cert = str(tmp_path / "cert.json")
    assert main(["obstruct", "1", "1", "--vec", "1", "-1", "--out",
                 cert]) == EXIT_OK
    assert json.loads(open(cert).read())["kind"] == "witness"


def test_obstruct_inconclusive():
    assert main(["obstruct", "1", "1", "--vec", "-1", "2",
                 "--max-n", "1"]) == EXIT_INCONCLUSIVE


def test_obstruct_honours_environment(monkeypatch):
    monkeypatch.setenv("BETAFORGE_MAXN", "1")
    assert main(["obstruct", "1", "1", "--vec", "-1", "2"]) == \
        EXIT_INCONCLUSIVE


def test_obstruct_dimension_mismatch():
    assert main(["obstruct", "1", "1", "--vec", "1", "2", "3"]) == \
        EXIT_INVALID


def test_verify_cert_missing_file(tmp_path):
    assert main(["verify-cert", str(tmp_path / "none.json")]) == EXIT_INVALID


def test_counterexample_and_validate(tmp_path, capsys):
    path = str(tmp_path / "map.json")
    assert main(["counterexample", "1", "1", "--out", path]) == EXIT_OK
    assert main(["plmap", "validate", path, "--group", "0", "1", "0",
                 "1"]) == EXIT_OK
    assert "member: True" in capsys.readouterr().out
    assert main(["plmap", "validate", path, "--group", "1", "1"]) == \
        EXIT_FAILED
    out = capsys.readouterr().out
    assert "slopes: beta^1, beta^-1, beta^0" in out
    assert "member: False" in out


def test_counterexample_arrangements(tmp_path):
    assert main(["counterexample", "1", "1", "--domain", "1", "2", "0",
                 "--codomain", "1", "2", "0"]) == EXIT_INVALID
    path = str(tmp_path / "map.json")
    assert main(["counterexample", "1", "2", "--domain", "1", "1", "2", "0",
                 "--codomain", "2", "1", "1", "0", "--out", path]) == EXIT_OK


def test_plmap_actions(tmp_path, capsys):
    path = write_json(tmp_path / "x01.json", codec.encode_plmap(x01()))
    square = str(tmp_path / "square.json")
    assert main(["plmap", "compose", path, path, "--out", square]) == EXIT_OK
    vertices = json.loads(open(square).read())["vertices"]
    assert vertices[1] == [["1/8"], ["1/2"]]
    assert main(["plmap", "invert", path]) == EXIT_OK
    capsys.readouterr()
    assert main(["plmap", "eval", path, "--point", "1/8"]) == EXIT_OK
    assert "f(1/8) in [0.25, 0.25]" in capsys.readouterr().out
    assert main(["plmap", "compose", path]) == EXIT_INVALID


def test_treepair_actions(tmp_path, capsys):
    f, g, fg = composition_figure()
    first = write_json(tmp_path / "f.json", codec.encode_treepair(f))
    second = write_json(tmp_path / "g.json", codec.encode_treepair(g))
    product = str(tmp_path / "fg.json")
    assert main(["treepair", "compose", first, second, "--out",
                 product]) == EXIT_OK
    expected = write_json(tmp_path / "expected.json",
                          codec.encode_treepair(fg))
    assert main(["treepair", "equiv", product, expected]) == EXIT_OK
    assert main(["treepair", "equiv", first, second]) == EXIT_FAILED
    capsys.readouterr()
    assert main(["treepair", "render", first]) == EXIT_OK
    assert "digraph treepair {" in capsys.readouterr().out
    assert main(["treepair", "reduce", first, "--format", "text"]) == EXIT_OK
    assert main(["treepair", "equiv", first]) == EXIT_INVALID


def test_presentation(capsys):
    assert main(["presentation", "1", "1", "2"]) == EXIT_OK
    assert "x0 x1 = y0 y0" in capsys.readouterr().out.splitlines()
    assert main(["presentation", "2", "1", "2"]) == EXIT_INVALID


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
