import json
from fractions import Fraction

import pytest

from betaforge import codec
from betaforge.exceptions import CodecError
from betaforge.plmaps import counterexample_map, root_tau_context, x01
from betaforge.representability import decide_nonneg, verify_certificate
from betaforge.subdivision import TAU, context_of
from betaforge.treepairs.figures import composition_figure, x01_pair


def test_context_and_values():
    assert codec.encode_context(context_of(TAU)) == {"coeffs": ["1", "1"]}
    half = context_of((2,)).rational(Fraction(1, 2))
    assert codec.encode_element(half) == {"context": {"coeffs": ["2"]},
                                          "value": ["1/2"]}
    assert codec.decode_element(codec.encode_element(half)) == half


def test_plmap_layout():
    data = codec.encode_plmap(x01())
    assert data["vertices"][1] == [["1/4"], ["1/2"]]
    assert codec.decode_plmap(data) == x01()


def test_counterexample_map_is_stable():
    text = codec.dumps(codec.encode_plmap(counterexample_map(1, 1)))
    assert text == codec.dumps(codec.encode_plmap(counterexample_map(1, 1)))
    assert codec.decode_plmap(codec.loads(text)) == counterexample_map(1, 1)
    assert text.index('"context"') < text.index('"vertices"')


def test_tree_encoding():
    data = codec.encode_treepair(x01_pair())
    assert data["left"] == ["0", "0", "-1", "-1", "-1"]
    assert data["right"] == ["0", "-1", "0", "-1", "-1"]
    f, g, fg = composition_figure()
    assert codec.decode_treepair(codec.encode_treepair(fg)) == fg


def test_certificate_file():
    ctx = root_tau_context()
    p = (-1, 0, 1, 1)
    cert = decide_nonneg(ctx, p)
    data = json.loads(codec.dumps(codec.encode_certificate(cert, ctx, p)))
    assert data["kind"] == "impossible"
    assert data["period"] == "2"
    assert data["patterns"][0] == {"positive": ["0", "2"],
                                   "negative": ["1", "3"]}
    decoded, decoded_ctx, decoded_p = codec.decode_certificate(data)
    assert decoded == cert and decoded_p == p
    assert verify_certificate(decoded_ctx, decoded_p, decoded)


def test_witness_and_inconclusive_files():
    ctx = context_of(TAU)
    for p, max_n in (((1, -1), 8), ((-1, 2), 1)):
        cert = decide_nonneg(ctx, p, max_n=max_n)
        data = codec.encode_certificate(cert, ctx, p)
        assert codec.decode_certificate(data)[0] == cert


@pytest.mark.parametrize("text", ["{", "[1, 2", "nope"])
def test_invalid_json(text):
    with pytest.raises(CodecError):
        codec.loads(text)


def test_decode_errors():
    pair = codec.encode_treepair(x01_pair())
    with pytest.raises(CodecError):
        codec.decode_treepair(dict(pair, left=["0", "-1"]))
    with pytest.raises(CodecError):
        codec.decode_treepair(dict(pair, left=pair["left"] + ["-1"]))
    with pytest.raises(CodecError):
        codec.decode_treepair(dict(pair, left=["5", "-1", "-1"]))
    with pytest.raises(CodecError):
        codec.decode_treepair(dict(pair, left=["-1"]))
    with pytest.raises(CodecError):
        codec.decode_context({"coeffs": ["1", "x"]})
    with pytest.raises(CodecError):
        codec.decode_context({"coeffs": ["1"]})
    with pytest.raises(CodecError):
        codec.decode_context({})
    data = codec.encode_plmap(x01())
    with pytest.raises(CodecError):
        codec.decode_plmap(dict(data, vertices=[[["0"], ["0"]],
                                                [["1"], ["1/2"]]]))
    with pytest.raises(CodecError):
        codec.decode_plmap(dict(data, vertices=[[["0"], ["0"], ["0"]]]))
    with pytest.raises(CodecError):
        codec.decode_element({"context": {"coeffs": ["1", "1"]},
                              "value": ["1"]})
    with pytest.raises(CodecError):
        codec.decode_certificate({"kind": "maybe",
                                  "context": {"coeffs": ["1", "1"]},
                                  "p": ["1", "1"]})
