"""JSON encoding of contexts, field elements, maps, tree pairs and
certificates. Every integer is written as a decimal string and output is
key sorted, so files are byte stable."""
import json
from fractions import Fraction

from betaforge.exceptions import BetaforgeError, CodecError
from betaforge.plmaps import PLMap
from betaforge.representability import Certificate, IMPOSSIBLE, \
    INCONCLUSIVE, WITNESS
from betaforge.subdivision import context_of, enumerate_carets
from betaforge.treepairs import LEAF, Node, TreePair


def dumps(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def loads(text):
    try:
        return json.loads(text)
    except ValueError as e:
        raise CodecError("invalid JSON: {}".format(e))


def _int(text):
    try:
        return int(text)
    except (TypeError, ValueError):
        raise CodecError("expected a decimal integer, got {!r}".format(text))


def _rational(text):
    try:
        return Fraction(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise CodecError("expected 'num/den', got {!r}".format(text))


def _field(data, key):
    try:
        return data[key]
    except (KeyError, TypeError):
        raise CodecError("missing field {!r}".format(key))


def encode_context(context):
    return {"coeffs": [str(a) for a in context.poly.coeffs]}


def decode_context(data):
    coeffs = tuple(_int(a) for a in _field(data, "coeffs"))
    try:
        return context_of(coeffs)
    except BetaforgeError as e:
        raise CodecError("invalid context: {}".format(e))


def encode_value(value):
    return ["{}/{}".format(c.numerator, c.denominator) for c in value.coeffs]


def decode_value(context, data):
    if not isinstance(data, list) or len(data) != context.degree:
        raise CodecError("expected {} coordinates".format(context.degree))
    return context.element([_rational(c) for c in data])


def encode_element(value):
    return {"context": encode_context(value.context),
            "value": encode_value(value)}


def decode_element(data):
    context = decode_context(_field(data, "context"))
    return decode_value(context, _field(data, "value"))


def encode_plmap(f):
    return {"context": encode_context(f.context),
            "vertices": [[encode_value(x), encode_value(y)]
                         for x, y in f.vertices]}


def decode_plmap(data):
    context = decode_context(_field(data, "context"))
    vertices = []
    for vertex in _field(data, "vertices"):
        if not isinstance(vertex, list) or len(vertex) != 2:
            raise CodecError("vertices are [x, y] pairs")
        vertices.append((decode_value(context, vertex[0]),
                         decode_value(context, vertex[1])))
    try:
        return PLMap(context, vertices)
    except BetaforgeError as e:
        raise CodecError("invalid map: {}".format(e))


def encode_tree(tree, shapes):
    """Preorder caret shape indices, -1 for a leaf."""
    index = {shape: i for i, shape in enumerate(shapes)}
    out = []

    def visit(node):
        if node is LEAF or not isinstance(node, Node):
            out.append("-1")
            return
        out.append(str(index[node.shape]))
        for child in node.children:
            visit(child)

    visit(tree)
    return out


def decode_tree(data, shapes):
    tokens = iter([_int(t) for t in data])

    def build():
        try:
            token = next(tokens)
        except StopIteration:
            raise CodecError("truncated tree")
        if token == -1:
            return LEAF
        if not 0 <= token < len(shapes):
            raise CodecError("unknown caret shape index {}".format(token))
        shape = shapes[token]
        return Node(shape, tuple(build() for _ in shape.legs))

    tree = build()
    if next(tokens, None) is not None:
        raise CodecError("trailing tokens after tree")
    return tree


def encode_treepair(pair):
    shapes = enumerate_carets(pair.context)
    return {"context": encode_context(pair.context),
            "left": encode_tree(pair.left, shapes),
            "right": encode_tree(pair.right, shapes)}


def decode_treepair(data):
    context = decode_context(_field(data, "context"))
    shapes = enumerate_carets(context)
    try:
        return TreePair(decode_tree(_field(data, "left"), shapes),
                        decode_tree(_field(data, "right"), shapes), context)
    except ValueError as e:
        raise CodecError(str(e))


def _ints(values):
    return [str(v) for v in values]


def encode_certificate(cert, context, p):
    data = {"kind": cert.kind, "context": encode_context(context),
            "p": _ints(p)}
    if cert.kind == WITNESS:
        data.update(n=str(cert.n), vector=_ints(cert.vector))
    elif cert.kind == IMPOSSIBLE:
        data.update(split_index=str(cert.split_index),
                    cycle_start=str(cert.cycle_start),
                    period=str(cert.period),
                    patterns=[{"positive": _ints(sorted(pos)),
                               "negative": _ints(sorted(neg))}
                              for pos, neg in cert.patterns])
    else:
        data.update(bound=str(cert.bound))
    return data


def decode_certificate(data):
    """(certificate, context, p)."""
    kind = _field(data, "kind")
    context = decode_context(_field(data, "context"))
    p = tuple(_int(v) for v in _field(data, "p"))
    if kind == WITNESS:
        cert = Certificate.witness(
            _int(_field(data, "n")),
            [_int(v) for v in _field(data, "vector")])
    elif kind == IMPOSSIBLE:
        patterns = [(frozenset(_int(i) for i in _field(entry, "positive")),
                     frozenset(_int(i) for i in _field(entry, "negative")))
                    for entry in _field(data, "patterns")]
        cert = Certificate.impossible(
            _int(_field(data, "split_index")),
            _int(_field(data, "cycle_start")),
            _int(_field(data, "period")), patterns)
    elif kind == INCONCLUSIVE:
        cert = Certificate.inconclusive(_int(_field(data, "bound")))
    else:
        raise CodecError("unknown certificate kind {!r}".format(kind))
    return cert, context, p
