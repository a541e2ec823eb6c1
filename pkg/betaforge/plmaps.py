"""Exact piecewise linear homeomorphisms of [0, 1].

Maps compose left to right: ``compose(f, g)`` is t -> g(f(t)).
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ovos_utils.log import LOG

from betaforge.configuration import CONFIGURATION
from betaforge.exactnum import FieldElem
from betaforge.exceptions import ContextMismatchError, \
    InvalidArrangementError, InvalidPartitionError, UnsupportedSubringError
from betaforge.subdivision import ROOT_TAU, TAU, context_of, \
    validate_subdivision


def _element(context, value):
    if isinstance(value, FieldElem):
        if not context.same_field(value.context):
            raise ContextMismatchError(
                "{} and {}".format(context, value.context))
        return value
    return context.rational(value)


def _merge(first, second):
    """Sorted union of two increasing sequences of field elements."""
    merged = []
    i = j = 0
    while i < len(first) or j < len(second):
        if j == len(second):
            merged.append(first[i])
            i += 1
            continue
        if i == len(first):
            merged.append(second[j])
            j += 1
            continue
        order = first[i].compare(second[j])
        if order <= 0:
            merged.append(first[i])
            i += 1
            if order == 0:
                j += 1
        else:
            merged.append(second[j])
            j += 1
    return merged


class Partition:
    """Strictly increasing breakpoints from 0 to 1."""

    def __init__(self, context, breakpoints):
        self.context = context
        self.breakpoints = tuple(_element(context, b) for b in breakpoints)
        points = self.breakpoints
        if len(points) < 2 or points[0] != 0 or points[-1] != 1:
            raise InvalidPartitionError("partition must run from 0 to 1")
        for lo, hi in zip(points, points[1:]):
            if lo >= hi:
                raise InvalidPartitionError(
                    "breakpoints not increasing at {}".format(hi))

    @classmethod
    def from_lengths(cls, context, lengths):
        points = [context.zero]
        for length in lengths:
            points.append(points[-1] + length)
        return cls(context, points)

    @property
    def lengths(self):
        return tuple(hi - lo for lo, hi in
                     zip(self.breakpoints, self.breakpoints[1:]))

    @property
    def interior(self):
        return self.breakpoints[1:-1]

    def __len__(self):
        return len(self.breakpoints) - 1

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.context.same_field(other.context) and \
            len(self.breakpoints) == len(other.breakpoints) and \
            all(a == b for a, b in zip(self.breakpoints, other.breakpoints))

    __hash__ = None

    def __repr__(self):
        return "Partition([{}])".format(
            ", ".join(str(b) for b in self.breakpoints))


@dataclass(frozen=True)
class PartitionPair:
    domain: Partition
    codomain: Partition

    def __post_init__(self):
        if len(self.domain) != len(self.codomain):
            raise InvalidPartitionError(
                "domain has {} cells, codomain {}".format(
                    len(self.domain), len(self.codomain)))
        if not self.domain.context.same_field(self.codomain.context):
            raise ContextMismatchError("partitions from different fields")


class PLMap:
    """Vertex list (x_0, y_0) = (0, 0), ..., (x_m, y_m) = (1, 1), in
    canonical form: no vertex sits between two segments of equal slope."""

    def __init__(self, context, vertices, canonical=True):
        self.context = context
        vertices = [(_element(context, x), _element(context, y))
                    for x, y in vertices]
        if len(vertices) < 2 or vertices[0][0] != 0 or \
                vertices[0][1] != 0 or vertices[-1][0] != 1 or \
                vertices[-1][1] != 1:
            raise InvalidPartitionError("map must fix 0 and 1")
        for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
            if x0 >= x1 or y0 >= y1:
                raise InvalidPartitionError(
                    "vertices not increasing at ({}, {})".format(x1, y1))
        if canonical:
            vertices = _canonical(vertices)
        self.vertices = tuple(vertices)

    @classmethod
    def identity(cls, context):
        return cls(context, [(0, 0), (1, 1)])

    @property
    def xs(self):
        return tuple(x for x, _ in self.vertices)

    @property
    def ys(self):
        return tuple(y for _, y in self.vertices)

    def breakpoints(self):
        """Interior vertices."""
        return self.vertices[1:-1]

    def slopes(self):
        return tuple((y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in
                     zip(self.vertices, self.vertices[1:]))

    def is_identity(self):
        return len(self.vertices) == 2

    def __call__(self, x):
        return evaluate(self, x)

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return invert(self)

    def __eq__(self, other):
        if not isinstance(other, PLMap):
            return NotImplemented
        return self.context.same_field(other.context) and \
            len(self.vertices) == len(other.vertices) and \
            all(x0 == x1 and y0 == y1 for (x0, y0), (x1, y1) in
                zip(self.vertices, other.vertices))

    __hash__ = None

    def __repr__(self):
        return "PLMap({})".format(", ".join(
            "({}, {})".format(x, y) for x, y in self.vertices))


def _collinear(a, b, c):
    (x0, y0), (x1, y1), (x2, y2) = a, b, c
    return (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0)


def _canonical(vertices):
    result = [vertices[0]]
    for vertex, following in zip(vertices[1:], vertices[2:]):
        if not _collinear(result[-1], vertex, following):
            result.append(vertex)
    result.append(vertices[-1])
    return result


def from_partition_pair(pair):
    """Map the i-th domain cell linearly onto the i-th codomain cell."""
    return PLMap(pair.domain.context,
                 zip(pair.domain.breakpoints, pair.codomain.breakpoints))


def to_partition_pair(f):
    return PartitionPair(Partition(f.context, f.xs),
                         Partition(f.context, f.ys))


def _locate(points, x):
    """Index i with points[i] <= x <= points[i + 1]."""
    if x < 0 or x > 1:
        raise ValueError("{} is outside [0, 1]".format(x))
    lo, hi = 0, len(points) - 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if points[mid] <= x:
            lo = mid
        else:
            hi = mid
    return lo


def _interpolate(a, b, x):
    i = _locate(a, x)
    if x == a[i]:
        return b[i]
    return b[i] + (x - a[i]) * (b[i + 1] - b[i]) / (a[i + 1] - a[i])


def evaluate(f, x):
    return _interpolate(f.xs, f.ys, _element(f.context, x))


def evaluate_inverse(f, y):
    return _interpolate(f.ys, f.xs, _element(f.context, y))


def compose(f, g):
    """t -> g(f(t))."""
    if not f.context.same_field(g.context):
        raise ContextMismatchError(
            "cannot compose maps over {} and {}".format(f.context,
                                                        g.context))
    points = _merge(list(f.xs), [evaluate_inverse(f, x) for x in g.xs])
    return PLMap(f.context, [(x, evaluate(g, evaluate(f, x)))
                             for x in points])


def invert(f):
    return PLMap(f.context, [(y, x) for x, y in f.vertices],
                 canonical=False)


def conjugate(f, g):
    """g^-1 f g, applied left to right."""
    return compose(compose(invert(g), f), g)


@dataclass(frozen=True)
class MembershipReport:
    """Slope exponents (None where no power of β fits) and per breakpoint
    membership of a map checked against a group F_β."""
    exponents: tuple
    breakpoints: tuple
    offending: tuple = ()
    diagnostics: tuple = field(default=(), compare=False)

    @property
    def slopes_ok(self):
        return all(e is not None for e in self.exponents)

    @property
    def breakpoints_ok(self):
        return all(ok for _, ok in self.breakpoints)

    @property
    def verdict(self):
        return self.slopes_ok and self.breakpoints_ok


def _power_step(map_context, group_context):
    """k with β_group = β_map^k."""
    if map_context.same_field(group_context):
        return 1
    group_poly = getattr(group_context, "poly", None)
    map_poly = getattr(map_context, "poly", None)
    if group_poly is not None and map_poly is not None and \
            map_poly.degree % group_poly.degree == 0:
        k = map_poly.degree // group_poly.degree
        if group_poly.substitute_power(k) == map_poly:
            return k
    raise UnsupportedSubringError(
        "no embedding of {} into {}".format(group_context, map_context))


def _slope_exponent(rise, run, base, window):
    """m with rise == base^m * run, walking monotonically from m = 0."""
    m, power = 0, run
    inverse = base ** -1
    direction = None
    while abs(m) <= window:
        order = rise.compare(power)
        if order == 0:
            return m, None
        # base < 1, so base^m falls as m grows
        step = 1 if order < 0 else -1
        if direction is not None and step != direction:
            return None, "slope is not a power of the base"
        direction = step
        m += step
        power = power * (base if step == 1 else inverse)
    return None, "no exponent within the window of {}".format(window)


def _nadic(q, n):
    den = q.denominator
    while True:
        common = math.gcd(den, n)
        if common == 1:
            return den == 1
        den //= common


def _oracle(group_context, k, module_spec):
    if module_spec not in ("auto", "nadic", "integral"):
        raise UnsupportedSubringError(
            "unknown module {!r}".format(module_spec))
    group_poly = group_context.poly
    if group_poly.degree == 1:
        if module_spec == "integral":
            raise UnsupportedSubringError("linear groups use n-adic module")
        n = group_poly.leading

        def member(value):
            # rational only when every coordinate off the powers of γ^k
            # vanishes; then γ^(jk) = n^-j
            if any(c for i, c in enumerate(value.coeffs) if i % k):
                return False
            rational = sum((c / n ** (i // k) for i, c in
                            enumerate(value.coeffs) if i % k == 0),
                           Fraction(0))
            return _nadic(rational, n)
        return member
    if module_spec == "nadic":
        raise UnsupportedSubringError(
            "n-adic module requires a linear context")
    if group_poly.leading != 1:
        raise UnsupportedSubringError(
            "Z[β] membership for non-monic {}".format(group_poly))

    def member(value):
        # Z[β] inside Z[γ], β = γ^k: integer coordinates on powers of γ^k
        return all(c.denominator == 1 and (c == 0 or i % k == 0)
                   for i, c in enumerate(value.coeffs))
    return member


def validate_membership(f, group_context, module_spec="auto", window=None):
    """Check slopes in <β> and breakpoints in the module of F_β."""
    window = window or CONFIGURATION["plmaps"]["slope_window"]
    k = _power_step(f.context, group_context)
    member = _oracle(group_context, k, module_spec)
    base = f.context.beta ** k

    exponents, diagnostics = [], []
    for index, ((x0, y0), (x1, y1)) in enumerate(zip(f.vertices,
                                                     f.vertices[1:])):
        m, note = _slope_exponent(y1 - y0, x1 - x0, base, window)
        exponents.append(m)
        if note:
            diagnostics.append("segment {}: {}".format(index, note))

    checked, offending = [], []
    for x, y in f.breakpoints():
        for value in (x, y):
            if any(value == seen for seen, _ in checked):
                continue
            ok = member(value)
            checked.append((value, ok))
            if not ok:
                offending.append(value)
    report = MembershipReport(tuple(exponents), tuple(checked),
                              tuple(offending), tuple(diagnostics))
    LOG.debug("membership in {}: {}".format(group_context, report.verdict))
    return report


def tau_context():
    return context_of(TAU)


def ftau_generator(kind, i):
    """x_i or y_i of F_τ: identity on [0, 1 - τ^i], then slopes
    τ^-2, 1, τ for x_i and τ^-1, τ for y_i."""
    if kind not in ("x", "y") or i < 0:
        raise ValueError("generator must be x_i or y_i with i >= 0")
    ctx = tau_context()
    tau = ctx.beta
    fixed = 1 - tau ** i
    vertices = [(ctx.zero, ctx.zero)]
    if i > 0:
        vertices.append((fixed, fixed))
    if kind == "x":
        vertices.append((fixed + tau ** (i + 4), fixed + tau ** (i + 2)))
    vertices.append((1 - tau ** (i + 1), 1 - tau ** (i + 2)))
    vertices.append((ctx.one, ctx.one))
    return PLMap(ctx, vertices)


# cell tokens for counterexample maps: DEEP cells have length β^2 sqrt(β),
# SHALLOW cells β sqrt(β)
DEEP, SHALLOW, REST = 2, 1, 0


def default_arrangement(a, b):
    return ((SHALLOW,) * b + (DEEP,) * a + (REST,),
            (DEEP,) * a + (SHALLOW,) * b + (REST,))


def counterexample_map(a, b, arrangement=None):
    """Map in F_sqrt(β) (context ax^4 + bx^2 - 1) rearranging the a cells of
    length β^2 sqrt(β) and b cells of length β sqrt(β) that tile
    [0, sqrt(β)]; the rest cell [sqrt(β), 1] keeps its index."""
    context = validate_subdivision((0, b, 0, a))
    domain, codomain = arrangement or default_arrangement(a, b)
    domain, codomain = tuple(domain), tuple(codomain)
    for tokens in (domain, codomain):
        if sorted(tokens) != sorted(default_arrangement(a, b)[0]):
            raise InvalidArrangementError(
                "arrangement {} needs {} deep, {} shallow and one rest "
                "cell".format(tokens, a, b))
    if domain.index(REST) != codomain.index(REST):
        raise InvalidArrangementError(
            "the rest cell must sit at the same index in both partitions")
    if domain == codomain:
        raise InvalidArrangementError("the partitions must not be identical")

    root = context.beta
    lengths = {DEEP: root ** 5, SHALLOW: root ** 3, REST: 1 - root}
    pair = PartitionPair(
        Partition.from_lengths(context, [lengths[t] for t in domain]),
        Partition.from_lengths(context, [lengths[t] for t in codomain]))
    return from_partition_pair(pair)


def root_tau_context():
    return context_of(ROOT_TAU)


def x01():
    """The dyadic element with vertices (1/4, 1/2) and (1/2, 3/4)."""
    ctx = context_of((2,))
    return PLMap(ctx, [(0, 0), (Fraction(1, 4), Fraction(1, 2)),
                       (Fraction(1, 2), Fraction(3, 4)), (1, 1)])
