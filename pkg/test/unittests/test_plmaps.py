import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from betaforge.exceptions import ContextMismatchError, \
    InvalidArrangementError, InvalidPartitionError, UnsupportedSubringError
from betaforge.plmaps import DEEP, PLMap, Partition, PartitionPair, REST, \
    SHALLOW, compose, conjugate, counterexample_map, default_arrangement, \
    evaluate, evaluate_inverse, from_partition_pair, ftau_generator, invert, \
    root_tau_context, tau_context, to_partition_pair, validate_membership, \
    x01
from betaforge.subdivision import context_of

F = Fraction


def dyadic():
    return context_of((2,))


def test_x01_evaluation():
    f = x01()
    assert evaluate(f, F(1, 8)) == F(1, 4)
    assert f(F(3, 8)) == F(5, 8)
    assert evaluate_inverse(f, F(1, 4)) == F(1, 8)
    with pytest.raises(ValueError):
        evaluate(f, F(3, 2))


def test_x01_squared():
    f = x01()
    expected = PLMap(dyadic(), [(0, 0), (F(1, 8), F(1, 2)),
                                (F(1, 4), F(3, 4)), (F(1, 2), F(7, 8)),
                                (1, 1)])
    square = compose(f, f)
    assert square == expected
    assert square.slopes() == (4, 2, F(1, 2), F(1, 4))
    assert f * f == expected


def test_invert():
    f = x01()
    assert invert(f) == PLMap(dyadic(), [(0, 0), (F(1, 2), F(1, 4)),
                                         (F(3, 4), F(1, 2)), (1, 1)])
    assert compose(f, ~f).is_identity()
    assert compose(~f, f).is_identity()


def test_compose_is_left_to_right():
    f = x01()
    g = PLMap(dyadic(), [(0, 0), (F(3, 4), F(1, 2)), (1, 1)])
    t = F(1, 2)
    assert compose(f, g)(t) == g(f(t))
    assert compose(g, f)(t) == f(g(t))
    assert compose(f, g) != compose(g, f)


def test_conjugate():
    f = x01()
    assert conjugate(f, f) == f
    assert conjugate(f, PLMap.identity(dyadic())) == f


def test_canonical_form_drops_collinear_vertices():
    f = PLMap(dyadic(), [(0, 0), (F(1, 4), F(1, 4)), (1, 1)])
    assert f.is_identity()
    assert f.breakpoints() == ()


@pytest.mark.parametrize("vertices", [
    [(0, 0), (1, F(1, 2))],
    [(0, 0), (F(1, 2), F(1, 2)), (F(1, 4), F(3, 4)), (1, 1)],
    [(0, 0), (F(1, 2), F(1, 2)), (F(3, 4), F(1, 2)), (1, 1)],
    [(0, 0)],
])
def test_invalid_maps(vertices):
    with pytest.raises(InvalidPartitionError):
        PLMap(dyadic(), vertices)


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        compose(x01(), ftau_generator("x", 0))


def test_partitions():
    ctx = tau_context()
    tau = ctx.beta
    cells = Partition.from_lengths(ctx, [tau ** 2, tau])
    assert cells == Partition(ctx, [0, tau ** 2, 1])
    assert cells.lengths == (tau ** 2, tau)
    assert len(cells) == 2
    assert cells.interior == (tau ** 2,)
    with pytest.raises(InvalidPartitionError):
        Partition(ctx, [0, tau, tau ** 2, 1])
    with pytest.raises(InvalidPartitionError):
        Partition(ctx, [0, tau])
    with pytest.raises(InvalidPartitionError):
        PartitionPair(cells, Partition(ctx, [0, 1]))


def test_partition_pair_round_trip():
    ctx = tau_context()
    tau = ctx.beta
    pair = PartitionPair(Partition(ctx, [0, tau ** 2, 1]),
                         Partition(ctx, [0, tau, 1]))
    f = from_partition_pair(pair)
    assert f == ftau_generator("y", 0)
    assert to_partition_pair(f).codomain == pair.codomain


def test_ftau_generators():
    tau = tau_context().beta
    x0, y0 = ftau_generator("x", 0), ftau_generator("y", 0)
    assert x0.slopes() == (tau ** -2, 1, tau)
    assert y0.slopes() == (tau ** -1, tau)
    x2 = ftau_generator("x", 2)
    assert x2(1 - tau ** 2) == 1 - tau ** 2
    assert x2.slopes()[0] == 1
    with pytest.raises(ValueError):
        ftau_generator("z", 0)
    with pytest.raises(ValueError):
        ftau_generator("x", -1)


@pytest.mark.parametrize("kind, i", [("x", 0), ("x", 3), ("y", 0),
                                     ("y", 2)])
def test_ftau_generators_are_members(kind, i):
    assert validate_membership(ftau_generator(kind, i), tau_context()).verdict


def test_dyadic_membership():
    report = validate_membership(x01(), dyadic())
    assert report.exponents == (-1, 0, 1)
    assert report.verdict
    thirds = PLMap(dyadic(), [(0, 0), (F(1, 3), F(2, 3)), (1, 1)])
    report = validate_membership(thirds, dyadic())
    assert report.slopes_ok and not report.breakpoints_ok
    assert report.offending == (F(1, 3), F(2, 3))


def test_dyadic_membership_from_a_square_root_context():
    ctx = context_of((0, 2))
    gamma = ctx.beta
    f = PLMap(ctx, [(0, 0), (gamma / 4, gamma / 2),
                    (3 * gamma / 4, 3 * gamma / 4), (1, 1)])
    report = validate_membership(f, dyadic())
    assert report.exponents == (-1, 1, 0)
    assert not report.breakpoints_ok
    assert not report.verdict
    for value in (gamma / 4, gamma / 2, 3 * gamma / 4):
        assert any(value == v for v in report.offending)

    g = PLMap(ctx, [(0, 0), (F(1, 4), F(1, 2)), (F(1, 2), F(3, 4)), (1, 1)])
    report = validate_membership(g, dyadic())
    assert report.exponents == (-1, 0, 1)
    assert report.verdict


def test_slope_outside_group():
    f = PLMap(dyadic(), [(0, 0), (F(1, 2), F(3, 4)), (1, 1)])
    report = validate_membership(f, dyadic())
    assert report.exponents == (None, 1)
    assert not report.verdict
    assert report.diagnostics == ("segment 0: slope is not a power of "
                                  "the base",)


def test_slope_window():
    f = PLMap(dyadic(), [(0, 0), (F(1, 16), F(1, 2)), (F(1, 8), F(3, 4)),
                         (F(1, 4), F(7, 8)), (F(1, 2), F(15, 16)), (1, 1)])
    assert validate_membership(f, dyadic()).exponents == (-3, -2, 0, 2, 3)
    report = validate_membership(f, dyadic(), window=2)
    assert report.exponents == (None, -2, 0, 2, None)
    assert "window" in report.diagnostics[0]


def test_counterexample_root_tau():
    ctx = root_tau_context()
    gamma = ctx.beta
    f = counterexample_map(1, 1)
    assert f.xs == (0, gamma ** 3, gamma, 1)
    assert f.ys == (0, gamma ** 5, gamma, 1)
    assert f.slopes() == (gamma ** 2, gamma ** -2, 1)
    assert validate_membership(f, ctx).verdict


def test_counterexample_is_not_in_ftau():
    gamma = root_tau_context().beta
    report = validate_membership(counterexample_map(1, 1), tau_context())
    assert report.slopes_ok
    assert report.exponents == (1, -1, 0)
    assert not report.breakpoints_ok
    for value in (gamma, gamma ** 3, gamma ** 5):
        assert any(value == v for v in report.offending)


def test_counterexample_family():
    f = counterexample_map(1, 2, ((SHALLOW, SHALLOW, DEEP, REST),
                                  (DEEP, SHALLOW, SHALLOW, REST)))
    assert validate_membership(f, context_of((0, 2, 0, 1))).verdict
    report = validate_membership(f, context_of((2, 1)),
                                 module_spec="auto")
    assert not report.verdict


def test_default_arrangement():
    assert default_arrangement(2, 1) == ((SHALLOW, DEEP, DEEP, REST),
                                         (DEEP, DEEP, SHALLOW, REST))


@pytest.mark.parametrize("arrangement", [
    ((SHALLOW, DEEP, REST), (SHALLOW, DEEP, REST)),
    ((SHALLOW, DEEP, REST), (DEEP, REST, SHALLOW)),
    ((SHALLOW, SHALLOW, REST), (DEEP, SHALLOW, REST)),
    ((SHALLOW, DEEP), (DEEP, SHALLOW)),
])
def test_invalid_arrangements(arrangement):
    with pytest.raises(InvalidArrangementError):
        counterexample_map(1, 1, arrangement)


def test_unsupported_subrings():
    f = ftau_generator("x", 0)
    with pytest.raises(UnsupportedSubringError):
        validate_membership(f, dyadic())
    with pytest.raises(UnsupportedSubringError):
        validate_membership(f, tau_context(), module_spec="nadic")
    with pytest.raises(UnsupportedSubringError):
        validate_membership(f, tau_context(), module_spec="padic")
    with pytest.raises(UnsupportedSubringError):
        validate_membership(x01(), dyadic(), module_spec="integral")
    ctx = context_of((1, 2))
    with pytest.raises(UnsupportedSubringError):
        validate_membership(PLMap.identity(ctx), ctx)


def dyadic_generators():
    ctx = dyadic()
    x1 = PLMap(ctx, [(0, 0), (F(1, 2), F(1, 2)), (F(5, 8), F(3, 4)),
                     (F(3, 4), F(7, 8)), (1, 1)])
    return [x01(), x1]


def ftau_generators():
    return [ftau_generator(kind, i) for kind in "xy" for i in range(2)]


def random_word(generators, rng, length):
    word = PLMap.identity(generators[0].context)
    for _ in range(length):
        g = rng.choice(generators)
        word = compose(word, g if rng.random() < 0.5 else invert(g))
    return word


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(["dyadic", "tau"]), st.integers(0, 2 ** 16))
def test_group_axioms(group, seed):
    rng = random.Random(seed)
    generators = dyadic_generators() if group == "dyadic" \
        else ftau_generators()
    f, g, h = (random_word(generators, rng, rng.randint(1, 2))
               for _ in range(3))
    assert compose(compose(f, g), h) == compose(f, compose(g, h))
    assert compose(f, invert(f)).is_identity()
    assert compose(f, PLMap.identity(f.context)) == f
    context = generators[0].context
    product = compose(f, g)
    assert validate_membership(product, context).verdict
    t = F(rng.randint(1, 99), 100)
    assert product(t) == g(f(t))
