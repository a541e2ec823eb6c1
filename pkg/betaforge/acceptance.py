"""End to end checks of the worked results, run by ``betaforge
verify-paper``.

Each check returns a short detail string and raises AssertionError on
failure. Results are emitted in declaration order whether or not the
checks run on worker threads.
"""
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from queue import Queue

from ovos_utils import create_daemon
from ovos_utils.log import LOG
from pyee import EventEmitter

from betaforge.configuration import CONFIGURATION, get_max_n
from betaforge.exceptions import NotTreePairDefinableError, \
    UnrepresentableError
from betaforge.plmaps import PLMap, Partition, compose, counterexample_map, \
    root_tau_context, tau_context, validate_membership, x01
from betaforge.representability import IMPOSSIBLE, apply, boolean_cycle, \
    build_matrix, decide_nonneg, matrix_power, reciprocal_root_vector, \
    verify_certificate
from betaforge.subdivision import context_of, embed, enumerate_carets, \
    even_root_exclusion, sqrt_membership_quadratic
from betaforge.treepairs import compose_pairs, enumerate_trees, leaf_depths, \
    partition_to_tree, power_map_down, power_map_up, random_pair, \
    tree_to_partition, treepair_to_plmap
from betaforge.treepairs.figures import cubic_relation_trees, \
    equitree_trees, x01_pair
from betaforge.treepairs.presentation import LTR, check_ftau_relations, \
    emit_presentation, evaluate_word

ROOT_TAU_MATRIX = ((0, 1, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0))
ROOT_TAU_MATRIX_4 = ((2, 0, 1, 0), (0, 2, 0, 1), (1, 0, 1, 0), (0, 1, 0, 1))
# 1 + λ - λ^3, which is 1 - β for β the root of x^4 + x^2 - 1
ROOT_TAU_VECTOR = (-1, 0, 1, 1)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


class AcceptanceSuite(EventEmitter):
    """Emits ``check:start`` with the check name and ``check:result`` with
    a CheckResult.

    ``hooks`` replaces constants for negative testing: ``matrix`` swaps
    the expected x^4 + x^2 - 1 matrix, ``max_n`` lowers the iteration
    bound of the impossibility check.
    """

    def __init__(self, hooks=None, parallel=None, workers=None):
        super().__init__()
        config = CONFIGURATION["verify"]
        self.hooks = hooks or {}
        self.parallel = config["parallel"] if parallel is None else parallel
        self.workers = workers or config["workers"]
        self.checks = [
            ("matrix fidelity", self.check_matrix),
            ("impossibility certificate", self.check_impossible),
            ("family sweep", self.check_family),
            ("square root exclusion", self.check_sqrt),
            ("counterexample map", self.check_counterexample),
            ("tree pair obstruction", self.check_tree_obstruction),
            ("F_tau relations", self.check_ftau),
            ("F sanity", self.check_dyadic),
            ("caret combinatorics", self.check_carets),
            ("power functors", self.check_power_maps),
            ("root isolation", self.check_roots),
            ("presentation emission", self.check_presentation),
        ]

    def _run_one(self, name, check):
        start = time.monotonic()
        try:
            detail = check() or "ok"
            passed = True
        except AssertionError as e:
            detail, passed = str(e) or "assertion failed", False
        except Exception as e:
            LOG.exception("check {} crashed".format(name))
            detail, passed = "{}: {}".format(type(e).__name__, e), False
        return CheckResult(name, passed, detail, time.monotonic() - start)

    def _worker(self, jobs, results):
        while True:
            job = jobs.get()
            if job is None:
                return
            index, name, check = job
            results.put((index, self._run_one(name, check)))

    def run(self):
        results = []
        if not self.parallel:
            for name, check in self.checks:
                self.emit("check:start", name)
                result = self._run_one(name, check)
                self.emit("check:result", result)
                results.append(result)
            return results

        jobs, done = Queue(), Queue()
        for index, (name, check) in enumerate(self.checks):
            jobs.put((index, name, check))
        for _ in range(self.workers):
            jobs.put(None)
            create_daemon(self._worker, args=(jobs, done))
        finished = {}
        for _ in self.checks:
            index, result = done.get()
            finished[index] = result
        for index, (name, _) in enumerate(self.checks):
            self.emit("check:start", name)
            self.emit("check:result", finished[index])
            results.append(finished[index])
        return results

    # checks
    def check_matrix(self):
        ctx = root_tau_context()
        matrix = build_matrix(ctx)
        expected = self.hooks.get("matrix", ROOT_TAU_MATRIX)
        assert matrix == expected, "A = {}".format(matrix.rows)
        assert apply(matrix, ROOT_TAU_VECTOR) == (0, 0, 1, -1)
        assert matrix_power(matrix, 4) == ROOT_TAU_MATRIX_4
        return "A, Ap and A^4 match"

    def check_impossible(self):
        ctx = root_tau_context()
        max_n = self.hooks.get("max_n") or get_max_n()
        cert = decide_nonneg(ctx, ROOT_TAU_VECTOR, max_n=max_n)
        assert cert.kind == IMPOSSIBLE, "got {}".format(cert.kind)
        assert cert.period == 2, "period {}".format(cert.period)
        assert verify_certificate(ctx, ROOT_TAU_VECTOR, cert)
        matrix, vector = build_matrix(ctx), ROOT_TAU_VECTOR
        for n in range(51):
            assert min(vector) < 0, "A^{}p is nonnegative".format(n)
            vector = apply(matrix, vector)
        return "cycle from N={} with period 2".format(cert.cycle_start)

    def check_family(self):
        reference = boolean_cycle(build_matrix(root_tau_context()))
        for a in range(1, 6):
            for b in range(1, 6):
                ctx = context_of((0, b, 0, a))
                cycle = boolean_cycle(build_matrix(ctx))
                assert cycle.period == 2, "({}, {}) period {}".format(
                    a, b, cycle.period)
                assert cycle.patterns == reference.patterns and \
                    cycle.start == reference.start
                for offset, pattern in enumerate(cycle.patterns):
                    parity = (cycle.start + offset) % 2
                    assert all(entry == ((i + j) % 2 == parity)
                               for i, row in enumerate(pattern)
                               for j, entry in enumerate(row))
                p = reciprocal_root_vector(ctx)
                cert = decide_nonneg(ctx, p)
                assert cert.kind == IMPOSSIBLE, "({}, {})".format(a, b)
                assert verify_certificate(ctx, p, cert)
        return "25 polynomials, alternating period 2"

    def check_sqrt(self):
        for a in range(1, 11):
            for b in range(1, 11):
                assert sqrt_membership_quadratic(a, b).excluded
                for n in range(1, 5):
                    assert even_root_exclusion(a, b, n).excluded
        return "100 quadratics, n <= 4"

    def check_counterexample(self):
        ctx = root_tau_context()
        root = ctx.beta
        f = counterexample_map(1, 1)
        assert f.xs == (ctx.zero, root ** 3, root, ctx.one), str(f)
        assert f.ys == (ctx.zero, root ** 5, root, ctx.one), str(f)
        assert f.slopes() == (root ** 2, root ** -2, ctx.one)
        assert validate_membership(f, ctx).verdict
        report = validate_membership(f, tau_context())
        assert not report.verdict
        assert any(v == root for v in report.offending)
        return "slopes tau, 1/tau, 1; sqrt(tau) offends in F_tau"

    def check_tree_obstruction(self):
        ctx = root_tau_context()
        try:
            partition_to_tree(Partition(ctx, [0, ctx.beta, 1]))
        except UnrepresentableError as e:
            assert e.breakpoint == ctx.beta
        else:
            raise AssertionError("sqrt(tau) partition was realized")
        trees = enumerate_trees(ctx, 12)
        assert all(d % 2 == 0 for t in trees for d in leaf_depths(t))
        return "{} trees, all depths even".format(len(trees))

    def check_ftau(self):
        report = check_ftau_relations(4)
        assert report.convention == LTR, "convention {}".format(
            report.convention)
        assert all(c.ltr and c.rtl for c in report.sanity)
        return "{} relations hold left to right only".format(
            len(report.checks))

    def check_dyadic(self):
        f = x01()
        expected = PLMap(f.context, [
            (0, 0), (Fraction(1, 8), Fraction(1, 2)),
            (Fraction(1, 4), Fraction(3, 4)), (Fraction(1, 2), Fraction(7, 8)),
            (1, 1)])
        assert compose(f, f) == expected
        pair = x01_pair()
        assert treepair_to_plmap(pair) == f
        assert treepair_to_plmap(compose_pairs(pair, pair)) == expected
        return "x01 squared"

    def check_carets(self):
        for total in range(1, 13):
            for a in range(1, total + 1):
                b = total - a
                if (a, b) == (1, 0):
                    continue
                shapes = enumerate_carets(context_of((b, a)))
                assert len(shapes) == math.comb(a + b, a), (a, b)
        left, right = equitree_trees()
        tau = tau_context()
        assert leaf_depths(left) == leaf_depths(right) == (2, 3, 2)
        assert tree_to_partition(left, tau) == tree_to_partition(right, tau)
        left, right = cubic_relation_trees()
        assert leaf_depths(left) == leaf_depths(right) == (3, 5, 7, 5, 3)
        return "binomial counts, both caret relations"

    def check_power_maps(self):
        rng = random.Random(1)
        tau = tau_context()
        for _ in range(200):
            pair = random_pair(tau, rng.randint(0, 4), rng)
            for k in (2, 3):
                assert power_map_down(power_map_up(pair, k), k) == pair
        for k in (2, 3):
            upper = context_of(tau.poly.substitute_power(k).coeffs)
            shapes = {s.legs for s in enumerate_carets(upper)}
            assert all(leg % k == 0 for legs in shapes for leg in legs)
            down = {tuple(leg // k for leg in legs) for legs in shapes}
            assert down == {s.legs for s in enumerate_carets(tau)}
            assert len(down) == len(shapes)
        return "200 pairs, k = 2, 3"

    def check_roots(self):
        width = Fraction(1, 10 ** 12)
        squares = {
            (1, 1): lambda x: (2 * x + 1) ** 2 - 5,
            (2, 1): lambda x: (x + 1) ** 2 - 2,
            (0, 1, 0, 1): lambda x: (2 * x * x + 1) ** 2 - 5,
        }
        for coeffs, sign in squares.items():
            interval = context_of(coeffs).beta.approx(width)
            assert interval.width <= width
            assert sign(interval.lo) <= 0 <= sign(interval.hi), coeffs
        gamma = root_tau_context().beta
        assert embed(tau_context().beta, root_tau_context(), 2) == gamma ** 2
        return "three roots to 1e-12"

    def check_presentation(self):
        for relation in emit_presentation(1, 1, 3):
            assert evaluate_word(relation.left, LTR) == \
                evaluate_word(relation.right, LTR), str(relation)
        try:
            emit_presentation(2, 1, 3)
        except NotTreePairDefinableError as e:
            assert "a <= b" in str(e)
        else:
            raise AssertionError("2x^2 + x - 1 emitted a presentation")
        return "R1 and R2 hold for a = b = 1"
