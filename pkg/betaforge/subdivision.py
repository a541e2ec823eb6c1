"""Subdivision polynomials a_n x^n + ... + a_1 x - 1 and their contexts."""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ovos_utils.log import LOG
from sympy import Poly, Symbol, divisors, expand, rem, symbols, sympify
from sympy.core.sympify import SympifyError
from sympy.polys.polyerrors import PolynomialError
from sympy.utilities.iterables import multiset_permutations

from betaforge.configuration import CONFIGURATION
from betaforge.exactnum import RatPoly, RootContext, isolate_positive_root
from betaforge.exceptions import AllZeroCoefficientsError, \
    CaretEnumerationError, InvalidPolynomialError, NegativeCoefficientError, \
    TrivialPolynomialError


def _term(coefficient, power, var="x"):
    if power == 0:
        return str(coefficient)
    monomial = var if power == 1 else "{}^{}".format(var, power)
    return monomial if coefficient == 1 else "{}{}".format(coefficient,
                                                            monomial)


@dataclass(frozen=True)
class SubdivisionPolynomial:
    """a_n x^n + ... + a_1 x - 1; ``coeffs`` holds a_1 .. a_n."""
    coeffs: tuple

    @property
    def degree(self):
        return len(self.coeffs)

    @property
    def leading(self):
        return self.coeffs[-1]

    @property
    def ratpoly(self):
        return RatPoly((-1,) + self.coeffs)

    def __call__(self, x):
        return self.ratpoly(x)

    def exponents(self):
        return [i for i, a in enumerate(self.coeffs, 1) if a]

    def substitute_power(self, k):
        """P(x) -> P(x^k)."""
        coeffs = [0] * (k * self.degree)
        for i, a in enumerate(self.coeffs, 1):
            coeffs[k * i - 1] = a
        return SubdivisionPolynomial(tuple(coeffs))

    def describe(self):
        terms = [_term(a, i) for i, a in reversed(list(enumerate(
            self.coeffs, 1))) if a]
        return " + ".join(terms) + " - 1"

    def __str__(self):
        return self.describe()


def parse_coefficients(values):
    """Integers a_1 .. a_n from ints or decimal strings."""
    try:
        return tuple(int(v) for v in values)
    except (TypeError, ValueError):
        raise InvalidPolynomialError(
            "coefficients must be integers: {}".format(list(values)))


class BetaContext(RootContext):
    """A validated subdivision polynomial, an interval isolating its root
    β in (0, 1), and the reciprocal relation for λ = 1/β."""

    def __init__(self, poly, root_interval):
        super().__init__(poly.ratpoly, root_interval, name=poly.describe())
        self.poly = poly
        self.reciprocal_relation = reciprocal_relation(poly)

    @property
    def coeffs(self):
        return self.poly.coeffs

    def legs(self):
        """Leg multiset: a_i legs of length i, ascending."""
        return [i for i, a in enumerate(self.poly.coeffs, 1)
                for _ in range(a)]

    def describe_reciprocal(self):
        n = self.poly.degree
        terms = [_term(r, n - j, "λ")
                 for j, r in enumerate(self.reciprocal_relation, 1) if r]
        return "{} = {}".format(_term(1, n, "λ"), " + ".join(terms) or "0")


def reciprocal_relation(poly):
    """Dividing P(β) = 0 by β^n gives λ^n = a_1 λ^(n-1) + ... + a_n.

    Returns the coefficients of λ^(n-1), ..., λ, 1.
    """
    n = poly.degree
    relation = [0] * n
    for i, a in enumerate(poly.coeffs, 1):
        # a_i β^i / β^n = a_i λ^(n-i)
        relation[i - 1] = a
    return tuple(relation)


def validate_subdivision(coeffs):
    """Check a_1 .. a_n and build the BetaContext of the polynomial."""
    coeffs = list(parse_coefficients(coeffs))
    if any(a < 0 for a in coeffs):
        raise NegativeCoefficientError(
            "negative coefficient in {}".format(coeffs))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise AllZeroCoefficientsError("all coefficients are zero")
    if sum(coeffs) == 1:
        # a single coefficient equal to one: the root is 1 itself
        raise TrivialPolynomialError(
            "{} is trivial, its root is 1".format(
                SubdivisionPolynomial(tuple(coeffs))))
    poly = SubdivisionPolynomial(tuple(coeffs))
    context = BetaContext(poly, isolate_positive_root(poly.ratpoly))
    LOG.debug("context {} root in {}".format(poly, context.root_interval))
    return context


@dataclass(frozen=True)
class CaretShape:
    """Ordered leg lengths of one caret."""
    legs: tuple

    def __len__(self):
        return len(self.legs)

    def __iter__(self):
        return iter(self.legs)

    def scaled(self, k):
        return CaretShape(tuple(leg * k for leg in self.legs))

    def __str__(self):
        return "(" + ",".join(str(leg) for leg in self.legs) + ")"


def multinomial(coeffs):
    """(Σ a_i)! / Π a_i!"""
    count = math.factorial(sum(coeffs))
    for a in coeffs:
        count //= math.factorial(a)
    return count


def enumerate_carets(context, cap=None):
    """Every ordering of the context's leg multiset, lexicographically."""
    cap = cap or CONFIGURATION["enumeration_cap"]
    count = multinomial(context.poly.coeffs)
    if count > cap:
        raise CaretEnumerationError(
            "{} has {} caret shapes, above the cap of {}".format(
                context.poly, count, cap))
    return tuple(CaretShape(tuple(legs))
                 for legs in multiset_permutations(context.legs()))


def caret_identity(context, shape):
    """Σ β^leg == 1, exactly."""
    total = context.zero
    for leg in shape.legs:
        total = total + context.beta ** leg
    return total == 1


def quadratic_tree_pair_defined(a, b):
    """Whether ax^2 + bx - 1 has a well defined tree pair representation:
    exactly when a <= b."""
    if a < 1 or b < 0:
        raise InvalidPolynomialError(
            "need a >= 1 and b >= 0, got a={} b={}".format(a, b))
    if (a, b) == (1, 0):
        raise TrivialPolynomialError("x^2 - 1 is trivial")
    return a <= b


def exponent_gcd(poly):
    """k = gcd of the exponents carrying a nonzero coefficient, and the base
    polynomial Q with P(x) = Q(x^k)."""
    k = 0
    for i in poly.exponents():
        k = math.gcd(k, i)
    base = tuple(poly.coeffs[i - 1] for i in range(k, poly.degree + 1, k))
    return k, SubdivisionPolynomial(base)


def rational_root(poly):
    """1/n when the positive root is rational, else None.

    A rational root u/v has u | 1 and v | a_n, so only 1/v for the positive
    divisors v of the leading coefficient can occur.
    """
    for v in divisors(poly.leading):
        candidate = Fraction(1, int(v))
        if poly(candidate) == 0:
            return candidate
    return None


@dataclass(frozen=True)
class SqrtReport:
    a: int
    b: int
    constant_equation: str
    beta_equation: str
    rational_solutions: tuple
    trace: tuple

    @property
    def excluded(self):
        return not self.rational_solutions

    def __str__(self):
        verdict = "no solution" if self.excluded else "solvable"
        return "\n".join(self.trace + (verdict,))


def sqrt_membership_quadratic(a, b):
    """Decide whether sqrt(β) = c + dβ has rational solutions, β the root
    of ax^2 + bx - 1."""
    if a < 1 or b < 0 or (a, b) == (1, 0):
        raise InvalidPolynomialError(
            "{}x^2 + {}x - 1 is not a valid quadratic".format(a, b))
    c, d, beta = symbols("c d beta")
    residue = expand(rem(expand((c + d * beta) ** 2 - beta),
                         a * beta ** 2 + b * beta - 1, beta))
    constant = residue.coeff(beta, 0)
    linear = residue.coeff(beta, 1)
    trace = ["beta^2 = 1/{a} - ({b}/{a}) beta".format(a=a, b=b),
             "(c + d beta)^2 - beta = ({}) + ({}) beta".format(constant,
                                                              linear),
             "constant: {} = 0".format(constant),
             "beta coefficient: {} = 0".format(linear)]

    squares = Poly(constant, c, d)
    weighted_squares = all(w > 0 for w in squares.coeffs()) and \
        all(e % 2 == 0 for m in squares.monoms() for e in m)
    if not weighted_squares:
        # unreachable for a > 0
        trace.append("constant equation is not a positive sum of squares")
        return SqrtReport(a, b, str(constant), str(linear),
                          (("undecided",),), tuple(trace))
    trace.append("constant equation is a positive combination of squares, "
                 "so over the rationals c = d = 0")
    at_origin = linear.subs({c: 0, d: 0})
    trace.append("beta equation at c = d = 0 reads {} = 0".format(at_origin))
    solutions = () if at_origin != 0 else ((0, 0),)
    return SqrtReport(a, b, str(constant), str(linear), solutions,
                      tuple(trace))


@dataclass(frozen=True)
class EvenRootReport:
    a: int
    b: int
    n: int
    sqrt_report: SqrtReport
    trace: tuple

    @property
    def excluded(self):
        return self.sqrt_report.excluded


def even_root_exclusion(a, b, n):
    """The 2n-th root of β is not in Z[β]: its n-th power would be sqrt(β),
    and Z[β] is closed under multiplication."""
    if n < 1:
        raise ValueError("n must be positive")
    report = sqrt_membership_quadratic(a, b)
    trace = ("if beta^(1/{0}) were in Z[beta], so would "
             "(beta^(1/{0}))^{1} = sqrt(beta)".format(2 * n, n),
             "sqrt(beta) in Z[beta]: " +
             ("excluded" if report.excluded else "not excluded"))
    return EvenRootReport(a, b, n, report, trace)


DYADIC = (2,)
TAU = (1, 1)
ROOT_TAU = (0, 1, 0, 1)


@lru_cache(maxsize=None)
def context_of(coeffs):
    """Cached context for a coefficient tuple, shared by generators and
    fixtures so values built separately live in the same field object."""
    return validate_subdivision(coeffs)


def context_from_string(text):
    """'1 1', '1,1' or 'x^2+x-1' style coefficient input."""
    text = text.strip()
    if "x" in text:
        try:
            poly = Poly(sympify(text.replace("^", "**")), Symbol("x"))
        except (SympifyError, PolynomialError) as e:
            raise InvalidPolynomialError("cannot parse {!r}: {}".format(text, e))
        if not all(c.is_integer for c in poly.all_coeffs()):
            raise InvalidPolynomialError(
                "coefficients of {} must be integers".format(text))
        coeffs = [int(c) for c in reversed(poly.all_coeffs())]
        if coeffs[0] != -1:
            raise InvalidPolynomialError(
                "constant term of {} must be -1".format(text))
        return context_of(tuple(coeffs[1:]))
    return context_of(parse_coefficients(text.replace(",", " ").split()))


def embed(value, context, k):
    """Image of an element of Q(β) in Q(γ) for γ^k = β."""
    coeffs = [0] * context.degree
    for i, c in enumerate(value.coeffs):
        coeffs[k * i] = c
    return context.element(coeffs)
