"""Exact rational and polynomial arithmetic, and the number field Q(β).

Rationals are ``fractions.Fraction``; polynomial algebra (remainder, gcd,
inverse, Sturm chains) is delegated to sympy over QQ. Elements of Q(β) are
coefficient vectors in the power basis of β, and every comparison is decided
exactly at the isolated root: first by a rational interval enclosure, then
by a gcd zero test and Sturm refinement.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ovos_utils.log import LOG
from sympy import Poly, QQ, Rational, Symbol

from betaforge.exceptions import EndpointRootError, ContextMismatchError

BigRational = Fraction

X = Symbol("x")

# bisection levels at which the interval enclosure is tried before
# falling back to gcd and Sturm counting
ENCLOSURE_LEVELS = (0, 8, 16, 32, 48)


def to_rational(value):
    """Coerce ints, "num/den" strings and sympy/gmpy rationals to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    return Fraction(int(value.numerator), int(value.denominator))


def _sign(q):
    return (q > 0) - (q < 0)


class RatPoly:
    """Polynomial with rational coefficients, ascending degree.

    The zero polynomial has no coefficients and degree -1.
    """
    __slots__ = ("coeffs", "_sympy")

    def __init__(self, coeffs=()):
        coeffs = [to_rational(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self._sympy = None

    @classmethod
    def from_sympy(cls, poly):
        return cls(reversed(poly.all_coeffs()))

    @property
    def sympy(self):
        if self._sympy is None:
            dense = [Rational(c.numerator, c.denominator)
                     for c in reversed(self.coeffs)] or [0]
            self._sympy = Poly(dense, X, domain=QQ)
        return self._sympy

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return RatPoly.from_sympy(self.sympy + other.sympy)

    def __sub__(self, other):
        return RatPoly.from_sympy(self.sympy - other.sympy)

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __mul__(self, other):
        return RatPoly.from_sympy(self.sympy * other.sympy)

    def rem(self, other):
        return RatPoly.from_sympy(self.sympy.rem(other.sympy))

    def quo(self, other):
        return RatPoly.from_sympy(self.sympy.quo(other.sympy))

    def gcd(self, other):
        return RatPoly.from_sympy(self.sympy.gcd(other.sympy))

    def invert(self, modulus):
        """Inverse of self modulo ``modulus`` (they must be coprime)."""
        return RatPoly.from_sympy(self.sympy.invert(modulus.sympy))

    def derivative(self):
        return RatPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def substitute_power(self, k):
        """p(x) -> p(x^k)."""
        coeffs = [Fraction(0)] * (k * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            coeffs[k * i] = c
        return RatPoly(coeffs)

    def sturm(self):
        return _sturm_chain(self)

    def __repr__(self):
        return "RatPoly({})".format(self.sympy.as_expr())


@lru_cache(maxsize=4096)
def _sturm_chain(p):
    return tuple(RatPoly.from_sympy(q) for q in p.sympy.sturm())


def _sign_changes(chain, x):
    signs = [s for s in (_sign(q(x)) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p, lo, hi):
    """Number of distinct real roots of ``p`` in the open interval (lo, hi).

    Raises EndpointRootError when p vanishes at an endpoint; callers
    move the endpoint and retry.
    """
    lo, hi = to_rational(lo), to_rational(hi)
    if p.is_zero:
        raise ValueError("Sturm count of the zero polynomial")
    if lo >= hi:
        raise ValueError("empty interval ({}, {})".format(lo, hi))
    for endpoint in (lo, hi):
        if p(endpoint) == 0:
            raise EndpointRootError(endpoint)
    if p.degree == 0:
        return 0
    chain = p.sturm()
    return _sign_changes(chain, lo) - _sign_changes(chain, hi)


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def contains(self, q):
        return self.lo <= q <= self.hi

    def overlaps(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def __mul__(self, other):
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return RationalInterval(min(products), max(products))

    def __str__(self):
        return "[{:.12g}, {:.12g}]".format(float(self.lo), float(self.hi))


@dataclass(frozen=True)
class RootInterval(RationalInterval):
    """Open interval (lo, hi) isolating exactly one root of a polynomial."""

    def __post_init__(self):
        if not 0 <= self.lo < self.hi <= 1:
            raise ValueError("root interval must satisfy 0 <= lo < hi <= 1")


def bisect_root(p, interval):
    """Halve an isolating interval of ``p``, keeping the root inside."""
    lo, hi = interval.lo, interval.hi
    mid = interval.midpoint
    value = p(mid)
    if value == 0:
        quarter = interval.width / 4
        return RootInterval(mid - quarter, mid + quarter)
    if _sign(p(lo)) != _sign(p(hi)):
        if _sign(value) == _sign(p(lo)):
            return RootInterval(mid, hi)
        return RootInterval(lo, mid)
    if sturm_count(p, lo, mid):
        return RootInterval(lo, mid)
    return RootInterval(mid, hi)


def refine_interval(p, interval, width):
    """Bisect until the isolating interval is no wider than ``width``."""
    width = to_rational(width)
    while interval.width > width:
        interval = bisect_root(p, interval)
    return interval


def isolate_positive_root(p):
    """Isolating interval in (0, 1) for the positive root of a subdivision
    polynomial, which has exactly one positive real root."""
    interval = RootInterval(Fraction(0), Fraction(1))
    count = sturm_count(p, interval.lo, interval.hi)
    if count != 1:
        raise ValueError("{} has {} roots in (0, 1)".format(p, count))
    return interval


@lru_cache(maxsize=65536)
def _bisected(p, interval, level):
    if level == 0:
        return interval
    return bisect_root(p, _bisected(p, interval, level - 1))


def _enclose(coeffs, interval):
    """Rational interval containing sum(c_i x^i) for every x in interval."""
    lo = hi = Fraction(0)
    for c in reversed(coeffs):
        products = (lo * interval.lo, lo * interval.hi,
                    hi * interval.lo, hi * interval.hi)
        lo, hi = min(products) + c, max(products) + c
    return RationalInterval(lo, hi)


class RootContext:
    """The number field Q(β) presented by ``modulus`` and an interval that
    isolates β among its roots."""

    def __init__(self, modulus, root_interval, name=None):
        self.modulus = modulus
        self.root_interval = root_interval
        self.name = name or str(modulus.sympy.as_expr())

    @property
    def degree(self):
        return self.modulus.degree

    def interval_at(self, level):
        """Isolating interval after ``level`` bisections (cached)."""
        # warm the cache in steps so the recursion stays shallow
        for step in range(200, level, 200):
            _bisected(self.modulus, self.root_interval, step)
        return _bisected(self.modulus, self.root_interval, level)

    def isolating_interval(self, width):
        level = 0
        while self.interval_at(level).width > to_rational(width):
            level += 1
        return self.interval_at(level)

    def below_root(self, q):
        """True when the rational q lies strictly below β inside the
        isolating interval (the modulus keeps the sign it has at lo)."""
        value = self.modulus(q)
        return value != 0 and \
            _sign(value) == _sign(self.modulus(self.root_interval.lo))

    def element(self, coeffs):
        return FieldElem(self, coeffs)

    def rational(self, q):
        return FieldElem(self, [to_rational(q)])

    @property
    def zero(self):
        return FieldElem(self, [])

    @property
    def one(self):
        return FieldElem(self, [1])

    @property
    def beta(self):
        if self.degree == 1:
            # the root itself is rational
            c0, c1 = self.modulus.coeffs
            return FieldElem(self, [-c0 / c1])
        return FieldElem(self, [0, 1])

    def same_field(self, other):
        return self is other or (isinstance(other, RootContext) and
                                 self.modulus == other.modulus and
                                 self.root_interval == other.root_interval)

    def __eq__(self, other):
        if not isinstance(other, RootContext):
            return NotImplemented
        return self.same_field(other)

    def __hash__(self):
        return hash((self.modulus, self.root_interval))

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.name)


class FieldElem:
    """Exact element of Q(β): rational coordinates in the power basis
    1, β, ..., β^(n-1), already reduced modulo the context polynomial."""
    __slots__ = ("context", "coeffs")

    def __init__(self, context, coeffs):
        coeffs = [to_rational(c) for c in coeffs]
        n = context.degree
        if len(coeffs) > n:
            coeffs = list(RatPoly(coeffs).rem(context.modulus).coeffs)
        coeffs += [Fraction(0)] * (n - len(coeffs))
        self.context = context
        self.coeffs = tuple(coeffs)

    @property
    def poly(self):
        return RatPoly(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if not self.context.same_field(other.context):
                raise ContextMismatchError(
                    "{} and {}".format(self.context, other.context))
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.context, [other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElem(self.context,
                         [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.context, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FieldElem(self.context,
                         [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.context, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.context.degree == 1:
            return FieldElem(self.context, [self.coeffs[0] * other.coeffs[0]])
        product = (self.poly * other.poly).rem(self.context.modulus)
        return FieldElem(self.context, product.coeffs)

    __rmul__ = __mul__

    def inverse(self):
        if self.context.degree == 1:
            if self.coeffs[0] == 0:
                raise ZeroDivisionError("inverse of zero")
            return FieldElem(self.context, [1 / self.coeffs[0]])
        if sign_at_root(self) == 0:
            raise ZeroDivisionError("inverse of zero in " + self.context.name)
        # β is a root of the cofactor, so an inverse modulo it is an
        # inverse at β even when the modulus is reducible
        modulus = self.context.modulus
        cofactor = modulus.quo(self.poly.gcd(modulus))
        inverse = self.poly.rem(cofactor).invert(cofactor)
        return FieldElem(self.context, inverse.coeffs)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.context,
                             [c / Fraction(other) for c in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** -k
        result = self.context.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self):
        return sign_at_root(self) == 0

    def sign(self):
        return sign_at_root(self)

    def compare(self, other):
        other = self._coerce(other)
        return sign_at_root(self - other)

    def __eq__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self.compare(other) == 0

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def approx(self, width):
        return approx(self, width)

    def __float__(self):
        return float(approx(self, Fraction(1, 10 ** 15)).midpoint)

    def __repr__(self):
        return "FieldElem([{}] @ {})".format(
            ", ".join(str(c) for c in self.coeffs), self.context.name)

    def __str__(self):
        return "{:.10g}".format(float(self))


def add(x, y):
    return x + y


def subtract(x, y):
    return x - y


def multiply(x, y):
    return x * y


def _nudged_endpoints(p, context, interval):
    """Move interval endpoints that are roots of p towards β, halving the
    step on every retry, until neither endpoint is a root."""
    lo, hi = interval.lo, interval.hi
    step = interval.width / 4
    while p(lo) == 0:
        candidate = lo + step
        if p(candidate) != 0 and context.below_root(candidate):
            LOG.debug("nudged lower endpoint {} -> {}".format(lo, candidate))
            lo = candidate
        step /= 2
    step = interval.width / 4
    while p(hi) == 0:
        candidate = hi - step
        if p(candidate) != 0 and not context.below_root(candidate) and \
                context.modulus(candidate) != 0:
            LOG.debug("nudged upper endpoint {} -> {}".format(hi, candidate))
            hi = candidate
        step /= 2
    return lo, hi


def sign_at_root(d):
    """Sign of the real number d(β): -1, 0 or +1."""
    if not any(d.coeffs):
        return 0
    context = d.context
    for level in ENCLOSURE_LEVELS:
        enclosure = _enclose(d.coeffs, context.interval_at(level))
        if enclosure.lo > 0:
            return 1
        if enclosure.hi < 0:
            return -1
    p = d.poly
    common = p.gcd(context.modulus)
    if common.degree >= 1:
        interval = context.root_interval
        if sturm_count(common, interval.lo, interval.hi) > 0:
            return 0
    level = 0
    while True:
        lo, hi = _nudged_endpoints(p, context, context.interval_at(level))
        if sturm_count(p, lo, hi) == 0:
            LOG.debug("sign settled by Sturm at level {}".format(level))
            return _sign(p((lo + hi) / 2))
        level += 1


def approx(x, width):
    """Rational interval of width <= ``width`` containing x(β)."""
    width = to_rational(width)
    if width <= 0:
        raise ValueError("width must be positive")
    level = 0
    while True:
        enclosure = _enclose(x.coeffs, x.context.interval_at(level))
        if enclosure.width <= width:
            return enclosure
        level += 1
