"""Multiplication by λ = 1/β as a nonnegative integer matrix, and
certificates deciding whether a ring element can be written with
nonnegative coefficients in powers of λ.

Vectors are integer coordinates in the descending basis
(λ^(n-1), ..., λ, 1).
"""
from dataclasses import dataclass, field

from ovos_utils.log import LOG

from betaforge.configuration import get_max_n
from betaforge.exceptions import DimensionMismatchError, NoCycleError

WITNESS = "witness"
IMPOSSIBLE = "impossible"
INCONCLUSIVE = "inconclusive"


class SubstitutionMatrix:
    """n x n nonnegative integer matrix of multiplication by λ."""

    def __init__(self, context, rows):
        self.context = context
        self.rows = tuple(tuple(int(e) for e in row) for row in rows)

    @property
    def dim(self):
        return len(self.rows)

    @property
    def pattern(self):
        return boolean_pattern(self.rows)

    def __eq__(self, other):
        if isinstance(other, SubstitutionMatrix):
            return self.rows == other.rows
        return self.rows == tuple(tuple(row) for row in other)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "SubstitutionMatrix({})".format(
            [list(row) for row in self.rows])


def _rows(matrix):
    return matrix.rows if isinstance(matrix, SubstitutionMatrix) else matrix


def build_matrix(ctx):
    """Column j is λ times the j-th basis vector, reduced by
    λ^n = a_1 λ^(n-1) + ... + a_n."""
    n = ctx.poly.degree
    rows = [[0] * n for _ in range(n)]
    # λ * λ^(n-1) = λ^n: the reciprocal relation fills column 0
    for i, r in enumerate(ctx.reciprocal_relation):
        rows[i][0] = r
    # λ * λ^k = λ^(k+1) for k < n-1 shifts every other column up one row
    for i in range(n - 1):
        rows[i][i + 1] = 1
    return SubstitutionMatrix(ctx, rows)


def apply(matrix, vector):
    rows = _rows(matrix)
    if len(vector) != len(rows):
        raise DimensionMismatchError(
            "vector of length {} for a {}x{} matrix".format(
                len(vector), len(rows), len(rows)))
    return tuple(sum(a * int(v) for a, v in zip(row, vector))
                 for row in rows)


def _multiply(left, right):
    columns = list(zip(*right))
    return tuple(tuple(sum(a * b for a, b in zip(row, column))
                       for column in columns) for row in left)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matrix_power(matrix, power):
    """A^power by repeated squaring, as a tuple of rows."""
    if power < 0:
        raise ValueError("power must be nonnegative")
    rows = _rows(matrix)
    result = identity(len(rows))
    base = rows
    while power:
        if power & 1:
            result = _multiply(result, base)
        base = _multiply(base, base)
        power >>= 1
    return result


def boolean_pattern(rows):
    return tuple(tuple(e != 0 for e in row) for row in rows)


def boolean_multiply(left, right):
    columns = list(zip(*right))
    return tuple(tuple(any(a and b for a, b in zip(row, column))
                       for column in columns) for row in left)


def boolean_support(pattern, support):
    """Support of A x for a nonnegative x with the given support."""
    return frozenset(i for i, row in enumerate(pattern)
                     if any(row[j] for j in support))


@dataclass(frozen=True)
class Cycle:
    start: int
    period: int
    patterns: tuple = field(default=(), compare=False)


def boolean_cycle(matrix, max_n=None):
    """First repetition in the zero patterns of A^0, A^1, ...

    Nonnegative matrices never cancel, so pattern(A^(m+1)) is the boolean
    product pattern(A^m) * pattern(A); one repeat makes the cycle permanent.
    """
    max_n = max_n or get_max_n()
    step = boolean_pattern(_rows(matrix))
    current = boolean_pattern(identity(len(step)))
    seen = {current: 0}
    patterns = [current]
    for n in range(1, max_n + 1):
        current = boolean_multiply(current, step)
        if current in seen:
            start = seen[current]
            LOG.debug("boolean cycle start {} period {}".format(
                start, n - start))
            return Cycle(start, n - start, tuple(patterns[start:]))
        seen[current] = n
        patterns.append(current)
    raise NoCycleError("no repeated pattern within {} powers".format(max_n))


@dataclass(frozen=True)
class Certificate:
    """Outcome of decide_nonneg.

    witness: ``vector`` = A^n p, entrywise nonnegative.
    impossible: splitting v_M = A^M p (M = ``split_index``) into positive and
    negative parts, the support pair of A^k v_M^+ and A^k v_M^- enters a
    cycle at N = ``cycle_start`` of length ``period``; ``patterns`` holds the
    (positive, negative) supports over one period.
    inconclusive: neither within ``bound`` iterations.
    """
    kind: str
    n: int = None
    vector: tuple = None
    split_index: int = None
    cycle_start: int = None
    period: int = None
    patterns: tuple = ()
    bound: int = None

    @classmethod
    def witness(cls, n, vector):
        return cls(WITNESS, n=n, vector=tuple(vector))

    @classmethod
    def impossible(cls, split_index, cycle_start, period, patterns):
        return cls(IMPOSSIBLE, split_index=split_index,
                   cycle_start=cycle_start, period=period,
                   patterns=tuple(patterns))

    @classmethod
    def inconclusive(cls, bound):
        return cls(INCONCLUSIVE, bound=bound)

    def sign_patterns(self):
        """Per cycle step, '+', '-' or '0' for each coordinate."""
        signs = []
        for positive, negative in self.patterns:
            dim = max(positive | negative, default=-1) + 1
            signs.append(tuple("+" if i in positive else
                               "-" if i in negative else "0"
                               for i in range(dim)))
        return tuple(signs)


def _split(vector):
    positive = frozenset(i for i, v in enumerate(vector) if v > 0)
    negative = frozenset(i for i, v in enumerate(vector) if v < 0)
    return positive, negative


def _support_states(pattern, vector, steps):
    """Support pairs of A^k v^+ and A^k v^- for k = 0 .. steps."""
    state = _split(vector)
    states = [state]
    for _ in range(steps):
        state = (boolean_support(pattern, state[0]),
                 boolean_support(pattern, state[1]))
        states.append(state)
    return states


def _persistent(state):
    positive, negative = state
    return bool(negative) and not (positive & negative)


def _support_cycle(pattern, vector, max_n):
    """(offset, period, states) of the first repeated support pair, or
    None when no repeat appears within max_n steps."""
    state = _split(vector)
    seen = {state: 0}
    states = [state]
    for k in range(1, max_n + 1):
        state = (boolean_support(pattern, state[0]),
                 boolean_support(pattern, state[1]))
        if state in seen:
            return seen[state], k - seen[state], states
        seen[state] = k
        states.append(state)
    return None


def _check_length(ctx, vector):
    if len(vector) != ctx.poly.degree:
        raise DimensionMismatchError(
            "vector of length {} in a degree {} context".format(
                len(vector), ctx.poly.degree))


def decide_nonneg(ctx, p, max_n=None, matrix=None):
    """Witness, impossibility proof or inconclusive bound for writing p as
    a nonnegative combination of powers of λ."""
    max_n = max_n or get_max_n()
    matrix = matrix or build_matrix(ctx)
    p = tuple(int(v) for v in p)
    _check_length(ctx, p)
    if not any(p):
        raise ValueError("p must be nonzero")

    iterates = []
    vector = p
    for n in range(max_n + 1):
        if all(v >= 0 for v in vector):
            LOG.debug("witness at N={}".format(n))
            return Certificate.witness(n, vector)
        iterates.append(vector)
        vector = apply(matrix, vector)

    pattern = matrix.pattern
    for split_index, vector in enumerate(iterates):
        found = _support_cycle(pattern, vector, max_n)
        if found is None:
            continue
        offset, period, states = found
        if all(_persistent(state) for state in states):
            LOG.debug("impossible: split at {} cycle at {} period {}".format(
                split_index, split_index + offset, period))
            return Certificate.impossible(
                split_index, split_index + offset, period,
                states[offset:offset + period])
    LOG.info("no certificate within {} iterations".format(max_n))
    return Certificate.inconclusive(max_n)


def verify_certificate(ctx, p, cert, matrix=None):
    """Recheck a certificate from scratch; False on any mismatch."""
    matrix = matrix or build_matrix(ctx)
    try:
        p = tuple(int(v) for v in p)
        _check_length(ctx, p)
    except (DimensionMismatchError, TypeError, ValueError):
        return False

    if cert.kind == WITNESS:
        if cert.n is None or cert.n < 0 or cert.vector is None:
            return False
        vector = apply(matrix_power(matrix, cert.n), p)
        return vector == tuple(cert.vector) and all(v >= 0 for v in vector)

    if cert.kind == INCONCLUSIVE:
        if not cert.bound or cert.bound < 1:
            return False
        vector = p
        for _ in range(cert.bound + 1):
            if all(v >= 0 for v in vector):
                return False
            vector = apply(matrix, vector)
        return True

    if cert.kind != IMPOSSIBLE:
        return False
    m, start, period = cert.split_index, cert.cycle_start, cert.period
    if None in (m, start, period) or not 0 <= m <= start or period < 1 or \
            len(cert.patterns) != period:
        return False
    # before the split every iterate already has a negative entry
    vector = p
    for _ in range(m):
        if all(v >= 0 for v in vector):
            return False
        vector = apply(matrix, vector)
    pattern = matrix.pattern
    states = _support_states(pattern, vector, start - m + period)
    if states[-1] != states[start - m]:
        return False
    cycle = [(frozenset(pos), frozenset(neg)) for pos, neg in cert.patterns]
    if cycle != states[start - m:start - m + period]:
        return False
    if not all(_persistent(state) for state in states):
        return False
    # the boolean powers are the zero patterns of the integer powers
    power = identity(len(pattern))
    for _ in range(start + period):
        following = _multiply(power, matrix.rows)
        if boolean_pattern(following) != \
                boolean_multiply(boolean_pattern(power), pattern):
            return False
        power = following
    return True


def reciprocal_root_vector(ctx):
    """Coordinates of a_n (1 - β): since a_n β = λ^(n-1) - a_1 λ^(n-2) -
    ... - a_(n-1), this is (-1, a_1, ..., a_(n-2), a_(n-1) + a_n)."""
    coeffs = ctx.poly.coeffs
    vector = [-1] + list(coeffs[:-1])
    vector[-1] += coeffs[-1]
    return tuple(vector)


def vector_value(ctx, vector):
    """Exact value Σ v_k λ^k of a descending-basis vector."""
    _check_length(ctx, vector)
    lam = ctx.beta ** -1
    value = ctx.zero
    for v in vector:
        value = value * lam + int(v)
    return value
