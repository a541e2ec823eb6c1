"""Caret trees and tree pair diagrams.

A caret with legs (l_1, ..., l_m) cuts a cell of length β^d into cells of
length β^(d + l_1), ..., β^(d + l_m). Trees are immutable, so subtrees are
shared freely between pairs.
"""
import random
from collections import deque
from dataclasses import dataclass
from itertools import product

from ovos_utils.log import LOG

from betaforge.configuration import CONFIGURATION
from betaforge.exceptions import IndivisibleLegError, \
    NoCommonRefinementError, RefinementBudgetError, UnrepresentableError
from betaforge.plmaps import Partition, PartitionPair, from_partition_pair
from betaforge.subdivision import CaretShape, context_of, enumerate_carets, \
    exponent_gcd


@dataclass(frozen=True)
class Leaf:

    def __repr__(self):
        return "L"


LEAF = Leaf()


@dataclass(frozen=True)
class Node:
    shape: CaretShape
    children: tuple

    def __post_init__(self):
        if len(self.children) != len(self.shape):
            raise ValueError("caret {} needs {} children, got {}".format(
                self.shape, len(self.shape), len(self.children)))

    def __repr__(self):
        return "{}[{}]".format(self.shape, ", ".join(
            repr(c) for c in self.children))


def caret(legs, *children):
    """caret((2, 1)) is an exposed caret, caret((2, 1), LEAF, subtree)
    attaches subtrees to its legs."""
    shape = legs if isinstance(legs, CaretShape) else CaretShape(tuple(legs))
    return Node(shape, tuple(children) or (LEAF,) * len(shape))


def leaf_count(tree):
    if isinstance(tree, Leaf):
        return 1
    return sum(leaf_count(c) for c in tree.children)


def caret_count(tree):
    if isinstance(tree, Leaf):
        return 0
    return 1 + sum(caret_count(c) for c in tree.children)


def leaf_depths(tree, depth=0):
    """Left to right leaf depths; a leaf's depth is the sum of the legs on
    its root path."""
    if isinstance(tree, Leaf):
        return (depth,)
    depths = ()
    for leg, child in zip(tree.shape, tree.children):
        depths += leaf_depths(child, depth + leg)
    return depths


def tree_to_partition(tree, context):
    """Leaf cells of length β^depth laid out left to right."""
    beta = context.beta
    return Partition.from_lengths(context, [beta ** d
                                            for d in leaf_depths(tree)])


def graft(tree, index, shape):
    """Replace leaf ``index`` by an exposed caret."""
    if isinstance(tree, Leaf):
        if index != 0:
            raise IndexError("leaf index out of range")
        return caret(shape)
    children = list(tree.children)
    for i, child in enumerate(children):
        count = leaf_count(child)
        if index < count:
            children[i] = graft(child, index, shape)
            return Node(tree.shape, tuple(children))
        index -= count
    raise IndexError("leaf index out of range")


def exposed_carets(tree, offset=0):
    """{first leaf index: shape} for carets whose legs are all leaves."""
    if isinstance(tree, Leaf):
        return {}
    if all(isinstance(c, Leaf) for c in tree.children):
        return {offset: tree.shape}
    found = {}
    for child in tree.children:
        found.update(exposed_carets(child, offset))
        offset += leaf_count(child)
    return found


def collapse(tree, index):
    """Replace the exposed caret starting at leaf ``index`` by a leaf."""
    if isinstance(tree, Leaf):
        raise IndexError("no exposed caret at leaf {}".format(index))
    if index == 0 and all(isinstance(c, Leaf) for c in tree.children):
        return LEAF
    children = list(tree.children)
    for i, child in enumerate(children):
        count = leaf_count(child)
        if index < count:
            children[i] = collapse(child, index)
            return Node(tree.shape, tuple(children))
        index -= count
    raise IndexError("no exposed caret at leaf {}".format(index))


def preorder(tree):
    yield tree
    if isinstance(tree, Node):
        for child in tree.children:
            yield from preorder(child)


def scale_legs(tree, factor=1, divisor=1):
    """Multiply every leg by ``factor`` and divide it by ``divisor``,
    keeping the caret adjacency."""
    if isinstance(tree, Leaf):
        return tree
    legs = []
    for leg in tree.shape.legs:
        if (leg * factor) % divisor:
            raise IndivisibleLegError(
                "leg {} is not divisible by {}".format(leg, divisor))
        legs.append(leg * factor // divisor)
    return Node(CaretShape(tuple(legs)),
                tuple(scale_legs(c, factor, divisor) for c in tree.children))


def _inside(points, lo, hi):
    return [b for b in points if lo < b < hi]


def partition_to_tree(partition, depth_bound=None):
    """Fewest-leaves caret tree whose leaf partition contains every
    breakpoint of ``partition``.

    Carets whose inner boundaries are all target breakpoints are tried
    before carets that only refine; shapes go in lexicographic order.
    """
    depth_bound = depth_bound or CONFIGURATION["treepairs"]["depth_bound"]
    context = partition.context
    shapes = enumerate_carets(context)
    targets = partition.interior
    beta = context.beta
    memo = {}

    def build(lo, depth):
        key = (lo.coeffs, depth)
        if key in memo:
            return memo[key]
        hi = lo + beta ** depth
        inside = _inside(targets, lo, hi)
        if not inside:
            result = (LEAF, 1, None)
        elif depth >= depth_bound:
            result = (None, None, inside[0])
        else:
            result = _best(lo, depth, inside)
        memo[key] = result
        return result

    def _best(lo, depth, inside):
        exact, refining = [], []
        for shape in shapes:
            bounds, point = [], lo
            for leg in shape.legs[:-1]:
                point = point + beta ** (depth + leg)
                bounds.append(point)
            if all(any(b == t for t in inside) for b in bounds):
                exact.append(shape)
            else:
                refining.append(shape)
        offending = None
        for group in (exact, refining):
            best = None
            for shape in group:
                children, leaves, point = [], 0, lo
                for leg in shape.legs:
                    child, count, bad = build(point, depth + leg)
                    if child is None:
                        if offending is None:
                            offending = bad
                        break
                    children.append(child)
                    leaves += count
                    point = point + beta ** (depth + leg)
                else:
                    if best is None or leaves < best[1]:
                        best = (Node(shape, tuple(children)), leaves, None)
            if best is not None:
                return best
        return None, None, offending

    tree, _, offending = build(context.zero, 0)
    if tree is None:
        raise UnrepresentableError(
            "no caret tree within depth {} realizes breakpoint {}".format(
                depth_bound, offending), breakpoint=offending)
    LOG.debug("partition of {} cells realized by {} leaves".format(
        len(partition), leaf_count(tree)))
    return tree


def enumerate_trees(context, depth_bound):
    """Every caret tree with all leaves at depth <= depth_bound."""
    shapes = enumerate_carets(context)
    by_budget = {}

    def trees(budget):
        if budget not in by_budget:
            found = [LEAF]
            for shape in shapes:
                if max(shape.legs) > budget:
                    continue
                options = [trees(budget - leg) for leg in shape.legs]
                found.extend(Node(shape, children)
                             for children in product(*options))
            by_budget[budget] = found
        return by_budget[budget]

    return trees(depth_bound)


@dataclass(frozen=True)
class TreePair:
    """The i-th leaf cell of ``left`` maps linearly onto the i-th leaf cell
    of ``right``."""
    left: object
    right: object
    context: object

    def __post_init__(self):
        if leaf_count(self.left) != leaf_count(self.right):
            raise ValueError("trees have {} and {} leaves".format(
                leaf_count(self.left), leaf_count(self.right)))

    @classmethod
    def identity(cls, context):
        return cls(LEAF, LEAF, context)

    def depth_key(self):
        return leaf_depths(self.left), leaf_depths(self.right)

    def add_caret(self, index, shape):
        """Graft the same caret at leaf ``index`` of both trees."""
        return TreePair(graft(self.left, index, shape),
                        graft(self.right, index, shape), self.context)

    def inverse(self):
        return TreePair(self.right, self.left, self.context)

    def is_identity(self):
        """Equal leaf-depth sequences cut [0, 1] into the same cells."""
        return leaf_depths(self.left) == leaf_depths(self.right)

    def __repr__(self):
        return "TreePair({!r}, {!r})".format(self.left, self.right)


def treepair_to_plmap(pair):
    return from_partition_pair(PartitionPair(
        tree_to_partition(pair.left, pair.context),
        tree_to_partition(pair.right, pair.context)))


def reduce(pair):
    """Drop matching exposed carets at the same leaf position until none
    are left."""
    while True:
        left = exposed_carets(pair.left)
        right = exposed_carets(pair.right)
        common = sorted(i for i, shape in left.items()
                        if right.get(i) == shape)
        if not common:
            return pair
        index = common[0]
        pair = TreePair(collapse(pair.left, index),
                        collapse(pair.right, index), pair.context)


def _merge_runs(key, shapes):
    """Merge aligned runs d + shape in the left depths and e + shape in
    the right depths into single cells d and e, leftmost first."""
    left, right = list(key[0]), list(key[1])
    merged = True
    while merged:
        merged = False
        for i in range(len(left)):
            for shape in shapes:
                m = len(shape)
                if i + m > len(left):
                    continue
                d = left[i] - shape.legs[0]
                e = right[i] - shape.legs[0]
                if d < 0 or e < 0:
                    continue
                if all(left[i + j] == d + leg and right[i + j] == e + leg
                       for j, leg in enumerate(shape.legs)):
                    left[i:i + m] = [d]
                    right[i:i + m] = [e]
                    merged = True
                    break
            if merged:
                break
    return tuple(left), tuple(right)


def reduced_key(pair):
    """Leaf-depth sequences of the reduced pair with caret relations
    applied. Equal keys mean equal maps; the converse can fail when
    several merge orders exist."""
    return _merge_runs(reduce(pair).depth_key(),
                       enumerate_carets(pair.context))


def equivalent(first, second, budget=None):
    """Whether both pairs describe the same map.

    Equal reduced keys settle it directly. Otherwise the right trees are
    refined to a common tree; the pairs agree exactly when the outer
    trees then carry the same leaf depths.
    """
    if not first.context.same_field(second.context):
        return False
    if reduced_key(first) == reduced_key(second):
        return True
    try:
        return compose_pairs(first, second.inverse(),
                             budget=budget).is_identity()
    except (RefinementBudgetError, NoCommonRefinementError) as e:
        LOG.warning("no common refinement, comparing maps: {}".format(e))
        return treepair_to_plmap(first) == treepair_to_plmap(second)


def compose_pairs(first, second, budget=None):
    """Add carets to both pairs until the right tree of ``first`` and the
    left tree of ``second`` cut [0, 1] the same way, then pair the outer
    trees. Breadth first over caret insertions."""
    budget = budget or CONFIGURATION["treepairs"]["refinement_budget"]
    context = first.context
    shapes = enumerate_carets(context)
    widest = max(max(s.legs) for s in shapes)
    depth_cap = max(first.depth_key()[0] + first.depth_key()[1] +
                    second.depth_key()[0] + second.depth_key()[1]) \
        + 4 * widest

    queue = deque([(first, second)])
    visited = {(leaf_depths(first.right), leaf_depths(second.left))}
    expansions = 0
    while queue:
        a, b = queue.popleft()
        middle, other = leaf_depths(a.right), leaf_depths(b.left)
        mismatch = next((i for i, (x, y) in enumerate(zip(middle, other))
                         if x != y), None)
        if mismatch is None and len(middle) == len(other):
            LOG.debug("common refinement after {} expansions".format(
                expansions))
            return TreePair(a.left, b.right, context)
        expansions += 1
        if expansions > budget:
            raise RefinementBudgetError(
                "no common refinement within {} insertions".format(budget))
        if mismatch is None:
            mismatch = min(len(middle), len(other))
        for shape in shapes:
            if middle[mismatch] < other[mismatch]:
                candidate = (a.add_caret(mismatch, shape), b)
            else:
                candidate = (a, b.add_caret(mismatch, shape))
            key = (leaf_depths(candidate[0].right),
                   leaf_depths(candidate[1].left))
            if key in visited or max(key[0] + key[1]) > depth_cap:
                continue
            visited.add(key)
            queue.append(candidate)
    raise NoCommonRefinementError(
        "caret insertions exhausted below depth {}".format(depth_cap))


def power_map_down(pair, k=None):
    """Divide every leg by k: a pair over P(x^k) becomes a pair over P(x)."""
    poly = pair.context.poly
    k = k or exponent_gcd(poly)[0]
    if any(a for i, a in enumerate(poly.coeffs, 1) if i % k):
        raise IndivisibleLegError(
            "{} is not a polynomial in x^{}".format(poly, k))
    context = context_of(poly.coeffs[k - 1::k])
    return TreePair(scale_legs(pair.left, divisor=k),
                    scale_legs(pair.right, divisor=k), context)


def power_map_up(pair, k):
    """Multiply every leg by k: a pair over P(x) becomes a pair over
    P(x^k)."""
    context = context_of(pair.context.poly.substitute_power(k).coeffs)
    return TreePair(scale_legs(pair.left, factor=k),
                    scale_legs(pair.right, factor=k), context)


def random_tree(context, carets, rng=None):
    rng = rng or random.Random()
    shapes = enumerate_carets(context)
    tree = LEAF
    for _ in range(carets):
        tree = graft(tree, rng.randrange(leaf_count(tree)),
                     rng.choice(shapes))
    return tree


def random_pair(context, carets, rng=None):
    """Two random trees with ``carets`` carets each; every caret of a
    context has the same number of legs, so leaf counts agree."""
    rng = rng or random.Random()
    return TreePair(random_tree(context, carets, rng),
                    random_tree(context, carets, rng), context)
