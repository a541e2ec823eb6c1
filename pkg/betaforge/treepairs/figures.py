"""Small worked diagrams used by the acceptance suite, the tests and the
render command."""
from betaforge.subdivision import DYADIC, context_of
from betaforge.treepairs import LEAF, TreePair, caret

L = LEAF


def binary(*children):
    """Binary caret; binary() is an exposed one."""
    return caret((1, 1), *children)


def x01_pair():
    """Dyadic pair with leaf depths (2, 2, 1) and (1, 2, 2)."""
    return TreePair(binary(binary(), L), binary(L, binary()),
                    context_of(DYADIC))


def redundant_caret_pair():
    """A pair with one redundant caret pair at leaves 2 and 3 (from 0)."""
    left = binary(binary(binary(), binary()), L)
    right = binary(L, binary(L, binary(binary(), L)))
    return TreePair(left, right, context_of(DYADIC))


def reduced_redundant_pair():
    left = binary(binary(binary(), L), L)
    right = binary(L, binary(L, binary()))
    return TreePair(left, right, context_of(DYADIC))


def composition_figure():
    """(f, f', f*f') for the worked dyadic composition."""
    ctx = context_of(DYADIC)
    f = TreePair(binary(binary(binary(), L), L),
                 binary(binary(), binary()), ctx)
    g = TreePair(binary(binary(L, binary()), L),
                 binary(L, binary(L, binary())), ctx)
    fg = TreePair(binary(binary(binary(L, binary()), L), L),
                  binary(L, binary(L, binary(L, binary()))), ctx)
    return f, g, fg


def equitree_trees():
    """Two τ trees cutting [0, 1] into cells τ^2, τ^3, τ^2."""
    left = caret((2, 1), L, caret((2, 1)))
    right = caret((1, 2), caret((1, 2)), L)
    return left, right


def cubic_relation_trees():
    """Two x^3 + x - 1 trees, both using each caret type, with leaf depths
    (3, 5, 7, 5, 3)."""
    left = caret((3, 1), L, caret((3, 1), caret((1, 3)), caret((3, 1))))
    right = caret((1, 3), caret((1, 3), caret((1, 3)), caret((3, 1))), L)
    return left, right
