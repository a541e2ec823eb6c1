"""Relations for quadratic groups F_β, β the root of ax^2 + bx - 1, and
their exact check as PL maps for F_τ.

Words are read left to right, matching ``plmaps.compose``: the word
x0 x1 applies x0 first.
"""
from dataclasses import dataclass
from functools import reduce as fold

from ovos_utils.log import LOG

from betaforge.exceptions import NotTreePairDefinableError
from betaforge.plmaps import PLMap, compose, ftau_generator, invert, \
    tau_context
from betaforge.subdivision import quadratic_tree_pair_defined

LTR = "ltr"
RTL = "rtl"


@dataclass(frozen=True)
class Letter:
    symbol: str
    index: int
    inverse: bool = False

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("generator indices are nonnegative")

    def __str__(self):
        return "{}{}{}".format(self.symbol, self.index,
                               "^-1" if self.inverse else "")


def word(*letters):
    """word("x3", "y1") -> (Letter("x", 3), Letter("y", 1))."""
    parsed = []
    for text in letters:
        inverse = text.endswith("^-1")
        text = text[:-3] if inverse else text
        parsed.append(Letter(text[0], int(text[1:]), inverse))
    return tuple(parsed)


@dataclass(frozen=True)
class Relation:
    left: tuple
    right: tuple
    family: str = ""

    def reversed(self):
        return Relation(tuple(reversed(self.left)),
                        tuple(reversed(self.right)), self.family)

    def __str__(self):
        return "{} = {}".format(" ".join(str(x) for x in self.left),
                                " ".join(str(x) for x in self.right))


def emit_presentation(a, b, max_index, convention=LTR):
    """Commutation relations f_j g_i = g_i f_(j+a+b-1) for i < j, and the
    caret relation identifying a x-carets with the matching y-carets."""
    if not quadratic_tree_pair_defined(a, b):
        raise NotTreePairDefinableError(
            "{}x^2 + {}x - 1 has no well defined tree pair representation: "
            "tree pairs need a <= b".format(a, b))
    if max_index < 1:
        raise ValueError("max_index must be at least 1")
    shift = a + b - 1
    relations = []
    for j in range(max_index + 1):
        for i in range(j):
            for f in "xy":
                for g in "xy":
                    relations.append(Relation(
                        (Letter(f, j), Letter(g, i)),
                        (Letter(g, i), Letter(f, j + shift)), "R1"))
    for i in range(max_index + 1):
        xs = tuple(Letter("x", k) for k in range(i + a, i + 2 * a)) + \
            (Letter("x", i),)
        ys = tuple(Letter("y", k) for k in range(i, i + a)) + \
            (Letter("y", i),)
        # printed right to left, so the recorded order is reversed
        relations.append(Relation(xs, ys, "R2").reversed())
    if convention == RTL:
        relations = [r.reversed() for r in relations]
    elif convention != LTR:
        raise ValueError("unknown convention " + convention)
    return relations


def evaluate_word(letters, convention=LTR):
    maps = []
    for letter in letters:
        generator = ftau_generator(letter.symbol, letter.index)
        maps.append(invert(generator) if letter.inverse else generator)
    if convention == RTL:
        maps.reverse()
    return fold(compose, maps, PLMap.identity(tau_context()))


@dataclass(frozen=True)
class RelationCheck:
    relation: Relation
    ltr: bool
    rtl: bool


@dataclass(frozen=True)
class RelationsReport:
    checks: tuple
    sanity: tuple

    def holds(self, convention):
        return all(getattr(c, convention) for c in self.checks)

    @property
    def convention(self):
        """The single convention under which every relation holds."""
        passing = [c for c in (LTR, RTL) if self.holds(c)]
        return passing[0] if len(passing) == 1 else None


def check_ftau_relations(max_i):
    """Evaluate every F_τ relation with indices up to max_i under both
    composition orders."""
    if max_i < 0:
        raise ValueError("max_i must be nonnegative")
    relations = emit_presentation(1, 1, max(max_i, 1))
    relations = [r for r in relations
                 if all(x.index <= max_i + 1 for x in r.left + r.right)]
    checks = []
    for relation in relations:
        results = {}
        for convention in (LTR, RTL):
            results[convention] = evaluate_word(relation.left, convention) \
                == evaluate_word(relation.right, convention)
        checks.append(RelationCheck(relation, results[LTR], results[RTL]))
        LOG.debug("{}: ltr={} rtl={}".format(relation, results[LTR],
                                             results[RTL]))
    sanity = []
    for i in range(max_i + 1):
        relation = Relation(word("x{}".format(i), "x{}^-1".format(i)), (),
                            "sanity")
        sanity.append(RelationCheck(
            relation,
            evaluate_word(relation.left, LTR).is_identity(),
            evaluate_word(relation.left, RTL).is_identity()))
    return RelationsReport(tuple(checks), tuple(sanity))
