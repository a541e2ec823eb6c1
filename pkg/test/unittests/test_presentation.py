import pytest

from betaforge.exceptions import NotTreePairDefinableError
from betaforge.treepairs.presentation import LTR, RTL, Letter, Relation, \
    check_ftau_relations, emit_presentation, evaluate_word, word


def printed(relations):
    return [str(r) for r in relations]


def test_word():
    assert word("x3", "y1", "x0^-1") == (Letter("x", 3), Letter("y", 1),
                                         Letter("x", 0, inverse=True))
    assert str(Letter("y", 2, inverse=True)) == "y2^-1"
    with pytest.raises(ValueError):
        Letter("x", -1)


def test_golden_relations():
    relations = printed(emit_presentation(1, 1, 3))
    assert "x0 x1 = y0 y0" in relations
    assert "x2 y0 = y0 x3" in relations
    assert "y1 x0 = x0 y2" in relations
    assert "x3 x4 = y3 y3" in relations


def test_relation_counts():
    relations = emit_presentation(1, 1, 3)
    assert len([r for r in relations if r.family == "R1"]) == 4 * 6
    assert len([r for r in relations if r.family == "R2"]) == 4


def test_shift_grows_with_coefficients():
    relations = printed(emit_presentation(1, 2, 2))
    assert "x2 x0 = x0 x4" in relations
    assert "x1 y0 = y0 x3" in relations


def test_caret_relation_with_two_long_legs():
    relations = printed(emit_presentation(2, 2, 1))
    assert "x0 x3 x2 = y0 y1 y0" in relations


def test_right_to_left():
    relations = printed(emit_presentation(1, 1, 2, convention=RTL))
    assert "x1 x0 = y0 y0" in relations
    assert "y0 x1 = x2 y0" in relations
    with pytest.raises(ValueError):
        emit_presentation(1, 1, 2, convention="up")


def test_undefinable_quadratic():
    with pytest.raises(NotTreePairDefinableError) as e:
        emit_presentation(2, 1, 3)
    assert "a <= b" in str(e.value)


def test_max_index():
    with pytest.raises(ValueError):
        emit_presentation(1, 1, 0)


def test_relation_reversed():
    relation = Relation(word("x1", "y0"), word("y0", "x2"))
    assert str(relation.reversed()) == "y0 x1 = x2 y0"


def test_words_evaluate_left_to_right():
    left = evaluate_word(word("x0", "x1"), LTR)
    right = evaluate_word(word("y0", "y0"), LTR)
    assert left == right
    assert evaluate_word(word("x1", "x1^-1")).is_identity()
    assert evaluate_word((), LTR).is_identity()


def test_ftau_relations():
    report = check_ftau_relations(1)
    assert report.holds(LTR)
    assert not report.holds(RTL)
    assert report.convention == LTR
    assert all(c.ltr and c.rtl for c in report.sanity)
    assert len(report.sanity) == 2


def test_ftau_relations_bound():
    with pytest.raises(ValueError):
        check_ftau_relations(-1)
