from betaforge.treepairs import caret
from betaforge.treepairs.figures import x01_pair
from betaforge.treepairs.render import pair_to_dot, pair_to_text, tree_to_dot


def test_tree_to_dot():
    text = tree_to_dot(caret((2, 1)))
    assert text.startswith("digraph tree {\n")
    assert '    n0 [label="(2,1)", shape=circle];' in text
    assert '    n1 [label="2", shape=box];' in text
    assert '    n0 -> n1 [label="2", minlen=2];' in text
    assert '    n0 -> n2 [label="1", minlen=1];' in text
    assert text.endswith("}\n")


def test_pair_to_dot():
    text = pair_to_dot(x01_pair())
    assert "    subgraph cluster_left {" in text
    assert "    subgraph cluster_right {" in text
    assert 'label="left (3 leaves)";' in text
    # left tree in preorder: root, inner caret, two depth 2 leaves, leaf
    assert '        l2 [label="2", shape=box];' in text
    assert '        l4 [label="1", shape=box];' in text
    assert '        r1 [label="1", shape=box];' in text
    assert text == pair_to_dot(x01_pair())


def test_pair_to_text():
    assert pair_to_text(x01_pair()) == \
        "(1,1)[(1,1)[L, L], L]\n(1,1)[L, (1,1)[L, L]]\n"
