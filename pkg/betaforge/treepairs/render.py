"""Graphviz DOT text for trees and tree pairs.

Nodes are numbered in preorder so output is byte stable; each edge gets
``minlen`` equal to its leg length and leaves are labelled with depths.
"""
from betaforge.treepairs import Leaf, leaf_count


def _tree_lines(tree, prefix, indent="    "):
    lines = []
    counter = [0]

    def visit(node, depth):
        name = "{}{}".format(prefix, counter[0])
        counter[0] += 1
        if isinstance(node, Leaf):
            lines.append('{}{} [label="{}", shape=box];'.format(
                indent, name, depth))
            return name
        lines.append('{}{} [label="{}", shape=circle];'.format(
            indent, name, node.shape))
        for leg, child in zip(node.shape.legs, node.children):
            child_name = visit(child, depth + leg)
            lines.append('{}{} -> {} [label="{}", minlen={}];'.format(
                indent, name, child_name, leg, leg))
        return name

    visit(tree, 0)
    return lines


def tree_to_dot(tree, name="tree"):
    lines = ["digraph {} {{".format(name), "    node [fontsize=10];"]
    lines += _tree_lines(tree, "n")
    lines.append("}")
    return "\n".join(lines) + "\n"


def pair_to_dot(pair, name="treepair"):
    lines = ["digraph {} {{".format(name), "    node [fontsize=10];"]
    for side, tree in (("left", pair.left), ("right", pair.right)):
        lines.append("    subgraph cluster_{} {{".format(side))
        lines.append('        label="{} ({} leaves)";'.format(
            side, leaf_count(tree)))
        lines += _tree_lines(tree, side[0], indent="        ")
        lines.append("    }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def pair_to_text(pair):
    return "{!r}\n{!r}\n".format(pair.left, pair.right)
