"""Graphviz DOT output for the word tree and the label tree.

Node ids are preorder indices (firstborn first) in both trees, so the
two graphs for the same n line up node for node.  Render with e.g.
``dot -Tpng tree.gv -o tree.png``.
"""
from __future__ import annotations

from .succession import LabelTree, label_of
from .theta_tree import DnTree


def _emit(name: str, root, label_fn) -> str:
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    edges = []
    counter = 0
    stack = [(None, root)]
    while stack:
        parent_id, node = stack.pop()
        node_id = counter
        counter += 1
        lines.append(f'  {node_id} [label="{label_fn(node)}"];')
        if parent_id is not None:
            edges.append(f"  {parent_id} -> {node_id};")
        stack.extend((node_id, c) for c in reversed(node.children))
    return "\n".join(lines + edges + ["}"]) + "\n"


def tree_to_dot(tree: DnTree) -> str:
    n = tree.n
    return _emit(f"D{n}", tree.root,
                 lambda node: f"{node.word.bits}\\n{label_of(node.word, n)}")


def label_tree_to_dot(tree: LabelTree) -> str:
    return _emit(f"L{tree.n}", tree.root, lambda node: str(node.label))
