"""Reference generating tree over all Dyck words of a fixed size.

Each node's children are obtained by dropping the first and last step and
inserting a peak ``10`` at points of the remaining word's trailing
descent.  This module is the slow, obviously-correct ground truth the
bit-swap engine is checked against.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .path_core import DyckWord, is_active, last_descent_len, max_path

TREE_CAP = 18


class TreeCapError(ValueError):
    pass


def _check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise TreeCapError(f"n={n} exceeds tree cap {cap}")


def theta_children(w: DyckWord, is_root: bool = False) -> list[DyckWord]:
    """Children of ``w``, firstborn (longest last descent) first.

    For the root the topmost insertion point is skipped, since it would
    rebuild the root itself.
    """
    bits = w.bits
    if is_root:
        if w != max_path(w.n):
            raise ValueError(f"{bits} is not the root of its tree")
    elif not is_active(w):
        return []
    inner = bits[1:-1]
    k = last_descent_len(w)
    top = len(inner) - (k - 1)
    points = range(top + 1 if is_root else top, len(inner) + 1)
    return [DyckWord(inner[:p] + "10" + inner[p:]) for p in points]


def theta_inverse(w: DyckWord) -> DyckWord:
    """Parent of ``w``: remove the rightmost peak and wrap in one more level."""
    bits = w.bits
    if bits == max_path(w.n).bits:
        raise ValueError("the root has no parent")
    p = bits.rindex("10")
    return DyckWord("1" + bits[:p] + bits[p + 2:] + "0")


@dataclass
class DnNode:
    word: DyckWord
    level: int
    children: list["DnNode"] = field(default_factory=list)


@dataclass
class DnTree:
    n: int
    root: DnNode
    size: int

    def level_counts(self) -> list[int]:
        counts: list[int] = []
        for node in iter_preorder(self.root):
            if node.level == len(counts):
                counts.append(0)
            counts[node.level] += 1
        return counts


def build_tree(n: int, cap: int = TREE_CAP) -> DnTree:
    _check_cap(n, cap)
    root = DnNode(max_path(n), 0)
    size = 1
    queue = deque([root])
    while queue:
        node = queue.popleft()
        kids = theta_children(node.word, is_root=node is root)
        node.children = [DnNode(c, node.level + 1) for c in kids]
        size += len(kids)
        queue.extend(node.children)
    return DnTree(n, root, size)


def iter_preorder(root: DnNode):
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def preorder(t: DnTree) -> list[DyckWord]:
    return [node.word for node in iter_preorder(t.root)]


def iter_edges(t: DnTree):
    """(parent, child) pairs in preorder of the child."""
    stack = [(None, t.root)]
    while stack:
        parent, node = stack.pop()
        if parent is not None:
            yield parent, node
        stack.extend((node, c) for c in reversed(node.children))


def tree_level_counts(n: int, cap: int = TREE_CAP) -> list[int]:
    """Per-level node counts without materialising the tree."""
    _check_cap(n, cap)
    counts = [1]
    stack = [(w, 1) for w in theta_children(max_path(n), is_root=True)]
    while stack:
        w, level = stack.pop()
        if level == len(counts):
            counts.append(0)
        counts[level] += 1
        stack.extend((c, level + 1) for c in theta_children(w))
    return counts
