"""The (k, i) label algebra describing the generating tree.

``k`` is a node's number of children (its last-descent length, except at
the root) and ``i`` is the height of its lowest valley, with the root
labelled ``(n-1, n-1)`` by convention.  Productions are listed with the
son's last-descent length ``s`` increasing; the engine visits them in the
opposite order, see :func:`firstborn_first`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .path_core import DyckWord, last_descent_len, lowest_valley, max_path
from .theta_tree import TREE_CAP, TreeCapError, build_tree


class Label(NamedTuple):
    k: int
    i: int

    def __str__(self) -> str:
        return f"({self.k},{self.i})"

    @classmethod
    def parse(cls, text: str) -> "Label":
        k, i = text.strip().strip("()").split(",")
        return cls(int(k), int(i))


def root_label(n: int) -> Label:
    return Label(n - 1, n - 1)


def label_of(w: DyckWord, n: Optional[int] = None) -> Label:
    n = w.n if n is None else n
    if w == max_path(n):
        return root_label(n)
    return Label(last_descent_len(w), lowest_valley(w))


def produce(label: Label) -> list[Label]:
    """Sons of ``label`` in increasing last-descent length."""
    k, i = label
    if i == 0:
        return []
    return [Label(s, s - 1) if s <= i else Label(s, i - 1) for s in range(1, k + 1)]


def firstborn_first(labels: list[Label]) -> list[Label]:
    return labels[::-1]


@dataclass
class LabelNode:
    label: Label
    level: int
    children: list["LabelNode"] = field(default_factory=list)


@dataclass
class LabelTree:
    n: int
    root: LabelNode
    level_counts: list[int]

    @property
    def size(self) -> int:
        return sum(self.level_counts)

    def dump(self) -> str:
        """Indented text, firstborn first, then a per-level count summary."""
        lines = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            lines.append("  " * node.level + str(node.label))
            stack.extend(reversed(node.children))
        lines.append(f"# nodes {self.size}")
        for level, count in enumerate(self.level_counts):
            lines.append(f"# level {level}: {count}")
        return "\n".join(lines) + "\n"


def build_label_tree(n: int, cap: int = TREE_CAP) -> LabelTree:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise TreeCapError(f"n={n} exceeds tree cap {cap}")
    root = LabelNode(root_label(n), 0)
    counts = [1]
    stack = [root]
    while stack:
        node = stack.pop()
        kids = firstborn_first(produce(node.label))
        if not kids:
            continue
        if node.level + 1 == len(counts):
            counts.append(0)
        counts[node.level + 1] += len(kids)
        node.children = [LabelNode(lab, node.level + 1) for lab in kids]
        stack.extend(node.children)
    return LabelTree(n, root, counts)


def label_level_counts(n: int, cap: int = TREE_CAP) -> list[int]:
    """Per-level sizes of the label tree, streamed instead of stored."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise TreeCapError(f"n={n} exceeds tree cap {cap}")
    counts = [1]
    stack = [(root_label(n), 0)]
    while stack:
        label, level = stack.pop()
        kids = produce(label)
        if kids:
            if level + 1 == len(counts):
                counts.append(0)
            counts[level + 1] += len(kids)
            stack.extend((c, level + 1) for c in kids)
    return counts


@dataclass
class CorrespondenceReport:
    n: int
    checked: int
    word: Optional[str] = None
    expected: Optional[Label] = None
    actual: Optional[Label] = None

    @property
    def ok(self) -> bool:
        return self.word is None

    def __str__(self) -> str:
        if self.ok:
            return f"n={self.n}: labels agree on {self.checked} nodes"
        return (f"n={self.n}: mismatch at {self.word}: "
                f"expected {self.expected}, got {self.actual}")


def verify_correspondence(n: int, cap: int = TREE_CAP) -> CorrespondenceReport:
    """Walk the word tree and the label tree together and compare labels."""
    tree = build_tree(n, cap)
    checked = 0
    stack = [(tree.root, root_label(n))]
    while stack:
        node, predicted = stack.pop()
        actual = label_of(node.word, n)
        checked += 1
        if actual != predicted:
            return CorrespondenceReport(n, checked, node.word.bits, predicted, actual)
        kids = firstborn_first(produce(predicted))
        if len(kids) != len(node.children):
            return CorrespondenceReport(
                n, checked, node.word.bits, predicted,
                Label(len(node.children), actual.i))
        stack.extend(zip(reversed(node.children), reversed(kids)))
    return CorrespondenceReport(n, checked)
