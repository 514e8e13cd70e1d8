import pytest

from dyckcat.oracle import catalan
from dyckcat.path_core import DyckWord, is_active, last_descent_len, max_path, validate
from dyckcat.theta_tree import (
    TreeCapError, build_tree, iter_edges, iter_preorder, preorder, theta_children,
    theta_inverse, tree_level_counts,
)


def bits(words):
    return [w.bits for w in words]


def test_theta_children_examples():
    assert bits(theta_children(validate("111000"), is_root=True)) == ["110100", "110010"]
    assert bits(theta_children(validate("110100"))) == ["101100", "101010"]
    assert theta_children(validate("1010")) == []
    kids = bits(theta_children(validate("11110000"), is_root=True))
    assert kids == ["11101000", "11100100", "11100010"]
    assert kids[-1] == "111000" + "10"  # p_3 then p_1


def test_theta_children_root_flag_checked():
    with pytest.raises(ValueError):
        theta_children(validate("110100"), is_root=True)


def test_theta_children_of_size_one_root():
    assert theta_children(max_path(1), is_root=True) == []


@pytest.mark.parametrize("word, parent", [("11101000", "11110000"), ("110010", "111000")])
def test_theta_inverse_examples(word, parent):
    assert theta_inverse(validate(word)).bits == parent


def test_theta_inverse_rejects_root():
    with pytest.raises(ValueError):
        theta_inverse(validate("111000"))


@pytest.mark.parametrize("n, size", [(1, 1), (4, 14), (5, 42)])
def test_build_tree_sizes(n, size):
    assert size == catalan(n)
    t = build_tree(n)
    assert t.size == size
    assert len(preorder(t)) == size
    assert sum(t.level_counts()) == size


def test_build_tree_cap():
    with pytest.raises(TreeCapError):
        build_tree(19)
    with pytest.raises(TreeCapError):
        build_tree(6, cap=5)


@pytest.mark.parametrize("n, expected", [
    (1, ["10"]),
    (2, ["1100", "1010"]),
    (3, ["111000", "110100", "101100", "101010", "110010"]),
])
def test_preorder_examples(n, expected):
    assert bits(preorder(build_tree(n))) == expected


@pytest.mark.parametrize("n", range(1, 11))
def test_tree_structure(n):
    t = build_tree(n)
    assert t.root.word == max_path(n) and t.root.level == 0
    assert len(t.root.children) == n - 1
    for node in iter_preorder(t.root):
        w = node.word
        assert validate(w.bits) == w
        kids = [c.word for c in node.children]
        assert len(set(kids)) == len(kids)
        if node is t.root:
            continue
        assert len(kids) == (last_descent_len(w) if is_active(w) else 0)
        descents = [last_descent_len(c) for c in kids]
        assert descents == sorted(descents, reverse=True)
    for parent, child in iter_edges(t):
        assert theta_inverse(child.word) == parent.word
        assert child.level == parent.level + 1


@pytest.mark.parametrize("n", range(1, 13))
def test_tree_words_equal_oracle(n, oracle_sets):
    assert sorted(bits(preorder(build_tree(n)))) == list(oracle_sets[n].words)


@pytest.mark.parametrize("n", range(1, 9))
def test_children_of_same_level_are_disjoint(n):
    t = build_tree(n)
    by_level: dict[int, list] = {}
    for node in iter_preorder(t.root):
        by_level.setdefault(node.level, []).append(node)
    for nodes in by_level.values():
        seen: set = set()
        for node in nodes:
            kids = {c.word for c in node.children}
            assert not (kids & seen)
            seen |= kids


@pytest.mark.parametrize("n", range(1, 11))
def test_inverse_chain_reaches_root(n, oracle_sets):
    root = max_path(n)
    for b in oracle_sets[n]:
        w = DyckWord(b)
        steps = 0
        while w != root:
            w = theta_inverse(w)
            steps += 1
            assert steps <= n * n


@pytest.mark.parametrize("n", range(1, 10))
def test_streamed_level_counts_match_tree(n):
    assert tree_level_counts(n) == build_tree(n).level_counts()
