import pytest
from hypothesis import given, strategies as st

from dyckcat.oracle import catalan
from dyckcat.path_core import max_path, validate
from dyckcat.succession import (
    Label, build_label_tree, firstborn_first, label_level_counts, label_of, produce,
    verify_correspondence,
)
from dyckcat.theta_tree import TreeCapError, build_tree, iter_preorder, tree_level_counts


def test_label_of_examples():
    assert label_of(max_path(5)) == (4, 4)
    assert label_of(validate("11101000")) == (3, 2)
    assert label_of(validate("101010")) == (1, 0)
    assert label_of(max_path(1)) == (0, 0)


def test_label_text_round_trip():
    assert str(Label(3, 2)) == "(3,2)"
    assert Label.parse("(3,2)") == Label(3, 2)


@pytest.mark.parametrize("label, sons", [
    ((3, 2), [(1, 0), (2, 1), (3, 1)]),
    ((4, 4), [(1, 0), (2, 1), (3, 2), (4, 3)]),
    ((1, 0), []),
    ((2, 2), [(1, 0), (2, 1)]),
])
def test_produce_examples(label, sons):
    assert produce(Label(*label)) == sons


def test_firstborn_first_reverses():
    assert firstborn_first(produce(Label(3, 2))) == [(3, 1), (2, 1), (1, 0)]


@given(st.integers(1, 30).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, k))))
def test_produce_shape(label):
    k, i = label
    sons = produce(Label(k, i))
    if i == 0:
        assert sons == []
    else:
        assert len(sons) == k
        assert sorted(s.k for s in sons) == list(range(1, k + 1))
        assert all(s.i <= s.k - 1 for s in sons)


@pytest.mark.parametrize("n, size", [(2, 2), (4, 14), (5, 42)])
def test_build_label_tree_sizes(n, size):
    t = build_label_tree(n)
    assert t.size == size == catalan(n)
    assert t.root.label == (n - 1, n - 1)


def test_label_tree_n2_and_dump():
    t = build_label_tree(2)
    assert t.root.label == (1, 1)
    assert [c.label for c in t.root.children] == [(1, 0)]
    assert t.dump().startswith("(1,1)\n  (1,0)\n# nodes 2\n")


def test_label_tree_cap():
    with pytest.raises(TreeCapError):
        build_label_tree(19)


@pytest.mark.parametrize("n", range(1, 11))
def test_leaves_are_exactly_zero_valley_labels(n):
    t = build_label_tree(n)
    stack = [t.root]
    while stack:
        node = stack.pop()
        if node.level > 0:
            assert (node.label.i == 0) == (not node.children)
        stack.extend(node.children)


@pytest.mark.parametrize("n, checked", [(1, 1), (3, 5), (4, 14)])
def test_verify_correspondence_examples(n, checked):
    r = verify_correspondence(n)
    assert r.ok and r.checked == checked


@pytest.mark.parametrize("n", range(1, 11))
def test_verify_correspondence_up_to_10(n):
    r = verify_correspondence(n)
    assert r.ok, str(r)
    assert r.checked == catalan(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_level_counts_match_word_tree(n):
    assert label_level_counts(n) == tree_level_counts(n) == build_label_tree(n).level_counts


@pytest.mark.parametrize("n", range(1, 9))
def test_nonroot_labels_track_descent_and_children(n):
    t = build_tree(n)
    for node in iter_preorder(t.root):
        if node is t.root:
            continue
        lab = label_of(node.word, n)
        assert lab.k == len(node.word.bits) - len(node.word.bits.rstrip("0"))
        if lab.i >= 1:
            assert len(node.children) == lab.k
