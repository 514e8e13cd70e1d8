"""Constant amortized time generation of Dyck paths of fixed size."""
from .cat_engine import GenState, new_generator, next_word, run_all
from .oracle import brute_enumerate, catalan, compare
from .path_core import DyckWord, DyckWordError, max_path, metrics, validate
from .succession import Label, label_of, produce
from .theta_tree import build_tree, preorder, theta_children, theta_inverse

__all__ = [
    "DyckWord", "DyckWordError", "GenState", "Label", "brute_enumerate",
    "build_tree", "catalan", "compare", "label_of", "max_path", "metrics",
    "new_generator", "next_word", "preorder", "produce", "run_all",
    "theta_children", "theta_inverse", "validate",
]
