"""Preferences single-peaked on trees: recognition, tree shapes and committees."""

from .committees import (
    CCResult,
    HittingInstance,
    brute_force_cc,
    cc_auto,
    cc_on_tree,
    egalitarian_cc_tree,
    tree_hitting_set,
    utilitarian_cc_few_internal_borda,
    utilitarian_cc_few_leaves,
)
from .graphs import PathDecomposition, Tree, is_single_peaked_on
from .pathwidth import pathwidth
from .profile import Profile, ScoringFunction, parse_profile
from .recognition import (
    AttachmentDigraph,
    build_attachment_digraph,
    count_trees,
    enumerate_trees,
    trick_recognize,
)

__version__ = "0.1.0"

__all__ = [
    "AttachmentDigraph",
    "CCResult",
    "HittingInstance",
    "PathDecomposition",
    "Profile",
    "ScoringFunction",
    "Tree",
    "brute_force_cc",
    "build_attachment_digraph",
    "cc_auto",
    "cc_on_tree",
    "count_trees",
    "egalitarian_cc_tree",
    "enumerate_trees",
    "is_single_peaked_on",
    "parse_profile",
    "pathwidth",
    "trick_recognize",
    "tree_hitting_set",
    "utilitarian_cc_few_internal_borda",
    "utilitarian_cc_few_leaves",
]
