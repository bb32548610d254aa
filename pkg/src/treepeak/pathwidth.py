"""Pathwidth of trees.

The value comes from a bottom-up DP over rooted subtrees.  Each rooted tree
gets a *label*: a strictly decreasing chain of pathwidths.  The first entry is
the pathwidth of the tree.  An entry is flagged when the tree contains a
*critical* vertex, i.e. one with two child subtrees of that same pathwidth;
the chain then continues with the tree obtained by cutting off the critical
vertex's subtree (nothing follows when the critical vertex is the root).  A
critical vertex is unique when it exists, and the label of a tree is
determined by the labels of the root's child subtrees.

The decomposition is built from the main-path characterization: a tree has
pathwidth at most ``k >= 1`` iff some path leaves only components of
pathwidth at most ``k - 1`` behind.
"""

from __future__ import annotations

from typing import Optional

from .errors import InvalidDecomposition
from .graphs import PathDecomposition, Tree, verify_path_decomposition

Label = tuple  # tuple[tuple[int, bool], ...]


def _combine(children: list[Label]) -> Label:
    if not children:
        return ((0, False),)
    k = max(lab[0][0] for lab in children)
    if k == 0:
        return ((1, False),)
    top = [j for j, lab in enumerate(children) if lab[0][0] == k]
    if len(top) >= 3:
        return ((k + 1, False),)
    if len(top) == 2:
        if any(children[j][0][1] for j in top):
            return ((k + 1, False),)
        return ((k, True),)
    heavy = children[top[0]]
    if not heavy[0][1]:
        return ((k, False),)
    # Cut off the critical vertex's subtree and ask whether what remains still
    # reaches pathwidth k; if so the critical vertex has a third heavy branch.
    rest = [lab for j, lab in enumerate(children) if j != top[0]]
    if len(heavy) > 1:
        rest.append(heavy[1:])
    residual = _combine(rest)
    if residual[0][0] >= k:
        return ((k + 1, False),)
    return ((k, True),) + residual


def rooted_label(adj, root: int, allowed: Optional[set] = None) -> Label:
    """Label of the tree spanned by ``allowed`` (default: everything), rooted at ``root``."""
    order = [root]
    parent = {root: None}
    for u in order:
        for v in adj[u]:
            if v not in parent and (allowed is None or v in allowed):
                parent[v] = u
                order.append(v)
    labels = {}
    for u in reversed(order):
        kids = [labels.pop(v) for v in adj[u] if parent.get(v) == u and v in labels]
        labels[u] = _combine(kids)
    return labels[root]


def pathwidth_value(t: Tree) -> int:
    return rooted_label(t.adj, 0)[0][0]


def _component(adj, start: int, blocked: int, allowed: set) -> set:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v != blocked and v in allowed and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def _path_between(adj, a: int, b: int, allowed: set) -> list[int]:
    parent = {a: None}
    stack = [a]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v in allowed and v not in parent:
                parent[v] = u
                stack.append(v)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return path[::-1]


def _decompose(adj, vertices: set) -> list[frozenset]:
    if len(vertices) == 1:
        return [frozenset(vertices)]
    root = min(vertices)
    k = rooted_label(adj, root, vertices)[0][0]
    branch_pw = {}
    for u in vertices:
        for v in adj[u]:
            if v in vertices:
                branch_pw[u, v] = rooted_label(adj, v, _component(adj, v, u, vertices))[0][0]
    ordered = sorted(vertices)
    spine = None
    for i, a in enumerate(ordered):
        for b in ordered[i:]:
            path = _path_between(adj, a, b, vertices)
            on_path = set(path)
            if all(
                branch_pw[u, v] <= k - 1
                for u in path
                for v in adj[u]
                if v in vertices and v not in on_path
            ):
                spine = path
                break
        if spine:
            break
    assert spine is not None, "main path must exist for a tree"
    bags = []
    on_path = set(spine)
    for j, u in enumerate(spine):
        for v in adj[u]:
            if v in vertices and v not in on_path:
                for bag in _decompose(adj, _component(adj, v, u, vertices)):
                    bags.append(bag | {u})
        if j + 1 < len(spine):
            bags.append(frozenset((u, spine[j + 1])))
    if not bags:
        bags.append(frozenset(spine))
    return bags


def min_width_decomposition(t: Tree) -> PathDecomposition:
    """A minimum-width path decomposition (before the slack transform)."""
    return PathDecomposition(tuple(_decompose(t.adj, set(range(t.m)))))


def has_slack(t: Tree, d: PathDecomposition) -> bool:
    """Every edge has an endpoint in some bag of size at most the width."""
    w = d.width
    return all(
        any(len(b) <= w and (u in b or v in b) for b in d.bags) for u, v in t.edges
    )


def slack_transform(t: Tree, d: PathDecomposition) -> PathDecomposition:
    """Insert shrunken copies of bags so every edge gets an endpoint in a non-full bag.

    For an edge whose endpoints first meet in bag ``S_i``, the endpoint absent
    from ``S_{i-1}`` (the second endpoint when ``i`` is the first bag) is
    dropped from a copy of ``S_i`` placed just before it.  Edges that already
    satisfy the condition are left alone.  Width is unchanged.
    """
    if not verify_path_decomposition(t, d):
        raise InvalidDecomposition("input is not a path decomposition of the tree")
    w = d.width
    bags = list(d.bags)
    for a, b in t.edges:
        if any(len(s) <= w and (a in s or b in s) for s in bags):
            continue
        i = next(j for j, s in enumerate(bags) if a in s and b in s)
        if i > 0 and b in bags[i - 1]:
            a, b = b, a
        bags.insert(i, bags[i] - {b})
    out = PathDecomposition(tuple(bags))
    assert out.width == w or t.m == 1
    return out


def pathwidth(t: Tree) -> tuple[int, PathDecomposition]:
    """Pathwidth of ``t`` with a witnessing decomposition that has slack."""
    d = slack_transform(t, min_width_decomposition(t))
    w = pathwidth_value(t)
    if d.width != w:
        raise AssertionError(f"decomposition width {d.width} disagrees with pathwidth {w}")
    return w, d
