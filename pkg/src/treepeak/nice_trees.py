"""Picking trees with good shape out of an attachment digraph.

Each finder returns a tree the profile is single-peaked on.  With at most two
candidates there is only one tree and every finder returns it.
"""

from __future__ import annotations

from typing import Optional

from .errors import InvalidK
from .flows import max_bipartite_matching, max_flow
from .graphs import (
    PathDecomposition,
    Tree,
    is_caterpillar,
    max_degree,
)
from .pathwidth import pathwidth
from .profile import Profile
from .recognition import (
    AttachmentDigraph,
    build_attachment_digraph,
    tree_from_attachment,
    two_forced_neighbors,
)


def _only_tree(m: int) -> Tree:
    return Tree(m, ((0, 1),) if m == 2 else ())


def _forced_map(d: AttachmentDigraph) -> dict[int, int]:
    return {a: d.out[a][0] for a in d.forced if a != d.sink}


def forced_tree(d: AttachmentDigraph) -> tuple[Tree, list[int]]:
    """The forced part as a tree on ``0..|forced|-1`` plus the relabelling back."""
    verts = sorted(d.forced)
    index = {v: j for j, v in enumerate(verts)}
    edges = tuple((index[u], index[v]) for u, v in d.forced_tree_edges())
    return Tree(len(verts), edges), verts


def min_internal_tree(d: AttachmentDigraph) -> Tree:
    """Tree with the fewest internal vertices (also of minimum diameter)."""
    if d.m <= 2:
        return _only_tree(d.m)
    f = _forced_map(d)
    forced = d.forced
    if len(forced) == 2:
        for a in d.free:
            f[a] = d.sink
    else:
        ft, verts = forced_tree(d)
        inner = {verts[j] for j in range(ft.m) if ft.degree(j) >= 2}
        for a in d.free:
            f[a] = min(b for b in d.out[a] if b in inner)
    return tree_from_attachment(d, f)


min_diameter_tree = min_internal_tree


def min_leaves_tree(d: AttachmentDigraph) -> Tree:
    """Tree with the fewest leaves, via a maximum matching of attachments."""
    if d.m <= 2:
        return _only_tree(d.m)
    t = d.sink
    s = min(a for a in d.forced if a != t and d.out[a] == (t,))
    left = [a for a in range(d.m) if a not in (s, t)]
    edges = [(j, b) for j, a in enumerate(left) for b in d.out[a]]
    f = {s: t}
    for j, b in max_bipartite_matching(len(left), d.m, edges):
        f[left[j]] = b
    for a in left:
        f.setdefault(a, d.out[a][0])
    return tree_from_attachment(d, f)


def _degree_bounded(d: AttachmentDigraph, bound: list[int]) -> Optional[Tree]:
    """Tree with ``degree(a) <= bound[a]`` for all ``a``, or ``None``.

    Flow network: source -> l_a (1), l_a -> r_b per arc (1), r_a -> sink with
    capacity ``bound[a] - 1`` (``bound[t]`` for the digraph sink ``t``, which
    has no parent edge).
    """
    m, t = d.m, d.sink
    src, dst = 2 * m, 2 * m + 1
    arcs = [(src, a, 1) for a in range(m) if a != t]
    middle = len(arcs)
    pairs = sorted(d.arcs)
    arcs += [(a, m + b, 1) for a, b in pairs]
    arcs += [(m + a, dst, max(bound[a] - (a != t), 0)) for a in range(m)]
    value, flows = max_flow(2 * m + 2, arcs, src, dst)
    if value != m - 1:
        return None
    f = {a: b for (a, b), x in zip(pairs, flows[middle:middle + len(pairs)]) if x}
    return tree_from_attachment(d, f)


def bounded_degree_tree(d: AttachmentDigraph, k: int) -> Optional[Tree]:
    if k <= 0:
        raise InvalidK(f"degree bound must be positive, got {k}")
    if d.m <= 2:
        return _only_tree(d.m)
    return _degree_bounded(d, [k] * d.m)


def min_max_degree_tree(d: AttachmentDigraph) -> tuple[int, Tree]:
    if d.m <= 2:
        t = _only_tree(d.m)
        return max_degree(t), t
    for k in range(2, d.m):
        t = bounded_degree_tree(d, k)
        if t is not None:
            return k, t
    raise AssertionError("a degree bound of m-1 always succeeds")


def min_pathwidth_tree(d: AttachmentDigraph) -> tuple[Tree, PathDecomposition]:
    """Tree of minimum pathwidth together with a decomposition witnessing it.

    Starts from a slack decomposition of the forced tree and hangs each free
    vertex off one of its two adjacent forced neighbours, in a fresh bag placed
    right after a non-full bag holding that neighbour.
    """
    if d.m <= 2:
        t = _only_tree(d.m)
        return t, pathwidth(t)[1]
    ft, verts = forced_tree(d)
    w, dec = pathwidth(ft)
    base = [frozenset(verts[j] for j in bag) for bag in dec.bags]
    extra: list[list[frozenset]] = [[] for _ in base]
    f = _forced_map(d)
    for a in sorted(d.free):
        c1, c2 = two_forced_neighbors(d, a)
        for j, bag in enumerate(base):
            if len(bag) <= w and (c1 in bag or c2 in bag):
                f[a] = c1 if c1 in bag else c2
                extra[j].append(bag | {a})
                break
        else:
            raise AssertionError(f"no non-full bag holds a neighbour of {a}")
    bags = []
    for bag, after in zip(base, extra):
        bags.append(bag)
        bags.extend(after)
    return tree_from_attachment(d, f), PathDecomposition(tuple(bags))


def find_path(p: Profile) -> Optional[Tree]:
    d = build_attachment_digraph(p)
    if d is None:
        return None
    return bounded_degree_tree(d, 2)


def find_star(p: Profile) -> Optional[Tree]:
    """Star centred at a candidate every voter ranks first or second."""
    if p.m <= 2:
        return _only_tree(p.m)
    for c in range(p.m):
        if all(p.rank(i, c) <= 1 for i in range(p.n)):
            return Tree.star(p.m, c)
    return None


def find_caterpillar(d: AttachmentDigraph) -> Optional[Tree]:
    if d.m <= 2:
        return _only_tree(d.m)
    if not is_caterpillar(forced_tree(d)[0]):
        return None
    return min_internal_tree(d)


def find_star_subdivision(d: AttachmentDigraph) -> Optional[Tree]:
    """Try each centre in index order: it may have any degree, others at most 2."""
    if d.m <= 2:
        return _only_tree(d.m)
    for c in range(d.m):
        bound = [2] * d.m
        bound[c] = d.m - 1
        t = _degree_bounded(d, bound)
        if t is not None:
            return t
    return None
