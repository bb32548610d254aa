"""Chamberlin-Courant committees.

Each voter is represented by their favourite committee member and gets that
member's utility.  The utilitarian variant maximizes the total, the
egalitarian one the worst-off voter.  Besides exhaustive search there are
exact routines that exploit a tree the profile is single-peaked on.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    EmptySubset,
    InvalidK,
    MalformedInput,
    NotSinglePeakedOnTree,
    TooLarge,
    TooManyInternal,
    TooManyLeaves,
    WrongScoringShape,
)
from .graphs import Tree, internal_vertices, is_connected_in_tree, is_single_peaked_on, leaves
from .nice_trees import min_internal_tree, min_leaves_tree
from .profile import Profile, ScoringFunction, egalitarian_score, utilitarian_score
from .recognition import build_attachment_digraph, trick_recognize

UTILITARIAN = "utilitarian"
EGALITARIAN = "egalitarian"
VARIANTS = (UTILITARIAN, EGALITARIAN)

BRUTE_FORCE_LIMIT = 10**7
LEAF_BOUND = 8
INTERNAL_BOUND = 10


@dataclass(frozen=True)
class CCResult:
    committee: tuple[int, ...]
    score: int
    variant: str
    algorithm: str


@dataclass(frozen=True)
class HittingInstance:
    tree: Tree
    families: tuple[frozenset[int], ...]

    def __post_init__(self):
        fams = tuple(frozenset(f) for f in self.families)
        object.__setattr__(self, "families", fams)
        for f in fams:
            if not f:
                raise EmptySubset("hitting set families must be non-empty")
            if not is_connected_in_tree(self.tree, f):
                raise MalformedInput(f"family {sorted(f)} is not connected in the tree")


def _score_fn(variant: str):
    if variant == UTILITARIAN:
        return utilitarian_score
    if variant == EGALITARIAN:
        return egalitarian_score
    raise MalformedInput(f"unknown variant {variant!r}")


def _check_k(p: Profile, k: int) -> None:
    if not 1 <= k <= p.m:
        raise InvalidK(f"committee size must be between 1 and {p.m}, got {k}")


def _check_tree(p: Profile, t: Tree) -> None:
    if not is_single_peaked_on(p, t):
        raise NotSinglePeakedOnTree("profile is not single-peaked on the given tree")


def _pad(committee: Iterable[int], k: int) -> tuple[int, ...]:
    chosen = set(committee)
    for c in itertools.count():
        if len(chosen) >= k:
            break
        chosen.add(c)
    return tuple(sorted(chosen))


def _result(p, mu, committee, variant, algorithm) -> CCResult:
    committee = tuple(sorted(committee))
    return CCResult(committee, _score_fn(variant)(p, mu, committee), variant, algorithm)


def brute_force_cc(
    p: Profile, mu: ScoringFunction, k: int, variant: str = UTILITARIAN, force: bool = False
) -> CCResult:
    """Exhaustive search; ties go to the lexicographically smallest committee."""
    score = _score_fn(variant)
    _check_k(p, k)
    mu.check_profile(p)
    if not force and math.comb(p.m, k) > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{math.comb(p.m, k)} committees to try (limit {BRUTE_FORCE_LIMIT})")
    best, best_w = None, None
    for w in itertools.combinations(range(p.m), k):
        s = score(p, mu, w)
        if best is None or s > best:
            best, best_w = s, w
    return CCResult(best_w, best, variant, "brute-force")


def tree_hitting_set(inst: HittingInstance) -> frozenset[int]:
    """Minimum set of vertices meeting every family, by peeling leaves.

    A leaf that forms a family on its own must be taken.  Otherwise every
    family through the leaf also runs through its neighbour, so the leaf can
    be dropped from the tree and the families alike.
    """
    t = inst.tree
    adj = {v: set(t.adj[v]) for v in range(t.m)}
    families = [set(f) for f in inst.families]
    chosen = set()
    while adj:
        a = min(v for v in adj if len(adj[v]) <= 1)
        if any(f == {a} for f in families):
            chosen.add(a)
            families = [f for f in families if a not in f]
        else:
            for f in families:
                f.discard(a)
        for b in adj.pop(a):
            adj[b].discard(a)
    return frozenset(chosen)


def egalitarian_cc_tree(p: Profile, t: Tree, mu: ScoringFunction, k: int) -> CCResult:
    """Best worst-off utility, by scanning thresholds from the top.

    For a threshold ``B`` each voter's acceptable candidates form a connected
    set in ``t``; the threshold is reachable with ``k`` members iff these sets
    have a hitting set of size at most ``k``.
    """
    _check_k(p, k)
    mu.check_profile(p)
    _check_tree(p, t)
    utility = [[mu(p, i, a) for a in range(p.m)] for i in range(p.n)]
    for bar in sorted({u for row in utility for u in row}, reverse=True):
        families = tuple(
            frozenset(a for a in range(p.m) if row[a] >= bar) for row in utility
        )
        hit = tree_hitting_set(HittingInstance(t, families))
        if len(hit) <= k:
            return _result(p, mu, _pad(hit, k), EGALITARIAN, "tree-hitting-set")
    raise AssertionError("the lowest threshold is always reachable")


# --- few leaves -------------------------------------------------------------


def _few_leaves_rooted(p: Profile, t: Tree, utility, root: int, k: int):
    """Best score with ``root`` in the committee, plus the committee."""
    parent = {root: None}
    order = [root]
    for u in order:
        for v in t.adj[u]:
            if v not in parent:
                parent[v] = u
                order.append(v)
    children = {u: [v for v in t.adj[u] if parent[v] == u] for u in order}
    size = {}
    inside = {u: set() for u in order}  # voters whose top lies in the subtree
    for i, vote in enumerate(p.votes):
        inside[vote[0]].add(i)
    below = {}  # anti-chains among strict descendants, the empty one included
    chains = {}  # anti-chains of the whole subtree
    for u in reversed(order):
        size[u] = 1 + sum(size[v] for v in children[u])
        for v in children[u]:
            inside[u] |= inside[v]
        below[u] = [()]
        for v in children[u]:
            below[u] = [a + b for a in below[u] for b in chains[v]]
        chains[u] = [(u,)] + below[u]

    best = {}  # (u, l) -> (score, anti-chain, seats per anti-chain member)
    for u in reversed(order):
        own = inside[u]
        best[u, 1] = (sum(utility[i][u] for i in own), (), ())
        for anti in below[u]:
            if not anti:
                continue
            covered = set().union(*(inside[v] for v in anti))
            rest = sum(max(utility[i][c] for c in anti + (u,)) for i in own - covered)
            # knapsack: table[j] = best (score, division) using exactly j seats
            table = {0: (0, ())}
            for v in anti:
                nxt = {}
                for used, (sc, div) in table.items():
                    for l in range(1, min(size[v], k - 1 - used) + 1):
                        cand = (sc + best[v, l][0], div + (l,))
                        if used + l not in nxt or cand[0] > nxt[used + l][0]:
                            nxt[used + l] = cand
                table = nxt
            for used, (sc, div) in table.items():
                key = (u, used + 1)
                if key not in best or sc + rest > best[key][0]:
                    best[key] = (sc + rest, anti, div)
    if (root, k) not in best:
        return None, None

    committee = []
    stack = [(root, k)]
    while stack:
        u, l = stack.pop()
        committee.append(u)
        _, anti, div = best[u, l]
        stack.extend(zip(anti, div))
    return best[root, k][0], committee


def utilitarian_cc_few_leaves(
    p: Profile, t: Tree, mu: ScoringFunction, k: int, bound: int = LEAF_BOUND
) -> CCResult:
    """Exact utilitarian optimum by a DP over anti-chains; cost grows as ``m**leaves``."""
    _check_k(p, k)
    mu.check_profile(p)
    _check_tree(p, t)
    lam = len(leaves(t))
    if lam > bound:
        raise TooManyLeaves(f"tree has {lam} leaves, bound is {bound}")
    utility = [[mu(p, i, a) for a in range(p.m)] for i in range(p.n)]
    best_score, best_w = None, None
    for root in range(p.m):
        score, w = _few_leaves_rooted(p, t, utility, root, k)
        if w is not None and (best_score is None or score > best_score):
            best_score, best_w = score, w
    return _result(p, mu, _pad(best_w, k), UTILITARIAN, "few-leaves-dp")


# --- few internal vertices ------------------------------------------------


def check_borda_like(mu: ScoringFunction) -> None:
    """Positional with ``s1 = 0``, ``s2 = -1`` and ``s3 <= -2`` (where present)."""
    s = mu.vector
    if s is None:
        raise WrongScoringShape("needs a positional scoring vector")
    if (len(s) > 1 and s[1] != -1) or (len(s) > 2 and s[2] > -2):
        raise WrongScoringShape("needs s1 = 0, s2 = -1, s3 <= -2")


def utilitarian_cc_few_internal_borda(
    p: Profile, t: Tree, k: int, mu: Optional[ScoringFunction] = None, bound: int = INTERNAL_BOUND
) -> CCResult:
    """Exact utilitarian optimum for Borda-like scores; cost grows as ``(k+1)**internal``.

    Guesses, for each internal vertex, whether it joins the committee and how
    many of its leaf neighbours do; those leaves are taken in order of
    plurality count (ties to the smaller index).
    """
    if mu is None:
        mu = ScoringFunction.borda(p.m)
    _check_k(p, k)
    mu.check_profile(p)
    check_borda_like(mu)
    _check_tree(p, t)
    inner = sorted(internal_vertices(t))
    if len(inner) > bound:
        raise TooManyInternal(f"tree has {len(inner)} internal vertices, bound is {bound}")
    if p.m <= 2:
        w = brute_force_cc(p, mu, k, UTILITARIAN).committee
        return _result(p, mu, w, UTILITARIAN, "few-internal-borda")
    plurality = [0] * p.m
    for vote in p.votes:
        plurality[vote[0]] += 1
    hanging = {
        c: sorted((v for v in t.adj[c] if t.degree(v) == 1), key=lambda v: (-plurality[v], v))
        for c in inner
    }
    options = [
        [(x, l) for x in (0, 1) for l in range(len(hanging[c]) + 1)] for c in inner
    ]
    best = None
    for guess in _bounded_product(options, k):
        w = []
        for c, (x, l) in zip(inner, guess):
            if x:
                w.append(c)
            w.extend(hanging[c][:l])
        w = tuple(sorted(w))
        key = (utilitarian_score(p, mu, w), tuple(-c for c in w))
        if best is None or key > best[0]:
            best = (key, w)
    return _result(p, mu, best[1], UTILITARIAN, "few-internal-borda")


def _bounded_product(options: Sequence[list[tuple[int, int]]], total: int):
    """Choices, one per option list, whose entries sum to exactly ``total``."""
    room = [0] * (len(options) + 1)
    for j in range(len(options) - 1, -1, -1):
        room[j] = room[j + 1] + max(x + l for x, l in options[j])

    def walk(j, left):
        if j == len(options):
            if left == 0:
                yield ()
            return
        for x, l in options[j]:
            if x + l <= left and left - x - l <= room[j + 1]:
                for rest in walk(j + 1, left - x - l):
                    yield ((x, l),) + rest

    return walk(0, total)


# --- dispatch ---------------------------------------------------------------


def _leaf_cost(m: int, k: int, lam: int) -> float:
    return float(m) ** lam * float(k) ** lam


def _internal_cost(k: int, eta: int) -> float:
    return 2.0**eta * float(k + 1) ** eta


def _borda_like(mu: ScoringFunction) -> bool:
    try:
        check_borda_like(mu)
    except WrongScoringShape:
        return False
    return True


def _utilitarian_on_trees(p, mu, k, leafy: Tree, bushy: Tree, leaf_bound, internal_bound, force):
    lam = len(leaves(leafy))
    eta = len(internal_vertices(bushy))
    routes = []
    if lam <= leaf_bound:
        routes.append((_leaf_cost(p.m, k, lam), 0))
    if eta <= internal_bound and _borda_like(mu):
        routes.append((_internal_cost(k, eta), 1))
    if not routes:
        return brute_force_cc(p, mu, k, UTILITARIAN, force)
    if min(routes)[1] == 0:
        return utilitarian_cc_few_leaves(p, leafy, mu, k, leaf_bound)
    return utilitarian_cc_few_internal_borda(p, bushy, k, mu, internal_bound)


def cc_on_tree(
    p: Profile,
    t: Tree,
    mu: ScoringFunction,
    k: int,
    variant: str = UTILITARIAN,
    force: bool = False,
    leaf_bound: int = LEAF_BOUND,
    internal_bound: int = INTERNAL_BOUND,
) -> CCResult:
    """Best applicable routine for a given tree the profile is single-peaked on."""
    _score_fn(variant)
    _check_k(p, k)
    _check_tree(p, t)
    if variant == EGALITARIAN:
        return egalitarian_cc_tree(p, t, mu, k)
    return _utilitarian_on_trees(p, mu, k, t, t, leaf_bound, internal_bound, force)


def cc_auto(
    p: Profile,
    mu: ScoringFunction,
    k: int,
    variant: str = UTILITARIAN,
    force: bool = False,
    leaf_bound: int = LEAF_BOUND,
    internal_bound: int = INTERNAL_BOUND,
) -> CCResult:
    """Recognize the profile and pick the cheapest exact routine.

    Utilitarian instances use the fewest-leaves tree for the leaf DP and the
    fewest-internal tree for the Borda routine, whichever is estimated to be
    cheaper; profiles not single-peaked on any tree go to brute force.
    """
    _score_fn(variant)
    _check_k(p, k)
    mu.check_profile(p)
    d = build_attachment_digraph(p)
    if d is None:
        return brute_force_cc(p, mu, k, variant, force)
    if variant == EGALITARIAN:
        return egalitarian_cc_tree(p, trick_recognize(p), mu, k)
    return _utilitarian_on_trees(
        p, mu, k, min_leaves_tree(d), min_internal_tree(d), leaf_bound, internal_bound, force
    )
