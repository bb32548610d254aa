"""Recognizing profiles single-peaked on a tree and describing all such trees.

The attachment digraph records, for every candidate peeled off as somebody's
bottom choice, every legal neighbour it could be attached to.  Picking one
outgoing arc per non-sink vertex gives exactly the trees the profile is
single-peaked on.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional

from .errors import IllegalAttachment, NotFree
from .graphs import Digraph, Tree, _reach
from .profile import Profile


def _attachment_set(p: Profile, rest: list[int], a: int) -> set[int]:
    """Intersection over voters of the legal attachment points of ``a`` within ``rest``."""
    allowed = None
    for i in range(p.n):
        row = p._pos[i]
        best = min(rest, key=row.__getitem__)
        if best == a:
            mine = {min((c for c in rest if c != a), key=row.__getitem__)}
        else:
            mine = {c for c in rest if row[c] < row[a]}
        allowed = mine if allowed is None else allowed & mine
        if not allowed:
            break
    return allowed


def _peel(p: Profile):
    """Run the bottom-peeling loop once.

    Returns ``(layers, choices, final)`` where ``choices`` maps every peeled
    candidate to its attachment set, or ``None`` when some attachment set is
    empty.
    """
    rest = list(range(p.m))
    layers: list[list[int]] = []
    choices: dict[int, set[int]] = {}
    while len(rest) >= 3:
        bottoms = sorted({max(rest, key=p._pos[i].__getitem__) for i in range(p.n)})
        for a in bottoms:
            allowed = _attachment_set(p, rest, a)
            if not allowed:
                return None
            choices[a] = allowed
        layers.append(bottoms)
        gone = set(bottoms)
        rest = [c for c in rest if c not in gone]
    return layers, choices, rest


@dataclass(frozen=True)
class AttachmentDigraph:
    digraph: Digraph
    layers: tuple[int, ...]
    sink: int
    out: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def m(self) -> int:
        return self.digraph.m

    @property
    def arcs(self) -> frozenset[tuple[int, int]]:
        return self.digraph.arcs

    @property
    def forced(self) -> frozenset[int]:
        return frozenset(a for a in range(self.m) if len(self.out[a]) <= 1)

    @property
    def free(self) -> frozenset[int]:
        return frozenset(a for a in range(self.m) if len(self.out[a]) >= 2)

    def has_arc(self, a: int, b: int) -> bool:
        return b in self.out[a]

    def forced_tree_edges(self) -> list[tuple[int, int]]:
        """Edges of the undirected forced part (every forced non-sink keeps its arc)."""
        forced = self.forced
        return sorted(
            (min(a, self.out[a][0]), max(a, self.out[a][0]))
            for a in forced
            if a != self.sink
        )


def build_attachment_digraph(p: Profile) -> Optional[AttachmentDigraph]:
    """Attachment digraph of ``p``, or ``None`` if ``p`` is not single-peaked on any tree.

    When two candidates remain at the end, the arc between them points from
    the one voter 1 ranks second to the one voter 1 ranks first.
    """
    peeled = _peel(p)
    if peeled is None:
        return None
    layers, choices, final = peeled
    out = [()] * p.m
    for a, allowed in choices.items():
        out[a] = tuple(sorted(allowed))
    layer_of = [0] * p.m
    for r, layer in enumerate(layers):
        for a in layer:
            layer_of[a] = r
    for a in final:
        layer_of[a] = len(layers)
    if len(final) == 2:
        x, y = sorted(final, key=p._pos[0].__getitem__)
        out[y] = (x,)
        sink = x
    else:
        sink = final[0]
    arcs = frozenset((a, b) for a in range(p.m) for b in out[a])
    return AttachmentDigraph(Digraph(p.m, arcs), tuple(layer_of), sink, tuple(out))


def trick_recognize(p: Profile) -> Optional[Tree]:
    """Some tree ``p`` is single-peaked on, attaching each peeled candidate to
    the smallest-index legal neighbour; ``None`` if there is none."""
    peeled = _peel(p)
    if peeled is None:
        return None
    _, choices, final = peeled
    edges = [(a, min(allowed)) for a, allowed in choices.items()]
    if len(final) == 2:
        edges.append(tuple(final))
    return Tree(p.m, tuple(edges))


def count_trees(d: AttachmentDigraph) -> int:
    return math.prod(len(d.out[a]) for a in range(d.m) if a != d.sink)


def tree_from_attachment(d: AttachmentDigraph, f: Mapping[int, int]) -> Tree:
    """The tree with edges ``{a, f(a)}`` for every non-sink ``a``."""
    edges = []
    for a in range(d.m):
        if a == d.sink:
            continue
        if a not in f or not d.has_arc(a, f[a]):
            raise IllegalAttachment(f"no arc {a} -> {f.get(a)}")
        edges.append((a, f[a]))
    return Tree(d.m, tuple(edges))


def enumerate_trees(d: AttachmentDigraph, limit: Optional[int] = None) -> Iterator[Tree]:
    """All trees of the digraph, in lexicographic order of attachment choices."""
    movers = [a for a in range(d.m) if a != d.sink]
    choice = [0] * len(movers)
    produced = 0
    while limit is None or produced < limit:
        yield Tree(d.m, tuple((a, d.out[a][c]) for a, c in zip(movers, choice)))
        produced += 1
        j = len(movers) - 1
        while j >= 0 and choice[j] + 1 == len(d.out[movers[j]]):
            choice[j] = 0
            j -= 1
        if j < 0:
            return
        choice[j] += 1


def two_forced_neighbors(d: AttachmentDigraph, a: int) -> tuple[int, int]:
    """Lexicographically smallest pair ``(b, c)``, ``b < c``, of forced
    out-neighbours of free vertex ``a`` joined by an arc (either direction)."""
    if len(d.out[a]) < 2:
        raise NotFree(f"candidate {a} is forced")
    forced = d.forced
    targets = [b for b in d.out[a] if b in forced]
    for i, b in enumerate(targets):
        for c in targets[i + 1:]:
            if d.has_arc(b, c) or d.has_arc(c, b):
                return b, c
    raise AssertionError(f"free vertex {a} lacks two adjacent forced out-neighbours")


def validate_attachment_digraph(d: AttachmentDigraph) -> list[str]:
    """Check the structural invariants every attachment digraph satisfies.

    Returns a list of violation messages (empty when all hold): acyclic with
    a unique sink, arcs point to strictly later layers, circumtransitivity,
    the forced part is a tree, and each free vertex has two adjacent forced
    out-neighbours.
    """
    problems = []
    m = d.m
    sinks = [a for a in range(m) if not d.out[a]]
    if sinks != [d.sink]:
        problems.append(f"sinks {sinks}, expected exactly [{d.sink}]")
    indeg = [0] * m
    for a, b in d.arcs:
        indeg[b] += 1
    queue = [a for a in range(m) if indeg[a] == 0]
    seen = 0
    while queue:
        a = queue.pop()
        seen += 1
        for b in d.out[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                queue.append(b)
    if seen != m:
        problems.append("digraph has a directed cycle")
    final_layer = max(d.layers)
    for a, b in d.arcs:
        la, lb = d.layers[a], d.layers[b]
        if not (lb > la or (la == lb == final_layer)):
            problems.append(f"arc {a}->{b} does not point to a later layer")
    forced, free = d.forced, d.free
    for a in forced:
        for b in d.out[a]:
            if b not in forced:
                problems.append(f"forced {a} points to free {b}")
    for a in free:
        for b in d.out[a]:
            if b in free:
                for c in d.out[b]:
                    if not d.has_arc(a, c):
                        problems.append(f"free arcs {a}->{b}->{c} lack {a}->{c}")
    edges = d.forced_tree_edges()
    adj = {a: [] for a in forced}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if len(edges) != len(forced) - 1 or len(_reach(adj, d.sink)) != len(forced):
        problems.append("forced part is not a tree")
    if m >= 3:
        for a in free:
            try:
                two_forced_neighbors(d, a)
            except AssertionError as exc:
                problems.append(str(exc))
    return problems


def random_tree(m: int, rng: random.Random) -> Tree:
    """Uniform labelled tree via a random Pruefer sequence."""
    if m == 1:
        return Tree(1, ())
    return prufer_decode([rng.randrange(m) for _ in range(m - 2)], m)


def prufer_decode(seq, m: int) -> Tree:
    degree = [1] * m
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(m) if degree[i] == 1]
    edges.append((u, v))
    return Tree(m, tuple(edges))


def random_sp_profile(m: int, n: int, seed: int) -> tuple[Profile, Tree]:
    """A random tree and ``n`` votes grown outward from random peaks along it.

    Each vote starts at a uniformly random candidate and repeatedly appends a
    uniformly random candidate adjacent to what has been ranked so far, so the
    profile is single-peaked on the tree by construction.
    """
    rng = random.Random(seed)
    t = random_tree(m, rng)
    votes = []
    for _ in range(n):
        peak = rng.randrange(m)
        vote = [peak]
        placed = {peak}
        frontier = set(t.adj[peak])
        while frontier:
            c = rng.choice(sorted(frontier))
            vote.append(c)
            placed.add(c)
            frontier.discard(c)
            frontier.update(x for x in t.adj[c] if x not in placed)
        votes.append(tuple(vote))
    return Profile(m, tuple(votes)), t
