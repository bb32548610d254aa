"""Trees, digraphs and path decompositions over candidate indices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import IndexOutOfRange, InvalidTree, MalformedInput, SizeMismatch
from .profile import Profile


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Tree:
    """Undirected tree on vertices ``0..m-1``.

    Edges are canonicalized to sorted ``(min, max)`` pairs.
    """

    m: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.m < 1:
            raise InvalidTree("a tree needs at least one vertex")
        edges = tuple(sorted({_edge(int(u), int(v)) for u, v in self.edges}))
        object.__setattr__(self, "edges", edges)
        if len(edges) != self.m - 1:
            raise InvalidTree(f"{len(edges)} distinct edges given, a tree on {self.m} vertices has {self.m - 1}")
        adj = [[] for _ in range(self.m)]
        for u, v in edges:
            if u == v or not (0 <= u < self.m and 0 <= v < self.m):
                raise InvalidTree(f"bad edge ({u}, {v})")
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))
        if len(_reach(self.adj, 0)) != self.m:
            raise InvalidTree("edge set is not connected")

    @classmethod
    def path(cls, order: Sequence[int]) -> Tree:
        return cls(len(order), tuple(zip(order, order[1:])))

    @classmethod
    def star(cls, m: int, center: int) -> Tree:
        return cls(m, tuple((center, v) for v in range(m) if v != center))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]


def _reach(adj, start: int, allowed: Optional[set] = None) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen and (allowed is None or v in allowed):
                seen.add(v)
                stack.append(v)
    return seen


@dataclass(frozen=True)
class Digraph:
    m: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        arcs = frozenset((int(a), int(b)) for a, b in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for a, b in arcs:
            if a == b:
                raise InvalidTree(f"self-loop at {a}")
            if not (0 <= a < self.m and 0 <= b < self.m):
                raise IndexOutOfRange(f"arc ({a}, {b}) out of range")

    def out_neighbors(self, a: int) -> list[int]:
        return sorted(b for x, b in self.arcs if x == a)


@dataclass(frozen=True)
class PathDecomposition:
    bags: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def verify_path_decomposition(t: Tree, d: PathDecomposition) -> bool:
    """True iff every edge sits in a bag and every vertex's bags are contiguous.

    Every vertex must also occur in at least one bag.
    """
    for u, v in t.edges:
        if not any(u in b and v in b for b in d.bags):
            return False
    for v in range(t.m):
        hits = [j for j, b in enumerate(d.bags) if v in b]
        if not hits or hits[-1] - hits[0] + 1 != len(hits):
            return False
    return all(0 <= v < t.m for b in d.bags for v in b)


def is_connected_in_tree(t: Tree, s: Iterable[int]) -> bool:
    s = set(s)
    for v in s:
        if not 0 <= v < t.m:
            raise IndexOutOfRange(f"vertex {v} out of range")
    if len(s) <= 1:
        return True
    return len(_reach(t.adj, next(iter(s)), s)) == len(s)


def is_single_peaked_on(p: Profile, t: Tree) -> bool:
    """Every top-initial segment of every vote is connected in ``t``.

    Growing each vote's prefix one candidate at a time, the new candidate
    must be adjacent to something already in the prefix.
    """
    if p.m != t.m:
        raise SizeMismatch(f"profile has {p.m} candidates, tree has {t.m} vertices")
    for vote in p.votes:
        inside = [False] * p.m
        inside[vote[0]] = True
        for c in vote[1:]:
            if not any(inside[x] for x in t.adj[c]):
                return False
            inside[c] = True
    return True


def distances_from(t: Tree, source: int) -> list[int]:
    dist = [-1] * t.m
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in t.adj[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def tree_path(t: Tree, u: int, v: int) -> list[int]:
    """Vertices on the unique ``u``-``v`` path, endpoints included."""
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in t.adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def diameter(t: Tree) -> int:
    d0 = distances_from(t, 0)
    far = max(range(t.m), key=d0.__getitem__)
    return max(distances_from(t, far))


def leaves(t: Tree) -> frozenset[int]:
    """Degree-1 vertices; a single-vertex tree reports its vertex as a leaf."""
    if t.m == 1:
        return frozenset((0,))
    return frozenset(v for v in range(t.m) if t.degree(v) == 1)


def internal_vertices(t: Tree) -> frozenset[int]:
    return frozenset(range(t.m)) - leaves(t)


def max_degree(t: Tree) -> int:
    return max(t.degree(v) for v in range(t.m))


def is_path(t: Tree) -> bool:
    return max_degree(t) <= 2


def is_star(t: Tree) -> bool:
    return t.m <= 3 or max_degree(t) == t.m - 1


def is_caterpillar(t: Tree) -> bool:
    """Removing all leaves leaves a path (or nothing)."""
    if t.m <= 2:
        return True
    spine = internal_vertices(t)
    return all(sum(1 for u in t.adj[v] if u in spine) <= 2 for v in spine)


def is_star_subdivision(t: Tree) -> bool:
    return sum(1 for v in range(t.m) if t.degree(v) >= 3) <= 1


def classify(t: Tree) -> frozenset:
    """Class tags of ``t``: ``"path"``, ``"star"``, ``"caterpillar"``,
    ``"star_subdivision"`` and ``("k_regular", k)``.

    Trees with at most two vertices carry every shape tag; ``k_regular`` is
    only reported when there are internal vertices to agree on a degree.
    """
    tags = set()
    if is_path(t):
        tags.add("path")
    if is_star(t):
        tags.add("star")
    if is_caterpillar(t):
        tags.add("caterpillar")
    if is_star_subdivision(t):
        tags.add("star_subdivision")
    degrees = {t.degree(v) for v in internal_vertices(t)}
    if len(degrees) == 1:
        tags.add(("k_regular", degrees.pop()))
    return frozenset(tags)


# --- text formats ---------------------------------------------------------


def parse_tree(text: str, m: Optional[int] = None) -> Tree:
    """Read ``u v`` edge lines (1-based); ``#`` lines are comments."""
    edges = []
    for k, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2 or not all(f.isdigit() for f in fields):
            raise MalformedInput(f"tree line {k}: expected 'u v'")
        u, v = int(fields[0]) - 1, int(fields[1]) - 1
        if u < 0 or v < 0:
            raise MalformedInput(f"tree line {k}: vertices are numbered from 1")
        edges.append((u, v))
    if m is None:
        m = len(edges) + 1
    if len(edges) != m - 1:
        raise SizeMismatch(f"tree has {len(edges)} edges, expected {m - 1} for {m} vertices")
    return Tree(m, tuple(edges))


def format_tree(t: Tree) -> str:
    return "".join(f"{u + 1} {v + 1}\n" for u, v in t.edges)


def format_decomposition(d: PathDecomposition) -> str:
    return "".join(" ".join(str(v + 1) for v in sorted(b)) + "\n" for b in d.bags)
