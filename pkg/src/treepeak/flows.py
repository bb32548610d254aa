"""Bipartite matching and integral max-flow kernels.

Both are deterministic: vertices and arcs are scanned in ascending index /
input order, so identical inputs give identical matchings and flows.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import IndexOutOfRange, NegativeCapacity

_INF = float("inf")


def max_bipartite_matching(
    left_size: int, right_size: int, edges: Iterable[tuple[int, int]]
) -> list[tuple[int, int]]:
    """Maximum-cardinality matching by Hopcroft-Karp.

    ``edges`` are ``(left, right)`` index pairs.  Returns the matched pairs
    sorted by left index.
    """
    adj = [set() for _ in range(left_size)]
    for u, v in edges:
        if not (0 <= u < left_size and 0 <= v < right_size):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside {left_size} x {right_size}")
        adj[u].add(v)
    adj = [sorted(a) for a in adj]
    match_l = [-1] * left_size
    match_r = [-1] * right_size
    dist = [0] * left_size

    def bfs() -> bool:
        queue = deque()
        for u in range(left_size):
            if match_l[u] < 0:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = -1
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w < 0:
                    found = True
                elif dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        # iterative DFS along the layered graph
        stack = [(u, iter(adj[u]))]
        trail = []
        while stack:
            x, it = stack[-1]
            advanced = False
            for v in it:
                w = match_r[v]
                if w < 0:
                    trail.append((x, v))
                    for a, b in trail:
                        match_l[a] = b
                        match_r[b] = a
                    return True
                if dist[w] == dist[x] + 1:
                    trail.append((x, v))
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                dist[x] = -1
                stack.pop()
                if trail:
                    trail.pop()
        return False

    while bfs():
        for u in range(left_size):
            if match_l[u] < 0:
                dfs(u)
    return [(u, match_l[u]) for u in range(left_size) if match_l[u] >= 0]


def max_flow(
    nodes: int, arcs: Sequence[tuple[int, int, int]], source: int, sink: int
) -> tuple[int, list[int]]:
    """Maximum integral ``source``-``sink`` flow (Dinic).

    ``arcs`` are ``(tail, head, capacity)`` triples; parallel arcs are fine.
    Returns the flow value and the flow on each input arc, in input order.
    """
    for a, b, c in arcs:
        if c < 0:
            raise NegativeCapacity(f"arc ({a}, {b}) has negative capacity {c}")
        if not (0 <= a < nodes and 0 <= b < nodes):
            raise IndexOutOfRange(f"arc ({a}, {b}) outside {nodes} nodes")
    if not (0 <= source < nodes and 0 <= sink < nodes):
        raise IndexOutOfRange("source or sink out of range")
    # residual arcs: 2j forward, 2j+1 backward
    head = []
    cap = []
    out = [[] for _ in range(nodes)]
    for a, b, c in arcs:
        out[a].append(len(head))
        head.append(b)
        cap.append(c)
        out[b].append(len(head))
        head.append(a)
        cap.append(0)
    if source == sink:
        return 0, [0] * len(arcs)

    value = 0
    while True:
        level = [-1] * nodes
        level[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for e in out[u]:
                if cap[e] > 0 and level[head[e]] < 0:
                    level[head[e]] = level[u] + 1
                    queue.append(head[e])
        if level[sink] < 0:
            break
        ptr = [0] * nodes

        def push(u: int, limit) -> int:
            if u == sink:
                return limit
            while ptr[u] < len(out[u]):
                e = out[u][ptr[u]]
                v = head[e]
                if cap[e] > 0 and level[v] == level[u] + 1:
                    got = push(v, min(limit, cap[e]))
                    if got:
                        cap[e] -= got
                        cap[e ^ 1] += got
                        return got
                ptr[u] += 1
            return 0

        while True:
            got = push(source, _INF)
            if not got:
                break
            value += got
    flows = [cap[2 * j + 1] for j in range(len(arcs))]
    return int(value), flows
