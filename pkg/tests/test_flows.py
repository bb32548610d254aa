import random

import pytest

from treepeak.errors import IndexOutOfRange, NegativeCapacity
from treepeak.flows import max_bipartite_matching, max_flow
from oracles import max_matching_size, min_cut


def _is_matching(pairs, edges):
    return (
        set(pairs) <= set(edges)
        and len({u for u, _ in pairs}) == len(pairs)
        and len({v for _, v in pairs}) == len(pairs)
    )


def test_matching_examples():
    assert len(max_bipartite_matching(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])) == 2
    assert len(max_bipartite_matching(2, 1, [(0, 0), (1, 0)])) == 1
    assert max_bipartite_matching(3, 3, []) == []
    with pytest.raises(IndexOutOfRange):
        max_bipartite_matching(1, 1, [(0, 1)])


def test_matching_against_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        nl, nr = rng.randint(1, 6), rng.randint(1, 6)
        edges = [(u, v) for u in range(nl) for v in range(nr) if rng.random() < 0.35]
        got = max_bipartite_matching(nl, nr, edges)
        assert _is_matching(got, edges)
        assert len(got) == max_matching_size(edges)
        shuffled = edges[:]
        rng.shuffle(shuffled)
        assert len(max_bipartite_matching(nl, nr, shuffled)) == len(got)


def test_flow_examples():
    assert max_flow(2, [(0, 1, 3)], 0, 1) == (3, [3])
    value, flows = max_flow(4, [(0, 1, 1), (1, 3, 1), (0, 2, 1), (2, 3, 1)], 0, 3)
    assert value == 2 and flows == [1, 1, 1, 1]
    with pytest.raises(NegativeCapacity):
        max_flow(2, [(0, 1, -1)], 0, 1)
    with pytest.raises(IndexOutOfRange):
        max_flow(2, [(0, 2, 1)], 0, 1)


def test_flow_against_min_cut():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(2, 9)
        arcs = [
            (u, v, rng.randint(0, 3))
            for u in range(n)
            for v in range(n)
            if u != v and rng.random() < 0.3
        ]
        value, flows = max_flow(n, arcs, 0, n - 1)
        assert value == min_cut(n, arcs, 0, n - 1)
        balance = [0] * n
        for (u, v, cap), f in zip(arcs, flows):
            assert 0 <= f <= cap
            balance[u] -= f
            balance[v] += f
        assert all(balance[x] == 0 for x in range(1, n - 1))
        assert balance[n - 1] == value
