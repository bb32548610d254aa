import random

import pytest

from treepeak.errors import InvalidK
from treepeak.graphs import (
    Tree,
    diameter,
    internal_vertices,
    is_caterpillar,
    is_path,
    is_single_peaked_on,
    is_star,
    is_star_subdivision,
    leaves,
    max_degree,
    verify_path_decomposition,
)
from treepeak.nice_trees import (
    bounded_degree_tree,
    find_caterpillar,
    find_path,
    find_star,
    find_star_subdivision,
    min_diameter_tree,
    min_internal_tree,
    min_leaves_tree,
    min_max_degree_tree,
    min_pathwidth_tree,
)
from treepeak.pathwidth import pathwidth_value
from treepeak.profile import Profile
from treepeak.recognition import build_attachment_digraph, enumerate_trees, random_sp_profile

a, b, c, d, e = range(5)
STAR_B = Tree.star(5, b)
RIGHT = Tree(5, ((a, b), (e, b), (b, c), (c, d)))
PATH5 = Tree.path(range(5))


def test_p2_finders(p2):
    dg = build_attachment_digraph(p2)
    assert min_internal_tree(dg) == STAR_B
    assert min_diameter_tree(dg) == STAR_B
    assert min_leaves_tree(dg) == RIGHT
    assert bounded_degree_tree(dg, 3) == RIGHT
    assert bounded_degree_tree(dg, 2) is None
    assert min_max_degree_tree(dg) == (3, RIGHT)
    t, dec = min_pathwidth_tree(dg)
    assert dec.width == 1 and verify_path_decomposition(t, dec)
    assert find_star(p2) == STAR_B
    assert find_path(p2) is None
    with pytest.raises(InvalidK):
        bounded_degree_tree(dg, 0)


def test_p1_finders(p1):
    dg = build_attachment_digraph(p1)
    for finder in (min_internal_tree, min_leaves_tree, find_caterpillar, find_star_subdivision):
        assert finder(dg) == PATH5
    assert bounded_degree_tree(dg, 2) == PATH5
    assert min_max_degree_tree(dg) == (2, PATH5)
    assert min_pathwidth_tree(dg)[1].width == 1
    assert find_star(p1) is None
    assert find_path(p1) == PATH5


def test_tiny_profiles_short_circuit():
    for m in (1, 2):
        p = Profile(m, (tuple(range(m)),))
        dg = build_attachment_digraph(p)
        only = Tree(m, ((0, 1),) if m == 2 else ())
        assert min_leaves_tree(dg) == min_internal_tree(dg) == only
        assert find_star(p) == find_path(p) == only
        t, dec = min_pathwidth_tree(dg)
        assert t == only and verify_path_decomposition(t, dec)


def _sp_instances(count, seed):
    rng = random.Random(seed)
    for j in range(count):
        m = rng.randint(3, 6)
        p, _ = random_sp_profile(m, rng.randint(1, 5), rng.randrange(10**9))
        yield p


def test_optimality_against_enumeration():
    objectives = [
        (min_internal_tree, lambda t: len(internal_vertices(t))),
        (min_diameter_tree, diameter),
        (min_leaves_tree, lambda t: len(leaves(t))),
        (lambda dg: min_max_degree_tree(dg)[1], max_degree),
        (lambda dg: min_pathwidth_tree(dg)[0], pathwidth_value),
    ]
    for p in _sp_instances(120, 1):
        dg = build_attachment_digraph(p)
        trees = list(enumerate_trees(dg))
        for finder, measure in objectives:
            got = finder(dg)
            assert is_single_peaked_on(p, got)
            assert measure(got) == min(measure(t) for t in trees)
        t, dec = min_pathwidth_tree(dg)
        assert verify_path_decomposition(t, dec) and dec.width == pathwidth_value(t)


def test_class_finders_against_enumeration():
    for p in _sp_instances(120, 2):
        dg = build_attachment_digraph(p)
        trees = list(enumerate_trees(dg))
        for found, cls in [
            (find_path(p), is_path),
            (find_star(p), is_star),
            (find_caterpillar(dg), is_caterpillar),
            (find_star_subdivision(dg), is_star_subdivision),
        ]:
            assert (found is not None) == any(cls(t) for t in trees)
            if found is not None:
                assert cls(found) and is_single_peaked_on(p, found)


def test_degree_bound_properties():
    for p in _sp_instances(60, 3):
        dg = build_attachment_digraph(p)
        assert bounded_degree_tree(dg, p.m - 1) is not None
        ok = [bounded_degree_tree(dg, k) is not None for k in range(1, p.m)]
        assert ok == sorted(ok)
        for k, flag in enumerate(ok, 1):
            if flag:
                assert max_degree(bounded_degree_tree(dg, k)) <= k


def test_min_internal_equals_min_diameter():
    for p in _sp_instances(40, 4):
        dg = build_attachment_digraph(p)
        assert min_internal_tree(dg) == min_diameter_tree(dg)


def test_min_leaves_internal_count_is_matching_size():
    from oracles import max_matching_size

    for p in _sp_instances(40, 5):
        dg = build_attachment_digraph(p)
        t = dg.sink
        s = min(x for x in dg.forced if x != t and dg.out[x] == (t,))
        edges = [(x, y) for x, y in dg.arcs if x not in (s, t)]
        assert len(internal_vertices(min_leaves_tree(dg))) == max_matching_size(edges)
