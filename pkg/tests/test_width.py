import random

import pytest

from epgap.errors import SizeLimitError
from epgap.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    disjoint_copies,
    path,
    random_gnp,
    random_pw2,
    random_ternary_tree,
    star,
    xi,
)
from epgap.width import (
    TreeDecomposition,
    make_nice,
    path_decomposition,
    pathwidth_exact,
    treewidth_exact,
    treewidth_lower_bound,
    verify_decomposition,
    verify_nice,
)

from oracles import (
    has_cycle,
    pathwidth_brute,
    treewidth_at_most_two,
    treewidth_brute,
)


def test_treewidth_known_values():
    assert treewidth_exact(path(7))[0] == 1
    assert treewidth_exact(random_ternary_tree(15, 3))[0] == 1
    assert treewidth_exact(cycle(9))[0] == 2
    assert treewidth_exact(complete(6))[0] == 5
    assert treewidth_exact(complete_bipartite(3, 3))[0] == 3
    assert treewidth_exact(Graph(4))[0] == 0
    assert treewidth_exact(star(8))[0] == 1


def test_treewidth_vs_brute_random():
    rng = random.Random(301)
    for _ in range(40):
        n = rng.randint(2, 7)
        g = random_gnp(n, rng.uniform(0.1, 0.9), rng.getrandbits(32))
        value, td = treewidth_exact(g)
        assert value == treewidth_brute(g), g
        assert td.width == value
        assert verify_decomposition(g, td) == []


def test_treewidth_vs_brute_n8():
    rng = random.Random(302)
    for _ in range(5):
        g = random_gnp(8, rng.uniform(0.3, 0.7), rng.getrandbits(32))
        assert treewidth_exact(g)[0] == treewidth_brute(g), g


def test_xi_treewidth_two():
    for r in range(2, 7):
        g = xi(r)
        value, td = treewidth_exact(g)
        assert value == 2
        assert verify_decomposition(g, td) == []
        # independent confirmation: cyclic, and reducible as a partial 2-tree
        assert has_cycle(g)
        assert treewidth_at_most_two(g)
    assert treewidth_exact(xi(1))[0] == 1  # a bare path


def test_decomposition_witness_always_valid():
    rng = random.Random(303)
    for _ in range(25):
        n = rng.randint(2, 12)
        g = random_gnp(n, rng.uniform(0.1, 0.8), rng.getrandbits(32))
        value, td = treewidth_exact(g)
        assert td.width == value
        assert verify_decomposition(g, td) == []


def test_lower_bound_sandwich():
    rng = random.Random(304)
    for _ in range(20):
        g = random_gnp(rng.randint(2, 10), rng.uniform(0.2, 0.8), rng.getrandbits(32))
        lb = treewidth_lower_bound(g)
        value, _ = treewidth_exact(g)
        assert lb <= value


def test_pathwidth_known_values():
    assert pathwidth_exact(path(9))[0] == 1
    assert pathwidth_exact(cycle(6))[0] == 2
    assert pathwidth_exact(complete(5))[0] == 4
    assert pathwidth_exact(star(7))[0] == 1
    # complete ternary tree of height 2 needs pathwidth 2
    from epgap.graphs import complete_ternary_tree

    assert pathwidth_exact(complete_ternary_tree(2))[0] == 2


def test_pathwidth_vs_brute_random():
    rng = random.Random(305)
    for _ in range(30):
        n = rng.randint(2, 7)
        g = random_gnp(n, rng.uniform(0.1, 0.9), rng.getrandbits(32))
        value, td = pathwidth_exact(g)
        assert value == pathwidth_brute(g), g
        assert verify_decomposition(g, td) == []
        # a path decomposition is also a tree decomposition, so
        # treewidth never exceeds pathwidth
        assert treewidth_exact(g)[0] <= value


def test_pathwidth_generator_consistent():
    for seed in range(8):
        g, bags = random_pw2(9, seed)
        assert pathwidth_exact(g)[0] <= 2
        assert verify_decomposition(g, path_decomposition(bags)) == []


def test_verify_decomposition_catches_violations():
    g = cycle(4)
    # missing edge coverage: bags never put 3 next to 0
    bad = TreeDecomposition(
        (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})),
        ((0, 1), (1, 2)),
    )
    assert any("edge" in p for p in verify_decomposition(g, bad))
    # vertex 0 occurs in the two end bags but not the middle one
    split = TreeDecomposition(
        (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3, 0})),
        ((0, 1), (1, 2)),
    )
    assert any("not connected" in p for p in verify_decomposition(g, split))
    missing = TreeDecomposition((frozenset({0, 1}),), ())
    assert any("missing" in p for p in verify_decomposition(g, missing))
    doubled = TreeDecomposition(
        (frozenset({0, 1}), frozenset({1, 2})), ((0, 1), (0, 1))
    )
    assert verify_decomposition(g, doubled)


def test_verify_decomposition_connectivity_clause():
    g = path(3)
    torn = TreeDecomposition(
        (frozenset({0, 1}), frozenset({2}), frozenset({0, 1, 2})),
        ((0, 1), (1, 2)),
    )
    # vertex 0 appears in bags 0 and 2 but not bag 1 between them
    assert any("not connected" in p for p in verify_decomposition(g, torn))


def test_size_limit_guards():
    with pytest.raises(SizeLimitError):
        treewidth_exact(complete(25))
    with pytest.raises(SizeLimitError):
        pathwidth_exact(complete(20))


def test_make_nice_valid_and_width_preserving():
    rng = random.Random(306)
    for _ in range(20):
        n = rng.randint(2, 10)
        g = random_gnp(n, rng.uniform(0.2, 0.8), rng.getrandbits(32))
        value, td = treewidth_exact(g)
        ntd = make_nice(g, td)
        assert verify_nice(g, ntd) == []
        assert ntd.width == value
        back = ntd.to_tree_decomposition()
        assert verify_decomposition(g, back) == []


def test_make_nice_on_disconnected_graphs():
    g = disjoint_copies(3, complete(3))
    value, td = treewidth_exact(g)
    assert value == 2
    ntd = make_nice(g, td)
    assert verify_nice(g, ntd) == []


def test_nice_node_kinds():
    g = cycle(5)
    ntd = make_nice(g, treewidth_exact(g)[1])
    kinds = {node.kind for node in ntd.nodes}
    assert kinds <= {"leaf", "introduce", "forget", "join"}
    root = ntd.nodes[ntd.root]
    assert root.bag == frozenset()
    for node in ntd.nodes:
        if node.kind == "leaf":
            assert node.bag == frozenset()
            assert node.children == ()
