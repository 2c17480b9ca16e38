import math
import random

import pytest

from epgap.errors import ParameterError, PreconditionError
from epgap.graphs import (
    Graph,
    MultiGraph,
    complete,
    complete_bipartite,
    complete_ternary_tree,
    cycle,
    path,
    random_gnp,
    random_pw2,
    random_ternary_tree,
    xi,
)
from epgap.minors import verify_model
from epgap.structure import (
    check_pw2_minor_of_xi,
    disjoint_multiedges,
    erdos_szekeres,
    extract_k2r_from_degeneracy,
    long_path,
    low_degree_vertices,
    path_partition,
    stiebitz_partition,
    tree_cut,
)


# ------------------------------------------------------------- tree_cut

def test_tree_cut_basic():
    t = complete_ternary_tree(2)
    x = list(range(t.n))
    pieces = tree_cut(t, x, 2)
    marked = set(x)
    assert len(pieces) >= len(x) // 3 - 1
    seen: set[int] = set()
    for piece in pieces:
        assert not seen & piece
        seen |= piece
        assert len(piece & marked) >= 2
        assert t.connected_within(sum(1 << v for v in piece))


def test_tree_cut_random_trees():
    rng = random.Random(501)
    for _ in range(20):
        n = rng.randint(4, 40)
        t = random_ternary_tree(n, rng.getrandbits(32))
        k = rng.choice([2, 3])
        x = rng.sample(range(n), rng.randint(k, n))
        pieces = tree_cut(t, x, k)
        assert len(pieces) >= len(x) // (2 * k - 1) - 1
        seen: set[int] = set()
        for piece in pieces:
            assert not seen & piece
            seen |= piece
            assert len(piece & set(x)) >= k


def test_tree_cut_rejects_non_tree():
    with pytest.raises(PreconditionError):
        tree_cut(cycle(5), [0, 1, 2], 1)


def test_tree_cut_rejects_high_degree():
    with pytest.raises(PreconditionError):
        tree_cut(Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)]), [1, 2], 1)


# ---------------------------------------------------- stiebitz_partition

def test_stiebitz_property_random():
    rng = random.Random(502)
    for _ in range(30):
        n = rng.randint(2, 25)
        g = random_gnp(n, rng.uniform(0.1, 0.7), rng.getrandbits(32))
        k = rng.choice([2, 3, 4])
        partition = stiebitz_partition(g, k)
        assert sorted(v for part in partition.parts for v in part) == list(range(n))
        for v in range(n):
            own = partition.part_of(v)
            inside = sum(1 for w in g.neighbors(v) if partition.part_of(w) == own)
            # integer form of inside >= deg/k - 1
            assert k * inside >= g.degree(v) - k


def test_stiebitz_single_part():
    g = complete(4)
    partition = stiebitz_partition(g, 1)
    assert len(partition.parts) == 1
    assert partition.parts[0] == frozenset(range(4))


def test_stiebitz_rejects_bad_k():
    with pytest.raises(PreconditionError):
        stiebitz_partition(path(3), 0)


# -------------------------------------------------------- erdos_szekeres

def test_erdos_szekeres_directions():
    got = erdos_szekeres([1, 2, 3, 4, 5], 3, 3)
    assert got.direction == "increasing"
    assert len(got.indices) == 3
    got = erdos_szekeres([5, 4, 3, 2, 1], 3, 3)
    assert got.direction == "decreasing"
    assert len(got.indices) == 3


def test_erdos_szekeres_monotone_and_exact_length():
    rng = random.Random(503)
    for _ in range(60):
        k = rng.randint(2, 5)
        l = rng.randint(2, 5)
        seq = rng.sample(range(1000), (k - 1) * (l - 1) + 1)
        got = erdos_szekeres(seq, k, l)
        values = [seq[i] for i in got.indices]
        assert list(got.indices) == sorted(got.indices)
        if got.direction == "increasing":
            assert len(values) == k
            assert all(a < b for a, b in zip(values, values[1:]))
        else:
            assert len(values) == l
            assert all(a > b for a, b in zip(values, values[1:]))


def test_erdos_szekeres_rejects_short_input():
    with pytest.raises(PreconditionError):
        erdos_szekeres([3, 1], 3, 3)


def test_erdos_szekeres_rejects_duplicates():
    with pytest.raises(PreconditionError):
        erdos_szekeres([1, 1, 2, 3, 4], 3, 3)


# --------------------------------------------------- low_degree_vertices

def test_low_degree_counts():
    rng = random.Random(504)
    for _ in range(25):
        n = rng.randint(2, 25)
        g = random_gnp(n, rng.uniform(0.1, 0.8), rng.getrandbits(32))
        if g.m == 0:
            continue
        for a in (1, 2, 3):
            low = low_degree_vertices(g, a)
            assert a * len(low) > (a - 1) * n


def test_low_degree_rejects_edgeless():
    with pytest.raises(PreconditionError):
        low_degree_vertices(Graph(4), 2)
    with pytest.raises(ParameterError):
        low_degree_vertices(path(3), 0)


# ------------------------------------------- extract_k2r_from_degeneracy

def test_extract_k22_from_k5():
    models = extract_k2r_from_degeneracy(complete(5), 1, 2)
    assert len(models) == 1
    model = models[0]
    assert model.pattern == complete_bipartite(2, 2)
    assert verify_model(complete(5), model) == []


def test_extract_k22_twice_from_k9():
    g = complete(9)
    models = extract_k2r_from_degeneracy(g, 2, 2)
    assert len(models) == 2
    used: set[int] = set()
    for model in models:
        assert model.pattern == complete_bipartite(2, 2)
        assert verify_model(g, model) == []
        assert not used & model.support
        used |= model.support


def test_extract_rejects_thin_hosts():
    with pytest.raises(PreconditionError):
        extract_k2r_from_degeneracy(path(6), 1, 2)


# ----------------------------------------------- path_partition and trees

def test_long_path_on_ternary_tree():
    for height in (1, 2):
        t = complete_ternary_tree(height)
        p = long_path(t)
        assert len(set(p)) == len(p)
        for a, b in zip(p, p[1:]):
            assert t.has_edge(a, b)
        x = [v for v in range(t.n) if t.degree(v) <= 2]
        assert len(p) - 1 >= 2 * math.log2(2 * len(x) / 3) - 1e-9


def test_long_path_random_trees():
    rng = random.Random(505)
    for _ in range(20):
        t = random_ternary_tree(rng.randint(2, 40), rng.getrandbits(32))
        p = long_path(t)
        x = [v for v in range(t.n) if t.degree(v) <= 2]
        assert len(p) - 1 >= 2 * math.log2(2 * len(x) / 3) - 1e-9


def test_path_partition_clauses():
    t = complete_ternary_tree(2)
    p = long_path(t)
    partition = path_partition(t, p)
    assert len(partition.parts) == len(p)
    covered = sorted(v for part in partition.parts for v in part)
    assert covered == list(range(t.n))
    path_set = set(p)
    for anchor, part in zip(p, partition.parts):
        assert anchor in part
        assert len(part & path_set) == 1
        assert t.connected_within(sum(1 << v for v in part))


def test_path_partition_rejects_non_path():
    t = path(5)
    with pytest.raises(PreconditionError):
        path_partition(t, (0, 2))  # not consecutive in the tree


# ---------------------------------------------------- disjoint_multiedges

def _matching_multigraph(m: int, mult: int) -> MultiGraph:
    return MultiGraph(2 * m, {(i, m + i): mult for i in range(m)})


def test_disjoint_multiedges_spec_shape_instance():
    # sides of size 8, every multidegree 4, simple degree 1
    b = _matching_multigraph(8, 4)
    got = disjoint_multiedges(b, 1, 2)
    assert len(got) == 1
    (u, v), = got
    assert b.multiplicity(u, v) >= 2


def test_disjoint_multiedges_two_pairs():
    b = _matching_multigraph(32, 4)
    got = disjoint_multiedges(b, 2, 2)
    assert len(got) == 2
    ends = [x for pair in got for x in pair]
    assert len(set(ends)) == 4
    for u, v in got:
        assert b.multiplicity(u, v) >= 2


def test_disjoint_multiedges_named_supply_errors():
    # too few vertices for the low-degree selection step
    with pytest.raises(PreconditionError) as info:
        disjoint_multiedges(_matching_multigraph(2, 4), 2, 2)
    assert "side size" in str(info.value)
    with pytest.raises(PreconditionError):
        # unequal explicit sides
        disjoint_multiedges(
            _matching_multigraph(4, 2), 1, 1, sides=(range(3), range(3, 8))
        )


def test_disjoint_multiedges_low_multiplicity_fails():
    b = _matching_multigraph(8, 1)
    with pytest.raises(PreconditionError):
        disjoint_multiedges(b, 1, 2)


# ------------------------------------------------- check_pw2_minor_of_xi

def test_pw2_embeds_in_xi():
    for h in (path(5), cycle(4), cycle(6), complete(3)):
        model = check_pw2_minor_of_xi(h)
        assert model.pattern == h
        host = xi(h.n)
        assert verify_model(host, model) == []


def test_pw2_random_instances():
    rng = random.Random(506)
    for _ in range(10):
        h, _bags = random_pw2(rng.randint(1, 8), rng.getrandbits(32))
        model = check_pw2_minor_of_xi(h)
        assert verify_model(xi(h.n), model) == []


def test_pw2_rejects_wide_graphs():
    with pytest.raises(PreconditionError):
        check_pw2_minor_of_xi(complete(5))
