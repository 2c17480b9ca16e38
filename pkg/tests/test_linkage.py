import random

import pytest

from epgap.errors import ParameterError, PreconditionError
from epgap.graphs import Graph, complete_bipartite, xi
from epgap.harness import _chain_instance, _planted_pairs
from epgap.linkage import (
    LinkageWitness,
    LinkedPair,
    PairedLinkage,
    SteinerTree,
    linkage_to_pairs,
    mesh_to_linkage,
    pairs_to_k2r_models,
    pairs_to_xi_models,
    verify_linkage,
    verify_paired_linkage,
)
from epgap.mesh import verify_mesh
from epgap.minors import verify_model


def test_chain_instance_is_a_valid_mesh():
    rng = random.Random(601)
    g, w = _chain_instance(rng)
    assert verify_mesh(g, w, 4, order=9, s_limit=9, k_limit=4) == []


def test_mesh_to_linkage_smallest_parameters():
    rng = random.Random(602)
    g, w = _chain_instance(rng)
    lw = mesh_to_linkage(g, w, 1, 4)
    assert len(lw.terminal_sets) == 8
    assert all(len(ts) == 1 for ts in lw.terminal_sets)
    assert len(lw.paths) == 4
    assert verify_linkage(g, lw, 1, 4) == []


def test_mesh_to_linkage_rejects_bad_parameters():
    rng = random.Random(603)
    g, w = _chain_instance(rng)
    with pytest.raises(ParameterError):
        mesh_to_linkage(g, w, 0, 4)
    with pytest.raises(PreconditionError):
        # mesh order 9 cannot supply a (2,4) linkage: needs order 27
        mesh_to_linkage(g, w, 2, 4)


def test_planted_linkage_verifies():
    rng = random.Random(604)
    g, pl = _planted_pairs(rng, 2, 3, 3)
    assert verify_paired_linkage(g, pl) == []
    assert verify_paired_linkage(g, pl, bundle_size=3) == []


def test_verify_paired_linkage_flags_overlap():
    rng = random.Random(605)
    g, pl = _planted_pairs(rng, 2, 2, 2)
    first, second = pl.pairs
    # give the second pair the first pair's a-side tree: overlap
    mangled = PairedLinkage(
        (
            first,
            LinkedPair(
                terminals_a=first.terminals_a,
                tree_a=first.tree_a,
                terminals_b=second.terminals_b,
                tree_b=second.tree_b,
                paths=second.paths,
            ),
        )
    )
    assert verify_paired_linkage(g, mangled) != []


def test_verify_linkage_counts_sets_and_paths():
    rng = random.Random(606)
    g, w = _chain_instance(rng)
    lw = mesh_to_linkage(g, w, 1, 4)
    # wrong q: expects 2q sets of size p and q^2... pq paths
    assert verify_linkage(g, lw, 1, 3) != []
    assert verify_linkage(g, lw, 2, 2) != []


def test_verify_linkage_flags_short_paths():
    # paths must have at least one interior vertex
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    lw = LinkageWitness(
        terminal_sets=(frozenset({0}), frozenset({2})),
        trees=(
            SteinerTree(frozenset({0}), ()),
            SteinerTree(frozenset({2}), ()),
        ),
        paths=((0, 3, 2),),
        tree_support=frozenset({0, 2}),
    )
    assert verify_linkage(g, lw, 1, 1) == []
    too_short = LinkageWitness(
        terminal_sets=(frozenset({0}), frozenset({1})),
        trees=(
            SteinerTree(frozenset({0}), ()),
            SteinerTree(frozenset({1}), ()),
        ),
        paths=((0, 1),),
        tree_support=frozenset({0, 1}),
    )
    assert verify_linkage(g, too_short, 1, 1) != []


def test_linkage_to_pairs_smallest_parameters():
    rng = random.Random(607)
    g, w = _chain_instance(rng)
    lw = mesh_to_linkage(g, w, 1, 4)
    pl = linkage_to_pairs(g, lw, 1, 1)
    assert len(pl.pairs) == 1
    assert verify_paired_linkage(g, pl, bundle_size=1) == []


def test_linkage_to_pairs_rejects_wrong_shape():
    rng = random.Random(608)
    g, w = _chain_instance(rng)
    lw = mesh_to_linkage(g, w, 1, 4)
    with pytest.raises(PreconditionError):
        linkage_to_pairs(g, lw, 2, 1)  # needs 8p^2q = 32 sets, has 8


def test_pairs_to_xi_models_r1():
    rng = random.Random(609)
    g, pl = _planted_pairs(rng, 1, 1, 1)
    models = pairs_to_xi_models(g, pl, 1, 1)
    assert len(models) == 1
    assert models[0].pattern == xi(1)
    assert verify_model(g, models[0]) == []


def test_pairs_to_xi_models_r2_and_disjointness():
    rng = random.Random(610)
    for trial in range(5):
        terms = 2  # (r-1)^2 + 1 for r = 2
        g, pl = _planted_pairs(rng, 2, terms, terms)
        models = pairs_to_xi_models(g, pl, 2, 2)
        assert len(models) == 2
        used: set[int] = set()
        for m in models:
            assert m.pattern == xi(2)
            assert verify_model(g, m) == []
            assert not used & m.support
            used |= m.support


def test_pairs_to_xi_models_r3():
    rng = random.Random(611)
    terms = 5  # (r-1)^2 + 1 for r = 3
    g, pl = _planted_pairs(rng, 1, terms, terms)
    models = pairs_to_xi_models(g, pl, 3, 1)
    assert len(models) == 1
    assert models[0].pattern == xi(3)
    assert verify_model(g, models[0]) == []


def test_pairs_to_xi_models_needs_enough_terminals():
    rng = random.Random(612)
    g, pl = _planted_pairs(rng, 1, 2, 2)
    with pytest.raises(PreconditionError):
        pairs_to_xi_models(g, pl, 3, 1)  # needs 5 ordered terminals


def test_pairs_to_k2r_models():
    rng = random.Random(613)
    for r in (1, 2, 3):
        g, pl = _planted_pairs(rng, 1, r, r)
        models = pairs_to_k2r_models(g, pl, r, 1)
        assert len(models) == 1
        assert models[0].pattern == complete_bipartite(2, r)
        assert verify_model(g, models[0]) == []


def test_pairs_to_k2r_models_disjoint_across_pairs():
    rng = random.Random(614)
    g, pl = _planted_pairs(rng, 2, 2, 2)
    models = pairs_to_k2r_models(g, pl, 2, 2)
    assert len(models) == 2
    assert not models[0].support & models[1].support


def test_full_chain_end_to_end():
    rng = random.Random(615)
    g, w = _chain_instance(rng)
    lw = mesh_to_linkage(g, w, 1, 4)
    pl = linkage_to_pairs(g, lw, 1, 1)
    xi_models = pairs_to_xi_models(g, pl, 1, 1)
    assert len(xi_models) == 1
    assert verify_model(g, xi_models[0]) == []
    k2r_models = pairs_to_k2r_models(g, pl, 1, 1)
    assert len(k2r_models) == 1
    assert k2r_models[0].pattern == complete_bipartite(2, 1)
    assert verify_model(g, k2r_models[0]) == []
