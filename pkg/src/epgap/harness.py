"""Seeded property-verification suite.

Each lemma id names one verifiable statement from the toolkit: a trial
draws a random or planted instance, runs the operation under test, and
re-checks the claimed guarantee from scratch. Violations are returned as
failure records carrying a seed string that replays the exact trial;
they are data, never exceptions.

Per-trial randomness comes from ``random.Random(f"{seed}:{lemma}:{trial}")``
so results are independent of execution order and thread count. Reports
hold only deterministic content; wall times go to the logger.
"""

from __future__ import annotations

import logging
import math
import random
import time
from dataclasses import dataclass

from .epd import (
    balanced_separation,
    cover_exact,
    hitting_set_recursive,
    pack_exact,
    verify_separation,
)
from .formats import write_graph6
from .graphs import (
    Graph,
    MultiGraph,
    complete,
    complete_bipartite,
    cycle,
    degeneracy,
    mask_of,
    path,
    random_gnp,
    random_pw2,
    random_ternary_tree,
    xi,
)
from .linkage import (
    LinkedPair,
    PairedLinkage,
    SteinerTree,
    linkage_to_pairs,
    mesh_to_linkage,
    pairs_to_k2r_models,
    pairs_to_xi_models,
    verify_paired_linkage,
)
from .mesh import MeshWitness, find_mesh, verify_mesh
from .minors import find_minor_model, verify_model
from .structure import (
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
from .width import make_nice, treewidth_exact

log = logging.getLogger("epgap.harness")


@dataclass(frozen=True)
class VerificationReport:
    lemma: str
    trials: int
    failures: tuple[dict, ...]
    counters: dict[str, int]
    distribution: str

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma,
            "trials": self.trials,
            "failures": list(self.failures),
            "counters": dict(sorted(self.counters.items())),
            "distribution": self.distribution,
        }


def _gnp_with_edges(rng: random.Random, n: int, p: float) -> Graph:
    """A G(n,p) draw, redrawn until it has at least one edge."""
    while True:
        g = random_gnp(n, p, rng.getrandbits(32))
        if g.m > 0:
            return g


def _g6(g: Graph) -> str:
    return write_graph6(g)


# ------------------------------------------------------------------ trials
# Every trial function takes (rng, counters) and returns a violation
# message or None; counters collect the realized instance distribution.

def _trial_smalldeg(rng: random.Random, counters: dict) -> str | None:
    n = rng.randint(4, 24)
    a = rng.choice([1, 2, 3])
    g = _gnp_with_edges(rng, n, rng.uniform(0.1, 0.6))
    counters[f"a={a}"] = counters.get(f"a={a}", 0) + 1
    out = low_degree_vertices(g, a)
    dgn = degeneracy(g).value
    expected = {v for v in range(n) if g.degree(v) < 2 * a * dgn}
    if set(out) != expected:
        return f"wrong vertex set for a={a} on {_g6(g)}"
    if len(out) * a <= (a - 1) * n:
        return (
            f"only {len(out)} of {n} vertices below 2*{a}*dgn on {_g6(g)}"
        )
    return None


def _trial_tree_cut(rng: random.Random, counters: dict) -> str | None:
    n = rng.randint(4, 60)
    k = rng.choice([2, 3])
    t = random_ternary_tree(n, rng.getrandbits(32))
    x = sorted(rng.sample(range(n), rng.randint(k, n)))
    counters[f"k={k}"] = counters.get(f"k={k}", 0) + 1
    pieces = tree_cut(t, x, k)
    marked = set(x)
    seen: set[int] = set()
    for piece in pieces:
        if seen & piece:
            return f"overlapping subtrees on n={n} k={k}"
        seen |= piece
        if len(piece & marked) < k:
            return f"subtree holds under {k} markers on n={n}"
        if not t.connected_within(mask_of(piece)):
            return f"disconnected subtree on n={n} k={k}"
    if len(pieces) < len(x) // (2 * k - 1) - 1:
        return (
            f"{len(pieces)} subtrees for |X|={len(x)}, k={k}: "
            f"below the floor guarantee"
        )
    return None


def _trial_stiebitz(rng: random.Random, counters: dict) -> str | None:
    n = rng.randint(2, 40)
    k = rng.choice([2, 3, 4])
    g = random_gnp(n, rng.uniform(0.05, 0.5), rng.getrandbits(32))
    counters[f"k={k}"] = counters.get(f"k={k}", 0) + 1
    part = stiebitz_partition(g, k)
    covered: set[int] = set()
    for block in part.parts:
        if covered & block:
            return f"overlapping parts on {_g6(g)}"
        covered |= block
    if covered != set(range(n)):
        return f"parts miss vertices on {_g6(g)}"
    for i, block in enumerate(part.parts):
        bmask = mask_of(block)
        for v in block:
            internal = (g.adj[v] & bmask).bit_count()
            if k * internal < g.degree(v) - k:
                return (
                    f"vertex {v} keeps {internal} internal neighbors of "
                    f"{g.degree(v)} in part {i}, k={k}, on {_g6(g)}"
                )
    return None


def _trial_erdos_szekeres(rng: random.Random, counters: dict) -> str | None:
    k = rng.randint(2, 5)
    l = rng.randint(2, 5)
    length = (k - 1) * (l - 1) + 1
    seq = rng.sample(range(1000), length)
    counters[f"k={k},l={l}"] = counters.get(f"k={k},l={l}", 0) + 1
    got = erdos_szekeres(seq, k, l)
    idx = got.indices
    if list(idx) != sorted(set(idx)):
        return f"indices not strictly increasing: {idx}"
    vals = [seq[i] for i in idx]
    if got.direction == "increasing":
        if len(vals) != k or any(a >= b for a, b in zip(vals, vals[1:])):
            return f"bad increasing subsequence {vals} for k={k} in {seq}"
    else:
        if len(vals) != l or any(a <= b for a, b in zip(vals, vals[1:])):
            return f"bad decreasing subsequence {vals} for l={l} in {seq}"
    return None


def _trial_path_tree(rng: random.Random, counters: dict) -> str | None:
    n = rng.randint(2, 50)
    t = random_ternary_tree(n, rng.getrandbits(32))
    p = long_path(t)
    if len(set(p)) != len(p):
        return f"path repeats a vertex on n={n}"
    for u, v in zip(p, p[1:]):
        if not t.has_edge(u, v):
            return f"path step ({u},{v}) not a tree edge on n={n}"
    low = sum(1 for v in range(n) if t.degree(v) <= 2)
    need = 2 * math.log2(2 * low / 3)
    if len(p) - 1 < need - 1e-9:
        return f"path length {len(p) - 1} below 2*log2(2*{low}/3) on n={n}"
    parts = path_partition(t, p)
    covered: set[int] = set()
    for block in parts.parts:
        if covered & block:
            return f"overlapping partition blocks on n={n}"
        covered |= block
        on_path = [v for v in block if v in set(p)]
        if len(on_path) != 1:
            return f"block holds {len(on_path)} path vertices on n={n}"
        if not any(t.degree(v) <= 2 for v in block):
            return f"block with no low-degree vertex on n={n}"
        if not t.connected_within(mask_of(block)):
            return f"disconnected partition block on n={n}"
    if covered != set(range(n)):
        return f"partition misses vertices on n={n}"
    counters["n<=20" if n <= 20 else "n>20"] = (
        counters.get("n<=20" if n <= 20 else "n>20", 0) + 1
    )
    return None


def _planted_multigraph(
    rng: random.Random, k: int, r: int
) -> MultiGraph:
    """Bipartite multigraph meeting every precondition of the disjoint
    multiedge extraction: matchings stacked to a uniform multidegree."""
    m = 4 * k * k * r
    image = list(range(m, 2 * m))
    rng.shuffle(image)
    mult: dict[tuple[int, int], int] = {}
    for i in range(m):
        mult[(i, image[i])] = r
    if k * r > 1 and rng.random() < 0.5:
        # a second matching keeps the multidegree uniform at r + 1 while
        # leaving the simple graph a union of two matchings (degeneracy 2)
        second = list(range(m, 2 * m))
        rng.shuffle(second)
        for i in range(m):
            key = (i, second[i])
            mult[key] = mult.get(key, 0) + 1
    return MultiGraph(2 * m, mult)


def _trial_independent(rng: random.Random, counters: dict) -> str | None:
    k = rng.choice([1, 2])
    r = rng.choice([1, 2, 3])
    b = _planted_multigraph(rng, k, r)
    counters[f"k={k},r={r}"] = counters.get(f"k={k},r={r}", 0) + 1
    pairs = disjoint_multiedges(b, k, r)
    if len(pairs) != k:
        return f"got {len(pairs)} multiedges, wanted {k}"
    m = b.n // 2
    ends: set[int] = set()
    for u, v in pairs:
        if (u < m) == (v < m):
            return f"multiedge ({u},{v}) does not cross the sides"
        if u in ends or v in ends:
            return f"multiedges share vertex in {pairs}"
        ends |= {u, v}
        if b.multiplicity(u, v) < r:
            return f"multiplicity {b.multiplicity(u, v)} < {r} on ({u},{v})"
    return None


def _trial_big_degec(rng: random.Random, counters: dict) -> str | None:
    k, r = rng.choice([(1, 2), (2, 2), (1, 1)])
    if (k, r) == (2, 2):
        n = 9
    elif (k, r) == (1, 2):
        n = rng.randint(5, 7)
    else:
        n = rng.randint(3, 6)
    g = complete(n)
    counters[f"K{n},k={k},r={r}"] = counters.get(f"K{n},k={k},r={r}", 0) + 1
    models = extract_k2r_from_degeneracy(g, k, r)
    if len(models) != k:
        return f"got {len(models)} models, wanted {k}"
    pattern = complete_bipartite(2, r)
    used: set[int] = set()
    for mm in models:
        if mm.pattern != pattern:
            return "model pattern mismatch"
        bad = verify_model(g, mm)
        if bad:
            return f"invalid model on K_{n}: {bad[0]}"
        if used & mm.support:
            return f"models overlap on K_{n}"
        used |= mm.support
    return None


def _trial_pw2_xi(rng: random.Random, counters: dict) -> str | None:
    n = rng.randint(1, 9)
    h, _ = random_pw2(n, rng.getrandbits(32))
    counters[f"n={n}"] = counters.get(f"n={n}", 0) + 1
    model = check_pw2_minor_of_xi(h)
    host = xi(h.n)
    if model.pattern != h:
        return f"model pattern differs from instance {_g6(h)}"
    bad = verify_model(host, model)
    if bad:
        return f"invalid model for {_g6(h)}: {bad[0]}"
    return None


def _trial_twk2r(rng: random.Random, counters: dict) -> str | None:
    n = rng.randint(8, 12)
    r = rng.choice([2, 3])
    g = random_gnp(n, rng.uniform(0.1, 0.5), rng.getrandbits(32))
    key = f"r={r}"
    counters[key] = counters.get(key, 0) + 1
    if find_minor_model(g, complete_bipartite(2, r)) is not None:
        counters["vacuous"] = counters.get("vacuous", 0) + 1
        return None
    tw = treewidth_exact(g)[0]
    if tw > 2 * r - 3:
        return (
            f"graph {_g6(g)} has no K_2,{r} minor yet treewidth "
            f"{tw} > {2 * r - 3}"
        )
    return None


def _planted_mesh(
    rng: random.Random, s: int, k: int
) -> tuple[Graph, MeshWitness]:
    """Interface path of s vertices plus k+extra hubs joined to all of it."""
    hubs = k + rng.randint(0, 1)
    n = s + hubs
    edges = [(i, i + 1) for i in range(s - 1)]
    for h in range(s, n):
        edges.extend((i, h) for i in range(s))
    g = Graph(n, edges)
    w = MeshWitness(
        side_a=frozenset(range(s)),
        side_b=frozenset(range(n)),
        tree_vertices=frozenset(range(s)),
        tree_edges=tuple((i, i + 1) for i in range(s - 1)),
    )
    return g, w


def _trial_mesh_tiny(rng: random.Random, counters: dict) -> str | None:
    if rng.random() < 0.2:
        # a long path admits no mesh of this connectivity and order
        counters["negative"] = counters.get("negative", 0) + 1
        if find_mesh(path(6), 2, 4) is not None:
            return "found a mesh in a bare path"
        return None
    s = rng.randint(3, 5)
    k = rng.choice([1, 2])
    g, planted = _planted_mesh(rng, s, k)
    counters[f"s={s},k={k}"] = counters.get(f"s={s},k={k}", 0) + 1
    if verify_mesh(g, planted, k, order=s):
        return f"planted mesh rejected at s={s} k={k}"
    found = find_mesh(g, k, s)
    if found is None:
        return f"no mesh found despite plant at s={s} k={k}"
    bad = verify_mesh(g, found, k, order=s)
    if bad:
        return f"search returned invalid mesh at s={s} k={k}: {bad[0]}"
    return None


def _trial_pack_sep(rng: random.Random, counters: dict) -> str | None:
    if rng.random() < 0.5:
        h = complete(3)
        n = rng.randint(6, 14)
        g = random_gnp(n, rng.uniform(0.2, 0.6), rng.getrandbits(32))
        counters["h=K3"] = counters.get("h=K3", 0) + 1
    else:
        h = complete_bipartite(2, 3)
        n = rng.randint(5, 10)
        g = random_gnp(n, rng.uniform(0.3, 0.7), rng.getrandbits(32))
        counters["h=K23"] = counters.get("h=K23", 0) + 1
    tw, td = treewidth_exact(g)
    sep = balanced_separation(g, h, make_nice(g, td))
    k = pack_exact(g, h)[0]
    if k == 0:
        counters["pack=0"] = counters.get("pack=0", 0) + 1
        full = frozenset(range(g.n))
        if sep.a != full or sep.b != full:
            return f"pack-zero separation not trivial on {_g6(g)}"
        return None
    if sep.order > tw + 1:
        return f"order {sep.order} > {tw + 1} on {_g6(g)}"
    bad = verify_separation(g, sep)
    if bad:
        return f"invalid separation on {_g6(g)}: {bad[0]}"
    side, _ = g.induced(sep.a - sep.b)
    if 3 * pack_exact(side, h)[0] > 2 * k:
        return f"first side packs over 2k/3 on {_g6(g)}"
    return None


def _trial_sep_ep(rng: random.Random, counters: dict) -> str | None:
    h = complete(3)
    n = rng.randint(4, 12)
    g = random_gnp(n, rng.uniform(0.2, 0.6), rng.getrandbits(32))
    tw = treewidth_exact(g)[0]
    hs = hitting_set_recursive(g, h, tw)
    rest = [v for v in range(n) if v not in hs]
    if find_minor_model(g, h, allowed=rest) is not None:
        return f"hitting set leaves a model on {_g6(g)}"
    pk = pack_exact(g, h)[0]
    if len(hs) < pk:
        return f"hitting set smaller than the packing on {_g6(g)}"
    if n <= 10:
        opt = cover_exact(g, h)[0]
        gap = len(hs) - opt
        counters[f"excess={gap}"] = counters.get(f"excess={gap}", 0) + 1
        if len(hs) < opt:
            return f"hitting set beats the optimum on {_g6(g)}"
    return None


_PATTERN_POOL = (
    ("K3", complete(3)),
    ("P3", path(3)),
    ("C4", cycle(4)),
    ("K23", complete_bipartite(2, 3)),
    ("K13", complete_bipartite(1, 3)),
)


def _trial_pack_le_cover(rng: random.Random, counters: dict) -> str | None:
    name, h = rng.choice(_PATTERN_POOL)
    n = rng.randint(4, 10)
    g = random_gnp(n, rng.uniform(0.2, 0.7), rng.getrandbits(32))
    counters[name] = counters.get(name, 0) + 1
    pk = pack_exact(g, h)[0]
    cv = cover_exact(g, h)[0]
    if pk > cv:
        return f"pack {pk} > cover {cv} for {name} on {_g6(g)}"
    return None


def _relabel(g: Graph, perm: list[int]) -> Graph:
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def _chain_instance(rng: random.Random) -> tuple[Graph, MeshWitness]:
    """Planted mesh of order 9 at connectivity 4, labels shuffled: the
    smallest instance the full extraction chain accepts."""
    hubs = rng.randint(4, 5)
    n = 9 + hubs
    edges = [(i, i + 1) for i in range(8)]
    for h in range(9, n):
        edges.extend((i, h) for i in range(9))
    perm = list(range(n))
    rng.shuffle(perm)
    g = _relabel(Graph(n, edges), perm)
    w = MeshWitness(
        side_a=frozenset(perm[i] for i in range(9)),
        side_b=frozenset(perm[i] for i in range(n)),
        tree_vertices=frozenset(perm[i] for i in range(9)),
        tree_edges=tuple(
            (min(perm[i], perm[i + 1]), max(perm[i], perm[i + 1]))
            for i in range(8)
        ),
    )
    return g, w


def _planted_pairs(
    rng: random.Random, k: int, terms: int, bundle: int
) -> tuple[Graph, PairedLinkage]:
    """k disjoint linked pairs: two terminal paths of `terms` vertices
    joined by `bundle` corridor paths with 1 or 2 interior vertices."""
    edges: list[tuple[int, int]] = []
    pairs: list[LinkedPair] = []
    base = 0
    for _ in range(k):
        a0 = base
        b0 = base + terms
        edges += [(a0 + i, a0 + i + 1) for i in range(terms - 1)]
        edges += [(b0 + i, b0 + i + 1) for i in range(terms - 1)]
        free = base + 2 * terms
        perm = list(range(terms))
        rng.shuffle(perm)
        paths = []
        for i in range(bundle):
            inner = rng.randint(1, 2)
            mids = list(range(free, free + inner))
            free += inner
            hop = [a0 + i] + mids + [b0 + perm[i]]
            edges += list(zip(hop, hop[1:]))
            paths.append(tuple(hop))
        pairs.append(
            LinkedPair(
                terminals_a=frozenset(range(a0, a0 + terms)),
                tree_a=SteinerTree(
                    frozenset(range(a0, a0 + terms)),
                    tuple((a0 + i, a0 + i + 1) for i in range(terms - 1)),
                ),
                terminals_b=frozenset(range(b0, b0 + terms)),
                tree_b=SteinerTree(
                    frozenset(range(b0, b0 + terms)),
                    tuple((b0 + i, b0 + i + 1) for i in range(terms - 1)),
                ),
                paths=tuple(paths),
            )
        )
        base = free
    return Graph(base, edges), PairedLinkage(tuple(pairs))


def _check_model_family(
    g: Graph, models, pattern: Graph, k: int
) -> str | None:
    if len(models) != k:
        return f"got {len(models)} models, wanted {k}"
    used: set[int] = set()
    for mm in models:
        if mm.pattern != pattern:
            return "model pattern mismatch"
        bad = verify_model(g, mm)
        if bad:
            return f"invalid model: {bad[0]}"
        if used & mm.support:
            return "models overlap"
        used |= mm.support
    return None


def _trial_pipelines_th1(rng: random.Random, counters: dict) -> str | None:
    if rng.random() < 0.5:
        counters["chain"] = counters.get("chain", 0) + 1
        g, w = _chain_instance(rng)
        lw = mesh_to_linkage(g, w, 1, 4)
        pl = linkage_to_pairs(g, lw, 1, 1)
        models = pairs_to_xi_models(g, pl, 1, 1)
        return _check_model_family(g, models, xi(1), 1)
    k = rng.choice([1, 2])
    r = rng.choice([2, 3])
    terms = (r - 1) * (r - 1) + 1
    counters[f"k={k},r={r}"] = counters.get(f"k={k},r={r}", 0) + 1
    g, pl = _planted_pairs(rng, k, terms, bundle=terms)
    bad = verify_paired_linkage(g, pl, bundle_size=terms)
    if bad:
        return f"planted pairing rejected: {bad[0]}"
    models = pairs_to_xi_models(g, pl, r, k)
    return _check_model_family(g, models, xi(r), k)


def _trial_pipelines_th2(rng: random.Random, counters: dict) -> str | None:
    if rng.random() < 0.25:
        counters["chain"] = counters.get("chain", 0) + 1
        g, w = _chain_instance(rng)
        lw = mesh_to_linkage(g, w, 1, 4)
        pl = linkage_to_pairs(g, lw, 1, 1)
        models = pairs_to_k2r_models(g, pl, 1, 1)
        return _check_model_family(g, models, complete_bipartite(2, 1), 1)
    k = rng.choice([1, 2])
    r = rng.choice([2, 3])
    counters[f"k={k},r={r}"] = counters.get(f"k={k},r={r}", 0) + 1
    g, pl = _planted_pairs(rng, k, terms=r, bundle=r)
    bad = verify_paired_linkage(g, pl, bundle_size=r)
    if bad:
        return f"planted pairing rejected: {bad[0]}"
    models = pairs_to_k2r_models(g, pl, r, k)
    return _check_model_family(g, models, complete_bipartite(2, r), k)


_LEMMAS = {
    "smalldeg": (
        _trial_smalldeg,
        "G(n,p), n in 4..24, p in 0.10..0.60 with at least one edge, "
        "a in {1,2,3}",
    ),
    "tree_cut": (
        _trial_tree_cut,
        "random ternary trees, n in 4..60, k in {2,3}, markers a random "
        "subset of size >= k",
    ),
    "stiebitz": (
        _trial_stiebitz,
        "G(n,p), n in 2..40, p in 0.05..0.50, k in {2,3,4}",
    ),
    "erdos_szekeres": (
        _trial_erdos_szekeres,
        "distinct sequences at threshold length (k-1)(l-1)+1, "
        "k,l in 2..5",
    ),
    "path_tree": (
        _trial_path_tree,
        "random ternary trees, n in 2..50; diameter path then partition",
    ),
    "independent": (
        _trial_independent,
        "stacked random matchings with uniform multidegree, k in {1,2}, "
        "r in {1,2,3}",
    ),
    "big_degec": (
        _trial_big_degec,
        "complete hosts K_3..K_9 with (k,r) in {(1,1),(1,2),(2,2)}",
    ),
    "pw2_xi": (
        _trial_pw2_xi,
        "random pathwidth-<=2 graphs, n in 1..9",
    ),
    "twk2r": (
        _trial_twk2r,
        "G(n,p), n in 8..12, p in 0.10..0.50, r in {2,3}; graphs with a "
        "K_2,r minor count as vacuous",
    ),
    "mesh_tiny": (
        _trial_mesh_tiny,
        "planted interface paths with hubs, s in 3..5, k in {1,2}; one "
        "fifth negative path instances",
    ),
    "pack_sep": (
        _trial_pack_sep,
        "G(n,p) hosts vs K_3 (n in 6..14) and K_2,3 (n in 5..10)",
    ),
    "sep_ep": (
        _trial_sep_ep,
        "G(n,p) hosts vs K_3, n in 4..12; optimum compared when n <= 10",
    ),
    "pack_le_cover": (
        _trial_pack_le_cover,
        "G(n,p) hosts, n in 4..10, patterns K3/P3/C4/K23/K13",
    ),
    "pipelines_th1": (
        _trial_pipelines_th1,
        "half full chains from planted meshes (order 9, connectivity 4), "
        "half planted pairings with k in {1,2}, r in {2,3}",
    ),
    "pipelines_th2": (
        _trial_pipelines_th2,
        "quarter full chains, rest planted pairings with k in {1,2}, "
        "r in {2,3}",
    ),
}

LEMMA_IDS = tuple(_LEMMAS)


def run_lemma_trial(lemma: str, trial_seed: str) -> str | None:
    """One trial from its replay seed; the failure message, or None.

    Library exceptions count as violations (the guarantee under test did
    not hold), so they come back as messages rather than propagating.
    """
    if lemma not in _LEMMAS:
        raise ValueError(f"unknown lemma id: {lemma}")
    fn = _LEMMAS[lemma][0]
    rng = random.Random(trial_seed)
    try:
        return fn(rng, {})
    except Exception as exc:
        return f"{type(exc).__name__}: {exc}"


def run_verification_suite(
    seed: int,
    trials: int,
    lemmas: tuple[str, ...] | None = None,
) -> list[VerificationReport]:
    """All requested lemma suites, deterministically derived from seed."""
    chosen = LEMMA_IDS if lemmas is None else tuple(lemmas)
    for lemma in chosen:
        if lemma not in _LEMMAS:
            raise ValueError(f"unknown lemma id: {lemma}")
    reports = []
    for lemma in chosen:
        fn, distribution = _LEMMAS[lemma]
        counters: dict[str, int] = {}
        failures = []
        started = time.monotonic()
        for trial in range(trials):
            trial_seed = f"{seed}:{lemma}:{trial}"
            rng = random.Random(trial_seed)
            try:
                message = fn(rng, counters)
            except Exception as exc:
                message = f"{type(exc).__name__}: {exc}"
            if message is not None:
                failures.append(
                    {"trial": trial, "seed": trial_seed, "message": message}
                )
        log.info(
            "%s: %d trials, %d failures, %.2fs",
            lemma, trials, len(failures), time.monotonic() - started,
        )
        reports.append(
            VerificationReport(
                lemma=lemma,
                trials=trials,
                failures=tuple(failures),
                counters=counters,
                distribution=distribution,
            )
        )
    return reports
