"""Linkage witnesses and the extraction pipelines built on them.

The chain runs: a mesh yields a linkage (terminal sets on disjoint subtrees
of the mesh tree, plus externally routed disjoint paths); a large linkage
yields paired terminal sets with concentrated path bundles; a paired
linkage converts into disjoint ladder models (via monotone subsequences of
terminal orderings) or complete-bipartite models (by contracting each
bundle path to a single middle vertex).

All pipeline outputs are verified before being returned: emitted models
pass the model checker and are pairwise disjoint, and intermediate
witnesses satisfy their stated clauses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError, PreconditionError, WitnessError
from .flows import vertex_disjoint_paths
from .graphs import Graph, MultiGraph, complete_bipartite, mask_of, xi
from .mesh import MeshWitness, verify_mesh
from .minors import MinorModel, verify_model
from .structure import disjoint_multiedges, erdos_szekeres, tree_cut


@dataclass(frozen=True)
class SteinerTree:
    """A tree living inside a host graph, stored by its vertices and edges."""

    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class LinkageWitness:
    """2q terminal sets of size p on disjoint trees inside the tree support,
    with pq vertex-disjoint paths of length >= 2 crossing from the first q
    sets to the last q, interiors avoiding the support and all sets."""

    terminal_sets: tuple[frozenset[int], ...]
    trees: tuple[SteinerTree, ...]
    paths: tuple[tuple[int, ...], ...]
    tree_support: frozenset[int]


@dataclass(frozen=True)
class LinkedPair:
    terminals_a: frozenset[int]
    tree_a: SteinerTree
    terminals_b: frozenset[int]
    tree_b: SteinerTree
    paths: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class PairedLinkage:
    """Disjoint terminal-set pairs, each joined by its own path bundle."""

    pairs: tuple[LinkedPair, ...]


def _tree_violations(g: Graph, st: SteinerTree, label: str) -> list[str]:
    out = []
    if not st.vertices:
        return [f"{label} has no vertices"]
    for u, v in st.edges:
        if u not in st.vertices or v not in st.vertices:
            return [f"{label} edge ({u},{v}) leaves its vertex set"]
        if not g.has_edge(u, v):
            return [f"{label} edge ({u},{v}) is not a host edge"]
    sub = Graph(g.n, st.edges)
    if len(st.edges) != len(st.vertices) - 1 or not sub.connected_within(
        mask_of(st.vertices)
    ):
        out.append(f"{label} is not a tree")
    return out


def _path_violations(
    g: Graph, path: tuple[int, ...], label: str, min_edges: int = 2
) -> list[str]:
    if len(set(path)) != len(path):
        return [f"{label} repeats a vertex"]
    if len(path) < min_edges + 1:
        return [f"{label} has fewer than {min_edges} edges"]
    for u, v in zip(path, path[1:]):
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            return [f"{label} step ({u},{v}) is not a host edge"]
    return []


def verify_linkage(g: Graph, lw: LinkageWitness, p: int, q: int) -> list[str]:
    """All violated linkage clauses for parameters (p, q). Empty = valid."""
    out: list[str] = []
    if len(lw.terminal_sets) != 2 * q:
        out.append(f"expected {2 * q} terminal sets, got {len(lw.terminal_sets)}")
    if len(lw.trees) != len(lw.terminal_sets):
        out.append("tree count differs from terminal-set count")
        return out
    if len(lw.paths) != p * q:
        out.append(f"expected {p * q} paths, got {len(lw.paths)}")
    for i, ts in enumerate(lw.terminal_sets):
        if len(ts) != p:
            out.append(f"terminal set {i} has size {len(ts)}, expected {p}")
    for i, (ts, tree) in enumerate(zip(lw.terminal_sets, lw.trees)):
        out.extend(_tree_violations(g, tree, f"tree {i}"))
        if not ts <= tree.vertices:
            out.append(f"terminal set {i} leaves its tree")
        if not tree.vertices <= lw.tree_support:
            out.append(f"tree {i} leaves the tree support")
    for i in range(len(lw.trees)):
        for j in range(i + 1, len(lw.trees)):
            if lw.trees[i].vertices & lw.trees[j].vertices:
                out.append(f"tree disjointness fails for trees {i} and {j}")
    half = len(lw.terminal_sets) // 2
    all_terminals = frozenset().union(*lw.terminal_sets) if lw.terminal_sets else frozenset()
    for idx, path in enumerate(lw.paths):
        out.extend(_path_violations(g, path, f"path {idx}"))
        if len(path) < 2:
            continue
        src_sets = [i for i, ts in enumerate(lw.terminal_sets) if path[0] in ts]
        dst_sets = [i for i, ts in enumerate(lw.terminal_sets) if path[-1] in ts]
        if len(src_sets) != 1 or len(dst_sets) != 1:
            out.append(f"path {idx} endpoints not in exactly one terminal set each")
            continue
        lo, hi = sorted((src_sets[0], dst_sets[0]))
        if not (lo < half <= hi):
            out.append(f"path {idx} does not cross between the two halves")
        interior = set(path[1:-1])
        if interior & all_terminals:
            out.append(f"path {idx} passes through a terminal")
        if interior & lw.tree_support:
            out.append(f"path {idx} interior enters the tree support")
    used: set[int] = set()
    for idx, path in enumerate(lw.paths):
        if used & set(path):
            out.append(f"path {idx} shares a vertex with an earlier path")
        used |= set(path)
    return out


def verify_paired_linkage(
    g: Graph, pl: PairedLinkage, bundle_size: int | None = None
) -> list[str]:
    """All violated paired-linkage clauses. Empty = valid."""
    out: list[str] = []
    seen_tree: set[int] = set()
    seen_path: set[int] = set()
    for i, pair in enumerate(pl.pairs):
        for side, ts, tree in (
            ("a", pair.terminals_a, pair.tree_a),
            ("b", pair.terminals_b, pair.tree_b),
        ):
            out.extend(_tree_violations(g, tree, f"pair {i} tree {side}"))
            if not ts <= tree.vertices:
                out.append(f"pair {i} terminal set {side} leaves its tree")
            if seen_tree & tree.vertices:
                out.append(f"pair {i} tree {side} overlaps earlier structure")
            seen_tree |= tree.vertices
        if bundle_size is not None and len(pair.paths) != bundle_size:
            out.append(
                f"pair {i} bundle has {len(pair.paths)} paths, expected {bundle_size}"
            )
        for jdx, path in enumerate(pair.paths):
            out.extend(_path_violations(g, path, f"pair {i} path {jdx}"))
            if len(path) >= 2:
                ends_ok = (
                    path[0] in pair.terminals_a and path[-1] in pair.terminals_b
                ) or (path[0] in pair.terminals_b and path[-1] in pair.terminals_a)
                if not ends_ok:
                    out.append(f"pair {i} path {jdx} ends outside its own pair")
            if seen_path & set(path):
                out.append(f"pair {i} path {jdx} overlaps an earlier path")
            seen_path |= set(path)
            if set(path[1:-1]) & seen_tree:
                out.append(f"pair {i} path {jdx} interior touches a tree")
    return out


# ------------------------------------------------------------ mesh -> linkage

def _steiner_prune(
    tree_adj: dict[int, set[int]], keep: frozenset[int]
) -> tuple[frozenset[int], tuple[tuple[int, int], ...]]:
    """Minimal subtree spanning `keep`: drop non-kept leaves to fixpoint."""
    adj = {v: set(ws) for v, ws in tree_adj.items()}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in keep and len(adj[v]) <= 1:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v]
                changed = True
    vertices = frozenset(adj)
    edges = tuple(
        sorted((v, w) if v < w else (w, v) for v in adj for w in adj[v] if v < w)
    )
    return vertices, edges


def mesh_to_linkage(
    g: Graph, w: MeshWitness, p: int, q: int
) -> LinkageWitness:
    """Extract a (p, q) linkage from a mesh of order (2p-1)(2q+1) and
    connectivity pq.

    The mesh tree is cut into 2q disjoint subtrees each holding at least p
    interface vertices (threshold p, so pieces absorb at most 2p-1 markers
    and at least 2q pieces appear); each piece keeps its p lowest terminals
    and is pruned to the subtree spanning them; pq disjoint paths between
    the two piece-group terminal unions are routed through the external
    side, which the mesh's connectivity clause guarantees to succeed.
    """
    if p < 1 or q < 1:
        raise ParameterError("p and q must be at least 1")
    order = (2 * p - 1) * (2 * q + 1)
    bad = verify_mesh(
        g, w, p * q, order=order,
        s_limit=max(order, 1), k_limit=max(p * q, 1),
    )
    if bad:
        raise PreconditionError("mesh invalid: " + "; ".join(bad))
    interface = w.interface
    tree_adj: dict[int, set[int]] = {v: set() for v in w.tree_vertices}
    for u, v in w.tree_edges:
        tree_adj[u].add(v)
        tree_adj[v].add(u)

    if p == 1:
        # tree_cut requires threshold >= 2; single-terminal pieces are
        # just the first 2q interface vertices as bare subtrees.
        markers = sorted(interface)
        pieces = [frozenset([x]) for x in markers[: 2 * q]]
    else:
        ids = sorted(w.tree_vertices)
        to_local = {v: i for i, v in enumerate(ids)}
        local_tree = Graph(
            len(ids),
            [(to_local[u], to_local[v]) for u, v in w.tree_edges],
        )
        local_pieces = tree_cut(
            local_tree, [to_local[x] for x in sorted(interface)], p
        )
        pieces = [frozenset(ids[i] for i in piece) for piece in local_pieces]
    if len(pieces) < 2 * q:
        raise WitnessError(
            f"tree cutting produced {len(pieces)} pieces, need {2 * q}"
        )
    pieces = pieces[: 2 * q]

    terminal_sets: list[frozenset[int]] = []
    trees: list[SteinerTree] = []
    for piece in pieces:
        terminals = frozenset(sorted(piece & interface)[:p])
        piece_adj = {
            v: {u for u in tree_adj[v] if u in piece} for v in piece
        }
        tv, te = _steiner_prune(piece_adj, terminals)
        terminal_sets.append(terminals)
        trees.append(SteinerTree(tv, te))

    z1 = sorted(frozenset().union(*terminal_sets[:q]))
    z2 = sorted(frozenset().union(*terminal_sets[q:]))
    banned = [
        (u, v) for u, v in g.edges if u in interface and v in interface
    ]
    allowed = (w.side_b - interface) | set(z1) | set(z2)
    routed = vertex_disjoint_paths(
        g, z1, z2, allowed=allowed, banned_edges=banned
    )
    if len(routed) != p * q:
        raise WitnessError(
            f"routing failure: {len(routed)} disjoint paths, need {p * q}"
        )
    lw = LinkageWitness(
        tuple(terminal_sets), tuple(trees), tuple(routed), w.side_a
    )
    bad = verify_linkage(g, lw, p, q)
    assert not bad, "constructed linkage invalid: " + "; ".join(bad)
    return lw


# -------------------------------------------------------- linkage -> pairs

def linkage_to_pairs(
    g: Graph, lw: LinkageWitness, p: int, q: int
) -> PairedLinkage:
    """Concentrate a large linkage into p disjoint terminal-set pairs, each
    joined by q disjoint paths.

    The input linkage must carry 8p^2q terminal sets of size q and 4p^2q^2
    paths. Terminal sets become vertices of an auxiliary bipartite
    multigraph whose multiplicities count connecting paths; selecting p
    disjoint multiedges of multiplicity >= q picks the pairs.
    """
    if p < 1 or q < 1:
        raise ParameterError("p and q must be at least 1")
    sets_needed = 8 * p * p * q
    paths_needed = 4 * p * p * q * q
    bad = verify_linkage(g, lw, q, sets_needed // 2)
    if bad:
        raise PreconditionError("linkage invalid: " + "; ".join(bad))
    if len(lw.terminal_sets) != sets_needed or len(lw.paths) != paths_needed:
        raise PreconditionError(
            f"need {sets_needed} terminal sets and {paths_needed} paths, "
            f"got {len(lw.terminal_sets)} and {len(lw.paths)}"
        )
    half = sets_needed // 2
    set_of: dict[int, int] = {}
    for i, ts in enumerate(lw.terminal_sets):
        for v in ts:
            set_of[v] = i
    mult: dict[tuple[int, int], int] = {}
    path_pool: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for path in lw.paths:
        i, j = set_of[path[0]], set_of[path[-1]]
        key = (min(i, j), max(i, j))
        mult[key] = mult.get(key, 0) + 1
        path_pool.setdefault(key, []).append(path)
    aux = MultiGraph(sets_needed, mult)
    chosen = disjoint_multiedges(
        aux, p, q, sides=(range(half), range(half, sets_needed))
    )
    pairs = []
    for a_id, b_id in chosen:
        key = (min(a_id, b_id), max(a_id, b_id))
        bundle = tuple(path_pool[key][:q])
        pairs.append(
            LinkedPair(
                lw.terminal_sets[a_id],
                lw.trees[a_id],
                lw.terminal_sets[b_id],
                lw.trees[b_id],
                bundle,
            )
        )
    pl = PairedLinkage(tuple(pairs))
    bad = verify_paired_linkage(g, pl, bundle_size=q)
    assert not bad, "constructed pairing invalid: " + "; ".join(bad)
    return pl


# ------------------------------------------------------ pairs -> models

def _normalize_tree(
    st: SteinerTree, terminals: frozenset[int]
) -> tuple[dict[int, set[int]], dict[int, frozenset[int]]]:
    """Delete non-terminal leaves, contract non-terminal degree-2 vertices
    into their lower-id neighbor. Returns the reduced adjacency and the
    absorption map: survivor -> original vertices riding along with it."""
    adj: dict[int, set[int]] = {v: set() for v in st.vertices}
    for u, v in st.edges:
        adj[u].add(v)
        adj[v].add(u)
    absorb: dict[int, set[int]] = {v: set() for v in st.vertices}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in terminals and len(adj[v]) <= 1:
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v], absorb[v]
                changed = True
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in terminals and len(adj[v]) == 2:
                x, y = sorted(adj[v])
                adj[x].discard(v)
                adj[y].discard(v)
                adj[x].add(y)
                adj[y].add(x)
                target = min(x, y)
                absorb[target] |= absorb[v] | {v}
                del adj[v], absorb[v]
                changed = True
    return adj, {v: frozenset(s) for v, s in absorb.items()}


def _tree_path(adj: dict[int, set[int]], u: int, v: int) -> tuple[int, ...]:
    if u == v:
        return (u,)
    parent = {u: u}
    frontier = [u]
    while frontier and v not in parent:
        nxt = []
        for x in frontier:
            for y in sorted(adj[x]):
                if y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    walk = [v]
    while walk[-1] != u:
        walk.append(parent[walk[-1]])
    return tuple(reversed(walk))


def _best_terminal_path(
    adj: dict[int, set[int]], terminals: frozenset[int]
) -> tuple[int, ...]:
    """Tree path holding the most terminals; starts at its lower endpoint.
    Ties keep the first candidate in ascending endpoint order."""
    terms = sorted(terminals)
    best: tuple[int, ...] = (terms[0],)
    best_count = 1
    for i, u in enumerate(terms):
        for v in terms[i + 1:]:
            path = _tree_path(adj, u, v)
            count = sum(1 for x in path if x in terminals)
            if count > best_count:
                best = path
                best_count = count
    return best


def pairs_to_xi_models(
    g: Graph, pl: PairedLinkage, r: int, k: int
) -> tuple[MinorModel, ...]:
    """k disjoint ladder models, one from each of the first k pairs.

    Per pair: normalize both trees, lay (r-1)^2 + 1 terminals along the
    side-a path, read their partner positions along the side-b path, pull
    a monotone subsequence of length r, and assemble two subpath rows plus
    the r connecting-path interiors into a ladder model. A decreasing
    subsequence flips the side-b orientation first.
    """
    if r < 1 or k < 1:
        raise ParameterError("r and k must be at least 1")
    if len(pl.pairs) < k:
        raise PreconditionError(
            f"need {k} pairs, paired linkage holds {len(pl.pairs)}"
        )
    need = (r - 1) * (r - 1) + 1
    pattern = xi(r)
    models: list[MinorModel] = []
    for pair in pl.pairs[:k]:
        adj_a, absorb_a = _normalize_tree(pair.tree_a, pair.terminals_a)
        adj_b, absorb_b = _normalize_tree(pair.tree_b, pair.terminals_b)
        path_a = _best_terminal_path(adj_a, pair.terminals_a)
        path_b = _best_terminal_path(adj_b, pair.terminals_b)
        terms_on_a = [x for x in path_a if x in pair.terminals_a]
        if len(terms_on_a) < need:
            raise PreconditionError(
                f"too few ordered terminals: side-a path holds "
                f"{len(terms_on_a)}, need {need}"
            )
        terms_on_a = terms_on_a[:need]
        partner: dict[int, tuple[int, tuple[int, ...]]] = {}
        for path in pair.paths:
            if path[0] in pair.terminals_a:
                partner[path[0]] = (path[-1], path)
            else:
                partner[path[-1]] = (path[0], tuple(reversed(path)))
        pos_b = {x: i for i, x in enumerate(path_b)}
        for t in terms_on_a:
            if t not in partner:
                raise PreconditionError(f"terminal {t} has no bundle path")
            if partner[t][0] not in pos_b:
                raise PreconditionError(
                    f"partner of terminal {t} is off the side-b path"
                )
        positions = [pos_b[partner[t][0]] for t in terms_on_a]
        mono = erdos_szekeres(positions, r, r)
        if mono.direction == "decreasing":
            path_b = tuple(reversed(path_b))
            pos_b = {x: i for i, x in enumerate(path_b)}
            positions = [pos_b[partner[t][0]] for t in terms_on_a]
        picked = [terms_on_a[i] for i in mono.indices]
        pos_a = {x: i for i, x in enumerate(path_a)}
        a_marks = [pos_a[t] for t in picked]
        b_marks = [pos_b[partner[t][0]] for t in picked]
        assert all(x < y for x, y in zip(a_marks, a_marks[1:]))
        assert all(x < y for x, y in zip(b_marks, b_marks[1:]))

        def segments(path, marks):
            segs = []
            for c in range(len(marks)):
                stop = marks[c + 1] if c + 1 < len(marks) else marks[c] + 1
                segs.append(path[marks[c]:stop])
            return segs

        def lift(seg, absorb):
            out = set(seg)
            for v in seg:
                out |= absorb.get(v, frozenset())
            return frozenset(out)

        x_sets = [lift(s, absorb_a) for s in segments(path_a, a_marks)]
        z_sets = [lift(s, absorb_b) for s in segments(path_b, b_marks)]
        y_sets = []
        for t in picked:
            interior = partner[t][1][1:-1]
            if not interior:
                raise PreconditionError(
                    f"bundle path at terminal {t} has no interior vertex"
                )
            y_sets.append(frozenset(interior))
        model = MinorModel(pattern, tuple(x_sets + y_sets + z_sets))
        bad = verify_model(g, model)
        assert not bad, "ladder model invalid: " + "; ".join(bad)
        models.append(model)
    for i in range(len(models)):
        for j in range(i + 1, len(models)):
            assert not models[i].support & models[j].support, "models overlap"
    return tuple(models)


def pairs_to_k2r_models(
    g: Graph, pl: PairedLinkage, r: int, k: int
) -> tuple[MinorModel, ...]:
    """k disjoint complete-bipartite (2, r) models: each pair's two trees
    are the 2-side branch sets, and the interiors of r bundle paths are
    the r-side, each path effectively contracted to length 2."""
    if r < 1 or k < 1:
        raise ParameterError("r and k must be at least 1")
    if len(pl.pairs) < k:
        raise PreconditionError(
            f"need {k} pairs, paired linkage holds {len(pl.pairs)}"
        )
    pattern = complete_bipartite(2, r)
    models: list[MinorModel] = []
    for i, pair in enumerate(pl.pairs[:k]):
        if len(pair.paths) < r:
            raise PreconditionError(
                f"pair {i} bundle has {len(pair.paths)} paths, need {r}"
            )
        middles = []
        for path in pair.paths[:r]:
            if len(path) < 3:
                raise PreconditionError(
                    f"pair {i} path {list(path)} has length < 2; "
                    "its middle vertex would vanish"
                )
            middles.append(frozenset(path[1:-1]))
        branch_sets = (
            pair.tree_a.vertices,
            pair.tree_b.vertices,
            *middles,
        )
        model = MinorModel(pattern, branch_sets)
        bad = verify_model(g, model)
        assert not bad, "bipartite model invalid: " + "; ".join(bad)
        models.append(model)
    for i in range(len(models)):
        for j in range(i + 1, len(models)):
            assert not models[i].support & models[j].support, "models overlap"
    return tuple(models)
