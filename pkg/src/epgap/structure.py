"""Constructive structural operations on trees, partitions and degrees.

Each operation here is a small combinatorial statement made executable:
the function both constructs the object and enforces the statement's
guarantee, raising PreconditionError when the input falls outside the
stated hypotheses rather than silently weakening the claim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import ParameterError, PreconditionError, WitnessError
from .graphs import (
    Graph,
    MultiGraph,
    bits,
    complete_bipartite,
    degeneracy,
    min_degree_minor,
    xi,
)
from .minors import MinorModel, find_minor_model, verify_model
from .width import pathwidth_exact


@dataclass(frozen=True)
class Partition:
    """Pairwise disjoint parts covering the ground set exactly."""

    parts: tuple[frozenset[int], ...]

    def part_of(self, v: int) -> int:
        for i, p in enumerate(self.parts):
            if v in p:
                return i
        raise ParameterError(f"vertex {v} in no part")


def _require_tree(t: Graph, max_degree: int | None = None) -> None:
    if not t.is_tree():
        raise PreconditionError("input graph is not a tree")
    if max_degree is not None and t.max_degree() > max_degree:
        raise PreconditionError(
            f"tree has degree {t.max_degree()} > {max_degree}"
        )


# ------------------------------------------------------------------ tree_cut

def tree_cut(t: Graph, x: Iterable[int], k: int) -> tuple[frozenset[int], ...]:
    """Greedy bottom-up cutting of a ternary tree into vertex-disjoint
    subtrees, each containing at least k marked vertices.

    Rooted at the lowest-id leaf, so every vertex has at most two children
    and each cut piece holds at most 2k-1 marked vertices; the number of
    pieces is therefore at least floor(|x| / (2k-1)) - 1 (the guarantee),
    and in fact at least floor(|x| / (2k-1)).
    """
    _require_tree(t, max_degree=3)
    if k < 2:
        raise PreconditionError("cut threshold k must be at least 2")
    xset = frozenset(x)
    if not xset <= frozenset(range(t.n)):
        raise PreconditionError("marked vertices must lie in the tree")
    root = min(v for v in range(t.n) if t.degree(v) <= 1)
    parent = {root: root}
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in t.neighbors(u):
            if w not in parent:
                parent[w] = u
                order.append(w)
                stack.append(w)
    children: dict[int, list[int]] = {v: [] for v in range(t.n)}
    for v in order[1:]:
        children[parent[v]].append(v)

    pieces: list[frozenset[int]] = []
    count: dict[int, int] = {}
    cut: set[int] = set()
    for v in reversed(order):
        c = (1 if v in xset else 0) + sum(
            count[w] for w in children[v] if w not in cut
        )
        if c >= k:
            piece = []
            stack = [v]
            while stack:
                u = stack.pop()
                piece.append(u)
                stack.extend(w for w in children[u] if w not in cut)
            pieces.append(frozenset(piece))
            cut.add(v)
            count[v] = 0
        else:
            count[v] = c
    bound = len(xset) // (2 * k - 1) - 1
    assert len(pieces) >= bound, "greedy cut fell below its guarantee"
    return tuple(reversed(pieces))


# -------------------------------------------------------------- partitioning

def stiebitz_partition(g: Graph, k: int) -> Partition:
    """Partition V(G) into k parts where every vertex keeps at least
    deg(v)/k - 1 of its neighbors inside its own part.

    Local search: while some vertex falls short (lowest id first), move it
    to the part holding most of its neighbors (lowest part index on ties).
    The total number of internal edges strictly increases with each move,
    so at most |E| moves happen.
    """
    if k < 1:
        raise PreconditionError("part count k must be at least 1")
    part = [v % k for v in range(g.n)]

    def internal(v: int) -> int:
        return sum(1 for w in bits(g.adj[v]) if part[w] == part[v])

    def violator() -> int | None:
        for v in range(g.n):
            if internal(v) < g.degree(v) / k - 1:
                return v
        return None

    def potential() -> int:
        return sum(1 for u, w in g.edges if part[u] == part[w])

    moves = 0
    while True:
        v = violator()
        if v is None:
            break
        before = potential()
        counts = [0] * k
        for w in bits(g.adj[v]):
            counts[part[w]] += 1
        part[v] = max(range(k), key=lambda i: (counts[i], -i))
        moves += 1
        assert potential() > before, "move failed to increase internal edges"
        assert moves <= g.m, "local search exceeded its move budget"
    parts = tuple(
        frozenset(v for v in range(g.n) if part[v] == i) for i in range(k)
    )
    return Partition(parts)


# ---------------------------------------------------------- erdos--szekeres

class MonotoneSubsequence(NamedTuple):
    direction: str  # "increasing" | "decreasing"
    indices: tuple[int, ...]


def erdos_szekeres(seq: Sequence[int], k: int, l: int) -> MonotoneSubsequence:
    """An increasing subsequence of length k or a decreasing one of length
    l, guaranteed once |seq| >= (k-1)(l-1) + 1 with distinct entries.

    Quadratic DP for longest monotone runs; reconstruction walks backward
    choosing the earliest predecessor, and the increasing direction is
    preferred when both succeed.
    """
    if k < 1 or l < 1:
        raise ParameterError("target lengths must be positive")
    n = len(seq)
    if len(set(seq)) != n:
        raise PreconditionError("sequence entries must be distinct")
    if n < (k - 1) * (l - 1) + 1:
        raise PreconditionError(
            f"sequence length {n} below the guarantee threshold "
            f"{(k - 1) * (l - 1) + 1}"
        )
    inc = [1] * n
    dec = [1] * n
    for i in range(n):
        for j in range(i):
            if seq[j] < seq[i]:
                inc[i] = max(inc[i], inc[j] + 1)
            else:
                dec[i] = max(dec[i], dec[j] + 1)

    def reconstruct(table: list[int], target: int, increasing: bool):
        end = next(i for i in range(n) if table[i] >= target)
        picked = [end]
        need = table[end] - 1
        i = end
        while need:
            for j in range(i):
                cmp = seq[j] < seq[i] if increasing else seq[j] > seq[i]
                if cmp and table[j] == need:
                    picked.append(j)
                    i = j
                    need -= 1
                    break
        return tuple(reversed(picked))

    if max(inc) >= k:
        idx = reconstruct(inc, k, True)[:k]
        return MonotoneSubsequence("increasing", idx)
    idx = reconstruct(dec, l, False)[:l]
    return MonotoneSubsequence("decreasing", idx)


# ------------------------------------------------------------- degree counts

def low_degree_vertices(g: Graph, a: int) -> frozenset[int]:
    """All vertices of degree below 2a times the degeneracy.

    More than (1 - 1/a) n vertices qualify in any graph with an edge: the
    degree sum is at most 2 * dgn * n, and a degenerate graph cannot reach
    that bound tightly, so fewer than n/a vertices reach degree 2a * dgn.
    """
    if a < 1:
        raise ParameterError("a must be at least 1")
    if g.m == 0:
        raise PreconditionError(
            "needs at least one edge (with no edges the degeneracy is 0 "
            "and no vertex has degree below 0)"
        )
    threshold = 2 * a * degeneracy(g).value
    out = frozenset(v for v in range(g.n) if g.degree(v) < threshold)
    assert len(out) > (1 - 1 / a) * g.n, "low-degree count fell below guarantee"
    return out


# ---------------------------------------------------- k2r from degeneracy

def extract_k2r_from_degeneracy(
    g: Graph, k: int, r: int
) -> tuple[MinorModel, ...]:
    """k vertex-disjoint models of the complete bipartite pattern on 2 and
    r vertices, extracted from a minor of minimum degree 2kr.

    Pipeline: find such a minor (the caller's precondition promises one),
    split its vertex set into k parts each keeping min degree 2r-1, find
    the pattern inside each part, and lift branch sets through the minor's
    branch map back to g.
    """
    if k < 1 or r < 1:
        raise ParameterError("k and r must be at least 1")
    found = min_degree_minor(g, 2 * k * r)
    if found is None:
        raise PreconditionError(
            f"no minor of minimum degree {2 * k * r}; "
            "the contraction-degeneracy hypothesis fails"
        )
    quotient, branch_map = found
    partition = stiebitz_partition(quotient, k)
    pattern = complete_bipartite(2, r)
    models: list[MinorModel] = []
    for part in partition.parts:
        sub, ids = quotient.induced(part)
        inner = find_minor_model(sub, pattern)
        if inner is None:
            raise WitnessError(
                f"part of minimum degree >= {2 * r - 1} holds no "
                f"2-by-{r} complete bipartite minor; extraction claim fails"
            )
        lifted = []
        for bset in inner.branch_sets:
            union: set[int] = set()
            for q_local in bset:
                union |= branch_map[ids[q_local]]
            lifted.append(frozenset(union))
        model = MinorModel(pattern, tuple(lifted))
        bad = verify_model(g, model)
        assert not bad, "lifted model invalid: " + "; ".join(bad)
        models.append(model)
    supports = [m.support for m in models]
    for i in range(len(supports)):
        for j in range(i + 1, len(supports)):
            assert not supports[i] & supports[j], "extracted models overlap"
    return tuple(models)


# -------------------------------------------------------------- path helpers

def _check_path_in_tree(t: Graph, p: Sequence[int]) -> None:
    if len(p) == 0:
        raise PreconditionError("path must contain at least one vertex")
    if len(set(p)) != len(p):
        raise PreconditionError("path repeats a vertex")
    for v in p:
        if not 0 <= v < t.n:
            raise PreconditionError(f"path vertex {v} outside the tree")
    for u, v in zip(p, p[1:]):
        if not t.has_edge(u, v):
            raise PreconditionError(f"path step ({u},{v}) is not a tree edge")


def path_partition(t: Graph, p: Sequence[int]) -> Partition:
    """Partition of V(t) into the components hanging off each path vertex.

    Part u is the component of t minus the other path vertices that
    contains u. Every part holds exactly one path vertex and at least one
    vertex of degree at most 2 in t: a part bigger than its path vertex
    reaches a leaf of t, and a bare path vertex has tree degree at most 2
    itself.
    """
    _require_tree(t, max_degree=3)
    _check_path_in_tree(t, p)
    pset = set(p)
    parts: list[frozenset[int]] = []
    low = {v for v in range(t.n) if t.degree(v) <= 2}
    for u in p:
        comp = {u}
        stack = [u]
        while stack:
            w = stack.pop()
            for y in t.neighbors(w):
                if y not in comp and y not in pset:
                    comp.add(y)
                    stack.append(y)
        assert len(comp & pset) == 1
        assert comp & low, f"part of path vertex {u} misses every low-degree vertex"
        parts.append(frozenset(comp))
    covered: set[int] = set()
    for part in parts:
        assert not part & covered, "parts overlap"
        covered |= part
    assert covered == set(range(t.n)), "parts do not cover the tree"
    return Partition(tuple(parts))


def _farthest(t: Graph, start: int) -> tuple[int, dict[int, int]]:
    """BFS farthest vertex (smallest id on ties) and the parent map."""
    parent = {start: start}
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            for w in t.neighbors(u):
                if w not in parent:
                    parent[w] = u
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    far = max(dist, key=lambda v: (dist[v], -v))
    return far, parent


def long_path(t: Graph) -> tuple[int, ...]:
    """A longest path of the tree, by double BFS (exact on trees).

    Its edge count is at least 2 * log2(2|X|/3) where X is the set of
    vertices of degree at most 2; complete ternary trees meet this with
    equality, their leaves forming X.
    """
    _require_tree(t, max_degree=3)
    a, _ = _farthest(t, 0)
    b, parent = _farthest(t, a)
    walk = [b]
    while walk[-1] != a:
        walk.append(parent[walk[-1]])
    path = tuple(reversed(walk)) if a < b else tuple(walk)
    x_count = sum(1 for v in range(t.n) if t.degree(v) <= 2)
    guarantee = 2 * math.log2(2 * x_count / 3)
    assert len(path) - 1 >= guarantee - 1e-9, (
        f"diameter {len(path) - 1} below guarantee {guarantee}"
    )
    return path


# -------------------------------------------------------- multiedge selection

def _bipartition(b: MultiGraph) -> tuple[frozenset[int], frozenset[int]]:
    """Canonical 2-coloring: each component's lowest vertex on side 0."""
    side = [-1] * b.n
    simple = b.underlying()
    for v in range(b.n):
        if side[v] != -1:
            continue
        side[v] = 0
        stack = [v]
        while stack:
            u = stack.pop()
            for w in simple.neighbors(u):
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    raise PreconditionError("multigraph is not bipartite")
    return (
        frozenset(v for v in range(b.n) if side[v] == 0),
        frozenset(v for v in range(b.n) if side[v] == 1),
    )


def disjoint_multiedges(
    b: MultiGraph,
    k: int,
    r: int,
    sides: tuple[Iterable[int], Iterable[int]] | None = None,
) -> tuple[tuple[int, int], ...]:
    """k vertex-disjoint multiedges of multiplicity at least r in a
    bipartite multigraph with equal sides, uniform multidegree, and simple
    degeneracy below 2kr.

    Procedure: on the side holding more vertices of simple degree below
    2kr, take the 2k^2 r lowest-id such vertices, map each to its lowest-id
    neighbor joined with multiplicity at least r, and pick the k lowest-id
    distinct image vertices with their lowest-id preimages. Each supply
    step raises a PreconditionError naming the clause it could not meet.
    Returned pairs are (preimage, image).
    """
    if k < 1 or r < 1:
        raise ParameterError("k and r must be at least 1")
    if sides is None:
        side0, side1 = _bipartition(b)
    else:
        side0, side1 = frozenset(sides[0]), frozenset(sides[1])
        if side0 & side1 or side0 | side1 != frozenset(range(b.n)):
            raise PreconditionError("sides must partition the vertex set")
        for (u, v) in b.mult:
            if (u in side0) == (v in side0):
                raise PreconditionError(f"edge ({u},{v}) does not cross the sides")
    if len(side0) != len(side1):
        raise PreconditionError(
            f"sides differ in size: {len(side0)} vs {len(side1)}"
        )
    if len(side0) < 4 * k * k * r:
        raise PreconditionError(
            f"side size {len(side0)} below 4k^2r = {4 * k * k * r}"
        )
    degrees = {b.multidegree(v) for v in range(b.n)}
    if len(degrees) > 1:
        raise PreconditionError(
            f"multidegree not uniform: values {sorted(degrees)}"
        )
    simple = b.underlying()
    dgn = degeneracy(simple).value
    if dgn >= 2 * k * r:
        raise PreconditionError(
            f"simple degeneracy {dgn} not below 2kr = {2 * k * r}"
        )
    threshold = 2 * k * r
    low0 = sorted(v for v in side0 if simple.degree(v) < threshold)
    low1 = sorted(v for v in side1 if simple.degree(v) < threshold)
    low = low0 if len(low0) >= len(low1) else low1
    need = 2 * k * k * r
    if len(low) < need:
        raise PreconditionError(
            f"low-degree supply: only {len(low)} vertices of simple degree "
            f"< {threshold} on the richer side, need {need}"
        )
    chosen = low[:need]
    image: dict[int, int] = {}
    for v in chosen:
        candidates = [
            u for u in simple.neighbors(v) if b.multiplicity(v, u) >= r
        ]
        if not candidates:
            raise PreconditionError(
                f"multiplicity supply: vertex {v} has no neighbor joined "
                f"with multiplicity >= {r}"
            )
        image[v] = min(candidates)
    groups: dict[int, list[int]] = {}
    for v in chosen:
        groups.setdefault(image[v], []).append(v)
    if len(groups) < k:
        raise PreconditionError(
            f"image count: only {len(groups)} distinct image vertices, need {k}"
        )
    picked = sorted(groups)[:k]
    out = tuple((min(groups[u]), u) for u in picked)
    seen: set[int] = set()
    for v, u in out:
        assert b.multiplicity(v, u) >= r
        assert v not in seen and u not in seen
        seen.update((v, u))
    return out


# ------------------------------------------------------- pathwidth-2 minors

def check_pw2_minor_of_xi(h: Graph) -> MinorModel:
    """A verified model of h inside the ladder graph on |V(h)| rungs,
    witnessing that every pathwidth-2 graph embeds there as a minor."""
    if h.n < 1:
        raise ParameterError("pattern must have at least one vertex")
    if h.n > 9:
        raise ParameterError(
            f"search limited to patterns with at most 9 vertices (got {h.n})"
        )
    pw, _ = pathwidth_exact(h)
    if pw > 2:
        raise PreconditionError(f"pathwidth {pw} exceeds 2")
    host = xi(h.n)
    model = find_minor_model(host, h, host_limit=3 * h.n, pattern_limit=h.n)
    if model is None:
        raise WitnessError(
            "no model found although pathwidth is at most 2; embedding claim fails"
        )
    bad = verify_model(host, model)
    assert not bad, "; ".join(bad)
    return model
