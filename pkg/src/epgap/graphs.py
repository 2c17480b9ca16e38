"""Simple graphs on dense integer ids, with the generators and the
degeneracy machinery the rest of the toolkit builds on.

Conventions used everywhere:

- vertices are 0..n-1, edges are unordered pairs stored as (min, max);
- vertex sets are frozensets of ints; neighborhoods are int bitmasks;
- every operation is deterministic: ties break by ascending id, random
  families draw from a seeded stream and nothing else.

Degeneracy is computed by repeated minimum-degree removal and returns the
elimination order as a witness. Contraction degeneracy (the largest minimum
degree over all minors) has an exact mode that exhaustively searches
branch-set partitions with memoization on canonical partition states, and a
greedy lower-bound mode that follows a single contraction sequence.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParameterError, SizeLimitError
from .limits import limit


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph. Equality and hashing are label-sensitive."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ParameterError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) outside 0..{n - 1}")
            seen.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        adj = [0] * n
        for u, v in seen:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, *_):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph plus the new->old vertex id table."""
        keep = sorted(set(vertices))
        if keep and not (0 <= keep[0] and keep[-1] < self.n):
            raise ParameterError("induced(): vertex out of range")
        index = {old: new for new, old in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph(len(keep), edges), tuple(keep)

    def connected_within(self, mask: int) -> bool:
        """Is the induced subgraph on the masked vertices connected?

        Empty and single-vertex sets count as connected.
        """
        if mask == 0:
            return True
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= self.adj[v]
            frontier = reach & mask & ~seen
            seen |= frontier
        return seen == mask

    def component_masks(self) -> list[int]:
        out = []
        todo = self.full_mask
        while todo:
            start = todo & -todo
            seen = start
            frontier = start
            while frontier:
                reach = 0
                for v in bits(frontier):
                    reach |= self.adj[v]
                frontier = reach & ~seen & todo
                seen |= frontier
            out.append(seen)
            todo &= ~seen
        return out

    def components(self) -> list[frozenset[int]]:
        return [frozenset(bits(m)) for m in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)


class MultiGraph:
    """Loopless multigraph: unordered pairs with positive multiplicity."""

    __slots__ = ("n", "mult")

    def __init__(self, n: int, mult: dict[tuple[int, int], int]):
        if n < 0:
            raise ParameterError("vertex count must be nonnegative")
        norm: dict[tuple[int, int], int] = {}
        for (u, v), m in mult.items():
            if u == v:
                raise ParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) outside 0..{n - 1}")
            if m < 1:
                raise ParameterError(f"multiplicity {m} on edge ({u},{v})")
            key = (u, v) if u < v else (v, u)
            norm[key] = norm.get(key, 0) + m
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mult", dict(sorted(norm.items())))

    def __setattr__(self, *_):
        raise AttributeError("MultiGraph is immutable")

    def multiplicity(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        return self.mult.get(key, 0)

    def multidegree(self, v: int) -> int:
        """Total multiplicity over edges incident to v."""
        return sum(m for (a, b), m in self.mult.items() if v in (a, b))

    def simple_degree(self, v: int) -> int:
        return sum(1 for (a, b) in self.mult if v in (a, b))

    def simple_neighbors(self, v: int) -> tuple[int, ...]:
        out = [b if a == v else a for (a, b) in self.mult if v in (a, b)]
        return tuple(sorted(out))

    def underlying(self) -> Graph:
        return Graph(self.n, list(self.mult))

    def __repr__(self) -> str:
        total = sum(self.mult.values())
        return f"MultiGraph(n={self.n}, simple_m={len(self.mult)}, total_m={total})"


# ---------------------------------------------------------------- generators

def complete(n: int) -> Graph:
    _positive(n, "n")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _positive(n, "n")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star on n vertices total: center 0 plus n-1 leaves."""
    _positive(n, "n")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    _positive(p, "p")
    _positive(q, "q")
    return Graph(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def xi(r: int) -> Graph:
    """The ladder-with-subdivided-rungs graph on 3r vertices.

    Two r-vertex paths (0..r-1 and 2r..3r-1) joined by r length-2 rungs
    through the middle row r..2r-1. 4r-2 edges total.
    """
    _positive(r, "r")
    edges = []
    for i in range(r - 1):
        edges.append((i, i + 1))
        edges.append((2 * r + i, 2 * r + i + 1))
    for i in range(r):
        edges.append((i, r + i))
        edges.append((r + i, 2 * r + i))
    return Graph(3 * r, edges)


def disjoint_copies(k: int, base: Graph) -> Graph:
    _positive(k, "k")
    n = base.n
    edges = []
    for copy in range(k):
        off = copy * n
        edges.extend((u + off, v + off) for u, v in base.edges)
    return Graph(k * n, edges)


def complete_ternary_tree(height: int) -> Graph:
    """Root with three children, every other internal vertex with two.

    Height h >= 1 gives 3 * 2^(h-1) leaves, all at depth h.
    """
    _positive(height, "height")
    edges = []
    next_id = 1
    frontier = [0]
    for depth in range(height):
        fanout = 3 if depth == 0 else 2
        new_frontier = []
        for parent in frontier:
            for _ in range(fanout):
                edges.append((parent, next_id))
                new_frontier.append(next_id)
                next_id += 1
        frontier = new_frontier
    return Graph(next_id, edges)


def random_gnp(n: int, p: float, seed) -> Graph:
    _positive(n, "n")
    if not 0.0 <= p <= 1.0:
        raise ParameterError("probability must lie in [0, 1]")
    rng = random.Random(f"gnp:{seed}:{n}:{p!r}")
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_ternary_tree(n: int, seed) -> Graph:
    """Random tree with maximum degree 3, grown by seeded attachment."""
    _positive(n, "n")
    rng = random.Random(f"ternary:{seed}:{n}")
    edges = []
    degree = [0] * n
    for v in range(1, n):
        eligible = [u for u in range(v) if degree[u] < 3]
        u = rng.choice(eligible)
        edges.append((u, v))
        degree[u] += 1
        degree[v] += 1
    return Graph(n, edges)


def random_pw2(n: int, seed) -> tuple[Graph, tuple[frozenset[int], ...]]:
    """Random graph of pathwidth <= 2 plus its witnessing bag sequence.

    Builds a width-2 path decomposition left to right: a sliding window of
    at most two carried vertices, each new vertex adjacent to a random
    subset of the window. Bag i is window + {i}, so every bag has size <= 3
    and each vertex's bag interval is contiguous.
    """
    _positive(n, "n")
    rng = random.Random(f"pw2:{seed}:{n}")
    window: list[int] = []
    edges = []
    bags = []
    for v in range(n):
        subset_mask = rng.randrange(1 << len(window))
        for i, w in enumerate(window):
            if subset_mask >> i & 1:
                edges.append((w, v))
        bags.append(frozenset(window) | {v})
        pool = window + [v]
        if len(pool) > 2:
            pool.pop(rng.randrange(len(pool)))
        window = pool
    return Graph(n, edges), tuple(bags)


_FAMILIES = {
    "complete": lambda **kw: complete(kw["n"]),
    "cycle": lambda **kw: cycle(kw["n"]),
    "path": lambda **kw: path(kw["n"]),
    "star": lambda **kw: star(kw["n"]),
    "complete_bipartite": lambda **kw: complete_bipartite(kw["p"], kw["q"]),
    "xi": lambda **kw: xi(kw["r"]),
    "disjoint_copies": lambda **kw: disjoint_copies(kw["k"], kw["base"]),
    "random_gnp": lambda **kw: random_gnp(kw["n"], kw["p"], kw.get("seed", 0)),
    "random_ternary_tree": lambda **kw: random_ternary_tree(kw["n"], kw.get("seed", 0)),
    "random_pw2": lambda **kw: random_pw2(kw["n"], kw.get("seed", 0))[0],
}


def generate(family: str, **params) -> Graph:
    """Build a named family member. random_pw2 here drops the decomposition;
    call random_pw2() directly when the witness bags are needed."""
    if family not in _FAMILIES:
        raise ParameterError(
            f"unknown family {family!r}; choose from {sorted(_FAMILIES)}"
        )
    try:
        return _FAMILIES[family](**params)
    except KeyError as exc:
        raise ParameterError(f"family {family!r} missing parameter {exc}") from None


# ------------------------------------------------------------- contraction

def contract_edge(g: Graph, e: tuple[int, int]) -> tuple[Graph, tuple[int, ...]]:
    """Contract edge e, collapsing parallels and dropping the loop.

    Returns the new graph and the old->new vertex id table. The merged
    vertex keeps the smaller endpoint's slot; ids above the larger endpoint
    shift down by one.
    """
    u, v = min(e), max(e)
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ParameterError(f"edge ({u},{v}) not in graph")
    vmap = []
    for w in range(g.n):
        if w == v:
            vmap.append(u)
        elif w > v:
            vmap.append(w - 1)
        else:
            vmap.append(w)
    edges = set()
    for a, b in g.edges:
        na, nb = vmap[a], vmap[b]
        if na != nb:
            edges.add((min(na, nb), max(na, nb)))
    return Graph(g.n - 1, sorted(edges)), tuple(vmap)


# -------------------------------------------------------------- degeneracy

@dataclass(frozen=True)
class DegeneracyWitness:
    """Degeneracy value plus the min-degree elimination order achieving it.

    Every vertex has at most `value` neighbors later in the order, and at
    the step reaching the maximum the remaining suffix induces a subgraph
    of minimum degree exactly `value`.
    """

    value: int
    elimination_order: tuple[int, ...]


def degeneracy(g: Graph) -> DegeneracyWitness:
    remaining = g.full_mask
    order = []
    value = 0
    while remaining:
        v = min(bits(remaining), key=lambda w: ((g.adj[w] & remaining).bit_count(), w))
        value = max(value, (g.adj[v] & remaining).bit_count())
        order.append(v)
        remaining &= ~(1 << v)
    return DegeneracyWitness(value, tuple(order))


# ------------------------------------------------- contraction degeneracy

def _quotient(g: Graph, blocks: tuple[int, ...]) -> Graph:
    """Quotient graph of disjoint connected block masks, one vertex each."""
    t = len(blocks)
    edges = []
    for i in range(t):
        ni = 0
        for v in bits(blocks[i]):
            ni |= g.adj[v]
        for j in range(i + 1, t):
            if ni & blocks[j]:
                edges.append((i, j))
    return Graph(t, edges)


def _delta_upper_bound(q: Graph) -> int:
    """No minor of q beats this minimum degree.

    A minor with min degree d has at least d+1 vertices and d(d+1)/2 edges,
    and contractions or deletions never add edges.
    """
    by_edges = int((math.isqrt(8 * q.m + 1) - 1) // 2)
    return min(by_edges, q.n - 1)


_STATE_BUDGET = 2_000_000


def _partition_search(
    g: Graph, target: int | None
) -> tuple[int, tuple[frozenset[int], ...]]:
    """Exhaustive search over branch-set partition states.

    States are partitions of a vertex subset into connected blocks; moves
    merge two adjacent blocks or delete a block. Memoized on the canonical
    (sorted-block) form of the state. Returns the best achievable quotient
    minimum degree and a witnessing partition; stops early once `target`
    is met when a target is given.
    """
    if g.n == 0:
        return 0, ()
    start = tuple(1 << v for v in range(g.n))
    best_val = -1
    best_blocks: tuple[int, ...] = ()
    visited = set()
    stack = [start]
    while stack:
        blocks = stack.pop()
        key = frozenset(blocks)
        if key in visited:
            continue
        visited.add(key)
        if len(visited) > _STATE_BUDGET:
            raise SizeLimitError(
                "contraction-degeneracy state budget exceeded; "
                "use lower_bound mode or raise the limit"
            )
        if not blocks:
            continue
        q = _quotient(g, blocks)
        val = q.min_degree()
        if val > best_val:
            best_val = val
            best_blocks = blocks
            if target is not None and best_val >= target:
                break
        if _delta_upper_bound(q) <= best_val and target is None:
            continue
        if target is not None and _delta_upper_bound(q) < target:
            continue
        order = sorted(range(len(blocks)))
        for i in order:
            child = blocks[:i] + blocks[i + 1:]
            stack.append(child)
        for i, j in q.edges:
            merged = blocks[i] | blocks[j]
            child = tuple(
                sorted(
                    [b for k, b in enumerate(blocks) if k not in (i, j)] + [merged]
                )
            )
            stack.append(child)
    return best_val, tuple(frozenset(bits(b)) for b in best_blocks)


def _greedy_contraction_value(g: Graph) -> int:
    """Lower bound by one contraction sequence: always contract at a
    minimum-degree vertex toward the neighbor sharing fewest neighbors."""
    best = 0
    blocks = tuple(1 << v for v in range(g.n))
    while blocks:
        q = _quotient(g, blocks)
        if q.m == 0:
            best = max(best, 0 if q.n <= 1 else q.min_degree())
            break
        isolated = [i for i in range(q.n) if q.degree(i) == 0]
        if isolated:
            blocks = tuple(b for k, b in enumerate(blocks) if k not in set(isolated))
            continue
        best = max(best, q.min_degree())
        v = min(range(q.n), key=lambda w: (q.degree(w), w))
        u = min(
            bits(q.adj[v]),
            key=lambda w: ((q.adj[w] & q.adj[v]).bit_count(), w),
        )
        merged = blocks[u] | blocks[v]
        blocks = tuple(
            sorted([b for k, b in enumerate(blocks) if k not in (u, v)] + [merged])
        )
    return best


def contraction_degeneracy(
    g: Graph, mode: str = "exact", size_limit: int | None = None
) -> int:
    """Largest minimum degree over all minors of g.

    mode="exact" searches the full branch-set partition space (size-limited);
    mode="lower_bound" follows a greedy contraction sequence and is always
    <= the exact value.
    """
    if mode == "lower_bound":
        return max(_greedy_contraction_value(g), degeneracy(g).value)
    if mode != "exact":
        raise ParameterError("mode must be 'exact' or 'lower_bound'")
    cap = limit("contraction_deg", size_limit)
    if g.n > cap:
        raise SizeLimitError(
            f"exact contraction degeneracy limited to n <= {cap} (got {g.n})"
        )
    value, _ = _partition_search(g, target=None)
    return max(value, 0)


def min_degree_minor(
    g: Graph, target: int, size_limit: int | None = None
) -> tuple[Graph, tuple[frozenset[int], ...]] | None:
    """Find a minor with minimum degree >= target, as branch sets.

    Tries the graph itself first, then the exhaustive partition search
    (which stops at the first qualifying state) when g is small enough.
    Returns (quotient, branch_sets) with quotient vertex i contracted from
    branch_sets[i], or None when no qualifying minor exists.
    """
    if g.n and g.min_degree() >= target:
        blocks = tuple(frozenset([v]) for v in range(g.n))
        return g, blocks
    cap = limit("contraction_deg", size_limit)
    if g.n > cap:
        raise SizeLimitError(
            f"min-degree minor search limited to n <= {cap} (got {g.n})"
        )
    value, blocks = _partition_search(g, target=target)
    if value < target:
        return None
    masks = tuple(mask_of(b) for b in blocks)
    return _quotient(g, masks), blocks


# ------------------------------------------------------------------ hashing

def graph_hash(g: Graph) -> str:
    """Stable content hash of the labeled graph (not isomorphism-invariant)."""
    payload = f"{g.n};" + ",".join(f"{u}-{v}" for u, v in g.edges)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _positive(value: int, name: str) -> None:
    if not isinstance(value, int) or value < 1:
        raise ParameterError(f"{name} must be a positive integer (got {value!r})")
