"""Independent brute-force reference implementations for cross-checking.

Everything here trades speed for obviousness: exhaustive enumeration over
assignments, permutations, subsets, or partitions, with hard size guards.
None of it shares code with the package under test beyond the Graph type.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from epgap.graphs import Graph


def _connected_mask(g: Graph, mask: int) -> bool:
    if mask == 0:
        return False
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        grow = g.adj[v] & mask & ~seen
        seen |= grow
        frontier |= grow
    return seen == mask


def minor_brute(g: Graph, h: Graph, guard: int = 2_000_000) -> bool:
    """Does g contain an h-minor? Tries every assignment of host vertices
    to pattern classes (or none)."""
    total = (h.n + 1) ** g.n
    if total > guard:
        raise ValueError(f"assignment space {total} exceeds guard {guard}")
    for assignment in product(range(h.n + 1), repeat=g.n):
        masks = [0] * h.n
        for v, cls in enumerate(assignment):
            if cls:
                masks[cls - 1] |= 1 << v
        if any(m == 0 for m in masks):
            continue
        if not all(_connected_mask(g, m) for m in masks):
            continue
        ok = True
        for i, j in h.edges:
            joined = False
            a, b = masks[i], masks[j]
            for v in range(g.n):
                if a >> v & 1 and g.adj[v] & b:
                    joined = True
                    break
            if not joined:
                ok = False
                break
        if ok:
            return True
    return False


def minimal_supports_brute(g: Graph, h: Graph) -> set[frozenset[int]]:
    """All vertex sets supporting an h-minor none of whose proper subsets
    does."""
    supports: set[frozenset[int]] = set()
    vertices = range(g.n)
    for size in range(h.n, g.n + 1):
        for combo in combinations(vertices, size):
            s = set(combo)
            if any(found <= s for found in supports):
                continue
            sub, labels = g.induced(combo)
            if minor_brute(sub, h):
                supports.add(frozenset(combo))
    return supports


def pack_brute(g: Graph, h: Graph) -> int:
    """Maximum disjoint h-model count. Any disjoint family shrinks to one
    of minimal supports, so searching those suffices."""
    supports = [sum(1 << v for v in s) for s in minimal_supports_brute(g, h)]
    memo: dict[int, int] = {}

    def best(avail: int) -> int:
        hit = memo.get(avail)
        if hit is not None:
            return hit
        out = 0
        for s in supports:
            if s & avail == s:
                out = max(out, 1 + best(avail & ~s))
        memo[avail] = out
        return out

    return best((1 << g.n) - 1)


def cover_brute(g: Graph, h: Graph) -> int:
    """Minimum vertex set meeting every h-model, by budget sweep."""
    for budget in range(g.n + 1):
        for combo in combinations(range(g.n), budget):
            keep = [v for v in range(g.n) if v not in combo]
            sub, labels = g.induced(keep)
            if sub.n < h.n or not minor_brute(sub, h):
                return budget
    return g.n


def treewidth_brute(g: Graph) -> int:
    """Minimum over all elimination orders of the largest degree at
    elimination time (neighborhoods filled to cliques as we go)."""
    if g.n > 8:
        raise ValueError("permutation treewidth limited to n <= 8")
    if g.m == 0:
        return 0 if g.n else -1
    best = g.n - 1
    for order in permutations(range(g.n)):
        adj = list(g.adj)
        alive = (1 << g.n) - 1
        worst = 0
        for v in order:
            nbrs = adj[v] & alive
            worst = max(worst, nbrs.bit_count())
            if worst >= best:
                break
            alive &= ~(1 << v)
            w = nbrs
            while w:
                u = (w & -w).bit_length() - 1
                w &= w - 1
                adj[u] |= nbrs & ~(1 << u)
        else:
            best = min(best, worst)
    return best


def pathwidth_brute(g: Graph) -> int:
    """Minimum over all layouts of the largest boundary of a prefix
    (prefix vertices with a neighbor outside the prefix)."""
    if g.n > 8:
        raise ValueError("permutation pathwidth limited to n <= 8")
    if g.n == 0:
        return -1
    best = g.n - 1
    for order in permutations(range(g.n)):
        prefix = 0
        worst = 0
        for v in order:
            prefix |= 1 << v
            boundary = 0
            rest = prefix
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if g.adj[u] & ~prefix:
                    boundary += 1
            worst = max(worst, boundary)
            if worst >= best:
                break
        else:
            best = min(best, worst)
    return best


def has_cycle(g: Graph) -> bool:
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        stack = [(root, -1)]
        seen[root] = True
        while stack:
            v, parent = stack.pop()
            skipped_parent = False
            for u in g.neighbors(v):
                if u == parent and not skipped_parent:
                    skipped_parent = True
                    continue
                if seen[u]:
                    return True
                seen[u] = True
                stack.append((u, v))
    return False


def treewidth_at_most_two(g: Graph) -> bool:
    """Exact partial-2-tree test: reducible to nothing by removing
    degree-<=1 vertices and smoothing degree-2 vertices."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    alive = set(range(g.n))
    changed = True
    while alive and changed:
        changed = False
        for v in list(alive):
            d = len(adj[v])
            if d <= 1:
                for u in adj[v]:
                    adj[u].discard(v)
                adj[v].clear()
                alive.discard(v)
                changed = True
            elif d == 2:
                a, b = adj[v]
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                adj[v].clear()
                alive.discard(v)
                changed = True
    return not alive


def _partitions(items: list[int]):
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for smaller in _partitions(rest):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] + [head]] + smaller[i + 1:]
        yield [[head]] + smaller


def contraction_degeneracy_brute(g: Graph) -> int:
    """Maximum over all minors of the minimum degree, enumerating every
    connected-block partition of every vertex subset."""
    if g.n > 7:
        raise ValueError("partition enumeration limited to n <= 7")
    best = 0
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            for blocks in _partitions(list(combo)):
                masks = [sum(1 << v for v in blk) for blk in blocks]
                if not all(_connected_mask(g, m) for m in masks):
                    continue
                degs = []
                for i, a in enumerate(masks):
                    d = 0
                    for j, b in enumerate(masks):
                        if i == j:
                            continue
                        if any(g.adj[v] & b for v in blocks[i]):
                            d += 1
                    degs.append(d)
                best = max(best, min(degs))
    return best


def is_isomorphic_small(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    if a.n > 8:
        raise ValueError("isomorphism check limited to n <= 8")
    target = set(b.edges)
    degs_a = sorted(a.degree(v) for v in range(a.n))
    degs_b = sorted(b.degree(v) for v in range(b.n))
    if degs_a != degs_b:
        return False
    for perm in permutations(range(a.n)):
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in target
            for u, v in a.edges
        ):
            return True
    return False


def disjoint_paths_brute(
    g: Graph,
    sources: frozenset[int],
    sinks: frozenset[int],
    allowed: frozenset[int] | None = None,
) -> int:
    """Maximum number of fully vertex-disjoint source-to-sink paths, by
    exhaustive path selection.

    Paths are truncated at their first sink: a family routing onward past
    a sink never beats the truncated version, which frees more vertices.
    """
    usable = set(range(g.n)) if allowed is None else set(allowed)

    def simple_paths(start: int, free: set[int]):
        stack = [(start, (start,))]
        while stack:
            v, trail = stack.pop()
            if v in sinks:
                yield trail
                continue
            for u in g.neighbors(v):
                if u in free and u not in trail:
                    stack.append((u, trail + (u,)))

    def best(free: set[int]) -> int:
        out = 0
        for s in sorted(free & sources):
            for trail in simple_paths(s, free):
                out = max(out, 1 + best(free - set(trail)))
        return out

    return best(usable)
