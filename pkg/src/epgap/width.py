"""Tree decompositions, exact treewidth and pathwidth, nice decompositions.

Treewidth is computed over elimination orders: eliminating v after the set
S costs Q(S, v), the number of vertices outside S + v seeing the component
of v inside S + v. That equals v's degree in the fill graph of the order,
so min over orders of the max cost is the treewidth. The search is a DFS
over eliminated-set masks with branch and bound, seeded by a greedy
min-fill upper bound and a contraction-based lower bound, with free
elimination of vertices whose cost is at most 1.

Pathwidth is computed as vertex separation: f(S) = max(boundary(S),
min over v in S of f(S - v)) over all subsets, where boundary(S) counts
vertices of S with a neighbor outside S. The optimal layout converts to a
path decomposition whose bag at position i is v_i plus every earlier
vertex with a neighbor at position >= i.

Nice decompositions follow the convention where bags grow on the way up
through introduce nodes and shrink through forget nodes: an introduce node
adds one vertex to its child's bag, a forget node removes one, a join node
has two children carrying the same bag, leaves and the root carry empty
bags. This is asserted structurally at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterError, SizeLimitError, WitnessError
from .graphs import Graph, bits, contraction_degeneracy, degeneracy, mask_of
from .limits import limit


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags plus tree edges on bag indices."""

    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1


def path_decomposition(bags: Iterable[frozenset[int]]) -> TreeDecomposition:
    """Wrap an ordered bag sequence as a path-shaped decomposition."""
    bag_tuple = tuple(frozenset(b) for b in bags)
    if not bag_tuple:
        raise ParameterError("a decomposition needs at least one bag")
    edges = tuple((i, i + 1) for i in range(len(bag_tuple) - 1))
    return TreeDecomposition(bag_tuple, edges)


def verify_decomposition(g: Graph, td: TreeDecomposition) -> list[str]:
    """All violated decomposition clauses. Empty = valid for g."""
    violations: list[str] = []
    nb = len(td.bags)
    if nb == 0:
        return ["no bags"]
    for i, b in enumerate(td.bags):
        bad = [v for v in b if not 0 <= v < g.n]
        if bad:
            violations.append(f"bag {i} leaves the host: {sorted(bad)}")
    for a, b in td.tree_edges:
        if not (0 <= a < nb and 0 <= b < nb) or a == b:
            violations.append(f"tree edge ({a},{b}) invalid")
            return violations
    if len(set(tuple(sorted(e)) for e in td.tree_edges)) != len(td.tree_edges):
        violations.append("duplicate tree edges")
    if len(td.tree_edges) != nb - 1:
        violations.append(
            f"{nb} bags need {nb - 1} tree edges, got {len(td.tree_edges)}"
        )
    adj: dict[int, set[int]] = {i: set() for i in range(nb)}
    for a, b in td.tree_edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != nb:
        violations.append("bag tree is disconnected")
    if violations:
        return violations
    covered = set()
    for b in td.bags:
        covered |= b
    missing = set(range(g.n)) - covered
    if missing:
        violations.append(f"vertices missing from every bag: {sorted(missing)}")
    for u, v in g.edges:
        if not any(u in b and v in b for b in td.bags):
            violations.append(f"edge ({u},{v}) in no bag")
    for v in range(g.n):
        holding = [i for i in range(nb) if v in td.bags[i]]
        if not holding:
            continue
        hset = set(holding)
        comp = {holding[0]}
        stack = [holding[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in hset and y not in comp:
                    comp.add(y)
                    stack.append(y)
        if comp != hset:
            violations.append(f"bags holding vertex {v} are not connected")
    return violations


# ----------------------------------------------------------------- treewidth

def treewidth_lower_bound(g: Graph) -> int:
    """Cheap lower bound: the minimum degree of any minor never exceeds
    the treewidth, so a greedy contraction sequence bounds from below."""
    if g.n == 0:
        return -1
    return max(degeneracy(g).value, contraction_degeneracy(g, "lower_bound"))


def _q_cost(g: Graph, s_mask: int, v: int) -> int:
    """Vertices outside s_mask + v that see v's component within s_mask + v."""
    comp = 1 << v
    frontier = comp
    while frontier:
        reach = 0
        for w in bits(frontier):
            reach |= g.adj[w]
        new = reach & s_mask & ~comp
        comp |= new
        frontier = new
    nbrs = 0
    for w in bits(comp):
        nbrs |= g.adj[w]
    return (nbrs & ~s_mask & ~comp).bit_count()


def _greedy_minfill(g: Graph) -> tuple[int, list[int]]:
    """Min-fill elimination order (ties: min degree, then min id)."""
    adjm = list(g.adj)
    remaining = g.full_mask
    order: list[int] = []
    width = 0
    while remaining:
        best_v = -1
        best_key = None
        for v in bits(remaining):
            nb = adjm[v] & remaining & ~(1 << v)
            deg = nb.bit_count()
            fill = 0
            for a in bits(nb):
                fill += (nb & ~adjm[a] & ~(1 << a)).bit_count()
            key = (fill // 2, deg, v)
            if best_key is None or key < best_key:
                best_key = key
                best_v = v
        nb = adjm[best_v] & remaining & ~(1 << best_v)
        width = max(width, nb.bit_count())
        for a in bits(nb):
            adjm[a] |= nb & ~(1 << a)
        remaining &= ~(1 << best_v)
        order.append(best_v)
    return width, order


def _decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """Bags of the fill process: bag i is v_i plus its not-yet-eliminated
    fill neighbors; the parent is the bag of the first-eliminated one."""
    pos = {v: i for i, v in enumerate(order)}
    adjm = list(g.adj)
    bags: list[frozenset[int]] = []
    edges: list[tuple[int, int]] = []
    roots: list[int] = []
    for idx, v in enumerate(order):
        later = [u for u in bits(adjm[v]) if pos[u] > idx]
        bags.append(frozenset([v] + later))
        if later:
            lm = mask_of(later)
            for a in later:
                adjm[a] |= lm & ~(1 << a)
            edges.append((idx, pos[min(later, key=lambda u: pos[u])]))
        else:
            roots.append(idx)
    for prev, nxt in zip(roots, roots[1:]):
        edges.append((prev, nxt))
    return TreeDecomposition(tuple(bags), tuple(edges))


def treewidth_exact(
    g: Graph, size_limit: int | None = None
) -> tuple[int, TreeDecomposition]:
    """Exact treewidth with a witnessing decomposition."""
    cap = limit("treewidth", size_limit)
    if g.n > cap:
        raise SizeLimitError(f"exact treewidth limited to n <= {cap} (got {g.n})")
    if g.n == 0:
        return -1, TreeDecomposition((frozenset(),), ())
    lb = treewidth_lower_bound(g)
    ub, ub_order = _greedy_minfill(g)
    best_width = ub
    best_order = ub_order
    if lb < ub:
        full = g.full_mask
        memo: dict[int, int] = {}
        state = {"width": best_width, "order": best_order}
        order_stack: list[int] = []

        def dfs(s_mask: int, incurred: int) -> None:
            if incurred >= state["width"]:
                return
            prev = memo.get(s_mask)
            if prev is not None and prev <= incurred:
                return
            memo[s_mask] = incurred
            if s_mask == full:
                state["width"] = incurred
                state["order"] = list(order_stack)
                return
            rest = full & ~s_mask
            costs = [(v, _q_cost(g, s_mask, v)) for v in bits(rest)]
            free = [v for v, c in costs if c <= 1]
            if free:
                # Eliminating a cost-<=1 vertex first never hurts when the
                # graph has an edge, and lb >= 1 whenever we reach here.
                v = free[0]
                c = dict(costs)[v]
                order_stack.append(v)
                dfs(s_mask | 1 << v, max(incurred, c))
                order_stack.pop()
                return
            for v, c in costs:
                if max(incurred, c) < state["width"]:
                    order_stack.append(v)
                    dfs(s_mask | 1 << v, max(incurred, c))
                    order_stack.pop()

        dfs(0, 0)
        best_width = state["width"]
        best_order = state["order"]
    td = _decomposition_from_order(g, best_order)
    assert td.width == best_width, "fill simulation disagrees with search value"
    return best_width, td


# ----------------------------------------------------------------- pathwidth

def pathwidth_exact(
    g: Graph, size_limit: int | None = None
) -> tuple[int, TreeDecomposition]:
    """Exact pathwidth with a witnessing path decomposition.

    Dynamic program over prefix sets of a vertex layout; the cost of a
    prefix is the number of its vertices with a neighbor outside it.
    """
    cap = limit("pathwidth", size_limit)
    if g.n > cap:
        raise SizeLimitError(f"exact pathwidth limited to n <= {cap} (got {g.n})")
    if g.n == 0:
        return -1, TreeDecomposition((frozenset(),), ())
    full = g.full_mask
    boundary = [0] * (full + 1)
    f = [0] * (full + 1)
    for s in range(1, full + 1):
        b = 0
        for v in bits(s):
            if g.adj[v] & ~s:
                b += 1
        boundary[s] = b
        inner = min(f[s & ~(1 << v)] for v in bits(s))
        f[s] = max(b, inner)
    value = f[full]
    layout_rev: list[int] = []
    s = full
    while s:
        v = min(bits(s), key=lambda u: (f[s & ~(1 << u)], u))
        layout_rev.append(v)
        s &= ~(1 << v)
    layout = layout_rev[::-1]
    pos = {v: i for i, v in enumerate(layout)}
    bags = []
    for i, v in enumerate(layout):
        bag = {v}
        for u in layout[:i]:
            if any(pos[w] >= i for w in bits(g.adj[u])):
                bag.add(u)
        bags.append(frozenset(bag))
    td = path_decomposition(bags)
    assert td.width == value, "layout bags disagree with separation value"
    return value, td


# ---------------------------------------------------------- nice decompositions

@dataclass(frozen=True)
class NiceNode:
    bag: frozenset[int]
    kind: str  # "leaf" | "introduce" | "forget" | "join"
    children: tuple[int, ...]
    vertex: int | None


@dataclass(frozen=True)
class NiceTreeDecomposition:
    nodes: tuple[NiceNode, ...]
    root: int

    @property
    def width(self) -> int:
        return max(len(t.bag) for t in self.nodes) - 1

    def to_tree_decomposition(self) -> TreeDecomposition:
        edges = []
        for i, node in enumerate(self.nodes):
            edges.extend((i, c) for c in node.children)
        return TreeDecomposition(
            tuple(t.bag for t in self.nodes), tuple(edges)
        )


def verify_nice(g: Graph, ntd: NiceTreeDecomposition) -> list[str]:
    """Structural rules per node kind, plus validity as a decomposition."""
    violations: list[str] = []
    nodes = ntd.nodes
    if not 0 <= ntd.root < len(nodes):
        return ["root index out of range"]
    for i, t in enumerate(nodes):
        if any(not 0 <= c < len(nodes) for c in t.children):
            return [f"node {i} has a child index out of range"]
    if nodes[ntd.root].bag:
        violations.append("root bag not empty")
    for i, t in enumerate(nodes):
        kids = t.children
        if t.kind == "leaf":
            if kids or t.bag:
                violations.append(f"leaf node {i} must have no children, empty bag")
        elif t.kind == "introduce":
            if len(kids) != 1 or t.vertex is None:
                violations.append(f"introduce node {i} malformed")
            elif nodes[kids[0]].bag | {t.vertex} != t.bag or t.vertex in nodes[kids[0]].bag:
                violations.append(f"introduce node {i} does not add exactly {t.vertex}")
        elif t.kind == "forget":
            if len(kids) != 1 or t.vertex is None:
                violations.append(f"forget node {i} malformed")
            elif nodes[kids[0]].bag - {t.vertex} != t.bag or t.vertex not in nodes[kids[0]].bag:
                violations.append(f"forget node {i} does not drop exactly {t.vertex}")
        elif t.kind == "join":
            if len(kids) != 2:
                violations.append(f"join node {i} needs two children")
            elif not (nodes[kids[0]].bag == nodes[kids[1]].bag == t.bag):
                violations.append(f"join node {i} children bags differ from its own")
        else:
            violations.append(f"node {i} has unknown kind {t.kind!r}")
    violations.extend(verify_decomposition(g, ntd.to_tree_decomposition()))
    return violations


def make_nice(g: Graph, td: TreeDecomposition) -> NiceTreeDecomposition:
    """Convert a valid decomposition into a nice one of the same width.

    Subset-adjacent bags are contracted first, the tree is rooted at its
    lowest-indexed leaf, joins binarize multi-child nodes, and forget then
    introduce chains bridge each parent-child bag difference. Rooting a
    path decomposition at its end produces no join nodes.
    """
    bad = verify_decomposition(g, td)
    if bad:
        raise WitnessError("input decomposition invalid: " + "; ".join(bad))

    bags: dict[int, frozenset[int]] = dict(enumerate(td.bags))
    adj: dict[int, set[int]] = {i: set() for i in bags}
    for a, b in td.tree_edges:
        adj[a].add(b)
        adj[b].add(a)
    changed = True
    while changed:
        changed = False
        for a in sorted(bags):
            merged = False
            for b in sorted(adj[a]):
                if bags[a] <= bags[b] or bags[b] <= bags[a]:
                    keep, drop = (b, a) if bags[a] <= bags[b] else (a, b)
                    for x in adj[drop]:
                        if x != keep:
                            adj[x].discard(drop)
                            adj[x].add(keep)
                            adj[keep].add(x)
                    adj[keep].discard(drop)
                    del adj[drop], bags[drop]
                    changed = True
                    merged = True
                    break
            if merged:
                break

    leaves = [i for i in bags if len(adj[i]) <= 1]
    root_bag_node = min(leaves)

    nodes: list[NiceNode] = []

    def add(bag: frozenset[int], kind: str, children: tuple[int, ...], vertex) -> int:
        nodes.append(NiceNode(bag, kind, children, vertex))
        return len(nodes) - 1

    def chain_to(bag_from: frozenset[int], bag_to: frozenset[int], top: int) -> int:
        cur_bag, cur = bag_from, top
        for v in sorted(bag_from - bag_to):
            cur_bag = cur_bag - {v}
            cur = add(cur_bag, "forget", (cur,), v)
        for v in sorted(bag_to - bag_from):
            cur_bag = cur_bag | {v}
            cur = add(cur_bag, "introduce", (cur,), v)
        return cur

    def build(u: int, parent: int | None) -> int:
        """Nice subtree whose top node carries bag u's contents."""
        kids = sorted(w for w in adj[u] if w != parent)
        if not kids:
            cur = add(frozenset(), "leaf", (), None)
            return chain_to(frozenset(), bags[u], cur)
        tops = [chain_to(bags[w], bags[u], build(w, u)) for w in kids]
        acc = tops[0]
        for nxt in tops[1:]:
            acc = add(bags[u], "join", (acc, nxt), None)
        return acc

    top = build(root_bag_node, None)
    root = chain_to(bags[root_bag_node], frozenset(), top)
    ntd = NiceTreeDecomposition(tuple(nodes), root)
    assert ntd.width == td.width, "nice conversion changed the width"
    bad = verify_nice(g, ntd)
    assert not bad, "nice conversion produced invalid output: " + "; ".join(bad)
    return ntd
