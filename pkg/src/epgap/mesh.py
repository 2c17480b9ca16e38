"""Meshes: a tree-plus-interface structure witnessing high connectivity.

A k-mesh of order s in G is a cover of V(G) by two sides A and B together
with a tree T such that:

  (i)   T lives in G[A] and has maximum degree at most 3;
  (ii)  the interface A intersect B lies on T, each interface vertex has
        tree degree at most 2, and at least one tree leaf is an interface
        vertex;
  (iii) the interface has exactly s vertices;
  (iv)  the interface is externally k-connected in G[B]: any two disjoint
        interface subsets X', Y' of equal size l <= k are linked by l
        vertex-disjoint paths in G[B], each of length at least 2, with no
        interface vertex in the interior of any path.

Clause (iv) is decided by unit-capacity max flow with direct interface
edges banned and non-endpoint interface vertices removed, which encodes
the length and interiority constraints exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import SizeLimitError
from .flows import vertex_disjoint_paths
from .graphs import Graph, bits, mask_of
from .limits import limit


@dataclass(frozen=True)
class MeshWitness:
    side_a: frozenset[int]
    side_b: frozenset[int]
    tree_vertices: frozenset[int]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def interface(self) -> frozenset[int]:
        return self.side_a & self.side_b

    @property
    def order(self) -> int:
        return len(self.interface)


def _tree_shape_violations(g: Graph, mesh: MeshWitness) -> list[str]:
    out: list[str] = []
    tv = mesh.tree_vertices
    te = mesh.tree_edges
    if not tv:
        out.append("tree has no vertices")
        return out
    if not tv <= mesh.side_a:
        out.append("tree leaves side A")
    deg = {v: 0 for v in tv}
    for u, v in te:
        if u not in tv or v not in tv:
            out.append(f"tree edge ({u},{v}) leaves the tree vertex set")
            return out
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            out.append(f"tree edge ({u},{v}) not a host edge")
            return out
        deg[u] += 1
        deg[v] += 1
    if len(set((min(e), max(e)) for e in te)) != len(te):
        out.append("duplicate tree edges")
        return out
    sub = Graph(g.n, te)
    if len(te) != len(tv) - 1 or not sub.connected_within(mask_of(tv)):
        out.append("tree edges do not form a tree on the tree vertices")
        return out
    if max(deg.values()) > 3:
        out.append("tree degree exceeds 3")
    interface = mesh.interface
    if not interface <= tv:
        out.append("interface vertex off the tree")
    for v in sorted(interface & tv):
        if deg[v] > 2:
            out.append(f"interface vertex {v} has tree degree {deg[v]} > 2")
    leaves = {v for v, d in deg.items() if d <= 1}
    if not leaves & interface:
        out.append("no tree leaf lies on the interface")
    return out


def external_connectivity_failure(
    g: Graph, interface: frozenset[int], side_b: frozenset[int], k: int
) -> str | None:
    """First violated linkage requirement of clause (iv), or None.

    Checks every pair of disjoint equal-size interface subsets up to size
    k; paths run in G[B], direct interface-interface edges are banned and
    non-endpoint interface vertices are unusable.
    """
    inter = sorted(interface)
    banned = [
        (u, v) for u, v in g.edges if u in interface and v in interface
    ]
    for size in range(1, min(k, len(inter) // 2) + 1):
        for xs in combinations(inter, size):
            rest = [v for v in inter if v not in xs]
            for ys in combinations(rest, size):
                allowed = (side_b - interface) | set(xs) | set(ys)
                paths = vertex_disjoint_paths(
                    g, xs, ys, allowed=allowed, banned_edges=banned
                )
                if len(paths) < size:
                    return (
                        f"only {len(paths)} disjoint paths between {list(xs)} "
                        f"and {list(ys)}, need {size}"
                    )
    return None


def verify_mesh(
    g: Graph, mesh: MeshWitness, k: int, order: int | None = None,
    s_limit: int | None = None, k_limit: int | None = None,
) -> list[str]:
    """All violated mesh clauses for connectivity k. Empty = valid."""
    s_cap = limit("verify_mesh_s", s_limit)
    k_cap = limit("verify_mesh_k", k_limit)
    if len(mesh.interface) > s_cap:
        raise SizeLimitError(
            f"mesh verification limited to interface size {s_cap} "
            f"(got {len(mesh.interface)})"
        )
    if k > k_cap:
        raise SizeLimitError(f"mesh verification limited to k <= {k_cap} (got {k})")
    out: list[str] = []
    for v in sorted(mesh.side_a | mesh.side_b):
        if not 0 <= v < g.n:
            out.append(f"vertex {v} outside the host")
            return out
    if mesh.side_a | mesh.side_b != frozenset(range(g.n)):
        out.append("sides do not cover the host")
    if order is not None and len(mesh.interface) != order:
        out.append(f"interface has {len(mesh.interface)} vertices, expected {order}")
    out.extend(_tree_shape_violations(g, mesh))
    if out:
        return out
    failure = external_connectivity_failure(g, mesh.interface, mesh.side_b, k)
    if failure:
        out.append("external connectivity fails: " + failure)
    return out


def _degree_constrained_trees(
    g: Graph, vertices: tuple[int, ...], required: frozenset[int]
):
    """Spanning trees of G[vertices] with degree <= 3, degree <= 2 on the
    required set, and at least one leaf in the required set. Yields edge
    tuples; single-vertex input yields the empty edge tuple."""
    vs = list(vertices)
    if len(vs) == 1:
        yield ()
        return
    vset = set(vs)
    pool = [e for e in g.edges if e[0] in vset and e[1] in vset]
    need = len(vs) - 1
    caps = {v: (2 if v in required else 3) for v in vs}

    def rec(idx: int, chosen: list, parent: dict, deg: dict):
        if len(chosen) == need:
            leaves = {v for v in vs if deg[v] <= 1}
            if leaves & required:
                yield tuple(chosen)
            return
        if need - len(chosen) > len(pool) - idx:
            return
        u, v = pool[idx]

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ru, rv = find(u), find(v)
        if ru != rv and deg[u] < caps[u] and deg[v] < caps[v]:
            parent[ru] = rv
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(idx + 1, chosen, parent, deg)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            parent[ru] = ru
        yield from rec(idx + 1, chosen, parent, deg)

    yield from rec(0, [], {v: v for v in vs}, {v: 0 for v in vs})


def find_mesh(
    g: Graph,
    k: int,
    s: int,
    *,
    host_limit: int | None = None,
    k_limit: int | None = None,
    s_limit: int | None = None,
) -> MeshWitness | None:
    """Exhaustive search for a k-mesh of order exactly s.

    Enumerates interface candidates (ascending s-subsets), side splits of
    the remaining vertices, and degree-constrained trees, checking external
    connectivity last. Complete within its size limits: returns None only
    when no mesh of order s exists. The default limits are small; pass
    explicit overrides for planted instances that need more.
    """
    n_cap = limit("mesh_n", host_limit)
    k_cap = limit("mesh_k", k_limit)
    s_cap = limit("mesh_s", s_limit)
    if g.n > n_cap:
        raise SizeLimitError(f"mesh search limited to n <= {n_cap} (got {g.n})")
    if k > k_cap:
        raise SizeLimitError(f"mesh search limited to k <= {k_cap} (got {k})")
    if s > s_cap:
        raise SizeLimitError(f"mesh search limited to order <= {s_cap} (got {s})")
    if s < 1 or s > g.n:
        return None
    all_vs = list(range(g.n))
    for interface in combinations(all_vs, s):
        iset = frozenset(interface)
        rest = [v for v in all_vs if v not in iset]
        linkage_ok: dict[frozenset[int], bool] = {}
        for split in range(1 << len(rest)):
            extra_a = {rest[i] for i in range(len(rest)) if split >> i & 1}
            side_a = iset | extra_a
            side_b = frozenset(all_vs) - extra_a
            bkey = side_b
            if bkey not in linkage_ok:
                linkage_ok[bkey] = (
                    external_connectivity_failure(g, iset, side_b, k) is None
                )
            if not linkage_ok[bkey]:
                continue
            tree = _find_tree_on(g, side_a, iset)
            if tree is None:
                continue
            tv, te = tree
            return MeshWitness(frozenset(side_a), side_b, tv, te)
    return None


def _find_tree_on(
    g: Graph, side_a: frozenset[int], required: frozenset[int]
) -> tuple[frozenset[int], tuple[tuple[int, int], ...]] | None:
    """First tree in G[side_a] spanning the required set under the mesh
    degree rules, searching vertex supports in ascending mask order."""
    opt = sorted(side_a - required)
    req_tuple = tuple(sorted(required))
    for extra_mask in range(1 << len(opt)):
        extra = tuple(opt[i] for i in range(len(opt)) if extra_mask >> i & 1)
        support = tuple(sorted(req_tuple + extra))
        if not g.connected_within(mask_of(support)):
            continue
        for edges in _degree_constrained_trees(g, support, required):
            return frozenset(support), edges
    return None
