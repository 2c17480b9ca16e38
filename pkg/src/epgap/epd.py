"""Packing-or-cover engine: exact pack and cover oracles, the balanced
separation step, the recursive hitting-set construction, and the top-level
win/win certificate.

pack(g) is the maximum number of pairwise vertex-disjoint minor models of
the pattern in g; cover(g) is the minimum number of vertices meeting every
model. For a connected pattern, pack <= cover always, and the win/win
routine returns either k disjoint models or a hitting set.

Diagnostics (recursion traces, branch decisions, treewidth-versus-bound
comparisons) go to the ``epgap.epd`` logger, never to stdout.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .bounds import bound_th2
from .errors import ParameterError, PreconditionError, SizeLimitError
from .graphs import Graph, bits, mask_of
from .limits import limit
from .minors import MinorModel, enumerate_minimal_models, find_minor_model
from .width import NiceTreeDecomposition, make_nice, treewidth_exact, verify_nice

log = logging.getLogger("epgap.epd")


@dataclass(frozen=True)
class Separation:
    """Vertex sets covering the graph with no edge between the private
    parts a - b and b - a; the shared part is the separator."""

    a: frozenset[int]
    b: frozenset[int]

    @property
    def order(self) -> int:
        return len(self.a & self.b)


def verify_separation(g: Graph, sep: Separation) -> list[str]:
    """All violated separation clauses. Empty = valid."""
    out = []
    if sep.a | sep.b != frozenset(range(g.n)):
        out.append("sides do not cover the vertex set")
    private_a = sep.a - sep.b
    private_b = sep.b - sep.a
    for u, v in g.edges:
        if (u in private_a and v in private_b) or (
            u in private_b and v in private_a
        ):
            out.append(f"edge ({u},{v}) crosses the separation")
    return out


@dataclass(frozen=True)
class Certificate:
    """Win/win outcome: either k disjoint models or a hitting set."""

    kind: str  # "packing" | "cover"
    models: tuple[MinorModel, ...] = ()
    vertices: frozenset[int] = field(default_factory=frozenset)

    def as_dict(self) -> dict:
        if self.kind == "packing":
            return {
                "type": "packing",
                "models": [m.as_dict() for m in self.models],
            }
        return {"type": "cover", "vertices": sorted(self.vertices)}


def _pack_caps(h: Graph, size_limit: int | None) -> int:
    # a triangle pattern keeps enumeration cheap, so it gets a larger host
    if h.n == 3 and h.m == 3:
        return limit("pack_host_triangle", size_limit)
    return limit("pack_host", size_limit)


def _minimal_masks(
    g: Graph, h: Graph, model_cap: int | None
) -> list[MinorModel]:
    found = enumerate_minimal_models(g, h, model_cap=model_cap)
    if found.truncated:
        raise SizeLimitError(
            "minimal model enumeration truncated; host too rich for "
            "exact packing"
        )
    return list(found.models)


def pack_exact(
    g: Graph,
    h: Graph,
    *,
    size_limit: int | None = None,
    model_cap: int | None = None,
) -> tuple[int, tuple[MinorModel, ...]]:
    """Maximum number of pairwise vertex-disjoint models of h in g, with a
    witnessing family.

    Works over the minimal-support models only: any disjoint family shrinks
    to a minimal-support family of the same size. The search branches on
    the lowest host vertex still usable, either skipping it or committing
    to one of the minimal models through it, memoized on the set of usable
    vertices.
    """
    cap = _pack_caps(h, size_limit)
    if g.n > cap:
        raise SizeLimitError(f"exact packing limited to n <= {cap} (got {g.n})")
    models = _minimal_masks(g, h, model_cap)
    if not models:
        return 0, ()
    masks = [mask_of(m.support) for m in models]
    through: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for i, mk in enumerate(masks):
        for v in bits(mk):
            through[v].append(i)
    memo: dict[int, int] = {}

    def best(avail: int) -> int:
        if avail in memo:
            return memo[avail]
        rest = avail
        result = 0
        while rest:
            v = (rest & -rest).bit_length() - 1
            fits = [i for i in through[v] if masks[i] & ~avail == 0]
            if fits:
                result = best(avail & ~(1 << v))
                for i in fits:
                    result = max(result, 1 + best(avail & ~masks[i]))
                break
            rest &= rest - 1
        memo[avail] = result
        return result

    value = best(g.full_mask)
    chosen: list[MinorModel] = []
    avail = g.full_mask
    while len(chosen) < value:
        rest = avail
        while rest:
            v = (rest & -rest).bit_length() - 1
            fits = [i for i in through[v] if masks[i] & ~avail == 0]
            if fits:
                take = None
                for i in fits:
                    if 1 + best(avail & ~masks[i]) == best(avail):
                        take = i
                        break
                if take is None:
                    avail &= ~(1 << v)
                else:
                    chosen.append(models[take])
                    avail &= ~masks[take]
                break
            rest &= rest - 1
    used: set[int] = set()
    for m in chosen:
        assert not (used & m.support), "packing witness overlaps"
        used |= m.support
    return value, tuple(chosen)


def cover_exact(
    g: Graph,
    h: Graph,
    *,
    size_limit: int | None = None,
    model_cap: int | None = None,
) -> tuple[int, frozenset[int]]:
    """Minimum number of vertices meeting every model of h in g, with a
    witnessing set.

    Hitting every minimal support hits every model. Iterative deepening on
    the budget, always branching over the smallest support not yet hit;
    the witness is validated by re-running the minor search on what is
    left of the host.
    """
    cap = _pack_caps(h, size_limit)
    if g.n > cap:
        raise SizeLimitError(f"exact cover limited to n <= {cap} (got {g.n})")
    models = _minimal_masks(g, h, model_cap)
    if not models:
        return 0, frozenset()
    masks = [mask_of(m.support) for m in models]

    def extend(chosen: int, budget: int) -> int | None:
        open_masks = [mk for mk in masks if mk & chosen == 0]
        if not open_masks:
            return chosen
        if budget == 0:
            return None
        target = min(open_masks, key=lambda mk: (mk.bit_count(), mk))
        for v in bits(target):
            got = extend(chosen | (1 << v), budget - 1)
            if got is not None:
                return got
        return None

    for budget in range(g.n + 1):
        got = extend(0, budget)
        if got is not None:
            cover = frozenset(bits(got))
            survivors = [v for v in range(g.n) if v not in cover]
            leftover = find_minor_model(
                g, h, allowed=survivors, host_limit=g.n
            )
            assert leftover is None, "cover witness misses a model"
            return len(cover), cover
    raise AssertionError("unreachable: the full vertex set always covers")


def _subtree_vertex_sets(
    ntd: NiceTreeDecomposition,
) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """Per node: union of bags in its subtree, and that union minus its
    own bag (the part of the graph already processed strictly below)."""
    n = len(ntd.nodes)
    seen: list[frozenset[int]] = [frozenset()] * n
    order: list[int] = []
    stack = [ntd.root]
    while stack:
        i = stack.pop()
        order.append(i)
        stack.extend(ntd.nodes[i].children)
    for i in reversed(order):
        acc = set(ntd.nodes[i].bag)
        for c in ntd.nodes[i].children:
            acc |= seen[c]
        seen[i] = frozenset(acc)
    bodies = [seen[i] - ntd.nodes[i].bag for i in range(n)]
    return seen, bodies


def balanced_separation(
    g: Graph, h: Graph, ntd: NiceTreeDecomposition
) -> Separation:
    """Separation of order at most width+1 whose first private side packs
    at most two thirds of the full packing number.

    Computes p(t) = pack of the processed part below each node, checks the
    node-kind transfer rules (leaves start at zero, introduces keep the
    value, forgets add at most one, joins add the two sides), and cuts at
    the unique node whose value crosses 2k/3 while its children stay at or
    below it. With packing number zero there is no such node and the
    trivial separation (V, V) is returned.
    """
    if not h.is_connected():
        raise PreconditionError("pattern must be connected")
    bad = verify_nice(g, ntd)
    if bad:
        raise PreconditionError("invalid decomposition: " + "; ".join(bad))
    subtree, bodies = _subtree_vertex_sets(ntd)
    pack_memo: dict[frozenset[int], int] = {}

    def pack_of(vs: frozenset[int]) -> int:
        if vs not in pack_memo:
            sub, _ = g.induced(vs)
            pack_memo[vs] = pack_exact(sub, h)[0]
        return pack_memo[vs]

    p = [pack_of(bodies[i]) for i in range(len(ntd.nodes))]
    for i, node in enumerate(ntd.nodes):
        if node.kind == "leaf":
            assert p[i] == 0, "leaf must start at zero"
        elif node.kind == "introduce":
            assert p[i] == p[node.children[0]], "introduce must keep the value"
        elif node.kind == "forget":
            assert p[i] - p[node.children[0]] in (0, 1), \
                "forget must add at most one"
        else:
            assert p[i] == sum(p[c] for c in node.children), \
                "join must add the two sides"
    k = p[ntd.root]
    assert bodies[ntd.root] == frozenset(range(g.n))
    everything = frozenset(range(g.n))
    if k == 0:
        log.info("packing number is zero; trivial separation")
        return Separation(everything, everything)
    qualifying = [
        i
        for i, node in enumerate(ntd.nodes)
        if 3 * p[i] > 2 * k
        and all(3 * p[c] <= 2 * k for c in node.children)
    ]
    assert len(qualifying) == 1, \
        f"crossing node must be unique, found {len(qualifying)}"
    t = qualifying[0]
    kind = ntd.nodes[t].kind
    assert kind in ("forget", "join"), f"crossing node cannot be a {kind}"
    c = ntd.nodes[t].children[0]
    side_a = subtree[c]
    side_b = (everything - subtree[c]) | ntd.nodes[c].bag
    sep = Separation(side_a, side_b)
    assert sep.order <= ntd.width + 1, "separator exceeds width budget"
    assert not verify_separation(g, sep), "constructed separation invalid"
    assert 3 * pack_of(frozenset(side_a - side_b)) <= 2 * k, \
        "first private side packs too much"
    log.info(
        "separation at %s node: order %d, private packs %d and <= %d of %d",
        kind, sep.order, p[c], 2 * k // 3, k,
    )
    return sep


def hitting_set_recursive(
    g: Graph, h: Graph, width_budget: int
) -> frozenset[int]:
    """Hitting set for all models of h in g, built by recursive balanced
    separation: split off a third of the packing, keep the separator, and
    recurse into both private sides.

    Every call verifies its output by re-running the minor search with the
    set deleted; sizes are logged against the per-level budget of
    width_budget + 1 separator vertices.
    """
    if not h.is_connected():
        raise PreconditionError("pattern must be connected")
    pk = pack_exact(g, h)[0]
    if pk == 0:
        return frozenset()
    _, td = treewidth_exact(g)
    ntd = make_nice(g, td)
    sep = balanced_separation(g, h, ntd)
    assert sep.order <= width_budget + 1, "separator exceeds width budget"
    result = set(sep.a & sep.b)
    for private in (sep.a - sep.b, sep.b - sep.a):
        sub, ids = g.induced(private)
        part = hitting_set_recursive(sub, h, width_budget)
        result |= {ids[v] for v in part}
    survivors = [v for v in range(g.n) if v not in result]
    leftover = find_minor_model(g, h, allowed=survivors, host_limit=g.n)
    assert leftover is None, "recursive hitting set misses a model"
    assert len(result) >= pk, "a cover can never undercut the packing"
    log.info(
        "hitting set of size %d on %d vertices (packing %d, "
        "per-level budget %d)",
        len(result), g.n, pk, width_budget + 1,
    )
    return frozenset(result)


def epgap_winwin(g: Graph, h: Graph, k: int) -> Certificate:
    """k disjoint models of h in g, or a hitting set: the win/win
    certificate behind the packing-or-cover gap.

    The packing branch triggers exactly when the exact packing number
    reaches k. At this scale exact treewidth always falls below the
    evaluated gap bound, so the alternative branch is always the cover;
    the comparison is logged for every cover-branch run.
    """
    if k < 1:
        raise ParameterError("k must be at least 1")
    if not h.is_connected():
        raise PreconditionError("pattern must be connected")
    value, models = pack_exact(g, h)
    if value >= k:
        return Certificate("packing", models=models[:k])
    if g.n <= limit("treewidth"):
        tw = treewidth_exact(g)[0]
        gap = bound_th2(k, h.n)
        assert tw < gap, "treewidth crossed the gap bound at desk scale"
        log.info(
            "packing %d < k = %d; treewidth %d below bound %d: cover branch",
            value, k, tw, gap,
        )
        width_budget = tw
    else:
        log.info("packing %d < k = %d: cover branch", value, k)
        width_budget = g.n - 1
    cover = hitting_set_recursive(g, h, width_budget)
    return Certificate("cover", vertices=cover)
