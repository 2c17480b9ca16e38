"""Vertex-disjoint path computation via unit-capacity max flow.

Standard node splitting: vertex v becomes arc v_in -> v_out of capacity 1,
each graph edge becomes two unit arcs between the split halves, a super
source feeds every source's in-node and every sink's out-node drains to a
super sink. Augmenting paths are found by BFS over sorted adjacency, so
results are deterministic. The flow value equals the maximum number of
fully vertex-disjoint source-sink paths (Menger).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import ParameterError
from .graphs import Graph

_SRC = (-1, -1)
_SNK = (-2, -2)


def vertex_disjoint_paths(
    g: Graph,
    sources: Iterable[int],
    sinks: Iterable[int],
    *,
    allowed: Iterable[int] | None = None,
    banned_edges: Iterable[tuple[int, int]] = (),
    max_paths: int | None = None,
) -> list[tuple[int, ...]]:
    """A maximum collection of pairwise vertex-disjoint source-sink paths.

    Paths may only visit `allowed` vertices (default: all). Edges listed in
    `banned_edges` are unusable in either direction. Sources and sinks must
    be disjoint; every returned path starts in sources, ends in sinks, and
    shares no vertex with any other returned path, so in particular no path
    passes through an unused endpoint. Stops once `max_paths` paths are
    routed when that cap is given. Returned paths are sorted by their
    source vertex; each is a tuple of original vertex ids.
    """
    src_set = sorted(set(sources))
    snk_set = sorted(set(sinks))
    if set(src_set) & set(snk_set):
        raise ParameterError("sources and sinks must be disjoint")
    allow = set(range(g.n)) if allowed is None else set(allowed)
    for v in src_set + snk_set:
        if v not in allow:
            raise ParameterError(f"endpoint {v} not in the allowed set")
    banned = {(min(u, v), max(u, v)) for u, v in banned_edges}

    def v_in(v: int) -> tuple[int, int]:
        return (v, 0)

    def v_out(v: int) -> tuple[int, int]:
        return (v, 1)

    cap: dict[tuple, int] = {}
    succ: dict[tuple, list[tuple]] = {}
    original: list[tuple] = []

    def add_arc(a, b) -> None:
        cap[(a, b)] = 1
        cap.setdefault((b, a), 0)
        succ.setdefault(a, []).append(b)
        succ.setdefault(b, []).append(a)
        original.append((a, b))

    for v in sorted(allow):
        add_arc(v_in(v), v_out(v))
    for u, v in g.edges:
        if u in allow and v in allow and (u, v) not in banned:
            add_arc(v_out(u), v_in(v))
            add_arc(v_out(v), v_in(u))
    for s in src_set:
        add_arc(_SRC, v_in(s))
    for t in snk_set:
        add_arc(v_out(t), _SNK)
    for node in succ:
        succ[node] = sorted(set(succ[node]))

    goal = min(len(src_set), len(snk_set))
    if max_paths is not None:
        goal = min(goal, max_paths)
    value = 0
    while value < goal:
        parent: dict[tuple, tuple] = {_SRC: _SRC}
        queue = deque([_SRC])
        while queue and _SNK not in parent:
            a = queue.popleft()
            for b in succ.get(a, ()):
                if b not in parent and cap.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if _SNK not in parent:
            break
        node = _SNK
        while node != _SRC:
            prev = parent[node]
            cap[(prev, node)] -= 1
            cap[(node, prev)] += 1
            node = prev
        value += 1

    # No two original arcs are anti-parallel here (in-nodes only emit to
    # their own out-node), so an original arc carries net flow exactly when
    # its residual capacity dropped to zero.
    carrier = {arc for arc in original if cap[arc] == 0}

    paths: list[tuple[int, ...]] = []
    for s in src_set:
        if (_SRC, v_in(s)) not in carrier:
            continue
        carrier.discard((_SRC, v_in(s)))
        walk = [s]
        cur = s
        while True:
            carrier.discard((v_in(cur), v_out(cur)))
            if (v_out(cur), _SNK) in carrier:
                carrier.discard((v_out(cur), _SNK))
                break
            step = [
                b for b in succ[v_out(cur)]
                if b not in (_SRC, _SNK) and (v_out(cur), b) in carrier
            ]
            # Unit in-capacity guarantees exactly one outgoing flow arc.
            assert len(step) == 1, "flow decomposition lost conservation"
            carrier.discard((v_out(cur), step[0]))
            cur = step[0][0]
            walk.append(cur)
        paths.append(tuple(walk))
    return paths
