"""Minor models: verification, complete search, and enumeration of all
minimal-support models.

A model of a pattern H in a host G maps each pattern vertex to a nonempty
branch set, the branch sets are pairwise disjoint and each induces a
connected subgraph, and every pattern edge (i, j) is realized by at least
one host edge between branch set i and branch set j. Host edges beyond the
required ones are allowed, so H is a minor of G exactly when a model
exists.

The search assigns pattern vertices one at a time, always picking the
unassigned vertex with the most already-assigned neighbors (ties: higher
pattern degree, then lower id). Candidate branch sets are drawn from a
complete enumeration of connected subsets of the free host vertices, so
the search is exact: restricting candidates to minimal requirement-hitting
sets would miss models whose branch sets must carry extra vertices for
connectivity. Dead partial assignments are memoized by the free-vertex
mask plus the attachment profile of assigned branch sets that still have
unassigned pattern neighbors; two states agreeing on those can be extended
in exactly the same ways.

Minimal-support models (no proper subset of the support carries a model of
the same pattern) are enumerated by exclusion branching: find any model,
shrink its support to minimal by repeated single-vertex deletion searches,
report it, then branch on excluding each support vertex. Every minimal
support differs from the reported one in at least one excluded vertex, so
the recursion finds them all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import ParameterError, SizeLimitError
from .graphs import Graph, bits, mask_of
from .limits import limit


@dataclass(frozen=True)
class MinorModel:
    """Branch sets indexed by pattern vertex."""

    pattern: Graph
    branch_sets: tuple[frozenset[int], ...]

    @property
    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for b in self.branch_sets:
            out |= b
        return frozenset(out)

    def as_dict(self) -> dict:
        return {
            "pattern_n": self.pattern.n,
            "pattern_edges": [list(e) for e in self.pattern.edges],
            "branch_sets": [sorted(b) for b in self.branch_sets],
        }


def verify_model(g: Graph, model: MinorModel) -> list[str]:
    """All violated model clauses, as human-readable strings. Empty = valid."""
    violations: list[str] = []
    p = model.pattern
    sets = model.branch_sets
    if len(sets) != p.n:
        violations.append(f"expected {p.n} branch sets, got {len(sets)}")
        return violations
    masks = []
    for i, b in enumerate(sets):
        if not b:
            violations.append(f"branch set {i} is empty")
            masks.append(0)
            continue
        bad = [v for v in b if not 0 <= v < g.n]
        if bad:
            violations.append(f"branch set {i} leaves the host: {sorted(bad)}")
            masks.append(0)
            continue
        m = mask_of(b)
        masks.append(m)
        if not g.connected_within(m):
            violations.append(f"branch set {i} is not connected in the host")
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if masks[i] & masks[j]:
                shared = sorted(bits(masks[i] & masks[j]))
                violations.append(f"branch sets {i} and {j} intersect: {shared}")
    for i, j in p.edges:
        if not masks[i] or not masks[j] or masks[i] & masks[j]:
            continue
        reach = 0
        for v in bits(masks[i]):
            reach |= g.adj[v]
        if not reach & masks[j]:
            violations.append(f"pattern edge ({i},{j}) has no host edge")
    return violations


def _connected_subsets(g: Graph, free: int, cap: int) -> Iterator[int]:
    """All nonempty connected subsets of the free mask with at most cap
    vertices, each exactly once: grouped by minimum vertex ascending,
    preorder within a group, extension candidates ascending."""
    if cap < 1:
        return
    for root in bits(free):
        hi = free & ~((1 << root) - 1)
        yield from _grow(g, 1 << root, g.adj[root], 0, hi, cap)


def _grow(
    g: Graph, s: int, nbrs: int, forbidden: int, hi: int, cap: int
) -> Iterator[int]:
    yield s
    if s.bit_count() >= cap:
        return
    ext = nbrs & hi & ~s & ~forbidden
    tried = 0
    for u in bits(ext):
        yield from _grow(g, s | 1 << u, nbrs | g.adj[u], forbidden | tried, hi, cap)
        tried |= 1 << u


def find_minor_model(
    g: Graph,
    pattern: Graph,
    *,
    allowed: Iterable[int] | None = None,
    host_limit: int | None = None,
    pattern_limit: int | None = None,
) -> MinorModel | None:
    """Some model of pattern in g using only allowed vertices, or None.

    Complete within the size limits: returns None only when no model
    exists. Deterministic for fixed inputs. Searches by iterative
    deepening on total support size, so the returned model has the
    smallest support the search order reaches; without the deepening,
    weakly constrained pattern vertices (isolated ones in particular)
    drown the search in giant branch sets.
    """
    free0 = g.full_mask if allowed is None else mask_of(set(allowed)) & g.full_mask
    host_cap = limit("minor_host", host_limit)
    pat_cap = limit("minor_pattern", pattern_limit)
    if free0.bit_count() > host_cap:
        raise SizeLimitError(
            f"minor search limited to {host_cap} usable host vertices "
            f"(got {free0.bit_count()})"
        )
    if pattern.n > pat_cap:
        raise SizeLimitError(
            f"minor search limited to pattern size {pat_cap} (got {pattern.n})"
        )
    if pattern.n == 0:
        return MinorModel(pattern, ())
    if free0.bit_count() < pattern.n:
        return None

    assignment: dict[int, tuple[int, int]] = {}  # i -> (branch mask, outside-nbr mask)
    dead: dict[tuple, int] = {}  # profile -> largest vertex budget that failed
    full_pattern = (1 << pattern.n) - 1

    def profile(assigned_pmask: int, free: int) -> tuple:
        parts = []
        for j in bits(assigned_pmask):
            if pattern.adj[j] & ~assigned_pmask:
                parts.append((j, assignment[j][1] & free))
        return (assigned_pmask, free, tuple(parts))

    def extend(assigned_pmask: int, free: int, budget: int) -> bool:
        if assigned_pmask == full_pattern:
            return True
        key = profile(assigned_pmask, free)
        if dead.get(key, -1) >= budget:
            return False
        i = min(
            bits(full_pattern & ~assigned_pmask),
            key=lambda x: (
                -(pattern.adj[x] & assigned_pmask).bit_count(),
                -pattern.degree(x),
                x,
            ),
        )
        reqs = [
            assignment[j][1] & free for j in bits(pattern.adj[i] & assigned_pmask)
        ]
        if all(reqs):
            remaining_after = pattern.n - assigned_pmask.bit_count() - 1
            cap = min(free.bit_count(), budget) - remaining_after
            for s in _connected_subsets(g, free, cap):
                if any(not (s & r) for r in reqs):
                    continue
                nbrs = 0
                for v in bits(s):
                    nbrs |= g.adj[v]
                assignment[i] = (s, nbrs & ~s)
                if extend(
                    assigned_pmask | 1 << i, free & ~s, budget - s.bit_count()
                ):
                    return True
                del assignment[i]
        if dead.get(key, -1) < budget:
            dead[key] = budget
        return False

    for target in range(pattern.n, free0.bit_count() + 1):
        if extend(0, free0, target):
            break
    else:
        return None
    branch_sets = tuple(
        frozenset(bits(assignment[i][0])) for i in range(pattern.n)
    )
    return MinorModel(pattern, branch_sets)


class MinimalModels(NamedTuple):
    models: tuple[MinorModel, ...]
    truncated: bool


def _shrink_to_minimal(
    g: Graph,
    pattern: Graph,
    model: MinorModel,
    host_limit: int | None,
    pattern_limit: int | None,
) -> MinorModel:
    """Reduce a model until no support vertex can be dropped."""
    current = model
    while True:
        support = sorted(current.support)
        for v in support:
            trial = find_minor_model(
                g,
                pattern,
                allowed=[u for u in support if u != v],
                host_limit=host_limit,
                pattern_limit=pattern_limit,
            )
            if trial is not None:
                current = trial
                break
        else:
            return current


def enumerate_minimal_models(
    g: Graph,
    pattern: Graph,
    *,
    allowed: Iterable[int] | None = None,
    model_cap: int | None = None,
    host_limit: int | None = None,
    pattern_limit: int | None = None,
) -> MinimalModels:
    """All models with inclusion-minimal support, one model per support.

    Sound for packing and covering decisions: every model's support
    contains a minimal support from this list, so a vertex set hits every
    model iff it hits every listed support, and disjoint models can always
    be shrunk to disjoint minimal-support models. When the number of
    minimal supports exceeds the cap the result is cut off and flagged
    truncated.
    """
    if pattern.n == 0:
        raise ParameterError("minimal models of the empty pattern are undefined")
    cap = limit("enumerate_models", model_cap)
    base = (
        frozenset(range(g.n)) if allowed is None else frozenset(allowed)
    )
    found: dict[frozenset[int], MinorModel] = {}
    visited: set[frozenset[int]] = set()
    truncated = False
    stack: list[frozenset[int]] = [frozenset()]
    while stack:
        excl = stack.pop()
        if excl in visited:
            continue
        visited.add(excl)
        model = find_minor_model(
            g,
            pattern,
            allowed=base - excl,
            host_limit=host_limit,
            pattern_limit=pattern_limit,
        )
        if model is None:
            continue
        model = _shrink_to_minimal(g, pattern, model, host_limit, pattern_limit)
        support = model.support
        if support not in found:
            if len(found) >= cap:
                truncated = True
                break
            found[support] = model
        for v in sorted(support, reverse=True):
            nxt = excl | {v}
            if nxt not in visited:
                stack.append(nxt)
    ordered = sorted(
        found.values(), key=lambda m: (len(m.support), tuple(sorted(m.support)))
    )
    return MinimalModels(tuple(ordered), truncated)
