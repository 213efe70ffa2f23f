"""Exhaustive generation of small connected linear uniform hypergraphs.

Acyclic instances are grown edge by edge: every connected acyclic linear
hypergraph arises by repeatedly gluing a fresh edge onto one existing
vertex, so breadth-first attachment from a single edge reaches the whole
class.  Unicyclic instances grow the same way from a loose cycle seed.
Deduplication is two-tier: candidates are bucketed by a Weisfeiler-Lehman
hash of the vertex/edge incidence graph, then confirmed inside each bucket
with an exact isomorphism test, so no shape is ever lost to a hash
collision.

Full enumeration is deliberately capped at ``FULL_ENUMERATION_MAX_K``
edges; beyond desk scale the extremal searches switch to structured
candidate families instead.
"""

from __future__ import annotations

from typing import Iterator

import networkx as nx

from .core import Hypergraph, are_isomorphic, incidence_graph
from .families import loose_cycle

FULL_ENUMERATION_MAX_K = 12
DEFAULT_BUDGET = 500_000
_WL_ITERATIONS = 6


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would examine more candidates than allowed."""


def is_hypertree(h: Hypergraph) -> bool:
    """Connected, acyclic, and no edge carries more than two branch points."""
    if not h.is_connected or h.n != h.k * (h.m - 1) + 1:
        return False
    non_pendant = h.non_pendant_vertices
    return all(sum(1 for v in e if v in non_pendant) <= 2 for e in h.edges)


def _hash_key(h: Hypergraph) -> str:
    return nx.weisfeiler_lehman_graph_hash(
        incidence_graph(h), node_attr="kind", iterations=_WL_ITERATIONS
    )


class _Dedup:
    """Hash-bucketed store; membership is settled by exact isomorphism."""

    def __init__(self) -> None:
        self._buckets: dict[str, list[Hypergraph]] = {}

    def add(self, h: Hypergraph) -> bool:
        bucket = self._buckets.setdefault(_hash_key(h), [])
        if any(are_isomorphic(h, seen) for seen in bucket):
            return False
        bucket.append(h)
        return True


def _attach_fresh_edge(h: Hypergraph, vertex: int) -> Hypergraph:
    nxt = max(h.vertices) + 1
    edge = tuple([vertex] + list(range(nxt, nxt + h.m - 1)))
    return h.replace_edges(list(h.edges) + [edge])


def _grow(seeds: list[Hypergraph], steps: int, budget: int) -> list[Hypergraph]:
    level = list(seeds)
    examined = 0
    for _ in range(steps):
        store = _Dedup()
        nxt: list[Hypergraph] = []
        for h in level:
            for v in h.vertices:
                examined += 1
                if examined > budget:
                    raise BudgetExceededError(
                        f"enumeration budget of {budget} candidates exceeded"
                    )
                child = _attach_fresh_edge(h, v)
                if store.add(child):
                    nxt.append(child)
        level = nxt
    return level


def _check_scale(m: int, k: int) -> None:
    if m < 2:
        raise ValueError("edge size m must be at least 2")
    if k < 1:
        raise ValueError("need at least one edge")
    if k > FULL_ENUMERATION_MAX_K:
        raise ValueError(
            f"full enumeration is limited to k <= {FULL_ENUMERATION_MAX_K}; "
            "use a structured candidate family beyond that"
        )


def enumerate_supertrees(
    m: int, k: int, budget: int = DEFAULT_BUDGET
) -> list[Hypergraph]:
    """All connected acyclic linear m-uniform shapes with k edges, up to iso."""
    _check_scale(m, k)
    return _grow([Hypergraph(m, [tuple(range(m))])], k - 1, budget)


def enumerate_hypertrees(
    m: int,
    k: int,
    diameter: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[Hypergraph]:
    """Supertrees whose edges each hold at most two branch points.

    With ``diameter`` given, only shapes of exactly that diameter are kept.
    """
    shapes = [h for h in enumerate_supertrees(m, k, budget) if is_hypertree(h)]
    if diameter is not None:
        shapes = [h for h in shapes if h.diameter() == diameter]
    return shapes


def enumerate_unicyclic(
    m: int,
    k: int,
    cycle_length: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[Hypergraph]:
    """All connected linear m-uniform shapes with k edges and one loose cycle.

    ``cycle_length`` restricts to a single cycle length; otherwise every
    feasible length from 3 to k is covered.
    """
    _check_scale(m, k)
    if cycle_length is not None:
        if not 3 <= cycle_length <= k:
            raise ValueError(f"cycle length {cycle_length} infeasible for k={k}")
        lengths = [cycle_length]
    else:
        lengths = list(range(3, k + 1))
    out: list[Hypergraph] = []
    for length in lengths:
        out.extend(_grow([loose_cycle(m, length)], k - length, budget))
    return out


def diameter_four_profiles(m: int, k: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Stream ``(hub_bundle, branch_sizes)`` profiles of diameter-4 hypertrees.

    A diameter-4 hypertree is a hub vertex joined to r >= 2 branch vertices
    by single edges, with optional pendant bundles on the hub and at least
    one pendant bundle on each branch vertex.  The profile (hub bundle size
    plus the non-increasing multiset of branch bundle sizes) determines the
    shape up to isomorphism, so streaming profiles is exact without any
    isomorphism testing and scales to far larger k than attachment growth.
    """
    if m < 2:
        raise ValueError("edge size m must be at least 2")
    for r in range(2, k):
        for hub_bundle in range(0, k - 2 * r + 1):
            rest = k - r - hub_bundle
            for branch in _partitions_exact(rest, r):
                yield hub_bundle, branch


def diameter_four_hypertrees(m: int, k: int) -> Iterator[Hypergraph]:
    """Stream every diameter-4 hypertree with k edges, largest hub first."""
    for hub_bundle, branch in diameter_four_profiles(m, k):
        yield diameter_four_from_profile(m, hub_bundle, branch)


def _partitions_exact(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing partitions of ``total`` into exactly ``parts`` parts >= 1."""

    def rec(remaining: int, slots: int, cap: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        lo = -(-remaining // slots)  # ceil: keep parts feasible
        for first in range(min(cap, remaining - slots + 1), max(lo, 1) - 1, -1):
            for tail in rec(remaining - first, slots - 1, first):
                yield (first, *tail)

    if total < parts:
        return
    yield from rec(total, parts, total)


def diameter_four_from_profile(
    m: int, hub_bundle: int, branch: tuple[int, ...]
) -> Hypergraph:
    """Materialise a diameter-4 profile; the hub is vertex 0."""
    hub = 0
    edges: list[tuple[int, ...]] = []
    nxt = 1

    def fresh(count: int) -> list[int]:
        nonlocal nxt
        block = list(range(nxt, nxt + count))
        nxt += count
        return block

    for size in branch:
        joint = fresh(1)[0]
        edges.append(tuple([hub, joint] + fresh(m - 2)))
        for _ in range(size):
            edges.append(tuple([joint] + fresh(m - 1)))
    for _ in range(hub_bundle):
        edges.append(tuple([hub] + fresh(m - 1)))
    return Hypergraph(m, edges)


def enumerate_class(class_id: str, m: int, k: int, **constraints) -> list[Hypergraph]:
    """Dispatch by class name: supertrees, hypertrees, or unicyclic."""
    if class_id == "supertrees":
        return enumerate_supertrees(m, k, **constraints)
    if class_id == "hypertrees":
        return enumerate_hypertrees(m, k, **constraints)
    if class_id == "unicyclic":
        return enumerate_unicyclic(m, k, **constraints)
    raise ValueError(
        f"unknown class {class_id!r}; expected supertrees, hypertrees, or unicyclic"
    )
