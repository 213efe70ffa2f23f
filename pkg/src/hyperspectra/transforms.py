"""Edge surgery that pushes the spectral radius up.

Three operations are provided, each returning the rewritten hypergraph
together with before/after radii and a certificate string:

* ``move_edges`` detaches a batch of edges from chosen vertices and
  reattaches them at a single target vertex.
* ``spread_edges`` is the many-target generalisation: edges leave a common
  source vertex and land on individually chosen targets.
* ``release_edge`` gathers everything adjacent to a non-pendant edge onto
  one anchor vertex of that edge.

Certificates
------------
``"guaranteed-increase"`` means the Perron-vector hypothesis of the
underlying comparison argument was verified numerically, so the radius is
known to increase strictly (releasing needs no hypothesis at all).
``"observed-increase"`` means the hypothesis could not be verified but the
computed radii increased anyway.  ``"no-certificate"`` is everything else.

All operations insist that the rewritten hypergraph is simple, linear and
free of stranded vertices; they raise ``ValueError`` otherwise.  Inputs
must be connected so that the Perron vector is strictly positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Hypergraph
from .spectral import SpectralResult, spectral_radius

GUARANTEED = "guaranteed-increase"
OBSERVED = "observed-increase"
NO_CERT = "no-certificate"

#: Relative slack used when checking Perron-entry inequalities.  The
#: eigenvector is itself only accurate to roughly the iteration tolerance,
#: so exact ties (common in symmetric instances) must not flip the verdict.
HYPOTHESIS_SLACK = 1e-9


@dataclass(frozen=True)
class TransformResult:
    """Outcome of one edge operation."""

    hypergraph: Hypergraph
    certificate: str
    radius_before: float
    radius_after: float

    @property
    def margin(self) -> float:
        return self.radius_after - self.radius_before

    def as_dict(self) -> dict:
        return {
            "certificate": self.certificate,
            "radius_before": self.radius_before,
            "radius_after": self.radius_after,
            "margin": self.margin,
        }


def _require_connected(h: Hypergraph) -> SpectralResult:
    if not h.is_connected:
        raise ValueError("operation requires a connected hypergraph")
    if not h.is_linear:
        raise ValueError("operation requires a simple linear hypergraph")
    return spectral_radius(h)


def _rebuild(h: Hypergraph, new_edges: list[tuple[int, ...]]) -> Hypergraph:
    result = Hypergraph(h.m, new_edges)
    if not result.is_simple:
        raise ValueError("transformed hypergraph is not simple")
    if not result.is_linear:
        raise ValueError("transformed hypergraph is not linear")
    stranded = set(h.vertices) - set(result.vertices)
    if stranded:
        raise ValueError(
            f"transformation strands vertices {sorted(stranded)[:5]} "
            "(every vertex must keep at least one edge)"
        )
    return result


def _certify(
    h: Hypergraph,
    new_edges: list[tuple[int, ...]],
    before: SpectralResult,
    hypothesis_holds: bool,
) -> TransformResult:
    result = _rebuild(h, new_edges)
    after = spectral_radius(result)
    if hypothesis_holds:
        cert = GUARANTEED
    elif after.value > before.value + 1e-12:
        cert = OBSERVED
    else:
        cert = NO_CERT
    return TransformResult(result, cert, before.value, after.value)


def move_edges(
    h: Hypergraph,
    moves: Sequence[tuple[int, int]],
    target: int,
) -> TransformResult:
    """Move edges from per-edge detach vertices to a common target vertex.

    ``moves`` lists ``(edge_index, detach_vertex)`` pairs: each named edge
    loses its detach vertex and gains ``target`` instead.  The move is a
    guaranteed strict increase when the Perron entry of the target is at
    least that of every detach vertex.
    """
    before = _require_connected(h)
    if target not in h.vertex_index:
        raise ValueError(f"target vertex {target} does not exist")
    if not moves:
        raise ValueError("no edges to move")
    seen: set[int] = set()
    new_edges = list(h.edges)
    hypothesis = True
    x = before.vector
    slack = HYPOTHESIS_SLACK * max(x.values())
    for idx, detach in moves:
        if not 0 <= idx < h.k:
            raise ValueError(f"edge index {idx} out of range")
        if idx in seen:
            raise ValueError(f"edge {idx} named twice")
        seen.add(idx)
        edge = h.edges[idx]
        if detach not in edge:
            raise ValueError(f"vertex {detach} is not on edge {idx}")
        if target in edge:
            raise ValueError(f"target vertex {target} already lies on edge {idx}")
        new_edges[idx] = tuple(sorted(set(edge) - {detach} | {target}))
        if x[target] < x[detach] - slack:
            hypothesis = False
    return _certify(h, new_edges, before, hypothesis)


def spread_edges(
    h: Hypergraph,
    groups: Sequence[tuple[int, Sequence[tuple[int, int]]]],
) -> TransformResult:
    """Spread edges away from source vertices onto per-edge targets.

    Each group is ``(source_vertex, [(edge_index, target_vertex), ...])``:
    every listed edge contains the source, loses it, and gains its own
    target.  Within a group the targets must be distinct.  The spread is a
    guaranteed strict increase when, per group, either every listed edge
    hangs off the source as a pendant edge and the targets' Perron entries
    sum to at least ``len(group) *`` the source's entry, or otherwise every
    single target entry is at least the source's entry.
    """
    before = _require_connected(h)
    if not groups:
        raise ValueError("no edges to spread")
    x = before.vector
    slack = HYPOTHESIS_SLACK * max(x.values())
    seen_edges: set[int] = set()
    seen_sources: set[int] = set()
    new_edges = list(h.edges)
    hypothesis = True
    for source, pairs in groups:
        if source not in h.vertex_index:
            raise ValueError(f"source vertex {source} does not exist")
        if source in seen_sources:
            raise ValueError(f"source vertex {source} named twice")
        seen_sources.add(source)
        if not pairs:
            raise ValueError(f"source vertex {source} has no edges to spread")
        targets = [t for _, t in pairs]
        if len(set(targets)) != len(targets):
            raise ValueError(
                f"targets for source {source} must be distinct, got {targets}"
            )
        all_pendant_here = True
        for idx, tgt in pairs:
            if not 0 <= idx < h.k:
                raise ValueError(f"edge index {idx} out of range")
            if idx in seen_edges:
                raise ValueError(f"edge {idx} named twice")
            seen_edges.add(idx)
            edge = h.edges[idx]
            if source not in edge:
                raise ValueError(f"source vertex {source} is not on edge {idx}")
            if tgt in edge:
                raise ValueError(f"target vertex {tgt} already lies on edge {idx}")
            if tgt not in h.vertex_index:
                raise ValueError(f"target vertex {tgt} does not exist")
            new_edges[idx] = tuple(sorted(set(edge) - {source} | {tgt}))
            if any(v != source and h.degree(v) > 1 for v in edge):
                all_pendant_here = False
        if all_pendant_here:
            if sum(x[t] for t in targets) < len(pairs) * x[source] - slack:
                hypothesis = False
        else:
            if any(x[t] < x[source] - slack for t in targets):
                hypothesis = False
    return _certify(h, new_edges, before, hypothesis)


def release_edge(
    h: Hypergraph,
    edge_index: int,
    anchor: int | None = None,
) -> TransformResult:
    """Gather all edges adjacent to a non-pendant edge onto one of its vertices.

    Every edge meeting ``edge_index`` at some vertex other than the anchor is
    rewritten to meet it at the anchor instead.  When ``anchor`` is omitted
    it is chosen as the vertex of the edge with the largest Perron entry
    (ties broken by the smallest vertex id); any anchor choice yields
    isomorphic results.  The radius increase is unconditional, so the
    certificate is always ``"guaranteed-increase"``.
    """
    before = _require_connected(h)
    if not 0 <= edge_index < h.k:
        raise ValueError(f"edge index {edge_index} out of range")
    edge = h.edges[edge_index]
    non_pendant = [v for v in edge if h.degree(v) > 1]
    if len(non_pendant) < 2:
        raise ValueError(
            f"edge {edge_index} is pendant; releasing needs a non-pendant edge"
        )
    if anchor is None:
        x = before.vector
        anchor = min(edge, key=lambda v: (-x[v], v))
    elif anchor not in edge:
        raise ValueError(f"anchor vertex {anchor} is not on edge {edge_index}")
    new_edges = list(h.edges)
    for idx, other in enumerate(h.edges):
        if idx == edge_index:
            continue
        shared = set(edge) & set(other)
        if not shared:
            continue
        if len(shared) > 1:
            raise ValueError("releasing requires a linear hypergraph")
        (joint,) = shared
        if joint == anchor:
            continue
        new_edges[idx] = tuple(sorted(set(other) - {joint} | {anchor}))
    return _certify(h, new_edges, before, hypothesis_holds=True)
