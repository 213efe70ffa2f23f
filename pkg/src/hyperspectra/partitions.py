"""Equitable partitions and quotient matrices.

A partition of the vertex set is *equitable* when, for any two parts P
and Q, the weighted adjacency row sum from a vertex of P into Q does
not depend on the choice of vertex.  The part-by-part sums form the
quotient matrix: its spectrum is contained in the adjacency spectrum,
its largest eigenvalue equals the spectral radius for connected
hypergraphs, and the positive eigenvector is constant on parts — which
is what makes small quotients such an effective exact route to radii of
highly symmetric shapes.

Partitions are plain lists of vertex-id lists.  All equitability
arithmetic is exact (integer pair counts for uniform hypergraphs,
fractions otherwise).

For hypergraphs in which every edge has at most two non-pendant
vertices (the powers of ordinary graphs), :func:`power_partition`
builds the canonical partition: singletons for non-pendant vertices,
one part per non-pendant edge holding its degree-one vertices, and the
degree-one vertices of pendant edges pooled per supporting vertex.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Sequence

import networkx as nx
import numpy as np

from hyperspectra.core import Hypergraph
from hyperspectra.families import power_hypergraph

__all__ = [
    "normalize_partition",
    "is_equitable",
    "quotient_matrix",
    "quotient_matrix_exact",
    "quotient_spectrum",
    "quotient_is_irreducible",
    "power_partition",
    "canonical_power_partition",
    "coarsest_equitable_refinement",
]

QUOTIENT_LIMIT = 64

PartitionLike = Sequence[Iterable[int]]


def normalize_partition(h: Hypergraph, parts: PartitionLike) -> list[list[int]]:
    """Validate and canonicalise: sorted parts of sorted distinct vertices.

    Parts must be non-empty, pairwise disjoint, and cover every vertex.
    """
    norm: list[list[int]] = []
    seen: set[int] = set()
    for i, block in enumerate(parts):
        b = sorted(set(block))
        if not b:
            raise ValueError(f"partition part {i} is empty")
        for v in b:
            if v not in h.vertex_index:
                raise ValueError(f"part {i} mentions unknown vertex {v}")
            if v in seen:
                raise ValueError(f"vertex {v} appears in more than one part")
            seen.add(v)
        norm.append(b)
    if len(seen) != h.n:
        missing = sorted(set(h.vertices) - seen)
        raise ValueError(f"partition misses vertices {missing[:5]}")
    return sorted(norm)


def _pair_weights(h: Hypergraph) -> dict[int, dict[int, Fraction]]:
    """Sparse exact adjacency: w[u][v] = sum of 1/(|e|-1) over shared edges."""
    w: dict[int, dict[int, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
    for e in h.edges:
        if len(e) < 2:
            raise ValueError("adjacency is undefined for singleton edges")
        f = Fraction(1, len(e) - 1)
        for p in range(len(e)):
            for q in range(p + 1, len(e)):
                u, v = e[p], e[q]
                w[u][v] += f
                w[v][u] += f
    return w


def _row_sums(
    h: Hypergraph, parts: list[list[int]]
) -> tuple[list[list[Fraction]] | None, str | None]:
    """Quotient entries if equitable, else (None, message)."""
    w = _pair_weights(h)
    where = {v: i for i, block in enumerate(parts) for v in block}
    out: list[list[Fraction]] = []
    for i, block in enumerate(parts):
        rows = []
        for v in block:
            sums = [Fraction(0)] * len(parts)
            for u, weight in w[v].items():
                sums[where[u]] += weight
            rows.append(sums)
        for j in range(1, len(rows)):
            if rows[j] != rows[0]:
                return None, (
                    f"part {i} is not equitable: vertices {block[0]} and "
                    f"{block[j]} see different part row sums"
                )
        out.append(rows[0])
    return out, None


def is_equitable(h: Hypergraph, parts: PartitionLike) -> bool:
    """Exact check that every part sees constant row sums into every part."""
    rows, _ = _row_sums(h, normalize_partition(h, parts))
    return rows is not None


def quotient_matrix_exact(
    h: Hypergraph, parts: PartitionLike
) -> list[list[Fraction]]:
    """The quotient matrix as exact fractions; raises if not equitable.

    For an ``m``-uniform hypergraph every entry times ``m - 1`` is an
    integer.
    """
    norm = normalize_partition(h, parts)
    rows, msg = _row_sums(h, norm)
    if rows is None:
        raise ValueError(msg)
    return rows


def quotient_matrix(h: Hypergraph, parts: PartitionLike) -> np.ndarray:
    """The quotient matrix as floats; raises if the partition is not equitable."""
    return np.array(
        [[float(x) for x in row] for row in quotient_matrix_exact(h, parts)]
    )


def quotient_spectrum(h: Hypergraph, parts: PartitionLike) -> np.ndarray:
    """Eigenvalues of the quotient matrix, ascending.

    The quotient of an equitable partition is diagonalisable with real
    spectrum (it is similar to a symmetric matrix); residual imaginary
    parts beyond 1e-10 raise rather than being silently dropped.
    Limited to 64 parts.
    """
    b = quotient_matrix(h, parts)
    if b.shape[0] > QUOTIENT_LIMIT:
        raise ValueError(f"quotient spectrum limited to {QUOTIENT_LIMIT} parts")
    vals = np.linalg.eigvals(b)
    scale = max(1.0, float(np.max(np.abs(vals))))
    if np.max(np.abs(vals.imag)) > 1e-10 * scale:
        raise ValueError("quotient eigenvalues are not numerically real")
    return np.sort(vals.real)


def quotient_is_irreducible(h: Hypergraph, parts: PartitionLike) -> bool:
    """Whether the quotient's positive-entry digraph is strongly connected."""
    b = quotient_matrix(h, parts)
    g = nx.DiGraph((i, j) for i in range(len(b)) for j in range(len(b)) if b[i, j] > 0)
    g.add_nodes_from(range(len(b)))
    return nx.is_strongly_connected(g)


# -- the canonical partition of graph powers ------------------------------------


def power_partition(h: Hypergraph) -> list[list[int]]:
    """Canonical equitable partition of a hypergraph of power form.

    Every edge must have at most two non-pendant vertices (see
    :meth:`Hypergraph.is_power_of_graph`) and at least one — an edge all
    of whose vertices have degree one is a degenerate single-edge
    component with no supporting vertex, and is rejected.

    Parts: one singleton per non-pendant vertex; the degree-one
    vertices of each non-pendant edge, per edge; and the degree-one
    vertices of pendant edges, pooled over each supporting vertex.
    """
    pend = h.pendant_vertices
    singles = [[v] for v in sorted(h.non_pendant_vertices)]
    bundles: dict[int, list[int]] = defaultdict(list)
    loose_parts: list[list[int]] = []
    for e in h.edges:
        anchors = [v for v in e if v not in pend]
        free = [v for v in e if v in pend]
        if len(anchors) == 0:
            raise ValueError(
                "degenerate input: an edge with no non-pendant vertex "
                "(single-edge component) has no canonical partition"
            )
        if len(anchors) == 1:
            bundles[anchors[0]].extend(free)
        elif len(anchors) == 2:
            if free:
                loose_parts.append(sorted(free))
        else:
            raise ValueError(
                "not of power form: an edge has more than two non-pendant vertices"
            )
    parts = singles + loose_parts + [sorted(b) for b in bundles.values()]
    return normalize_partition(h, parts)


def canonical_power_partition(graph, m: int) -> tuple[Hypergraph, list[list[int]]]:
    """The ``m``-th power of a graph together with its canonical partition.

    Convenience composition of :func:`hyperspectra.families.power_hypergraph`
    and :func:`power_partition`, sharing one labelling.
    """
    h = power_hypergraph(graph, m)
    return h, power_partition(h)


# -- coarsest equitable refinement ------------------------------------------------


def coarsest_equitable_refinement(
    h: Hypergraph, parts: PartitionLike | None = None
) -> list[list[int]]:
    """Coarsest equitable partition refining ``parts`` (default: one part).

    Classic colour refinement with exact weights: vertices are
    repeatedly split by (current colour, multiset of adjacency mass per
    colour) until stable.  The fixed point is the unique coarsest
    equitable refinement of the starting partition.
    """
    if parts is None:
        parts = [list(h.vertices)]
    norm = normalize_partition(h, parts)
    w = _pair_weights(h)
    color = {v: i for i, block in enumerate(norm) for v in block}
    while True:
        sig: dict[int, tuple] = {}
        for v in h.vertices:
            mass: dict[int, Fraction] = defaultdict(Fraction)
            for u, weight in w[v].items():
                mass[color[u]] += weight
            sig[v] = (color[v], tuple(sorted(mass.items())))
        order: dict[tuple, int] = {}
        for v in h.vertices:
            if sig[v] not in order:
                order[sig[v]] = len(order)
        new_color = {v: order[sig[v]] for v in h.vertices}
        if len(order) == len(norm):
            break
        color = new_color
        groups: dict[int, list[int]] = defaultdict(list)
        for v in h.vertices:
            groups[color[v]].append(v)
        norm = sorted(sorted(g) for g in groups.values())
    return norm
