"""Constructors for the structured hypergraph families.

All constructors emit canonically labelled instances (vertices 0..n-1,
deterministic edge order) of simple linear ``m``-uniform hypergraphs,
and raise ``ValueError`` for parameters that would break those
properties.  Conventions:

* In paths and cycles, edge ``i`` occupies the contiguous id block
  starting at ``i*(m-1)``; junction vertices are the block boundaries.
* Pendant-edge bundles are attached with fresh ids allocated after all
  existing ones, bundle by bundle in increasing position order.
* ``pendants`` arguments are mappings ``{position: count}`` whose
  positions index junction vertices of the underlying skeleton
  (documented per constructor); missing positions mean zero.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import networkx as nx

from hyperspectra.core import Hypergraph

__all__ = [
    "loose_path",
    "loose_cycle",
    "hyperstar",
    "caterpillar",
    "cycle_with_pendants",
    "cycle_with_pendant_path",
    "fused_triangles",
    "fused_triangles_two_sites",
    "theta_hypergraph",
    "triple_fused_triangles",
    "power_hypergraph",
    "attach_pendant_edges",
    "attach_path",
    "interlocking_cycles_example",
    "path_junction",
    "cycle_junction",
]


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 2:
        raise ValueError(f"uniformity m must be an integer >= 2, got {m!r}")


def _fresh_block(h: Hypergraph, size: int) -> list[int]:
    start = (max(h.vertices) + 1) if h.n else 0
    return list(range(start, start + size))


def path_junction(m: int, position: int) -> int:
    """Vertex id of junction ``position`` (1-based) in a loose path."""
    return (position - 1) * (m - 1)


def cycle_junction(m: int, position: int) -> int:
    """Vertex id of junction ``position`` (1-based) in a loose cycle."""
    return (position - 1) * (m - 1)


def loose_path(m: int, length: int) -> Hypergraph:
    """Path of ``length`` edges, consecutive edges sharing one vertex.

    The vertex count is ``length*(m-1) + 1``; junctions sit at ids
    ``0, m-1, 2(m-1), ...``.
    """
    _check_m(m)
    if length < 1:
        raise ValueError(f"path length must be >= 1, got {length}")
    edges = [
        range(i * (m - 1), i * (m - 1) + m)
        for i in range(length)
    ]
    return Hypergraph(m, edges)


def loose_cycle(m: int, length: int) -> Hypergraph:
    """Cycle of ``length`` edges, consecutive edges sharing one vertex.

    ``length >= 3`` is required: with two edges the would-be cycle makes
    the edges share two vertices, which is not linear.
    """
    _check_m(m)
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    n = length * (m - 1)
    edges = [
        [(i * (m - 1) + j) % n for j in range(m)]
        for i in range(length)
    ]
    return Hypergraph(m, edges)


def hyperstar(m: int, k: int) -> Hypergraph:
    """``k`` edges all through one center vertex (id 0)."""
    _check_m(m)
    if k < 1:
        raise ValueError(f"hyperstar needs k >= 1 edges, got {k}")
    edges = [
        [0] + list(range(i * (m - 1) + 1, (i + 1) * (m - 1) + 1))
        for i in range(k)
    ]
    return Hypergraph(m, edges)


def attach_pendant_edges(h: Hypergraph, vertex: int, count: int) -> Hypergraph:
    """Add ``count`` fresh edges through ``vertex``."""
    if count < 0:
        raise ValueError(f"pendant count must be >= 0, got {count}")
    if count and vertex not in h.vertex_index:
        raise ValueError(f"vertex {vertex} is not in the hypergraph")
    edges = list(h.edges)
    nxt = (max(h.vertices) + 1) if h.n else 0
    for _ in range(count):
        edges.append([vertex] + list(range(nxt, nxt + h.m - 1)))
        nxt += h.m - 1
    return h.replace_edges(edges)


def attach_path(h: Hypergraph, vertex: int, length: int) -> Hypergraph:
    """Hang a loose path of ``length`` edges off ``vertex``.

    The path is glued by identifying one of its end vertices with
    ``vertex``; each subsequent edge continues from the highest fresh id
    of the previous one.
    """
    if length < 1:
        raise ValueError(f"attached path length must be >= 1, got {length}")
    if vertex not in h.vertex_index:
        raise ValueError(f"vertex {vertex} is not in the hypergraph")
    edges = list(h.edges)
    anchor = vertex
    nxt = max(h.vertices) + 1
    for _ in range(length):
        block = list(range(nxt, nxt + h.m - 1))
        edges.append([anchor] + block)
        anchor = block[-1]
        nxt += h.m - 1
    return h.replace_edges(edges)


def _as_counts(pendants: Mapping[int, int] | None, lo: int, hi: int, what: str) -> dict[int, int]:
    if pendants is None:
        return {}
    counts = {}
    for pos, c in pendants.items():
        if not lo <= pos <= hi:
            raise ValueError(
                f"{what} position {pos} out of range {lo}..{hi}"
            )
        if c < 0:
            raise ValueError(f"negative pendant count at position {pos}")
        if c:
            counts[int(pos)] = int(c)
    return counts


def caterpillar(
    m: int, length: int, pendants: Mapping[int, int] | None = None
) -> Hypergraph:
    """Loose path plus pendant-edge bundles at interior junctions.

    ``pendants`` maps junction positions ``2..length`` (the interior
    junctions of a path of ``length`` edges, 1-based from one end) to
    the number of pendant edges attached there.  With no pendants this
    is just :func:`loose_path`.  The diameter stays ``length``.
    """
    if length < 2 and pendants:
        raise ValueError("a path with pendant bundles needs length >= 2")
    counts = _as_counts(pendants, 2, length, "junction")
    h = loose_path(m, length)
    for pos in sorted(counts):
        h = attach_pendant_edges(h, path_junction(m, pos), counts[pos])
    return h


def cycle_with_pendants(
    m: int, length: int, pendants: Mapping[int, int] | None = None
) -> Hypergraph:
    """Loose cycle plus pendant-edge bundles at its junctions.

    ``pendants`` maps junction positions ``1..length`` to counts.
    """
    counts = _as_counts(pendants, 1, length, "junction")
    h = loose_cycle(m, length)
    for pos in sorted(counts):
        h = attach_pendant_edges(h, cycle_junction(m, pos), counts[pos])
    return h


def cycle_with_pendant_path(
    m: int, length: int, pendants: Mapping[int, int] | None = None
) -> Hypergraph:
    """Like :func:`cycle_with_pendants`, with one bundle edge extended.

    The first pendant edge at position 1 (which must exist) gets one
    further edge hanging from its lowest fresh vertex, so the branch at
    junction 1 reaches depth two.
    """
    counts = _as_counts(pendants, 1, length, "junction")
    if counts.get(1, 0) < 1:
        raise ValueError("needs at least one pendant edge at position 1 to extend")
    h = cycle_with_pendants(m, length, counts)
    # bundles are attached in position order, so the first pendant edge at
    # junction 1 is edge `length` and its fresh block starts right after
    # the bare cycle's ids
    tip = length * (m - 1)
    return attach_pendant_edges(h, tip, 1)


def fused_triangles(m: int, center_pendants: int = 0) -> Hypergraph:
    """Two 3-edge loose cycles sharing one junction, plus pendants there.

    The shared junction is vertex 0; ``center_pendants`` pendant edges
    are attached to it.  Vertex count of the bare shape: ``6(m-1) - 1``.
    """
    _check_m(m)
    base = loose_cycle(m, 3)
    shift = 3 * (m - 1) - 1
    second = [
        [0 if v == 0 else v + shift for v in e]
        for e in loose_cycle(m, 3).edges
    ]
    h = Hypergraph(m, list(base.edges) + second)
    return attach_pendant_edges(h, 0, center_pendants)


def fused_triangles_two_sites(
    m: int, center_pendants: int, side_pendants: int
) -> Hypergraph:
    """:func:`fused_triangles` with a second bundle at a degree-2 junction.

    All four non-shared junctions are symmetric; the bundle goes to the
    first junction of the first triangle (vertex ``m-1``).
    """
    h = fused_triangles(m, center_pendants)
    return attach_pendant_edges(h, m - 1, side_pendants)


def theta_hypergraph(
    m: int, pendants: Iterable[int] = (0, 0, 0, 0)
) -> Hypergraph:
    """Power of the theta graph, plus pendant bundles at its branch vertices.

    The skeleton has four vertices 0..3 and five edges 01, 12, 20, 23,
    30 — two vertices (0 and 2) joined by three independent paths of
    lengths 1, 2 and 2 — each blown up with ``m-2`` fresh vertices.  It
    carries three loose cycles (lengths 3, 3, 4) that pairwise share
    edges, and ``n = k(m-1) - 1`` for the bare shape.

    ``pendants`` gives the bundle sizes at vertices 0, 1, 2, 3.
    """
    _check_m(m)
    pend = tuple(pendants)
    if len(pend) != 4 or any(c < 0 for c in pend):
        raise ValueError("pendants must be four non-negative counts")
    pairs = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 0)]
    edges = []
    nxt = 4
    for u, v in pairs:
        edges.append([u, v] + list(range(nxt, nxt + m - 2)))
        nxt += m - 2
    h = Hypergraph(m, edges)
    for v, c in enumerate(pend):
        h = attach_pendant_edges(h, v, c)
    return h


def triple_fused_triangles(
    m: int, pendants: Iterable[int] = (0,) * 7
) -> Hypergraph:
    """Three 3-edge loose cycles sharing one junction, plus pendants.

    The skeleton is three triangles glued at vertex 0, with outer
    junction vertices 1..6 (two per triangle, in construction order),
    each skeleton edge blown up with ``m-2`` fresh vertices.  The bare
    shape has ``n = k(m-1) - 2`` with ``k = 9``.

    ``pendants`` gives seven bundle sizes: at the shared vertex 0, then
    at junctions 1..6.
    """
    _check_m(m)
    pend = tuple(pendants)
    if len(pend) != 7 or any(c < 0 for c in pend):
        raise ValueError("pendants must be seven non-negative counts")
    pairs = [
        (0, 1), (1, 2), (2, 0),
        (0, 3), (3, 4), (4, 0),
        (0, 5), (5, 6), (6, 0),
    ]
    edges = []
    nxt = 7
    for u, v in pairs:
        edges.append([u, v] + list(range(nxt, nxt + m - 2)))
        nxt += m - 2
    h = Hypergraph(m, edges)
    for v, c in enumerate(pend):
        h = attach_pendant_edges(h, v, c)
    return h


def power_hypergraph(graph, m: int) -> Hypergraph:
    """The ``m``-th power of an ordinary graph.

    Every graph edge keeps its two endpoints and gains ``m-2`` fresh
    vertices of its own.  ``graph`` may be a ``networkx.Graph`` or any
    iterable of 2-element edges; nodes are relabelled to 0..n-1 in
    sorted order.  With ``m == 2`` this is the graph itself.
    """
    _check_m(m)
    if isinstance(graph, nx.Graph):
        nodes = sorted(graph.nodes)
        pairs = sorted(tuple(sorted(e)) for e in graph.edges)
    else:
        pairs = sorted(tuple(sorted(e)) for e in graph)
        if any(len(p) != 2 for p in pairs):
            raise ValueError("graph edges must have exactly two endpoints")
        nodes = sorted({v for p in pairs for v in p})
    if not pairs:
        raise ValueError("graph has no edges")
    relabel = {v: i for i, v in enumerate(nodes)}
    edges = []
    nxt = len(nodes)
    for u, v in pairs:
        edges.append([relabel[u], relabel[v]] + list(range(nxt, nxt + m - 2)))
        nxt += m - 2
    return Hypergraph(m, edges)


def interlocking_cycles_example(m: int = 4) -> Hypergraph:
    """Loose 4-cycle plus a chord edge through two opposite junctions.

    A tricyclic shape whose three loose cycles pairwise share edges, so
    its vertex count ``k(m-1) - 1`` disagrees with what a per-cycle
    count would predict.  Isomorphic to the bare :func:`theta_hypergraph`
    of the same uniformity, but built from the cycle labelling.
    """
    _check_m(m)
    base = loose_cycle(m, 4)
    chord = [0, 2 * (m - 1)] + _fresh_block(base, m - 2)
    return base.replace_edges(list(base.edges) + [chord])
