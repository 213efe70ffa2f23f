"""Core hypergraph type and structural analysis.

A hypergraph here is a finite collection of hyperedges over integer vertex
ids.  The package is built around *linear* *m-uniform* hypergraphs — every
edge has exactly ``m`` vertices and two distinct edges share at most one
vertex — but the :class:`Hypergraph` constructor is deliberately total:
it accepts any edge list and exposes :meth:`Hypergraph.validate` for
diagnostics, so malformed inputs can be inspected rather than rejected
outright.  JSON loading, by contrast, is strict (see :func:`from_dict`).

Structural notions provided here:

* degrees (number of incident edges), pendant vertices and pendant edges;
* connectivity, vertex distances and diameter (edge-count metric);
* loose cycles: cyclically arranged edge sequences in which consecutive
  edges share exactly one vertex, the shared vertices are pairwise
  distinct, and non-consecutive edges are disjoint;
* cyclicity classification (supertree / unicyclic / bicyclic / ...) with
  the vertex-count bookkeeping that goes along with it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Iterator

import networkx as nx

__all__ = [
    "Hypergraph",
    "CyclicityReport",
    "incidence_graph",
    "are_isomorphic",
    "from_dict",
    "read_json",
    "write_json",
]


class Hypergraph:
    """An edge list over integer vertices, nominally ``m``-uniform.

    Parameters
    ----------
    m:
        Nominal uniformity.  Must be an integer >= 2.  Edges of other
        sizes are accepted and reported by :meth:`validate`.
    edges:
        Iterable of vertex iterables.  Each edge is normalised to a
        sorted tuple of distinct vertex ids; the edge *order* is kept,
        since transformations refer to edges by index.

    Notes
    -----
    Instances are immutable by convention: all exposed containers are
    tuples, and derived structure is cached.  There are no isolated
    vertices — the vertex set is the union of the edges.
    """

    def __init__(self, m: int, edges: Iterable[Iterable[int]]):
        if not isinstance(m, int) or isinstance(m, bool) or m < 2:
            raise ValueError(f"uniformity m must be an integer >= 2, got {m!r}")
        norm: list[tuple[int, ...]] = []
        for e in edges:
            t = tuple(sorted(set(e)))
            if not t:
                raise ValueError("edges must be non-empty vertex sets")
            if any(not isinstance(v, int) or isinstance(v, bool) for v in t):
                raise TypeError(f"vertex ids must be integers, got edge {t!r}")
            norm.append(t)
        self.m: int = m
        self.edges: tuple[tuple[int, ...], ...] = tuple(norm)

    # -- basic structure ------------------------------------------------

    @property
    def k(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Sorted tuple of all vertex ids (the union of the edges)."""
        return tuple(sorted({v for e in self.edges for v in e}))

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.vertices)

    @cached_property
    def vertex_index(self) -> dict[int, int]:
        """Map from vertex id to its position in :attr:`vertices`."""
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _incidence(self) -> dict[int, tuple[int, ...]]:
        inc: dict[int, list[int]] = {v: [] for v in self.vertices}
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return {v: tuple(ix) for v, ix in inc.items()}

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Indices of the edges containing vertex ``v``."""
        return self._incidence[v]

    def degree(self, v: int) -> int:
        """Number of edges incident to ``v``.

        For a linear uniform hypergraph this coincides with the weighted
        row sum of the adjacency matrix.
        """
        return len(self._incidence[v])

    def degrees(self) -> dict[int, int]:
        """Degree of every vertex, keyed by vertex id."""
        return {v: len(ix) for v, ix in self._incidence.items()}

    @cached_property
    def _neighbor_sets(self) -> dict[int, frozenset[int]]:
        nbr: dict[int, set[int]] = {v: set() for v in self.vertices}
        for e in self.edges:
            for v in e:
                nbr[v].update(e)
        return {v: frozenset(s - {v}) for v, s in nbr.items()}

    def neighbors(self, v: int) -> frozenset[int]:
        """Vertices sharing at least one edge with ``v``."""
        return self._neighbor_sets[v]

    # -- shape predicates -------------------------------------------------

    @cached_property
    def is_uniform(self) -> bool:
        """True when every edge has exactly ``m`` vertices."""
        return all(len(e) == self.m for e in self.edges)

    @cached_property
    def is_simple(self) -> bool:
        """True when no edge is repeated."""
        return len(set(self.edges)) == len(self.edges)

    @cached_property
    def is_linear(self) -> bool:
        """True when simple and any two edges share at most one vertex."""
        seen: set[tuple[int, int]] = set()
        for ix in self._incidence.values():
            for a in range(len(ix)):
                for b in range(a + 1, len(ix)):
                    pair = (ix[a], ix[b])
                    if pair in seen:
                        return False
                    seen.add(pair)
        return self.is_simple

    @cached_property
    def is_connected(self) -> bool:
        """True when all vertices are reachable via shared edges."""
        if self.n == 0:
            return True
        start = self.vertices[0]
        seen = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            for u in self._neighbor_sets[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n

    def validate(self) -> list[str]:
        """Diagnostic check; returns a list of violation messages.

        An empty list means the hypergraph is a simple linear
        ``m``-uniform hypergraph with at least one edge.  This never
        raises — it is the introspection companion to the strict JSON
        loader.
        """
        problems: list[str] = []
        if self.k == 0:
            problems.append("hypergraph has no edges")
        bad_size = [i for i, e in enumerate(self.edges) if len(e) != self.m]
        if bad_size:
            problems.append(
                f"{len(bad_size)} edge(s) are not {self.m}-uniform "
                f"(first at index {bad_size[0]})"
            )
        if not self.is_simple:
            dup = sorted({e for e in self.edges if self.edges.count(e) > 1})
            problems.append(f"duplicate edges present, e.g. {dup[0]}")
        if self.is_simple and not self.is_linear:
            for i in range(self.k):
                ei = set(self.edges[i])
                for j in range(i + 1, self.k):
                    if len(ei.intersection(self.edges[j])) > 1:
                        problems.append(
                            f"edges {i} and {j} share more than one vertex"
                        )
                        break
                else:
                    continue
                break
        return problems

    # -- pendant structure ----------------------------------------------

    @cached_property
    def pendant_vertices(self) -> frozenset[int]:
        """Vertices of degree one."""
        return frozenset(v for v, ix in self._incidence.items() if len(ix) == 1)

    @cached_property
    def non_pendant_vertices(self) -> frozenset[int]:
        """Vertices of degree at least two."""
        return frozenset(v for v, ix in self._incidence.items() if len(ix) >= 2)

    def pendant_edges(self) -> tuple[int, ...]:
        """Indices of edges with exactly one non-pendant vertex."""
        pend = self.pendant_vertices
        out = []
        for i, e in enumerate(self.edges):
            if sum(1 for v in e if v not in pend) == 1:
                out.append(i)
        return tuple(out)

    def is_power_of_graph(self) -> bool:
        """True when every edge has at most two non-pendant vertices.

        Such a hypergraph is (isomorphic to) the ``m``-th power of an
        ordinary graph: collapse each edge to its non-pendant vertices
        and re-expand with fresh degree-one vertices.
        """
        pend = self.pendant_vertices
        return all(
            sum(1 for v in e if v not in pend) <= 2 for e in self.edges
        )

    # -- metric ------------------------------------------------------------

    def distance(self, u: int, v: int) -> int:
        """Length (in edges) of a shortest path from ``u`` to ``v``.

        Raises ``ValueError`` when no path exists.
        """
        if u not in self.vertex_index or v not in self.vertex_index:
            raise KeyError(f"unknown vertex in pair ({u}, {v})")
        if u == v:
            return 0
        dist = {u: 0}
        queue = [u]
        while queue:
            nxt: list[int] = []
            for w in queue:
                for x in self._neighbor_sets[w]:
                    if x not in dist:
                        dist[x] = dist[w] + 1
                        if x == v:
                            return dist[x]
                        nxt.append(x)
            queue = nxt
        raise ValueError(f"vertices {u} and {v} are not connected")

    def eccentricity(self, v: int) -> int:
        """Largest distance from ``v`` to any vertex (connected only)."""
        dist = {v: 0}
        queue = [v]
        while queue:
            nxt: list[int] = []
            for w in queue:
                for x in self._neighbor_sets[w]:
                    if x not in dist:
                        dist[x] = dist[w] + 1
                        nxt.append(x)
            queue = nxt
        if len(dist) != self.n:
            raise ValueError("eccentricity is undefined on a disconnected hypergraph")
        return max(dist.values())

    def diameter(self) -> int:
        """Largest vertex distance, measured in edges."""
        return max(self.eccentricity(v) for v in self.vertices)

    # -- loose cycles -------------------------------------------------------

    def loose_cycles(self, max_len: int | None = None) -> tuple[tuple[int, ...], ...]:
        """Enumerate loose cycles, each as a tuple of edge indices.

        A loose cycle of length ``l >= 3`` is a cyclic arrangement of
        ``l`` distinct edges where consecutive edges share exactly one
        vertex, those shared vertices are pairwise distinct, and
        non-consecutive edges are disjoint.  Cycles are reported once,
        up to rotation and reflection, starting from their smallest edge
        index and sorted by (length, indices).

        ``max_len`` caps the cycle length searched for (default: number
        of edges).
        """
        k = self.k
        cap = k if max_len is None else min(max_len, k)
        esets = [frozenset(e) for e in self.edges]
        found: dict[frozenset[int], tuple[int, ...]] = {}

        def extend(path: list[int], joints: set[int]) -> None:
            last = esets[path[-1]]
            start = esets[path[0]]
            middles = path[1:-1]
            for j in range(path[0] + 1, k):
                if j in path:
                    continue
                shared = esets[j] & last
                if len(shared) != 1:
                    continue
                joint = next(iter(shared))
                if joint in joints:
                    continue
                if any(esets[j] & esets[p] for p in middles):
                    continue
                if len(path) >= 2:
                    closing = esets[j] & start
                    if closing:
                        # j touches the start edge: either it closes a
                        # cycle right here or the path is dead (in a loose
                        # cycle, non-consecutive edges are disjoint).
                        if len(closing) == 1:
                            cj = next(iter(closing))
                            if cj != joint and cj not in joints:
                                cyc = tuple(path) + (j,)
                                if cyc[1] > cyc[-1]:
                                    cyc = (cyc[0],) + tuple(reversed(cyc[1:]))
                                found.setdefault(frozenset(cyc), cyc)
                        continue
                if len(path) + 1 < cap:
                    joints.add(joint)
                    path.append(j)
                    extend(path, joints)
                    path.pop()
                    joints.remove(joint)

        for s in range(k):
            extend([s], set())
        return tuple(sorted(found.values(), key=lambda c: (len(c), c)))

    def cyclicity(self, max_len: int | None = None) -> "CyclicityReport":
        """Classify by loose-cycle count and report vertex bookkeeping."""
        cycles = self.loose_cycles(max_len=max_len)
        c = len(cycles)
        names = {0: "supertree" if self.is_connected else "acyclic",
                 1: "unicyclic", 2: "bicyclic", 3: "tricyclic"}
        label = names.get(c, f"{c}-cyclic")
        if not self.is_connected and c == 0:
            label = "acyclic"
        elif not self.is_connected:
            label = f"disconnected-{label}"
        expected = self.k * (self.m - 1) + 1 - c
        share = None
        if c >= 2:
            share = all(
                set(cycles[a]) & set(cycles[b])
                for a in range(c) for b in range(a + 1, c)
            )
        tri_type = None
        if self.is_connected and c == 3:
            if self.n == self.k * (self.m - 1) - 1:
                tri_type = "I"
            elif self.n == self.k * (self.m - 1) - 2:
                tri_type = "II"
        return CyclicityReport(
            n=self.n,
            k=self.k,
            m=self.m,
            connected=self.is_connected,
            num_loose_cycles=c,
            cycle_lengths=tuple(len(cy) for cy in cycles),
            classification=label,
            expected_n=expected,
            n_matches_cycle_count=(self.n == expected),
            cycles_pairwise_share_edges=share,
            tricyclic_type=tri_type,
        )

    # -- identity / conversion ---------------------------------------------

    def replace_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """A new hypergraph with the same uniformity and the given edges."""
        return Hypergraph(self.m, edges)

    def relabeled(self) -> tuple["Hypergraph", dict[int, int]]:
        """Copy with vertices renamed to 0..n-1; also returns the map."""
        mapping = {v: i for i, v in enumerate(self.vertices)}
        h = Hypergraph(self.m, [[mapping[v] for v in e] for e in self.edges])
        return h, mapping

    def to_dict(self) -> dict[str, Any]:
        """Plain-data form: ``{"m": ..., "n": ..., "edges": [...]}``.

        Vertices must already be labelled 0..n-1 (use :meth:`relabeled`
        first otherwise).
        """
        if self.vertices != tuple(range(self.n)):
            raise ValueError(
                "vertices are not labelled 0..n-1; call relabeled() before to_dict()"
            )
        return {
            "m": self.m,
            "n": self.n,
            "edges": [list(e) for e in self.edges],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.m == other.m and sorted(self.edges) == sorted(other.edges)

    def __hash__(self) -> int:
        return hash((self.m, tuple(sorted(self.edges))))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Hypergraph(m={self.m}, n={self.n}, k={self.k})"

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.edges)


@dataclass(frozen=True)
class CyclicityReport:
    """Loose-cycle census of a hypergraph.

    ``expected_n`` is ``k*(m-1) + 1 - num_loose_cycles``: the vertex
    count a connected linear uniform hypergraph would have if each loose
    cycle independently reduced the count by one.  The identity holds
    for supertrees and unicyclic hypergraphs, but can fail when cycles
    share edges; the mismatch is reported, never papered over.
    """

    n: int
    k: int
    m: int
    connected: bool
    num_loose_cycles: int
    cycle_lengths: tuple[int, ...]
    classification: str
    expected_n: int
    n_matches_cycle_count: bool
    cycles_pairwise_share_edges: bool | None
    tricyclic_type: str | None

    def as_dict(self) -> dict[str, Any]:
        d = dict(self.__dict__)
        d["cycle_lengths"] = list(self.cycle_lengths)
        return d


# -- isomorphism --------------------------------------------------------


def incidence_graph(h: Hypergraph) -> "nx.Graph":
    """Bipartite vertex/edge incidence graph with a ``kind`` label."""
    g = nx.Graph()
    for v in h.vertices:
        g.add_node(("v", v), kind="vertex")
    for i, e in enumerate(h.edges):
        g.add_node(("e", i), kind="edge")
        for v in e:
            g.add_edge(("e", i), ("v", v))
    return g


def are_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    """Hypergraph isomorphism via the labelled incidence graphs."""
    if h1.m != h2.m or h1.n != h2.n or h1.k != h2.k:
        return False
    if sorted(map(len, h1.edges)) != sorted(map(len, h2.edges)):
        return False
    return nx.vf2pp_is_isomorphic(
        incidence_graph(h1), incidence_graph(h2), node_label="kind"
    )


# -- JSON interchange -----------------------------------------------------
#
# {"m": int, "n": int, "edges": [[int, ...], ...]} with 0-based contiguous
# vertex ids.  The loader is strict: structural problems raise ValueError.


def from_dict(data: dict[str, Any]) -> Hypergraph:
    """Build a hypergraph from its JSON dict form, strictly validated.

    Hard violations (raise ``ValueError``): missing/ill-typed fields,
    ``m < 2``, edges of the wrong size or with repeated vertices,
    vertex ids outside ``0..n-1``, ids in ``0..n-1`` that appear in no
    edge, and duplicate edges.  Linearity is *not* enforced here — use
    :meth:`Hypergraph.validate` or family constructors for that.
    """
    if not isinstance(data, dict):
        raise ValueError("hypergraph JSON must be an object")
    missing = [key for key in ("m", "n", "edges") if key not in data]
    if missing:
        raise ValueError(f"hypergraph JSON is missing field(s): {', '.join(missing)}")
    m, n, edges = data["m"], data["n"], data["edges"]
    if not isinstance(m, int) or isinstance(m, bool) or m < 2:
        raise ValueError(f"'m' must be an integer >= 2, got {m!r}")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"'n' must be a positive integer, got {n!r}")
    if not isinstance(edges, list) or not edges:
        raise ValueError("'edges' must be a non-empty list of vertex lists")
    seen_edges: set[tuple[int, ...]] = set()
    used: set[int] = set()
    for idx, e in enumerate(edges):
        if not isinstance(e, list):
            raise ValueError(f"edge {idx} is not a list")
        for v in e:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"edge {idx} contains a non-integer vertex id")
            if not 0 <= v < n:
                raise ValueError(
                    f"edge {idx} contains vertex {v}, outside 0..{n - 1}"
                )
        if len(set(e)) != len(e):
            raise ValueError(f"edge {idx} repeats a vertex")
        if len(e) != m:
            raise ValueError(
                f"edge {idx} has {len(e)} vertices; expected m={m}"
            )
        key = tuple(sorted(e))
        if key in seen_edges:
            raise ValueError(f"duplicate edge {list(key)} (at index {idx})")
        seen_edges.add(key)
        used.update(e)
    if used != set(range(n)):
        lonely = sorted(set(range(n)) - used)
        raise ValueError(
            f"vertex id(s) {lonely} appear in no edge (n={n} is inconsistent)"
        )
    return Hypergraph(m, edges)


def read_json(path: str) -> Hypergraph:
    """Load a hypergraph from a JSON file (strict)."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return from_dict(data)


def write_json(h: Hypergraph, path: str) -> None:
    """Write a hypergraph to a JSON file in the interchange format."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(h.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
