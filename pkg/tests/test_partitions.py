"""Equitable partitions, quotients, the canonical power-form partition."""

import networkx as nx
import numpy as np
import pytest

from hyperspectra.core import Hypergraph
from hyperspectra.families import (
    caterpillar,
    cycle_with_pendants,
    fused_triangles,
    hyperstar,
    loose_cycle,
    loose_path,
    power_hypergraph,
    theta_hypergraph,
    triple_fused_triangles,
)
from hyperspectra.partitions import (
    canonical_power_partition,
    coarsest_equitable_refinement,
    is_equitable,
    normalize_partition,
    power_partition,
    quotient_is_irreducible,
    quotient_matrix,
    quotient_matrix_exact,
    quotient_spectrum,
)
from hyperspectra.spectral import full_spectrum, spectral_radius

import oracles

POWER_FORM_ZOO = [
    loose_path(3, 4),
    loose_cycle(4, 3),
    hyperstar(3, 5),
    caterpillar(3, 4, {2: 2, 3: 1}),
    cycle_with_pendants(3, 3, {1: 3}),
    fused_triangles(4, 2),
    theta_hypergraph(3, (1, 0, 2, 0)),
    triple_fused_triangles(3, (2, 0, 0, 0, 0, 0, 0)),
]


def part_index(parts, member):
    for i, block in enumerate(parts):
        if member in block:
            return i
    raise AssertionError(f"vertex {member} not found in any part")


# frozen part counts ------------------------------------------------------------


def test_star_power_partition_has_two_parts():
    h, parts = canonical_power_partition(nx.star_graph(3), 3)
    assert len(parts) == 2
    assert sorted(map(len, parts)) == [1, 6]
    assert is_equitable(h, parts)


def test_path4_power_partition_has_five_parts():
    h, parts = canonical_power_partition(nx.path_graph(4), 3)
    assert len(parts) == 5
    assert is_equitable(h, parts)


def test_power_partition_matches_graph_side_construction():
    for g in (nx.star_graph(4), nx.path_graph(5), nx.cycle_graph(5),
              nx.balanced_tree(2, 2)):
        h, parts = canonical_power_partition(g, 4)
        direct = power_partition(h)
        assert sorted(map(tuple, parts)) == sorted(map(tuple, direct))


# equitability ---------------------------------------------------------------------


@pytest.mark.parametrize("h", POWER_FORM_ZOO, ids=lambda h: f"m{h.m}n{h.n}k{h.k}")
def test_power_partition_is_equitable(h):
    parts = power_partition(h)
    assert is_equitable(h, parts)
    assert oracles.is_equitable_dense(h.edges, parts)


def test_equitability_agrees_with_oracle_on_ad_hoc_partitions():
    h = hyperstar(3, 3)
    good = [[0], [1, 2, 3, 4, 5, 6]]
    bad = [[0, 1], [2, 3, 4, 5, 6]]
    assert is_equitable(h, good) and oracles.is_equitable_dense(h.edges, good)
    assert not is_equitable(h, bad) and not oracles.is_equitable_dense(h.edges, bad)


def test_single_part_is_equitable_only_for_regular_shapes():
    cyc = loose_cycle(3, 4)
    assert not is_equitable(cyc, [list(cyc.vertices)])  # junctions vs middles
    square = loose_cycle(2, 4)  # ordinary 4-cycle is regular
    assert is_equitable(square, [list(square.vertices)])


def test_quotient_matrix_raises_with_explanation():
    h = hyperstar(3, 3)
    with pytest.raises(ValueError, match="not equitable"):
        quotient_matrix(h, [[0, 1], [2, 3, 4, 5, 6]])


# quotient spectra ---------------------------------------------------------------


@pytest.mark.parametrize("h", POWER_FORM_ZOO, ids=lambda h: f"m{h.m}n{h.n}k{h.k}")
def test_quotient_radius_equals_spectral_radius(h):
    parts = power_partition(h)
    qs = quotient_spectrum(h, parts)
    assert abs(qs[-1] - spectral_radius(h).value) < 1e-9


@pytest.mark.parametrize("h", POWER_FORM_ZOO, ids=lambda h: f"m{h.m}n{h.n}k{h.k}")
def test_quotient_spectrum_contained_in_full_spectrum(h):
    parts = power_partition(h)
    qs = list(quotient_spectrum(h, parts))
    pool = list(full_spectrum(h))
    for q in qs:
        hit = min(range(len(pool)), key=lambda i: abs(pool[i] - q))
        assert abs(pool[hit] - q) < 1e-8
        pool.pop(hit)


@pytest.mark.parametrize("h", POWER_FORM_ZOO, ids=lambda h: f"m{h.m}n{h.n}k{h.k}")
def test_perron_vector_constant_on_parts(h):
    vec = spectral_radius(h).vector
    for block in power_partition(h):
        vals = [vec[v] for v in block]
        assert max(vals) - min(vals) < 1e-8


@pytest.mark.parametrize("h", POWER_FORM_ZOO, ids=lambda h: f"m{h.m}n{h.n}k{h.k}")
def test_quotient_irreducible_for_connected(h):
    assert quotient_is_irreducible(h, power_partition(h))


def test_exact_quotient_times_m_minus_1_is_integer():
    h = cycle_with_pendants(4, 3, {1: 5})
    rows = quotient_matrix_exact(h, power_partition(h))
    for row in rows:
        for x in row:
            assert (x * (h.m - 1)).denominator == 1


# the five-part quotients behind the closed-form polynomials -----------------------


def five_part_cycle_partition(m, c):
    h = cycle_with_pendants(m, 3, {1: c})
    j1, j2, j3 = 0, m - 1, 2 * (m - 1)
    mids = lambda e: [v for v in h.edges[e] if v not in (j1, j2, j3)]
    pend = [v for v in h.vertices if v >= 3 * (m - 1)]
    parts = [[j1], [j2, j3], pend, mids(0) + mids(2), mids(1)]
    return h, parts


@pytest.mark.parametrize("m,c", [(3, 2), (3, 7), (4, 3), (5, 4)])
def test_five_part_cycle_quotient_matches_known_matrix(m, c):
    h, parts = five_part_cycle_partition(m, c)
    assert is_equitable(h, parts)
    k = h.k
    b = quotient_matrix(h, normalize_partition(h, parts)) * (m - 1)
    norm = normalize_partition(h, parts)
    # map conceptual parts to sorted order by a representative member
    i1 = part_index(norm, 0)
    i2 = part_index(norm, m - 1)
    i3 = part_index(norm, 3 * (m - 1))
    i4 = part_index(norm, 1)
    i5 = part_index(norm, m)
    want = {
        (i1, i2): 2, (i1, i3): (k - 3) * (m - 1), (i1, i4): 2 * (m - 2),
        (i2, i1): 1, (i2, i2): 1, (i2, i4): m - 2, (i2, i5): m - 2,
        (i3, i1): 1, (i3, i3): m - 2,
        (i4, i1): 1, (i4, i2): 1, (i4, i4): m - 3,
        (i5, i2): 2, (i5, i5): m - 3,
    }
    got = np.zeros_like(b)
    for (r, cix), val in want.items():
        got[r, cix] = val
    assert np.allclose(b, got, atol=1e-9)
    # and its top eigenvalue is the radius
    qs = quotient_spectrum(h, parts)
    assert abs(qs[-1] - spectral_radius(h).value) < 1e-10


@pytest.mark.parametrize("m,c", [(3, 1), (3, 4), (4, 2)])
def test_five_part_fused_triangles_quotient(m, c):
    h = fused_triangles(m, c)
    junctions = [v for v in sorted(h.non_pendant_vertices) if v != 0]
    pend_edges = set(h.pendant_edges())
    mids_center, mids_far = [], []
    for i, e in enumerate(h.edges):
        if i in pend_edges:
            continue
        free = [v for v in e if v in h.pendant_vertices]
        (mids_center if 0 in e else mids_far).extend(free)
    pend = [v for e in pend_edges for v in h.edges[e] if v != 0]
    parts = [[0], junctions, pend, mids_center, mids_far]
    parts = [p for p in parts if p]
    assert is_equitable(h, parts)
    qs = quotient_spectrum(h, parts)
    assert abs(qs[-1] - spectral_radius(h).value) < 1e-10


@pytest.mark.parametrize("m,c", [(3, 2), (4, 1)])
def test_five_part_triple_triangles_quotient(m, c):
    h = triple_fused_triangles(m, (c, 0, 0, 0, 0, 0, 0))
    junctions = list(range(1, 7))
    pend_edges = set(h.pendant_edges())
    mids_center, mids_far = [], []
    for i, e in enumerate(h.edges):
        if i in pend_edges:
            continue
        free = [v for v in e if v in h.pendant_vertices]
        (mids_center if 0 in e else mids_far).extend(free)
    pend = [v for e in pend_edges for v in h.edges[e] if v != 0]
    parts = [p for p in ([[0], junctions, pend, mids_center, mids_far]) if p]
    assert is_equitable(h, parts)
    qs = quotient_spectrum(h, parts)
    assert abs(qs[-1] - spectral_radius(h).value) < 1e-10


# coarsest equitable refinement --------------------------------------------------


@pytest.mark.parametrize(
    "h",
    [
        Hypergraph(3, [(0, 1, 2)]),
        loose_path(3, 2),
        hyperstar(3, 2),
        loose_cycle(3, 3),
        caterpillar(3, 2, {2: 1}),
    ],
    ids=lambda h: f"n{h.n}",
)
def test_coarsest_refinement_matches_bruteforce(h):
    got = coarsest_equitable_refinement(h)
    want = oracles.coarsest_equitable_refinement_bruteforce(
        h.edges, [list(h.vertices)]
    )
    assert [list(p) for p in got] == want


def test_coarsest_refinement_respects_base_partition():
    h = loose_path(3, 2)  # vertices 0..4, middle junction 2
    base = [[0], [1, 2, 3, 4]]
    got = coarsest_equitable_refinement(h, base)
    assert is_equitable(h, got)
    for block in got:
        assert set(block) <= {0} or set(block) <= {1, 2, 3, 4}
    want = oracles.coarsest_equitable_refinement_bruteforce(h.edges, base)
    assert [list(p) for p in got] == want


def test_coarsest_refinement_fixes_equitable_partitions():
    h = theta_hypergraph(3, (2, 0, 0, 0))
    parts = power_partition(h)
    again = coarsest_equitable_refinement(h, parts)
    assert sorted(map(tuple, again)) == sorted(map(tuple, parts))


def test_refinement_of_discrete_is_discrete():
    h = hyperstar(3, 3)
    discrete = [[v] for v in h.vertices]
    assert coarsest_equitable_refinement(h, discrete) == sorted(discrete)


# guardrails ------------------------------------------------------------------------


def test_power_partition_rejects_degenerates():
    with pytest.raises(ValueError, match="single-edge"):
        power_partition(Hypergraph(3, [(0, 1, 2)]))
    crowded = Hypergraph(3, [(0, 1, 2), (0, 3, 4), (1, 5, 6), (2, 7, 8)])
    with pytest.raises(ValueError, match="power form"):
        power_partition(crowded)


def test_partition_validation():
    h = hyperstar(3, 2)
    with pytest.raises(ValueError, match="empty"):
        normalize_partition(h, [[], list(h.vertices)])
    with pytest.raises(ValueError, match="more than one part"):
        normalize_partition(h, [[0, 1], [1, 2, 3, 4]])
    with pytest.raises(ValueError, match="misses"):
        normalize_partition(h, [[0, 1, 2]])
    with pytest.raises(ValueError, match="unknown"):
        normalize_partition(h, [[0, 99], [1, 2, 3, 4]])


def test_quotient_spectrum_part_limit():
    h = hyperstar(3, 70)
    discrete = [[v] for v in h.vertices]  # 141 parts
    with pytest.raises(ValueError, match="limited"):
        quotient_spectrum(h, discrete)
