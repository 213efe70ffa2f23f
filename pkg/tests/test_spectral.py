"""Tests for the spectral engine: frozen values, invariants, cross-routes."""

import math

import numpy as np
import pytest

from hyperspectra.core import Hypergraph
from hyperspectra.families import (
    attach_pendant_edges,
    caterpillar,
    cycle_with_pendants,
    fused_triangles,
    hyperstar,
    interlocking_cycles_example,
    loose_cycle,
    loose_path,
    theta_hypergraph,
    triple_fused_triangles,
)
from hyperspectra.spectral import (
    adjacency_matrix,
    char_poly,
    full_spectrum,
    integer_adjacency,
    rayleigh_quotient,
    spectral_radius,
)

import oracles

ZOO = [
    Hypergraph(3, [(0, 1, 2)]),
    loose_path(3, 4),
    loose_path(4, 3),
    loose_cycle(3, 3),
    loose_cycle(4, 5),
    hyperstar(3, 5),
    hyperstar(5, 3),
    caterpillar(3, 4, {2: 2, 3: 1}),
    cycle_with_pendants(3, 3, {1: 4}),
    fused_triangles(3, 2),
    theta_hypergraph(4),
    triple_fused_triangles(3, (2, 0, 0, 0, 0, 0, 0)),
    interlocking_cycles_example(4),
]


# frozen closed values ---------------------------------------------------------


def test_single_edge_char_poly_is_frozen_value():
    h = Hypergraph(3, [(0, 1, 2)])
    assert char_poly(h) == [1, 0, -3, -2]


def test_single_edge_spectra():
    h3 = Hypergraph(3, [(0, 1, 2)])
    assert np.allclose(full_spectrum(h3), [-0.5, -0.5, 1.0], atol=1e-12)
    h4 = Hypergraph(4, [(0, 1, 2, 3)])
    assert abs(spectral_radius(h4).value - 1.0) < 1e-12


def test_loose_cycle3_radius_and_scaled_root():
    res = spectral_radius(loose_cycle(3, 3))
    assert abs(res.value - (2 + math.sqrt(20)) / 4) < 1e-12
    assert abs(res.scaled_value(3) - (1 + math.sqrt(5))) < 1e-11


def test_loose_cycle3_full_spectrum_frozen():
    got = sorted(full_spectrum(loose_cycle(3, 3)))
    s5 = math.sqrt(5)
    want = sorted(
        [(-1 - s5) / 4, (-1 - s5) / 4, (2 - math.sqrt(20)) / 4,
         (-1 + s5) / 4, (-1 + s5) / 4, (2 + math.sqrt(20)) / 4]
    )
    assert np.allclose(got, want, atol=1e-12)


def test_hyperstar_radii_frozen():
    assert abs(spectral_radius(hyperstar(3, 5)).value - (1 + math.sqrt(41)) / 4) < 1e-12
    assert abs(spectral_radius(hyperstar(3, 3)).value - 1.5) < 1e-12


def test_rayleigh_all_ones_on_two_edge_star():
    h = hyperstar(3, 2)
    ones = {v: 1.0 for v in h.vertices}
    rq = rayleigh_quotient(h, ones)
    # six adjacent pairs, five vertices: 2*6*(1/2)/5
    assert abs(rq - 1.2) < 1e-14
    assert oracles.adjacent_pair_count(h.edges) == 6
    assert rq <= spectral_radius(h).value + 1e-10


# cross-route agreement ----------------------------------------------------------


@pytest.mark.parametrize("h", ZOO, ids=lambda h: f"m{h.m}n{h.n}k{h.k}")
def test_power_iteration_matches_dense_solver(h):
    res = spectral_radius(h)
    assert abs(res.value - oracles.spectral_radius_dense(h.edges)) < 1e-10
    assert res.residual <= 1e-12 * max(1.0, res.value)


@pytest.mark.parametrize("h", ZOO, ids=lambda h: f"m{h.m}n{h.n}k{h.k}")
def test_full_spectrum_matches_oracle(h):
    assert np.allclose(full_spectrum(h), oracles.spectrum_dense(h.edges), atol=1e-10)


@pytest.mark.parametrize("h", [z for z in ZOO if z.n <= 20], ids=lambda h: f"m{h.m}n{h.n}")
def test_char_poly_matches_sympy(h):
    assert char_poly(h) == oracles.charpoly_sympy(integer_adjacency(h))


@pytest.mark.parametrize("h", [z for z in ZOO if z.n <= 30], ids=lambda h: f"m{h.m}n{h.n}")
def test_char_poly_roots_match_scaled_spectrum(h):
    roots = np.roots([float(c) for c in char_poly(h)])
    # repeated eigenvalues make companion-matrix roots ill-conditioned
    # (error ~ eps^(1/multiplicity)), so the multiset check is coarse;
    # the exact-coefficient route is covered against sympy above
    got = np.sort(roots.real)
    want = np.sort(full_spectrum(h)) * (h.m - 1)
    assert np.max(np.abs(roots.imag)) < 0.1
    assert np.allclose(got, want, atol=0.1)
    # ... but the dominant root is simple, hence sharp
    dominant = roots[np.argmax(np.abs(roots))]
    assert abs(dominant.imag) < 1e-9
    assert abs(dominant.real - (h.m - 1) * spectral_radius(h).value) < 1e-9


# invariants ---------------------------------------------------------------------


@pytest.mark.parametrize("h", [ZOO[1], ZOO[5], ZOO[9]], ids=["path", "star", "bi"])
def test_rayleigh_never_exceeds_radius(h):
    lam = spectral_radius(h).value
    rng = np.random.default_rng(42)
    for _ in range(100):
        x = rng.standard_normal(h.n)
        assert rayleigh_quotient(h, x) <= lam + 1e-10


@pytest.mark.parametrize("h", ZOO, ids=lambda h: f"m{h.m}n{h.n}k{h.k}")
def test_spectrum_traceless(h):
    assert abs(full_spectrum(h).sum()) < 1e-8


def test_adding_edges_never_lowers_the_radius():
    h = loose_path(3, 3)
    lam = spectral_radius(h).value
    grown = attach_pendant_edges(h, 2, 1)
    assert spectral_radius(grown).value > lam - 1e-12
    bigger = hyperstar(3, 4)
    assert spectral_radius(hyperstar(3, 5)).value > spectral_radius(bigger).value


def test_perron_vector_positive_unit_and_eigen():
    h = caterpillar(3, 4, {3: 2})
    res = spectral_radius(h)
    vec = np.array([res.vector[v] for v in h.vertices])
    assert np.all(vec > 0)
    assert abs(np.linalg.norm(vec) - 1.0) < 1e-9
    a = adjacency_matrix(h)
    assert np.max(np.abs(a @ vec - res.value * vec)) < 1e-11


def test_disconnected_radius_is_component_max():
    h = Hypergraph(3, [(0, 1, 2), (3, 4, 5), (5, 6, 7)])
    # components: single edge (radius 1) and two-edge path
    want = oracles.spectral_radius_dense([(3, 4, 5), (5, 6, 7)])
    assert abs(spectral_radius(h).value - want) < 1e-10


# guardrails -----------------------------------------------------------------------


def test_adjacency_scaled_is_integer_for_uniform():
    h = theta_hypergraph(4)
    scaled = adjacency_matrix(h, scaled=True)
    assert np.allclose(scaled, np.round(scaled))
    assert np.array_equal(scaled, np.array(integer_adjacency(h), dtype=float))


def test_integer_adjacency_rejects_nonuniform():
    with pytest.raises(ValueError):
        integer_adjacency(Hypergraph(3, [(0, 1, 2), (2, 3)]))


def test_size_limits():
    big = hyperstar(3, 300)  # n = 601
    with pytest.raises(ValueError):
        full_spectrum(big)
    with pytest.raises(ValueError):
        char_poly(hyperstar(3, 40))  # n = 81 > 64


def test_edgeless_and_degenerate_inputs():
    h = Hypergraph(3, [])
    with pytest.raises(ValueError):
        spectral_radius(h)
    with pytest.raises(ValueError):
        full_spectrum(h)
    with pytest.raises(ValueError):
        adjacency_matrix(Hypergraph(2, [(0,)]))
    with pytest.raises(ValueError):
        rayleigh_quotient(hyperstar(3, 2), [0.0] * 5)
    with pytest.raises(ValueError):
        rayleigh_quotient(hyperstar(3, 2), [1.0] * 4)


def test_rayleigh_accepts_positional_vectors():
    h = hyperstar(3, 2)
    assert abs(rayleigh_quotient(h, [1, 1, 1, 1, 1]) - 1.2) < 1e-14
