"""Closed forms and bounds against the eigensolver."""

import math

import numpy as np
import pytest

from hyperspectra.families import (
    caterpillar,
    cycle_with_pendants,
    fused_triangles,
    hyperstar,
    loose_cycle,
    loose_path,
    theta_hypergraph,
    triple_fused_triangles,
)
from hyperspectra import formulas
from hyperspectra.spectral import full_spectrum, spectral_radius


def radius(h):
    return spectral_radius(h).value


# exact radii -------------------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("k", [1, 2, 3, 5, 8, 12])
def test_hyperstar_radius_matches_eigensolver(m, k):
    assert abs(formulas.hyperstar_radius(m, k) - radius(hyperstar(m, k))) < 1e-11


def test_hyperstar_radius_frozen_values():
    assert abs(formulas.hyperstar_radius(2, 4) - 2.0) < 1e-15
    assert abs(formulas.hyperstar_radius(3, 5) - (1 + math.sqrt(41)) / 4) < 1e-15
    assert abs(formulas.hyperstar_radius(3, 3) - 1.5) < 1e-15


def test_hyperstar_is_strictly_extremal_among_some_supertrees():
    # same edge count, different supertree shapes: strictly below the star
    k = 5
    star = formulas.hyperstar_radius(3, k)
    assert radius(caterpillar(3, 3, {2: k - 3})) < star - 1e-6
    assert radius(loose_path(3, k)) < star - 1e-6
    # attaching everything at one vertex recovers the star exactly
    assert abs(radius(caterpillar(3, 2, {2: k - 2})) - star) < 1e-11


@pytest.mark.parametrize("m", [3, 4, 5])
def test_loose_cycle_radius_is_length_independent(m):
    want = formulas.loose_cycle_radius(m)
    for length in (3, 5, 8):
        assert abs(radius(loose_cycle(m, length)) - want) < 1e-11


@pytest.mark.parametrize("m", [3, 4])
def test_loose_paths_approach_cycle_radius_from_below(m):
    bound = formulas.loose_path_radius_bound(m)
    vals = [radius(loose_path(m, length)) for length in (1, 2, 4, 8, 16)]
    assert all(v < bound - 1e-12 for v in vals)
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert bound - vals[-1] < 0.05


@pytest.mark.parametrize("m", [3, 4])
@pytest.mark.parametrize("length", [3, 4, 5, 6])
def test_loose_cycle_spectrum_matches_dense_solver(m, length):
    want = full_spectrum(loose_cycle(m, length))
    got = formulas.loose_cycle_spectrum(m, length)
    assert len(got) == length * (m - 1)
    assert np.allclose(got, want, atol=1e-8)


def test_loose_cycle_spectrum_guards():
    with pytest.raises(ValueError):
        formulas.loose_cycle_spectrum(2, 4)
    with pytest.raises(ValueError):
        formulas.loose_cycle_spectrum(3, 2)


# characteristic polynomials ------------------------------------------------


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("k", [3, 4, 6, 9, 12])
def test_cycle_with_pendants_poly_matches_eigensolver(m, k):
    lam = radius(cycle_with_pendants(m, 3, {1: k - 3}))
    poly = formulas.cycle_with_pendants_char_poly(m, k)
    assert abs(formulas.poly_radius(poly, m) - lam) < 1e-9
    lo, hi = formulas.cycle_with_pendants_root_bounds(m, k)
    assert lo < formulas.dominant_root(poly) < hi


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("k", [6, 7, 9, 12])
def test_fused_triangles_poly_matches_eigensolver(m, k):
    lam = radius(fused_triangles(m, k - 6))
    poly = formulas.fused_triangles_char_poly(m, k)
    assert abs(formulas.poly_radius(poly, m) - lam) < 1e-9
    lo, hi = formulas.fused_triangles_root_bounds(m, k)
    assert lo < formulas.dominant_root(poly) < hi


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("k", [9, 10, 12, 14])
def test_triple_fused_triangles_poly_matches_eigensolver(m, k):
    lam = radius(triple_fused_triangles(m, (k - 9, 0, 0, 0, 0, 0, 0)))
    poly = formulas.triple_fused_triangles_char_poly(m, k)
    assert abs(formulas.poly_radius(poly, m) - lam) < 1e-9
    assert formulas.dominant_root(poly) < formulas.triple_fused_triangles_root_bound(m, k)


def test_char_poly_guards():
    with pytest.raises(ValueError):
        formulas.cycle_with_pendants_char_poly(3, 2)
    with pytest.raises(ValueError):
        formulas.fused_triangles_char_poly(3, 5)
    with pytest.raises(ValueError):
        formulas.triple_fused_triangles_char_poly(3, 8)


# bounds ------------------------------------------------------------------------


@pytest.mark.parametrize("m,k", [(3, 7), (3, 10), (4, 8), (5, 9)])
def test_theta_radius_bound(m, k):
    lam = radius(theta_hypergraph(m, (k - 5, 0, 0, 0)))
    assert lam < formulas.theta_radius_bound(m, k) - 1e-9


@pytest.mark.parametrize(
    "m,k,d", [(3, 10, 4), (3, 12, 5), (4, 9, 3), (5, 8, 4)]
)
def test_hypertree_diameter_bound_over_caterpillars(m, k, d):
    assert (k - d - 1) * (m - 1) >= 6  # guaranteed regime
    bound = formulas.hypertree_diameter_bound(m, k, d)
    for p in range(2, d + 1):
        lam = radius(caterpillar(m, d, {p: k - d}))
        assert lam < bound - 1e-9


def test_hypertree_even_diameter_bound():
    m, d = 3, 4
    k = 32  # >= ((4d^2-1)(m-1)+2)/4 = 32
    bound = formulas.hypertree_even_diameter_bound(m, k, d)
    for pend in ({3: k - d}, {2: k - d}, {2: 10, 3: k - d - 10}):
        assert radius(caterpillar(m, d, pend)) < bound - 1e-9
    with pytest.raises(ValueError):
        formulas.hypertree_even_diameter_bound(3, 20, 5)


@pytest.mark.parametrize("m,k,length", [(3, 8, 3), (3, 10, 4), (4, 9, 3)])
def test_unicyclic_radius_bounds_bracket_the_max_shape(m, k, length):
    lam = radius(cycle_with_pendants(m, length, {1: k - length}))
    lo, hi = formulas.unicyclic_radius_bounds(m, k, length)
    assert lo < lam < hi


def test_unicyclic_second_bound_holds_for_the_claimed_runner_up():
    m, length = 3, 3
    for k in (19, 21):  # (k - l - 6)(m - 1) >= 20 regime
        lam = radius(cycle_with_pendants(m, length, {1: k - length - 1, 2: 1}))
        assert lam < formulas.unicyclic_second_bound(m, k, length) - 1e-9


# root helpers ----------------------------------------------------------------------


def test_dominant_root_rejects_complex_dominance():
    with pytest.raises(ValueError):
        formulas.dominant_root([1, 0, 1])  # x^2 + 1
    with pytest.raises(ValueError):
        formulas.dominant_root([0, 1, 1])
    with pytest.raises(ValueError):
        formulas.dominant_root([5])


def test_poly_radius_frozen_degenerate_case():
    # with no pendant edges the shape is the bare 3-cycle
    poly = formulas.cycle_with_pendants_char_poly(3, 3)
    assert abs(formulas.poly_radius(poly, 3) - (2 + math.sqrt(20)) / 4) < 1e-12
