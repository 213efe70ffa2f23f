"""Closed forms: exact radii, eigenvalue bounds, characteristic polynomials.

Two scales appear side by side and every function states which one it
lives on:

* the *adjacency scale* — eigenvalues of the matrix ``A`` from
  :func:`hyperspectra.spectral.adjacency_matrix`;
* the *integer scale* — eigenvalues of ``(m-1)*A``, on which the
  characteristic polynomials here have integer coefficients.

Dividing an integer-scale quantity by ``m - 1`` moves it to the
adjacency scale.

Bounds carry hypotheses (minimum edge counts and the like) under which
they are guaranteed; the functions themselves are total and simply
evaluate the expressions — hypothesis checking belongs to the
verification layer.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "hyperstar_radius",
    "loose_cycle_radius",
    "loose_path_radius_bound",
    "loose_cycle_spectrum",
    "hypertree_diameter_bound",
    "hypertree_even_diameter_bound",
    "unicyclic_radius_bounds",
    "unicyclic_second_bound",
    "cycle_with_pendants_char_poly",
    "cycle_with_pendants_root_bounds",
    "fused_triangles_char_poly",
    "fused_triangles_root_bounds",
    "triple_fused_triangles_char_poly",
    "triple_fused_triangles_root_bound",
    "theta_radius_bound",
    "dominant_root",
    "poly_radius",
]


def _check(m: int, k: int | None = None) -> None:
    if m < 2:
        raise ValueError(f"uniformity m must be >= 2, got {m}")
    if k is not None and k < 1:
        raise ValueError(f"edge count k must be >= 1, got {k}")


# -- exact radii (adjacency scale) -------------------------------------------


def hyperstar_radius(m: int, k: int) -> float:
    """Radius of ``k`` edges through a single center; adjacency scale.

    ``(m - 2 + sqrt((m-2)^2 + 4k(m-1))) / (2(m-1))``.  Among supertrees
    with ``k`` edges this is the unique maximum.  At ``m = 2`` it
    reduces to ``sqrt(k)``, the star graph's radius.
    """
    _check(m, k)
    return (m - 2 + math.sqrt((m - 2) ** 2 + 4 * k * (m - 1))) / (2 * (m - 1))


def loose_cycle_radius(m: int) -> float:
    """Radius of a loose cycle, any length; adjacency scale.

    ``(m - 1 + sqrt(m^2 + 6m - 7)) / (2m - 2)``; independent of the
    number of edges.
    """
    _check(m)
    return (m - 1 + math.sqrt(m * m + 6 * m - 7)) / (2 * m - 2)


def loose_path_radius_bound(m: int) -> float:
    """Strict upper bound for every loose path's radius; adjacency scale.

    Paths converge to, but never reach, the loose-cycle radius.
    """
    return loose_cycle_radius(m)


def loose_cycle_spectrum(m: int, length: int) -> list[float]:
    """Every adjacency eigenvalue of a loose cycle, ascending.

    For ``i = 1..length`` the pair
    ``(t_i ± sqrt(t_i^2 + 8(m - 2 + c_i))) / 2`` with
    ``c_i = cos(2*pi*i/length)`` and ``t_i = m - 3 + 2c_i`` lives on the
    integer scale; on top of that ``-1/(m-1)`` occurs ``length*(m-3)``
    times.  The returned values are on the adjacency scale and the list
    has full length ``length*(m-1)``.
    """
    _check(m)
    if m < 3:
        raise ValueError("the loose-cycle spectrum formula needs m >= 3")
    if length < 3:
        raise ValueError(f"cycle length must be >= 3, got {length}")
    vals = [-1.0 / (m - 1)] * (length * (m - 3))
    for i in range(1, length + 1):
        c = math.cos(2.0 * math.pi * i / length)
        t = m - 3 + 2.0 * c
        root = math.sqrt(t * t + 8.0 * (m - 2 + c))
        vals.append((t + root) / 2.0 / (m - 1))
        vals.append((t - root) / 2.0 / (m - 1))
    return sorted(vals)


# -- hypertree bounds (adjacency scale) ------------------------------------------


def hypertree_diameter_bound(m: int, k: int, d: int) -> float:
    """Upper bound for hypertrees of diameter ``d``; adjacency scale.

    ``(m + sqrt(m^2 + 4(k-d+4)(m-1))) / (2m-2)``, guaranteed strict
    when ``(k-d-1)(m-1) >= 6``.
    """
    _check(m, k)
    return (m + math.sqrt(m * m + 4 * (k - d + 4) * (m - 1))) / (2 * m - 2)


def hypertree_even_diameter_bound(m: int, k: int, d: int) -> float:
    """Sharper bound for even diameter ``d = 2p``; adjacency scale.

    ``(m - 1 + sqrt((m-1)^2 + 4(k-d)(m-1))) / (2m-2)``, guaranteed
    strict when ``k >= ((4d^2 - 1)(m-1) + 2) / 4``.
    """
    _check(m, k)
    if d % 2:
        raise ValueError(f"this bound is for even diameters, got d = {d}")
    return (m - 1 + math.sqrt((m - 1) ** 2 + 4 * (k - d) * (m - 1))) / (2 * m - 2)


# -- unicyclic bounds (adjacency scale) --------------------------------------------


def unicyclic_radius_bounds(m: int, k: int, length: int) -> tuple[float, float]:
    """Bracket for the maximal unicyclic radius at cycle length ``length``.

    The maximum over ``k``-edge shapes made of a ``length``-cycle with
    pendant edges lies strictly between
    ``(m-2 + sqrt((m-2)^2 + 4(k-l+2)(m-1))) / (2(m-1))`` and
    ``(m + sqrt(m^2 + 4(k-l+2)(m-1))) / (2(m-1))``.  Adjacency scale.
    """
    _check(m, k)
    s = 4 * (k - length + 2) * (m - 1)
    lo = (m - 2 + math.sqrt((m - 2) ** 2 + s)) / (2 * (m - 1))
    hi = (m + math.sqrt(m * m + s)) / (2 * (m - 1))
    return lo, hi


def unicyclic_second_bound(m: int, k: int, length: int) -> float:
    """Upper bound for the runner-up unicyclic radius; adjacency scale.

    ``(m + sqrt(m^2 + 4(k-l+1)(m-1))) / (2m-2)``.
    """
    _check(m, k)
    return (m + math.sqrt(m * m + 4 * (k - length + 1) * (m - 1))) / (2 * m - 2)


# -- characteristic polynomials (integer scale) ---------------------------------
#
# Each polynomial below annihilates (m-1) * lambda_1 of its shape; the
# radius itself is the largest-modulus root divided by m - 1.  The
# expressions come from 5-part equitable quotients of the shapes (see
# hyperspectra.partitions); coefficients are exact Python ints.


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    pa = [0] * (n - len(a)) + list(a)
    pb = [0] * (n - len(b)) + list(b)
    return [x - y for x, y in zip(pa, pb)]


def cycle_with_pendants_char_poly(m: int, k: int) -> list[int]:
    """Quintic for a 3-cycle with ``k - 3`` pendant edges at one junction.

    ``((x-1)(x-m+3) - 3(m-2)) * ((x-m+2)(x(x-m+3) - 2(m-2))
    - (k-3)(m-1)(x-m+3)) - 2(x-m+2)(x+1)^2`` — the characteristic
    polynomial of the shape's 5-part quotient.  Integer scale;
    coefficients highest power first.  Needs ``k >= 3``.
    """
    _check(m, k)
    if k < 3:
        raise ValueError(f"the shape needs k >= 3 edges, got {k}")
    left = _poly_mul([1, -1], [1, -(m - 3)])
    left = _poly_sub(left, [3 * (m - 2)])
    inner = _poly_mul([1, 0], [1, -(m - 3)])
    inner = _poly_sub(inner, [2 * (m - 2)])
    inner = _poly_mul([1, -(m - 2)], inner)
    inner = _poly_sub(inner, _poly_mul([(k - 3) * (m - 1)], [1, -(m - 3)]))
    poly = _poly_mul(left, inner)
    tail = _poly_mul([1, -(m - 2)], _poly_mul([1, 1], [2, 2]))
    return _poly_sub(poly, tail)


def cycle_with_pendants_root_bounds(m: int, k: int) -> tuple[float, float]:
    """Bracket for that quintic's dominant root; integer scale.

    ``(m-2 + sqrt((m-2)^2 + 4(k-1)(m-1))) / 2`` to
    ``(m + sqrt(m^2 + 4(k-1)(m-1))) / 2``.
    """
    _check(m, k)
    s = 4 * (k - 1) * (m - 1)
    lo = (m - 2 + math.sqrt((m - 2) ** 2 + s)) / 2
    hi = (m + math.sqrt(m * m + s)) / 2
    return lo, hi


def fused_triangles_char_poly(m: int, k: int) -> list[int]:
    """Quintic for two fused 3-cycles with ``k - 6`` pendant edges.

    ``(x(x-m+2)(x-m+3) - (k-6)(m-1)(x-m+3) - 4(m-2)(x-m+2))
    * (x^2 - (m-2)x - 2m+3) - 4(x+1)^2 (x-m+2)``.  Integer scale.
    Needs ``k >= 6``.
    """
    _check(m, k)
    if k < 6:
        raise ValueError(f"the shape needs k >= 6 edges, got {k}")
    f = _poly_mul([1, 0], _poly_mul([1, -(m - 2)], [1, -(m - 3)]))
    f = _poly_sub(f, _poly_mul([(k - 6) * (m - 1)], [1, -(m - 3)]))
    f = _poly_sub(f, _poly_mul([4 * (m - 2)], [1, -(m - 2)]))
    poly = _poly_mul(f, [1, -(m - 2), -(2 * m - 3)])
    tail = _poly_mul([4, 8, 4], [1, -(m - 2)])
    return _poly_sub(poly, tail)


def fused_triangles_root_bounds(m: int, k: int) -> tuple[float, float]:
    """Bracket for the fused-triangles dominant root; integer scale."""
    _check(m, k)
    s = 4 * (k - 2) * (m - 1)
    lo = (m - 2 + math.sqrt((m - 2) ** 2 + s)) / 2
    hi = (m + 2 + math.sqrt((m + 2) ** 2 + s)) / 2
    return lo, hi


def triple_fused_triangles_char_poly(m: int, k: int) -> list[int]:
    """Quintic for three fused 3-cycles with ``k - 9`` pendant edges.

    ``(x^2 - (m-2)x - 2m+3) * ((x-m+3)(x(x-m+2) - (k-3)(m-1) + 6)
    + 6(m-2)) - 6(x+1)^2 (x-m+2)``.  Integer scale.  Needs ``k >= 9``.
    """
    _check(m, k)
    if k < 9:
        raise ValueError(f"the shape needs k >= 9 edges, got {k}")
    inner = _poly_mul([1, 0], [1, -(m - 2)])
    inner = _poly_sub(inner, [(k - 3) * (m - 1) - 6])
    inner = _poly_mul([1, -(m - 3)], inner)
    inner = _poly_sub(inner, [-6 * (m - 2)])
    poly = _poly_mul([1, -(m - 2), -(2 * m - 3)], inner)
    tail = _poly_mul([6, 12, 6], [1, -(m - 2)])
    return _poly_sub(poly, tail)


def triple_fused_triangles_root_bound(m: int, k: int) -> float:
    """Upper bound for the triple-triangles dominant root; integer scale.

    ``(m + 4 + sqrt((m+4)^2 + 4(k-3)(m-1))) / 2``.
    """
    _check(m, k)
    return (m + 4 + math.sqrt((m + 4) ** 2 + 4 * (k - 3) * (m - 1))) / 2


def theta_radius_bound(m: int, k: int) -> float:
    """Upper bound for theta shapes with pendant edges; adjacency scale.

    ``(m + 1 + sqrt((m+1)^2 + 4(k-3)(m-1))) / (2m-2)`` bounds the
    radius of the theta skeleton carrying ``k - 5`` pendant edges.
    """
    _check(m, k)
    return (m + 1 + math.sqrt((m + 1) ** 2 + 4 * (k - 3) * (m - 1))) / (2 * m - 2)


# -- polynomial roots ------------------------------------------------------------


def dominant_root(coeffs: list[int] | list[float], imag_tol: float = 1e-10) -> float:
    """Largest-modulus root of a polynomial, which must be (near-)real.

    Uses the companion-matrix solver on the exact coefficients.  Raises
    ``ValueError`` if that root carries imaginary mass beyond
    ``imag_tol`` — for the polynomials in this module the dominant root
    is simple and real, so a complex answer signals a wrong polynomial.
    """
    arr = np.array([float(c) for c in coeffs])
    if arr.ndim != 1 or arr.size < 2 or arr[0] == 0:
        raise ValueError("need a nonzero leading coefficient and degree >= 1")
    roots = np.roots(arr)
    top = roots[np.argmax(np.abs(roots))]
    if abs(top.imag) > imag_tol * max(1.0, abs(top.real)):
        raise ValueError(f"dominant root {top} is not real")
    return float(top.real)


def poly_radius(coeffs: list[int] | list[float], m: int) -> float:
    """Dominant root moved from the integer scale to the adjacency scale."""
    _check(m)
    return dominant_root(coeffs) / (m - 1)
