"""Adjacency spectra of uniform hypergraphs.

The adjacency matrix used throughout weighs each edge pair-wise: entry
``(i, j)`` sums ``1/(|e|-1)`` over the edges containing both vertices.
For a linear ``m``-uniform hypergraph that is ``1/(m-1)`` times the 0/1
"shares an edge" matrix, so ``(m-1)*A`` is an integer matrix — the
anchor for exact characteristic-polynomial work, and the scale on which
the closed forms in :mod:`hyperspectra.formulas` live.

Three independent routes to the spectrum are kept deliberately separate
so they can cross-check each other:

* :func:`spectral_radius` — deterministic shifted power iteration with
  an explicit residual guarantee (also yields the positive eigenvector);
* :func:`full_spectrum` — dense symmetric eigensolver;
* :func:`char_poly` — exact integer characteristic polynomial of
  ``(m-1)*A`` by the Faddeev–LeVerrier recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from hyperspectra.core import Hypergraph

__all__ = [
    "SpectralResult",
    "adjacency_matrix",
    "integer_adjacency",
    "spectral_radius",
    "full_spectrum",
    "rayleigh_quotient",
    "char_poly",
]

FULL_SPECTRUM_LIMIT = 512
CHAR_POLY_LIMIT = 64


def adjacency_matrix(h: Hypergraph, scaled: bool = False) -> np.ndarray:
    """Dense adjacency matrix, indexed by position in ``h.vertices``.

    With ``scaled=True`` the matrix is multiplied by ``m - 1`` (integer
    entries for uniform hypergraphs); some of the literature prefers
    that normalisation, and the closed forms are stated on it.
    """
    n = h.n
    a = np.zeros((n, n))
    idx = h.vertex_index
    for e in h.edges:
        if len(e) < 2:
            raise ValueError("adjacency is undefined for singleton edges")
        w = 1.0 / (len(e) - 1)
        for p in range(len(e)):
            for q in range(p + 1, len(e)):
                i, j = idx[e[p]], idx[e[q]]
                a[i, j] += w
                a[j, i] += w
    if scaled:
        a *= h.m - 1
    return a


def integer_adjacency(h: Hypergraph) -> list[list[int]]:
    """``(m-1) * A`` as exact integers (uniform hypergraphs only).

    Entry ``(i, j)`` counts the edges containing both vertices; the
    result is a plain nested list of Python ints so downstream exact
    arithmetic never overflows.
    """
    if not h.is_uniform:
        raise ValueError("integer adjacency needs an m-uniform hypergraph")
    n = h.n
    idx = h.vertex_index
    b = [[0] * n for _ in range(n)]
    for e in h.edges:
        for p in range(len(e)):
            for q in range(p + 1, len(e)):
                i, j = idx[e[p]], idx[e[q]]
                b[i][j] += 1
                b[j][i] += 1
    return b


@dataclass(frozen=True)
class SpectralResult:
    """Outcome of the power iteration.

    ``vector`` maps vertex ids to the entries of the (unit, non-negative)
    dominant eigenvector; ``residual`` is the final ``max |A v - value v|``.
    """

    value: float
    vector: dict[int, float]
    iterations: int
    residual: float

    def scaled_value(self, m: int) -> float:
        """The radius on the ``(m-1)*A`` scale."""
        return (m - 1) * self.value


def spectral_radius(
    h: Hypergraph, tol: float = 1e-12, max_iter: int = 200_000
) -> SpectralResult:
    """Largest adjacency eigenvalue by shifted power iteration.

    Deterministic: starts from the normalised all-ones vector, iterates
    ``A + cI`` with ``c`` the maximum row sum (keeping the iteration
    matrix non-negative with a simple dominant eigenvalue on the Perron
    component), and stops once the unscaled residual
    ``max |A v - lambda v|`` drops to ``tol * max(1, |lambda|)``.
    Raises ``RuntimeError`` if the iteration cap is hit first.
    """
    if h.k == 0:
        raise ValueError("spectral radius of an edgeless hypergraph")
    a = adjacency_matrix(h)
    n = a.shape[0]
    shift = float(a.sum(axis=1).max())
    v = np.full(n, 1.0 / np.sqrt(n))
    lam = 0.0
    res = np.inf
    for it in range(1, max_iter + 1):
        w = a @ v
        lam = float(v @ w)
        res = float(np.max(np.abs(w - lam * v)))
        if res <= tol * max(1.0, abs(lam)):
            vec = {vert: float(v[i]) for i, vert in enumerate(h.vertices)}
            return SpectralResult(value=lam, vector=vec, iterations=it, residual=res)
        u = w + shift * v
        v = u / np.linalg.norm(u)
    raise RuntimeError(
        f"power iteration did not reach residual {tol:g} in {max_iter} steps "
        f"(last residual {res:.3e})"
    )


def full_spectrum(h: Hypergraph) -> np.ndarray:
    """All adjacency eigenvalues, ascending (dense solve, n <= 512)."""
    if h.n > FULL_SPECTRUM_LIMIT:
        raise ValueError(
            f"full spectrum limited to n <= {FULL_SPECTRUM_LIMIT}, got n = {h.n}"
        )
    if h.k == 0:
        raise ValueError("spectrum of an edgeless hypergraph")
    return np.linalg.eigvalsh(adjacency_matrix(h))


def rayleigh_quotient(h: Hypergraph, x: Mapping[int, float] | Sequence[float]) -> float:
    """``x^T A x / x^T x`` for a vector given per vertex or positionally."""
    a = adjacency_matrix(h)
    if isinstance(x, Mapping):
        vec = np.array([float(x[v]) for v in h.vertices])
    else:
        vec = np.asarray(list(x), dtype=float)
        if vec.shape != (h.n,):
            raise ValueError(f"vector length {vec.size} != n = {h.n}")
    denom = float(vec @ vec)
    if denom == 0.0:
        raise ValueError("Rayleigh quotient of the zero vector")
    return float(vec @ a @ vec) / denom


def char_poly(h: Hypergraph) -> list[int]:
    """Exact coefficients of ``det(xI - (m-1)A)``, highest power first.

    Faddeev–LeVerrier over Python integers: division-free apart from the
    exact ``trace/k`` steps.  Limited to ``n <= 64`` — entries stay small
    but the matrix products are done in object arithmetic.
    """
    if h.n > CHAR_POLY_LIMIT:
        raise ValueError(
            f"exact characteristic polynomial limited to n <= {CHAR_POLY_LIMIT}, "
            f"got n = {h.n}"
        )
    b = np.array(integer_adjacency(h), dtype=object)
    n = b.shape[0]
    coeffs = [1]
    mk = np.array(b, dtype=object)
    for kk in range(1, n + 1):
        ck = -sum(mk[i, i] for i in range(n)) // kk
        # the trace is always divisible by kk; guard against regressions
        assert ck * kk == -sum(mk[i, i] for i in range(n))
        coeffs.append(ck)
        if kk < n:
            mk = b @ (mk + ck * np.eye(n, dtype=object))
    return [int(c) for c in coeffs]
