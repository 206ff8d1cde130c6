"""Slow, independent reference routes used only by the tests.

Nothing here shares code with the production paths: inner products are
plain trapezoid sums, Fourier coefficients come from Vandermonde-style
quadrature instead of the FFT, derivatives from Richardson-extrapolated
central differences, and PSD checks from a dense eigensolve.  Agreement
with the production numbers is evidence, not tautology.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridMismatch, NotHermitian


@dataclass(frozen=True)
class QuadratureContext:
    """Refined-grid settings for oracle cross-checks.

    The oracle always integrates on a grid at least twice as fine as the
    production one, so agreement is not an aliasing artifact.
    """

    base_size: int
    refinement: int = 2

    def __post_init__(self):
        if self.refinement < 2:
            raise ValueError("oracle refinement must be >= 2x the production grid")

    @property
    def size(self) -> int:
        return self.base_size * self.refinement

    @property
    def nodes(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.arange(self.size) / self.size)


def quad_inner(f, g, weight=None):
    """Trapezoid approximation of the circle inner product int w f conj(g) dm.

    On the uniform periodic grid the trapezoid rule is the plain mean.
    ``weight`` may be None (Lebesgue), a per-node array, or a (2, 2, N)
    matrix field acting on stacked pairs f, g of shape (2, N).
    """
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    if f.shape != g.shape:
        raise GridMismatch(f"shape mismatch {f.shape} vs {g.shape}")
    if weight is None:
        return complex(np.mean(f * np.conj(g)))
    weight = np.asarray(weight, dtype=complex)
    if weight.ndim == 1:
        if weight.shape != f.shape:
            raise GridMismatch("weight length does not match the samples")
        return complex(np.mean(weight * f * np.conj(g)))
    if weight.shape != (2, 2, f.shape[-1]) or f.ndim != 2:
        raise GridMismatch("matrix weight needs (2,2,N) weight and (2,N) samples")
    wf = np.einsum("abn,bn->an", weight, f)
    return complex(np.mean(np.sum(wf * np.conj(g), axis=0)))


def fd_derivative(fn, point, step=1e-6):
    """Central difference with one Richardson extrapolation step."""
    point = complex(point)
    d1 = (fn(point + step) - fn(point - step)) / (2 * step)
    d2 = (fn(point + step / 2) - fn(point - step / 2)) / step
    return (4 * d2 - d1) / 3


def dense_psd_check(matrix, tol_herm=1e-12):
    """Smallest eigenvalue of a Hermitian matrix (full dense eigensolve)."""
    matrix = np.asarray(matrix, dtype=complex)
    scale = max(np.abs(matrix).max(), 1.0)
    if np.abs(matrix - matrix.conj().T).max() > tol_herm * scale:
        raise NotHermitian("matrix is not Hermitian within tolerance")
    return float(np.linalg.eigvalsh(matrix)[0])


def negative_coefficients_by_quadrature(symbol_values, nodes, exponent, j_count):
    """Coefficients of t^{-j}, j = 1..j_count, of R(t) t^exponent by trapezoid sums."""
    symbol_values = np.asarray(symbol_values, dtype=complex)
    nodes = np.asarray(nodes, dtype=complex)
    if symbol_values.shape != nodes.shape:
        raise GridMismatch("samples and nodes differ in length")
    js = np.arange(1, j_count + 1)
    return np.mean(symbol_values[None, :] * nodes[None, :] ** (exponent + js[:, None]),
                   axis=1)


def gram_entry_quadrature(symbol_values, nodes, mass_points, mass_weights,
                          row, col, j_count):
    """Metric Gram entry (row, col) on monomials, via quadrature only.

    delta - sum_j conj(c_j(row)) c_j(col) + sum_k conj(zeta_k)^row
    zeta_k^col nu_k, where c_j(m) is the t^{-j} coefficient of R t^m computed
    by trapezoid sums (no FFT).
    """
    q_row = negative_coefficients_by_quadrature(symbol_values, nodes, row, j_count)
    q_col = q_row if col == row else \
        negative_coefficients_by_quadrature(symbol_values, nodes, col, j_count)
    entry = (1.0 if row == col else 0.0) - complex(np.sum(np.conj(q_row) * q_col))
    mass_points = np.asarray(mass_points, dtype=complex)
    mass_weights = np.asarray(mass_weights, dtype=float)
    if mass_points.size:
        entry += complex(np.sum(mass_weights * np.conj(mass_points) ** row
                                * mass_points ** col))
    return entry


def constrained_minimum(matrix):
    """min x^H G x over x with x_0 = 1, by eliminating the free block.

    Equals the reciprocal of the (0,0) entry of G^{-1} (Schur complement),
    but computed from the trailing submatrix, so it cross-checks the kernel
    route without sharing its solve.
    """
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape[0] == 1:
        return float(matrix[0, 0].real)
    g = matrix[1:, 0]
    block = matrix[1:, 1:]
    y = np.linalg.solve(block, g)
    return float((matrix[0, 0] - np.vdot(y, g).conjugate()).real)
