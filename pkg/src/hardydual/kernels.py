"""Reproducing kernels, the normalized orthonormal system, and kernel bounds.

For the Gram matrix G of the metric on z^0..z^M, the reproducing kernel at
the origin solves G k = e_0, so k(0) = (G^{-1})_{00} = ||k||^2 and the
normalized value is K(0) = sqrt((G^{-1})_{00}).  All sweeps act on the data
(shifted symbol and weights), never on the basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .circle import build_blaschke, build_outer
from .errors import OrderViolation, RejectBoundary
from .spaces import (
    GramMatrix,
    SpaceData,
    build_gram_analytic,
    build_gram_laurent,
    effective_data,
    regularized,
    shifted,
)
from .tolerances import TOL_ORDER


@dataclass(frozen=True, eq=False)
class KernelVector:
    """Reproducing kernel of the truncated space at a disk point.

    ``norm`` is the metric norm; the kernel value at its own base point
    equals norm^2, so the normalized kernel K = k/||k|| has K(point) = norm.
    """

    coefficients: np.ndarray
    point: complex
    norm: float

    @property
    def value_at_zero(self) -> complex:
        return complex(self.coefficients[0])

    @property
    def normalized_at_zero(self) -> complex:
        return self.value_at_zero / self.norm

    def value_at(self, z):
        return np.polynomial.polynomial.polyval(np.asarray(z, dtype=complex),
                                                self.coefficients)

    def normalized(self) -> np.ndarray:
        return self.coefficients / self.norm


def kernel_at_point(gram: GramMatrix, point: complex) -> KernelVector:
    """Solve G k = (conj(point)^m)_m, the evaluation functional at ``point``."""
    if gram.basis_kind != "analytic":
        raise ValueError("reproducing kernels use the analytic-basis Gram")
    point = complex(point)
    if abs(point) >= 1.0:
        raise RejectBoundary(f"evaluation point {point} not inside the open disk")
    rhs = np.conj(point) ** gram.exponents
    coeffs = gram.solve(rhs)
    norm_sq = np.vdot(coeffs, rhs)
    if norm_sq.real <= 0:
        raise OrderViolation("kernel norm came out nonpositive; Gram unusable")
    return KernelVector(coeffs, point, float(np.sqrt(norm_sq.real)))


def kernel_at_origin(gram: GramMatrix) -> KernelVector:
    """Kernel for evaluation at 0; K(0) = sqrt of the (0,0) entry of G^{-1}."""
    return kernel_at_point(gram, 0.0)


def kernel_value_at_origin(space: SpaceData, degree: int,
                           hankel: Optional[int] = None) -> float:
    """Convenience: K(0) for the given data at the given truncation."""
    return kernel_at_origin(build_gram_analytic(space, degree, hankel)).norm


# ---------------------------------------------------------------------------
# the orthonormal system e_n = z^n K^{alpha_n}


@dataclass(frozen=True, eq=False)
class OrthonormalSystem:
    """Coefficient vectors of e_n = z^n K^{alpha_n} and their pairwise Gram.

    For nonnegative shifts the vectors live in the analytic basis
    z^0..z^{M+max n}; once negative shifts are present they are embedded in
    Laurent + mass coordinates and the two-sided Gram is used.
    """

    shifts: np.ndarray
    vectors: np.ndarray  # column n holds e_{shifts[n]}
    gram: np.ndarray
    basis_kind: str

    @property
    def orthonormality_defect(self) -> float:
        return float(np.abs(self.gram - np.eye(self.gram.shape[0])).max())


def orthonormal_system(space: SpaceData, shifts: Sequence[int], degree: int,
                       hankel: Optional[int] = None) -> OrthonormalSystem:
    shifts = np.asarray(sorted(int(n) for n in shifts), dtype=int)
    if shifts.size == 0:
        raise ValueError("need at least one shift")
    n_min, n_max = int(shifts[0]), int(shifts[-1])

    kernels = {}
    for n in shifts:
        gram_n = build_gram_analytic(shifted(space, int(n)), degree, hankel)
        kernels[int(n)] = kernel_at_origin(gram_n).normalized()

    if n_min >= 0:
        big_degree = degree + n_max
        gram_big = build_gram_analytic(space, big_degree, hankel)
        columns = np.zeros((big_degree + 1, shifts.size), dtype=complex)
        for i, n in enumerate(shifts):
            columns[n: n + degree + 1, i] = kernels[int(n)]
        system_gram = columns.conj().T @ gram_big.entries @ columns
        return OrthonormalSystem(shifts, columns, system_gram, "analytic")

    half_band = max(-n_min, degree + max(n_max, 0))
    gram_l = build_gram_laurent(space, half_band, hankel)
    _, masses = effective_data(space)
    rows = 2 * half_band + 1 + masses.count
    columns = np.zeros((rows, shifts.size), dtype=complex)
    for i, n in enumerate(shifts):
        coeffs = kernels[int(n)]
        lo = half_band + int(n)
        columns[lo: lo + degree + 1, i] = coeffs
        if masses.count:
            values = np.polynomial.polynomial.polyval(masses.points, coeffs)
            columns[2 * half_band + 1:, i] = masses.points ** int(n) * values
    system_gram = columns.conj().T @ gram_l.entries @ columns
    return OrthonormalSystem(shifts, columns, system_gram, "laurent")


# ---------------------------------------------------------------------------
# asymptotics of K^{alpha_n}(0)


@dataclass(frozen=True, eq=False)
class AsymptoticTrace:
    """Values K^{alpha_n}(0) for n = 0..n_max with truncation metadata."""

    shifts: np.ndarray
    values: np.ndarray
    degree: int
    hankel: int
    grid_size: int

    @property
    def deviations(self) -> np.ndarray:
        return np.abs(self.values - 1.0)

    def converged_at(self, tol: float = 1e-3, run: int = 3) -> Optional[int]:
        """First shift opening ``run`` consecutive deviations below ``tol``."""
        dev = self.deviations
        for i in range(dev.size - run + 1):
            if np.all(dev[i: i + run] < tol):
                return int(self.shifts[i])
        return None

    def tail_monotone(self, start: int = 4, slack: float = 1e-13) -> bool:
        """|K - 1| nonincreasing from ``start`` on, with a roundoff floor."""
        dev = self.deviations[self.shifts >= start]
        return bool(np.all(dev[1:] <= dev[:-1] * (1 + 1e-9) + slack))


def asymptotic_sweep(space: SpaceData, n_max: int, degree: int,
                     hankel: Optional[int] = None) -> AsymptoticTrace:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    shifts = np.arange(n_max + 1)
    values = np.empty(shifts.size)
    used_hankel = 0
    for i, n in enumerate(shifts):
        gram = build_gram_analytic(shifted(space, int(n)), degree, hankel)
        used_hankel = gram.hankel.truncation
        values[i] = kernel_at_origin(gram).norm
    return AsymptoticTrace(shifts, values, degree, used_hankel,
                           space.symbol.grid.size)


# ---------------------------------------------------------------------------
# two-sided regularization bounds


@dataclass(frozen=True, eq=False)
class SandwichReport:
    """Kernel values and margins for the mass-cutoff / symbol-scaling bounds.

    The scalar chain is  K(cutoff) >= K(alpha) >= K(scaled), checked together
    with the positive-semidefinite orderings of the underlying Grams and the
    duality-transported equalities tying each regularized kernel to the dual
    kernel at the complementary shift.
    """

    shift: int
    cutoff: int
    rho: float
    k_alpha: float
    k_cutoff: float
    k_scaled: float
    k_both: float
    margin_cutoff: float          # k_cutoff - k_alpha
    margin_scaled: float          # k_alpha - k_scaled
    psd_margin_cutoff: float      # min eig of Gram(alpha) - Gram(cutoff)
    psd_margin_scaled: float      # min eig of Gram(scaled) - Gram(alpha)
    chain_upper_slack: float      # (T_e^rho(0)/T_e(0)) k_both - k_cutoff
    chain_lower_slack: float      # k_scaled - (B(0)/B^N(0)) k_both
    identity_residuals: dict


def _require_order(name: str, margin: float, tol: float):
    if margin < -tol:
        raise OrderViolation(
            f"{name} violated by {-margin:.3e} (tolerance {tol:.0e}); "
            "truncations are inconsistent"
        )


def sandwich_check(space: SpaceData, cutoff: int, rho: float, n: int,
                   degree: int, hankel: Optional[int] = None,
                   tol_order: float = TOL_ORDER) -> SandwichReport:
    if not 0.0 < rho <= 1.0:
        raise ValueError("rho must lie in (0, 1]; 1 gives the degenerate equalities")
    base = shifted(space, n)
    sp_cut = regularized(base, mass_cutoff=cutoff)
    sp_rho = regularized(base, rho=rho)
    sp_both = regularized(base, rho=rho, mass_cutoff=cutoff)

    g_alpha = build_gram_analytic(base, degree, hankel)
    g_cut = build_gram_analytic(sp_cut, degree, hankel)
    g_rho = build_gram_analytic(sp_rho, degree, hankel)
    g_both = build_gram_analytic(sp_both, degree, hankel)

    k_alpha = kernel_at_origin(g_alpha).norm
    k_cut = kernel_at_origin(g_cut).norm
    k_rho = kernel_at_origin(g_rho).norm
    k_both = kernel_at_origin(g_both).norm

    margin_cutoff = k_cut - k_alpha
    margin_scaled = k_alpha - k_rho
    _require_order("K(cutoff) >= K(alpha)", margin_cutoff, tol_order)
    _require_order("K(alpha) >= K(scaled)", margin_scaled, tol_order)

    psd_cut = float(np.linalg.eigvalsh(g_alpha.entries - g_cut.entries)[0])
    psd_rho = float(np.linalg.eigvalsh(g_rho.entries - g_alpha.entries)[0])
    _require_order("Gram(alpha) - Gram(cutoff) PSD", psd_cut, tol_order)
    _require_order("Gram(scaled) - Gram(alpha) PSD", psd_rho, tol_order)

    # value at 0 of the outer factor for the plain and the scaled symbol
    sym_eff, masses_eff = effective_data(base)
    sym_rho_eff, _ = effective_data(sp_rho)
    te0 = build_outer(sym_eff).value_at_zero
    te0_rho = build_outer(sym_rho_eff).value_at_zero
    _, masses_cut = effective_data(sp_cut)
    b0 = float(np.prod(np.abs(masses_eff.points))) if masses_eff.count else 1.0
    b0_cut = float(np.prod(np.abs(masses_cut.points))) if masses_cut.count else 1.0

    chain_upper = (te0_rho / te0) * k_both - k_cut
    chain_lower = k_rho - (b0 / b0_cut) * k_both
    _require_order("K(cutoff) <= (T_e^rho(0)/T_e(0)) K(both)", chain_upper, tol_order)
    _require_order("K(scaled) >= (B(0)/B^N(0)) K(both)", chain_lower, tol_order)

    from .duality import build_dual, duality_identity  # cycle: duality uses kernels

    residuals = {}
    for label, sp in (("cutoff", sp_cut), ("scaled", sp_rho), ("both", sp_both)):
        up = shifted(sp, 1)
        sym_up, masses_up = effective_data(up)
        outer_up = build_outer(sym_up)
        blaschke_up = build_blaschke(masses_up, outer_up)
        dual_up = build_dual(up, outer_up, blaschke_up)
        residuals[label] = duality_identity(up, dual_up, degree, hankel).residual

    return SandwichReport(
        shift=n, cutoff=cutoff, rho=rho,
        k_alpha=k_alpha, k_cutoff=k_cut, k_scaled=k_rho, k_both=k_both,
        margin_cutoff=margin_cutoff, margin_scaled=margin_scaled,
        psd_margin_cutoff=psd_cut, psd_margin_scaled=psd_rho,
        chain_upper_slack=chain_upper, chain_lower_slack=chain_lower,
        identity_residuals=residuals,
    )
