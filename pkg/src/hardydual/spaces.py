"""Quadratic-form Gram matrices of the perturbed Hardy metric.

The metric on analytic polynomials is

    ||f||^2  -  ||P_-(R f)||^2  +  sum_k |f(zeta_k)|^2 nu_k,

realized on the monomial basis z^0..z^M as I - (Hankel Gram) + (mass Gram).
The same Hankel expression extends to Laurent monomials z^-M..z^M, giving
the circle block of the two-sided space; point-mass coordinates are
appended as a direct summand diag(nu).  Shifts alpha_n (symbol times t^n,
weights times |zeta|^{2n}), symbol scaling by rho, and mass truncation are
all applied to the data, never to the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
import scipy.linalg

from .circle import (
    CircleGrid,
    MassSet,
    OuterData,
    SymbolData,
    riesz_project_values,
)
from .errors import NotPositiveDefinite
from .tolerances import TOL_PSD


@dataclass(frozen=True, eq=False)
class SpaceData:
    """A data pair alpha = {R, nu} plus shift and regularization parameters.

    shift n multiplies the symbol by t^n and the weights by |zeta_k|^{2n};
    rho scales the symbol uniformly; mass_cutoff keeps the first N masses.
    """

    symbol: SymbolData
    masses: MassSet
    shift: int = 0
    rho: float = 1.0
    mass_cutoff: Optional[int] = None

    def __post_init__(self):
        if not 0.0 < self.rho <= 1.0:
            raise ValueError(f"rho must lie in (0, 1], got {self.rho}")
        if self.mass_cutoff is not None and not 0 <= self.mass_cutoff <= self.masses.count:
            raise ValueError(
                f"mass_cutoff {self.mass_cutoff} outside 0..{self.masses.count}"
            )

    @property
    def grid(self) -> CircleGrid:
        return self.symbol.grid


def shifted(space: SpaceData, dn: int) -> SpaceData:
    return replace(space, shift=space.shift + dn)


def regularized(space: SpaceData, rho: float = 1.0,
                mass_cutoff: Optional[int] = None) -> SpaceData:
    """Apply symbol scaling and/or mass truncation on top of existing settings."""
    out = space
    if rho != 1.0:
        out = replace(out, rho=out.rho * rho)
    if mass_cutoff is not None:
        current = out.masses.count if out.mass_cutoff is None else out.mass_cutoff
        out = replace(out, mass_cutoff=min(mass_cutoff, current))
    return out


def effective_data(space: SpaceData) -> tuple[SymbolData, MassSet]:
    """Resolve shift, rho-scaling and mass cutoff into concrete data.

    The shifted symbol has coefficients r_p -> r_{p-n} (a circular roll in
    FFT layout) and values R(t) -> t^n R(t); weights become |zeta_k|^{2n} nu_k.
    """
    sym = space.symbol
    grid = sym.grid
    values = sym.values
    coeffs = sym.coeffs
    if space.shift != 0:
        values = values * grid.nodes ** space.shift
        coeffs = np.roll(coeffs, space.shift)
    if space.rho != 1.0:
        values = values * space.rho
        coeffs = coeffs * space.rho
    eff_symbol = SymbolData(grid, np.ascontiguousarray(values),
                            np.ascontiguousarray(coeffs), float(np.abs(values).max()))

    masses = space.masses
    if space.mass_cutoff is not None:
        masses = masses.truncated(space.mass_cutoff)
    if space.shift != 0 and masses.count:
        if space.shift < 0 and masses.has_origin:
            raise ValueError("negative shift undefined for a mass at the origin")
        weights = masses.weights * np.abs(masses.points) ** (2 * space.shift)
        masses = MassSet(masses.points, weights)
    return eff_symbol, masses


def default_hankel_truncation(grid_size: int, degree: int) -> int:
    return grid_size // 2 - degree


# ---------------------------------------------------------------------------
# Hankel and Gram construction


@dataclass(frozen=True, eq=False)
class HankelBlock:
    """Gram of the truncated Hankel operator on given monomial exponents.

    gamma_gram[m, l] = sum_{j=1..J} conj(r_{-j-m}) r_{-j-l}; tail_bound is
    the largest entrywise remainder sum_{j>J} |r_{-j-m}| |r_{-j-l}| over the
    resolvable coefficient range.
    """

    truncation: int
    exponents: np.ndarray
    gamma_gram: np.ndarray
    tail_bound: float


def hankel_block(symbol: SymbolData, exponents, truncation: int) -> HankelBlock:
    exponents = np.asarray(exponents, dtype=int)
    n = symbol.grid.size
    if truncation < 1:
        raise ValueError(f"Hankel truncation must be >= 1, got {truncation}")
    if truncation + exponents.max() > n // 2:
        raise ValueError(
            f"Hankel truncation {truncation} exceeds the resolvable band for "
            f"degree {exponents.max()} on a size-{n} grid"
        )
    js = np.arange(1, truncation + 1)
    rows = symbol.coeffs[(-js[:, None] - exponents[None, :]) % n]
    gram = rows.conj().T @ rows

    j_max = n // 2 - int(exponents.max())
    if j_max > truncation:
        tail_js = np.arange(truncation + 1, j_max + 1)
        tail = np.abs(symbol.coeffs[(-tail_js[:, None] - exponents[None, :]) % n])
        tail_bound = float((tail.T @ tail).max())
    else:
        tail_bound = 0.0
    return HankelBlock(truncation, exponents, gram, tail_bound)


def _mass_gram(masses: MassSet, exponents: np.ndarray) -> np.ndarray:
    if masses.count == 0:
        return np.zeros((exponents.size, exponents.size), dtype=complex)
    v = masses.points[:, None] ** exponents[None, :]
    return v.conj().T @ (masses.weights[:, None] * v)


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Hermitian positive matrix of the metric on a truncated basis.

    ``basis_kind`` is "analytic" (exponents 0..M) or "laurent" (exponents
    -M..M followed by ``mass_count`` point-mass coordinates).  ``factor``
    caches the Cholesky factorization used by :meth:`solve`.
    """

    entries: np.ndarray
    basis_kind: str
    exponents: np.ndarray
    mass_count: int
    factor: tuple
    min_eig_estimate: float
    max_eig_estimate: float
    hankel: HankelBlock

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    @property
    def condition_estimate(self) -> float:
        return self.max_eig_estimate / self.min_eig_estimate

    def solve(self, rhs) -> np.ndarray:
        return scipy.linalg.cho_solve(self.factor, np.asarray(rhs, dtype=complex))

    def quadratic_form(self, x, y=None) -> complex:
        """<G x, y> with the convention conjugate-linear in the second slot."""
        x = np.asarray(x, dtype=complex)
        y = x if y is None else np.asarray(y, dtype=complex)
        return complex(np.vdot(y, self.entries @ x))


def _finalize_gram(entries, basis_kind, exponents, mass_count, hankel, tol_psd):
    entries = 0.5 * (entries + entries.conj().T)
    eigs = np.linalg.eigvalsh(entries)
    min_eig, max_eig = float(eigs[0]), float(eigs[-1])
    if min_eig < tol_psd:
        raise NotPositiveDefinite(
            f"Gram minimum eigenvalue {min_eig:.3e} below tolerance {tol_psd:.0e}; "
            "|R| too close to 1 for this truncation (try rho < 1 or a larger grid)"
        )
    try:
        factor = scipy.linalg.cho_factor(entries, lower=True)
    except scipy.linalg.LinAlgError as exc:  # pragma: no cover - guarded by eig check
        raise NotPositiveDefinite(str(exc)) from exc
    return GramMatrix(entries, basis_kind, exponents, mass_count, factor,
                      min_eig, max_eig, hankel)


def build_gram_analytic(space: SpaceData, degree: int,
                        hankel: Optional[int] = None,
                        tol_psd: float = TOL_PSD) -> GramMatrix:
    """Gram of the metric on z^0..z^degree.

    Entries: delta_{ml} - sum_{j<=J} conj(r_{-j-m}) r_{-j-l}
    + sum_k conj(zeta_k)^m zeta_k^l nu_k, with shifted/scaled data resolved
    first.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    symbol, masses = effective_data(space)
    if hankel is None:
        hankel = default_hankel_truncation(symbol.grid.size, degree)
    exponents = np.arange(degree + 1)
    block = hankel_block(symbol, exponents, hankel)
    entries = np.eye(degree + 1, dtype=complex) - block.gamma_gram
    entries += _mass_gram(masses, exponents)
    return _finalize_gram(entries, "analytic", exponents, 0, block, tol_psd)


def build_gram_laurent(space: SpaceData, half_band: int,
                       hankel: Optional[int] = None,
                       tol_psd: float = TOL_PSD) -> GramMatrix:
    """Gram of the two-sided metric on z^-M..z^M plus mass coordinates.

    The circle block uses the same Hankel expression as the analytic Gram
    (the norm identity ||f||^2 - ||P_-(R f)||^2 holds for every Laurent
    polynomial); the mass block is diag(nu) with zero coupling.
    """
    if half_band < 0:
        raise ValueError("half_band must be >= 0")
    symbol, masses = effective_data(space)
    if hankel is None:
        hankel = default_hankel_truncation(symbol.grid.size, half_band)
    exponents = np.arange(-half_band, half_band + 1)
    block = hankel_block(symbol, exponents, hankel)
    dim = exponents.size + masses.count
    entries = np.zeros((dim, dim), dtype=complex)
    entries[: exponents.size, : exponents.size] = (
        np.eye(exponents.size, dtype=complex) - block.gamma_gram
    )
    if masses.count:
        entries[exponents.size:, exponents.size:] = np.diag(masses.weights)
    return _finalize_gram(entries, "laurent", exponents, masses.count, block, tol_psd)


def embed_h2(space: SpaceData, degree: int, half_band: int) -> np.ndarray:
    """Columns embedding z^0..z^degree into Laurent + mass coordinates.

    z^p maps to the unit Laurent coefficient at exponent p together with its
    values zeta_k^p at the mass points.
    """
    if degree > half_band:
        raise ValueError("embedding degree must not exceed the Laurent half band")
    _, masses = effective_data(space)
    rows = 2 * half_band + 1 + masses.count
    out = np.zeros((rows, degree + 1), dtype=complex)
    for p in range(degree + 1):
        out[half_band + p, p] = 1.0
        if masses.count:
            out[2 * half_band + 1:, p] = masses.points ** p
    return out


# ---------------------------------------------------------------------------
# membership diagnostics for the two-sided circle component


@dataclass(frozen=True, eq=False)
class L2RMembershipReport:
    """Diagnostics for a circle pair (f1, f2) claimed to lie in the R-twisted L^2.

    hardy_defect: L^2 mass of the negative frequencies of R f1 + f2.
    antianalytic_defect: L^2 mass of the nonnegative frequencies of conj(T_e) f2.
    reconstruction_residual: ||f2 + P_-(R f1)|| (the first component
    determines the second).
    """

    hardy_defect: float
    antianalytic_defect: float
    reconstruction_residual: float

    def max_residual(self) -> float:
        return max(self.hardy_defect, self.antianalytic_defect,
                   self.reconstruction_residual)


def check_l2r_membership(symbol: SymbolData, outer: OuterData,
                         f1, f2) -> L2RMembershipReport:
    grid = symbol.grid
    f1 = grid.check(f1)
    f2 = grid.check(f2)
    hardy = grid.norm(riesz_project_values(symbol.values * f1 + f2, "antianalytic"))
    anti = grid.norm(riesz_project_values(np.conj(outer.values) * f2, "analytic"))
    recon = grid.norm(f2 + riesz_project_values(symbol.values * f1, "antianalytic"))
    return L2RMembershipReport(hardy, anti, recon)
