"""Function theory on the unit circle.

Everything downstream (metrics, kernels, the duality map) is built from the
primitives collected here: equispaced grids with FFT-backed Fourier data,
Riesz projections onto analytic/antianalytic frequencies, outer functions
recovered from a boundary modulus, and Blaschke products with their
derivatives at the prescribed zeros.

Conventions.  Grid nodes are ``t_j = exp(2*pi*i*j/size)``.  Fourier
coefficient arrays use the FFT layout of length ``size``: the coefficient of
``t**p`` lives at index ``p % size``, so the lower half of the array holds
analytic frequencies (p >= 0) and the upper half antianalytic ones (p <= -1,
including the shared +-size/2 bin).  The L^2 norm on the circle is the
quadrature norm ``sqrt(mean |f(t_j)|^2)``, i.e. integration against
normalized Lebesgue measure.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

import numpy as np

from .errors import DuplicatePoint, GridMismatch, SzegoViolation
from .tolerances import TOL_BLASCHKE, TOL_TOUCH, TOL_UNIT

ANALYTIC = "analytic"
ANTIANALYTIC = "antianalytic"


@dataclass(frozen=True)
class CircleGrid:
    """Equispaced nodes exp(2*pi*i*j/size), size a power of two."""

    size: int

    def __post_init__(self):
        n = self.size
        if n < 8 or (n & (n - 1)) != 0:
            raise ValueError(f"grid size must be a power of two >= 8, got {n}")

    @cached_property
    def nodes(self) -> np.ndarray:
        j = np.arange(self.size)
        return np.exp(2j * np.pi * j / self.size)

    def check(self, values) -> np.ndarray:
        values = np.asarray(values, dtype=complex)
        if values.shape != (self.size,):
            raise GridMismatch(
                f"expected {self.size} grid samples, got shape {values.shape}"
            )
        return values

    def coefficients(self, values) -> np.ndarray:
        """Fourier coefficients of grid samples, FFT layout."""
        return np.fft.fft(self.check(values)) / self.size

    def values(self, coeffs) -> np.ndarray:
        """Grid samples from an FFT-layout coefficient array."""
        return np.fft.ifft(self.check(coeffs) * self.size)

    def conjugate_reindex(self, values) -> np.ndarray:
        """Samples of F(conj(t_j)) from samples of F(t_j).

        conj(t_j) = t_{(size-j) % size}, so this is a pure re-indexing.
        """
        v = self.check(values)
        return np.roll(v[::-1], 1)

    def norm(self, values) -> float:
        return float(np.sqrt(np.mean(np.abs(self.check(values)) ** 2)))


def coefficient(coeffs, p: int) -> complex:
    """Coefficient of t**p from an FFT-layout array."""
    coeffs = np.asarray(coeffs)
    return complex(coeffs[p % coeffs.size])


def evaluate_analytic(coeffs, z):
    """Evaluate sum_{p >= 0} c_p z**p from an FFT-layout coefficient array.

    Only the analytic half of the array is used; valid for |z| < 1.
    """
    c = np.asarray(coeffs, dtype=complex)
    return np.polynomial.polynomial.polyval(np.asarray(z, dtype=complex), c[: c.size // 2])


def riesz_project(coeffs, sign: str) -> np.ndarray:
    """Riesz projection acting on an FFT-layout coefficient array.

    ``analytic`` keeps frequencies p >= 0, ``antianalytic`` keeps p <= -1.
    The shared +-size/2 bin counts as antianalytic, so the two projections
    are exactly complementary.
    """
    c = np.asarray(coeffs, dtype=complex)
    half = c.size // 2
    out = np.zeros_like(c)
    if sign == ANALYTIC:
        out[:half] = c[:half]
    elif sign == ANTIANALYTIC:
        out[half:] = c[half:]
    else:
        raise ValueError(f"sign must be 'analytic' or 'antianalytic', got {sign!r}")
    return out


def riesz_project_values(values, sign: str) -> np.ndarray:
    """Riesz projection acting on grid samples (FFT round trip)."""
    values = np.asarray(values, dtype=complex)
    return np.fft.ifft(riesz_project(np.fft.fft(values), sign))


# ---------------------------------------------------------------------------
# symbols


@dataclass(frozen=True, eq=False)
class SymbolData:
    """A contractive symbol R: grid samples plus Fourier coefficients.

    The two representations are kept consistent by construction; only the
    negative-index coefficients enter Hankel matrices downstream.
    """

    grid: CircleGrid
    values: np.ndarray
    coeffs: np.ndarray
    sup_modulus: float

    def coefficient(self, p: int) -> complex:
        return coefficient(self.coeffs, p)


def symbol_from_samples(grid: CircleGrid, values) -> SymbolData:
    values = grid.check(values)
    coeffs = grid.coefficients(values)
    return SymbolData(grid, values, coeffs, float(np.abs(values).max()))


def symbol_from_coefficients(grid: CircleGrid, entries: Mapping[int, complex]) -> SymbolData:
    """Symbol from a sparse mapping {index p: coefficient r_p}."""
    coeffs = np.zeros(grid.size, dtype=complex)
    half = grid.size // 2
    for p, value in entries.items():
        p = int(p)
        if abs(p) >= half:
            raise ValueError(f"coefficient index {p} outside resolvable band (+-{half - 1})")
        coeffs[p % grid.size] = complex(value)
    values = grid.values(coeffs)
    return SymbolData(grid, values, coeffs, float(np.abs(values).max()))


_EXPR_NAMES = {
    "conj": np.conj,
    "abs": np.abs,
    "exp": np.exp,
    "sqrt": np.sqrt,
    "cos": np.cos,
    "sin": np.sin,
    "pi": np.pi,
}


def symbol_from_expression(grid: CircleGrid, formula: str) -> SymbolData:
    """Symbol from an expression in ``t`` and ``conj(t)``, e.g. ``"0.6*conj(t)"``.

    Evaluated on the grid with a restricted namespace (t, conj, abs, exp,
    sqrt, cos, sin, pi and numeric literals).
    """
    scope = dict(_EXPR_NAMES)
    scope["t"] = grid.nodes
    try:
        raw = eval(compile(formula, "<symbol>", "eval"), {"__builtins__": {}}, scope)
    except Exception as exc:
        raise ValueError(f"cannot evaluate symbol expression {formula!r}: {exc}") from exc
    values = np.broadcast_to(np.asarray(raw, dtype=complex), (grid.size,)).copy()
    return symbol_from_samples(grid, values)


def zero_symbol(grid: CircleGrid) -> SymbolData:
    return symbol_from_coefficients(grid, {})


# ---------------------------------------------------------------------------
# Szego validation


@dataclass(frozen=True, eq=False)
class SzegoReport:
    """Contractivity flag, grid log-integral of 1-|R|, near-unimodular nodes."""

    is_contractive: bool
    log_integral: float
    touching_nodes: np.ndarray


def validate_szego(symbol: SymbolData, tol_unit: float = TOL_UNIT,
                   tol_touch: float = TOL_TOUCH) -> SzegoReport:
    """Check |R| <= 1 and approximate the integral of log(1 - |R|).

    Raises SzegoViolation when the symbol is not a contraction.  Nodes where
    1 - |R| < tol_touch are reported (and excluded from the log average);
    the caller decides whether they are fatal.
    """
    if symbol.sup_modulus > 1.0 + tol_unit:
        raise SzegoViolation(
            f"sup |R| = {symbol.sup_modulus:.6g} exceeds 1 (not a contraction)"
        )
    gap = 1.0 - np.abs(symbol.values)
    touching = np.nonzero(gap < tol_touch)[0]
    if touching.size:
        warnings.warn(
            f"|R| within {tol_touch:g} of 1 at {touching.size} node(s); "
            "log-integral computed on the remaining nodes",
            stacklevel=2,
        )
    clean = gap >= tol_touch
    log_integral = float(np.mean(np.log(gap[clean]))) if clean.any() else float("-inf")
    return SzegoReport(True, log_integral, touching)


# ---------------------------------------------------------------------------
# mass sets


@dataclass(frozen=True, eq=False)
class MassSet:
    """Point masses: zeros zeta_k in the open disk with weights nu_k > 0."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        points = np.atleast_1d(np.asarray(self.points, dtype=complex))
        weights = np.atleast_1d(np.asarray(self.weights, dtype=float))
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)
        if points.shape != weights.shape:
            raise ValueError("points and weights must have matching lengths")
        if np.any(weights <= 0):
            raise ValueError("all mass weights must be strictly positive")
        if np.any(np.abs(points) >= 1):
            raise ValueError("all mass points must lie strictly inside the unit disk")
        if len(points) > 1:
            diff = np.abs(points[:, None] - points[None, :])
            np.fill_diagonal(diff, np.inf)
            if diff.min() < 1e-12:
                raise DuplicatePoint("mass points must be pairwise distinct")

    @classmethod
    def empty(cls) -> "MassSet":
        return cls(np.empty(0, dtype=complex), np.empty(0, dtype=float))

    @property
    def count(self) -> int:
        return int(self.points.size)

    @property
    def blaschke_sum(self) -> float:
        """sum_k (1 - |zeta_k|); always finite here, reported for audit."""
        return float(np.sum(1.0 - np.abs(self.points)))

    @property
    def has_origin(self) -> bool:
        return bool(np.any(self.points == 0))

    def truncated(self, n: int) -> "MassSet":
        """Keep the first n masses (in the order supplied)."""
        if not 0 <= n <= self.count:
            raise ValueError(f"mass cutoff {n} outside 0..{self.count}")
        return MassSet(self.points[:n], self.weights[:n])


# ---------------------------------------------------------------------------
# outer function


@dataclass(frozen=True, eq=False)
class OuterData:
    """Outer function T_e with |T_e|^2 = 1 - |R|^2 and T_e(0) > 0."""

    grid: CircleGrid
    values: np.ndarray
    coeffs: np.ndarray
    value_at_zero: float

    def value_at(self, z):
        """Analytic continuation into the disk via the power series."""
        return evaluate_analytic(self.coeffs, z)


def build_outer(symbol: SymbolData, tol_touch: float = TOL_TOUCH,
                tol_unit: float = TOL_UNIT) -> OuterData:
    """Outer function from the boundary modulus 1 - |R|^2.

    T_e = exp(v) where v is the analytic completion of u = log sqrt(1-|R|^2)
    on the grid: keep u's mean, double the positive frequencies, drop the
    negative ones.  Then |T_e| = exp(u) on the boundary while T_e stays
    analytic and zero-free, with T_e(0) = exp(mean u) > 0.

    Raises SzegoViolation when |R| touches 1 anywhere on the grid (the log
    blows up); scale the symbol down explicitly instead.
    """
    report = validate_szego(symbol, tol_unit=tol_unit, tol_touch=tol_touch)
    if report.touching_nodes.size:
        raise SzegoViolation(
            f"|R| touches 1 at node(s) {report.touching_nodes[:8].tolist()}; "
            "outer function undefined (pass rho < 1 to regularize)"
        )
    w = 1.0 - np.abs(symbol.values) ** 2
    if w.min() < tol_touch:
        raise SzegoViolation("1 - |R|^2 below touch tolerance; outer function undefined")
    grid = symbol.grid
    u = 0.5 * np.log(w)
    uh = np.fft.fft(u) / grid.size
    half = grid.size // 2
    vh = np.zeros_like(uh)
    vh[0] = uh[0]
    vh[1:half] = 2.0 * uh[1:half]  # shared +-half bin dropped: aliasing level
    te = np.exp(np.fft.ifft(vh * grid.size))
    return OuterData(grid, te, grid.coefficients(te), float(np.exp(uh[0].real)))


# ---------------------------------------------------------------------------
# Blaschke products


def _factor_values(point: complex, z: np.ndarray) -> np.ndarray:
    # zeta_k = 0 uses the limit convention: the factor is z itself
    if point == 0:
        return z
    return (point - z) / (1.0 - np.conj(point) * z) * (abs(point) / point)


def _factor_derivative_at_zero(point: complex) -> complex:
    # derivative of the normalized factor at its own zero
    if point == 0:
        return 1.0 + 0j
    return -(abs(point) / point) / (1.0 - abs(point) ** 2)


@dataclass(frozen=True, eq=False)
class BlaschkeData:
    """Blaschke product over a mass set, with T = T_e / B.

    ``derivative_at_zeros[k]`` is B'(zeta_k), computed by the product rule
    (factor derivative times the remaining factors), exact up to rounding.
    ``T_at_zero`` is +inf when a mass sits at the origin (B(0) = 0).
    """

    points: np.ndarray
    grid: CircleGrid
    values: np.ndarray
    derivative_at_zeros: np.ndarray
    value_at_zero: float
    T_values: np.ndarray
    T_at_zero: float

    def value_at(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.ones_like(z)
        for point in self.points:
            out = out * _factor_values(complex(point), z)
        return out


def build_blaschke(masses: MassSet, outer: OuterData,
                   tol_blaschke: float = TOL_BLASCHKE) -> BlaschkeData:
    """Blaschke product for the mass points, plus T = T_e / B on the grid."""
    points = masses.points
    if len(points) > 1:
        diff = np.abs(points[:, None] - points[None, :])
        np.fill_diagonal(diff, np.inf)
        if diff.min() < tol_blaschke:
            raise DuplicatePoint("coinciding mass points make B' vanish at the zero")
    grid = outer.grid
    nodes = grid.nodes

    b_values = np.ones(grid.size, dtype=complex)
    for point in points:
        b_values *= _factor_values(complex(point), nodes)

    deriv = np.zeros(len(points), dtype=complex)
    for k, point in enumerate(points):
        rest = 1.0 + 0j
        for j, other in enumerate(points):
            if j != k:
                rest *= _factor_values(complex(other), np.asarray(point, dtype=complex))
        deriv[k] = _factor_derivative_at_zero(complex(point)) * rest

    value_at_zero = float(np.prod(np.abs(points))) if len(points) else 1.0
    if masses.has_origin:
        warnings.warn("mass at the origin: B(0) = 0, T(0) undefined", stacklevel=2)
        t_at_zero = float("inf")
    else:
        t_at_zero = outer.value_at_zero / value_at_zero
    return BlaschkeData(
        points=points,
        grid=grid,
        values=b_values,
        derivative_at_zeros=deriv,
        value_at_zero=value_at_zero,
        T_values=outer.values / b_values,
        T_at_zero=t_at_zero,
    )
