import numpy as np
import pytest

from hardydual import (
    MassSet,
    NotPositiveDefinite,
    SpaceData,
    build_gram_analytic,
    build_gram_laurent,
    build_outer,
    check_l2r_membership,
    effective_data,
    embed_h2,
    regularized,
    symbol_from_coefficients,
    symbol_from_expression,
    zero_symbol,
)
from hardydual.circle import riesz_project_values
from hardydual.corpus import CASES
from hardydual.oracle import dense_psd_check, gram_entry_quadrature
from hardydual.spaces import hankel_block


# --- effective data -----------------------------------------------------------

def test_effective_data_identity(grid512):
    masses = MassSet(np.array([0.5]), np.array([3.0]))
    space = SpaceData(symbol_from_expression(grid512, "0.3*conj(t)"), masses)
    sym, m = effective_data(space)
    assert np.abs(sym.values - space.symbol.values).max() == 0
    assert np.array_equal(m.weights, masses.weights)


def test_effective_data_shift_moves_coefficients(grid512):
    c = 0.45
    space = SpaceData(symbol_from_coefficients(grid512, {-1: c}), MassSet.empty(),
                      shift=1)
    sym, _ = effective_data(space)
    assert abs(sym.coefficient(0) - c) < 1e-14
    assert abs(sym.coefficient(-1)) < 1e-14
    # shifted symbol has no negative coefficients: zero Hankel part
    block = hankel_block(sym, np.arange(4), 32)
    assert np.abs(block.gamma_gram).max() < 1e-26


def test_effective_data_shift_scales_weights(grid512):
    masses = MassSet(np.array([0.5]), np.array([3.0]))
    space = SpaceData(zero_symbol(grid512), masses, shift=2)
    _, m = effective_data(space)
    assert abs(m.weights[0] - 3.0 / 16.0) < 1e-15


def test_effective_data_rho_scales_symbol(grid512):
    space = SpaceData(symbol_from_expression(grid512, "0.6*conj(t)"),
                      MassSet.empty(), rho=0.5)
    sym, _ = effective_data(space)
    assert abs(sym.sup_modulus - 0.3) < 1e-14


def test_negative_shift_rejects_origin_mass(grid512):
    masses = MassSet(np.array([0.0]), np.array([1.0]))
    space = SpaceData(zero_symbol(grid512), masses, shift=-1)
    with pytest.raises(ValueError):
        effective_data(space)


def test_mass_cutoff(grid512):
    masses = MassSet(np.array([0.5, 1 / 3]), np.array([3.0, 1.0]))
    space = SpaceData(zero_symbol(grid512), masses, mass_cutoff=1)
    _, m = effective_data(space)
    assert m.count == 1 and m.points[0] == 0.5


# --- analytic Gram -------------------------------------------------------------

def test_gram_identity_for_trivial_data(grid512):
    space = SpaceData(zero_symbol(grid512), MassSet.empty())
    gram = build_gram_analytic(space, 3)
    assert np.abs(gram.entries - np.eye(4)).max() == 0
    assert gram.min_eig_estimate == pytest.approx(1.0)


def test_gram_rank_one_hankel(grid512):
    space = SpaceData(symbol_from_expression(grid512, "0.6*conj(t)"), MassSet.empty())
    gram = build_gram_analytic(space, 3, hankel=8)
    expected = np.diag([0.64, 1.0, 1.0, 1.0])
    assert np.abs(gram.entries - expected).max() < 1e-14


def test_gram_single_mass_closed_form(grid512):
    masses = MassSet(np.array([0.5]), np.array([3.0]))
    space = SpaceData(zero_symbol(grid512), masses)
    gram = build_gram_analytic(space, 2)
    m, l = np.meshgrid([0, 1, 2], [0, 1, 2], indexing="ij")
    expected = np.eye(3) + 3.0 * 2.0 ** (-(m + l)).astype(float)
    assert np.abs(gram.entries - expected).max() < 1e-14


def test_gram_hermitian_and_factorized(grid4096):
    space = CASES[-1].space(4096)  # rational symbol, two masses
    gram = build_gram_analytic(space, 24)
    assert np.abs(gram.entries - gram.entries.conj().T).max() == 0
    rhs = np.zeros(25, dtype=complex)
    rhs[0] = 1.0
    solution = gram.solve(rhs)
    assert np.abs(gram.entries @ solution - rhs).max() < 1e-12


def test_gram_rejects_unimodular_symbol(grid512):
    space = SpaceData(symbol_from_expression(grid512, "conj(t)"), MassSet.empty())
    with pytest.raises(NotPositiveDefinite):
        build_gram_analytic(space, 4)


def test_hankel_contraction_bound():
    for case in CASES:
        space = case.space(1024)
        sym, _ = effective_data(space)
        block = hankel_block(sym, np.arange(17), 128)
        top = np.linalg.eigvalsh(block.gamma_gram)[-1]
        assert top <= sym.sup_modulus ** 2 + 1e-10, case.name


def test_hankel_positive_coefficients_are_ignored(grid512):
    only_negative = symbol_from_coefficients(grid512, {-1: 0.4, -2: 0.2})
    with_positive = symbol_from_coefficients(grid512, {-1: 0.4, -2: 0.2, 1: 0.3, 3: 0.1})
    a = hankel_block(only_negative, np.arange(6), 64).gamma_gram
    b = hankel_block(with_positive, np.arange(6), 64).gamma_gram
    assert np.abs(a - b).max() < 1e-15


def test_hankel_truncation_stability(grid4096):
    # growing J by 50% moves entries by at most the reported tail bound
    space = CASES[-1].space(4096)
    sym, _ = effective_data(space)
    exponents = np.arange(9)
    short = hankel_block(sym, exponents, 40)
    long = hankel_block(sym, exponents, 60)
    change = np.abs(long.gamma_gram - short.gamma_gram).max()
    assert change <= short.tail_bound + 1e-15
    assert short.tail_bound < 1e-6


# --- Laurent Gram and embedding ------------------------------------------------

def test_laurent_gram_trivial(grid512):
    masses = MassSet(np.array([0.5, 0.25]), np.array([2.0, 1.0]))
    space = SpaceData(zero_symbol(grid512), masses)
    gram = build_gram_laurent(space, 3)
    expected = np.diag([1.0] * 7 + [2.0, 1.0])
    assert np.abs(gram.entries - expected).max() == 0


def test_laurent_gram_rank_one_entries(grid512):
    space = SpaceData(symbol_from_expression(grid512, "0.6*conj(t)"), MassSet.empty())
    gram = build_gram_laurent(space, 2)
    exps = list(gram.exponents)
    i0, im1, i1 = exps.index(0), exps.index(-1), exps.index(1)
    assert abs(gram.entries[i0, i0] - 0.64) < 1e-14
    assert abs(gram.entries[im1, im1] - 0.64) < 1e-14
    assert abs(gram.entries[i1, i1] - 1.0) < 1e-14


def test_embedding_columns(grid512):
    masses = MassSet(np.array([0.5, 1 / 3]), np.array([1.0, 1.0]))
    space = SpaceData(zero_symbol(grid512), masses)
    embed = embed_h2(space, 1, 3)
    # z^0: Laurent e_0 and mass coordinates all one
    assert embed[3, 0] == 1.0
    assert np.array_equal(embed[7:, 0], np.ones(2))
    # z^1: mass coordinates are the points themselves
    assert embed[4, 1] == 1.0
    assert np.abs(embed[7:, 1] - np.array([0.5, 1 / 3])).max() < 1e-15


@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_embedded_gram_congruence(case):
    # Gram of the embedded analytic columns == analytic Gram (same truncation)
    space = case.space(1024)
    degree, half_band, j = 10, 16, 300
    laurent = build_gram_laurent(space, half_band, hankel=j)
    embed = embed_h2(space, degree, half_band)
    analytic = build_gram_analytic(space, degree, hankel=j)
    congruence = embed.conj().T @ laurent.entries @ embed
    assert np.abs(congruence - analytic.entries).max() < 1e-13


def test_embedded_vector_norms_match(grid512):
    # ||z^p||_{L^2(alpha)} equals the analytic-Gram norm for p <= half band
    masses = MassSet(np.array([0.4]), np.array([2.0]))
    space = SpaceData(symbol_from_expression(grid512, "0.5*conj(t)"), masses)
    laurent = build_gram_laurent(space, 8, hankel=100)
    analytic = build_gram_analytic(space, 8, hankel=100)
    embed = embed_h2(space, 8, 8)
    for p in range(5):
        col = embed[:, p]
        laurent_norm = np.vdot(col, laurent.entries @ col).real
        assert abs(laurent_norm - analytic.entries[p, p].real) < 1e-13


# --- PSD ordering of regularizations -------------------------------------------

@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_gram_psd_ordering(case):
    space = case.space(1024)
    degree = 16
    g_alpha = build_gram_analytic(space, degree).entries
    g_cut = build_gram_analytic(
        regularized(space, mass_cutoff=min(1, space.masses.count)), degree).entries
    g_rho = build_gram_analytic(regularized(space, rho=0.7), degree).entries
    assert dense_psd_check(g_alpha - g_cut) >= -1e-12
    assert dense_psd_check(g_rho - g_alpha) >= -1e-12


# --- oracle agreement -----------------------------------------------------------

@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_gram_entries_match_quadrature_oracle(case):
    space = case.space(512)
    gram = build_gram_analytic(space, 8, hankel=64)
    refined = np.exp(2j * np.pi * np.arange(2048) / 2048)
    values = case.symbol_values(refined)
    _, masses = effective_data(space)
    for row, col in [(0, 0), (1, 1), (3, 1), (0, 5), (8, 8)]:
        expected = gram_entry_quadrature(values, refined, masses.points,
                                         masses.weights, row, col, 64)
        assert abs(gram.entries[row, col] - expected) < 1e-8, case.name


# --- membership diagnostics ------------------------------------------------------

def test_l2r_membership_of_canonical_pair(grid4096):
    symbol = symbol_from_expression(grid4096, "0.6*conj(t)")
    outer = build_outer(symbol)
    rng = np.random.default_rng(1)
    coeffs = (rng.standard_normal(40) + 1j * rng.standard_normal(40)) * 0.8 ** np.arange(40)
    f1 = np.polynomial.polynomial.polyval(grid4096.nodes, coeffs)
    f2 = -riesz_project_values(symbol.values * f1, "antianalytic")
    report = check_l2r_membership(symbol, outer, f1, f2)
    assert report.max_residual() < 1e-10


def test_l2r_membership_detects_perturbation(grid512):
    symbol = symbol_from_expression(grid512, "0.6*conj(t)")
    outer = build_outer(symbol)
    f1 = grid512.nodes ** 2
    f2 = -riesz_project_values(symbol.values * f1, "antianalytic")
    eps = 3e-5
    report = check_l2r_membership(symbol, outer, f1, f2 + eps * grid512.nodes ** (-1))
    assert abs(report.hardy_defect - eps) < 1e-12
