"""Truncated number-basis oracle: ladder algebra, traces, quadrature moments."""

import math

import numpy as np
import pytest

from entropyne import (
    FockTruncation,
    GaussianParams,
    QuadraticHamiltonian,
    TruncationUnstable,
    annihilation_matrix,
    exponential_diagonal,
    kernel_moments,
    ladder_matrices,
    partition_function,
    quadratic_hamiltonian_matrix,
    stable_partition,
    thermal_light_fock,
    truncated_partition,
)
from entropyne.gaussian import random_quadratic_hamiltonian


def oscillator(omega0: float) -> QuadraticHamiltonian:
    return QuadraticHamiltonian(omega0=omega0, omega1=0.5, omega2=0j,
                                omega3=omega0**2 / 2.0)


def test_annihilation_small():
    assert np.array_equal(annihilation_matrix(2), np.array([[0, 1], [0, 0]],
                                                           dtype=complex))


def test_quadrature_entry():
    _, q = ladder_matrices(FockTruncation(4, 1.0))
    assert math.isclose(q[0, 1].real, 1.0 / math.sqrt(2.0), rel_tol=1e-12)


@pytest.mark.parametrize("omega0", [0.5, 1.0, 2.0])
def test_canonical_commutator(omega0):
    n_max = 30
    p, q = ladder_matrices(FockTruncation(n_max, omega0))
    comm = q @ p - p @ q
    block = comm[: n_max - 1, : n_max - 1]
    assert np.abs(block - 1j * np.eye(n_max - 1)).max() <= 1e-10


def test_harmonic_matrix_is_number_operator():
    hm = quadratic_hamiltonian_matrix(oscillator(1.0), FockTruncation(40, 1.0))
    interior = np.arange(38)
    assert np.abs(np.diag(hm).real[:38] - (interior + 0.5)).max() <= 1e-10
    off = hm - np.diag(np.diag(hm))
    assert np.abs(off[:38, :38]).max() <= 1e-10


def test_su11_operator_form():
    # H = 2(gamma1 K- + gamma1* K+ + (w3/w0 + w0 w1) K0) + Im(w2), with
    # K+ = adag^2/2, K- = a^2/2, K0 = (adag a + 1/2)/2.
    h = QuadraticHamiltonian(omega0=1.0, omega1=0.6, omega2=0.2 + 0.3j,
                             omega3=0.4)
    n_max = 25
    hm = quadratic_hamiltonian_matrix(h, FockTruncation(n_max, 1.0))
    a = annihilation_matrix(n_max)
    ad = a.conj().T
    k_plus = ad @ ad / 2.0
    k_minus = a @ a / 2.0
    k_zero = (ad @ a + 0.5 * np.eye(n_max)) / 2.0
    alg = 2.0 * (h.gamma1 * k_minus + np.conj(h.gamma1) * k_plus
                 + h.k0_coefficient * k_zero) + h.omega2.imag * np.eye(n_max)
    # Truncating operator products perturbs the last two rows/columns; the
    # identity holds on the interior block.
    interior = n_max - 2
    assert np.abs(hm[:interior, :interior] - alg[:interior, :interior]).max() <= 1e-10


def test_truncated_partition_harmonic():
    hm = quadratic_hamiltonian_matrix(oscillator(1.0), FockTruncation(200, 1.0))
    z, last = truncated_partition(hm, 1.0)
    exact = math.exp(-0.5) / (1.0 - math.exp(-1.0))
    assert abs(z - exact) <= 1e-12
    assert last < 1e-12


def test_truncated_partition_converges_with_basis_size():
    # The truncated spectra are not nested (edge rows shift), so the raw sum
    # is not monotone in N; the error against the exact trace is.
    h = oscillator(1.0)
    exact = math.exp(-0.1) / (1.0 - math.exp(-0.2))
    errors = []
    for n in (50, 100, 150, 200):
        hm = quadratic_hamiltonian_matrix(h, FockTruncation(n, 1.0))
        errors.append(abs(truncated_partition(hm, 0.2)[0] - exact))
    assert errors[0] > errors[1] > errors[2] > errors[3]
    assert errors[3] <= 1e-8


def test_truncated_partition_rejects_nonpositive_beta():
    hm = quadratic_hamiltonian_matrix(oscillator(1.0), FockTruncation(20, 1.0))
    with pytest.raises(ValueError):
        truncated_partition(hm, 0.0)


@pytest.mark.parametrize("seed", range(6))
def test_stable_partition_matches_closed_form(seed):
    h = random_quadratic_hamiltonian(seed)
    beta = 0.5 + seed * 0.3
    closed = partition_function(h, beta)
    brute = stable_partition(h, beta)
    assert abs(closed - brute) <= 1e-8 * closed


def test_stable_partition_unstable_for_tiny_beta():
    # beta so small the truncated sum keeps growing past the basis cap.
    with pytest.raises(TruncationUnstable):
        stable_partition(oscillator(1.0), 1e-3)


def test_exponential_diagonal_harmonic():
    hm = quadratic_hamiltonian_matrix(oscillator(1.0), FockTruncation(60, 1.0))
    diag = exponential_diagonal(hm, 1.0)
    n = np.arange(40)
    assert np.abs(diag[:40] - np.exp(-(n + 0.5))).max() <= 1e-10


@pytest.mark.parametrize("nbar", [0.3, 1.0, 4.0])
def test_thermal_light_fock_properties(nbar):
    n_max = 300
    rho = thermal_light_fock(nbar, n_max)
    probs = np.diag(rho).real
    # Truncated geometric mass over levels 0..n_max-1.
    expected_trace = 1.0 - (nbar / (1.0 + nbar)) ** n_max
    assert abs(probs.sum() - expected_trace) <= 1e-12
    pos = probs[probs > 0.0]
    s_exact = nbar * math.log((1.0 + nbar) / nbar) + math.log(1.0 + nbar)
    assert abs(-(pos * np.log(pos)).sum() - s_exact) <= 1e-8
    hm = quadratic_hamiltonian_matrix(oscillator(1.0), FockTruncation(n_max, 1.0))
    assert abs(np.trace(rho @ hm).real - (nbar + 0.5)) <= 1e-8


def test_thermal_light_vacuum():
    rho = thermal_light_fock(0.0, 10)
    assert rho[0, 0] == 1.0
    assert abs(np.trace(rho) - 1.0) <= 1e-15


def test_kernel_moments_squeezed():
    s = 1.7
    m = kernel_moments(GaussianParams(a1=s / 2.0 + 0j, a2=0.0, b1=0j))
    assert abs(m.norm - 1.0) <= 1e-9
    assert abs(m.sigma_qq - 1.0 / (2.0 * s)) <= 1e-9
    assert abs(m.sigma_pp - s / 2.0) <= 1e-9
    assert abs(m.mean_p) <= 1e-9 and abs(m.mean_q) <= 1e-9


def test_kernel_moments_displaced_vacuum():
    c = 0.8
    m = kernel_moments(GaussianParams(a1=0.5 + 0j, a2=0.0, b1=c + 0j))
    assert abs(m.mean_q - c) <= 1e-9
    assert abs(m.mean_p) <= 1e-9
