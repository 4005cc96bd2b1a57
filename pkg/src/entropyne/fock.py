"""Brute-force verification layer: truncated number-basis matrices and
quadrature moments of Gaussian kernels.

Everything here recomputes the closed forms of the gaussian module by an
independent route: explicit ladder-operator matrices plus dense
eigendecomposition for traces, and deterministic quadrature of the position
kernel for moments.  The kernel convention is rho(x, y) = <x|rho|y> with

    <x|rho|y> = N exp(-a1* x^2 - a1 y^2 + a2 x y + b1* x + b1 y),

the assignment that reproduces the closed-form covariance entries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import QuadratureUnstable, TruncationUnstable
from .gaussian import GaussianParams, QuadraticHamiltonian, normalization
from .hermitian import check_hermitian


@dataclass(frozen=True)
class FockTruncation:
    n_max: int
    omega0: float

    def __post_init__(self) -> None:
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")
        if self.omega0 <= 0.0:
            raise ValueError("omega0 must be positive")


def annihilation_matrix(n_max: int) -> np.ndarray:
    a = np.zeros((n_max, n_max), dtype=complex)
    for n in range(1, n_max):
        a[n - 1, n] = np.sqrt(n)
    return a


def ladder_matrices(tr: FockTruncation) -> tuple[np.ndarray, np.ndarray]:
    """Quadrature matrices (p, q) with p = i sqrt(w0/2)(adag - a), q = (a+adag)/sqrt(2 w0)."""
    a = annihilation_matrix(tr.n_max)
    ad = a.conj().T
    p = 1j * np.sqrt(tr.omega0 / 2.0) * (ad - a)
    q = (a + ad) / np.sqrt(2.0 * tr.omega0)
    return p, q


def quadratic_hamiltonian_matrix(h: QuadraticHamiltonian,
                                 tr: FockTruncation) -> np.ndarray:
    """H = w1 p^2 + w2 p q + w2* q p + w3 q^2 as an explicit matrix."""
    if tr.omega0 != h.omega0:
        raise ValueError("truncation and Hamiltonian must share omega0")
    p, q = ladder_matrices(tr)
    m = h.omega1 * (p @ p) + h.omega2 * (p @ q) \
        + np.conj(h.omega2) * (q @ p) + h.omega3 * (q @ q)
    return check_hermitian(m, tol=1e-10)


def truncated_partition(hm: np.ndarray, beta: float) -> tuple[float, float]:
    """Sum of e^{-beta lambda} over the truncated spectrum.

    Returns (value, last_level_contribution); the second entry is the
    truncation-error estimate.
    """
    if beta <= 0.0:
        raise ValueError("beta must be positive")
    w = np.sort(scipy.linalg.eigvalsh(hm))
    terms = np.exp(-beta * w)
    return float(terms.sum()), float(terms[-1])


def _matched_basis_spectrum(h: QuadraticHamiltonian, n_max: int) -> np.ndarray:
    """Sorted truncated spectrum, built in the basis matched to the form.

    The spectrum does not depend on the basis scale, so the number basis of
    frequency sqrt(omega3/omega1) is used: it minimizes the squeezing between
    basis and Hamiltonian and with it the truncation edge artifacts.
    """
    p, q = ladder_matrices(FockTruncation(n_max, np.sqrt(h.omega3 / h.omega1)))
    m = h.omega1 * (p @ p) + h.omega2 * (p @ q) \
        + np.conj(h.omega2) * (q @ p) + h.omega3 * (q @ q)
    return np.sort(scipy.linalg.eigvalsh(check_hermitian(m, tol=1e-9)))


def stable_partition(h: QuadraticHamiltonian, beta: float, n_start: int = 200,
                     n_step: int = 50, n_cap: int = 500) -> float:
    """Truncated trace grown until the n -> n + n_step relative change < 1e-10.

    Each trace keeps only the eigenvalues that agree between two truncation
    sizes: truncating a matrix built from products of truncated ladder
    operators injects a handful of spurious edge levels that drift with the
    basis size, while the genuine low-lying spectrum is frozen.
    """
    if beta <= 0.0:
        raise ValueError("beta must be positive")
    n = n_start
    z_prev = None
    while n <= n_cap:
        w_lo = _matched_basis_spectrum(h, n)
        w_hi = _matched_basis_spectrum(h, n + n_step)
        idx = np.searchsorted(w_hi, w_lo)
        idx_lo = np.clip(idx - 1, 0, len(w_hi) - 1)
        idx_hi = np.clip(idx, 0, len(w_hi) - 1)
        nearest = np.minimum(np.abs(w_hi[idx_lo] - w_lo), np.abs(w_hi[idx_hi] - w_lo))
        stable = w_lo[nearest <= 1e-8 * (1.0 + np.abs(w_lo))]
        if len(stable) == 0:
            n += n_step
            continue
        terms = np.exp(-beta * stable)
        z = float(terms.sum())
        if terms[-1] <= 1e-12 * z:
            if z_prev is not None and abs(z - z_prev) <= 1e-10 * abs(z):
                return z
            z_prev = z
        n += n_step
    raise TruncationUnstable(
        f"partition sum not stable by n_max = {n_cap} (beta = {beta})"
    )


def exponential_diagonal(hm: np.ndarray, beta: float) -> np.ndarray:
    """Diagonal of e^{-beta H} via dense eigendecomposition."""
    w, v = scipy.linalg.eigh(hm)
    return np.einsum("nk,k,nk->n", v, np.exp(-beta * w), v.conj()).real


def thermal_light_fock(nbar: float, n_max: int) -> np.ndarray:
    """Truncated geometric photon-number state diag(nbar^n / (1+nbar)^{n+1})."""
    if nbar < 0.0:
        raise ValueError("nbar must be >= 0")
    n = np.arange(n_max)
    if nbar == 0.0:
        probs = np.zeros(n_max)
        probs[0] = 1.0
    else:
        probs = np.exp(n * np.log(nbar) - (n + 1) * np.log(1.0 + nbar))
    return np.diag(probs.astype(complex))


@dataclass(frozen=True)
class KernelMoments:
    norm: float
    mean_q: float
    mean_p: float
    sigma_qq: float
    sigma_pp: float
    sigma_pq: float


def kernel_moments(g: GaussianParams, nodes: int = 3201,
                   half_width_sigmas: float = 12.0,
                   stability_tol: float = 1e-10,
                   max_doublings: int = 4) -> KernelMoments:
    """Quadrature moments of the kernel; the independent check of the closed forms.

    Position moments come from the diagonal kernel; momentum moments from
    analytic x-derivatives of the off-diagonal kernel at coincidence
    (exact polynomial-times-Gaussian integrands, no finite differences).
    The node count doubles until all six moments are stable.
    """
    d = g.width
    center = g.b1.real / d
    width = 1.0 / np.sqrt(2.0 * d)
    lo, hi = center - half_width_sigmas * width, center + half_width_sigmas * width

    def evaluate(num_nodes: int) -> KernelMoments:
        x = np.linspace(lo, hi, num_nodes)
        norm_const = normalization(g)
        diag = norm_const * np.exp(-d * x**2 + 2.0 * g.b1.real * x)
        # d/dx of the exponent of <x|rho|y> at y = x.
        fx = -2.0 * np.conj(g.a1) * x + g.a2 * x + np.conj(g.b1)
        fxx = -2.0 * np.conj(g.a1)
        norm = np.trapezoid(diag, x)
        mean_q = np.trapezoid(x * diag, x) / norm
        mean_p_c = np.trapezoid(-1j * fx * diag, x) / norm
        p2 = np.trapezoid(-(fxx + fx**2) * diag, x) / norm
        qp = np.trapezoid(x * (-1j * fx) * diag, x) / norm
        q2 = np.trapezoid(x * x * diag, x) / norm
        if max(abs(mean_p_c.imag), abs(p2.imag)) > 1e-9:
            raise QuadratureUnstable("momentum moments carry imaginary residue")
        mean_p = mean_p_c.real
        return KernelMoments(
            norm=float(norm),
            mean_q=float(mean_q),
            mean_p=float(mean_p),
            sigma_qq=float(q2 - mean_q**2),
            sigma_pp=float(p2.real - mean_p**2),
            sigma_pq=float(qp.real - mean_p * mean_q),
        )

    previous = evaluate(nodes)
    for _ in range(max_doublings):
        nodes = 2 * nodes - 1
        current = evaluate(nodes)
        drift = max(
            abs(getattr(current, f) - getattr(previous, f))
            for f in ("norm", "mean_q", "mean_p", "sigma_qq", "sigma_pp", "sigma_pq")
        )
        if drift < stability_tol:
            return current
        previous = current
    raise QuadratureUnstable(f"moments not stable after {max_doublings} doublings")
