"""Unimodal Gaussian states, quadratic Hamiltonians and their partition function.

A single-mode Gaussian state is held either as position-kernel parameters
(a1, a2, b1) or as its (p, q) covariance matrix plus first moments.  The
partition function of a quadratic Hamiltonian

    H = omega1 p^2 + omega2 p q + omega2* q p + omega3 q^2

is evaluated in closed form through its su(1,1) decomposition, with the
quadrature frequency convention p = i sqrt(omega0/2)(adag - a),
q = (a + adag)/sqrt(2 omega0).

Note on first moments: the mean momentum closed form used here is
(a2 Im(b1) - 2 Im(a1* b1)) / (2 Re(a1) - a2).  It was arbitrated against
the derivative-quadrature oracle (see fock.kernel_moments and the gaussian
tests), under the kernel convention that reproduces the covariance entries
sigma_pq = Im(a1)/(2 Re(a1) - a2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .entropy import DeltaRecord, delta_from_scalars
from .errors import (
    DivergentPartition,
    DomainError,
    HyperbolicDomain,
    InvalidGaussian,
    NegativeBeta,
    UnphysicalCovariance,
    ZeroTemperature,
)

_MARGIN = 1e-12
_DENOM_EPS = 1e-14
# sinh overflows double precision near phi ~ 710; past this xi is huge anyway.
_PHI_OVERFLOW = 350.0


@dataclass(frozen=True)
class GaussianParams:
    """Kernel parameters of rho(q', q) = N exp(-a1 q^2 - a1* q'^2 + a2 q q' + b1 q + b1* q')."""

    a1: complex
    a2: float
    b1: complex

    def __post_init__(self) -> None:
        if abs(float(np.imag(self.a2))) > 0.0:
            raise InvalidGaussian("a2 must be real")
        if self.a2 < 0.0:
            raise InvalidGaussian("a2 < 0 gives purity > 1 (unphysical)")
        if 2.0 * self.a1.real - self.a2 <= _MARGIN:
            raise InvalidGaussian("2 Re(a1) > a2 is required for normalizability")

    @property
    def width(self) -> float:
        """2 Re(a1) - a2, the diagonal-kernel Gaussian decay constant."""
        return 2.0 * self.a1.real - self.a2


@dataclass(frozen=True)
class CovarianceState:
    sigma_pp: float
    sigma_qq: float
    sigma_pq: float
    mean_p: float = 0.0
    mean_q: float = 0.0

    def __post_init__(self) -> None:
        if self.sigma_pp <= 0.0 or self.sigma_qq <= 0.0:
            raise UnphysicalCovariance("diagonal covariance entries must be positive")
        if self.determinant < 0.25 - _MARGIN:
            raise UnphysicalCovariance(
                f"det sigma = {self.determinant} violates the uncertainty bound"
            )

    @property
    def determinant(self) -> float:
        return self.sigma_pp * self.sigma_qq - self.sigma_pq**2


@dataclass(frozen=True)
class QuadraticHamiltonian:
    omega0: float
    omega1: float
    omega2: complex
    omega3: float

    def __post_init__(self) -> None:
        if self.omega0 <= 0.0:
            raise ValueError("omega0 must be positive")
        values = (self.omega0, self.omega1, self.omega2, self.omega3)
        if not all(np.isfinite(v) for v in np.atleast_1d(values).ravel()):
            raise ValueError("Hamiltonian parameters must be finite")

    @property
    def gamma1(self) -> complex:
        return (self.omega3 / self.omega0 - self.omega0 * self.omega1
                - 2j * self.omega2.real) / 2.0

    @property
    def k0_coefficient(self) -> float:
        """omega0*omega1 + omega3/omega0, the coefficient of the number-like generator."""
        return self.omega0 * self.omega1 + self.omega3 / self.omega0

    @property
    def effective_frequency_sq(self) -> float:
        return self.k0_coefficient**2 - 4.0 * abs(self.gamma1) ** 2


@dataclass(frozen=True)
class Su11Coefficients:
    gamma1: complex
    phi: float
    A_plus: complex
    A_minus: complex
    A_zero: float
    xi: float
    zeta: float


def normalization(g: GaussianParams) -> float:
    """Normalization prefactor enforcing unit trace of the kernel."""
    d = g.width
    mean_term = (2.0 * g.b1.real) ** 2 / (4.0 * d)
    return math.sqrt(d / math.pi) * math.exp(-mean_term)


def covariance_from_params(g: GaussianParams) -> CovarianceState:
    """Covariance entries and first moments of the kernel state."""
    d = g.width
    return CovarianceState(
        sigma_pp=(4.0 * abs(g.a1) ** 2 - g.a2**2) / (2.0 * d),
        sigma_qq=1.0 / (2.0 * d),
        sigma_pq=g.a1.imag / d,
        mean_q=g.b1.real / d,
        mean_p=(g.a2 * g.b1.imag - 2.0 * (g.a1.conjugate() * g.b1).imag) / d,
    )


def purity(c: CovarianceState) -> float:
    """mu = 1/(2 sqrt(det sigma)) in (0, 1]."""
    det = c.determinant
    if det < 0.25 - _MARGIN:
        raise UnphysicalCovariance(f"det sigma = {det} < 1/4")
    return min(1.0, 1.0 / (2.0 * math.sqrt(det)))


def entropy_gaussian(mu: float) -> float:
    """von Neumann entropy of a Gaussian state of purity mu (nats)."""
    if not 0.0 < mu <= 1.0:
        raise DomainError(f"purity must lie in (0, 1], got {mu}")
    if mu == 1.0:
        return 0.0
    return ((1.0 - mu) / (2.0 * mu)) * math.log((1.0 + mu) / (1.0 - mu)) \
        - math.log(2.0 * mu / (1.0 + mu))


def mean_energy(c: CovarianceState, h: QuadraticHamiltonian) -> float:
    """Tr(Omega sigma) + <zeta> Omega <zeta~> + Im(omega2)."""
    w2r = h.omega2.real
    return (
        h.omega1 * c.sigma_pp + h.omega3 * c.sigma_qq + 2.0 * w2r * c.sigma_pq
        + h.omega1 * c.mean_p**2 + h.omega3 * c.mean_q**2
        + 2.0 * w2r * c.mean_p * c.mean_q
        + h.omega2.imag
    )


def _stable_pieces(h: QuadraticHamiltonian, beta: float):
    """Overflow-safe building blocks of the disentangled exponential.

    Returns (phi, ln_den, u, xi) where ln_den = ln(cosh phi + r sinh phi),
    u = sinh phi / (cosh phi + r sinh phi) and r is the ratio of the
    number-generator coefficient to the effective frequency.
    """
    if beta <= 0.0:
        raise NegativeBeta("the partition function requires beta > 0")
    weff2 = h.effective_frequency_sq
    if weff2 <= 0.0:
        raise HyperbolicDomain(
            "effective frequency squared <= 0: no convergent partition function"
        )
    weff = math.sqrt(weff2)
    phi = beta * weff
    r = h.k0_coefficient / weff
    e2 = math.exp(-2.0 * phi)
    den_s = (1.0 + r) + (1.0 - r) * e2
    if den_s <= 0.0:
        raise DivergentPartition("exponential trace diverges (negative mode weight)")
    ln_den = phi + math.log(0.5 * den_s)
    u = (1.0 - e2) / den_s
    if phi > _PHI_OVERFLOW:
        xi = math.inf if abs(h.gamma1) > 0.0 else 0.0
    else:
        xi = (r * r - 1.0) * math.sinh(phi) ** 2
    return phi, ln_den, u, xi


def su11_coefficients(h: QuadraticHamiltonian, beta: float) -> Su11Coefficients:
    """Coefficients of e^{-beta H} = e^{-beta Im(w2)} e^{A+ K+} e^{ln(A0) K0} e^{A- K-}."""
    phi, ln_den, u, xi = _stable_pieces(h, beta)
    weff = math.sqrt(h.effective_frequency_sq)
    a_zero = math.exp(-2.0 * ln_den)
    a_plus = (-2.0 * h.gamma1.conjugate() / weff) * u
    a_minus = (-2.0 * h.gamma1 / weff) * u
    return Su11Coefficients(
        gamma1=h.gamma1,
        phi=phi,
        A_plus=a_plus,
        A_minus=a_minus,
        A_zero=a_zero,
        xi=xi,
        zeta=a_zero,
    )


def log_partition_function(h: QuadraticHamiltonian, beta: float) -> float:
    """ln Z = ln[zeta^{1/4} e^{-beta Im(w2)} / (1 - 2 zeta^{1/2} + zeta(1-xi))^{1/2}]."""
    phi, ln_den, u, xi = _stable_pieces(h, beta)
    sqrt_zeta = math.exp(-ln_den)
    r = h.k0_coefficient / math.sqrt(h.effective_frequency_sq)
    zeta_xi = (r * r - 1.0) * u * u
    denom = 1.0 - 2.0 * sqrt_zeta + sqrt_zeta * sqrt_zeta - zeta_xi
    if denom <= _DENOM_EPS:
        raise DivergentPartition(f"denominator {denom:.3e} is not positive")
    if xi < 1.0:
        # Growth bound of the diagonal-element sum (Legendre asymptotics).
        z = 1.0 / math.sqrt(1.0 - xi)
        growth = math.sqrt(max(sqrt_zeta**2 - zeta_xi, 0.0)) \
            * (z + math.sqrt(max(z * z - 1.0, 0.0)))
        if growth >= 1.0:
            raise DivergentPartition(f"diagonal-element sum diverges (ratio {growth})")
    return -0.5 * ln_den - beta * h.omega2.imag - 0.5 * math.log(denom)


def partition_function(h: QuadraticHamiltonian, beta: float) -> float:
    return math.exp(log_partition_function(h, beta))


def legendre_pn(n: int, z: float) -> float:
    """P_n(z) by the three-term recurrence; stable for z >= 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > 500:
        raise DomainError("recurrence order capped at 500")
    p_prev, p = 1.0, z
    if n == 0:
        return p_prev
    for m in range(1, n):
        p_prev, p = p, ((2 * m + 1) * z * p - m * p_prev) / (m + 1)
    return p


def fock_diagonal_element(h: QuadraticHamiltonian, beta: float, n: int) -> float:
    """<n| e^{-beta H} |n> = e^{-beta Im(w2)} A0^{1/4} (A0(1-xi))^{n/2} P_n(1/sqrt(1-xi))."""
    phi, ln_den, u, xi = _stable_pieces(h, beta)
    if xi >= 1.0:
        raise DomainError(f"xi = {xi} >= 1: Legendre argument is not real")
    r = h.k0_coefficient / math.sqrt(h.effective_frequency_sq)
    a_zero = math.exp(-2.0 * ln_den)
    a_zero_xi = (r * r - 1.0) * u * u
    t = math.sqrt(max(a_zero - a_zero_xi, 0.0))
    z = 1.0 / math.sqrt(1.0 - xi)
    return math.exp(-beta * h.omega2.imag) * a_zero**0.25 * t**n * legendre_pn(n, z)


def gaussian_delta(c: CovarianceState, h: QuadraticHamiltonian,
                   temperature: float) -> DeltaRecord:
    """Distance of a Gaussian state from the thermal state of (H, T), T > 0."""
    if temperature == 0.0:
        raise ZeroTemperature("T = 0 is not supported")
    if temperature < 0.0:
        raise NegativeBeta("T < 0 diverges for Hamiltonians unbounded above")
    energy = mean_energy(c, h)
    entropy = entropy_gaussian(purity(c))
    log_z = log_partition_function(h, 1.0 / temperature)
    return delta_from_scalars(energy, entropy, log_z, temperature)


def random_gaussian_params(seed: int, displaced: bool = True) -> GaussianParams:
    """Seeded valid kernel parameters; property-test fuel."""
    rng = np.random.default_rng(seed)
    a2 = float(rng.uniform(0.0, 1.5))
    a1 = complex((a2 + rng.uniform(0.2, 2.5)) / 2.0, rng.normal(0.0, 0.8))
    b1 = complex(rng.normal(0.0, 1.0), rng.normal(0.0, 1.0)) if displaced else 0j
    return GaussianParams(a1=a1, a2=a2, b1=b1)


def random_quadratic_hamiltonian(seed: int) -> QuadraticHamiltonian:
    """Seeded Hamiltonian with a convergent partition function.

    The effective frequency squared is 4(w1 w3 - Re(w2)^2), so sampling
    Re(w2)^2 < w1 w3 guarantees the hyperbolic domain.
    """
    rng = np.random.default_rng(seed)
    omega1 = float(rng.uniform(0.3, 1.2))
    omega3 = float(rng.uniform(0.3, 1.2))
    bound = 0.6 * math.sqrt(omega1 * omega3)
    omega2 = complex(rng.uniform(-bound, bound), rng.normal(0.0, 0.3))
    return QuadraticHamiltonian(
        omega0=float(rng.uniform(0.5, 2.0)),
        omega1=omega1,
        omega2=omega2,
        omega3=omega3,
    )
