"""Degenerate parametric amplifier worked example.

The amplifier Hamiltonian w0(adag a + 1/2) - k(adag^2 e^{-iwt} + a^2 e^{iwt})
is frozen at a caller-supplied time t and mapped to quadratic-form
coefficients; the probe state is thermal light of mean photon number nbar.
The (T, nbar) surface of the distance parameter has its per-nbar minimum at
the temperature where the thermal state of the amplifier matches the probe
entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import BracketError, DivergentPartition, DomainError
from .gaussian import CovarianceState, QuadraticHamiltonian, gaussian_delta
from .grids import DeltaGrid, GridSpec

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class AmplifierConfig:
    omega0: float = 1.0   # signal frequency
    omega: float = 3.0    # pump frequency
    k: float = 0.1        # interaction constant
    t: float = 0.0        # frozen time
    omega_t: float = 1.0  # thermal-light mode frequency

    def __post_init__(self) -> None:
        if self.omega0 <= 0.0:
            raise ValueError("omega0 must be positive")
        if self.omega_t <= 0.0:
            raise ValueError("omega_t must be positive")
        if self.k < 0.0:
            raise ValueError("k must be >= 0")


@dataclass(frozen=True)
class ThermalLight:
    nbar: float
    omega_t: float = 1.0

    def __post_init__(self) -> None:
        if self.nbar < 0.0:
            raise ValueError("nbar must be >= 0")
        if self.omega_t <= 0.0:
            raise ValueError("omega_t must be positive")


def amplifier_hamiltonian(cfg: AmplifierConfig) -> QuadraticHamiltonian:
    """Quadratic-form coefficients of the amplifier at the frozen time."""
    c = math.cos(cfg.omega * cfg.t)
    s = math.sin(cfg.omega * cfg.t)
    return QuadraticHamiltonian(
        omega0=cfg.omega0,
        omega1=0.5 + (cfg.k / cfg.omega0) * c,
        omega2=complex(cfg.k * s, 0.0),
        omega3=cfg.omega0**2 / 2.0 - cfg.k * cfg.omega0 * c,
    )


def thermal_light_covariance(tl: ThermalLight, omega0: float) -> CovarianceState:
    """sigma = ((1+2 nbar)/2) diag(w0, 1/w0) with zero means."""
    if omega0 <= 0.0:
        raise ValueError("omega0 must be positive")
    scale = (1.0 + 2.0 * tl.nbar) / 2.0
    return CovarianceState(
        sigma_pp=scale * omega0,
        sigma_qq=scale / omega0,
        sigma_pq=0.0,
    )


def nbar_from_temperature(t_prime: float, omega_t: float) -> float:
    """Mean photon number 1/(e^{omega_t/T'} - 1) of light generated at T'."""
    if t_prime <= 0.0:
        raise DomainError(f"T' must be positive, got {t_prime}")
    if omega_t <= 0.0:
        raise DomainError(f"omega_t must be positive, got {omega_t}")
    x = omega_t / t_prime
    if x > 700.0:  # expm1 overflows; n_bar is e^{-x} to double precision
        return math.exp(-x)
    return 1.0 / math.expm1(x)


def amplifier_delta_surface(cfg: AmplifierConfig, T_range: GridSpec,
                            nbar_range: GridSpec,
                            metadata: dict | None = None) -> DeltaGrid:
    """Distance parameter over (T, nbar); divergent cells are flagged, not fatal.

    Carries a per-nbar argmin marker column: 1 at the T row minimizing the
    distance for that nbar, 0 elsewhere.
    """
    temps = T_range.values()
    nbars = nbar_range.values()
    if temps.min() <= 0.0:
        raise DomainError("temperature range must be strictly positive")
    if nbars.min() < 0.0:
        raise DomainError("nbar range must be nonnegative")
    h = amplifier_hamiltonian(cfg)
    cells = _kernels.amplifier_delta_cells(
        temps, nbars, h.omega0, h.omega1, h.omega2.real, h.omega2.imag, h.omega3
    )
    if np.isnan(cells).all():
        raise DivergentPartition("every cell diverged (hyperbolic domain fails)")
    markers = np.zeros(cells.shape, dtype=int)
    for j in range(cells.shape[1]):
        col = cells[:, j]
        if not np.isnan(col).all():
            markers[np.nanargmin(col), j] = 1
    return DeltaGrid(
        axis1_name="T",
        axis2_name="nbar",
        axis1_values=temps,
        axis2_values=nbars,
        cells=cells,
        metadata=metadata or {},
        marker_name="argmin",
        markers=markers,
    )


def _delta_at(cfg: AmplifierConfig, nbar: float, temperature: float) -> float:
    state = thermal_light_covariance(ThermalLight(nbar, cfg.omega_t), cfg.omega0)
    return gaussian_delta(state, amplifier_hamiltonian(cfg), temperature).delta


def delta_argmin_temperature(cfg: AmplifierConfig, nbar: float,
                             bracket: tuple[float, float],
                             rel_tol: float = 1e-6) -> float:
    """Golden-section minimizer of T -> distance(T, nbar) on the bracket."""
    lo, hi = bracket
    if not 0.0 < lo < hi:
        raise BracketError(f"invalid bracket {bracket}")
    if nbar <= 0.0:
        raise DomainError("nbar must be positive")
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc = _delta_at(cfg, nbar, c)
    fd = _delta_at(cfg, nbar, d)
    while (b - a) > rel_tol * max(a, 1e-12):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = _delta_at(cfg, nbar, c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = _delta_at(cfg, nbar, d)
    t_star = 0.5 * (a + b)
    edge = rel_tol * max(t_star, 1.0) * 4.0
    if t_star - lo < edge or hi - t_star < edge:
        raise BracketError("distance is monotone on the bracket (minimum at an end)")
    return t_star
