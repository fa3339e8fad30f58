"""Single-excitation exciton + discretized radiation continuum.

In the one-quantum sector the Heisenberg equations for B and A_k become
linear amplitude equations. With a_k = A_k exp(-i Delta_k t) they are
generated by the Hermitian matrix

    [[0,   g^T      ],
     [g,   diag(Delta)]]

so the propagation is done exactly by diagonalization; the exciton
amplitude |c(t)| should decay as exp(-gamma_amp t) once the memory of the
band has died out.
"""
import math
from dataclasses import dataclass

import numpy as np

from ..errors import ConfigurationError


@dataclass(frozen=True)
class ModeGrid:
    n_modes: int
    bandwidth: float  # half-width around Omega, 1/s
    couplings: np.ndarray  # 1/s
    detunings: np.ndarray  # omega_k - Omega, 1/s

    @property
    def spacing(self):
        return 2.0 * self.bandwidth / self.n_modes

    @property
    def recurrence_time(self):
        return 2.0 * math.pi / self.spacing

    def spectral_density(self):
        """Mean of 2 pi g_k^2 / spacing; equals the golden-rule population rate."""
        return float(2.0 * math.pi * np.mean(self.couplings**2) / self.spacing)


def build_mode_grid(profile, n_modes=2000, bandwidth_factor=100.0, window=None, gamma_pop=None):
    """Flat band of ``n_modes`` modes on [-B, B], B = bandwidth_factor * gamma_pop.

    ``window`` (seconds) defaults to 5 / gamma_amp and must fit inside one
    recurrence time. ``gamma_pop`` overrides the coupling strength only
    (0 gives a decoupled grid).
    """
    if bandwidth_factor < 50:
        raise ConfigurationError(f"bandwidth_factor must be >= 50, got {bandwidth_factor}")
    scale = profile.gamma_pop
    rate = scale if gamma_pop is None else gamma_pop
    if window is None:
        window = 5.0 / profile.gamma_amp
    bandwidth = bandwidth_factor * scale
    spacing = 2.0 * bandwidth / n_modes
    recurrence = 2.0 * math.pi / spacing
    if recurrence <= window:
        need = math.ceil(window * bandwidth / math.pi) + 1
        raise ConfigurationError(
            f"recurrence time {recurrence:.3e} s of {n_modes} modes is shorter than the "
            f"{window:.3e} s window; use n_modes > {need}"
        )
    if n_modes < 100 or n_modes % 2:
        raise ConfigurationError(f"n_modes must be an even number >= 100, got {n_modes}")
    detunings = -bandwidth + spacing * (np.arange(n_modes) + 0.5)
    couplings = np.full(n_modes, math.sqrt(rate * spacing / (2.0 * math.pi)))
    return ModeGrid(n_modes, bandwidth, couplings, detunings)


@dataclass(frozen=True)
class SingleExcitationSeries:
    times: np.ndarray
    exciton: np.ndarray  # complex, shape (steps,)
    modes: object  # complex (steps, n_modes) or None

    def norm_sq(self):
        if self.modes is None:
            raise ValueError("mode amplitudes were not kept")
        return np.abs(self.exciton) ** 2 + np.sum(np.abs(self.modes) ** 2, axis=1)


def simulate_single_excitation(grid, t_max, steps=301, keep_modes=True):
    """Start from one exciton and the field vacuum; sample ``steps`` times on [0, t_max]."""
    n = grid.n_modes
    H = np.zeros((n + 1, n + 1))
    H[0, 1:] = grid.couplings
    H[1:, 0] = grid.couplings
    H[np.arange(1, n + 1), np.arange(1, n + 1)] = grid.detunings
    # diagonalize in units of the band half-width to keep entries O(1)
    unit = grid.bandwidth
    evals, evecs = np.linalg.eigh(H / unit)
    times = np.linspace(0.0, t_max, steps)
    phases = np.exp(-1j * np.outer(evals, times * unit))  # (n+1, steps)
    weights = evecs[0, :].conj()  # projection of the initial state |exciton>
    coeffs = weights[:, None] * phases
    exciton = evecs[0, :] @ coeffs
    modes = (evecs[1:, :] @ coeffs).T if keep_modes else None
    return SingleExcitationSeries(times, exciton, modes)


@dataclass(frozen=True)
class DecayFit:
    rate: float
    residual: float  # rms of log-magnitude residuals
    n_points: int


def fit_decay_rate(times, values=None, window=None):
    """Least-squares slope of log|values| against time.

    Accepts either arrays or a :class:`SingleExcitationSeries`. ``window``
    is an inclusive (t_lo, t_hi) range.
    """
    if isinstance(times, SingleExcitationSeries):
        times, values = times.times, times.exciton
    t = np.asarray(times, dtype=float)
    mag = np.abs(np.asarray(values))
    if window is not None:
        sel = (t >= window[0]) & (t <= window[1])
        t, mag = t[sel], mag[sel]
    if len(t) < 2:
        raise ValueError("need at least two points in the fit window")
    if np.any(mag <= 0):
        raise ValueError("non-positive magnitude inside the fit window")
    y = np.log(mag)
    slope, intercept = np.polyfit(t, y, 1)
    resid = y - (slope * t + intercept)
    return DecayFit(-float(slope), float(np.sqrt(np.mean(resid**2))), len(t))
