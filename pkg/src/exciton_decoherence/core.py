"""Closed-form decoherence quantities for a crystallite of radius R0.

Rates are in 1/s, times in s, energies in eV, lengths in A. Complex
amplitudes are plain Python ``complex``.
"""
import cmath
import math
from dataclasses import dataclass

from .constants import CONSTANTS
from .errors import DomainError


def transition_energy(cfg, constants=CONSTANTS):
    """hbar*Omega = E_g - E_b + hbar^2 pi^2 / (2 M R0^2), in eV."""
    m = cfg.material
    confinement = constants.hbar2_over_2m0 * math.pi**2 / (m.M * cfg.R0**2)
    return m.E_g - m.E_b_exc + confinement


def angular_frequency(cfg, constants=CONSTANTS):
    return transition_energy(cfg, constants) / constants.hbar


def wavelength(cfg, constants=CONSTANTS):
    return constants.hc / transition_energy(cfg, constants)


def gamma_s(cfg, constants=CONSTANTS):
    """Single-dipole emission rate 4 |mu_cv|^2 Omega^3 / (3 hbar (2 pi c)^3)."""
    omega = angular_frequency(cfg, constants)
    return 4.0 * cfg.material.mu_cv_sq * omega**3 / (3.0 * constants.hbar * (2.0 * math.pi * constants.c) ** 3)


def superradiance_factor(cfg):
    return 64.0 * math.pi * (cfg.R0 / cfg.material.a_B) ** 3


def tau_closed_form(cfg, constants=CONSTANTS):
    """Characteristic time written directly in the material parameters.

    Kept in its expanded form (explicit masses, no Omega) so that it is an
    independent route to the same number as ``1/gamma_amp``.
    """
    m = cfg.material
    hbar, c, R0, a_B = constants.hbar, constants.c, cfg.R0, m.a_B
    M = m.M * constants.m0
    num = 3.0 * hbar**4 * math.pi**2 * c**3 * a_B**3 * M**3 * R0**3
    den = 2.0 * m.mu_cv_sq * (2.0 * M * R0**2 * (m.E_g - m.E_b_exc) + hbar**2 * math.pi**2) ** 3
    return num / den


@dataclass(frozen=True)
class DecoherenceProfile:
    omega: float
    hbar_omega: float
    lambda_: float
    gamma_s: float
    gamma_amp: float
    gamma_pop: float
    tau: float
    superradiance_factor: float


CONSISTENCY_RTOL = 1e-12


def decoherence_profile(cfg, constants=CONSTANTS):
    hw = transition_energy(cfg, constants)
    gs = gamma_s(cfg, constants)
    sf = superradiance_factor(cfg)
    gamma_amp = 0.5 * sf * gs
    tau = 1.0 / gamma_amp
    tau_direct = tau_closed_form(cfg, constants)
    if not math.isclose(tau, tau_direct, rel_tol=CONSISTENCY_RTOL, abs_tol=0.0):
        raise ArithmeticError(f"tau mismatch: 1/gamma_amp={tau!r} vs closed form {tau_direct!r}")
    return DecoherenceProfile(
        omega=hw / constants.hbar,
        hbar_omega=hw,
        lambda_=constants.hc / hw,
        gamma_s=gs,
        gamma_amp=gamma_amp,
        gamma_pop=2.0 * gamma_amp,
        tau=tau,
        superradiance_factor=sf,
    )


def _check_time(t):
    if not t >= 0:
        raise DomainError(f"time must be >= 0, got {t}")


def qubit_decoherence_factor(profile, t):
    """Off-diagonal factor exp(-t/tau) of a vacuum/one-exciton qubit."""
    _check_time(t)
    return math.exp(-profile.gamma_amp * t)


def population_factor(profile, t):
    """One-exciton survival probability exp(-gamma_pop t); equals F(t)^2."""
    _check_time(t)
    return math.exp(-profile.gamma_pop * t)


def exciton_amplitude_factor(profile, t):
    """u(t) = exp(-gamma_amp t - i Omega t)."""
    _check_time(t)
    return cmath.exp(complex(-profile.gamma_amp * t, -profile.omega * t))


def _overlap_exponent(alpha1, alpha2):
    """-|a1|^2/2 - |a2|^2/2 + a1 a2*, with the real part written as -|a1 - a2|^2/2
    so it can never round to a positive value."""
    alpha1, alpha2 = complex(alpha1), complex(alpha2)
    return complex(-abs(alpha1 - alpha2) ** 2 / 2, (alpha1 * alpha2.conjugate()).imag)


def coherent_superposition_factor(profile, alpha1, alpha2, t):
    """Decoherence factor of C|alpha1> + D|alpha2>, complex in general.

    F(t) = exp{[-|a1|^2/2 - |a2|^2/2 + a1 a2*] [1 - exp(-gamma_amp t)]}.
    """
    _check_time(t)
    return cmath.exp(_overlap_exponent(alpha1, alpha2) * -math.expm1(-profile.gamma_amp * t))


def cat_decoherence_factor(profile, alpha, t):
    """F(t) = exp{-2|alpha|^2 [1 - exp(-gamma_amp t)]} for even/odd cats."""
    _check_time(t)
    return math.exp(-2.0 * abs(complex(alpha)) ** 2 * -math.expm1(-profile.gamma_amp * t))


def environment_overlap(profile, alpha1, alpha2, t):
    """Overlap <env_2|env_1> of the radiation-field states left behind by
    |alpha1> and |alpha2>.

    Each branch leaks |alpha|^2 (1 - |u|^2) photons into the field, so the
    overlap carries 1 - exp(-gamma_pop t). This is the weight that keeps the
    two-branch density matrix trace-preserving and equal to the Lindblad
    solution; it differs from :func:`coherent_superposition_factor` at
    intermediate times and agrees with it at t = 0 and t -> infinity.
    """
    _check_time(t)
    return cmath.exp(_overlap_exponent(alpha1, alpha2) * -math.expm1(-profile.gamma_pop * t))


def cat_characteristic_time(profile, alpha):
    """Short-time decay constant tau / (2 |alpha|^2) of a cat coherence."""
    return cat_time_for_nbar(profile, abs(complex(alpha)) ** 2)


def cat_time_for_nbar(profile, nbar):
    """Same as :func:`cat_characteristic_time`, keyed by the mean exciton number."""
    if not nbar > 0:
        raise DomainError("alpha = 0: a vacuum 'cat' has no coherence to lose")
    return profile.tau / (2.0 * nbar)


def cat_characteristic_time_exact(profile, alpha):
    """Time at which the cat factor crosses 1/e, or None if it never does."""
    return cat_exact_time_for_nbar(profile, abs(complex(alpha)) ** 2)


def cat_exact_time_for_nbar(profile, nbar):
    x = 2.0 * nbar
    if x <= 1.0 + 1e-12:  # |alpha|^2 = 1/2 built from a sqrt lands a hair above 1
        return None
    return -profile.tau * math.log1p(-1.0 / x)
