"""Fixed snapshot of the physical constants used everywhere.

Units: energies in eV, lengths in angstrom, times in seconds. The table is
frozen on purpose so that golden values never move with CODATA revisions.
"""
import hashlib
import math
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    hbar: float = 6.582119569e-16  # eV s
    hbar_c: float = 1973.269804  # eV A
    hbar2_over_2m0: float = 3.80998  # eV A^2, hbar^2 / (2 m_0)

    @property
    def c(self):
        """Speed of light in A/s."""
        return self.hbar_c / self.hbar

    @property
    def m0(self):
        """Electron rest mass in eV s^2 / A^2 (only defined through hbar^2/2m0)."""
        return self.hbar**2 / (2.0 * self.hbar2_over_2m0)

    @property
    def hc(self):
        """Planck constant times c, eV A."""
        return 2.0 * math.pi * self.hbar_c

    def digest(self):
        """Short sha256 of the table, embedded in run manifests."""
        text = ";".join(f"{k}={v!r}" for k, v in sorted(asdict(self).items()))
        return hashlib.sha256(text.encode()).hexdigest()[:16]


CONSTANTS = PhysicalConstants()

PS_PER_S = 1e12


def seconds_to_ps(t):
    return t * PS_PER_S


def ps_to_seconds(t):
    return t / PS_PER_S
