"""Reduced density matrices of the exciton mode in a truncated Fock basis."""
import csv
import math
from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.special import gammaln
from scipy.stats import poisson

from .core import environment_overlap, exciton_amplitude_factor, population_factor, qubit_decoherence_factor
from .errors import DomainError, TruncationError

TAIL_TOL = 1e-12
HERMITIAN_TOL = 1e-12
EIG_TOL = 1e-10
TRACE_TOL = 1e-10


def recommended_nmax(nbar):
    """ceil(nbar + 10 sqrt(nbar) + 20); Poisson tail then far below 1e-12."""
    return math.ceil(nbar + 10.0 * math.sqrt(nbar) + 20.0)


def poisson_tail(nbar, n_max):
    """Probability weight of a coherent state above level n_max."""
    return float(poisson.sf(n_max, nbar)) if nbar > 0 else 0.0


@dataclass(frozen=True)
class FockBasis:
    n_max: int

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise ValueError(f"n_max must be an integer >= 1, got {self.n_max}")

    @property
    def dim(self):
        return self.n_max + 1

    @classmethod
    def for_nbar(cls, nbar):
        return cls(recommended_nmax(nbar))

    def check_amplitude(self, alpha):
        nbar = abs(complex(alpha)) ** 2
        tail = poisson_tail(nbar, self.n_max)
        if tail > TAIL_TOL:
            need = recommended_nmax(nbar)
            raise TruncationError(
                f"n_max={self.n_max} truncates |alpha|^2={nbar:g} (tail {tail:.2e}); use n_max >= {need}", need
            )

    def annihilation(self):
        return np.diag(np.sqrt(np.arange(1, self.dim, dtype=float)), k=1)

    def number(self):
        return np.diag(np.arange(self.dim, dtype=float))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Immutable density-matrix snapshot.

    ``rescale`` records the factor applied to bring an unnormalized input
    state to unit trace (1.0 when nothing was rescaled).
    """

    entries: np.ndarray
    rescale: float = 1.0

    def __post_init__(self):
        a = np.array(self.entries, dtype=complex)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {a.shape}")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def dim(self):
        return self.entries.shape[0]

    @classmethod
    def pure(cls, psi, rescale=1.0):
        psi = np.asarray(psi, dtype=complex)
        return cls(np.outer(psi, psi.conj()), rescale)

    def trace(self):
        return complex(np.trace(self.entries))

    def hermiticity_error(self):
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def min_eigenvalue(self):
        h = 0.5 * (self.entries + self.entries.conj().T)
        return float(np.linalg.eigvalsh(h)[0])

    def check(self, trace=1.0):
        """Raise AssertionError if any density-matrix invariant is broken."""
        herm = self.hermiticity_error()
        if herm > HERMITIAN_TOL:
            raise AssertionError(f"not Hermitian: max |rho - rho^H| = {herm:.3e}")
        tr = self.trace()
        if abs(tr - trace) > TRACE_TOL:
            raise AssertionError(f"trace {tr} differs from {trace}")
        lo = self.min_eigenvalue()
        if lo < -EIG_TOL:
            raise AssertionError(f"negative eigenvalue {lo:.3e}")
        return self


def coherent_fock_amplitudes(alpha, basis):
    """<n|alpha> = exp(-|alpha|^2/2) alpha^n / sqrt(n!) for n = 0..n_max."""
    alpha = complex(alpha)
    basis.check_amplitude(alpha)
    n = np.arange(basis.dim)
    out = np.zeros(basis.dim, dtype=complex)
    out[0] = 1.0
    if alpha == 0:
        return out
    # log-magnitude form avoids overflow of alpha^n and n! at large n
    logmag = -0.5 * abs(alpha) ** 2 + n * math.log(abs(alpha)) - 0.5 * gammaln(n + 1)
    return np.exp(logmag + 1j * n * np.angle(alpha))


# --- initial states ---------------------------------------------------------


@dataclass(frozen=True)
class Qubit:
    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(complex(self.alpha)) ** 2 + abs(complex(self.beta)) ** 2
        if abs(norm - 1.0) > 1e-10:
            raise DomainError(f"qubit amplitudes not normalized: |alpha|^2+|beta|^2 = {norm!r}")


@dataclass(frozen=True)
class TwoCoherent:
    C: complex
    alpha1: complex
    D: complex
    alpha2: complex

    def norm_sq(self):
        C, D = complex(self.C), complex(self.D)
        a1, a2 = complex(self.alpha1), complex(self.alpha2)
        overlap_21 = np.exp(-abs(a1) ** 2 / 2 - abs(a2) ** 2 / 2 + a2.conjugate() * a1)  # <a2|a1>
        return float((abs(C) ** 2 + abs(D) ** 2 + 2.0 * (C * D.conjugate() * overlap_21).real))


@dataclass(frozen=True)
class Cat:
    alpha: complex
    parity: str = "even"

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise DomainError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if complex(self.alpha) == 0 and self.parity == "odd":
            raise DomainError("odd cat with alpha = 0 is the zero vector")

    @property
    def normalization(self):
        sign = 1.0 if self.parity == "even" else -1.0
        return (2.0 + sign * 2.0 * math.exp(-2.0 * abs(complex(self.alpha)) ** 2)) ** -0.5

    def as_two_coherent(self):
        N = self.normalization
        a = complex(self.alpha)
        return TwoCoherent(N, a, N if self.parity == "even" else -N, -a)


InitialState = Union[Qubit, TwoCoherent, Cat]


def _check_time(t):
    if not t >= 0:
        raise DomainError(f"time must be >= 0, got {t}")


def evolve_qubit(profile, alpha, beta, t, basis=FockBasis(1)):
    state = Qubit(alpha, beta)
    _check_time(t)
    a, b = complex(state.alpha), complex(state.beta)
    eta = population_factor(profile, t)
    coh = a * b.conjugate() * qubit_decoherence_factor(profile, t) * np.exp(1j * profile.omega * t)
    rho = np.zeros((basis.dim, basis.dim), dtype=complex)
    rho[1, 1] = eta * abs(b) ** 2
    rho[0, 0] = 1.0 - rho[1, 1]
    rho[0, 1] = coh
    rho[1, 0] = coh.conjugate()
    return DensityMatrix(rho)


def evolve_two_coherent(profile, C, alpha1, D, alpha2, t, basis=None):
    """Two-branch state C|alpha1> + D|alpha2> after time t, unit trace.

    Branch amplitudes shrink to u(t) alpha_i; the cross dyads carry the
    radiation-field overlap of the two branches.
    """
    _check_time(t)
    state = TwoCoherent(complex(C), complex(alpha1), complex(D), complex(alpha2))
    if basis is None:
        basis = FockBasis.for_nbar(max(abs(state.alpha1), abs(state.alpha2)) ** 2)
    basis.check_amplitude(state.alpha1)
    basis.check_amplitude(state.alpha2)
    norm_sq = state.norm_sq()
    if not norm_sq > 0:
        raise DomainError("two-coherent superposition has zero norm")
    rescale = 1.0 / norm_sq
    u = exciton_amplitude_factor(profile, t)
    v1 = coherent_fock_amplitudes(u * state.alpha1, basis)
    v2 = coherent_fock_amplitudes(u * state.alpha2, basis)
    C, D = state.C, state.D
    w12 = C * D.conjugate() * environment_overlap(profile, state.alpha1, state.alpha2, t)
    rho = (
        abs(C) ** 2 * np.outer(v1, v1.conj())
        + w12 * np.outer(v1, v2.conj())
        + np.conj(w12) * np.outer(v2, v1.conj())
        + abs(D) ** 2 * np.outer(v2, v2.conj())
    )
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(rescale * rho, rescale)


def evolve_cat(profile, alpha, parity, t, basis=None):
    s = Cat(complex(alpha), parity).as_two_coherent()
    return evolve_two_coherent(profile, s.C, s.alpha1, s.D, s.alpha2, t, basis)


def evolve(profile, state, t, basis=None):
    """Dispatch on the initial-state family."""
    if isinstance(state, Qubit):
        return evolve_qubit(profile, state.alpha, state.beta, t, basis or FockBasis(1))
    if isinstance(state, Cat):
        return evolve_cat(profile, state.alpha, state.parity, t, basis)
    if isinstance(state, TwoCoherent):
        return evolve_two_coherent(profile, state.C, state.alpha1, state.D, state.alpha2, t, basis)
    raise TypeError(f"unsupported initial state {state!r}")


def initial_density_matrix(state, basis):
    """Density matrix of ``state`` at t = 0 (unit trace)."""
    if isinstance(state, Qubit):
        psi = np.zeros(basis.dim, dtype=complex)
        psi[0], psi[1] = state.alpha, state.beta
        return DensityMatrix.pure(psi)
    if isinstance(state, Cat):
        state = state.as_two_coherent()
    psi = state.C * coherent_fock_amplitudes(state.alpha1, basis) + state.D * coherent_fock_amplitudes(
        state.alpha2, basis
    )
    rescale = 1.0 / state.norm_sq()
    return DensityMatrix(rescale * np.outer(psi, psi.conj()), rescale)


# --- observables --------------------------------------------------------------


def purity(rho):
    m = rho.entries
    return float(np.real(np.sum(m * m.T)))


def populations(rho):
    return np.real(np.diag(rho.entries)).copy()


def coherence_magnitude(rho, m, n):
    if not (0 <= m < rho.dim and 0 <= n < rho.dim):
        raise DomainError(f"index ({m}, {n}) outside basis of dimension {rho.dim}")
    return float(abs(rho.entries[m, n]))


def fidelity_to_pure(rho, psi):
    psi = np.asarray(psi, dtype=complex)
    return float(np.real(psi.conj() @ rho.entries @ psi))


def parity_populations(rho):
    """Total weight on even and on odd Fock levels."""
    p = populations(rho)
    return float(p[0::2].sum()), float(p[1::2].sum())


def cat_coherence_from_parity(rho, profile, alpha, parity, t):
    """Read the cross-dyad weight F of an evolved cat out of its odd-level
    (even cat) or even-level (odd cat) population.

    With branch vectors |+-u alpha>, the parity projectors split rho exactly:
    the "wrong-parity" weight equals N^2 (1 - F)(1 -+ s) with
    s = exp(-2|u alpha|^2). No Gram-matrix inversion is needed, which keeps
    the read-out well conditioned until s gets close to 1.
    """
    cat = Cat(complex(alpha), parity)
    N = cat.normalization
    shrink = abs(exciton_amplitude_factor(profile, t)) ** 2 * abs(complex(alpha)) ** 2
    p_even, p_odd = parity_populations(rho)
    if parity == "even":
        return 1.0 - p_odd / (N**2 * -math.expm1(-2.0 * shrink))
    return 1.0 - p_even / (N**2 * (1.0 + math.exp(-2.0 * shrink)))


def dyad_weights(rho, v1, v2):
    """Weights W with rho = sum_ij W_ij |v_i><v_j|, by Gram-matrix projection."""
    V = np.column_stack([v1, v2])
    G_inv = np.linalg.inv(V.conj().T @ V)
    return G_inv @ (V.conj().T @ rho.entries @ V) @ G_inv


# --- matrix dump ----------------------------------------------------------------


def write_matrix_csv(rho, path):
    """Row-major dump with columns row, col, re, im."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["row", "col", "re", "im"])
        for i in range(rho.dim):
            for j in range(rho.dim):
                z = rho.entries[i, j]
                w.writerow([i, j, f"{z.real:.17g}", f"{z.imag:.17g}"])


def read_matrix_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [r for r in csv.reader(line for line in fh if not line.startswith("#"))]
    header, body = rows[0], rows[1:]
    if header != ["row", "col", "re", "im"]:
        raise ValueError(f"unexpected matrix header {header}")
    dim = math.isqrt(len(body))
    if dim * dim != len(body):
        raise ValueError(f"{len(body)} entries is not a square matrix")
    m = np.zeros((dim, dim), dtype=complex)
    for r, c, re, im in body:
        m[int(r), int(c)] = complex(float(re), float(im))
    return DensityMatrix(m)
