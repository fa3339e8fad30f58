"""Semiconductor parameter records, crystallite configurations and the
advisory validity check ``a_B << R0 <= lambda``."""
import math
from dataclasses import dataclass, field, fields
from pathlib import Path

from .errors import MaterialError, MaterialFileError

MEV = 1e-3  # eV


@dataclass(frozen=True)
class Material:
    """Bulk parameters of one semiconductor.

    ``dipole_ratio`` is |mu_cv|^2 / (epsilon a_B^3) in eV (Gaussian units), so
    the squared transition dipole comes out in eV A^3.
    """

    name: str
    E_g: float  # eV
    E_b_exc: float  # eV
    a_B: float  # A
    dipole_ratio: float  # eV
    epsilon: float
    m_e: float  # m_0
    m_h: float  # m_0

    def __post_init__(self):
        bad = [
            f.name
            for f in fields(self)
            if f.name != "name" and not (math.isfinite(getattr(self, f.name)) and getattr(self, f.name) > 0)
        ]
        if bad:
            raise MaterialError(f"{self.name}: fields must be finite and > 0: {', '.join(bad)}", bad)
        if self.E_b_exc >= self.E_g:
            raise MaterialError(
                f"{self.name}: E_b_exc ({self.E_b_exc} eV) must be below E_g ({self.E_g} eV)",
                ("E_b_exc", "E_g"),
            )

    @property
    def mu_cv_sq(self):
        """Squared interband dipole, eV A^3."""
        return self.dipole_ratio * self.epsilon * self.a_B**3

    @property
    def M(self):
        """Centre-of-mass mass m_e + m_h in units of m_0."""
        return self.m_e + self.m_h


_BUILTIN = (
    Material("CdS", E_g=2.583, E_b_exc=0.030, a_B=30.0, dipole_ratio=0.25 * MEV, epsilon=8.0, m_e=0.25, m_h=1.6),
    # GaAs gap tabulated as "1.52 meV" in the source table; 1.52 eV is the physical value.
    Material("GaAs", E_g=1.52, E_b_exc=0.005, a_B=100.0, dipole_ratio=0.025 * MEV, epsilon=12.53, m_e=0.0665, m_h=0.45),
)


def builtin_materials():
    return sorted(_BUILTIN, key=lambda m: m.name)


def get_material(name):
    """Case-insensitive lookup among the built-in materials."""
    for m in _BUILTIN:
        if m.name.lower() == name.lower():
            return m
    known = ", ".join(m.name for m in builtin_materials())
    raise KeyError(f"unknown material {name!r}; known materials: {known}")


# file key -> (Material field, multiplier to internal units)
FILE_KEYS = {
    "name": ("name", None),
    "E_g_eV": ("E_g", 1.0),
    "E_b_exc_eV": ("E_b_exc", 1.0),
    "a_B_angstrom": ("a_B", 1.0),
    "dipole_ratio_meV": ("dipole_ratio", MEV),
    "epsilon": ("epsilon", 1.0),
    "m_e": ("m_e", 1.0),
    "m_h": ("m_h", 1.0),
}


def parse_material(text):
    """Parse the ``key = value`` material format (``#`` comments)."""
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise MaterialFileError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in FILE_KEYS:
            raise MaterialFileError(f"unknown key {key!r}", lineno, key)
        if key in values:
            raise MaterialFileError(f"duplicate key {key!r}", lineno, key)
        attr, scale = FILE_KEYS[key]
        if scale is None:
            if not value:
                raise MaterialFileError("empty name", lineno, key)
            values[attr] = value
        else:
            try:
                values[attr] = float(value) * scale
            except ValueError:
                raise MaterialFileError(f"{key}: not a number: {value!r}", lineno, key) from None
    missing = [k for k, (attr, _) in FILE_KEYS.items() if attr not in values]
    if missing:
        raise MaterialFileError(f"missing key(s): {', '.join(missing)}", key=missing[0])
    return Material(**values)


def load_material(path):
    return parse_material(Path(path).read_text(encoding="utf-8"))


def format_material(m):
    """Inverse of :func:`parse_material`."""
    return "\n".join(
        [
            f"# {m.name} parameters",
            f"name = {m.name}",
            f"E_g_eV = {m.E_g!r}  # band gap",
            f"E_b_exc_eV = {m.E_b_exc!r}  # exciton binding energy",
            f"a_B_angstrom = {m.a_B!r}  # bulk exciton Bohr radius",
            f"dipole_ratio_meV = {m.dipole_ratio / MEV!r}  # |mu_cv|^2 / (epsilon a_B^3)",
            f"epsilon = {m.epsilon!r}  # static dielectric constant",
            f"m_e = {m.m_e!r}  # electron mass / m_0",
            f"m_h = {m.m_h!r}  # hole mass / m_0",
            "",
        ]
    )


@dataclass(frozen=True)
class CrystalliteConfig:
    material: Material
    R0: float  # A

    def __post_init__(self):
        if not (math.isfinite(self.R0) and self.R0 > 0):
            raise MaterialError(f"R0 must be finite and > 0, got {self.R0}", ("R0",))

    @property
    def M(self):
        return self.material.M

    @property
    def volume(self):
        return 4.0 / 3.0 * math.pi * self.R0**3


@dataclass(frozen=True)
class ValidityReport:
    ratio_R0_over_aB: float
    ratio_R0_over_lambda: float
    regime_ok: bool
    messages: tuple = field(default_factory=tuple)


DEFAULT_MIN_RATIO = 5.0


def check_validity(cfg, min_ratio=DEFAULT_MIN_RATIO):
    """Advisory check of a_B << R0 <= lambda; never raises."""
    from .core import wavelength

    r_ab = cfg.R0 / cfg.material.a_B
    r_lam = cfg.R0 / wavelength(cfg)
    messages = []
    if r_ab < min_ratio:
        messages.append(
            f"R0 is only {r_ab:.3g} a_B (want >= {min_ratio:g} a_B); bulk-exciton picture is marginal"
        )
    if r_lam > 1.0:
        messages.append(f"R0 exceeds the emission wavelength (R0/lambda = {r_lam:.3g}); polariton effects ignored")
    return ValidityReport(r_ab, r_lam, r_ab >= min_ratio and r_lam <= 1.0, tuple(messages))
