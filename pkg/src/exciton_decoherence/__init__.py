"""Size-dependent spontaneous-emission decoherence of excitons in spherical
semiconductor microcrystallites."""

__version__ = "0.1.0"

from .constants import CONSTANTS, PhysicalConstants
from .materials import (
    CrystalliteConfig,
    Material,
    ValidityReport,
    builtin_materials,
    check_validity,
    get_material,
    load_material,
)
from .core import (
    DecoherenceProfile,
    cat_characteristic_time,
    cat_decoherence_factor,
    coherent_superposition_factor,
    decoherence_profile,
    exciton_amplitude_factor,
    gamma_s,
    qubit_decoherence_factor,
    transition_energy,
    wavelength,
)
from .errors import (
    ConfigurationError,
    DomainError,
    IntegrationError,
    MaterialError,
    MaterialFileError,
    TruncationError,
)
