"""Independent numerical checks of the closed forms."""
from .lindblad import LindbladSpec, LindbladTrajectory, integrate_lindblad
from .weisskopf import (
    DecayFit,
    ModeGrid,
    SingleExcitationSeries,
    build_mode_grid,
    fit_decay_rate,
    simulate_single_excitation,
)
