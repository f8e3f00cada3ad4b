"""Simulator for a spin-locked dipolar-coupled spin pair whose
dynamics are generated by a fluctuation-regulated master equation.

The public surface: operator algebra and superoperator helpers,
generator construction, time evolution, plateau/spectrum analysis,
config parsing, and the sweep runners behind the CLI.
"""

from .analysis import (
    AnalysisError,
    DegenerateSpectrumError,
    InsufficientHorizonError,
    PlateauNotFoundError,
    PlateauReport,
    SpectralReport,
    SpectrumF,
    detect_plateau,
    fourier_spectrum,
    fractional_lifetime,
    spectral_lifetime,
    zero_mode_count,
)
from .config import ConfigError, RunConfig, parse_config, parse_config_text, serialize_config
from .dynamics import (
    NumericalError,
    ObservableRecord,
    Trajectory,
    analytic_mx,
    default_time_grid,
    evolve_reduced_n,
    evolve_reduced_sec,
    evolve_super,
    initial_state_x,
    observables,
)
from .liouvillian import (
    GeneratorSet,
    SimParams,
    build_h_sec,
    build_L_n,
    build_L_sec,
    build_L_sl,
    build_total,
    kappa_squared,
    nonsecular_rate,
    plateau_value,
    t_pre_analytic,
    t_th_analytic,
    thermal_rate,
    transition_rates,
)
from .operators import (
    DipolarGeometry,
    collective_op,
    commutator_superop,
    devectorize,
    dipolar_amplitudes,
    dissipator_superop,
    double_commutator_superop,
    single_spin_op,
    spherical_tensor,
    two_spin_op,
    vectorize,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisError",
    "DegenerateSpectrumError",
    "InsufficientHorizonError",
    "PlateauNotFoundError",
    "PlateauReport",
    "SpectralReport",
    "SpectrumF",
    "detect_plateau",
    "fourier_spectrum",
    "fractional_lifetime",
    "spectral_lifetime",
    "zero_mode_count",
    "ConfigError",
    "RunConfig",
    "parse_config",
    "parse_config_text",
    "serialize_config",
    "NumericalError",
    "ObservableRecord",
    "Trajectory",
    "analytic_mx",
    "default_time_grid",
    "evolve_reduced_n",
    "evolve_reduced_sec",
    "evolve_super",
    "initial_state_x",
    "observables",
    "GeneratorSet",
    "SimParams",
    "build_h_sec",
    "build_L_n",
    "build_L_sec",
    "build_L_sl",
    "build_total",
    "kappa_squared",
    "nonsecular_rate",
    "plateau_value",
    "t_pre_analytic",
    "t_th_analytic",
    "thermal_rate",
    "transition_rates",
    "DipolarGeometry",
    "collective_op",
    "commutator_superop",
    "devectorize",
    "dipolar_amplitudes",
    "dissipator_superop",
    "double_commutator_superop",
    "single_spin_op",
    "spherical_tensor",
    "two_spin_op",
    "vectorize",
    "__version__",
]
