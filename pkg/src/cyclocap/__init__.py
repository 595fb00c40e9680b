"""Capacity of sampled channels with additive cyclostationary Gaussian noise."""

__version__ = "0.1.0"

from .capacity import (
    CapacityResult,
    capacity_at_phase,
    capacity_for_index,
    capacity_max_phase,
    capacity_sequence,
    liminf_estimate,
    memoryless_capacity,
    synchronous_capacity,
    waterfill_level,
)
from .conditions import (
    ConditionReport,
    correlation_decay_margin,
    power_condition,
    run_condition_report,
    sdd_margin,
)
from .config import ChannelConfig, ConfigError, build_config, parse_config_file, parse_eps
from .dcd import (
    BlockCorrelation,
    ModelInvalidError,
    SpectralEigs,
    build_block_correlation,
    hermitian_eigenvalues,
    spectral_eigenvalues,
    spectral_matrix,
)
from .finite_block import (
    BlockNoiseCov,
    BlockSizeError,
    InfoDensityStats,
    block_noise_covariance,
    finite_block_capacity,
    guard_delay,
    info_density_stats,
    info_density_trace_residual,
    phase_average_rate,
    waterfilled_input_covariance,
)
from .noise_model import (
    DtCorrelation,
    InvalidPulseShape,
    PulseCorrelationModel,
    SamplingSpec,
    ct_correlation,
    dt_correlation,
    memory_length,
    pulse_value,
    rational_mismatch,
    sample_correlation,
)

__all__ = [
    "BlockCorrelation",
    "BlockNoiseCov",
    "BlockSizeError",
    "CapacityResult",
    "ChannelConfig",
    "ConditionReport",
    "ConfigError",
    "DtCorrelation",
    "InfoDensityStats",
    "InvalidPulseShape",
    "ModelInvalidError",
    "PulseCorrelationModel",
    "SamplingSpec",
    "SpectralEigs",
    "block_noise_covariance",
    "build_block_correlation",
    "build_config",
    "capacity_at_phase",
    "capacity_for_index",
    "capacity_max_phase",
    "capacity_sequence",
    "correlation_decay_margin",
    "ct_correlation",
    "dt_correlation",
    "finite_block_capacity",
    "guard_delay",
    "hermitian_eigenvalues",
    "info_density_stats",
    "info_density_trace_residual",
    "liminf_estimate",
    "memory_length",
    "memoryless_capacity",
    "parse_config_file",
    "parse_eps",
    "phase_average_rate",
    "power_condition",
    "pulse_value",
    "rational_mismatch",
    "run_condition_report",
    "sample_correlation",
    "sdd_margin",
    "spectral_eigenvalues",
    "spectral_matrix",
    "synchronous_capacity",
    "waterfill_level",
    "waterfilled_input_covariance",
]
