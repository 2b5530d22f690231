from ._ecfp import (
    CongestionGame,
    ConfigError,
    TabularGame,
    best_response,
    channel_utilities,
    consensus_gap,
    count_distribution_heterogeneous,
    count_distribution_iid,
    equilibrium_gap,
    geometric_graph,
    metropolis_hastings_weights,
    mixed_utility,
    run_experiment,
    solve_cne,
    spectral_contraction,
    tracking_error_bound,
    validate_config,
)

__all__ = [
    "CongestionGame",
    "ConfigError",
    "TabularGame",
    "best_response",
    "channel_utilities",
    "consensus_gap",
    "count_distribution_heterogeneous",
    "count_distribution_iid",
    "equilibrium_gap",
    "geometric_graph",
    "metropolis_hastings_weights",
    "mixed_utility",
    "run_experiment",
    "solve_cne",
    "spectral_contraction",
    "tracking_error_bound",
    "validate_config",
]
