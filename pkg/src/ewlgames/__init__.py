"""Solver and sweep toolkit for EWL-quantized two-player games and their
Bayesian three-player compositions."""

__version__ = "0.1.0"

from .circuit import (
    DEFECT_STRATEGY,
    IDENTITY_STRATEGY,
    EntanglementParam,
    GameDefinition,
    StrategyParams,
    entangler,
    expected_payoffs,
    final_state,
    final_state_from_matrices,
    outcome_probs,
    strategy_matrix,
)
from .equilibrium import (
    DEFAULT_EPSILON,
    BestResponseSet,
    NashEquilibrium,
    PayoffTensor,
    PriorProbability,
    bayesian_payoff_a,
    best_responses,
    nash_bayesian,
    nash_two_player,
    pairwise_payoffs,
    payoff_tensor,
)
from .grid import SteppingParams, StrategyGrid, build_grid, grid_lookup
from .catalogue import (
    CatalogueError,
    CatalogueParseError,
    CatalogueValidationError,
    GameCatalogue,
    UnknownGameError,
    load_catalogue,
    load_default_catalogue,
)
from .sweep import (
    CriticalBracket,
    SweepRecord,
    bayes_sweep,
    critical_gamma,
    default_gamma_grid,
    default_p_grid,
    gamma_sweep,
    payoff_histogram,
    scatter_theta,
)

__all__ = [
    "__version__",
    "DEFECT_STRATEGY",
    "IDENTITY_STRATEGY",
    "EntanglementParam",
    "GameDefinition",
    "StrategyParams",
    "entangler",
    "expected_payoffs",
    "final_state",
    "final_state_from_matrices",
    "outcome_probs",
    "strategy_matrix",
    "DEFAULT_EPSILON",
    "BestResponseSet",
    "NashEquilibrium",
    "PayoffTensor",
    "PriorProbability",
    "bayesian_payoff_a",
    "best_responses",
    "nash_bayesian",
    "nash_two_player",
    "pairwise_payoffs",
    "payoff_tensor",
    "SteppingParams",
    "StrategyGrid",
    "build_grid",
    "grid_lookup",
    "CatalogueError",
    "CatalogueParseError",
    "CatalogueValidationError",
    "GameCatalogue",
    "UnknownGameError",
    "load_catalogue",
    "load_default_catalogue",
    "CriticalBracket",
    "SweepRecord",
    "bayes_sweep",
    "critical_gamma",
    "default_gamma_grid",
    "default_p_grid",
    "gamma_sweep",
    "payoff_histogram",
    "scatter_theta",
]
