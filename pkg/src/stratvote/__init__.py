"""Collective strategy search on correlated NK landscapes.

Boundedly rational practitioners propose strategy ideas from a bounded
neighborhood of the current strategy; minisum approval voting distills the
ideas into a shortlist and a Borda count picks the next strategy.  The
engine sweeps scenario grids over practitioner count, landscape ruggedness,
and preference correlation, and reports the firm's performance trajectory
with 95% confidence intervals.
"""

__version__ = "0.1.0"

from .bitspace import Strategy, flip, hamming_distance, neighborhood, neighborhood_size
from .correlation import (
    base_matrix,
    cholesky_factor,
    perturb,
    sample_correlated_uniforms,
    validate_correlation_matrix,
)
from .engine import (
    EpisodeRecord,
    ScenarioConfig,
    prepare,
    run_episode,
    run_repetition,
    run_scenario,
    run_scenario_grid,
)
from .landscape import (
    InteractionMatrix,
    Landscape,
    LandscapeEnsemble,
    build_landscape,
    count_local_optima,
    export_landscape_csv,
    generate_ensemble,
    generate_interactions,
    performance,
    raw_fitness,
)
from .practitioner import Practitioner, draw_error_stddevs, generate_idea, noisy_eval
from .stats import AggregatePoint, aggregate, aggregate_grid
from .voting import Ballot, Shortlist, borda_select, build_ballot, minisum_scores, minisum_shortlist

__all__ = [
    "AggregatePoint",
    "Ballot",
    "EpisodeRecord",
    "InteractionMatrix",
    "Landscape",
    "LandscapeEnsemble",
    "Practitioner",
    "ScenarioConfig",
    "Shortlist",
    "Strategy",
    "aggregate",
    "aggregate_grid",
    "base_matrix",
    "borda_select",
    "build_ballot",
    "build_landscape",
    "cholesky_factor",
    "count_local_optima",
    "draw_error_stddevs",
    "export_landscape_csv",
    "flip",
    "generate_ensemble",
    "generate_idea",
    "generate_interactions",
    "hamming_distance",
    "minisum_scores",
    "minisum_shortlist",
    "neighborhood",
    "neighborhood_size",
    "noisy_eval",
    "performance",
    "perturb",
    "prepare",
    "raw_fitness",
    "run_episode",
    "run_repetition",
    "run_scenario",
    "run_scenario_grid",
    "sample_correlated_uniforms",
    "validate_correlation_matrix",
]
