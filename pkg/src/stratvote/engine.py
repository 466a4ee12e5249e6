"""Episode loop, repetition runner, and scenario-grid executor.

Each repetition owns an independent random stream derived from
(scenario seed, repetition index), so repetitions can run in any order on
any number of workers and produce identical results.
"""

import multiprocessing
import os
from dataclasses import dataclass

import numpy as np

from .bitspace import Strategy, neighborhood, neighborhood_size
from .correlation import base_matrix, perturb
from .landscape import MAX_DECISIONS, generate_ensemble
from .practitioner import Practitioner, draw_error_stddevs, generate_idea
from .voting import borda_select, build_ballot, minisum_shortlist


@dataclass(frozen=True)
class ScenarioConfig:
    """One full parameter assignment; defaults follow the baseline setup."""

    k: int
    s_count: int
    n: int = 10
    rho: float = 0.5
    c: int = 2
    q: int = 2
    l: int = 3
    e: float = 0.0625
    t_max: int = 100
    repetitions: int = 4000
    jitter: float = 0.1
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DECISIONS:
            raise ValueError(f"n must be in 1..{MAX_DECISIONS}, got {self.n}")
        if not 0 <= self.k <= self.n - 1:
            raise ValueError(f"k must be in 0..{self.n - 1}, got {self.k}")
        if self.s_count < 1:
            raise ValueError(f"s_count must be >= 1, got {self.s_count}")
        if not 0.0 <= self.rho <= 1.0:
            raise ValueError(f"rho must be in [0, 1], got {self.rho}")
        if not 0 < self.c < self.n:
            raise ValueError(f"c must satisfy 0 < c < n, got c={self.c}, n={self.n}")
        pool = self.pool_size
        if not 1 <= self.q <= pool:
            raise ValueError(f"q must be in 1..{pool} (the candidate-pool size), got {self.q}")
        if not 1 <= self.l <= pool:
            raise ValueError(f"l must be in 1..{pool} (the candidate-pool size), got {self.l}")
        if self.e < 0:
            raise ValueError(f"e must be >= 0, got {self.e}")
        if self.t_max < 1:
            raise ValueError(f"t_max must be >= 1, got {self.t_max}")
        if self.repetitions < 0:
            raise ValueError(f"repetitions must be >= 0, got {self.repetitions}")
        if self.jitter < 0:
            raise ValueError(f"jitter must be >= 0, got {self.jitter}")
        if self.seed < 0:
            raise ValueError(f"seed must be >= 0, got {self.seed}")

    @property
    def pool_size(self):
        """Number of candidates within Hamming distance 1..c of any strategy."""
        return neighborhood_size(self.n, self.c)

    @property
    def scenario_id(self):
        return f"K{self.k}-S{self.s_count}-rho{self.rho:g}"


@dataclass(frozen=True, slots=True)
class EpisodeRecord:
    """The dependent variable: the firm's true performance after episode t."""

    repetition: int
    episode: int
    performance: float


@dataclass
class SimulationState:
    repetition: int
    episode: int
    ensemble: object
    practitioners: tuple
    current: Strategy


def prepare(config, rng, repetition=0):
    """Preparation phase: correlated landscapes, noise levels, random start.

    Runs once per repetition, before the first episode.
    """
    corr = perturb(base_matrix(config.s_count, config.rho), config.jitter, rng)
    ensemble = generate_ensemble(config.n, config.k, corr, rng)
    stddevs = draw_error_stddevs(config.s_count, config.e, rng)
    practitioners = tuple(
        Practitioner(index=j, error_stddev=float(stddevs[j]), landscape=ensemble.landscapes[j])
        for j in range(config.s_count)
    )
    current = Strategy(config.n, int(rng.integers(1 << config.n)))
    return SimulationState(
        repetition=repetition,
        episode=0,
        ensemble=ensemble,
        practitioners=practitioners,
        current=current,
    )


def run_episode(state, config, rng):
    """Generation, selection, and implementation for one episode.

    Every practitioner proposes an idea from the radius-c candidate pool;
    minisum approval distills the pool to a shortlist of l; the slate
    (shortlist plus the current strategy) goes to a Borda vote; the winner
    is implemented and its true firm performance recorded, noise-free.

    Advances ``state`` in place and returns the new episode's record.
    """
    pool = neighborhood(state.current, config.c)
    ideas = [generate_idea(p, pool, config.q, rng) for p in state.practitioners]
    shortlist = minisum_shortlist(ideas, pool, config.l, rng)
    slate = shortlist.candidates + (state.current,)
    ballots = [build_ballot(p, slate, rng) for p in state.practitioners]
    winner = borda_select(slate, ballots, rng)

    state.current = winner
    state.episode += 1
    return EpisodeRecord(
        repetition=state.repetition,
        episode=state.episode,
        performance=state.ensemble.firm.perf_list[winner.index],
    )


def repetition_rng(seed, repetition):
    """The repetition's private random stream; independent of execution order."""
    return np.random.default_rng(np.random.SeedSequence((seed, repetition)))


def run_repetition(config, repetition):
    """Prepare once, then run t_max episodes; returns their records in order."""
    rng = repetition_rng(config.seed, repetition)
    state = prepare(config, rng, repetition)
    return [run_episode(state, config, rng) for _ in range(config.t_max)]


def resolve_workers(workers):
    if workers < 0:
        raise ValueError(f"workers must be >= 0, got {workers}")
    return workers if workers else (os.cpu_count() or 1)


def run_scenario(config, workers=1):
    """All repetitions of one scenario, ordered by (repetition, episode)."""
    return run_scenario_grid([config], workers)[0][1]


def run_scenario_grid(configs, workers=1):
    """Run every repetition of every scenario.

    Returns one (config, records) pair per scenario, in input order.  The
    output is identical for any worker count: repetitions are independent
    jobs reassembled by index.
    """
    configs = list(configs)
    if not configs:
        raise ValueError("scenario list is empty")
    nworkers = resolve_workers(workers)
    jobs = [(cfg, rep) for cfg in configs for rep in range(cfg.repetitions)]
    if nworkers == 1 or len(jobs) < 2:
        per_job = [run_repetition(cfg, rep) for cfg, rep in jobs]
    else:
        chunk = max(1, min(16, len(jobs) // (4 * nworkers)))
        with multiprocessing.Pool(nworkers) as pool:
            per_job = pool.starmap(run_repetition, jobs, chunksize=chunk)
    results = []
    pos = 0
    for cfg in configs:
        records = []
        for _ in range(cfg.repetitions):
            records.extend(per_job[pos])
            pos += 1
        results.append((cfg, records))
    return results
