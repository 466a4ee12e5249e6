"""Monte Carlo aggregation: per-episode means and 95% confidence intervals."""

from dataclasses import dataclass

import numpy as np

Z_95 = 1.96  # normal-approximation quantile for 95% intervals


@dataclass(frozen=True)
class AggregatePoint:
    """Mean firm performance at one episode, with its 95% CI over repetitions."""

    scenario: str
    episode: int
    mean: float
    ci_low: float
    ci_high: float
    reps: int
    degenerate: bool = False  # True when reps < 2 and the CI collapses to [mean, mean]


def aggregate(records, scenario_id):
    """Fold episode records into one AggregatePoint per episode.

    Every episode must carry the same number of repetitions.  The CI is
    mean +/- 1.96 * sd / sqrt(R) with sd the sample standard deviation;
    for R < 2 the interval degenerates to [mean, mean] and is flagged.
    CI bounds are stored unclipped (they may leave [0, 1]).
    """
    by_episode = {}
    for r in records:
        by_episode.setdefault(r.episode, []).append(r.performance)
    points = []
    counts = {len(v) for v in by_episode.values()}
    if len(counts) > 1:
        raise ValueError(f"unbalanced repetition counts per episode: {sorted(counts)}")
    for episode in sorted(by_episode):
        values = np.asarray(by_episode[episode])
        reps = len(values)
        mean = float(values.mean())
        if reps < 2:
            points.append(AggregatePoint(scenario_id, episode, mean, mean, mean, reps, True))
            continue
        half = Z_95 * float(values.std(ddof=1)) / np.sqrt(reps)
        points.append(
            AggregatePoint(scenario_id, episode, mean, mean - half, mean + half, reps)
        )
    return points


def aggregate_grid(runs):
    """Aggregate a list of (config, records) pairs, preserving order."""
    return [(cfg, aggregate(records, cfg.scenario_id)) for cfg, records in runs]
