"""Boundedly rational agents: noisy evaluation and idea generation."""

from dataclasses import dataclass

import numpy as np

from .landscape import Landscape


@dataclass(frozen=True)
class Practitioner:
    """An agent judging strategies on its own landscape, with evaluation noise.

    Practitioner 0 is the firm; the others are stakeholders.
    """

    index: int
    error_stddev: float
    landscape: Landscape

    def __post_init__(self):
        if self.error_stddev < 0:
            raise ValueError(f"error_stddev must be >= 0, got {self.error_stddev}")


def draw_error_stddevs(count, base_stddev, rng):
    """Individualized evaluation-noise levels: |N(0, base_stddev^2)| per agent.

    Drawn once per simulation repetition; the mean converges to
    base_stddev * sqrt(2/pi) (folded normal).
    """
    if base_stddev < 0:
        raise ValueError(f"base_stddev must be >= 0, got {base_stddev}")
    return np.abs(rng.normal(0.0, base_stddev, size=count))


def noisy_eval(p, s, rng):
    """Perceived performance of s: true normalized performance plus fresh Gaussian noise.

    Noise is redrawn on every evaluation event and the result is not clamped
    to [0, 1]; only comparisons between perceived values matter.
    """
    perf = p.landscape.perf_list[s.index]
    if p.error_stddev == 0.0:
        return perf
    return perf + p.error_stddev * rng.standard_normal()


def _sample_indices(rng, n, q):
    # uniform without replacement; batched rejection beats a full
    # permutation when q is small relative to n (the common case)
    if q >= n:
        return range(n)
    if q > n // 2:
        return rng.permutation(n)[:q].tolist()
    while True:
        picks = [int(rng.integers(n)) for _ in range(q)]
        if q == 1 or len(set(picks)) == q:
            return picks


def generate_idea(p, pool, q, rng):
    """The practitioner's proposal: best of q imagined candidates.

    Samples q distinct strategies uniformly from the pool, evaluates each
    once with noise, and returns the perceived best (exact ties broken
    uniformly at random).
    """
    if not 1 <= q <= len(pool):
        raise ValueError(f"q must be in 1..{len(pool)}, got {q}")
    best_val = -np.inf
    best = []
    for i in _sample_indices(rng, len(pool), q):
        v = noisy_eval(p, pool[i], rng)
        if v > best_val:
            best_val = v
            best = [pool[i]]
        elif v == best_val:
            best.append(pool[i])
    if len(best) == 1:
        return best[0]
    return best[int(rng.integers(len(best)))]
