"""Preference aggregation: minisum approval shortlisting and Borda selection."""

from dataclasses import dataclass

import numpy as np

from .practitioner import noisy_eval


@dataclass(frozen=True)
class Shortlist:
    """Winning candidates of the minisum stage, with their exact integer scores."""

    candidates: tuple
    scores: tuple


@dataclass(frozen=True)
class Ballot:
    """One voter's strict ranking over the selection slate."""

    voter: int
    ranking: tuple


def minisum_scores(ideas, pool):
    """Summed Hamming distance from each pool member to all submitted ideas."""
    if not pool:
        raise ValueError("candidate pool is empty")
    n = pool[0].n
    for s in pool:
        if s.n != n:
            raise ValueError("pool strategies must share one length")
    pool_idx = np.fromiter((s.index for s in pool), dtype=np.int64, count=len(pool))
    idea_idx = np.fromiter((s.index for s in ideas), dtype=np.int64, count=len(ideas))
    if ideas:
        members = set(pool_idx.tolist())
        for s in ideas:
            if s.n != n or s.index not in members:
                raise ValueError(f"idea {s} is not in the candidate pool")
    return np.bitwise_count(pool_idx[:, None] ^ idea_idx[None, :]).sum(axis=1, dtype=np.int64)


def minisum_shortlist(ideas, pool, size, rng):
    """Utilitarian shortlist: the ``size`` pool members closest to all ideas.

    Every pool member is scored (the winner may be a compromise nobody
    proposed); candidates are ordered by ascending score with equal scores
    in random order, and the first ``size`` returned.
    """
    scores = minisum_scores(ideas, pool)
    if not 1 <= size <= len(pool):
        raise ValueError(f"shortlist size must be in 1..{len(pool)}, got {size}")
    keys = rng.random(len(pool))
    order = np.lexsort((keys, scores))[:size]
    return Shortlist(
        candidates=tuple(pool[i] for i in order),
        scores=tuple(int(scores[i]) for i in order),
    )


def build_ballot(p, slate, rng):
    """Rank the slate by one noisy evaluation per candidate, ties shuffled randomly."""
    if not slate:
        raise ValueError("slate is empty")
    values = [noisy_eval(p, s, rng) for s in slate]
    keys = rng.random(len(slate))
    order = sorted(range(len(slate)), key=lambda i: (-values[i], keys[i]))
    return Ballot(voter=p.index, ranking=tuple(slate[i] for i in order))


def borda_select(slate, ballots, rng):
    """Borda count over the slate: rank r (0-based) earns len(slate)-1-r points.

    The winner is the candidate with the highest total; among tied maxima
    one is picked uniformly at random.
    """
    m = len(slate)
    if m == 0:
        raise ValueError("slate is empty")
    slate_set = set(slate)
    if len(slate_set) != m:
        raise ValueError("slate contains duplicates")
    totals = dict.fromkeys(slate, 0)
    top = m - 1
    for b in ballots:
        if len(b.ranking) != m or set(b.ranking) != slate_set:
            raise ValueError(f"ballot of voter {b.voter} does not rank exactly the slate")
        for pos, s in enumerate(b.ranking):
            totals[s] += top - pos
    best = max(totals.values())
    winners = [s for s in slate if totals[s] == best]
    if len(winners) == 1:
        return winners[0]
    return winners[int(rng.integers(len(winners)))]
