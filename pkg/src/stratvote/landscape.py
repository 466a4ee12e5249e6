"""NK performance landscapes with shared interaction structure and correlated tables.

All landscapes in an ensemble share one random interaction structure; the
correlation applies to the contribution-table values, sampled as correlated
uniforms.  Every landscape is normalized by its exhaustively computed global
maximum, so a performance of 1.0 marks a global optimum.
"""

from dataclasses import dataclass, field

import numpy as np

from .bitspace import Strategy
from .correlation import cholesky_factor, sample_correlated_uniforms

MAX_DECISIONS = 20  # exhaustive normalization enumerates all 2^n strategies


@dataclass(frozen=True)
class InteractionMatrix:
    """Epistasis structure: decision i depends on itself plus links[i]."""

    n: int
    k: int
    links: tuple  # per decision, a sorted tuple of k partner indices

    def __post_init__(self):
        if not 0 <= self.k <= self.n - 1:
            raise ValueError(f"k must be in [0, n-1], got k={self.k}, n={self.n}")
        if len(self.links) != self.n:
            raise ValueError("one link set per decision required")
        for i, partners in enumerate(self.links):
            if len(partners) != self.k or len(set(partners)) != self.k or i in partners:
                raise ValueError(f"link set {i} must hold {self.k} distinct non-self indices")


def generate_interactions(n, k, rng):
    """Random interaction structure: k partners per decision, uniform without replacement."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must be in [0, n-1], got k={k}, n={n}")
    links = []
    for i in range(n):
        others = np.delete(np.arange(n), i)
        partners = rng.choice(others, size=k, replace=False) if k else np.empty(0, dtype=int)
        links.append(tuple(int(p) for p in np.sort(partners)))
    return InteractionMatrix(n=n, k=k, links=tuple(links))


def config_index_map(interaction):
    """For each decision, the contribution-table index of every strategy.

    Shape (n, 2^n).  The table index packs the decision's own bit (most
    significant) followed by its partners' bits in sorted order.
    """
    n, k = interaction.n, interaction.k
    all_idx = np.arange(1 << n)
    cfg = np.empty((n, 1 << n), dtype=np.int64)
    for i in range(n):
        c = ((all_idx >> (n - 1 - i)) & 1) << k
        for m, p in enumerate(interaction.links[i]):
            c = c | (((all_idx >> (n - 1 - p)) & 1) << (k - 1 - m))
        cfg[i] = c
    return cfg


@dataclass(frozen=True, eq=False)
class Landscape:
    """One practitioner's performance function over all length-n strategies."""

    interaction: InteractionMatrix
    tables: np.ndarray      # (n, 2^(k+1)) contribution values in [0, 1]
    global_max: float       # exact maximum raw fitness over all 2^n strategies
    owner: int              # practitioner index; 0 is the firm
    raw_table: np.ndarray   # (2^n,) raw fitness per strategy index
    perf_table: np.ndarray  # (2^n,) raw_table / global_max
    perf_list: list = field(repr=False, default=None)  # perf_table as floats, for scalar loops

    @property
    def n(self):
        return self.interaction.n


def _build_landscape(interaction, tables, owner, raw):
    global_max = float(raw.max())
    if global_max <= 0.0:
        raise ValueError("degenerate landscape: global maximum is not positive")
    perf = raw / global_max
    return Landscape(
        interaction=interaction,
        tables=tables,
        global_max=global_max,
        owner=owner,
        raw_table=raw,
        perf_table=perf,
        perf_list=perf.tolist(),
    )


def build_landscape(interaction, tables, owner=0):
    """Assemble a Landscape from explicit contribution tables.

    The raw-fitness table over all 2^n strategies and the exact global
    maximum are computed by exhaustive enumeration.
    """
    tables = np.asarray(tables, dtype=float)
    expected = (interaction.n, 1 << (interaction.k + 1))
    if tables.shape != expected:
        raise ValueError(f"tables must have shape {expected}, got {tables.shape}")
    if np.any(tables < 0.0) or np.any(tables > 1.0):
        raise ValueError("contribution values must lie in [0, 1]")
    cfg_map = config_index_map(interaction)
    raw = tables[np.arange(interaction.n)[:, None], cfg_map].mean(axis=0)
    return _build_landscape(interaction, tables, owner, raw)


@dataclass(frozen=True, eq=False)
class LandscapeEnsemble:
    """Correlated landscapes sharing one interaction structure; member 0 is the firm's."""

    landscapes: tuple
    correlation: np.ndarray

    @property
    def firm(self):
        return self.landscapes[0]

    def __len__(self):
        return len(self.landscapes)


def generate_ensemble(n, k, corr, rng):
    """Generate correlated NK landscapes, one per row of the correlation matrix.

    A single interaction structure is drawn and shared.  For every
    (decision, table entry) pair one vector of correlated uniforms fills
    that entry across all landscapes, so pairwise table correlation follows
    the Gaussian-copula image of the matrix entries.
    """
    if n > MAX_DECISIONS:
        raise ValueError(f"n={n} exceeds the exhaustive-normalization cap ({MAX_DECISIONS})")
    corr = np.asarray(corr, dtype=float)
    s_count = corr.shape[0]
    interaction = generate_interactions(n, k, rng)
    factor = cholesky_factor(corr)
    draws = sample_correlated_uniforms(factor, n * (1 << (k + 1)), rng)
    tables_per_owner = draws.reshape(n, 1 << (k + 1), s_count)
    cfg_map = config_index_map(interaction)
    raw_all = tables_per_owner[np.arange(n)[:, None], cfg_map, :].mean(axis=0)  # (2^n, S)
    landscapes = tuple(
        _build_landscape(
            interaction,
            np.ascontiguousarray(tables_per_owner[:, :, j]),
            j,
            np.ascontiguousarray(raw_all[:, j]),
        )
        for j in range(s_count)
    )
    return LandscapeEnsemble(landscapes=landscapes, correlation=corr.copy())


def raw_fitness(l, s):
    """Mean contribution of all decisions: the defining NK fitness of s."""
    bits = s.bits()
    k = l.interaction.k
    total = 0.0
    for i, partners in enumerate(l.interaction.links):
        cfg = bits[i] << k
        for m, p in enumerate(partners):
            cfg |= bits[p] << (k - 1 - m)
        total += l.tables[i, cfg]
    return total / l.interaction.n


def performance(l, s):
    """Raw fitness normalized by the landscape's global maximum; 1.0 at an optimum."""
    return raw_fitness(l, s) / l.global_max


def count_local_optima(l):
    """Number of strategies strictly fitter than all their 1-flip neighbors."""
    n = l.interaction.n
    idx = np.arange(1 << n)
    best_neighbor = np.full(1 << n, -np.inf)
    for b in range(n):
        np.maximum(best_neighbor, l.raw_table[idx ^ (1 << b)], out=best_neighbor)
    return int(np.sum(l.raw_table > best_neighbor))


def export_landscape_csv(l, path):
    """Debug dump: one row per strategy with raw fitness and normalized performance."""
    n = l.interaction.n
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("strategy,raw_fitness,performance\n")
        for i in range(1 << n):
            fh.write(f"{Strategy(n, i)},{l.raw_table[i]:.6f},{l.perf_table[i]:.6f}\n")
