import numpy as np
import pytest

from stratvote.bitspace import Strategy, neighborhood
from stratvote.landscape import InteractionMatrix, build_landscape, performance
from stratvote.practitioner import Practitioner, draw_error_stddevs, generate_idea, noisy_eval

FOLDED_MEAN_FACTOR = np.sqrt(2.0 / np.pi)


def known_landscape(values):
    """K=0 landscape over 3 decisions with per-bit contributions chosen so the
    raw fitness ranking over all 8 strategies is fully controlled."""
    inter = InteractionMatrix(n=3, k=0, links=((), (), ()))
    return build_landscape(inter, np.asarray(values))


class TestDrawErrorStddevs:
    def test_zero_base(self):
        out = draw_error_stddevs(50, 0.0, np.random.default_rng(0))
        assert np.all(out == 0.0)

    def test_all_nonnegative(self):
        out = draw_error_stddevs(10_000, 0.0625, np.random.default_rng(1))
        assert np.all(out >= 0.0)

    def test_folded_normal_mean(self):
        # E * sqrt(2/pi) ~ 0.0499 at the baseline noise level
        out = draw_error_stddevs(1_000_000, 0.0625, np.random.default_rng(2))
        target = 0.0625 * FOLDED_MEAN_FACTOR
        assert abs(out.mean() - target) / target < 0.01

    def test_negative_base_rejected(self):
        with pytest.raises(ValueError):
            draw_error_stddevs(5, -0.1, np.random.default_rng(0))


class TestNoisyEval:
    def test_noiseless_equals_performance(self):
        land = known_landscape([[0.2, 0.9], [0.3, 0.7], [0.1, 0.5]])
        p = Practitioner(index=0, error_stddev=0.0, landscape=land)
        rng = np.random.default_rng(3)
        for idx in range(8):
            s = Strategy(3, idx)
            assert noisy_eval(p, s, rng) == pytest.approx(performance(land, s), abs=1e-12)

    def test_sample_stddev(self):
        land = known_landscape([[0.2, 0.9], [0.3, 0.7], [0.1, 0.5]])
        p = Practitioner(index=0, error_stddev=0.05, landscape=land)
        rng = np.random.default_rng(4)
        s = Strategy(3, 5)
        draws = np.array([noisy_eval(p, s, rng) for _ in range(100_000)])
        assert abs(draws.std(ddof=1) - 0.05) / 0.05 < 0.02

    def test_sample_mean_unbiased(self):
        land = known_landscape([[0.2, 0.9], [0.3, 0.7], [0.1, 0.5]])
        p = Practitioner(index=0, error_stddev=0.05, landscape=land)
        rng = np.random.default_rng(5)
        s = Strategy(3, 2)
        n = 100_000
        draws = np.array([noisy_eval(p, s, rng) for _ in range(n)])
        se = 0.05 / np.sqrt(n)
        assert abs(draws.mean() - performance(land, s)) < 3 * se

    def test_not_clamped(self):
        land = known_landscape([[0.97, 0.98], [0.98, 0.99], [0.99, 0.97]])
        p = Practitioner(index=0, error_stddev=0.5, landscape=land)
        rng = np.random.default_rng(6)
        draws = [noisy_eval(p, Strategy(3, 7), rng) for _ in range(200)]
        assert max(draws) > 1.0  # perceived values may leave [0, 1]

    def test_negative_stddev_rejected(self):
        land = known_landscape([[0.2, 0.9], [0.3, 0.7], [0.1, 0.5]])
        with pytest.raises(ValueError):
            Practitioner(index=0, error_stddev=-0.01, landscape=land)


class TestGenerateIdea:
    def setup_method(self):
        # raw fitness ranking: strategy 111 best (0.7), 000 worst (0.2)
        self.land = known_landscape([[0.2, 0.9], [0.3, 0.7], [0.1, 0.5]])
        self.center = Strategy.from_string("000")
        self.pool = neighborhood(self.center, 3)  # all 7 non-center strategies

    def test_full_pool_noiseless_returns_true_best(self):
        p = Practitioner(index=0, error_stddev=0.0, landscape=self.land)
        rng = np.random.default_rng(7)
        best_in_pool = max(self.pool, key=lambda s: self.land.perf_table[s.index])
        for _ in range(20):
            assert generate_idea(p, self.pool, len(self.pool), rng) == best_in_pool

    def test_exhaustive_argmax_oracle(self):
        # brute-force check against every strategy's true value
        p = Practitioner(index=0, error_stddev=0.0, landscape=self.land)
        rng = np.random.default_rng(8)
        oracle = {s: performance(self.land, s) for s in self.pool}
        idea = generate_idea(p, self.pool, 7, rng)
        assert oracle[idea] == max(oracle.values())

    def test_single_sample(self):
        p = Practitioner(index=0, error_stddev=0.0, landscape=self.land)
        rng = np.random.default_rng(9)
        for _ in range(50):
            assert generate_idea(p, self.pool, 1, rng) in self.pool

    def test_always_member_of_pool(self):
        p = Practitioner(index=0, error_stddev=0.1, landscape=self.land)
        rng = np.random.default_rng(10)
        for _ in range(200):
            assert generate_idea(p, self.pool, 2, rng) in self.pool

    def test_q_out_of_range(self):
        p = Practitioner(index=0, error_stddev=0.0, landscape=self.land)
        rng = np.random.default_rng(11)
        with pytest.raises(ValueError):
            generate_idea(p, self.pool, 8, rng)
        with pytest.raises(ValueError):
            generate_idea(p, self.pool, 0, rng)

    def test_sampling_uniform_without_replacement(self):
        # every member of a 4-candidate pool should be sampled ~equally
        constant = known_landscape([[0.5, 0.5], [0.5, 0.5], [0.5, 0.5]])
        p = Practitioner(index=0, error_stddev=0.0, landscape=constant)
        pool = neighborhood(Strategy.from_string("000"), 1) + (Strategy.from_string("111"),)
        rng = np.random.default_rng(12)
        counts = {}
        trials = 6000
        for _ in range(trials):
            idea = generate_idea(p, pool, 1, rng)
            counts[idea] = counts.get(idea, 0) + 1
        expected = trials / len(pool)
        for c in counts.values():
            assert abs(c - expected) < 5 * np.sqrt(trials * 0.25 * 0.75)

    def test_tie_break_uniform(self):
        # constant landscape, no noise: all candidates tie; each should win ~1/2
        land = known_landscape([[0.5, 0.5], [0.5, 0.5], [0.5, 0.5]])
        p = Practitioner(index=0, error_stddev=0.0, landscape=land)
        pool = (Strategy.from_string("001"), Strategy.from_string("010"))
        rng = np.random.default_rng(13)
        wins = sum(generate_idea(p, pool, 2, rng) == pool[0] for _ in range(10_000))
        assert abs(wins - 5000) < 5 * 50  # 5 sigma for a fair coin
