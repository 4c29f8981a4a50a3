import math
import unittest

import numpy as np

from beliefplan.envs import FloorEnvironment, LightDarkEnvironment
from beliefplan.exceptions import ConfigurationError, ParameterError
from beliefplan.filtering import (
    FilterParams,
    ParticleBelief,
    ParticleFilter,
    init_belief,
    proposal_count,
    update,
)

from ..toy_models import linear_gaussian_models


class TestFilterParams(unittest.TestCase):
    def test_defaults(self):
        params = FilterParams()
        self.assertEqual((params.K, params.proposal_fraction, params.decay, params.resample_period), (100, 0.3, 0.9, 3))

    def test_invalid(self):
        for bad in ({"K": 0}, {"proposal_fraction": 1.5}, {"decay": 0.0}, {"resample_period": 0}):
            with self.subTest(**bad):
                with self.assertRaises(ParameterError):
                    FilterParams(**bad)

    def test_proposal_count(self):
        params = FilterParams()
        self.assertEqual(proposal_count(params, 0), 30)
        self.assertEqual(proposal_count(params, 1), 27)
        self.assertEqual(proposal_count(params, 50), 0)


class TestInitBelief(unittest.TestCase):
    def test_floor(self):
        env = FloorEnvironment()
        b = init_belief(env.env_map, FilterParams(), np.random.default_rng(0))
        self.assertEqual(b.size, 100)
        np.testing.assert_allclose(b.weights, 0.01)
        self.assertTrue(env.env_map.in_kind(b.particles, "start").all())
        self.assertEqual(b.step_index, 0)

    def test_single_particle(self):
        env = FloorEnvironment()
        b = init_belief(env.env_map, FilterParams(K=1), np.random.default_rng(0))
        self.assertEqual(b.weights.tolist(), [1.0])

    def test_no_support(self):
        with self.assertRaises(ConfigurationError):
            init_belief(None, FilterParams(), np.random.default_rng(0))

    def test_lightdark_centroid(self):
        env = LightDarkEnvironment()
        params = FilterParams()
        particles = np.concatenate(
            [
                ParticleFilter(env.filter_models(params), params, env.env_map).initial_belief(np.random.default_rng(seed)).particles
                for seed in range(10)
            ]
        )
        # uniform over the start strip [0.2, 0.4] x [0.2, 1.8]
        se = np.array([0.2, 1.6]) / math.sqrt(12 * len(particles))
        np.testing.assert_array_less(np.abs(particles.mean(axis=0) - [0.3, 1.0]), 3.0 * se)


class TestUpdate(unittest.TestCase):
    def test_kalman_posterior(self):
        prior_mean, prior_std, obs_std = 1.0, 1.0, 0.5
        models = linear_gaussian_models(obs_std)
        params = FilterParams(K=10000, proposal_fraction=0.0, resample_period=1000)
        rng = np.random.default_rng(0)
        b = ParticleBelief.uniform(rng.normal(prior_mean, prior_std, size=(10000, 1)))
        o = np.array([1.8])
        # action 1 does not move the state
        b = update(b, 1, o, models, params, rng)

        gain = prior_std**2 / (prior_std**2 + obs_std**2)
        post_mean = prior_mean + gain * (o[0] - prior_mean)
        post_var = (1.0 - gain) * prior_std**2
        tolerance = 3.0 * math.sqrt(post_var / b.ess())
        self.assertAlmostEqual(b.mean()[0], post_mean, delta=tolerance)
        self.assertEqual(b.step_index, 1)

    def test_weights_normalized_every_update(self):
        env = LightDarkEnvironment()
        rng = np.random.default_rng(2)
        params = FilterParams()
        pf = ParticleFilter(env.models, params, env.env_map)
        b = pf.initial_belief(rng)
        s = env.sample_initial(1, rng)[0]
        for t in range(12):
            s, o, _, _ = env.step(s, t % 8, rng, t)
            b = pf.update(b, t % 8, o, rng)
            with self.subTest(step=t):
                self.assertAlmostEqual(b.weights.sum(), 1.0, places=9)
                self.assertTrue((b.weights >= 0).all())
                self.assertEqual(b.size, params.K)
                self.assertEqual(b.step_index, t + 1)

    def test_proposal_counts(self):
        calls = []

        def proposer(o, n, rng):
            calls.append(n)
            return np.full((n, 1), o[0])

        models = linear_gaussian_models(0.5, proposer=proposer)
        params = FilterParams(K=100, proposal_fraction=0.3, decay=0.9, resample_period=1000)
        rng = np.random.default_rng(0)
        b = ParticleBelief.uniform(rng.normal(0.0, 1.0, size=(100, 1)))
        expected = []
        for n in range(51):
            expected.append(math.floor(100 * 0.3 * 0.9**n + 1e-9))
            b = update(b, 1, np.array([0.0]), models, params, rng)
        self.assertEqual(calls, [k for k in expected if k > 0])
        self.assertEqual([proposal_count(params, n) for n in range(51)], expected)

    def test_resample_period(self):
        models = linear_gaussian_models(0.5)
        params = FilterParams(K=50, proposal_fraction=0.0, resample_period=3)
        rng = np.random.default_rng(0)
        b = ParticleBelief.uniform(rng.normal(0.0, 1.0, size=(50, 1)))
        uniform_after = []
        for _ in range(6):
            b = update(b, 1, np.array([0.3]), models, params, rng)
            uniform_after.append(bool(np.allclose(b.weights, 1.0 / 50)))
        self.assertEqual(uniform_after, [False, False, True, False, False, True])

    def test_degenerate_recovery(self):
        env = LightDarkEnvironment()
        rng = np.random.default_rng(0)
        b = ParticleBelief.uniform(np.tile([1.9, 0.1], (20, 1)))
        o = np.array([1.8, 1.9])
        models = env.models.replace(obs_log_density=lambda o, s: np.full(np.atleast_2d(s).shape[0], -np.inf))
        params = FilterParams(K=20, proposal_fraction=0.0)
        with self.assertLogs("beliefplan.filtering.particle_filter", level="WARNING"):
            out = update(b, env.spec.action_index("North"), o, models, params, rng)
        self.assertEqual(out.degeneracy_count, 1)
        self.assertEqual(out.step_index, 1)
        np.testing.assert_allclose(out.weights, 1.0 / 20)
        # rebuilt from proposals around the observation
        self.assertLess(np.abs(out.particles - o).max(), 0.1)

    def test_nonfinite_observation(self):
        models = linear_gaussian_models(0.5)
        b = ParticleBelief.uniform(np.zeros((3, 1)))
        with self.assertRaises(ParameterError):
            update(b, 1, np.array([np.nan]), models, FilterParams(K=3), np.random.default_rng(0))

    def test_lightdark_localizes_in_light(self):
        env = LightDarkEnvironment()
        rng = np.random.default_rng(4)
        particles = rng.uniform((1.5, 0.6), (2.0, 1.2), size=(2000, 2))
        b = ParticleBelief.uniform(particles)
        o = np.array([1.7, 1.0])
        out = update(b, env.spec.action_index("North"), o, env.models, FilterParams(K=2000), rng)
        np.testing.assert_allclose(out.mean(), o, atol=0.02)

    def test_floor_observation_update(self):
        env = FloorEnvironment()
        rng = np.random.default_rng(5)
        pf = ParticleFilter(env.models, FilterParams(), env.env_map)
        b = pf.initial_belief(rng)
        s = np.array([0.5, 0.25])
        s, o, _, _ = env.step(s, env.spec.action_index("East"), rng)
        b = pf.update(b, env.spec.action_index("East"), o, rng)
        self.assertAlmostEqual(b.weights.sum(), 1.0)
        self.assertEqual(b.size, 100)
