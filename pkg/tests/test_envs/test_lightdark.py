import math
import unittest

import numpy as np
from scipy.stats import chisquare

from beliefplan.bench import run_episode
from beliefplan.core import EnvMap
from beliefplan.envs import (
    LightDarkConfig,
    LightDarkEnvironment,
    lightdark_log_density,
    lightdark_observe,
    lightdark_propose,
    region_of,
    spawn_test_traps,
)
from beliefplan.exceptions import ConfigurationError
from beliefplan.filtering import FilterParams
from beliefplan.planner import PFTDPWPlanner, PlannerParams, StraightToGoalPlanner


class TestObservations(unittest.TestCase):
    def setUp(self):
        self.env = LightDarkEnvironment()
        self.cfg = self.env.config
        self.rng = np.random.default_rng(0)

    def test_regions(self):
        states = np.array([[1.49, 1.0], [1.5, 1.0], [2.0, 0.0], [0.3, 1.9]])
        self.assertEqual(region_of(self.env.env_map, states).tolist(), ["dark", "light", "light", "dark"])

    def test_light_noise(self):
        s = np.tile([1.75, 1.0], (10000, 1))
        o = lightdark_observe(self.cfg, self.env.env_map, s, self.rng)
        failures = (np.abs(o - s) > 0.05).any(axis=1).sum()
        self.assertLessEqual(failures, 1)

    def test_dark_noise(self):
        s = np.tile([0.5, 1.0], (5000, 1))
        o = lightdark_observe(self.cfg, self.env.env_map, s, self.rng)
        np.testing.assert_allclose(o.std(axis=0), 0.3, rtol=0.05)

    def test_log_likelihood_consistent(self):
        n = 10000
        for point, sigma in (([1.75, 1.0], self.cfg.sigma_light), ([0.5, 1.0], self.cfg.sigma_dark)):
            with self.subTest(point=point):
                s = np.tile(point, (n, 1))
                o = lightdark_observe(self.cfg, self.env.env_map, s, self.rng)
                log_lik = lightdark_log_density(self.cfg, self.env.env_map, o, s)
                expected = -2 * (0.5 * math.log(2.0 * math.pi * sigma**2) + 0.5)
                self.assertLess(abs(log_lik.mean() - expected), 3.0 * log_lik.std() / math.sqrt(n))

    def test_density_peaks_at_state(self):
        s = np.array([[0.5, 1.0]])
        offsets = np.array([[0.0, 0.0], [0.1, 0.0], [0.0, -0.2], [0.3, 0.3]])
        values = [lightdark_log_density(self.cfg, self.env.env_map, s[0] + d, s)[0] for d in offsets]
        self.assertEqual(int(np.argmax(values)), 0)

    def test_dark_proposer_spread(self):
        o = np.array([0.7, 1.0])
        states = lightdark_propose(self.cfg, self.env.env_map, o, 10000, self.rng)
        np.testing.assert_allclose(states.std(axis=0), 0.1, rtol=0.05)
        np.testing.assert_allclose(states.mean(axis=0), o, atol=0.01)

    def test_light_proposer_spread(self):
        o = np.array([1.7, 1.0])
        states = lightdark_propose(self.cfg, self.env.env_map, o, 10000, self.rng)
        np.testing.assert_allclose(states.std(axis=0), 0.01, rtol=0.05)

    def test_proposals_in_bounds(self):
        states = lightdark_propose(self.cfg, self.env.env_map, np.array([2.3, -0.4]), 500, self.rng)
        self.assertTrue(self.env.env_map.bounds.contains(states).all())

    def test_bad_config(self):
        with self.assertRaises(ConfigurationError):
            LightDarkConfig(sigma_light=0.5, sigma_dark=0.3)


class TestTraps(unittest.TestCase):
    def setUp(self):
        self.cfg = LightDarkConfig()
        self.env_map = LightDarkEnvironment(ablation="traps", rng=np.random.default_rng(0)).env_map

    def test_replaces_fixed_traps(self):
        names = sorted(t.name for t in self.env_map.regions_of("trap"))
        self.assertEqual(names, ["random_trap_0", "random_trap_1"])

    def test_deterministic(self):
        a = spawn_test_traps(self.cfg, self.env_map, np.random.default_rng(3))
        b = spawn_test_traps(self.cfg, self.env_map, np.random.default_rng(3))
        self.assertEqual([t.rect.as_list() for t in a], [t.rect.as_list() for t in b])

    def test_inside_bounds(self):
        for seed in range(50):
            for trap in spawn_test_traps(self.cfg, self.env_map, np.random.default_rng(seed)):
                corners = np.array([[trap.rect.xmin, trap.rect.ymin], [trap.rect.xmax, trap.rect.ymax]])
                self.assertTrue(self.env_map.bounds.contains(corners).all())

    def test_centers_uniform(self):
        xs = []
        for seed in range(500):
            trap = spawn_test_traps(self.cfg, self.env_map, np.random.default_rng(seed))[0]
            xs.append((trap.rect.xmin + trap.rect.xmax) / 2.0)
        counts, _ = np.histogram(xs, bins=4, range=(0.8, 1.3))
        self.assertGreater(chisquare(counts).pvalue, 0.01)

    def test_needs_generator(self):
        with self.assertRaises(ConfigurationError):
            LightDarkEnvironment(ablation="traps")

    def test_unknown_ablation(self):
        with self.assertRaises(ConfigurationError):
            LightDarkEnvironment(ablation="fog")


class TestModels(unittest.TestCase):
    def test_mismatch_world_noise(self):
        env = LightDarkEnvironment(ablation="mismatch")
        rng = np.random.default_rng(0)
        s = np.tile([0.5, 1.0], (5000, 1))
        world = env.world_models.obs_generator(s, rng)
        planner = env.models.obs_generator(s, rng)
        np.testing.assert_allclose(world.std(axis=0), 0.6, rtol=0.05)
        np.testing.assert_allclose(planner.std(axis=0), 0.3, rtol=0.05)

    def test_vanilla_world_is_planner_model(self):
        env = LightDarkEnvironment()
        self.assertIs(env.world_models, env.models)

    def test_filter_override(self):
        env = LightDarkEnvironment()
        models = env.filter_models(FilterParams(proposer_std_by_region={"dark": 0.25}))
        states = models.proposer(np.array([1.0, 1.0]), 10000, np.random.default_rng(0))
        np.testing.assert_allclose(states.std(axis=0), 0.25, rtol=0.05)
        self.assertIs(env.filter_models(FilterParams()), env.models)

    def test_filter_override_unknown_region(self):
        env = LightDarkEnvironment()
        with self.assertRaises(ConfigurationError):
            env.filter_models(FilterParams(proposer_std_by_region={"dusk": 0.5}))


class TestLayout(unittest.TestCase):
    def setUp(self):
        self.env_map = LightDarkEnvironment().env_map
        self.goal = self.env_map.regions_of("goal")[0].rect

    def test_traps_flank_goal(self):
        traps = sorted((t.rect for t in self.env_map.regions_of("trap")), key=lambda r: r.xmin)
        self.assertEqual(len(traps), 2)
        self.assertAlmostEqual(self.goal.xmin - traps[0].xmax, 0.1)
        self.assertAlmostEqual(traps[1].xmin - self.goal.xmax, 0.1)
        for trap in traps:
            self.assertFalse(trap.overlaps(self.goal))
            self.assertEqual((trap.ymin, trap.ymax), (self.goal.ymin, self.goal.ymax))

    def test_goal_reachable_from_above(self):
        centre = np.array([[(self.goal.xmin + self.goal.xmax) / 2.0, y] for y in np.linspace(self.goal.ymax, 2.0, 20)])
        self.assertFalse(self.env_map.in_kind(centre[1:], "trap").any())

    def test_random_traps_clear_of_goal(self):
        cfg = LightDarkConfig()
        for seed in range(50):
            for trap in spawn_test_traps(cfg, self.env_map, np.random.default_rng(seed)):
                self.assertGreater(trap.rect.ymin, self.goal.ymax)


class TestTrapAvoidance(unittest.TestCase):
    """A trap sits on the straight line from the start to the goal"""

    seeds = (0, 1, 2)

    @classmethod
    def setUpClass(cls):
        env_map = EnvMap.from_dict(
            {
                "bounds": [0.0, 0.0, 2.0, 2.0],
                "regions": [
                    {"name": "light", "kind": "light", "rect": [1.5, 0.0, 2.0, 2.0]},
                    {"name": "start", "kind": "start", "rect": [0.25, 0.95, 0.35, 1.05]},
                    {"name": "goal", "kind": "goal", "rect": [1.2, 0.85, 1.5, 1.15]},
                    {"name": "trap", "kind": "trap", "rect": [0.6, 0.7, 1.0, 1.3]},
                ],
            }
        )
        env = LightDarkEnvironment(LightDarkConfig(max_steps=60), env_map=env_map)
        planners = {
            "pft": PFTDPWPlanner(env, PlannerParams(n_iter=60, m=50)),
            "straight": StraightToGoalPlanner(env),
        }
        cls.records = {
            name: [
                run_episode(env, planner, FilterParams(), seed=seed, initial_state=[0.3, 1.0], record_timing=False)
                for seed in cls.seeds
            ]
            for name, planner in planners.items()
        }

    def test_straight_crosses_trap(self):
        for record in self.records["straight"]:
            self.assertGreaterEqual(record.trap_entries, 1)

    def test_fewer_trap_entries(self):
        entries = {name: sum(r.trap_entries for r in records) for name, records in self.records.items()}
        self.assertLess(entries["pft"], entries["straight"])

    def test_higher_reward(self):
        rewards = {name: np.mean([r.total_reward for r in records]) for name, records in self.records.items()}
        self.assertGreater(rewards["pft"], rewards["straight"])
