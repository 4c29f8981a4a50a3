import unittest

import numpy as np

from beliefplan.bench import EpisodeRecord, run_episode
from beliefplan.envs import FloorEnvironment, LightDarkConfig, LightDarkEnvironment, TigerEnvironment
from beliefplan.filtering import FilterParams
from beliefplan.planner import PFTDPWPlanner, PlannerParams, RandomPlanner

from ..toy_models import ScriptedPlanner


class TestScriptedEpisodes(unittest.TestCase):
    def test_floor_hallway(self):
        env = FloorEnvironment()
        planner = ScriptedPlanner(env, [env.spec.action_index("East")] * 12)
        record = run_episode(env, planner, FilterParams(K=50), initial_state=[0.36, 0.25], record_timing=False)
        self.assertEqual(record.n_steps, 12)
        self.assertEqual(record.total_reward, 100.0)
        self.assertTrue(record.success)
        self.assertEqual(record.status, "goal")
        self.assertEqual(record.trap_entries, 0)

    def test_lightdark_through_trap(self):
        env = LightDarkEnvironment()
        planner = ScriptedPlanner(env, [env.spec.action_index("SouthEast")] * 2)
        record = run_episode(env, planner, FilterParams(K=50), initial_state=[0.6, 0.7], record_timing=False)
        self.assertEqual([s.reward for s in record.steps], [-100.0, 100.0])
        self.assertEqual(record.total_reward, 0.0)
        self.assertEqual(record.trap_entries, 1)
        self.assertTrue(record.success)

    def test_step_limit(self):
        env = LightDarkEnvironment(LightDarkConfig(max_steps=3))
        planner = ScriptedPlanner(env, [env.spec.action_index("North")] * 3)
        record = run_episode(env, planner, FilterParams(K=20), initial_state=[0.3, 1.0])
        self.assertEqual(record.n_steps, 3)
        self.assertEqual(record.status, "step_limit")
        self.assertFalse(record.success)
        self.assertGreaterEqual(record.mean_plan_time, 0.0)

    def test_tiger(self):
        env = TigerEnvironment()
        record = run_episode(env, RandomPlanner(env), FilterParams(K=50), seed=3)
        self.assertIn(record.status, ("goal", "failure", "step_limit"))
        self.assertEqual(record.to_row()["steps"], record.n_steps)


class TestRecords(unittest.TestCase):
    def run_lightdark(self, seed, **kwargs):
        env = LightDarkEnvironment(LightDarkConfig(max_steps=8))
        planner = PFTDPWPlanner(env, PlannerParams(n_iter=15, m=20, H=3))
        return run_episode(env, planner, FilterParams(K=30), seed=seed, record_timing=False, **kwargs)

    def test_deterministic(self):
        self.assertEqual(self.run_lightdark(5).to_dict(), self.run_lightdark(5).to_dict())

    def test_episodes_differ(self):
        self.assertNotEqual(self.run_lightdark(5).initial_state, self.run_lightdark(6).initial_state)

    def test_zero_timing(self):
        record = self.run_lightdark(1)
        self.assertEqual(record.mean_plan_time, 0.0)
        self.assertEqual(record.mean_filter_time, 0.0)

    def test_trace_and_diagnostics(self):
        record = self.run_lightdark(2, trace=True, tree_diag=True)
        self.assertEqual(len(record.snapshots), record.n_steps + 1)
        self.assertEqual(len(record.tree_diagnostics), record.n_steps)
        self.assertIn("tree_size", record.tree_diagnostics[0])
        self.assertEqual(record.states().shape, (record.n_steps + 1, 2))

    def test_from_dict(self):
        record = self.run_lightdark(2, trace=True)
        self.assertEqual(EpisodeRecord.from_dict(record.to_dict()).to_row(), record.to_row())

    def test_empty_record(self):
        record = EpisodeRecord(seed=0, episode=0)
        self.assertTrue(np.isnan(record.mean_particle_distance))
        self.assertEqual(record.total_reward, 0.0)
