import unittest

import numpy as np

from beliefplan.envs import FloorEnvironment, LightDarkEnvironment, TigerEnvironment
from beliefplan.exceptions import ParameterError
from beliefplan.filtering import ParticleBelief
from beliefplan.planner import RandomPlanner, StraightToGoalPlanner


def point_belief(x, y):
    return ParticleBelief.uniform(np.array([[x, y]]))


class TestStraightToGoal(unittest.TestCase):
    def test_floor(self):
        env = FloorEnvironment()
        planner = StraightToGoalPlanner(env)
        rng = np.random.default_rng(0)
        self.assertEqual(planner.plan(point_belief(0.5, 0.25), rng), env.spec.action_index("East"))
        self.assertEqual(planner.plan(point_belief(0.5, 0.75), rng), env.spec.action_index("West"))

    def test_lightdark_diagonal(self):
        env = LightDarkEnvironment()
        planner = StraightToGoalPlanner(env)
        a = planner.plan(point_belief(0.3, 1.0), np.random.default_rng(0))
        self.assertEqual(a, env.spec.action_index("SouthEast"))
        self.assertEqual(planner.diagnostics["action"], a)

    def test_on_goal(self):
        planner = StraightToGoalPlanner(LightDarkEnvironment())
        self.assertEqual(planner.plan(point_belief(1.0, 0.45), np.random.default_rng(0)), 0)

    def test_needs_map(self):
        with self.assertRaises(ParameterError):
            StraightToGoalPlanner(TigerEnvironment())


class TestRandom(unittest.TestCase):
    def test_actions_in_range(self):
        env = TigerEnvironment()
        planner = RandomPlanner(env)
        rng = np.random.default_rng(0)
        actions = {planner.plan(None, rng) for _ in range(100)}
        self.assertEqual(actions, {0, 1, 2})

    def test_name(self):
        self.assertEqual(str(RandomPlanner(TigerEnvironment())), "randomplanner")
        self.assertEqual(str(RandomPlanner(TigerEnvironment(), name="coin")), "coin")
