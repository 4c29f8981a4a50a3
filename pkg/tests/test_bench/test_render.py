import unittest

import numpy as np

from beliefplan.bench import EpisodeRecord, render_trajectory, run_episode, trajectory_figure
from beliefplan.envs import FloorEnvironment
from beliefplan.exceptions import ConfigurationError
from beliefplan.filtering import FilterParams

from ..toy_models import ScriptedPlanner


class TestRender(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.env = FloorEnvironment()
        planner = ScriptedPlanner(cls.env, [cls.env.spec.action_index("East")] * 12)
        cls.record = run_episode(
            cls.env, planner, FilterParams(K=60), initial_state=[0.36, 0.25], record_timing=False, trace=True
        )

    def test_empty_record(self):
        svg = render_trajectory(EpisodeRecord(seed=0, episode=0), self.env.env_map)
        self.assertIn("<svg", svg)
        self.assertTrue(svg.rstrip().endswith("</svg>"))
        self.assertNotIn('id="trajectory-', svg)

    def test_one_segment_per_step(self):
        svg = render_trajectory(self.record, self.env.env_map)
        self.assertEqual(svg.count('id="trajectory-'), 12)
        self.assertIn('id="belief-mean"', svg)
        self.assertIn('id="particles-0"', svg)
        self.assertIn('id="region-goal_bottom"', svg)

    def test_initial_cloud_covers_both_floors(self):
        particles = np.array(self.record.snapshots[0]["particles"])
        self.assertTrue((particles[:, 1] < 0.5).any())
        self.assertTrue((particles[:, 1] > 0.5).any())

    def test_from_trace_dict(self):
        fig = trajectory_figure(self.record.to_dict(), self.env.env_map, particle_steps=(0, 12, 40))
        gids = {artist.get_gid() for artist in fig.axes[0].get_children()}
        self.assertIn("particles-12", gids)
        self.assertNotIn("particles-40", gids)

    def test_deterministic(self):
        self.assertEqual(render_trajectory(self.record, self.env.env_map), render_trajectory(self.record, self.env.env_map))

    def test_needs_map(self):
        with self.assertRaises(ConfigurationError):
            trajectory_figure(self.record, None)
