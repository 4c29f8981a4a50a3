import contextlib
import io
import json
import os
import tempfile
import unittest

from beliefplan.bench import run_episode
from beliefplan.bench.cli import build_parser, main, run_config
from beliefplan.envs import FloorConfig, FloorEnvironment
from beliefplan.filtering import FilterParams

from ..toy_models import ScriptedPlanner


class TestCli(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmpdir.cleanup()

    def path(self, name):
        return os.path.join(self.tmpdir.name, name)

    def run_bench(self, *argv):
        out = io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
            code = main(list(argv))
        return code, out.getvalue()

    def run_tiger(self, name, seeds="2"):
        return self.run_bench(
            "run",
            "--env", "tiger",
            "--planner", "random",
            "--seeds", seeds,
            "--episodes", "3",
            "--out", self.path(f"{name}.csv"),
            "--summary", self.path(f"{name}.json"),
            "--no-timing",
        )

    def test_run(self):
        code, out = self.run_tiger("tiger")
        self.assertEqual(code, 0)
        self.assertIn("tiger / random", out)
        with open(self.path("tiger.json"), encoding="utf-8") as f:
            self.assertEqual(json.load(f)["episodes_per_seed"], 3)

    def test_config_file_and_overrides(self):
        path = self.path("run.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump({"env": "tiger", "planner": "random", "seeds": 4}, f)
        config = run_config(build_parser().parse_args(["run", "--config", path, "--seeds", "1", "--jobs", "2"]))
        self.assertEqual((config.env, config.seeds, config.n_jobs), ("tiger", 1, 2))

    def test_full(self):
        config = run_config(build_parser().parse_args(["run", "--env", "floor", "--full"]))
        self.assertEqual((config.seeds, config.episodes), (10, 1000))

    def test_bad_arguments(self):
        self.assertEqual(self.run_bench("run", "--env", "maze")[0], 2)
        self.assertEqual(self.run_bench("run", "--env", "floor", "--ablation", "mismatch")[0], 2)
        self.assertEqual(self.run_bench("run", "--env", "tiger", "--planner", "straight")[0], 2)
        self.assertEqual(self.run_bench("run", "--config", self.path("absent.json"))[0], 2)
        self.assertEqual(self.run_bench("run", "--env", "tiger", "--planner", "random", "--tree-diag")[0], 2)

    def test_compare(self):
        self.run_tiger("a")
        self.run_tiger("b", seeds="3")
        code, out = self.run_bench("compare", self.path("a.csv"), self.path("b.csv"), "--metric", "success")
        self.assertEqual(code, 0)
        self.assertIn("one-sided p", out)
        code, out = self.run_bench("compare", self.path("a.csv"), self.path("b.csv"))
        self.assertEqual(code, 0)
        self.assertEqual(self.run_bench("compare", self.path("a.csv"), self.path("b.csv"), "--metric", "luck")[0], 2)

    def test_render(self):
        env = FloorEnvironment(FloorConfig(max_steps=3))
        planner = ScriptedPlanner(env, [env.spec.action_index("East")] * 3)
        record = run_episode(env, planner, FilterParams(K=30), initial_state=[0.36, 0.25], trace=True)
        trace = record.to_dict()
        trace["map"] = env.env_map.to_dict()
        path = self.path("trace.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(trace, f)
        code, _ = self.run_bench("render", path, "--out", self.path("trace.svg"), "--steps", "0", "3")
        self.assertEqual(code, 0)
        with open(self.path("trace.svg"), encoding="utf-8") as f:
            self.assertEqual(f.read().count('id="trajectory-'), 3)

    def test_render_without_map(self):
        trace = self.path("tiger_trace")
        self.run_bench("run", "--env", "tiger", "--planner", "random", "--seeds", "1", "--episodes", "1", "--trace", trace)
        code, _ = self.run_bench(
            "render", os.path.join(trace, "seed0_episode0.json"), "--out", self.path("tiger.svg")
        )
        self.assertEqual(code, 2)
