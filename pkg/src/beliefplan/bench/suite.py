# Copyright © 2023 The beliefplan developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================

"""Suites of episodes over a ladder of seeds, and their summaries.

Metrics are first averaged per seed, then the seed means are averaged; standard
errors are taken over the seed means. Steps, particle distance and
``reward_success`` only consider successful episodes.
"""

import json
import logging
import math
import os
from dataclasses import dataclass, field

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from ..core.rng import episode_streams, seed_ladder
from .config import BenchConfig
from .episode import run_episode

logger = logging.getLogger(__name__)

CSV_COLUMNS = [
    "seed",
    "episode",
    "success",
    "steps",
    "reward",
    "mean_particle_distance",
    "mean_plan_time_s",
    "mean_filter_time_s",
    "trap_entries",
    "degeneracy_events",
]

# metric name -> (column, only over successful episodes)
METRICS = {
    "success": ("success", False),
    "reward": ("reward", False),
    "reward_success": ("reward", True),
    "steps": ("steps", True),
    "particle_distance": ("mean_particle_distance", True),
    "plan_time_s": ("mean_plan_time_s", False),
    "filter_time_s": ("mean_filter_time_s", False),
    "trap_entries": ("trap_entries", False),
}


def _nan_to_none(value):
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


@dataclass
class RunSummary:
    """Mean-of-means summary of a suite.

    Attributes
    ----------
    scenario, planner: str
    n_seeds, episodes_per_seed: int
    metrics: dict
        For each metric, ``{"mean", "se", "n_seeds"}`` over the seeds where it
        is defined.
    per_seed: list of dict
        Per-seed means, in seed-ladder order.
    degeneracy_events: int
        Total filter rebuilds over the suite.
    """

    scenario: str
    planner: str
    n_seeds: int
    episodes_per_seed: int
    metrics: dict = field(default_factory=dict)
    per_seed: list = field(default_factory=list)
    degeneracy_events: int = 0

    def mean(self, metric):
        return self.metrics[metric]["mean"]

    def se(self, metric):
        return self.metrics[metric]["se"]

    def to_dict(self):
        return {
            "scenario": self.scenario,
            "planner": self.planner,
            "n_seeds": self.n_seeds,
            "episodes_per_seed": self.episodes_per_seed,
            "metrics": {
                name: {k: _nan_to_none(v) for k, v in values.items()}
                for name, values in self.metrics.items()
            },
            "per_seed": [{k: _nan_to_none(v) for k, v in row.items()} for row in self.per_seed],
            "degeneracy_events": self.degeneracy_events,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def print_stats(self, file=None):
        """Print the summary as a table

        Arguments
        ---------

        file: None, optional
            Text stream to which output should be redirected. By default sys.stdout.
        """
        print(
            f"{self.scenario} / {self.planner}: {self.n_seeds} seeds x {self.episodes_per_seed} episodes",
            file=file,
        )
        print(f"{'Metric':18} {'Mean':>12} {'SE':>12} {'Seeds':>6}", file=file)
        for name, values in self.metrics.items():
            print(
                f"{name:18} {values['mean']:>12.4g} {values['se']:>12.4g} {values['n_seeds']:>6}",
                file=file,
            )
        print(f"Degeneracy events: {self.degeneracy_events}", file=file)


def mean_and_se(values):
    """Mean of the finite values and its standard error (zero for a single value)."""
    values = np.asarray(values, dtype=float)
    values = values[~np.isnan(values)]
    n = values.size
    if n == 0:
        return {"mean": math.nan, "se": math.nan, "n_seeds": 0}
    se = float(values.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return {"mean": float(values.mean()), "se": se, "n_seeds": int(n)}


def per_seed_means(episodes):
    """One row per seed with the mean of every metric, in seed order."""
    rows = []
    for seed, group in episodes.groupby("seed", sort=False):
        successful = group[group["success"].astype(bool)]
        row = {"seed": int(seed), "episodes": int(len(group))}
        for name, (column, conditioned) in METRICS.items():
            source = successful if conditioned else group
            row[name] = float(source[column].astype(float).mean()) if len(source) else math.nan
        rows.append(row)
    return pd.DataFrame(rows)


def summarize(episodes, scenario="", planner=""):
    """Summarize a per-episode table into a :class:`RunSummary`."""
    seeds = per_seed_means(episodes)
    metrics = {name: mean_and_se(seeds[name]) for name in METRICS}
    return RunSummary(
        scenario=scenario,
        planner=planner,
        n_seeds=int(len(seeds)),
        episodes_per_seed=int(seeds["episodes"].max()) if len(seeds) else 0,
        metrics=metrics,
        per_seed=[
            {k: int(v) if k in ("seed", "episodes") else float(v) for k, v in row.items()}
            for row in seeds.to_dict("records")
        ],
        degeneracy_events=int(episodes["degeneracy_events"].sum()),
    )


def _run_one(config, seed, episode):
    env = config.build_environment(episode_streams(seed, episode)["layout"])
    planner = config.build_planner(env)
    record = run_episode(
        env,
        planner,
        config.filter_settings(),
        seed,
        episode,
        record_timing=config.record_timing,
        trace=config.trace is not None,
        tree_diag=config.tree_diag,
    )
    if config.trace is not None:
        trace = record.to_dict()
        trace["map"] = env.env_map.to_dict() if env.env_map is not None else None
        path = os.path.join(config.trace, f"seed{seed}_episode{episode}.json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(trace, f)
    return record


@dataclass
class SuiteResult:
    """Records, per-episode table and summary of a suite"""

    config: BenchConfig
    records: list
    episodes: pd.DataFrame
    summary: RunSummary

    def write(self):
        """Write the CSV table and the JSON summary where the configuration says."""
        if self.config.out is not None:
            self.episodes.to_csv(self.config.out, index=False)
            logger.info("Wrote %d episodes to %s", len(self.episodes), self.config.out)
        if self.config.summary is not None:
            with open(self.config.summary, "w", encoding="utf-8") as f:
                f.write(self.summary.to_json())
                f.write("\n")
            logger.info("Wrote summary to %s", self.config.summary)


def run_suite(config, n_seeds=None, episodes_per_seed=None):
    """Run every episode of a suite.

    Parameters
    ----------
    config: BenchConfig or str
        Configuration, or the name of a scenario run with default settings.
    n_seeds, episodes_per_seed: int, optional
        Override the sizes of the configuration.

    Returns
    -------
    SuiteResult
    """
    if isinstance(config, str):
        config = BenchConfig.from_scenario(config)
    if n_seeds is not None:
        config = config.replace(seeds=n_seeds)
    if episodes_per_seed is not None:
        config = config.replace(episodes=episodes_per_seed)
    if config.trace is not None:
        os.makedirs(config.trace, exist_ok=True)

    seeds = seed_ladder(config.base_seed, config.seeds)
    # configuration errors surface here, before any episode runs
    config.build_planner(config.build_environment(episode_streams(seeds[0], 0)["layout"]))
    logger.info(
        "Running %s with planner %s: %d seeds x %d episodes",
        config.scenario,
        config.planner,
        config.seeds,
        config.episodes,
    )
    jobs = [(seed, episode) for seed in seeds for episode in range(config.episodes)]
    records = Parallel(n_jobs=config.n_jobs)(delayed(_run_one)(config, seed, ep) for seed, ep in jobs)

    episodes = pd.DataFrame([r.to_row() for r in records], columns=CSV_COLUMNS)
    summary = summarize(episodes, config.scenario, config.planner)
    for row in summary.per_seed:
        logger.info("Seed %d: success %.3f, reward %.3f", row["seed"], row["success"], row["reward"])
    logger.info(
        "Done %s: success %.3f, reward %.3f", config.scenario, summary.mean("success"), summary.mean("reward")
    )
    return SuiteResult(config, records, episodes, summary)
