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

"""Run one episode of planning, acting and filtering"""

import logging
import math
import time
from dataclasses import dataclass, field

import numpy as np

from ..core.pomdp import Terminal
from ..core.rng import episode_streams
from ..filtering import FilterParams, ParticleFilter, particle_distance

logger = logging.getLogger(__name__)

STATUS_NAMES = {Terminal.GOAL: "goal", Terminal.FAILURE: "failure"}


@dataclass
class StepRecord:
    """What happened during one step of an episode"""

    state: list
    action: int
    observation: list
    reward: float
    belief_mean: list
    particle_distance: float
    plan_time: float
    filter_time: float
    in_trap: bool

    def to_dict(self):
        return {
            "state": self.state,
            "action": self.action,
            "observation": self.observation,
            "reward": self.reward,
            "belief_mean": self.belief_mean,
            "particle_distance": self.particle_distance,
            "plan_time": self.plan_time,
            "filter_time": self.filter_time,
            "in_trap": self.in_trap,
        }


@dataclass
class EpisodeRecord:
    """Trace and totals of one episode.

    Attributes
    ----------
    seed, episode: int
        Seed of the run and index of the episode.
    status: str
        ``"goal"``, ``"failure"`` or ``"step_limit"``.
    initial_state, initial_belief_mean: list
        True state and belief mean before the first step.
    steps: list of StepRecord
    degeneracy_events: int
        Filter rebuilds from the proposer during the episode.
    snapshots: list of dict
        Beliefs before the first step and after every step, when traced.
    tree_diagnostics: list of dict
        Planner diagnostics of every step, when requested.
    """

    seed: int
    episode: int
    status: str = "step_limit"
    initial_state: list = field(default_factory=list)
    initial_belief_mean: list = field(default_factory=list)
    steps: list = field(default_factory=list)
    degeneracy_events: int = 0
    snapshots: list = field(default_factory=list)
    tree_diagnostics: list = field(default_factory=list)

    @property
    def n_steps(self):
        return len(self.steps)

    @property
    def success(self):
        return self.status == "goal"

    @property
    def total_reward(self):
        return float(math.fsum(s.reward for s in self.steps))

    @property
    def trap_entries(self):
        return sum(1 for s in self.steps if s.in_trap)

    def _mean(self, attribute):
        if not self.steps:
            return math.nan
        return float(np.mean([getattr(s, attribute) for s in self.steps]))

    @property
    def mean_particle_distance(self):
        return self._mean("particle_distance")

    @property
    def mean_plan_time(self):
        return self._mean("plan_time")

    @property
    def mean_filter_time(self):
        return self._mean("filter_time")

    def states(self):
        """True states from the initial one to the last, as an ``(n + 1, d)`` array."""
        return np.array([self.initial_state] + [s.state for s in self.steps], dtype=float)

    def belief_means(self):
        return np.array([self.initial_belief_mean] + [s.belief_mean for s in self.steps], dtype=float)

    def to_row(self):
        """Row of the per-episode results table."""
        return {
            "seed": self.seed,
            "episode": self.episode,
            "success": self.success,
            "steps": self.n_steps,
            "reward": self.total_reward,
            "mean_particle_distance": self.mean_particle_distance,
            "mean_plan_time_s": self.mean_plan_time,
            "mean_filter_time_s": self.mean_filter_time,
            "trap_entries": self.trap_entries,
            "degeneracy_events": self.degeneracy_events,
        }

    def to_dict(self):
        return {
            "seed": self.seed,
            "episode": self.episode,
            "status": self.status,
            "initial_state": self.initial_state,
            "initial_belief_mean": self.initial_belief_mean,
            "steps": [s.to_dict() for s in self.steps],
            "degeneracy_events": self.degeneracy_events,
            "snapshots": self.snapshots,
            "tree_diagnostics": self.tree_diagnostics,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            seed=data["seed"],
            episode=data["episode"],
            status=data["status"],
            initial_state=data["initial_state"],
            initial_belief_mean=data["initial_belief_mean"],
            steps=[StepRecord(**s) for s in data["steps"]],
            degeneracy_events=data.get("degeneracy_events", 0),
            snapshots=data.get("snapshots", []),
            tree_diagnostics=data.get("tree_diagnostics", []),
        )


def _clock(record_timing):
    return time.perf_counter() if record_timing else 0.0


def run_episode(
    env,
    planner,
    filter_params=None,
    seed=0,
    episode=0,
    initial_state=None,
    record_timing=True,
    trace=False,
    tree_diag=False,
):
    """Plan, act, observe and filter until the episode ends.

    Parameters
    ----------
    env: AbstractEnvironment
    planner: AbstractPlanner
    filter_params: FilterParams, optional
    seed: int
        Seed of the run; with ``episode`` it determines every random draw.
    episode: int
        Index of the episode within the seed.
    initial_state: array_like, optional
        True initial state; drawn from the environment when not given.
    record_timing: bool
        Measure wall times; when false they are recorded as zero so that
        records are reproducible byte for byte.
    trace: bool
        Keep a snapshot of the belief after every step.
    tree_diag: bool
        Keep the planner diagnostics of every step.

    Returns
    -------
    EpisodeRecord
    """
    if filter_params is None:
        filter_params = FilterParams()
    streams = episode_streams(seed, episode)
    world, filter_rng, planner_rng = streams["world"], streams["filter"], streams["planner"]

    pf = ParticleFilter(env.filter_models(filter_params), filter_params, sampler=env.sample_initial)
    belief = pf.initial_belief(filter_rng)
    if initial_state is None:
        s = env.sample_initial(1, world)[0]
    else:
        s = np.asarray(initial_state, dtype=float)

    record = EpisodeRecord(
        seed=int(seed),
        episode=int(episode),
        initial_state=s.tolist(),
        initial_belief_mean=belief.mean().tolist(),
    )
    if trace:
        record.snapshots.append(belief.to_record())

    for t in range(env.spec.max_steps):
        start = _clock(record_timing)
        a = planner.plan(belief, planner_rng)
        plan_time = _clock(record_timing) - start
        if tree_diag:
            record.tree_diagnostics.append(dict(planner.diagnostics))

        s, o, r, done = env.step(s, a, world, t)

        start = _clock(record_timing)
        belief = pf.update(belief, a, o, filter_rng)
        filter_time = _clock(record_timing) - start

        record.steps.append(
            StepRecord(
                state=s.tolist(),
                action=int(a),
                observation=np.asarray(o, dtype=float).tolist(),
                reward=float(r),
                belief_mean=belief.mean().tolist(),
                particle_distance=particle_distance(belief, s),
                plan_time=plan_time,
                filter_time=filter_time,
                in_trap=env.in_trap(s),
            )
        )
        if trace:
            record.snapshots.append(belief.to_record())
        if done:
            break

    record.status = STATUS_NAMES.get(env.status(s), "step_limit")
    record.degeneracy_events = belief.degeneracy_count
    logger.debug(
        "Seed %d episode %d: %s after %d steps, reward %g",
        seed,
        episode,
        record.status,
        record.n_steps,
        record.total_reward,
    )
    return record
