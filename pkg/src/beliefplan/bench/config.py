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

"""Configuration of benchmark runs"""

import json
from dataclasses import asdict, dataclass, field, fields, replace

from ..envs import FloorConfig, LightDarkConfig, TigerConfig, load_map
from ..exceptions import ConfigurationError
from ..filtering import FilterParams
from ..make import make_environment, make_planner
from ..planner import PlannerParams
from ..registered_environments import registered_environments, registered_planners

SCENARIOS = {
    "floor": ("floor", "none"),
    "lightdark": ("lightdark", "none"),
    "lightdark+traps": ("lightdark", "traps"),
    "lightdark+mismatch": ("lightdark", "mismatch"),
    "tiger": ("tiger", "none"),
}

ENV_CONFIGS = {"floor": FloorConfig, "lightdark": LightDarkConfig, "tiger": TigerConfig}

ABLATIONS = {"floor": ("none",), "lightdark": ("none", "traps", "mismatch"), "tiger": ("none",)}

DEFAULT_SEEDS = 10
DEFAULT_EPISODES = 20
FULL_EPISODES = {"floor": 1000, "lightdark": 500, "tiger": 1000}


@dataclass(frozen=True)
class BenchConfig:
    """Everything needed to reproduce a suite of episodes.

    The fields mirror the flags of ``bench run``; a JSON file with the same keys
    can be loaded with :py:meth:`from_json`.
    """

    env: str = "floor"
    planner: str = "pft"
    ablation: str = "none"
    seeds: int = DEFAULT_SEEDS
    episodes: int = DEFAULT_EPISODES
    base_seed: int = 0
    map: str = None
    out: str = None
    summary: str = None
    trace: str = None
    tree_diag: bool = False
    record_timing: bool = True
    n_jobs: int = 1
    planner_params: dict = field(default_factory=dict)
    filter_params: dict = field(default_factory=dict)
    env_config: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.env not in registered_environments():
            raise ConfigurationError("bench", f"unknown environment {self.env!r}")
        if self.planner not in registered_planners():
            raise ConfigurationError("bench", f"unknown planner {self.planner!r}")
        if self.ablation not in ABLATIONS.get(self.env, ("none",)):
            raise ConfigurationError("bench", f"ablation {self.ablation!r} does not apply to {self.env}")
        if self.seeds < 1 or self.episodes < 1:
            raise ConfigurationError("bench", "seeds and episodes should be positive")
        if self.map is not None and self.env == "tiger":
            raise ConfigurationError("bench", "tiger has no map")
        if self.tree_diag and self.trace is None:
            raise ConfigurationError("bench", "planner diagnostics are written to the traces, give a trace directory")
        # fail before any episode runs
        self.planner_settings()
        self.filter_settings()

    @classmethod
    def from_scenario(cls, scenario, **kwargs):
        """Configuration of a named scenario such as ``"lightdark+traps"``."""
        try:
            env, ablation = SCENARIOS[scenario]
        except KeyError:
            raise ConfigurationError("bench", f"unknown scenario {scenario!r}")
        return cls(env=env, ablation=ablation, **kwargs)

    @classmethod
    def from_dict(cls, data):
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigurationError("bench", f"unknown keys {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, path):
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigurationError(str(path), f"cannot read configuration ({e})")
        return cls.from_dict(data)

    def to_dict(self):
        return asdict(self)

    def replace(self, **changes):
        return replace(self, **changes)

    @property
    def scenario(self):
        return self.env if self.ablation == "none" else f"{self.env}+{self.ablation}"

    def full_size(self):
        """Copy sized like the published evaluation: 10 seeds, full episode counts."""
        return self.replace(seeds=DEFAULT_SEEDS, episodes=FULL_EPISODES.get(self.env, 1000))

    def planner_settings(self):
        try:
            return PlannerParams.from_dict(self.planner_params)
        except TypeError as e:
            raise ConfigurationError("planner_params", str(e))

    def filter_settings(self):
        try:
            return FilterParams.from_dict(self.filter_params)
        except TypeError as e:
            raise ConfigurationError("filter_params", str(e))

    def build_environment(self, rng):
        """Environment of one episode; ``rng`` places random layout elements."""
        kwargs = {}
        if self.env in ENV_CONFIGS:
            kwargs["config"] = ENV_CONFIGS[self.env].from_dict(self.env_config)
        else:
            kwargs.update(self.env_config)
        if self.map is not None:
            kwargs["env_map"] = load_map(self.map)
        if self.ablation != "none":
            kwargs["ablation"] = self.ablation
            kwargs["rng"] = rng
        return make_environment(self.env, **kwargs)

    def build_planner(self, env):
        return make_planner(self.planner, env, self.planner_settings())
