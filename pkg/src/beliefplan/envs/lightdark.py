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

"""Light-dark navigation.

The agent observes its own position with noise that is small in the light band
on the right of the world and large elsewhere, so reaching the goal reliably
pays for a detour through the light.

Two ablations are supported:

* ``traps``: the fixed traps are replaced by two squares spawned at random in
  a strip between the start and the light band. The planner sees them.
* ``mismatch``: the world generates dark-region observations with a standard
  deviation ``sigma_test`` the planner and the filter do not know about.
"""

import logging
from dataclasses import asdict, dataclass

import numpy as np
from scipy.stats import norm

from ..core.geometry import EnvMap, Rect, Region
from ..core.pomdp import ModelSuite, PomdpSpec, compass_actions
from ..exceptions import ConfigurationError
from .maps import lightdark_map_dict
from .navigation import NavigationEnvironment, navigation_models

logger = logging.getLogger(__name__)

ABLATIONS = ("none", "traps", "mismatch")


@dataclass(frozen=True)
class LightDarkConfig:
    """Parameters of the light-dark environment.

    Attributes
    ----------
    speed: float
        Length of one move.
    sigma_light, sigma_dark: float
        Observation noise in and out of the light band.
    proposer_std_light, proposer_std_dark: float
        Spread of proposed states around the observation, by region of the
        observation.
    trap_size: float
        Side of the random traps.
    trap_strip: tuple of float
        ``(xmin, ymin, xmax, ymax)`` of the strip holding random trap centers.
        The default strip keeps the traps above the goal.
    sigma_test: float
        Dark-region observation noise of the world under the mismatch ablation.
    trap_aware_rollout: bool
        Charge the rollout for the traps crossed on the way to the goal.
    """

    speed: float = 0.2
    sigma_light: float = 0.01
    sigma_dark: float = 0.3
    proposer_std_light: float = 0.01
    proposer_std_dark: float = 0.1
    trap_size: float = 0.5
    trap_strip: tuple = (0.8, 0.9, 1.3, 2.0)
    sigma_test: float = 0.6
    trap_aware_rollout: bool = True
    process_noise_std: float = 0.0
    discount: float = 0.99
    max_steps: int = 200
    goal_reward: float = 100.0
    trap_penalty: float = -100.0

    def __post_init__(self):
        object.__setattr__(self, "trap_strip", tuple(self.trap_strip))
        if not 0.0 < self.sigma_light < self.sigma_dark:
            raise ConfigurationError(
                "LightDarkConfig", "need 0 < sigma_light < sigma_dark"
            )
        if self.sigma_test <= 0.0:
            raise ConfigurationError("LightDarkConfig", "sigma_test should be positive")
        if self.trap_size <= 0.0:
            raise ConfigurationError("LightDarkConfig", "trap_size should be positive")

    @classmethod
    def from_dict(cls, data):
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(**known)

    def to_dict(self):
        return asdict(self)


def in_light(env_map, states):
    return env_map.in_kind(np.atleast_2d(states), "light")


def region_of(env_map, states):
    """``"light"`` or ``"dark"`` for each state."""
    return np.where(in_light(env_map, states), "light", "dark")


def _noise_std(cfg, env_map, states, sigma_dark=None):
    if sigma_dark is None:
        sigma_dark = cfg.sigma_dark
    return np.where(in_light(env_map, states), cfg.sigma_light, sigma_dark)


def lightdark_observe(cfg, env_map, states, rng, sigma_dark=None):
    """Position plus isotropic Gaussian noise whose scale depends on the region of the state."""
    states = np.atleast_2d(states)
    std = _noise_std(cfg, env_map, states, sigma_dark)
    return states + rng.normal(size=states.shape) * std[:, None]


def lightdark_log_density(cfg, env_map, o, states):
    states = np.atleast_2d(states)
    std = _noise_std(cfg, env_map, states)[:, None]
    return norm.logpdf(np.asarray(o, dtype=float), loc=states, scale=std).sum(axis=1)


def lightdark_density(cfg, env_map, o, states):
    return np.exp(lightdark_log_density(cfg, env_map, o, states))


def lightdark_propose(cfg, env_map, o, n, rng, stds=None):
    """Draw ``n`` states around ``o``, projected into the bounds.

    Parameters
    ----------
    stds: dict, optional
        Spread per region name of ``o`` (``"light"``, ``"dark"``); defaults to the
        proposer spreads of ``cfg``.
    """
    o = np.asarray(o, dtype=float)
    if stds is None:
        stds = {"light": cfg.proposer_std_light, "dark": cfg.proposer_std_dark}
    region = region_of(env_map, env_map.clamp(o))[0]
    return env_map.clamp(o + rng.normal(0.0, stds[region], size=(n, o.shape[0])))


def spawn_test_traps(cfg, env_map, rng):
    """Two square traps with centers uniform over the trap strip.

    Squares are clipped to the bounds and redrawn when they overlap a goal.

    Returns
    -------
    list of Region
    """
    xmin, ymin, xmax, ymax = cfg.trap_strip
    half = cfg.trap_size / 2.0
    goals = [g.rect for g in env_map.regions_of("goal")]
    traps = []
    while len(traps) < 2:
        cx, cy = rng.uniform((xmin, ymin), (xmax, ymax))
        rect = Rect(cx - half, cy - half, cx + half, cy + half).clipped(env_map.bounds)
        if any(rect.overlaps(g) for g in goals):
            continue
        traps.append(Region(f"random_trap_{len(traps)}", "trap", rect))
    logger.debug("Spawned traps %s", [t.rect.as_list() for t in traps])
    return traps


class LightDarkEnvironment(NavigationEnvironment):
    """Light-dark navigation environment.

    Parameters
    ----------
    config: LightDarkConfig, optional
    env_map: EnvMap, optional
        Replaces the default map.
    ablation: str, optional
        One of ``"none"``, ``"traps"``, ``"mismatch"``.
    rng: numpy.random.Generator, optional
        Generator spawning the random traps; required by the ``traps`` ablation.
    """

    _default_name = "lightdark"

    def __init__(self, config=None, env_map=None, ablation="none", rng=None, name=None):
        if ablation not in ABLATIONS:
            raise ConfigurationError("lightdark", f"unknown ablation {ablation!r}")
        config = config if config is not None else LightDarkConfig()
        if env_map is None:
            env_map = EnvMap.from_dict(lightdark_map_dict(with_traps=ablation != "traps"))
        if ablation == "traps":
            if rng is None:
                raise ConfigurationError("lightdark", "random traps need a generator")
            env_map = env_map.with_regions(spawn_test_traps(config, env_map, rng))
        self.ablation = ablation
        self.avoid_traps = config.trap_aware_rollout
        spec = PomdpSpec(
            compass_actions(config.speed),
            discount=config.discount,
            max_steps=config.max_steps,
            goal_reward=config.goal_reward,
            trap_penalty=config.trap_penalty,
        )
        super().__init__(spec, env_map, config, name)

    def _suite(self, stds=None, sigma_dark=None):
        cfg = self.config
        m = self.env_map
        return ModelSuite(
            obs_density=lambda o, states: lightdark_density(cfg, m, o, states),
            obs_log_density=lambda o, states: lightdark_log_density(cfg, m, o, states),
            obs_generator=lambda states, rng: lightdark_observe(cfg, m, states, rng, sigma_dark),
            proposer=lambda o, n, rng: lightdark_propose(cfg, m, o, n, rng, stds),
            discount=self.spec.discount,
            **navigation_models(self.spec, m, cfg.process_noise_std),
        )

    def _build_models(self):
        self._models = self._suite()
        if self.ablation == "mismatch":
            self._world_models = self._suite(sigma_dark=self.config.sigma_test)

    def filter_models(self, filter_params):
        """Models for the filter, with proposer spreads overridden by ``filter_params``."""
        override = filter_params.proposer_std_by_region
        if not override:
            return self._models
        stds = {"light": self.config.proposer_std_light, "dark": self.config.proposer_std_dark}
        unknown = set(override) - set(stds)
        if unknown:
            raise ConfigurationError("FilterParams", f"unknown regions {sorted(unknown)}")
        stds.update(override)
        return self._suite(stds=stds)
