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

"""Floor positioning: find which of two similar floors the agent is on.

The agent starts in the hallway of one of two floors whose hallways look
identical to its radar. Only the rooms next to the divider walls, placed
differently on each floor, tell the floors apart, and the goal is at opposite
ends of the hallway on the two floors.
"""

from dataclasses import asdict, dataclass
from functools import partial

import numpy as np
from scipy.special import logsumexp
from scipy.stats import norm

from ..core.geometry import EnvMap
from ..core.pomdp import ModelSuite, PomdpSpec, compass_actions
from ..exceptions import ConfigurationError
from .maps import floor_map_dict
from .navigation import NavigationEnvironment, navigation_models


@dataclass(frozen=True)
class FloorConfig:
    """Parameters of the floor positioning environment.

    Attributes
    ----------
    speed: float
        Length of one move.
    obs_noise_std: float
        Standard deviation of the noise on each radar range.
    bottom_dividers, top_dividers: tuple of float
        x offsets of the divider walls of each floor; must differ.
    bottom_corridor, top_corridor: tuple of float
        y extent of the hallway of each floor.
    n_candidates: int
        Uniform candidates weighed by the proposer for each draw.
    proposal_jitter: float
        Standard deviation of the jitter added to proposed states.
    """

    speed: float = 0.05
    obs_noise_std: float = 0.01
    bottom_dividers: tuple = (0.25, 0.5, 0.75)
    top_dividers: tuple = (0.125, 0.375, 0.625, 0.875)
    bottom_corridor: tuple = (0.2, 0.3)
    top_corridor: tuple = (0.7, 0.8)
    n_candidates: int = 256
    proposal_jitter: float = 0.01
    process_noise_std: float = 0.0
    discount: float = 0.99
    max_steps: int = 200
    goal_reward: float = 100.0
    trap_penalty: float = -100.0

    def __post_init__(self):
        for name in ("bottom_dividers", "top_dividers", "bottom_corridor", "top_corridor"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if self.obs_noise_std <= 0.0:
            raise ConfigurationError("FloorConfig", "obs_noise_std should be positive")
        if self.n_candidates < 1:
            raise ConfigurationError("FloorConfig", "n_candidates should be positive")
        if self.bottom_dividers == self.top_dividers:
            raise ConfigurationError("FloorConfig", "floors need different divider placements")

    @classmethod
    def from_dict(cls, data):
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(**known)

    def to_dict(self):
        return asdict(self)

    def build_map(self):
        return EnvMap.from_dict(
            floor_map_dict(
                self.bottom_dividers, self.top_dividers, self.bottom_corridor, self.top_corridor
            )
        )


def radar_observe(env_map, states, rng, sigma):
    """Noisy ranges to the nearest wall or boundary, up/down/left/right.

    Parameters
    ----------
    env_map: EnvMap
    states: ndarray of shape (n, 2)
    rng: numpy.random.Generator
    sigma: float
        Standard deviation of the range noise.

    Returns
    -------
    ndarray of shape (n, 4)
        Ranges, clamped to be nonnegative.

    Raises
    ------
    ConfigurationError
        If a state lies on a wall.
    """
    states = np.atleast_2d(states)
    if env_map.on_wall(states).any():
        raise ConfigurationError("radar", "state lies on a wall")
    ranges = env_map.ray_ranges(states)
    if sigma > 0.0:
        ranges = ranges + rng.normal(0.0, sigma, size=ranges.shape)
    return np.maximum(ranges, 0.0)


def radar_log_density(env_map, o, states, sigma):
    """Log of the product of the 4 Gaussian range densities, per state."""
    ranges = env_map.ray_ranges(np.atleast_2d(states))
    return norm.logpdf(np.asarray(o, dtype=float), loc=ranges, scale=sigma).sum(axis=1)


def radar_density(env_map, o, states, sigma):
    return np.exp(radar_log_density(env_map, o, states, sigma))


def radar_propose(env_map, o, n, rng, sigma, n_candidates=256, jitter=0.01):
    """Draw ``n`` states plausible for the radar reading ``o``.

    For each draw, ``n_candidates`` uniform free-space states are weighed by
    the radar density, one is picked in proportion to its weight and jittered.
    """
    candidates = env_map.sample_free(n * n_candidates, rng)
    log_weights = radar_log_density(env_map, o, candidates, sigma).reshape(n, n_candidates)
    weights = np.exp(log_weights - logsumexp(log_weights, axis=1, keepdims=True))
    cumulative = np.cumsum(weights, axis=1)
    cumulative[:, -1] = 1.0
    picks = (cumulative < rng.uniform(size=(n, 1))).sum(axis=1)
    chosen = candidates.reshape(n, n_candidates, 2)[np.arange(n), picks]
    if jitter > 0.0:
        chosen = chosen + rng.normal(0.0, jitter, size=chosen.shape)
    return env_map.clamp(chosen)


class FloorEnvironment(NavigationEnvironment):
    """Floor positioning environment.

    Parameters
    ----------
    config: FloorConfig, optional
    env_map: EnvMap, optional
        Replaces the map built from ``config``.
    """

    _default_name = "floor"

    def __init__(self, config=None, env_map=None, name=None):
        config = config if config is not None else FloorConfig()
        if env_map is None:
            env_map = config.build_map()
        spec = PomdpSpec(
            compass_actions(config.speed),
            discount=config.discount,
            max_steps=config.max_steps,
            goal_reward=config.goal_reward,
            trap_penalty=config.trap_penalty,
        )
        super().__init__(spec, env_map, config, name)

    def _build_models(self):
        cfg = self.config
        m = self.env_map
        sigma = cfg.obs_noise_std
        self._models = ModelSuite(
            obs_density=partial(radar_density, m, sigma=sigma),
            obs_log_density=partial(radar_log_density, m, sigma=sigma),
            obs_generator=lambda states, rng: radar_observe(m, states, rng, sigma),
            proposer=lambda o, n, rng: radar_propose(
                m, o, n, rng, sigma, cfg.n_candidates, cfg.proposal_jitter
            ),
            discount=self.spec.discount,
            **navigation_models(self.spec, m, cfg.process_noise_std),
        )
