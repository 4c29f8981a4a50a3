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

"""Tiger problem: listen at two doors before opening the one without the tiger.

States are rows ``(side, listened, outcome)``: ``side`` is 0 when the tiger is
behind the left door and 1 when behind the right one, ``listened`` is 1 right
after a listen action and ``outcome`` is +1 once the free door was opened, -1
once the tiger's was. Opening a door ends the episode.

Observations are one-element vectors: 0 (tiger heard left), 1 (heard right)
or 2 (nothing heard, after opening a door).

An exact value iteration on a grid of beliefs provides reference values.
"""

from dataclasses import asdict, dataclass

import numpy as np

from ..core.environment import AbstractEnvironment
from ..core.pomdp import Action, ModelSuite, PomdpSpec, Terminal
from ..exceptions import ConfigurationError
from ..planner.rollout import zero_rollout

LISTEN, OPEN_LEFT, OPEN_RIGHT = 0, 1, 2
HEAR_LEFT, HEAR_RIGHT, NOTHING = 0, 1, 2
SIDE, LISTENED, OUTCOME = 0, 1, 2


@dataclass(frozen=True)
class TigerConfig:
    """Parameters of the tiger problem"""

    accuracy: float = 0.85
    listen_reward: float = -1.0
    door_reward: float = 10.0
    tiger_reward: float = -100.0
    discount: float = 0.95
    max_steps: int = 20

    def __post_init__(self):
        if not 0.5 <= self.accuracy <= 1.0:
            raise ConfigurationError("TigerConfig", "accuracy should be in [0.5, 1]")

    @classmethod
    def from_dict(cls, data):
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(**known)

    def to_dict(self):
        return asdict(self)


def tiger_spec(cfg):
    return PomdpSpec(
        (Action("listen"), Action("open-left"), Action("open-right")),
        discount=cfg.discount,
        max_steps=cfg.max_steps,
        goal_reward=cfg.door_reward,
        trap_penalty=cfg.tiger_reward,
    )


def tiger_posterior(p_left, observation, accuracy=0.85):
    """Probability of the tiger being left after hearing ``observation`` from belief ``p_left``."""
    if observation == NOTHING:
        return p_left
    like_left = accuracy if observation == HEAR_LEFT else 1.0 - accuracy
    like_right = 1.0 - like_left
    evidence = like_left * p_left + like_right * (1.0 - p_left)
    return like_left * p_left / evidence


def tiger_models(cfg):
    """Vectorized model suite of the tiger problem."""

    def transition(states, a, rng):
        states = np.array(np.atleast_2d(states), dtype=float)
        if a == LISTEN:
            states[:, LISTENED] = 1.0
            states[:, OUTCOME] = 0.0
        else:
            opened = 0.0 if a == OPEN_LEFT else 1.0
            states[:, LISTENED] = 0.0
            states[:, OUTCOME] = np.where(states[:, SIDE] == opened, -1.0, 1.0)
        return states

    def obs_generator(states, rng):
        states = np.atleast_2d(states)
        correct = rng.uniform(size=states.shape[0]) < cfg.accuracy
        heard = np.where(correct, states[:, SIDE], 1.0 - states[:, SIDE])
        return np.where(states[:, LISTENED] == 1.0, heard, float(NOTHING))[:, None]

    def obs_density(o, states):
        states = np.atleast_2d(states)
        o = float(np.asarray(o).reshape(-1)[0])
        listened = states[:, LISTENED] == 1.0
        if o == NOTHING:
            return np.where(listened, 0.0, 1.0)
        match = np.where(states[:, SIDE] == o, cfg.accuracy, 1.0 - cfg.accuracy)
        return np.where(listened, match, 0.0)

    def proposer(o, n, rng):
        o = float(np.asarray(o).reshape(-1)[0])
        states = np.zeros((n, 3))
        if o == NOTHING:
            states[:, SIDE] = rng.integers(2, size=n)
        else:
            correct = rng.uniform(size=n) < cfg.accuracy
            states[:, SIDE] = np.where(correct, o, 1.0 - o)
            states[:, LISTENED] = 1.0
        return states

    def reward(states, a, next_states):
        next_states = np.atleast_2d(next_states)
        if a == LISTEN:
            return np.full(next_states.shape[0], cfg.listen_reward)
        return np.where(next_states[:, OUTCOME] > 0, cfg.door_reward, cfg.tiger_reward)

    def terminal(states):
        outcome = np.atleast_2d(states)[:, OUTCOME]
        return np.select(
            [outcome > 0, outcome < 0], [int(Terminal.GOAL), int(Terminal.FAILURE)], int(Terminal.CONTINUE)
        )

    return ModelSuite(
        transition=transition,
        obs_density=obs_density,
        obs_generator=obs_generator,
        proposer=proposer,
        reward=reward,
        terminal=terminal,
        discount=cfg.discount,
    )


class TigerSolver:
    """Finite-horizon value iteration over a grid of beliefs ``P(tiger left)``.

    Values between grid points are interpolated linearly.
    """

    def __init__(self, cfg=None, n_points=1001):
        self.cfg = cfg if cfg is not None else TigerConfig()
        self.grid = np.linspace(0.0, 1.0, n_points)
        self._values = [np.zeros(n_points)]

    def _q_grid(self, p, previous):
        cfg = self.cfg
        acc = cfg.accuracy
        p_hear_left = acc * p + (1.0 - acc) * (1.0 - p)
        p_hear_right = 1.0 - p_hear_left
        with np.errstate(divide="ignore", invalid="ignore"):
            post_left = np.where(p_hear_left > 0, acc * p / p_hear_left, p)
            post_right = np.where(p_hear_right > 0, (1.0 - acc) * p / p_hear_right, p)
        future = p_hear_left * np.interp(post_left, self.grid, previous) + p_hear_right * np.interp(
            post_right, self.grid, previous
        )
        listen = cfg.listen_reward + cfg.discount * future
        open_left = cfg.tiger_reward * p + cfg.door_reward * (1.0 - p)
        open_right = cfg.door_reward * p + cfg.tiger_reward * (1.0 - p)
        return np.stack([listen, open_left, open_right], axis=-1)

    def values(self, horizon):
        """Optimal values on the grid with ``horizon`` decisions left."""
        while len(self._values) <= horizon:
            self._values.append(self._q_grid(self.grid, self._values[-1]).max(axis=-1))
        return self._values[horizon]

    def q_values(self, p_left, horizon):
        """Action values ``(listen, open-left, open-right)`` at belief ``p_left``."""
        if horizon < 1:
            raise ConfigurationError("TigerSolver", "horizon should be at least 1")
        return self._q_grid(np.asarray(p_left, dtype=float), self.values(horizon - 1))

    def value(self, p_left, horizon):
        if horizon == 0:
            return 0.0
        return float(self.q_values(p_left, horizon).max())

    def optimal_action(self, p_left, horizon):
        return int(np.argmax(self.q_values(p_left, horizon)))


def tiger_fixture(cfg=None):
    """Specification, model suite and exact solver of the tiger problem."""
    cfg = cfg if cfg is not None else TigerConfig()
    return tiger_spec(cfg), tiger_models(cfg), TigerSolver(cfg)


class TigerEnvironment(AbstractEnvironment):
    """Tiger problem as an environment; it has no map"""

    _default_name = "tiger"

    def __init__(self, config=None, name=None):
        config = config if config is not None else TigerConfig()
        super().__init__(tiger_spec(config), None, config, name)

    def _build_models(self):
        self._models = tiger_models(self.config)

    def rollout(self, belief, depth, rng, discount=None):
        return zero_rollout(belief, depth, rng)

    def sample_initial(self, n, rng):
        states = np.zeros((n, 3))
        states[:, SIDE] = rng.integers(2, size=n)
        return states

    def print_stats(self, file=None):
        super().print_stats(file=file)
        cfg = self.config
        print(f"Listen accuracy {cfg.accuracy}, rewards listen {cfg.listen_reward}, "
              + f"door {cfg.door_reward}, tiger {cfg.tiger_reward}", file=file)
