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

"""POMDP description and the model-suite interface consumed by filter and planner.

All models are vectorized: a batch of states is an ``(n, d)`` array, a single
state is a batch with one row. Observations handed to densities and proposers
are single 1-d vectors.
"""

import enum
from dataclasses import dataclass, replace
from typing import Callable, Optional

import numpy as np

from ..exceptions import ParameterError


class Terminal(enum.IntEnum):
    """Status of a state: keep going, goal reached, or absorbed without goal"""

    CONTINUE = 0
    GOAL = 1
    FAILURE = 2


@dataclass(frozen=True)
class Action:
    """Entry of an action table.

    Navigation actions carry a direction; the displacement is ``speed`` times
    the unit vector of ``direction``. Discrete problems leave ``direction`` unset.
    """

    name: str
    direction: Optional[tuple] = None
    speed: float = 0.0

    def __post_init__(self):
        if self.direction is not None:
            if self.speed <= 0.0:
                raise ParameterError(f"Action {self.name} must have a positive speed")
            if np.linalg.norm(self.direction) == 0.0:
                raise ParameterError(f"Action {self.name} has a null direction")

    @property
    def displacement(self):
        if self.direction is None:
            return None
        direction = np.asarray(self.direction, dtype=float)
        return self.speed * direction / np.linalg.norm(direction)


COMPASS = (
    ("North", (0.0, 1.0)),
    ("NorthEast", (1.0, 1.0)),
    ("East", (1.0, 0.0)),
    ("SouthEast", (1.0, -1.0)),
    ("South", (0.0, -1.0)),
    ("SouthWest", (-1.0, -1.0)),
    ("West", (-1.0, 0.0)),
    ("NorthWest", (-1.0, 1.0)),
)


def compass_actions(speed):
    """The 8 full-thrust moves in cardinal and diagonal directions."""
    return tuple(Action(name, direction, speed) for name, direction in COMPASS)


@dataclass(frozen=True)
class PomdpSpec:
    """Action table, discount, episode length and reward constants"""

    actions: tuple
    discount: float = 0.99
    max_steps: int = 200
    goal_reward: float = 100.0
    trap_penalty: float = -100.0

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(self.actions))
        if not 0.0 <= self.discount < 1.0:
            raise ParameterError(f"Discount should be in [0, 1), got {self.discount}")
        if self.max_steps <= 0:
            raise ParameterError(f"max_steps should be positive, got {self.max_steps}")
        if not self.actions:
            raise ParameterError("Action table is empty")

    @property
    def action_count(self):
        return len(self.actions)

    def action_index(self, name):
        for i, action in enumerate(self.actions):
            if action.name == name:
                return i
        raise ParameterError(f"Unknown action {name}")

    def check_action(self, a):
        if not (isinstance(a, (int, np.integer)) and 0 <= a < self.action_count):
            raise ParameterError(f"Invalid action id {a}, table has {self.action_count} actions")
        return self.actions[a]


@dataclass(frozen=True)
class ModelSuite:
    """Planner-facing bundle of models of a POMDP.

    Attributes
    ----------
    transition: callable
        ``(states, action, rng) -> next_states``
    obs_density: callable
        ``(o, states) -> densities``, the weights ``Z(o | s)``, nonnegative.
    obs_generator: callable
        ``(states, rng) -> observations`` of shape ``(n, d_o)``.
    proposer: callable
        ``(o, n, rng) -> states``, plausible states for an observation.
    reward: callable
        ``(states, action, next_states) -> rewards``.
    terminal: callable
        ``states -> codes`` of :class:`Terminal`.
    discount: float
        Planning discount.
    obs_log_density: callable, optional
        Log of ``obs_density``; used in preference when given.
    """

    transition: Callable
    obs_density: Callable
    obs_generator: Callable
    proposer: Callable
    reward: Callable
    terminal: Callable
    discount: float = 0.99
    obs_log_density: Optional[Callable] = None

    def log_density(self, o, states):
        if self.obs_log_density is not None:
            return self.obs_log_density(o, states)
        with np.errstate(divide="ignore"):
            return np.log(self.obs_density(o, states))

    def replace(self, **changes):
        return replace(self, **changes)


def apply_action(spec, env_map, states, a, rng=None, noise_std=0.0):
    """Move navigation states with full thrust along action ``a``.

    Parameters
    ----------
    spec: PomdpSpec
        Problem whose action table is used.
    env_map: EnvMap
        Map providing the walls and the bounding box.
    states: ndarray of shape (n, 2) or (2,)
        Current positions.
    a: int
        Action id.
    rng: numpy.random.Generator, optional
        Needed only when ``noise_std > 0``.
    noise_std: float, optional
        Standard deviation of additive Gaussian process noise.

    Returns
    -------
    ndarray
        Next positions, same shape as ``states``. A move whose segment touches
        a wall leaves the state unchanged; results are clamped to the bounds.

    Raises
    ------
    ParameterError
        If ``a`` is not a navigation action of the table.
    """
    action = spec.check_action(a)
    if action.direction is None:
        raise ParameterError(f"Action {action.name} is not a navigation action")
    squeeze = np.ndim(states) == 1
    states = np.atleast_2d(np.asarray(states, dtype=float))
    ends = states + action.displacement
    if noise_std > 0.0:
        ends = ends + rng.normal(0.0, noise_std, size=ends.shape)
    blocked = env_map.blocked(states, ends)
    ends[blocked] = states[blocked]
    ends = env_map.clamp(ends)
    return ends[0] if squeeze else ends


def step_env(spec, env_map, models, s, a, rng, step_index=0):
    """Advance the true state of an episode by one step.

    Parameters
    ----------
    spec: PomdpSpec
    env_map: EnvMap or None
        Unused by the models of discrete problems.
    models: ModelSuite
        World-side models (may differ from the planner's in ablations).
    s: ndarray of shape (d,)
        Current true state.
    a: int
        Action id.
    rng: numpy.random.Generator
    step_index: int
        Number of steps already taken in the episode.

    Returns
    -------
    tuple
        ``(next_state, observation, reward, done)``; ``done`` is true when the
        next state is terminal or the step budget is exhausted.
    """
    spec.check_action(a)
    s = np.atleast_2d(s)
    s_next = models.transition(s, a, rng)
    o = models.obs_generator(s_next, rng)[0]
    r = float(models.reward(s, a, s_next)[0])
    status = Terminal(int(models.terminal(s_next)[0]))
    done = status != Terminal.CONTINUE or step_index + 1 >= spec.max_steps
    return s_next[0], o, r, bool(done)
