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

"""Common structure of the planar navigation environments"""

import numpy as np

from ..core.environment import AbstractEnvironment
from ..core.pomdp import Terminal, apply_action
from ..planner.rollout import rollout_collapse


def navigation_models(spec, env_map, process_noise_std=0.0):
    """Transition, reward and terminal callables shared by the navigation environments.

    Entering a goal earns ``goal_reward`` and ends the episode; every step
    ending in a trap costs ``trap_penalty`` without ending it.
    """

    def transition(states, a, rng):
        return apply_action(spec, env_map, states, a, rng, process_noise_std)

    def reward(states, a, next_states):
        next_states = np.atleast_2d(next_states)
        return np.where(env_map.in_kind(next_states, "goal"), spec.goal_reward, 0.0) + np.where(
            env_map.in_kind(next_states, "trap"), spec.trap_penalty, 0.0
        )

    def terminal(states):
        return np.where(env_map.in_kind(states, "goal"), int(Terminal.GOAL), int(Terminal.CONTINUE))

    return {"transition": transition, "reward": reward, "terminal": terminal}


class NavigationEnvironment(AbstractEnvironment):
    """Environment moving a point agent on a map with the 8 compass actions.

    The rollout follows the paths of the particles through the traps when
    ``avoid_traps`` is set, see :py:func:`beliefplan.planner.rollout_collapse`.
    """

    avoid_traps = False

    def rollout(self, belief, depth, rng, discount=None):
        return rollout_collapse(
            belief, depth, self.spec, self.env_map, rng, discount=discount, avoid_traps=self.avoid_traps
        )
