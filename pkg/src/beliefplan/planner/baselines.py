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

"""Reference planners for comparisons"""

import numpy as np

from ..exceptions import ParameterError
from .baseplanner import AbstractPlanner
from .rollout import target_goal


class StraightToGoalPlanner(AbstractPlanner):
    """Steer the belief mean straight to its nearest goal, ignoring walls.

    Picks the navigation action best aligned with the direction from the belief
    mean to the goal; the first action when the mean is already on the goal.
    """

    def __init__(self, env, **kwargs):
        if env.env_map is None or not env.env_map.regions_of("goal"):
            raise ParameterError(f"Environment {env.name} has no goal to steer to")
        if any(a.direction is None for a in env.spec.actions):
            raise ParameterError(f"Environment {env.name} has no navigation actions")
        super().__init__(env, **kwargs)
        self._directions = np.array([a.displacement / a.speed for a in self.spec.actions])

    def plan(self, belief, rng):
        mean = belief.mean()
        target = target_goal(self.env.env_map, mean)
        if target is None:
            self._diagnostics = {"action": 0}
            return 0
        shift = target - mean
        if np.linalg.norm(shift) == 0.0:
            a = 0
        else:
            a = int(np.argmax(self._directions @ shift))
        self._diagnostics = {"action": a, "target": target.tolist()}
        return a


class RandomPlanner(AbstractPlanner):
    """Uniformly random action"""

    def plan(self, belief, rng):
        a = int(rng.integers(self.spec.action_count))
        self._diagnostics = {"action": a}
        return a
