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

"""Base class of the environments shipped with beliefplan"""

import numpy as np

from .pomdp import Terminal, step_env


class AbstractEnvironment:
    """Base class bundling a POMDP specification, its map and its models.

    Derived classes implement ``_build_models`` which must set
    ``self._models`` (the suite handed to the filter and the planner) and may set
    ``self._world_models`` (the suite driving the true state) when the two
    differ, e.g. for observation-model mismatch ablations.

    Users should usually obtain environments through
    :py:func:`beliefplan.make_environment`.
    """

    def __init__(self, spec, env_map, config=None, name=None):
        self.spec = spec
        self.env_map = env_map
        self.config = config
        self._models = None
        self._world_models = None
        if not hasattr(self, "_default_name"):
            self._default_name = type(self).__name__.lower()
        self._name = name if name is not None else self._default_name
        self._build_models()
        assert self._models is not None
        if self._world_models is None:
            self._world_models = self._models

    def _build_models(self):
        raise NotImplementedError

    @property
    def name(self):
        return self._name

    @property
    def models(self):
        """Models used by the filter and the planner"""
        return self._models

    @property
    def world_models(self):
        """Models used to simulate the true state"""
        return self._world_models

    def filter_models(self, filter_params):
        """Models for the particle filter; the planner models unless overridden."""
        return self._models

    def sample_initial(self, n, rng):
        """Draw ``n`` states from the initial-state distribution."""
        return self.env_map.sample_start(n, rng)

    def rollout(self, belief, depth, rng, discount=None):
        """Leaf value estimate used by tree search; zero by default.

        ``discount`` is the planning discount, ``spec.discount`` when not given.
        """
        return 0.0

    def step(self, s, a, rng, step_index=0):
        """One step of the true state, see :py:func:`beliefplan.core.step_env`."""
        return step_env(self.spec, self.env_map, self._world_models, s, a, rng, step_index)

    def status(self, s):
        return Terminal(int(self._world_models.terminal(np.atleast_2d(s))[0]))

    def in_trap(self, s):
        if self.env_map is None:
            return False
        return bool(self.env_map.in_kind(np.atleast_2d(s), "trap")[0])

    def print_stats(self, file=None):
        """Print a summary of the environment

        Arguments
        ---------

        file: None, optional
            Text stream to which output should be redirected. By default sys.stdout.
        """
        print(f"Environment {self._name}", file=file)
        print(
            f"{self.spec.action_count} actions, discount {self.spec.discount}, "
            + f"{self.spec.max_steps} steps per episode",
            file=file,
        )
        if self.env_map is not None:
            m = self.env_map
            print(f"Bounds {m.bounds.as_list()}, {m.walls.shape[0]} walls", file=file)
            print(f"{'Region':16} {'Kind':6} {'Rectangle':>32}", file=file)
            for region in m.regions:
                print(f"{region.name:16} {region.kind:6} {str(region.rect.as_list()):>32}", file=file)

    def __str__(self):
        return self._name
