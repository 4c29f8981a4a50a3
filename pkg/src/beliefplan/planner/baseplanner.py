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

"""Base class of the planners"""


def _default_name(planner):
    """Make a default name for a planner.

    Parameters
    ----------
    planner:
        Planner object
    """
    return type(planner).__name__.lower()


class AbstractPlanner:
    """Base class of the planners returned by :py:func:`beliefplan.make_planner`

    A planner maps a particle belief to an action id of the environment's
    action table. Derived classes implement ``plan``.

    Warning
    -------

    Users should usually never construct objects of this class or its
    derived classes directly; use :py:func:`beliefplan.make_planner`.
    """

    def __init__(self, env, name=None):
        self.env = env
        self.spec = env.spec
        self._name = name if name is not None else _default_name(self)
        self._diagnostics = {}

    def plan(self, belief, rng):
        """Return the action id to take from ``belief``."""
        raise NotImplementedError

    @property
    def diagnostics(self):
        """Diagnostics of the last call to ``plan`` as a JSON-ready dict"""
        return self._diagnostics

    def print_stats(self, file=None):
        """Print the diagnostics of the last plan

        Arguments
        ---------

        file: None, optional
            Text stream to which output should be redirected. By default sys.stdout.
        """
        print(f"Planner {self._name} for {self.env.name}", file=file)
        for key, value in self._diagnostics.items():
            print(f"{key:20} {value}", file=file)

    def __str__(self):
        return self._name
