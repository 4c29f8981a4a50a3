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

USER_ENVIRONMENTS = {}
USER_PLANNERS = {}


def register_environment(name, environment_factory):
    """Register a new environment that can be created with make_environment

    Parameters
    ----------
    name: str
        Name under which the environment is known.
    environment_factory:
        Callable (usually a class derived from
        :py:class:`beliefplan.core.AbstractEnvironment`) building the
        environment from keyword arguments.
    """
    USER_ENVIRONMENTS[name] = environment_factory


def register_planner(name, planner_factory):
    """Register a new planner that can be created with make_planner

    Parameters
    ----------
    name: str
        Name under which the planner is known.
    planner_factory:
        Callable (usually a class derived from
        :py:class:`beliefplan.planner.AbstractPlanner`) called as
        ``planner_factory(env, params=..., **kwargs)``.
    """
    USER_PLANNERS[name] = planner_factory


def user_environments():
    return USER_ENVIRONMENTS


def user_planners():
    return USER_PLANNERS
