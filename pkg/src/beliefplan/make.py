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

""" Generic functions building any known environment or planner
"""

import inspect

from .exceptions import NotRegistered
from .registered_environments import registered_environments, registered_planners


def make_environment(name, **kwargs):
    """Build the environment registered under `name`

    Parameters
    ----------
    name: str
        Name of the environment (``"floor"``, ``"lightdark"``, ``"tiger"`` or
        any name added with :py:func:`beliefplan.register_environment`).
    kwargs:
        Passed to the environment factory, e.g. ``config``, ``env_map``,
        ``ablation`` or ``rng``.

    Returns
    -------
    AbstractEnvironment

    Raises
    ------
    NotRegistered
        If no environment has this name.
    """
    try:
        factory = registered_environments()[name]
    except KeyError:
        raise NotRegistered("environment", name)
    return factory(**kwargs)


def make_planner(name, env, params=None, **kwargs):
    """Build the planner registered under `name` for `env`

    Parameters
    ----------
    name: str
        Name of the planner (``"pft"``, ``"straight"``, ``"random"`` or any name
        added with :py:func:`beliefplan.register_planner`).
    env: AbstractEnvironment
        Environment to plan in.
    params: PlannerParams, optional
        Search parameters; ignored by planners that take none.

    Returns
    -------
    AbstractPlanner

    Raises
    ------
    NotRegistered
        If no planner has this name.
    ParameterError
        If the planner does not apply to `env`.
    """
    try:
        factory = registered_planners()[name]
    except KeyError:
        raise NotRegistered("planner", name)
    if params is not None and "params" in inspect.signature(factory).parameters:
        kwargs["params"] = params
    return factory(env, **kwargs)
