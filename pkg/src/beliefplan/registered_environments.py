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

""" Collect the environments and planners known to beliefplan
"""

from .register_environment import user_environments, user_planners


def builtin_environments():
    """Environments shipped with the package"""
    from .envs import (  # pylint: disable=import-outside-toplevel
        FloorEnvironment,
        LightDarkEnvironment,
        TigerEnvironment,
    )

    return {
        "floor": FloorEnvironment,
        "lightdark": LightDarkEnvironment,
        "tiger": TigerEnvironment,
    }


def builtin_planners():
    """Planners shipped with the package"""
    from .planner import (  # pylint: disable=import-outside-toplevel
        PFTDPWPlanner,
        RandomPlanner,
        StraightToGoalPlanner,
    )

    return {
        "pft": PFTDPWPlanner,
        "straight": StraightToGoalPlanner,
        "random": RandomPlanner,
    }


def registered_environments():
    """Return the dictionary of registered environments"""
    factories = {}
    factories |= builtin_environments()
    factories |= user_environments()
    return factories


def registered_planners():
    """Return the dictionary of registered planners"""
    factories = {}
    factories |= builtin_planners()
    factories |= user_planners()
    return factories
