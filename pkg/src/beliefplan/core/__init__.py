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

from .environment import AbstractEnvironment
from .geometry import EnvMap, Rect, Region, segments_intersect
from .pomdp import (
    Action,
    ModelSuite,
    PomdpSpec,
    Terminal,
    apply_action,
    compass_actions,
    step_env,
)
from .rng import episode_streams, make_rng, seed_ladder
