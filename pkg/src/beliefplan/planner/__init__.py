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

from .baselines import RandomPlanner, StraightToGoalPlanner
from .baseplanner import AbstractPlanner
from .params import PlannerParams
from .pft_dpw import PFTDPWPlanner, gen_pf, ucb_select
from .rollout import navigation_speed, rollout_collapse, target_goal, zero_rollout
from .tree import ActionEdge, BeliefNode, SearchTree
