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

"""Hyperparameters of the tree-search planner"""

from dataclasses import asdict, dataclass

from ..exceptions import ParameterError


@dataclass(frozen=True)
class PlannerParams:
    """Parameters of particle-filter-tree search with double progressive widening.

    Attributes
    ----------
    n_iter: int
        Number of simulations per call to ``plan``.
    c: float
        UCB exploration constant.
    k_a, alpha_a: float
        Action widening: a node with ``N`` visits may hold
        ``k_a * N**alpha_a`` action children.
    k_o, alpha_o: float
        Observation widening on action edges.
    m: int
        Number of particles of the beliefs stored in the tree.
    H: int
        Maximum search depth.
    gamma: float
        Planning discount.
    check_repeat_obs: bool
        Descend into an existing child when widening generates an observation
        already present under the same action edge.
    """

    n_iter: int = 100
    c: float = 10.0
    k_a: float = 3.0
    alpha_a: float = 0.25
    k_o: float = 4.0
    alpha_o: float = 0.25
    m: int = 100
    H: int = 10
    gamma: float = 0.99
    check_repeat_obs: bool = False

    def __post_init__(self):
        if self.n_iter < 1:
            raise ParameterError(f"n_iter should be at least 1, got {self.n_iter}")
        if self.m < 1:
            raise ParameterError(f"m should be at least 1, got {self.m}")
        if self.H < 1:
            raise ParameterError(f"H should be at least 1, got {self.H}")
        if not 0.0 <= self.gamma < 1.0:
            raise ParameterError(f"gamma should be in [0, 1), got {self.gamma}")
        if self.c < 0 or self.k_a <= 0 or self.k_o <= 0:
            raise ParameterError("c should be nonnegative, k_a and k_o positive")
        if not (0.0 <= self.alpha_a <= 1.0 and 0.0 <= self.alpha_o <= 1.0):
            raise ParameterError("Widening exponents should be in [0, 1]")

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    def to_dict(self):
        return asdict(self)
