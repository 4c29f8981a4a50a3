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

"""Nodes of the belief search tree"""

import math

import numpy as np


class BeliefNode:
    """Belief node of the tree.

    Holds a particle belief, its visit count ``N`` (initialized to 1) and the
    action edges explored from it, keyed by action id. ``samples`` counts how
    many times the parent edge generated or drew this node, ``leaf_value`` is
    the rollout estimate made when it was created.
    """

    def __init__(self, belief, observation=None, reward=0.0, leaf_value=0.0):
        self.belief = belief
        self.observation = observation
        self.reward = reward
        self.leaf_value = leaf_value
        self.samples = 1
        self.N = 1
        self.children = {}

    def add_action(self, a):
        assert a not in self.children
        edge = ActionEdge(a)
        self.children[a] = edge
        return edge

    def action_limit(self, k_a, alpha_a):
        return k_a * self.N**alpha_a

    def __iter__(self):
        return iter(self.children[a] for a in sorted(self.children))

    def __repr__(self):
        return f"BeliefNode(N={self.N}, actions={sorted(self.children)})"


class ActionEdge:
    """Action edge with visit count ``N``, running mean ``Q`` and belief children"""

    def __init__(self, action):
        self.action = action
        self.N = 0
        self.Q = 0.0
        self.children = []
        self.returns = None

    def observation_limit(self, k_o, alpha_o):
        return k_o * self.N**alpha_o

    def find_child(self, observation):
        for child in self.children:
            if np.array_equal(child.observation, observation):
                return child
        return None

    def backup(self, total):
        self.N += 1
        self.Q += (total - self.Q) / self.N
        if self.returns is not None:
            self.returns.append(total)

    def __iter__(self):
        return iter(self.children)

    def __repr__(self):
        return f"ActionEdge(a={self.action}, N={self.N}, Q={self.Q:.4g})"


class SearchTree:
    """Tree built by one call to the planner"""

    def __init__(self, root):
        self.root = root

    def nodes(self):
        """Iterate over belief nodes, depth first."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            for edge in node:
                stack.extend(reversed(edge.children))

    def edges(self):
        for node in self.nodes():
            yield from node

    @property
    def size(self):
        return sum(1 for _ in self.nodes())

    def value(self, node, gamma):
        """Value of ``node`` backed up with a max over its visited actions.

        An action is worth the mean of ``reward + gamma * value`` over its
        successor beliefs, weighted by how often each was sampled. Nodes without
        visited actions are worth their rollout estimate.
        """
        visited = [edge for edge in node if edge.N > 0 and edge.children]
        if not visited:
            return node.leaf_value
        return max(self.action_value(edge, gamma) for edge in visited)

    def action_value(self, edge, gamma):
        samples = np.array([child.samples for child in edge], dtype=float)
        values = np.array([child.reward + gamma * self.value(child, gamma) for child in edge])
        return float(samples @ values / samples.sum())

    def diagnostics(self, gamma):
        """Tree size, root values and visit counts as a JSON-ready dict.

        ``root_q`` holds the running means of the root actions and
        ``root_value`` the max-backed-up value of the root, see :py:meth:`value`.
        """
        root = self.root
        return {
            "tree_size": self.size,
            "root_visits": root.N,
            "root_value": self.value(root, gamma),
            "root_q": {str(e.action): e.Q for e in root},
            "root_action_visits": {str(e.action): e.N for e in root},
        }

    @staticmethod
    def within_widening(node, params):
        """True if ``node`` and its edges respect the widening bounds."""
        if len(node.children) > math.ceil(node.action_limit(params.k_a, params.alpha_a)):
            return False
        return all(
            len(edge.children) <= math.ceil(edge.observation_limit(params.k_o, params.alpha_o))
            for edge in node
        )
