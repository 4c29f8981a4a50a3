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

"""Monte Carlo tree search over particle beliefs with double progressive widening.

Nodes of the tree hold particle beliefs of a fixed size. Each simulation walks
down from the root choosing actions by UCB, widening the set of actions of a
belief node and the set of successor beliefs of an action edge as their visit
counts grow, and backs up the discounted return along the path.
"""

import logging

import numpy as np

from ..core.pomdp import Terminal
from ..filtering.belief import ParticleBelief, systematic_resample
from .baseplanner import AbstractPlanner
from .params import PlannerParams
from .tree import BeliefNode, SearchTree

logger = logging.getLogger(__name__)


def ucb_select(node, c):
    """Action id maximizing ``Q + c sqrt(log N(b) / N(b, a))`` among the children.

    Unvisited actions are selected first; ties go to the lowest action id.
    """
    best, best_score = None, -np.inf
    log_n = np.log(node.N)
    for edge in node:
        if edge.N == 0:
            return edge.action
        score = edge.Q + c * np.sqrt(log_n / edge.N)
        if score > best_score:
            best, best_score = edge.action, score
    return best


def gen_pf(belief, a, models, rng):
    """Generate a successor belief of ``belief`` under action ``a``.

    Every non-terminal particle is propagated (terminal ones stay put and earn
    nothing), an observation is drawn at a particle picked by weight, and the
    particles are reweighted by the observation density. The belief is
    resampled to its size when its effective sample size drops below half of it.

    Returns
    -------
    tuple
        ``(next_belief, observation, reward)`` where ``reward`` is the
        weighted mean of the particle rewards.
    """
    particles = belief.particles
    weights = belief.weights
    active = models.terminal(particles) == Terminal.CONTINUE

    next_particles = np.array(particles, dtype=float)
    rewards = np.zeros(belief.size)
    if active.any():
        moved = models.transition(particles[active], a, rng)
        next_particles[active] = moved
        rewards[active] = models.reward(particles[active], a, moved)
    reward = float(weights @ rewards)

    j = belief.sample_index(rng)
    o = models.obs_generator(next_particles[j : j + 1], rng)[0]

    with np.errstate(divide="ignore"):
        log_weights = np.log(weights) + models.log_density(o, next_particles)
    log_weights[np.isnan(log_weights)] = -np.inf
    if np.isfinite(log_weights).any():
        new_weights = np.exp(log_weights - log_weights.max())
        new_weights /= new_weights.sum()
    else:
        logger.warning("Generated belief lost all its weight, falling back to uniform weights")
        new_weights = np.full(belief.size, 1.0 / belief.size)

    rval = ParticleBelief(next_particles, new_weights, belief.step_index + 1, belief.degeneracy_count)
    if rval.ess() < belief.size / 2:
        rval = systematic_resample(rval, rng)
    return rval, o, reward


class PFTDPWPlanner(AbstractPlanner):
    """Tree-search planner over particle beliefs.

    Parameters
    ----------
    env: AbstractEnvironment
        Environment providing the action table, the models and the rollout.
    params: PlannerParams, optional
    models: ModelSuite, optional
        Overrides ``env.models``.
    rollout: callable, optional
        ``(belief, depth, rng, discount) -> value``, overrides ``env.rollout``.
        Called with the planning discount ``params.gamma``.
    record_returns: bool, optional
        Keep the list of returns backed up through each action edge.
    """

    def __init__(self, env, params=None, models=None, rollout=None, record_returns=False, **kwargs):
        self.params = params if params is not None else PlannerParams()
        self.models = models if models is not None else env.models
        self.rollout = rollout if rollout is not None else env.rollout
        self.record_returns = record_returns
        self.tree = None
        super().__init__(env, **kwargs)

    def plan(self, belief, rng):
        """Run ``n_iter`` simulations from ``belief`` and return the best root action.

        The root belief is resampled to ``m`` particles when its size differs.
        The chosen action maximizes ``Q`` among visited root actions, ties going
        to the lowest id.
        """
        params = self.params
        if belief.size != params.m:
            belief = systematic_resample(belief, rng, params.m)
        root = BeliefNode(belief)
        self.tree = SearchTree(root)
        for _ in range(params.n_iter):
            self.simulate(root, params.H, rng)

        best, best_q = None, -np.inf
        for edge in root:
            if edge.N > 0 and edge.Q > best_q:
                best, best_q = edge.action, edge.Q
        self._diagnostics = self.tree.diagnostics(params.gamma)
        self._diagnostics["action"] = int(best)
        logger.debug("Planned action %d with Q=%.4g over %d nodes", best, best_q, self._diagnostics["tree_size"])
        return int(best)

    def simulate(self, node, depth, rng):
        """One simulation from ``node``; returns the discounted return."""
        if depth == 0:
            return 0.0
        params = self.params
        gamma = params.gamma

        n_children = len(node.children)
        if n_children < self.spec.action_count and n_children <= node.action_limit(params.k_a, params.alpha_a):
            edge = node.add_action(n_children)
            if self.record_returns:
                edge.returns = []
        a = ucb_select(node, params.c)
        edge = node.children[a]

        if len(edge.children) <= edge.observation_limit(params.k_o, params.alpha_o):
            next_belief, o, r = gen_pf(node.belief, a, self.models, rng)
            child = edge.find_child(o) if params.check_repeat_obs else None
            if child is not None:
                child.samples += 1
                total = child.reward + gamma * self.simulate(child, depth - 1, rng)
            else:
                value = self.rollout(next_belief, depth - 1, rng, discount=gamma)
                edge.children.append(BeliefNode(next_belief, o, r, value))
                total = r + gamma * value
        else:
            child = edge.children[rng.integers(len(edge.children))]
            child.samples += 1
            total = child.reward + gamma * self.simulate(child, depth - 1, rng)

        node.N += 1
        edge.backup(total)
        return total
