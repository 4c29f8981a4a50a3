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

"""Leaf value estimates for tree search"""

import math

import numpy as np

# slack on distance / speed so that an exact multiple of the speed is not
# rounded up to one more step
STEP_SLACK = 1e-6


def zero_rollout(belief, depth, rng, discount=None):
    return 0.0


def navigation_speed(spec):
    """Largest displacement of a navigation action of ``spec``."""
    return max(a.speed for a in spec.actions if a.direction is not None)


def target_goal(env_map, point):
    """Nearest point of the closest goal whose zone holds ``point``.

    Goals without a zone are eligible everywhere. Returns ``None`` when no goal
    is eligible.
    """
    best, best_distance = None, math.inf
    for goal in env_map.regions_of("goal"):
        if goal.zone is not None and not goal.zone.contains(point)[0]:
            continue
        nearest = goal.rect.nearest(point)[0]
        distance = float(np.linalg.norm(nearest - point))
        if distance < best_distance:
            best, best_distance = nearest, distance
    return best


def _path_values(particles, shift, steps, spec, env_map, discount):
    """Discounted trap costs and goal gains of moving every particle along ``shift``.

    The move takes ``steps`` equal steps. Each point of the path in a trap costs
    ``trap_penalty``; a path stops at its first point inside a goal, which earns
    ``goal_reward``.
    """
    n, d = particles.shape
    fractions = np.arange(1, steps + 1) / steps
    points = particles[None, :, :] + fractions[:, None, None] * shift[None, None, :]
    points = points.reshape(-1, d)
    in_goal = env_map.in_kind(points, "goal").reshape(steps, n)
    in_trap = env_map.in_kind(points, "trap").reshape(steps, n)

    reached = np.logical_or.accumulate(in_goal, axis=0)
    before_goal = np.vstack([np.zeros((1, n), dtype=bool), reached[:-1]])
    factors = discount ** np.arange(1, steps + 1)
    costs = spec.trap_penalty * ((in_trap & ~before_goal) * factors[:, None]).sum(axis=0)
    first = np.argmax(in_goal, axis=0)
    gains = np.where(reached[-1], spec.goal_reward * factors[first], 0.0)
    return costs, gains


def rollout_collapse(belief, depth, spec, env_map, rng, discount=None, avoid_traps=False):
    """Value of steering every particle as if the belief were one of them.

    A particle ``j`` is drawn by weight and the straight path to its nearest
    eligible goal point is computed, ignoring walls. All particles are moved by
    that same displacement. A particle ending in a goal is worth
    ``goal_reward``, one ending in a trap ``trap_penalty`` and any other zero;
    particle ``j`` is credited ``goal_reward``. Values are discounted by the
    number of steps ``k = ceil(d / speed)`` the path takes.

    With ``avoid_traps``, the path of every particle is followed step by step:
    each step spent in a trap costs ``trap_penalty`` and a path ends where it
    first enters a goal. The estimate is then floored at zero, the value of
    staying clear of the traps forever.

    Parameters
    ----------
    belief: ParticleBelief
    depth: int
        Remaining search depth; no value is estimated at depth zero.
    spec: PomdpSpec
    env_map: EnvMap
    rng: numpy.random.Generator
    discount: float, optional
        By default ``spec.discount``.
    avoid_traps: bool, optional

    Returns
    -------
    float
        Weighted mean of the particle values, bounded by ``|goal_reward|``
        unless ``avoid_traps`` is set.
    """
    if depth <= 0:
        return 0.0
    if discount is None:
        discount = spec.discount
    j = belief.sample_index(rng)
    chosen = belief.particles[j]
    target = target_goal(env_map, chosen)
    if target is None:
        return 0.0
    shift = target - chosen
    steps = max(0, math.ceil(np.linalg.norm(shift) / navigation_speed(spec) - STEP_SLACK))

    if avoid_traps and steps > 0:
        costs, gains = _path_values(belief.particles, shift, steps, spec, env_map, discount)
        gains[j] = spec.goal_reward * discount**steps
        return max(0.0, float(belief.weights @ (costs + gains)))

    endpoints = belief.particles + shift
    values = np.where(
        env_map.in_kind(endpoints, "goal"),
        spec.goal_reward,
        np.where(env_map.in_kind(endpoints, "trap"), spec.trap_penalty, 0.0),
    )
    values[j] = spec.goal_reward
    value = float(discount**steps * (belief.weights @ values))
    return max(0.0, value) if avoid_traps else value
