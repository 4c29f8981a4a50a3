"""Small models shared by the test suites"""

import numpy as np
from scipy.stats import norm

from beliefplan.core import AbstractEnvironment, Action, ModelSuite, PomdpSpec, Terminal
from beliefplan.planner import AbstractPlanner

DRIFTS = (-0.5, 0.0, 0.5)


def linear_gaussian_models(obs_std=0.5, proposer=None, reward_scale=1.0):
    """One-dimensional random walk observed with Gaussian noise.

    Actions move the state by ``DRIFTS``; the reward is ``-|x'|``.
    """

    def transition(states, a, rng):
        return np.atleast_2d(states) + DRIFTS[a]

    def obs_log_density(o, states):
        return norm.logpdf(o[0], loc=np.atleast_2d(states)[:, 0], scale=obs_std)

    def obs_generator(states, rng):
        states = np.atleast_2d(states)
        return states + rng.normal(0.0, obs_std, size=states.shape)

    if proposer is None:

        def proposer(o, n, rng):
            return o[0] + rng.normal(0.0, obs_std, size=(n, 1))

    def reward(states, a, next_states):
        return -reward_scale * np.abs(np.atleast_2d(next_states)[:, 0])

    def terminal(states):
        return np.full(np.atleast_2d(states).shape[0], int(Terminal.CONTINUE))

    return ModelSuite(
        transition=transition,
        obs_density=lambda o, states: np.exp(obs_log_density(o, states)),
        obs_log_density=obs_log_density,
        obs_generator=obs_generator,
        proposer=proposer,
        reward=reward,
        terminal=terminal,
        discount=0.95,
    )


class ToyEnvironment(AbstractEnvironment):
    """Random walk environment without a map"""

    _default_name = "toy"

    def __init__(self, reward_scale=1.0, obs_std=0.5, name=None):
        self.reward_scale = reward_scale
        self.obs_std = obs_std
        spec = PomdpSpec(
            (Action("left"), Action("stay"), Action("right")),
            discount=0.95,
            max_steps=20,
            goal_reward=100.0 * reward_scale,
            trap_penalty=-100.0 * reward_scale,
        )
        super().__init__(spec, None, name=name)

    def _build_models(self):
        self._models = linear_gaussian_models(self.obs_std, reward_scale=self.reward_scale)

    def sample_initial(self, n, rng):
        return rng.normal(1.0, 1.0, size=(n, 1))


class ScriptedPlanner(AbstractPlanner):
    """Plays a fixed sequence of actions"""

    def __init__(self, env, actions, **kwargs):
        super().__init__(env, **kwargs)
        self.actions = list(actions)
        self.calls = 0

    def plan(self, belief, rng):
        a = self.actions[self.calls]
        self.calls += 1
        self._diagnostics = {"action": a}
        return a
