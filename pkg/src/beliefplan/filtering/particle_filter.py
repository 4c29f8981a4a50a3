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

"""Particle filter with proposer injection and periodic resampling.

One update runs predict, reweight, propose and (every ``resample_period``
updates) resample. The number of injected proposals decays geometrically with
the episode step so that a localized belief is not diluted by proposals.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from ..exceptions import ConfigurationError, ParameterError
from .belief import ParticleBelief, systematic_resample

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FilterParams:
    """Hyperparameters of the particle filter.

    Attributes
    ----------
    K: int
        Number of particles.
    proposal_fraction: float
        Nominal fraction of the particles replaced by proposer draws.
    decay: float
        Decay of the proposal fraction per episode step.
    resample_period: int
        Resample every ``resample_period`` updates.
    proposer_std_by_region: dict, optional
        Proposer standard deviation per region name (``"light"``, ``"dark"``),
        overriding the environment defaults where supported.
    """

    K: int = 100
    proposal_fraction: float = 0.3
    decay: float = 0.9
    resample_period: int = 3
    proposer_std_by_region: dict = field(default=None, compare=False)

    def __post_init__(self):
        if self.K < 1:
            raise ParameterError(f"K should be at least 1, got {self.K}")
        if not 0.0 <= self.proposal_fraction <= 1.0:
            raise ParameterError(f"proposal_fraction should be in [0, 1], got {self.proposal_fraction}")
        if not 0.0 < self.decay <= 1.0:
            raise ParameterError(f"decay should be in (0, 1], got {self.decay}")
        if self.resample_period < 1:
            raise ParameterError(f"resample_period should be at least 1, got {self.resample_period}")

    @classmethod
    def from_dict(cls, data):
        return cls(**data)

    def to_dict(self):
        return {
            "K": self.K,
            "proposal_fraction": self.proposal_fraction,
            "decay": self.decay,
            "resample_period": self.resample_period,
            "proposer_std_by_region": self.proposer_std_by_region,
        }


def proposal_count(params, n):
    """Number of particles proposed at episode step ``n``: ``floor(K p decay**n)``."""
    # guard against 29.999... from rounding of K * p
    return int(math.floor(params.K * params.proposal_fraction * params.decay**n + 1e-9))


def init_belief(env_map, params, rng, sampler=None):
    """Initial belief: ``K`` uniform-weight particles from the start support.

    Parameters
    ----------
    env_map: EnvMap
        Map declaring the start regions.
    params: FilterParams
    rng: numpy.random.Generator
    sampler: callable, optional
        ``(n, rng) -> states`` replacing the start regions of the map, for
        problems without geometry.

    Raises
    ------
    ConfigurationError
        If no start support is available.
    """
    if sampler is None:
        if env_map is None:
            raise ConfigurationError("init_belief", "no map and no initial sampler")
        sampler = env_map.sample_start
    return ParticleBelief.uniform(sampler(params.K, rng))


def update(b, a, o, models, params, rng):
    """Filter ``b`` with action ``a`` and observation ``o``.

    Parameters
    ----------
    b: ParticleBelief
        Current belief.
    a: int
        Action taken.
    o: ndarray
        Observation received after taking ``a``.
    models: ModelSuite
        Transition, observation density and proposer used by the filter.
    params: FilterParams
    rng: numpy.random.Generator

    Returns
    -------
    ParticleBelief
        Updated belief with ``K`` particles and ``step_index`` incremented.

    Note
    ----
    If every weight vanishes the belief is rebuilt from ``K`` proposer draws with
    uniform weights and the degeneracy counter of the belief is incremented.
    """
    o = np.asarray(o, dtype=float)
    if not np.isfinite(o).all():
        raise ParameterError(f"Observation should be finite, got {o}")
    n = b.step_index
    K = b.size

    particles = np.array(models.transition(b.particles, a, rng), dtype=float)
    with np.errstate(divide="ignore"):
        log_weights = np.log(b.weights) + models.log_density(o, particles)

    if not np.isfinite(log_weights).any():
        logger.warning("All particle weights vanished at step %d, reinitializing from proposer", n)
        return ParticleBelief.uniform(
            models.proposer(o, K, rng), step_index=n + 1, degeneracy_count=b.degeneracy_count + 1
        )

    log_weights[np.isnan(log_weights)] = -np.inf
    weights = np.exp(log_weights - log_weights.max())

    n_proposed = min(proposal_count(params, n), K)
    if n_proposed > 0:
        replaced = np.argsort(weights, kind="stable")[:n_proposed]
        mean_weight = weights.mean()
        particles[replaced] = models.proposer(o, n_proposed, rng)
        weights[replaced] = mean_weight

    rval = ParticleBelief(particles, weights / weights.sum(), n, b.degeneracy_count)
    if n % params.resample_period == params.resample_period - 1:
        rval = systematic_resample(rval, rng)
    return ParticleBelief(rval.particles, rval.weights, n + 1, rval.degeneracy_count)


class ParticleFilter:
    """Particle filter bound to a model suite and its parameters"""

    def __init__(self, models, params=None, env_map=None, sampler=None):
        self.models = models
        self.params = params if params is not None else FilterParams()
        self.env_map = env_map
        self.sampler = sampler

    def initial_belief(self, rng):
        return init_belief(self.env_map, self.params, rng, sampler=self.sampler)

    def update(self, b, a, o, rng):
        return update(b, a, o, self.models, self.params, rng)
