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

"""Weighted particle beliefs"""

from dataclasses import dataclass

import numpy as np

from ..exceptions import ParameterError

WEIGHT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ParticleBelief:
    """Weighted particle approximation of a belief.

    Attributes
    ----------
    particles: ndarray of shape (K, d)
        Particle states.
    weights: ndarray of shape (K,)
        Nonnegative weights summing to one.
    step_index: int
        Number of filter updates since initialization.
    degeneracy_count: int
        Number of times the filter had to rebuild the belief from the proposer.
    """

    particles: np.ndarray
    weights: np.ndarray
    step_index: int = 0
    degeneracy_count: int = 0

    def __post_init__(self):
        particles = np.array(self.particles, dtype=float)
        if particles.ndim == 1:
            particles = particles.reshape(-1, 1)
        weights = np.array(self.weights, dtype=float).reshape(-1)
        if particles.shape[0] != weights.shape[0]:
            raise ParameterError(
                "Non-conforming particles and weights: "
                + f"{particles.shape[0]} != {weights.shape[0]}"
            )
        if particles.shape[0] == 0:
            raise ParameterError("A belief needs at least one particle")
        if (weights < 0).any() or abs(weights.sum() - 1.0) > WEIGHT_TOLERANCE:
            raise ParameterError("Belief weights should be nonnegative and sum to 1")
        if self.step_index < 0:
            raise ParameterError(f"Negative step index {self.step_index}")
        particles.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "particles", particles)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def uniform(cls, particles, step_index=0, degeneracy_count=0):
        particles = np.atleast_2d(particles)
        n = particles.shape[0]
        return cls(particles, np.full(n, 1.0 / n), step_index, degeneracy_count)

    @property
    def size(self):
        return self.particles.shape[0]

    def mean(self):
        return self.weights @ self.particles

    def ess(self):
        """Effective sample size ``1 / sum(w**2)``."""
        return 1.0 / np.sum(self.weights**2)

    def sample_index(self, rng):
        return int(min(np.searchsorted(np.cumsum(self.weights), rng.uniform(), side="right"), self.size - 1))

    def to_record(self):
        """JSON-ready snapshot of the belief."""
        return {
            "particles": self.particles.tolist(),
            "weights": self.weights.tolist(),
            "mean": self.mean().tolist(),
            "step_index": int(self.step_index),
        }


def belief_mean(b):
    """Weighted mean of the particles of ``b``."""
    return b.mean()


def particle_distance(b, s_true):
    """Euclidean distance between the weighted mean of ``b`` and ``s_true``."""
    return float(np.linalg.norm(b.mean() - np.asarray(s_true, dtype=float)))


def systematic_resample(b, rng, n=None):
    """Low-variance resampling of ``b`` to ``n`` equally weighted particles.

    A single offset ``u ~ U[0, 1)`` places the points ``(j + u) / n`` on the
    cumulative weights; each point selects the particle whose interval holds it.

    Parameters
    ----------
    b: ParticleBelief
        Belief with normalized weights.
    rng: numpy.random.Generator
    n: int, optional
        Number of output particles, by default the size of ``b``.

    Returns
    -------
    ParticleBelief
    """
    if n is None:
        n = b.size
    positions = (np.arange(n) + rng.uniform()) / n
    cumulative = np.cumsum(b.weights)
    cumulative[-1] = 1.0
    indexes = np.minimum(np.searchsorted(cumulative, positions, side="right"), b.size - 1)
    return ParticleBelief(
        b.particles[indexes], np.full(n, 1.0 / n), b.step_index, b.degeneracy_count
    )
