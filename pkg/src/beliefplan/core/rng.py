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

"""Seeding helpers.

Every random draw of the package goes through a :class:`numpy.random.Generator`
handed in by the caller. Streams are split with :class:`numpy.random.SeedSequence`
so that no two consumers within an episode share a generator.
"""

import numpy as np

SEED_STRIDE = 1000003

STREAMS = ("world", "filter", "planner", "layout")


def make_rng(seed):
    """Generator for an integer seed, a SeedSequence or an existing Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.default_rng(seed)


def seed_ladder(base_seed, n_seeds):
    """Seeds ``base_seed + i * SEED_STRIDE`` for ``i < n_seeds``."""
    return [int(base_seed) + i * SEED_STRIDE for i in range(n_seeds)]


def episode_streams(seed, episode=0):
    """Independent generators for the streams of one episode.

    Parameters
    ----------
    seed: int
        Seed of the run (one rung of the seed ladder).
    episode: int
        Episode index within that seed.

    Returns
    -------
    dict
        Mapping from each name in ``STREAMS`` to its Generator.
    """
    children = np.random.SeedSequence([int(seed), int(episode)]).spawn(len(STREAMS))
    return {name: make_rng(child) for name, child in zip(STREAMS, children)}
