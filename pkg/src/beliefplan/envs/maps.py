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

"""Default maps of the navigation environments and map loading.

Maps are plain dictionaries in the JSON layout read by
:py:meth:`beliefplan.core.EnvMap.from_dict`.
"""

import json
import logging

from ..core.geometry import EnvMap
from ..exceptions import ConfigurationError

logger = logging.getLogger(__name__)


def floor_map_dict(
    bottom_dividers=(0.25, 0.5, 0.75),
    top_dividers=(0.125, 0.375, 0.625, 0.875),
    bottom_corridor=(0.2, 0.3),
    top_corridor=(0.7, 0.8),
    end_width=0.05,
    start_width=0.1,
):
    """Two floors of the unit square separated by a wall at ``y = 0.5``.

    Each floor has a hallway (``*_corridor`` band) crossing divider walls placed
    at the given x offsets; the dividers leave the hallway open. The goal is the
    left end of the top hallway and the right end of the bottom hallway; the
    trap is the opposite end of each hallway. Each goal only attracts states of
    its own floor.
    """
    if tuple(bottom_dividers) == tuple(top_dividers):
        raise ConfigurationError("floor map", "floors need different divider placements")
    b0, b1 = bottom_corridor
    t0, t1 = top_corridor
    if not (0.0 < b0 < b1 < 0.5 < t0 < t1 < 1.0):
        raise ConfigurationError("floor map", "hallways must lie inside their floor")
    walls = [[0.0, 0.5, 1.0, 0.5]]
    for x in bottom_dividers:
        walls += [[x, 0.0, x, b0], [x, b1, x, 0.5]]
    for x in top_dividers:
        walls += [[x, 0.5, x, t0], [x, t1, x, 1.0]]
    half = start_width / 2.0
    top_zone = [0.0, 0.5, 1.0, 1.0]
    bottom_zone = [0.0, 0.0, 1.0, 0.5]
    return {
        "bounds": [0.0, 0.0, 1.0, 1.0],
        "walls": walls,
        "regions": [
            {"name": "goal_top", "kind": "goal", "rect": [0.0, t0, end_width, t1], "zone": top_zone},
            {"name": "goal_bottom", "kind": "goal", "rect": [1.0 - end_width, b0, 1.0, b1], "zone": bottom_zone},
            {"name": "trap_top", "kind": "trap", "rect": [1.0 - end_width, t0, 1.0, t1]},
            {"name": "trap_bottom", "kind": "trap", "rect": [0.0, b0, end_width, b1]},
            {"name": "start_top", "kind": "start", "rect": [0.5 - half, t0, 0.5 + half, t1]},
            {"name": "start_bottom", "kind": "start", "rect": [0.5 - half, b0, 0.5 + half, b1]},
        ],
    }


def lightdark_map_dict(with_traps=True):
    """Open ``[0, 2]^2`` world with a light band on the right.

    The goal sits low in the dark area, clear of the bounds. In the vanilla task
    two traps flank it on the left and the right, ``0.1`` away, so that the goal
    is reached from above or below.
    """
    regions = [
        {"name": "light", "kind": "light", "rect": [1.5, 0.0, 2.0, 2.0]},
        {"name": "start", "kind": "start", "rect": [0.2, 0.2, 0.4, 1.8]},
        {"name": "goal", "kind": "goal", "rect": [0.85, 0.3, 1.15, 0.6]},
    ]
    if with_traps:
        regions += [
            {"name": "trap_left", "kind": "trap", "rect": [0.45, 0.3, 0.75, 0.6]},
            {"name": "trap_right", "kind": "trap", "rect": [1.25, 0.3, 1.55, 0.6]},
        ]
    return {"bounds": [0.0, 0.0, 2.0, 2.0], "walls": [], "regions": regions}


def load_map(path):
    """Read a map from a JSON file.

    Parameters
    ----------
    path: str or path-like

    Returns
    -------
    EnvMap

    Raises
    ------
    ConfigurationError
        If the file cannot be read or does not describe a valid map.
    """
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(str(path), f"cannot read map ({e})")
    logger.info("Loaded map from %s", path)
    return EnvMap.from_dict(data)
