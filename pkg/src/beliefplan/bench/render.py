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

"""SVG drawings of episode traces"""

import io

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from ..exceptions import ConfigurationError  # noqa: E402
from .episode import EpisodeRecord  # noqa: E402

REGION_COLORS = {"goal": "tab:green", "trap": "tab:red", "light": "gold", "start": "lightgray"}

SVG_PARAMS = {"svg.hashsalt": "beliefplan", "svg.fonttype": "none"}


def trajectory_figure(record, env_map, particle_steps=(0,)):
    """Figure with the map, the true and belief-mean paths and particle clouds.

    Each segment of the true path is a separate artist with gid
    ``trajectory-<i>``; the particle cloud after step ``t`` has gid
    ``particles-<t>``, step 0 being the initial belief.

    Parameters
    ----------
    record: EpisodeRecord or dict
    env_map: EnvMap
    particle_steps: iterable of int
        Steps whose belief snapshot is drawn, when the record holds snapshots.

    Returns
    -------
    matplotlib.figure.Figure
    """
    if env_map is None:
        raise ConfigurationError("render", "only environments with a map can be drawn")
    if isinstance(record, dict):
        record = EpisodeRecord.from_dict(record)

    fig = Figure(figsize=(5, 5))
    ax = fig.add_subplot()
    b = env_map.bounds
    ax.set_xlim(b.xmin, b.xmax)
    ax.set_ylim(b.ymin, b.ymax)
    ax.set_aspect("equal")

    for region in env_map.regions:
        r = region.rect
        patch = Rectangle(
            (r.xmin, r.ymin), r.width, r.height, color=REGION_COLORS[region.kind], alpha=0.4
        )
        patch.set_gid(f"region-{region.name}")
        ax.add_patch(patch)
    for i, (x1, y1, x2, y2) in enumerate(env_map.walls):
        (line,) = ax.plot([x1, x2], [y1, y2], color="black", linewidth=2)
        line.set_gid(f"wall-{i}")

    if record.initial_state:
        states = record.states()
        for i in range(len(states) - 1):
            (segment,) = ax.plot(states[i : i + 2, 0], states[i : i + 2, 1], color="tab:blue")
            segment.set_gid(f"trajectory-{i}")
        means = record.belief_means()
        (path,) = ax.plot(means[:, 0], means[:, 1], color="tab:orange", linestyle="--")
        path.set_gid("belief-mean")

    for t in particle_steps:
        if t < len(record.snapshots):
            snapshot = record.snapshots[t]
            particles = [p[:2] for p in snapshot["particles"]]
            xs = [p[0] for p in particles]
            ys = [p[1] for p in particles]
            cloud = ax.scatter(xs, ys, s=4, color="tab:purple", alpha=0.5)
            cloud.set_gid(f"particles-{t}")
    return fig


def render_trajectory(record, env_map, particle_steps=(0,)):
    """SVG document of :py:func:`trajectory_figure`; identical inputs give identical output."""
    fig = trajectory_figure(record, env_map, particle_steps)
    buffer = io.StringIO()
    with matplotlib.rc_context(SVG_PARAMS):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()
