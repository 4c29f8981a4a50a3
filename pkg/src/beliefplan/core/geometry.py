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

"""Planar geometry shared by the navigation environments.

States are rows of an ``(n, 2)`` array. Walls are zero-thickness axis-aligned
segments stored as rows ``(x1, y1, x2, y2)`` of a ``(W, 4)`` array.
"""

from dataclasses import dataclass, field

import numpy as np

from ..exceptions import ConfigurationError

REGION_KINDS = ("goal", "trap", "light", "start")


@dataclass(frozen=True)
class Rect:
    """Closed axis-aligned rectangle ``[xmin, xmax] x [ymin, ymax]``"""

    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def __post_init__(self):
        if not (self.xmin <= self.xmax and self.ymin <= self.ymax):
            raise ConfigurationError("Rect", f"degenerate corners {self.as_list()}")

    @classmethod
    def from_list(cls, values):
        xmin, ymin, xmax, ymax = (float(v) for v in values)
        return cls(xmin, ymin, xmax, ymax)

    def as_list(self):
        return [self.xmin, self.ymin, self.xmax, self.ymax]

    @property
    def width(self):
        return self.xmax - self.xmin

    @property
    def height(self):
        return self.ymax - self.ymin

    @property
    def area(self):
        return self.width * self.height

    @property
    def center(self):
        return np.array([(self.xmin + self.xmax) / 2.0, (self.ymin + self.ymax) / 2.0])

    def contains(self, points):
        """Boolean mask of the rows of ``points`` lying in the closed rectangle."""
        points = np.atleast_2d(points)
        return (
            (points[:, 0] >= self.xmin)
            & (points[:, 0] <= self.xmax)
            & (points[:, 1] >= self.ymin)
            & (points[:, 1] <= self.ymax)
        )

    def nearest(self, points):
        """Closest point of the rectangle to each row of ``points``."""
        points = np.atleast_2d(points)
        return np.column_stack(
            (
                np.clip(points[:, 0], self.xmin, self.xmax),
                np.clip(points[:, 1], self.ymin, self.ymax),
            )
        )

    def overlaps(self, other):
        """True if the interiors of the two rectangles intersect."""
        return (
            self.xmin < other.xmax
            and other.xmin < self.xmax
            and self.ymin < other.ymax
            and other.ymin < self.ymax
        )

    def clipped(self, other):
        """Intersection of ``self`` with ``other`` (assumed to overlap)."""
        return Rect(
            max(self.xmin, other.xmin),
            max(self.ymin, other.ymin),
            min(self.xmax, other.xmax),
            min(self.ymax, other.ymax),
        )

    def sample(self, n, rng):
        low = (self.xmin, self.ymin)
        high = (self.xmax, self.ymax)
        return rng.uniform(low, high, size=(n, 2))


@dataclass(frozen=True)
class Region:
    """Named rectangle of the map with a kind in ``REGION_KINDS``.

    The optional ``zone`` restricts which states consider the region as their
    target when steering straight toward it (used for goals).
    """

    name: str
    kind: str
    rect: Rect
    zone: Rect = None

    def __post_init__(self):
        if self.kind not in REGION_KINDS:
            raise ConfigurationError(self.name, f"unknown region kind {self.kind!r}")

    @classmethod
    def from_dict(cls, data):
        zone = data.get("zone")
        return cls(
            name=data["name"],
            kind=data["kind"],
            rect=Rect.from_list(data["rect"]),
            zone=Rect.from_list(zone) if zone is not None else None,
        )

    def to_dict(self):
        rval = {"name": self.name, "kind": self.kind, "rect": self.rect.as_list()}
        if self.zone is not None:
            rval["zone"] = self.zone.as_list()
        return rval


def _orientation(ax, ay, bx, by, cx, cy):
    return np.sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax))


def _on_segment(ax, ay, bx, by, cx, cy):
    # c collinear with a-b, check it lies in the bounding box of a-b
    return (
        (np.minimum(ax, bx) <= cx)
        & (cx <= np.maximum(ax, bx))
        & (np.minimum(ay, by) <= cy)
        & (cy <= np.maximum(ay, by))
    )


def segments_intersect(starts, ends, walls):
    """Pairwise closed-segment intersection test.

    Parameters
    ----------
    starts, ends: ndarray of shape (n, 2)
        End points of the moving segments.
    walls: ndarray of shape (W, 4)
        Wall segments.

    Returns
    -------
    ndarray of bool, shape (n, W)
    """
    px, py = starts[:, 0:1], starts[:, 1:2]
    qx, qy = ends[:, 0:1], ends[:, 1:2]
    ax, ay, bx, by = walls[:, 0], walls[:, 1], walls[:, 2], walls[:, 3]

    o1 = _orientation(px, py, qx, qy, ax, ay)
    o2 = _orientation(px, py, qx, qy, bx, by)
    o3 = _orientation(ax, ay, bx, by, px, py)
    o4 = _orientation(ax, ay, bx, by, qx, qy)

    general = (o1 != o2) & (o3 != o4)
    collinear = (
        ((o1 == 0) & _on_segment(px, py, qx, qy, ax, ay))
        | ((o2 == 0) & _on_segment(px, py, qx, qy, bx, by))
        | ((o3 == 0) & _on_segment(ax, ay, bx, by, px, py))
        | ((o4 == 0) & _on_segment(ax, ay, bx, by, qx, qy))
    )
    return general | collinear


@dataclass(frozen=True)
class EnvMap:
    """Bounding box, wall segments and named regions of an environment instance.

    Attributes
    ----------
    bounds: Rect
        Bounding box of the world; states are clamped into it.
    walls: ndarray of shape (W, 4)
        Axis-aligned wall segments ``(x1, y1, x2, y2)``.
    regions: tuple of Region
        Goal, trap, light and start rectangles.
    """

    bounds: Rect
    walls: np.ndarray = field(default_factory=lambda: np.zeros((0, 4)))
    regions: tuple = ()

    def __post_init__(self):
        walls = np.asarray(self.walls, dtype=float).reshape(-1, 4)
        walls.setflags(write=False)
        object.__setattr__(self, "walls", walls)
        object.__setattr__(self, "regions", tuple(self.regions))
        axis_aligned = (walls[:, 0] == walls[:, 2]) | (walls[:, 1] == walls[:, 3])
        if not axis_aligned.all():
            raise ConfigurationError("EnvMap", "walls must be axis-aligned segments")
        for region in self.regions:
            if not self.bounds.overlaps(region.rect):
                raise ConfigurationError(region.name, "region lies outside of the bounds")
        for goal in self.regions_of("goal"):
            if self._crossed_by_wall(goal.rect):
                raise ConfigurationError(goal.name, "goal region is crossed by a wall")
            for trap in self.regions_of("trap"):
                if goal.rect.overlaps(trap.rect):
                    raise ConfigurationError(trap.name, f"trap overlaps goal {goal.name}")
        for start in self.regions_of("start"):
            if start.rect.area <= 0.0:
                raise ConfigurationError(start.name, "start region is empty")
            if self._crossed_by_wall(start.rect):
                raise ConfigurationError(start.name, "start region is crossed by a wall")

    @classmethod
    def from_dict(cls, data):
        """Build a map from its JSON-like dictionary form."""
        try:
            return cls(
                bounds=Rect.from_list(data["bounds"]),
                walls=np.array(data.get("walls", []), dtype=float).reshape(-1, 4),
                regions=tuple(Region.from_dict(r) for r in data.get("regions", [])),
            )
        except KeyError as e:
            raise ConfigurationError("EnvMap", f"missing key {e}")

    def to_dict(self):
        return {
            "bounds": self.bounds.as_list(),
            "walls": self.walls.tolist(),
            "regions": [r.to_dict() for r in self.regions],
        }

    def with_regions(self, extra):
        """Copy of the map with ``extra`` regions appended."""
        return EnvMap(self.bounds, self.walls, self.regions + tuple(extra))

    def regions_of(self, kind):
        return [r for r in self.regions if r.kind == kind]

    def in_kind(self, states, kind):
        """Mask of the states lying in any region of the given kind."""
        states = np.atleast_2d(states)
        mask = np.zeros(states.shape[0], dtype=bool)
        for region in self.regions_of(kind):
            mask |= region.rect.contains(states)
        return mask

    def clamp(self, states):
        return self.bounds.nearest(states)

    def blocked(self, starts, ends):
        """Mask of the moves ``starts[i] -> ends[i]`` touching any wall."""
        starts = np.atleast_2d(starts)
        if self.walls.shape[0] == 0:
            return np.zeros(starts.shape[0], dtype=bool)
        return segments_intersect(starts, np.atleast_2d(ends), self.walls).any(axis=1)

    def on_wall(self, states):
        states = np.atleast_2d(states)
        if self.walls.shape[0] == 0:
            return np.zeros(states.shape[0], dtype=bool)
        return segments_intersect(states, states, self.walls).any(axis=1)

    def ray_ranges(self, states):
        """Distances to the nearest wall or boundary along the four axes.

        Returns
        -------
        ndarray of shape (n, 4)
            Columns are (up, down, left, right).
        """
        states = np.atleast_2d(states)
        x, y = states[:, 0:1], states[:, 1:2]
        b = self.bounds
        up = (b.ymax - y)[:, 0]
        down = (y - b.ymin)[:, 0]
        left = (x - b.xmin)[:, 0]
        right = (b.xmax - x)[:, 0]

        walls = self.walls
        horizontal = walls[walls[:, 1] == walls[:, 3]]
        vertical = walls[walls[:, 0] == walls[:, 2]]
        if horizontal.shape[0]:
            lo = np.minimum(horizontal[:, 0], horizontal[:, 2])
            hi = np.maximum(horizontal[:, 0], horizontal[:, 2])
            wy = horizontal[:, 1]
            facing = (x >= lo) & (x <= hi)
            gap = wy - y
            up = np.minimum(up, np.where(facing & (gap >= 0), gap, np.inf).min(axis=1))
            down = np.minimum(down, np.where(facing & (gap <= 0), -gap, np.inf).min(axis=1))
        if vertical.shape[0]:
            lo = np.minimum(vertical[:, 1], vertical[:, 3])
            hi = np.maximum(vertical[:, 1], vertical[:, 3])
            wx = vertical[:, 0]
            facing = (y >= lo) & (y <= hi)
            gap = wx - x
            right = np.minimum(right, np.where(facing & (gap >= 0), gap, np.inf).min(axis=1))
            left = np.minimum(left, np.where(facing & (gap <= 0), -gap, np.inf).min(axis=1))
        return np.column_stack((up, down, left, right))

    def sample_free(self, n, rng):
        """Uniform draws from free space (walls have zero measure)."""
        return self.bounds.sample(n, rng)

    def sample_start(self, n, rng):
        """Uniform draws over the union of the start regions, by area."""
        starts = self.regions_of("start")
        if not starts:
            raise ConfigurationError("EnvMap", "map declares no start region")
        areas = np.array([r.rect.area for r in starts])
        choice = rng.choice(len(starts), size=n, p=areas / areas.sum())
        points = np.empty((n, 2))
        for i, region in enumerate(starts):
            mask = choice == i
            points[mask] = region.rect.sample(int(mask.sum()), rng)
        return points

    def _crossed_by_wall(self, rect):
        for x1, y1, x2, y2 in self.walls:
            if x1 == x2:
                if rect.xmin < x1 < rect.xmax and min(y1, y2) < rect.ymax and max(y1, y2) > rect.ymin:
                    return True
            elif rect.ymin < y1 < rect.ymax and min(x1, x2) < rect.xmax and max(x1, x2) > rect.xmin:
                return True
        return False
