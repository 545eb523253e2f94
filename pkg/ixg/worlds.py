# IxG graph-of-convex-sets planner
#
# Copyright 2026 The IxG Authors. All Rights Reserved.
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

"""
IxG benchmark worlds.

All generators are deterministic for a given seed and return plain lists of
ConvexSet; build_graph turns them into a graph. Generators are registered by
name so scenario files can refer to them:

    worlds.generate("maze", rows=5, cols=5, seed=7)
"""

import logging
import threading

import numpy as np

from ixg import errors
from ixg import geometry
from ixg import graph

LOG = logging.getLogger(__name__)

# Maze cells grow by this much through every open wall...
MAZE_OVERLAP = 0.02

# ...and shrink by this much at closed walls, so diagonal cells never touch.
MAZE_INSET = 0.04

_GENERATORS = {}
_GENERATORS_LOCK = threading.Lock()


def register_generator(name, generator):
    """Make 'generator' available to scenario files under 'name'."""
    with _GENERATORS_LOCK:
        _GENERATORS[name] = generator


def get_generator(name):
    generator = _GENERATORS.get(name)
    if generator is None:
        raise errors.IxgArgumentError(
            "No world generator named %r. Known generators: %s." %
            (name, ", ".join(sorted(_GENERATORS))), key=name)

    return generator


def generators():
    return sorted(_GENERATORS)


def generate(name, **params):
    return get_generator(name)(**params)


def maze_openings(rows, cols, seed):
    """Open walls of a perfect maze, carved by randomized depth-first search.

    Cells are (row, col) pairs. Every opening joins two adjacent cells and the
    openings form a spanning tree of the grid, so there are rows * cols - 1.

    Returns:
        Sorted list of ((row, col), (row, col)) pairs, smaller cell first.
    """
    if rows < 2 or cols < 2:
        raise errors.IxgArgumentError(
            "Mazes need at least 2 rows and 2 columns, got %dx%d." %
            (rows, cols))

    rng = np.random.default_rng(seed)
    visited = np.zeros((rows, cols), dtype=bool)
    openings = []

    stack = [(0, 0)]
    visited[0, 0] = True
    while stack:
        row, col = stack[-1]
        unvisited = [(row + dr, col + dc)
                     for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1))
                     if 0 <= row + dr < rows and 0 <= col + dc < cols
                     and not visited[row + dr, col + dc]]
        if not unvisited:
            stack.pop()
            continue

        cell = unvisited[int(rng.integers(len(unvisited)))]
        visited[cell] = True
        openings.append(tuple(sorted([(row, col), cell])))
        stack.append(cell)

    return sorted(openings)


def generate_maze(rows, cols, seed, overlap=MAZE_OVERLAP, inset=MAZE_INSET):
    """One box per maze cell, overlapping its neighbors through open walls.

    Cell (row, col) covers [col, col + 1] x [row, row + 1]. Each side is moved
    out by 'overlap' if the wall there is open and in by 'inset' if it is
    closed (or on the border).

    Returns:
        rows * cols ConvexSets in row-major order.
    """
    if inset <= overlap:
        raise errors.IxgArgumentError(
            "Maze inset %r must exceed the overlap %r." % (inset, overlap))

    open_walls = set(maze_openings(rows, cols, seed))

    def _side(cell, neighbor):
        pair = tuple(sorted([cell, neighbor]))
        return overlap if pair in open_walls else -inset

    sets = []
    for row in range(rows):
        for col in range(cols):
            cell = (row, col)
            lo = [col - _side(cell, (row, col - 1)),
                  row - _side(cell, (row - 1, col))]
            hi = [col + 1 + _side(cell, (row, col + 1)),
                  row + 1 + _side(cell, (row + 1, col))]
            sets.append(geometry.ConvexSet.from_box(
                lo, hi, label="cell_%d_%d" % (row, col)))

    return sets


def generate_box_world(bounds, n_boxes, seed, min_fraction=0.1,
                       max_fraction=0.4, overlap_fraction=0.02):
    """Random axis-aligned boxes, each overlapping an earlier one.

    Each new box is built around a small cube (half-width 'overlap_fraction'
    of the smallest bounds extent) centered inside a randomly chosen earlier
    box, so the boxes form one connected component.

    Arguments:
        bounds: (lo, hi) of the world.
        n_boxes: Number of boxes. A single box is the bounds box itself.
        min_fraction, max_fraction: Box extents as fractions of the bounds.
    """
    if n_boxes < 1:
        raise errors.IxgArgumentError("n_boxes must be >= 1, got %r." %
                                      n_boxes)

    lo = geometry.as_point(bounds[0])
    hi = geometry.as_point(bounds[1], dim=lo.shape[0])
    if n_boxes == 1:
        return [geometry.ConvexSet.from_box(lo, hi, label="box_0")]

    extent = hi - lo
    half = overlap_fraction * float(np.min(extent))
    rng = np.random.default_rng(seed)

    size = rng.uniform(min_fraction, max_fraction, size=lo.shape) * extent
    first_lo = rng.uniform(lo, hi - size)
    boxes = [(first_lo, first_lo + size)]

    while len(boxes) < n_boxes:
        prior_lo, prior_hi = boxes[int(rng.integers(len(boxes)))]
        anchor = rng.uniform(prior_lo + half, prior_hi - half)
        size = np.maximum(
            rng.uniform(min_fraction, max_fraction, size=lo.shape) * extent,
            2 * half)
        box_lo = rng.uniform(anchor + half - size, anchor - half)
        box_lo = np.maximum(box_lo, lo)
        box_hi = np.minimum(box_lo + size, hi)
        boxes.append((box_lo, box_hi))

    return [geometry.ConvexSet.from_box(box_lo, box_hi, label="box_%d" % i)
            for i, (box_lo, box_hi) in enumerate(boxes)]


def generate_random_world(seed, dim=2, min_sets=6, max_sets=12, extent=10.0):
    """Small box world with a random set count, for property suites."""
    rng = np.random.default_rng(seed)
    n_boxes = int(rng.integers(min_sets, max_sets + 1))
    bounds = (np.zeros(dim), np.full(dim, extent))
    return generate_box_world(bounds, n_boxes, seed=seed + 1,
                              min_fraction=0.2, max_fraction=0.5,
                              overlap_fraction=0.05)


# The revisit world: a start set O bordered by B on the left and by the thin
# strips C above and D below. The start moves left too fast to turn around
# inside O, so a solution must leave O into B and come back.
REVISIT_START = (0.3, 1.0)
REVISIT_START_VELOCITY = (-1.0, 0.0)
REVISIT_GOAL = (0.8, 1.0)
REVISIT_VMAX = 1.0


def generate_revisit_world():
    """Four sets where the start set has to be visited twice."""
    return [
        geometry.ConvexSet.from_box([0.0, 0.0], [4.0, 2.0], label="O"),
        geometry.ConvexSet.from_box([-2.0, 0.0], [0.1, 2.0], label="B"),
        geometry.ConvexSet.from_box([-2.0, 1.9], [4.0, 3.0], label="C"),
        geometry.ConvexSet.from_box([-2.0, -1.0], [4.0, 0.1], label="D"),
    ]


def revisit_query():
    return graph.Query(start=REVISIT_START, goal=REVISIT_GOAL,
                       start_velocity=REVISIT_START_VELOCITY)


def sample_query(sets, rng, margin=1e-3, max_tries=100000):
    """Random start and goal inside the cover of 'sets'.

    Points are rejected if they lie within 'margin' of the boundary of every
    set that contains them.
    """
    lo = np.min([cset.bounding_box[0] for cset in sets], axis=0)
    hi = np.max([cset.bounding_box[1] for cset in sets], axis=0)

    def _sample():
        for _ in range(max_tries):
            candidate = rng.uniform(lo, hi)
            if any(cset.slack(candidate) >= margin for cset in sets):
                return candidate

        raise errors.IxgEmptySetError(
            "Could not sample a point inside the cover in %d tries." %
            max_tries)

    return graph.Query(start=_sample(), goal=_sample())


register_generator("maze", generate_maze)
register_generator("boxworld", generate_box_world)
register_generator("random", generate_random_world)
register_generator("revisit", generate_revisit_world)
