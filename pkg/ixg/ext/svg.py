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
Implements IDrawable for planar worlds and writes them as SVG.

Output is deterministic: the same inputs give a byte-identical file.
"""

import matplotlib
matplotlib.use("Agg")

from matplotlib import patches
from matplotlib import pyplot

import numpy as np

from scipy import spatial

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import trajectory as traj

from ixg.protocols import drawable

SET_STYLE = dict(facecolor="#4c72b0", edgecolor="#2a3f66", alpha=0.25,
                 linewidth=0.8)
TRAJECTORY_STYLE = dict(color="#c44e52", linewidth=2.0)
LBG_VERTEX_STYLE = dict(color="#222222", s=6, zorder=4)
LBG_EDGE_STYLES = {
    lbgs.TRIPLET: dict(color="#55a868", linewidth=0.6, linestyle="-"),
    lbgs.INTERFACE: dict(color="#8172b2", linewidth=0.6, linestyle="--"),
    lbgs.QUERY: dict(color="#dd8452", linewidth=0.6, linestyle=":"),
}
TRAJECTORY_SAMPLES = 200


def _require_planar(dim):
    if dim != 2:
        raise errors.IxgUnsupportedDimensionError(expected=2, actual=dim)


def polygon_vertices(cset):
    """Corners of a bounded planar set in counter-clockwise order."""
    _require_planar(cset.dim)
    if cset.is_box:
        lo, hi = cset.box
        return np.array([[lo[0], lo[1]], [hi[0], lo[1]], [hi[0], hi[1]],
                         [lo[0], hi[1]]])

    center, radius = cset.chebyshev
    if radius <= 0:
        raise errors.IxgEmptySetError("%r has no interior to draw." % cset)

    halfspaces = np.hstack([cset.A, -cset.b[:, None]])
    corners = spatial.HalfspaceIntersection(halfspaces, center).intersections
    angles = np.arctan2(corners[:, 1] - center[1], corners[:, 0] - center[0])
    return corners[np.argsort(angles)]


def _draw_set(cset, ax, **style):
    kwargs = dict(SET_STYLE)
    kwargs.update(style)
    patch = patches.Polygon(polygon_vertices(cset), closed=True, **kwargs)
    ax.add_patch(patch)
    return patch


def _draw_trajectory(trajectory, ax, **style):
    if trajectory.is_empty:
        return None

    _require_planar(trajectory.dim)
    kwargs = dict(TRAJECTORY_STYLE)
    kwargs.update(style)

    # Straight segments are exact with their end points alone.
    if all(segment.order == 1 for segment in trajectory.segments):
        points = [trajectory.start] + [s.end for s in trajectory.segments]
    else:
        points = [p for _, p in traj.sample(trajectory, TRAJECTORY_SAMPLES)]

    points = np.array(points)
    lines = ax.plot(points[:, 0], points[:, 1], **kwargs)
    return lines[0]


def _draw_graph(graph, ax, **style):
    for v in graph.set_ids:
        _draw_set(graph.vertices[v], ax, **style)


def _draw_lbg(lbg, ax, **style):
    if not lbg.vertices:
        return

    _require_planar(lbg.vertices[0].point.shape[0])
    for edge in lbg.edges():
        if edge.u > edge.v and lbg.has_edge(edge.v, edge.u):
            continue

        kwargs = dict(LBG_EDGE_STYLES[edge.provenance])
        kwargs.update(style)
        a = lbg.vertices[edge.u].point
        b = lbg.vertices[edge.v].point
        ax.plot([a[0], b[0]], [a[1], b[1]], **kwargs)

    points = np.array([vertex.point for vertex in lbg.vertices])
    ax.scatter(points[:, 0], points[:, 1], **LBG_VERTEX_STYLE)


drawable.IDrawable.implement(
    for_type=geometry.ConvexSet,
    implementations={drawable.draw: _draw_set}
)


drawable.IDrawable.implement(
    for_type=traj.Trajectory,
    implementations={drawable.draw: _draw_trajectory}
)


drawable.IDrawable.implement(
    for_type=gcs.GcsGraph,
    implementations={drawable.draw: _draw_graph}
)


drawable.IDrawable.implement(
    for_type=lbgs.LowerBoundGraph,
    implementations={drawable.draw: _draw_lbg}
)


def emit_svg(world, trajectory, path, lbg=None, query=None, title=None):
    """Draw 'world' and 'trajectory' (and optionally the LBG) to an SVG.

    Arguments:
        world: GcsGraph or list of ConvexSet.
        trajectory: Trajectory or None.
        path: File name or file object to write.
        lbg: Optional LowerBoundGraph overlay.
        query: Optional Query; start and goal are marked.
        title: Optional figure title.

    Raises:
        IxgUnsupportedDimensionError unless everything is planar.
    """
    sets = ([world.vertices[v] for v in world.set_ids]
            if isinstance(world, gcs.GcsGraph) else list(world))
    if not sets:
        raise errors.IxgArgumentError("Nothing to draw.")
    _require_planar(sets[0].dim)

    with matplotlib.rc_context({"svg.hashsalt": "ixg",
                                "svg.fonttype": "none"}):
        fig, ax = pyplot.subplots(figsize=(6, 6))
        try:
            for cset in sets:
                drawable.draw(cset, ax)

            if lbg is not None:
                drawable.draw(lbg, ax)

            if trajectory is not None:
                drawable.draw(trajectory, ax)

            if query is not None:
                ax.plot([query.start[0]], [query.start[1]], marker="o",
                        color="#008000", linestyle="none")
                ax.plot([query.goal[0]], [query.goal[1]], marker="*",
                        color="#c8102e", linestyle="none", markersize=10)

            lo = np.min([cset.bounding_box[0] for cset in sets], axis=0)
            hi = np.max([cset.bounding_box[1] for cset in sets], axis=0)
            pad = 0.02 * float(np.max(hi - lo))
            ax.set_xlim(lo[0] - pad, hi[0] + pad)
            ax.set_ylim(lo[1] - pad, hi[1] + pad)
            ax.set_aspect("equal")
            if title:
                ax.set_title(title)

            fig.savefig(path, format="svg", metadata={"Date": None})
        finally:
            pyplot.close(fig)
