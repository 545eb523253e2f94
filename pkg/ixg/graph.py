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
IxG graph of convex sets.

Vertices are ConvexSets identified by dense integer ids in input order. An
edge (u, v) certifies that the two sets overlap by at least the build margin.
Planning queries are wired in as two extra singleton vertices, Q_0 (outgoing
edges only) and Q_T (incoming edges only), which take the next two ids.
"""

import logging

import numpy as np

from ixg import errors
from ixg import geometry

from ixg.protocols import exportable

LOG = logging.getLogger(__name__)

DEFAULT_MARGIN = 1e-9

# Points on a facet count as inside for wiring.
WIRE_TOL = 1e-9


class Query(object):
    """A planning query: start and goal points with optional velocities.

    Arguments:
        start, goal: Points q_0 and q_T.
        start_velocity, goal_velocity: Optional boundary velocities. None
            leaves the velocity free, zeros mean rest-to-rest.
    """

    start = None
    goal = None
    start_velocity = None
    goal_velocity = None

    def __init__(self, start, goal, start_velocity=None, goal_velocity=None):
        self.start = geometry.as_point(start)
        self.goal = geometry.as_point(goal, dim=self.start.shape[0])

        if start_velocity is not None:
            start_velocity = geometry.as_point(start_velocity, dim=self.dim)
        self.start_velocity = start_velocity

        if goal_velocity is not None:
            goal_velocity = geometry.as_point(goal_velocity, dim=self.dim)
        self.goal_velocity = goal_velocity

    @property
    def dim(self):
        return self.start.shape[0]

    def check_velocities(self, velocity_set):
        """Raise IxgArgumentError if a boundary velocity breaks the limits."""
        for name, velocity in (("start", self.start_velocity),
                               ("goal", self.goal_velocity)):
            if velocity is not None and not velocity_set.contains(
                    velocity, tol=1e-9):
                raise errors.IxgArgumentError(
                    "The %s velocity %r exceeds %r." %
                    (name, velocity.tolist(), velocity_set))

    def __repr__(self):
        return "Query(start=%r, goal=%r)" % (self.start.tolist(),
                                             self.goal.tolist())


class GcsGraph(object):
    """Directed graph of convex sets. Immutable once built.

    Use build_graph and wire_query instead of calling this directly.
    """

    vertices = ()
    edges = frozenset()
    margin = DEFAULT_MARGIN

    query = None
    start_id = None
    goal_id = None

    _successors = None
    _predecessors = None

    def __init__(self, vertices, edges, margin=DEFAULT_MARGIN, query=None,
                 start_id=None, goal_id=None):
        self.vertices = tuple(vertices)
        self.edges = frozenset(edges)
        self.margin = margin
        self.query = query
        self.start_id = start_id
        self.goal_id = goal_id

        successors = [[] for _ in self.vertices]
        predecessors = [[] for _ in self.vertices]
        for u, v in sorted(self.edges):
            if u == v:
                raise errors.IxgArgumentError("Self-loop on vertex %d." % u)

            successors[u].append(v)
            predecessors[v].append(u)

        self._successors = tuple(tuple(s) for s in successors)
        self._predecessors = tuple(tuple(p) for p in predecessors)

    @property
    def dim(self):
        return self.vertices[0].dim

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def is_wired(self):
        return self.start_id is not None

    @property
    def set_ids(self):
        """Ids of the real convex sets, without Q_0 and Q_T."""
        return [v for v in range(self.num_vertices) if not self.is_query(v)]

    def is_query(self, vertex_id):
        return vertex_id in (self.start_id, self.goal_id)

    def successors(self, vertex_id):
        return self._successors[vertex_id]

    def predecessors(self, vertex_id):
        return self._predecessors[vertex_id]

    def has_edge(self, u, v):
        return (u, v) in self.edges

    def in_degree(self, vertex_id):
        return len(self._predecessors[vertex_id])

    def out_degree(self, vertex_id):
        return len(self._successors[vertex_id])

    def degree_stats(self):
        """Per-vertex (in, out) degrees and their maxima."""
        degrees = [(self.in_degree(v), self.out_degree(v))
                   for v in range(self.num_vertices)]
        return dict(degrees=degrees,
                    max_in=max(d[0] for d in degrees) if degrees else 0,
                    max_out=max(d[1] for d in degrees) if degrees else 0)

    def overlap_neighbors(self, vertex_id):
        """Neighbors over overlap edges, ignoring the query vertices."""
        return [v for v in self._successors[vertex_id]
                if not self.is_query(v)]

    def containing(self, point, tol=WIRE_TOL):
        """Ids of real sets containing 'point'."""
        return [v for v in self.set_ids
                if self.vertices[v].contains(point, tol=tol)]

    def interface(self, u, v):
        """The region vertex[u] ∩ vertex[v] of an edge."""
        if not self.has_edge(u, v):
            raise errors.IxgArgumentError("No edge (%d, %d)." % (u, v))

        return geometry.intersection(self.vertices[u], self.vertices[v])

    def components(self):
        """Connected components of the underlying undirected graph."""
        parent = list(range(self.num_vertices))

        def _find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[_find(u)] = _find(v)

        groups = {}
        for v in range(self.num_vertices):
            groups.setdefault(_find(v), []).append(v)

        return sorted(groups.values())

    def export_edges(self, fd):
        """Write the edge list, one 'u v' pair per line."""
        for u, v in sorted(self.edges):
            fd.write("%d %d\n" % (u, v))

    def __repr__(self):
        return "GcsGraph(%d vertices, %d edges%s)" % (
            self.num_vertices, self.num_edges,
            ", wired" if self.is_wired else "")


def build_graph(sets, margin=DEFAULT_MARGIN):
    """Build the graph of convex sets over 'sets'.

    Arguments:
        sets: List of ConvexSet, all in the same dimension.
        margin: Minimum overlap (inscribed ball radius) for an edge.

    Returns:
        GcsGraph with an edge in both directions for every overlapping pair.

    Raises:
        IxgArgumentError on empty input or mixed dimensions.
        IxgEmptySetError, IxgUnboundedSetError for malformed sets.
    """
    sets = list(sets)
    if not sets:
        raise errors.IxgArgumentError("Cannot build a graph from no sets.")

    dim = sets[0].dim
    for cset in sets:
        if cset.dim != dim:
            raise errors.IxgArgumentError(
                "Mixed dimensions: %r is in R^%d, expected R^%d." %
                (cset, cset.dim, dim))

        if not cset.is_box:
            cset.check()

    lo = np.array([cset.bounding_box[0] for cset in sets])
    hi = np.array([cset.bounding_box[1] for cset in sets])

    edges = set()
    for u in range(len(sets) - 1):
        overlap = (np.minimum(hi[u], hi[u + 1:]) -
                   np.maximum(lo[u], lo[u + 1:]))
        candidates = np.nonzero(
            np.all(overlap >= 2 * margin - geometry.ABS_TOL, axis=1))[0]
        for offset in candidates:
            v = u + 1 + int(offset)
            if geometry.intersects(sets[u], sets[v], margin):
                edges.add((u, v))
                edges.add((v, u))

    graph = GcsGraph(sets, edges, margin=margin)
    LOG.debug("Built %r.", graph)
    return graph


def wire_query(graph, query):
    """Add the singleton vertices Q_0 and Q_T for 'query'.

    Q_0 gets an edge to every set containing the start, Q_T an edge from
    every set containing the goal. 'graph' itself is left untouched.

    Raises:
        IxgQueryOutsideCoverError naming the endpoint outside every set.
        IxgStateError if 'graph' already has a query wired in.
    """
    if graph.is_wired:
        raise errors.IxgStateError("%r already has a query wired in." % graph)

    if query.dim != graph.dim:
        raise errors.IxgArgumentError(
            "Query is in R^%d but the graph is in R^%d." % (query.dim,
                                                            graph.dim))

    start_sets = graph.containing(query.start)
    if not start_sets:
        raise errors.IxgQueryOutsideCoverError(endpoint="start")

    goal_sets = graph.containing(query.goal)
    if not goal_sets:
        raise errors.IxgQueryOutsideCoverError(endpoint="goal")

    start_id = graph.num_vertices
    goal_id = start_id + 1
    vertices = list(graph.vertices)
    vertices.append(geometry.ConvexSet.from_point(query.start, label="Q_0"))
    vertices.append(geometry.ConvexSet.from_point(query.goal, label="Q_T"))

    edges = set(graph.edges)
    edges.update((start_id, v) for v in start_sets)
    edges.update((v, goal_id) for v in goal_sets)

    return GcsGraph(vertices, edges, margin=graph.margin, query=query,
                    start_id=start_id, goal_id=goal_id)


# IExportable implementations:

def _query_todict(query):
    data = dict(start=query.start.tolist(), goal=query.goal.tolist())
    if query.start_velocity is not None:
        data["start_velocity"] = query.start_velocity.tolist()
    if query.goal_velocity is not None:
        data["goal_velocity"] = query.goal_velocity.tolist()
    return data


exportable.IExportable.implement(
    for_type=Query,
    implementations={
        exportable.todict: _query_todict,
        exportable.fromdict: lambda cls, data: cls(**data)
    }
)
