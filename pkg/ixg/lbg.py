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
IxG lower bound graph (LBG).

The LBG is a small surrogate graph whose shortest paths never cost more than
the best trajectory through the corresponding convex sets. It is built once
per world:

 - For every set c and every pair of distinct neighbors (p, s), the relaxed
   program (order 1, continuity 0, no boundary velocities) from the interface
   Q_p ∩ Q_c to Q_c ∩ Q_s is solved inside Q_c. Its end points become LBG
   vertices and its cost the weight of a 'triplet' edge, in both directions.
 - All LBG vertices on the same interface are joined by 'interface' edges,
   which cost nothing by default: a trajectory crosses an interface at one
   point, and both relaxed programs may put it anywhere on the interface.

Per query, update_lbg adds the start and goal as vertices with 'query' edges
to every LBG vertex of the sets containing them, and backward_dijkstra turns
distances to the goal into the heuristic l(Q) over graph vertices.
"""

import concurrent.futures
import hashlib
import heapq
import json
import logging
import time

import numpy as np

from ixg import errors
from ixg import geometry
from ixg import trajectory as traj
from ixg import trajopt

from ixg.protocols import exportable

LOG = logging.getLogger(__name__)

INTERFACE_ZERO = "zero"
INTERFACE_CHORD = "chord"
INTERFACE_MODES = (INTERFACE_ZERO, INTERFACE_CHORD)

TRIPLET = "triplet"
INTERFACE = "interface"
QUERY = "query"

# LBG vertices closer than this (max norm) on one interface are merged.
MERGE_TOL = 1e-9

# A set owns every LBG vertex it contains up to this tolerance.
OWNER_TOL = 1e-6

CACHE_VERSION = 1


def chord_cost(p, q, weights, velocity_set):
    """Lower bound on the cost of any trajectory from p to q.

    The length is at least |q - p| and the duration at least the largest
    per-axis displacement over its speed limit.
    """
    delta = geometry.as_point(q) - geometry.as_point(p)
    return (weights.a * float(np.linalg.norm(delta)) +
            weights.b * velocity_set.min_time(delta))


def _closest_box_points(region_a, region_b):
    """Points p in box a, q in box b minimizing every |q_i - p_i| at once."""
    a_lo, a_hi = region_a.box
    b_lo, b_hi = region_b.box
    lo = np.maximum(a_lo, b_lo)
    hi = np.minimum(a_hi, b_hi)
    overlap = lo <= hi
    middle = (lo + hi) / 2.0
    above = b_lo > a_hi
    p = np.where(overlap, middle, np.where(above, a_hi, a_lo))
    q = np.where(overlap, middle, np.where(above, b_lo, b_hi))
    return p, q


def relaxed_transfer(set_id, cset, region_a, region_b, weights, velocity_set,
                     backend=None, counter=None):
    """Cheapest relaxed crossing of 'cset' from region_a to region_b.

    Both regions must lie inside 'cset'. The relaxed program is order 1,
    continuity 0, with no velocity boundary conditions. For boxes the optimum
    is the closest pair of points, since both the length and the time bound
    grow with every |delta_i|.

    Returns:
        (Trajectory, cost), or (None, inf) if the program is infeasible.
    """
    if region_a.is_box and region_b.is_box:
        p, q = _closest_box_points(region_a, region_b)
        duration = max(velocity_set.min_time(q - p), trajopt.MIN_DURATION)
        segment = traj.TrajectorySegment([p, q], duration, set_id)
        return (traj.Trajectory([segment]),
                chord_cost(p, q, weights, velocity_set))

    program = trajopt.SeqProgram([cset], set_ids=[set_id], start=region_a,
                                 end=region_b, order=1, continuity=0,
                                 weights=weights, velocity_set=velocity_set)
    result = trajopt.solve_sequence(program, backend=backend, counter=counter)
    if not result:
        return None, float("inf")

    return result, traj.cost(result, weights)


class LbgVertex(object):
    """A point of the LBG.

    Arguments:
        point: The coordinates.
        interface: (u, v) with u < v for points produced on the interface of
            graph edge (u, v); None for query points.
        owners: Ids of the graph vertices whose sets contain the point (the
            mapping from LBG vertices to graph vertices).
        query: True for query points added by update_lbg.
    """

    point = None
    interface = None
    owners = ()
    query = False

    def __init__(self, point, interface=None, owners=(), query=False):
        self.point = geometry.as_point(point)
        self.interface = tuple(interface) if interface is not None else None
        self.owners = tuple(sorted(set(owners)))
        self.query = query

    def __repr__(self):
        return "LbgVertex(%r, interface=%r, owners=%r%s)" % (
            self.point.tolist(), self.interface, self.owners,
            ", query" if self.query else "")


class LbgEdge(object):
    u = None
    v = None
    cost = None
    provenance = None

    def __init__(self, u, v, cost, provenance):
        if cost < 0:
            raise errors.IxgArgumentError(
                "LBG edge (%d, %d) has negative cost %r." % (u, v, cost))

        self.u = u
        self.v = v
        self.cost = float(cost)
        self.provenance = provenance

    def __repr__(self):
        return "LbgEdge(%d -> %d, %.6g, %s)" % (self.u, self.v, self.cost,
                                                self.provenance)


class LowerBoundGraph(object):
    """The LBG. Mutated only while building; update_lbg returns copies."""

    vertices = None
    interfaces = None
    triplet_cache = None

    weights = None
    velocity_set = None
    interface_cost = INTERFACE_ZERO
    backend = None

    num_sets = 0
    build_time = 0.0

    def __init__(self, weights, velocity_set, interface_cost=INTERFACE_ZERO,
                 backend=None, num_sets=0):
        if interface_cost not in INTERFACE_MODES:
            raise errors.IxgArgumentError(
                "Unknown interface cost mode %r, expected one of %r." %
                (interface_cost, INTERFACE_MODES))

        self.weights = weights
        self.velocity_set = velocity_set
        self.interface_cost = interface_cost
        self.backend = backend
        self.num_sets = num_sets

        self.vertices = []
        self.interfaces = {}
        self.triplet_cache = {}
        self._out = []
        self._in = []
        self._by_interface = {}
        self._query_costs = {}

    def copy(self):
        result = LowerBoundGraph(self.weights, self.velocity_set,
                                 interface_cost=self.interface_cost,
                                 backend=self.backend, num_sets=self.num_sets)
        result.vertices = list(self.vertices)
        result.interfaces = self.interfaces
        result.triplet_cache = self.triplet_cache
        result._out = [dict(edges) for edges in self._out]
        result._in = [dict(edges) for edges in self._in]
        result._by_interface = dict(
            (key, list(members))
            for key, members in self._by_interface.items())
        result._query_costs = dict(self._query_costs)
        result.build_time = self.build_time
        return result

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return sum(len(edges) for edges in self._out)

    def edges(self):
        for edges in self._out:
            for v in sorted(edges):
                yield edges[v]

    def out_edges(self, u):
        return self._out[u].values()

    def in_edges(self, v):
        return self._in[v].values()

    def has_edge(self, u, v):
        return v in self._out[u]

    def edge(self, u, v):
        return self._out[u].get(v)

    def vertices_on(self, interface):
        """Indices of the vertices produced on 'interface'."""
        return list(self._by_interface.get(tuple(sorted(interface)), ()))

    def vertices_owned_by(self, set_id):
        return [i for i, vertex in enumerate(self.vertices)
                if set_id in vertex.owners]

    def query_vertices(self):
        return [i for i, vertex in enumerate(self.vertices) if vertex.query]

    def find_vertex(self, point, query=None):
        point = geometry.as_point(point)
        for i, vertex in enumerate(self.vertices):
            if query is not None and vertex.query != query:
                continue
            if np.max(np.abs(vertex.point - point)) <= MERGE_TOL:
                return i

        return None

    def add_vertex(self, point, interface, owners, query=False):
        """Insert a vertex, merging with a close one on the same interface."""
        point = geometry.as_point(point)
        if interface is not None:
            interface = tuple(sorted(interface))
            for i in self._by_interface.get(interface, ()):
                if np.max(np.abs(self.vertices[i].point - point)) <= MERGE_TOL:
                    return i

        index = len(self.vertices)
        self.vertices.append(LbgVertex(point, interface=interface,
                                       owners=owners, query=query))
        self._out.append({})
        self._in.append({})
        if interface is not None:
            self._by_interface.setdefault(interface, []).append(index)

        return index

    def add_edge(self, u, v, cost, provenance):
        """Add u -> v, keeping the cheaper edge if one exists."""
        if u == v:
            return

        existing = self._out[u].get(v)
        if existing is not None and existing.cost <= cost:
            return

        edge = LbgEdge(u, v, cost, provenance)
        self._out[u][v] = edge
        self._in[v][u] = edge

    def __repr__(self):
        return "LowerBoundGraph(%d vertices, %d edges, %d triplets)" % (
            self.num_vertices, self.num_edges, len(self.triplet_cache))


def _owners(point, candidates, graph):
    return [c for c in candidates
            if graph.vertices[c].contains(point, tol=OWNER_TOL)]


def _interface_key(u, v):
    return (u, v) if u < v else (v, u)


def _solve_triplet(graph, interfaces, key, weights, velocity_set, backend):
    p, c, s = key
    return key, relaxed_transfer(c, graph.vertices[c],
                                 interfaces[_interface_key(p, c)],
                                 interfaces[_interface_key(c, s)],
                                 weights, velocity_set, backend=backend)


def _warn_unproven(lbg):
    if lbg.interface_cost == INTERFACE_CHORD:
        LOG.warning("Chord interface costs are not a proven lower bound. "
                    "IxG* guided by this LBG loses its optimality and "
                    "epsilon guarantees.")


def build_lbg(graph, template=None, weights=None, velocity_set=None,
              interface_cost=INTERFACE_ZERO, backend=None, workers=1):
    """Build the lower bound graph of 'graph'.

    Arguments:
        graph: GcsGraph. Query vertices, if wired, are ignored.
        template: Optional SeqProgram; its weights and velocity set are used
            unless given explicitly.
        weights: CostWeights of the full problem.
        velocity_set: VelocitySet of the full problem.
        interface_cost: 'zero' or 'chord'. Chord costs are not a proven
            lower bound, and choosing them logs a warning.
        backend: Solver backend for non-box triplets.
        workers: Triplet programs solved in parallel (threads).

    Returns:
        LowerBoundGraph.
    """
    started = time.time()
    if template is not None:
        weights = weights or template.weights
        velocity_set = velocity_set or template.velocity_set

    weights = weights or traj.CostWeights()
    velocity_set = velocity_set or geometry.VelocitySet.unbounded(graph.dim)

    lbg = LowerBoundGraph(weights, velocity_set,
                          interface_cost=interface_cost, backend=backend,
                          num_sets=len(graph.set_ids))
    _warn_unproven(lbg)

    interfaces = {}
    for u in graph.set_ids:
        for v in graph.overlap_neighbors(u):
            if u < v:
                interfaces[(u, v)] = geometry.intersection(
                    graph.vertices[u], graph.vertices[v])
    lbg.interfaces = interfaces

    keys = []
    for c in graph.set_ids:
        neighbors = graph.overlap_neighbors(c)
        for i, p in enumerate(neighbors):
            for s in neighbors[i + 1:]:
                keys.append((p, c, s))

    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(
                lambda key: _solve_triplet(graph, interfaces, key, weights,
                                           velocity_set, backend),
                keys))
    else:
        results = [_solve_triplet(graph, interfaces, key, weights,
                                  velocity_set, backend)
                   for key in keys]

    def _candidates(u, v):
        return sorted(set((u, v)) | set(graph.overlap_neighbors(u)) |
                      set(graph.overlap_neighbors(v)))

    omitted = 0
    for (p, c, s), (trajectory, cost) in results:
        if trajectory is None:
            omitted += 1
            LOG.warning("Triplet (%d, %d, %d) is infeasible; omitted.",
                        p, c, s)
            continue

        a = lbg.add_vertex(trajectory.start, (p, c),
                           _owners(trajectory.start, _candidates(p, c), graph))
        b = lbg.add_vertex(trajectory.end, (c, s),
                           _owners(trajectory.end, _candidates(c, s), graph))
        lbg.add_edge(a, b, cost, TRIPLET)
        lbg.add_edge(b, a, cost, TRIPLET)
        lbg.triplet_cache[(p, c, s)] = trajectory
        lbg.triplet_cache[(s, c, p)] = trajectory.reversed()

    anchors = 0
    for (u, v), region in sorted(interfaces.items()):
        if lbg.vertices_on((u, v)):
            continue

        center, _ = region.chebyshev
        lbg.add_vertex(center, (u, v),
                       _owners(center, _candidates(u, v), graph))
        anchors += 1

    for (u, v), members in sorted(interface_members(lbg, graph).items()):
        for a in members:
            for b in members:
                if a == b:
                    continue
                if interface_cost == INTERFACE_CHORD:
                    cost = chord_cost(lbg.vertices[a].point,
                                      lbg.vertices[b].point, weights,
                                      velocity_set)
                else:
                    cost = 0.0
                lbg.add_edge(a, b, cost, INTERFACE)

    lbg.build_time = time.time() - started
    LOG.info("Built %r over %d sets in %.3fs (%d triplets omitted, "
             "%d anchors).", lbg, lbg.num_sets, lbg.build_time, omitted,
             anchors)
    return lbg


def interface_members(lbg, graph):
    """Map each interface (u, v) to the non-query vertices lying on it."""
    members = {}
    for i, vertex in enumerate(lbg.vertices):
        if vertex.query:
            continue

        owners = vertex.owners
        for x, u in enumerate(owners):
            for v in owners[x + 1:]:
                if graph.has_edge(u, v):
                    members.setdefault((u, v), []).append(i)

    return members


def _query_edge_cost(graph, lbg, point, set_id, vertex):
    """Relaxed cost between a query point and the interface of 'vertex'."""
    key = (point.tobytes(), set_id, vertex.interface)
    cached = lbg._query_costs.get(key)
    if cached is not None:
        return cached

    cset = graph.vertices[set_id]
    region = lbg.interfaces[vertex.interface]
    if set_id not in vertex.interface:
        try:
            region = geometry.intersection(region, cset)
        except errors.IxgEmptyIntersectionError:
            # Owned only within OWNER_TOL; zero still bounds from below.
            LOG.debug("Interface %r misses set %d; query edge costs 0.",
                      vertex.interface, set_id)
            lbg._query_costs[key] = 0.0
            return 0.0

    _, cost = relaxed_transfer(set_id, cset,
                               geometry.ConvexSet.from_point(point), region,
                               lbg.weights, lbg.velocity_set,
                               backend=lbg.backend)
    lbg._query_costs[key] = cost
    return cost


def update_lbg(graph, lbg, point, vertex_id=None):
    """Insert a query point into a copy of 'lbg'.

    The point is joined both ways to every LBG vertex of every set that
    contains it. Edges to interface vertices cost the relaxed optimum from
    the point to that interface; edges to other query points cost the chord
    bound.

    Arguments:
        graph: The GcsGraph the LBG was built for (wired or not).
        lbg: LowerBoundGraph.
        point: The query point.
        vertex_id: Optional graph vertex the point stands for (Q_0 or Q_T);
            added to its owners.

    Returns:
        A new LowerBoundGraph, or 'lbg' itself if the point is already there
        with the same owners.

    Raises:
        IxgQueryOutsideCoverError if no set contains the point.
    """
    point = geometry.as_point(point, dim=graph.dim)
    containing = graph.containing(point)
    if not containing:
        raise errors.IxgQueryOutsideCoverError(
            "Query point %r is not inside any convex set." % (point.tolist(),))

    owners = list(containing)
    if vertex_id is not None:
        owners.append(vertex_id)

    existing = lbg.find_vertex(point, query=True)
    if existing is not None:
        if set(owners) <= set(lbg.vertices[existing].owners):
            return lbg

    result = lbg.copy()
    if existing is not None:
        vertex = result.vertices[existing]
        result.vertices[existing] = LbgVertex(
            vertex.point, owners=vertex.owners + tuple(owners), query=True)
        return result

    q = result.add_vertex(point, None, owners, query=True)
    for set_id in containing:
        for w in result.vertices_owned_by(set_id):
            if w == q:
                continue

            other = result.vertices[w]
            if other.query:
                cost = chord_cost(point, other.point, result.weights,
                                  result.velocity_set)
            else:
                cost = _query_edge_cost(graph, result, point, set_id, other)

            if np.isfinite(cost):
                result.add_edge(q, w, cost, QUERY)
                result.add_edge(w, q, cost, QUERY)

    return result


class HeuristicTable(object):
    """Cost-to-goal labels of LBG vertices and the heuristic l(Q).

    Calling the table with a graph vertex id gives l for that vertex, or
    'default' (infinity) if no LBG vertex of it reaches the goal.
    """

    labels = ()
    values = None
    default = float("inf")

    def __init__(self, labels=(), values=None, default=float("inf")):
        self.labels = tuple(labels)
        self.values = dict(values or {})
        self.default = default

    @classmethod
    def zero(cls):
        """The uninformed heuristic l = 0."""
        return cls(default=0.0)

    def __call__(self, set_id):
        return self.values.get(set_id, self.default)

    def __repr__(self):
        finite = sum(1 for value in self.values.values() if np.isfinite(value))
        return "HeuristicTable(%d vertices, %d finite)" % (len(self.values),
                                                           finite)


def _dijkstra(lbg, sources, reverse=False):
    """Shortest distances from 'sources' (forward, or on reversed edges)."""
    labels = [float("inf")] * lbg.num_vertices
    heap = []
    for source in sources:
        labels[source] = 0.0
        heap.append((0.0, source))
    heapq.heapify(heap)

    while heap:
        distance, u = heapq.heappop(heap)
        if distance > labels[u]:
            continue

        edges = lbg.in_edges(u) if reverse else lbg.out_edges(u)
        for edge in edges:
            v = edge.u if reverse else edge.v
            candidate = distance + edge.cost
            if candidate < labels[v]:
                labels[v] = candidate
                heapq.heappush(heap, (candidate, v))

    return labels


def backward_dijkstra(lbg, goal):
    """Heuristic table for the goal point 'goal'.

    Raises:
        IxgStateError if 'goal' wasn't inserted with update_lbg.
    """
    source = lbg.find_vertex(goal, query=True)
    if source is None:
        raise errors.IxgStateError(
            "Goal %r is not in the LBG; call update_lbg first." %
            (geometry.as_point(goal).tolist(),))

    labels = _dijkstra(lbg, [source], reverse=True)
    values = {}
    for vertex, label in zip(lbg.vertices, labels):
        for owner in vertex.owners:
            if label < values.get(owner, float("inf")):
                values[owner] = label

    return HeuristicTable(labels=labels, values=values)


def pair_lower_bound(lbg, source_set, target_set):
    """LBG distance from any vertex of one set to any vertex of another."""
    sources = lbg.vertices_owned_by(source_set)
    if not sources:
        return float("inf")

    labels = _dijkstra(lbg, sources)
    targets = lbg.vertices_owned_by(target_set)
    return min([labels[t] for t in targets] or [float("inf")])


def lookup_triplet(lbg, p, c, s):
    """The cached relaxed trajectory through c from p to s, or None."""
    if lbg is None:
        return None

    return lbg.triplet_cache.get((p, c, s))


def size_report(graph, lbg):
    """Sizes of the LBG next to the bounds they must satisfy.

    The bounds, over the graph's real sets with degree deg(c):

     - vertices <= 2 * sum(in(c) * out(c))
     - edges <= sum over interfaces I of |V_I| * (|V_I| - 1)
                + sum over sets c of deg(c) * (deg(c) - 1)
     - out degree of v <= sum over interfaces I holding v of (|V_I| - 1)
                          + 2 * (max deg - 1)

    Query vertices and their edges are left out.
    """
    set_ids = graph.set_ids
    degrees = dict((c, len(graph.overlap_neighbors(c))) for c in set_ids)
    max_degree = max(degrees.values()) if degrees else 0

    members = interface_members(lbg, graph)
    memberships = {}
    for key, vertices in members.items():
        for i in vertices:
            memberships.setdefault(i, []).append(len(vertices) - 1)

    vertices = [i for i, vertex in enumerate(lbg.vertices) if not vertex.query]
    edges = [edge for edge in lbg.edges() if edge.provenance != QUERY]

    vertex_bound = 2 * sum(degrees[c] * degrees[c] for c in set_ids)
    edge_bound = (sum(len(v) * (len(v) - 1) for v in members.values()) +
                  sum(d * (d - 1) for d in degrees.values()))

    degree_ok = True
    max_out = 0
    triplet_degree = 2 * max(max_degree - 1, 0)
    for i in vertices:
        out = sum(1 for edge in lbg.out_edges(i) if edge.provenance != QUERY)
        max_out = max(max_out, out)
        if out > sum(memberships.get(i, ())) + triplet_degree:
            degree_ok = False

    return dict(vertices=len(vertices), vertex_bound=vertex_bound,
                edges=len(edges), edge_bound=edge_bound,
                max_out_degree=max_out, degree_bound_holds=degree_ok,
                holds=(len(vertices) <= vertex_bound and
                       len(edges) <= edge_bound and degree_ok))


def cache_key(scenario_digest, weights, velocity_set, interface_cost):
    """Key identifying an LBG on disk."""
    material = json.dumps(dict(scenario=scenario_digest,
                               weights=exportable.todict(weights),
                               velocity=exportable.todict(velocity_set),
                               interface_cost=interface_cost,
                               version=CACHE_VERSION),
                          sort_keys=True)
    return hashlib.sha256(material.encode("utf-8")).hexdigest()


def save_lbg(lbg, path, key=None):
    data = exportable.todict(lbg)
    data["key"] = key
    with open(path, "w") as fd:
        json.dump(data, fd, sort_keys=True)


def load_lbg(path, key=None):
    """Read an LBG written by save_lbg.

    Raises:
        IxgCacheError if the file is unreadable, of another version, or was
            built for a different key.
    """
    try:
        with open(path, "r") as fd:
            data = json.load(fd)
    except (IOError, ValueError) as e:
        raise errors.IxgCacheError("Cannot read LBG cache: %s" % e, path=path)

    if data.get("version") != CACHE_VERSION:
        raise errors.IxgCacheError(
            "LBG cache version %r, expected %r." % (data.get("version"),
                                                    CACHE_VERSION),
            path=path)

    if key is not None and data.get("key") != key:
        raise errors.IxgCacheError(
            "LBG cache was built for a different scenario or parameters.",
            path=path, key="key")

    lbg = exportable.fromdict(LowerBoundGraph, data)
    _warn_unproven(lbg)
    return lbg


# IExportable implementations:

def _lbg_todict(lbg):
    return dict(
        version=CACHE_VERSION,
        interface_cost=lbg.interface_cost,
        num_sets=lbg.num_sets,
        weights=exportable.todict(lbg.weights),
        velocity_set=exportable.todict(lbg.velocity_set),
        interfaces=[dict(key=list(key), region=exportable.todict(region))
                    for key, region in sorted(lbg.interfaces.items())],
        vertices=[dict(point=v.point.tolist(),
                       interface=list(v.interface) if v.interface else None,
                       owners=list(v.owners),
                       query=v.query)
                  for v in lbg.vertices],
        edges=[[e.u, e.v, e.cost, e.provenance] for e in lbg.edges()],
        triplets=[dict(key=list(key),
                       trajectory=exportable.todict(trajectory))
                  for key, trajectory in sorted(lbg.triplet_cache.items())])


def _lbg_fromdict(cls, data):
    lbg = cls(exportable.fromdict(traj.CostWeights, data["weights"]),
              exportable.fromdict(geometry.VelocitySet, data["velocity_set"]),
              interface_cost=data["interface_cost"],
              num_sets=data.get("num_sets", 0))
    lbg.interfaces = dict(
        (tuple(item["key"]),
         exportable.fromdict(geometry.ConvexSet, item["region"]))
        for item in data["interfaces"])

    for vertex in data["vertices"]:
        lbg.vertices.append(LbgVertex(vertex["point"],
                                      interface=vertex["interface"],
                                      owners=vertex["owners"],
                                      query=vertex["query"]))
        lbg._out.append({})
        lbg._in.append({})
        if vertex["interface"] is not None:
            lbg._by_interface.setdefault(
                tuple(vertex["interface"]), []).append(len(lbg.vertices) - 1)

    for u, v, cost, provenance in data["edges"]:
        lbg.add_edge(u, v, cost, provenance)

    for item in data["triplets"]:
        lbg.triplet_cache[tuple(item["key"])] = exportable.fromdict(
            traj.Trajectory, item["trajectory"])

    return lbg


exportable.IExportable.implement(
    for_type=LowerBoundGraph,
    implementations={
        exportable.todict: _lbg_todict,
        exportable.fromdict: _lbg_fromdict
    }
)
