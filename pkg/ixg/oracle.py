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
Brute-force ground truth for small graphs.

The oracle enumerates every path within a visit budget, depth first, and
solves the sequence program over each one. It is exponential and refuses to
run once the path count passes a cap.
"""

import logging

from ixg import errors
from ixg import geometry
from ixg import search
from ixg import trajectory as traj
from ixg import trajopt

LOG = logging.getLogger(__name__)

DEFAULT_PATH_CAP = 10 ** 6


def enumerate_paths(graph, source, targets, max_visits=1,
                    path_cap=DEFAULT_PATH_CAP, skip=()):
    """All paths from 'source' to any of 'targets', depth first.

    Arguments:
        graph: GcsGraph.
        source: First vertex of every path.
        targets: Vertices a path may end at. Paths stop at the first target.
        max_visits: How often a path may pass through one vertex.
        path_cap: Raise once more paths than this were found.
        skip: Vertices never entered.

    Returns:
        List of paths (tuples of vertex ids) in depth-first order.

    Raises:
        IxgOracleTooLargeError past 'path_cap'.
    """
    if max_visits < 1:
        raise errors.IxgArgumentError("max_visits must be >= 1, got %r." %
                                      max_visits)

    targets = frozenset(targets)
    skip = frozenset(skip)
    paths = []
    visits = {source: 1}
    path = [source]
    warned = [False]

    def _visit(vertex):
        if vertex in targets:
            paths.append(tuple(path))
            if len(paths) > path_cap:
                raise errors.IxgOracleTooLargeError(cap=path_cap)
            if not warned[0] and len(paths) > 0.9 * path_cap:
                LOG.warning("Oracle path count is close to its cap of %d.",
                            path_cap)
                warned[0] = True
            return

        for successor in graph.successors(vertex):
            if successor in skip or visits.get(successor, 0) >= max_visits:
                continue

            visits[successor] = visits.get(successor, 0) + 1
            path.append(successor)
            _visit(successor)
            path.pop()
            visits[successor] -= 1

    _visit(source)
    return paths


def oracle_enumerate(graph, query, max_visits=1, config=None,
                     path_cap=DEFAULT_PATH_CAP, memo=None):
    """Cheapest trajectory over all start-to-goal paths.

    Arguments:
        graph: GcsGraph, wired with 'query' or not.
        query: Query.
        max_visits: Per-set visit budget of a path.
        config: PlannerConfig for the sequence programs (epsilon and the
            search options are ignored).
        path_cap: Largest number of paths to enumerate.
        memo: Optional dict of earlier solves keyed by path, shared between
            calls on the same wired graph and config.

    Returns:
        PlanResult with algorithm 'oracle'. stats.expansions is the number of
        paths enumerated. SolverStalled if no path solved and the solver
        stalled on some.

    Raises:
        IxgOracleTooLargeError if there are more than 'path_cap' paths.
    """
    config = (config or search.PlannerConfig()).copy(
        max_visits_per_vertex=max_visits, allow_cycles=max_visits > 1)
    ctx = search.start_context(graph, query, None, config)
    graph = ctx.graph
    memo = {} if memo is None else memo

    paths = enumerate_paths(graph, graph.start_id, [graph.goal_id],
                            max_visits=max_visits, path_cap=path_cap,
                            skip=[graph.start_id])
    ctx.stats.expansions = len(paths)
    LOG.debug("Oracle enumerated %d paths.", len(paths))

    best = None
    for path in paths:
        if path not in memo:
            memo[path] = ctx.evaluate(path, None)

        evaluated = memo[path]
        if evaluated is None:
            continue

        trajectory, g = evaluated
        if best is None or g < best.g:
            best = search.PathNode(path, g, trajectory)

    if best is None:
        return search.finish_context(ctx, search.INFEASIBLE, "oracle")

    ctx.stats.certificate = 1.0
    return search.finish_context(ctx, search.SOLVED, "oracle", best)


def pair_oracle(graph, source_set, target_set, max_visits=1, config=None,
                path_cap=DEFAULT_PATH_CAP):
    """Cheapest trajectory from anywhere in one set to anywhere in another.

    Start and end are free in the first and last set, so this is the
    quantity LBG distances between the two sets must not exceed.

    Returns:
        The optimal cost, or infinity if no path is feasible. Paths the
        solver stalls on are left out.
    """
    if source_set == target_set:
        return 0.0

    config = config or search.PlannerConfig()
    velocity_set = (config.velocity_set or
                    geometry.VelocitySet.unbounded(graph.dim))
    skip = [v for v in range(graph.num_vertices) if graph.is_query(v)]
    paths = enumerate_paths(graph, source_set, [target_set],
                            max_visits=max_visits, path_cap=path_cap,
                            skip=skip)

    backend = trajopt.get_backend(config.backend)
    best = float("inf")
    for path in paths:
        program = trajopt.SeqProgram.from_graph(
            graph, path, order=config.order, continuity=config.continuity,
            weights=config.weights, velocity_set=velocity_set)
        try:
            result = trajopt.solve_sequence(program, backend=backend)
        except errors.IxgSolverStalledError as e:
            LOG.warning("Pair oracle dropping %r: %s", path, e)
            continue

        if result:
            best = min(best, traj.cost(result, config.weights))

    return best
