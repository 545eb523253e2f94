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
IxG search: best-first search over convex sets interleaved with sequence
optimization.

plan_ixg searches over graph vertices with a CLOSED set. Every successor of
an expanded vertex gets the sequence program over its ancestors plus itself
solved, and keeps the cheapest valid trajectory found for it. It is complete
but neither optimal nor bounded-suboptimal: the cost of reaching a set
depends on how the trajectory got there, which a CLOSED set ignores.

plan_ixg_star searches over paths instead, so a vertex can be reached (and
expanded) along several paths and, if cycles are allowed, more than once on
the same path. Paths whose key exceeds the upper bound from a plan_ixg run
are pruned. With epsilon 1 the result is optimal over the paths within the
visit budget; otherwise its cost is at most epsilon times the optimum.

Both take a heuristic from the lower bound graph (or l = 0 without one).
The expansion trace is logged to 'ixg.search.trace'.
"""

import concurrent.futures
import heapq
import itertools
import logging
import threading
import time

import numpy as np

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import trajectory as traj
from ixg import trajopt

from ixg.protocols import exportable

LOG = logging.getLogger(__name__)
TRACE = logging.getLogger("ixg.search.trace")

SOLVED = "Solved"
INFEASIBLE = "Infeasible"
BUDGET_EXHAUSTED = "BudgetExhausted"
# No path solved, but the solver gave up on some, so infeasibility is
# unproven.
SOLVER_STALLED = "SolverStalled"

UPPER_BOUND_TIGHT = "tight"
UPPER_BOUND_PAPER = "paper"

INFINITY = float("inf")

# Solver output is checked against the sets with this tolerance.
VALIDATE_TOL = 1e-5


def key(g, l, epsilon):
    """Priority g + epsilon * l; infinite if l is.

    Examples:
        key(2, 3, 1) # => 5
        key(2, 3, 6) # => 20
    """
    if l == INFINITY:
        return INFINITY

    return g + epsilon * l


class PlannerConfig(object):
    """Search parameters.

    Arguments:
        epsilon: Heuristic inflation, >= 1.
        allow_cycles: Let IxG* revisit sets on one path.
        max_visits_per_vertex: Visits of one set per path when cycles are
            allowed.
        upper_bound_mode: 'tight' prunes against u = epsilon * cost(IxG),
            'paper' against epsilon * u.
        use_upper_bound: Run plan_ixg first for u; False means u = inf.
        lazy: IxG* keys successors with the parent's g and solves them when
            popped; False solves every successor on expansion.
        order, continuity, weights, velocity_set, backend: Passed on to the
            sequence programs.
        max_expansions, max_time: Budget; None for unlimited.
        escalate_cycles: On Infeasible, double max_visits_per_vertex and
            retry, up to max_visits_cap.
        batch_size, workers: Paths popped per IxG* step and threads solving
            their successors.
        prune_tol: Relative slack on the pruning comparison.

    Passing another PlannerConfig as the first argument copies it, with
    keyword arguments overriding:

        PlannerConfig(config, epsilon=2.0)
    """

    epsilon = 1.0
    allow_cycles = False
    max_visits_per_vertex = 3
    upper_bound_mode = UPPER_BOUND_TIGHT
    use_upper_bound = True
    lazy = True
    order = 3
    continuity = 0
    weights = None
    velocity_set = None
    backend = None
    max_expansions = None
    max_time = None
    escalate_cycles = False
    max_visits_cap = 16
    batch_size = 1
    workers = 1
    prune_tol = 1e-9

    FIELDS = ("epsilon", "allow_cycles", "max_visits_per_vertex",
              "upper_bound_mode", "use_upper_bound", "lazy", "order",
              "continuity", "weights", "velocity_set", "backend",
              "max_expansions", "max_time", "escalate_cycles",
              "max_visits_cap", "batch_size", "workers", "prune_tol")

    def __init__(self, source=None, **kwargs):
        super(PlannerConfig, self).__init__()

        if source is not None:
            if not isinstance(source, PlannerConfig):
                raise TypeError("Expected a PlannerConfig, got %r." %
                                (source,))

            # Run as a copy constructor with optional overrides.
            for name in self.FIELDS:
                setattr(self, name, getattr(source, name))

        for name, value in kwargs.items():
            if name not in self.FIELDS:
                raise errors.IxgArgumentError(
                    "Unknown planner option %r." % name, key=name)
            if value is not None:
                setattr(self, name, value)

        if self.weights is None:
            self.weights = traj.CostWeights()

        if not self.epsilon >= 1:
            raise errors.IxgArgumentError(
                "epsilon must be >= 1, got %r." % self.epsilon)

        if self.max_visits_per_vertex < 1:
            raise errors.IxgArgumentError(
                "max_visits_per_vertex must be >= 1, got %r." %
                self.max_visits_per_vertex)

        if self.upper_bound_mode not in (UPPER_BOUND_TIGHT,
                                         UPPER_BOUND_PAPER):
            raise errors.IxgArgumentError(
                "Unknown upper bound mode %r." % self.upper_bound_mode)

        if self.batch_size < 1 or self.workers < 1:
            raise errors.IxgArgumentError(
                "batch_size and workers must be >= 1.")

    def copy(self, **overrides):
        return PlannerConfig(self, **overrides)

    @property
    def visit_cap(self):
        return self.max_visits_per_vertex if self.allow_cycles else 1

    def __repr__(self):
        return "PlannerConfig(epsilon=%r, allow_cycles=%r, visits=%r)" % (
            self.epsilon, self.allow_cycles, self.visit_cap)


class PlannerStats(object):
    """Counters collected by one planner run."""

    def __init__(self):
        self.expansions = 0
        self.expansions_per_vertex = {}
        self.optimized_edges = 0
        self.ub_optimized_edges = 0
        self.max_sequence_length = 0
        self.max_decision_vars = 0
        self.pruned = 0
        self.stalled = 0
        self.wall_time = 0.0
        self.lbg_update_time = 0.0
        self.certificate = None
        self.upper_bound = INFINITY
        self.visit_budget = None
        self.expansion_log = []

    @property
    def reexpansions(self):
        """Per vertex, how often it was expanded after the first time."""
        return dict((v, n - 1) for v, n in self.expansions_per_vertex.items()
                    if n > 1)

    @property
    def total_reexpansions(self):
        return sum(self.reexpansions.values())

    @property
    def own_optimized_edges(self):
        """Solve calls made by this run, without the upper bound run."""
        return self.optimized_edges - self.ub_optimized_edges

    def record_expansion(self, vertex, path):
        self.expansions += 1
        self.expansions_per_vertex[vertex] = (
            self.expansions_per_vertex.get(vertex, 0) + 1)
        self.expansion_log.append(tuple(path))

    def absorb(self, counter):
        self.optimized_edges = counter.calls
        self.max_sequence_length = counter.max_sequence_length
        self.max_decision_vars = counter.max_decision_vars

    def __repr__(self):
        return "PlannerStats(expansions=%d, optimized_edges=%d)" % (
            self.expansions, self.optimized_edges)


class PlanResult(object):
    """Outcome of a planner run. Truthy iff solved."""

    status = None
    path = None
    trajectory = None
    cost = INFINITY
    stats = None
    algorithm = None

    def __init__(self, status, path=None, trajectory=None, cost=INFINITY,
                 stats=None, algorithm=None):
        self.status = status
        self.path = tuple(path) if path is not None else None
        self.trajectory = trajectory
        self.cost = cost
        self.stats = stats or PlannerStats()
        self.algorithm = algorithm

    @property
    def solved(self):
        return self.status == SOLVED

    def __bool__(self):
        return self.solved

    def __repr__(self):
        return "PlanResult(%s, %s, cost=%.6g, path=%r)" % (
            self.algorithm, self.status, self.cost, self.path)


def reconstruct(result):
    """The set path and trajectory of a solved result.

    Raises:
        IxgStateError if the result isn't Solved.
    """
    if not result.solved:
        raise errors.IxgStateError(
            "Cannot reconstruct a %s result." % result.status)

    return list(result.path), result.trajectory


class SearchNode(object):
    """IxG node: a vertex with the best trajectory found to it."""

    __slots__ = ("set_id", "g", "parent", "trajectory", "path")

    def __init__(self, set_id, g, parent, trajectory, path):
        self.set_id = set_id
        self.g = g
        self.parent = parent
        self.trajectory = trajectory
        self.path = path


class PathNode(object):
    """IxG* node: a path from Q_0 with the trajectory optimized over it.

    Unevaluated nodes carry the parent's trajectory and g (a lower bound).
    """

    __slots__ = ("path", "g", "trajectory", "evaluated")

    def __init__(self, path, g, trajectory, evaluated=True):
        self.path = path
        self.g = g
        self.trajectory = trajectory
        self.evaluated = evaluated

    @property
    def set_id(self):
        return self.path[-1]


class SearchContext(object):
    """What a planner run needs besides its OPEN list."""

    def __init__(self, graph, query, config, heuristic, lbg, counter,
                 stats):
        self.graph = graph
        self.query = query
        self.config = config
        self.heuristic = heuristic
        self.lbg = lbg
        self.counter = counter
        self.stats = stats
        self.backend = trajopt.get_backend(config.backend)
        self.velocity_set = (config.velocity_set or
                             geometry.VelocitySet.unbounded(graph.dim))
        self.started = time.time()
        self._stalled_lock = threading.Lock()

    def exhausted(self):
        config = self.config
        if (config.max_expansions is not None and
                self.stats.expansions >= config.max_expansions):
            return True

        if (config.max_time is not None and
                time.time() - self.started > config.max_time):
            return True

        return False

    def is_goal(self, path):
        return path[-1] == self.graph.goal_id

    def program(self, path, warm_start=None):
        """The sequence program over 'path' (query vertices stripped)."""
        graph = self.graph
        query = self.query
        real = [v for v in path if not graph.is_query(v)]
        reaches_goal = self.is_goal(path)
        return trajopt.SeqProgram.from_graph(
            graph, real,
            start=query.start,
            end=query.goal if reaches_goal else None,
            start_velocity=query.start_velocity,
            end_velocity=query.goal_velocity if reaches_goal else None,
            order=self.config.order,
            continuity=self.config.continuity,
            weights=self.config.weights,
            velocity_set=self.velocity_set,
            warm_start=warm_start)

    def warm_start(self, path, trajectory):
        """Parent trajectory plus a seed segment from the LBG triplet."""
        if trajectory is None or trajectory.is_empty:
            return None

        if len(path) < 3:
            return trajectory

        p, c, s = path[-3], path[-2], path[-1]
        triplet = lbgs.lookup_triplet(self.lbg, p, c, s)
        if triplet is None or self.graph.is_query(s):
            return trajectory

        r = self.config.order
        seed = traj.TrajectorySegment(np.tile(triplet.end, (r + 1, 1)),
                                      trajectory.segments[-1].duration, s)
        return traj.Trajectory(trajectory.segments + (seed,),
                               continuity_order=trajectory.continuity_order)

    def evaluate(self, path, parent_trajectory):
        """Solve over 'path'. Returns (trajectory, g) or None.

        A path the solver stalls on is dropped like an infeasible one and
        counted in stats.stalled.
        """
        real = [v for v in path if not self.graph.is_query(v)]
        if not real:
            return traj.Trajectory([]), 0.0

        program = self.program(path, self.warm_start(path,
                                                      parent_trajectory))
        try:
            result = trajopt.solve_sequence(program, backend=self.backend,
                                            counter=self.counter)
        except errors.IxgSolverStalledError as e:
            LOG.warning("Dropping %r: %s", path, e)
            with self._stalled_lock:
                self.stats.stalled += 1
            return None

        if not result:
            LOG.debug("%r infeasible (%s).", path, result.status)
            return None

        report = traj.validate(result, self.graph, self.velocity_set,
                               tol=VALIDATE_TOL,
                               query=self.query if self.is_goal(path)
                               else None)
        if not report:
            LOG.debug("%r solved but invalid: %r", path, report)
            return None

        return result, traj.cost(result, self.config.weights)

    def trace(self, node_key, g, path):
        if TRACE.isEnabledFor(logging.INFO):
            TRACE.info("key=%.9g g=%.9g l=%.9g path=%s", node_key, g,
                       self.heuristic(path[-1]),
                       " ".join(str(v) for v in path))


def prepare(graph, query, lbg):
    """Wire 'query' into 'graph' and compute the heuristic.

    Returns:
        (wired graph, query, HeuristicTable, seconds spent on the LBG).
    """
    if graph.is_wired:
        if query is not None and query is not graph.query:
            raise errors.IxgStateError(
                "%r is wired for another query." % graph)
        wired = graph
        query = graph.query
    else:
        if query is None:
            raise errors.IxgArgumentError("No query to plan for.")
        wired = gcs.wire_query(graph, query)

    if lbg is None:
        return wired, query, lbgs.HeuristicTable.zero(), 0.0

    started = time.time()
    updated = lbgs.update_lbg(wired, lbg, query.start,
                              vertex_id=wired.start_id)
    updated = lbgs.update_lbg(wired, updated, query.goal,
                              vertex_id=wired.goal_id)
    heuristic = lbgs.backward_dijkstra(updated, query.goal)
    return wired, query, heuristic, time.time() - started


def start_context(graph, query, lbg, config, prepared=None):
    """A SearchContext for one run; see prepare for the arguments."""
    if prepared is None:
        prepared = prepare(graph, query, lbg)
    wired, query, heuristic, update_time = prepared

    if config.velocity_set is not None:
        query.check_velocities(config.velocity_set)

    stats = PlannerStats()
    stats.lbg_update_time = update_time
    stats.visit_budget = config.visit_cap
    counter = trajopt.SolveCounter()
    return SearchContext(wired, query, config, heuristic, lbg, counter, stats)


def finish_context(ctx, status, algorithm, node=None):
    stats = ctx.stats
    if status == INFEASIBLE and stats.stalled:
        LOG.warning("%s found no solution, but the solver stalled on %d "
                    "paths.", algorithm, stats.stalled)
        status = SOLVER_STALLED

    stats.absorb(ctx.counter)
    stats.optimized_edges += stats.ub_optimized_edges
    stats.wall_time = time.time() - ctx.started

    if node is None:
        return PlanResult(status, stats=stats, algorithm=algorithm)

    return PlanResult(status, path=node.path, trajectory=node.trajectory,
                      cost=node.g, stats=stats, algorithm=algorithm)


def plan_ixg(graph, lbg, query, config=None, prepared=None):
    """IxG: weighted best-first search over vertices with a CLOSED set.

    Arguments:
        graph: GcsGraph, wired with 'query' or not.
        lbg: LowerBoundGraph for the heuristic, or None for l = 0.
        query: Query (None if 'graph' is already wired).
        config: PlannerConfig.
        prepared: Result of prepare(), to share the heuristic between runs.

    Returns:
        PlanResult. BudgetExhausted results carry no trajectory. Paths the
        solver stalls on are dropped; if no path solved and any stalled, the
        status is SolverStalled instead of Infeasible.
    """
    config = config or PlannerConfig()
    ctx = start_context(graph, query, lbg, config, prepared)
    graph = ctx.graph
    epsilon = config.epsilon
    heuristic = ctx.heuristic

    tie = itertools.count()
    root = SearchNode(graph.start_id, 0.0, None, None, (graph.start_id,))
    best = {graph.start_id: root}
    closed = set()
    open_list = [(key(0.0, heuristic(graph.start_id), epsilon), -0.0,
                  next(tie), root)]

    while open_list:
        if ctx.exhausted():
            return finish_context(ctx, BUDGET_EXHAUSTED, "ixg")

        node_key, _, _, node = heapq.heappop(open_list)
        if node.set_id in closed or best.get(node.set_id) is not node:
            continue

        if node.set_id == graph.goal_id:
            # IxG bounds nothing, so stats.certificate stays None.
            return finish_context(ctx, SOLVED, "ixg", node)

        closed.add(node.set_id)
        ctx.stats.record_expansion(node.set_id, node.path)
        ctx.trace(node_key, node.g, node.path)

        for successor in graph.successors(node.set_id):
            if successor in closed:
                continue

            l = heuristic(successor)
            if l == INFINITY:
                ctx.stats.pruned += 1
                continue

            path = node.path + (successor,)
            evaluated = ctx.evaluate(path, node.trajectory)
            if evaluated is None:
                continue

            trajectory, g = evaluated
            current = best.get(successor)
            if current is not None and current.g <= g:
                continue

            child = SearchNode(successor, g, node, trajectory, path)
            best[successor] = child
            heapq.heappush(open_list, (key(g, l, epsilon), -g, next(tie),
                                       child))

    return finish_context(ctx, INFEASIBLE, "ixg")


def plan_ixg_star(graph, lbg, query, config=None):
    """IxG*: best-first search over paths, pruned by an upper bound.

    Arguments as plan_ixg. With config.escalate_cycles the visit budget is
    doubled after each Infeasible run, up to config.max_visits_cap.

    Returns:
        PlanResult. BudgetExhausted results carry the cheapest goal path
        found so far, if any.
    """
    config = config or PlannerConfig()
    prepared = prepare(graph, query, lbg)
    result = _plan_ixg_star(prepared, lbg, config)
    while (result.status == INFEASIBLE and config.escalate_cycles and
           config.allow_cycles and
           config.max_visits_per_vertex < config.max_visits_cap):
        visits = min(2 * config.max_visits_per_vertex, config.max_visits_cap)
        LOG.info("IxG* infeasible with %d visits per set, retrying with %d.",
                 config.max_visits_per_vertex, visits)
        config = config.copy(max_visits_per_vertex=visits)
        result = _plan_ixg_star(prepared, lbg, config)

    return result


def _upper_bound(prepared, lbg, config, ctx):
    if not config.use_upper_bound:
        return INFINITY

    ub_result = plan_ixg(None, lbg, None, config, prepared=prepared)
    ctx.stats.ub_optimized_edges = ub_result.stats.optimized_edges
    if not ub_result.solved:
        LOG.info("IxG found no upper bound (%s); u = inf.", ub_result.status)
        return INFINITY

    upper = config.epsilon * ub_result.cost
    if config.upper_bound_mode == UPPER_BOUND_PAPER:
        LOG.warning("Pruning against epsilon * u = %.6g; the cost bound is "
                    "epsilon^2 times the optimum.", config.epsilon * upper)
        return config.epsilon * upper

    return upper


def _plan_ixg_star(prepared, lbg, config):
    ctx = start_context(None, None, lbg, config, prepared)
    graph = ctx.graph
    epsilon = config.epsilon
    heuristic = ctx.heuristic
    visit_cap = config.visit_cap
    stats = ctx.stats

    bound = _upper_bound(prepared, lbg, config, ctx)
    stats.upper_bound = bound
    slack = config.prune_tol * max(1.0, abs(bound)) if bound < INFINITY else 0

    def _pruned(g, l):
        return key(g, l, epsilon) > bound + slack

    tie = itertools.count()
    seen = {}
    best_goal = [None]
    open_list = []

    def _push(node):
        l = heuristic(node.set_id)
        if l == INFINITY or _pruned(node.g, l):
            stats.pruned += 1
            return

        if node.evaluated:
            known = seen.get(node.path)
            if known is not None and known <= node.g:
                return
            seen[node.path] = node.g

            if ctx.is_goal(node.path) and (best_goal[0] is None or
                                           node.g < best_goal[0].g):
                best_goal[0] = node

        heapq.heappush(open_list, (key(node.g, l, epsilon), -node.g,
                                   next(tie), node))

    def _children(node):
        children = []
        for successor in graph.successors(node.set_id):
            if node.path.count(successor) >= visit_cap:
                continue
            children.append(node.path + (successor,))
        return children

    def _evaluate_all(paths_and_parents):
        if config.workers > 1 and len(paths_and_parents) > 1:
            with concurrent.futures.ThreadPoolExecutor(
                    config.workers) as pool:
                return list(pool.map(
                    lambda item: ctx.evaluate(item[0], item[1]),
                    paths_and_parents))

        return [ctx.evaluate(path, parent)
                for path, parent in paths_and_parents]

    _push(PathNode((graph.start_id,), 0.0, None))

    while open_list:
        if ctx.exhausted():
            return finish_context(ctx, BUDGET_EXHAUSTED, "ixgstar",
                                  best_goal[0])

        batch = []
        while open_list and len(batch) < config.batch_size:
            node_key, _, _, node = heapq.heappop(open_list)
            if node.evaluated and seen.get(node.path, INFINITY) < node.g:
                continue

            if node.evaluated and ctx.is_goal(node.path):
                if batch:
                    heapq.heappush(open_list, (node_key, -node.g,
                                               next(tie), node))
                    break

                lower = max(heuristic(graph.start_id), node_key / epsilon)
                stats.certificate = node.g / lower if lower > 0 else 1.0
                return finish_context(ctx, SOLVED, "ixgstar", node)

            batch.append((node_key, node))

        pending = []
        for node_key, node in batch:
            if not node.evaluated:
                pending.append((node.path, node.trajectory, node))
                continue

            stats.record_expansion(node.set_id, node.path)
            ctx.trace(node_key, node.g, node.path)
            for path in _children(node):
                if config.lazy:
                    _push(PathNode(path, node.g, node.trajectory,
                                   evaluated=False))
                else:
                    pending.append((path, node.trajectory, None))

        results = _evaluate_all([(path, parent)
                                 for path, parent, _ in pending])
        for (path, _, _), evaluated in zip(pending, results):
            if evaluated is None:
                continue

            trajectory, g = evaluated
            _push(PathNode(path, g, trajectory))

    return finish_context(ctx, INFEASIBLE, "ixgstar")


# IExportable implementations:

def _stats_todict(stats):
    return dict(
        expansions=stats.expansions,
        reexpansions=dict((str(v), n) for v, n in
                          sorted(stats.reexpansions.items())),
        total_reexpansions=stats.total_reexpansions,
        optimized_edges=stats.optimized_edges,
        ub_optimized_edges=stats.ub_optimized_edges,
        max_sequence_length=stats.max_sequence_length,
        max_decision_vars=stats.max_decision_vars,
        pruned=stats.pruned,
        stalled=stats.stalled,
        wall_time=stats.wall_time,
        lbg_update_time=stats.lbg_update_time,
        upper_bound=(stats.upper_bound if stats.upper_bound < INFINITY
                     else None),
        certificate=stats.certificate,
        visit_budget=stats.visit_budget)


def _result_todict(result):
    return dict(
        algorithm=result.algorithm,
        status=result.status,
        cost=result.cost if result.cost < INFINITY else None,
        path=list(result.path) if result.path is not None else None,
        stats=_stats_todict(result.stats))


exportable.IExportable.implement(
    for_type=PlannerStats,
    implementations={exportable.todict: _stats_todict}
)


exportable.IExportable.implement(
    for_type=PlanResult,
    implementations={exportable.todict: _result_todict}
)
