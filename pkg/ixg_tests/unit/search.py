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
IxG test suite.
"""

import logging
import math

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import oracle
from ixg import search
from ixg import trajectory as traj
from ixg import worlds

from ixg.protocols import exportable

from ixg_tests import testlib


LENGTH_ONLY = traj.CostWeights(a=1, b=0)


def diamond_query():
    return gcs.Query(start=[0.5, 0.5], goal=[2.5, 4.5])


def markov_config(**kwargs):
    return search.PlannerConfig(order=1, weights=LENGTH_ONLY, **kwargs)


def revisit_config(**kwargs):
    return search.PlannerConfig(
        order=3, continuity=1,
        velocity_set=geometry.VelocitySet(worlds.REVISIT_VMAX, dim=2),
        **kwargs)


class KeyTest(testlib.IxgTestCase):
    def testKey(self):
        self.assertEqual(search.key(2, 3, 1), 5)
        self.assertEqual(search.key(2, 3, 6), 20)
        self.assertEqual(search.key(1, search.INFINITY, 1), search.INFINITY)
        self.assertEqual(search.key(0, 0, 5), 0)


class PlannerConfigTest(testlib.IxgTestCase):
    def testDefaults(self):
        config = search.PlannerConfig()
        self.assertEqual(config.epsilon, 1.0)
        self.assertEqual(config.visit_cap, 1)
        self.assertTrue(config.lazy)
        self.assertEqual(config.weights, traj.CostWeights())

    def testCopy(self):
        config = search.PlannerConfig(epsilon=2, allow_cycles=True)
        copy = search.PlannerConfig(config, max_visits_per_vertex=5)
        self.assertEqual(copy.epsilon, 2)
        self.assertEqual(copy.visit_cap, 5)
        self.assertEqual(config.visit_cap, 3)

        # None leaves the copied value alone.
        self.assertEqual(config.copy(epsilon=None).epsilon, 2)

    def testArguments(self):
        with self.assertRaises(errors.IxgArgumentError,
                               lambda e: e.key == "epsilion"):
            search.PlannerConfig(epsilion=2)

        with self.assertRaises(errors.IxgArgumentError):
            search.PlannerConfig(epsilon=0.5)

        with self.assertRaises(errors.IxgArgumentError):
            search.PlannerConfig(max_visits_per_vertex=0)

        with self.assertRaises(errors.IxgArgumentError):
            search.PlannerConfig(upper_bound_mode="loose")

        with self.assertRaises(errors.IxgArgumentError):
            search.PlannerConfig(batch_size=0)


class SingleSetTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph([testlib.box([0, 0], [2, 1])])
        self.lbg = lbgs.build_lbg(self.graph)
        self.query = gcs.Query([0.5, 0.5], [1.5, 0.5])
        self.config = search.PlannerConfig(weights=LENGTH_ONLY)

    def testIxg(self):
        result = search.plan_ixg(self.graph, self.lbg, self.query,
                                 self.config)
        self.assertTrue(result)
        self.assertEqual(result.path, (1, 0, 2))
        self.assertAlmostEqual(result.cost, 1.0, places=5)
        self.assertValid(result.trajectory, gcs.wire_query(self.graph,
                                                           self.query),
                         query=self.query)
        self.assertIsNone(result.stats.certificate)
        self.assertIsNone(exportable.todict(result.stats)["certificate"])

    def testIxgStar(self):
        result = search.plan_ixg_star(self.graph, self.lbg, self.query,
                                      self.config)
        self.assertTrue(result)
        self.assertEqual(result.path, (1, 0, 2))
        self.assertAlmostEqual(result.cost, 1.0, places=5)
        self.assertTrue(result.stats.own_optimized_edges <= 3)
        self.assertEqual(result.stats.ub_optimized_edges, 2)
        self.assertEqual(result.stats.total_reexpansions, 0)
        self.assertAlmostEqual(result.stats.certificate, 1.0, places=6)

    def testSamePoint(self):
        query = gcs.Query([0.5, 0.5], [0.5, 0.5])
        result = search.plan_ixg_star(self.graph, self.lbg, query,
                                      self.config)
        self.assertTrue(result)
        self.assertAlmostEqual(result.cost, 0.0, places=5)


class FailureTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph([testlib.box([0, 0], [1, 1]),
                                      testlib.box([3, 0], [4, 1])])
        self.query = gcs.Query([0.5, 0.5], [3.5, 0.5])

    def testDisconnected(self):
        lbg = lbgs.build_lbg(self.graph)
        for planner in (search.plan_ixg, search.plan_ixg_star):
            result = planner(self.graph, lbg, self.query)
            self.assertFalse(result)
            self.assertEqual(result.status, search.INFEASIBLE)
            self.assertIsNone(result.trajectory)

            # Without the heuristic the search proves it the hard way.
            result = planner(self.graph, None, self.query)
            self.assertEqual(result.status, search.INFEASIBLE)

    def testReconstruct(self):
        result = search.plan_ixg_star(self.graph, None, self.query)
        with self.assertRaises(errors.IxgStateError):
            search.reconstruct(result)

    def testOutsideCover(self):
        with self.assertRaises(errors.IxgQueryOutsideCoverError):
            search.plan_ixg_star(self.graph, None,
                                 gcs.Query([2, 0.5], [0.5, 0.5]))

    def testWiredForAnotherQuery(self):
        wired = gcs.wire_query(self.graph, self.query)
        with self.assertRaises(errors.IxgStateError):
            search.plan_ixg(wired, None, gcs.Query([0.5, 0.5], [0.6, 0.5]))

        # The wired query itself is fine.
        self.assertEqual(search.plan_ixg(wired, None, None).status,
                         search.INFEASIBLE)

    def testBoundaryVelocity(self):
        graph = gcs.build_graph([testlib.box([0, 0], [1, 1])])
        query = gcs.Query([0.5, 0.5], [0.6, 0.5], start_velocity=[2, 0])
        config = search.PlannerConfig(
            velocity_set=geometry.VelocitySet(1.0, dim=2))
        with self.assertRaises(errors.IxgArgumentError):
            search.plan_ixg_star(graph, None, query, config)


class ChainTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph(testlib.chain_world())
        self.lbg = lbgs.build_lbg(self.graph)
        self.query = gcs.Query([0.5, 0.5], [4.5, 0.5])

    def testStraightLine(self):
        config = search.PlannerConfig(weights=LENGTH_ONLY)
        for planner in (search.plan_ixg, search.plan_ixg_star):
            result = planner(self.graph, self.lbg, self.query, config)
            self.assertAlmostEqual(result.cost, 4.0, places=4)
            self.assertEqual(result.path, (3, 0, 1, 2, 4))

            path, trajectory = search.reconstruct(result)
            self.assertEqual(path, [3, 0, 1, 2, 4])
            self.assertEqual(trajectory.set_ids, [0, 1, 2])
            self.assertPointsAlmostEqual(trajectory.start, [0.5, 0.5])
            self.assertPointsAlmostEqual(trajectory.end, [4.5, 0.5])

    def testBudget(self):
        config = search.PlannerConfig(max_expansions=1)
        for planner in (search.plan_ixg, search.plan_ixg_star):
            result = planner(self.graph, self.lbg, self.query, config)
            self.assertFalse(result)
            self.assertEqual(result.status, search.BUDGET_EXHAUSTED)
            self.assertIsNone(result.trajectory)

    def testTimeBudget(self):
        config = search.PlannerConfig(max_time=0.0, use_upper_bound=False)
        result = search.plan_ixg_star(self.graph, self.lbg, self.query,
                                      config)
        self.assertEqual(result.status, search.BUDGET_EXHAUSTED)

    def testTrace(self):
        lines = []

        class _Handler(logging.Handler):
            def emit(self, record):
                lines.append(record.getMessage())

        handler = _Handler()
        search.TRACE.addHandler(handler)
        search.TRACE.setLevel(logging.INFO)
        try:
            result = search.plan_ixg_star(self.graph, self.lbg, self.query)
        finally:
            search.TRACE.removeHandler(handler)
            search.TRACE.setLevel(logging.NOTSET)

        self.assertTrue(result)
        self.assertTrue(lines)
        self.assertTrue(all(line.startswith("key=") for line in lines))
        self.assertTrue(lines[-1].endswith("path=3 0 1 2"))

    def testStatsExport(self):
        result = search.plan_ixg_star(self.graph, self.lbg, self.query)
        data = exportable.todict(result)
        self.assertEqual(data["algorithm"], "ixgstar")
        self.assertEqual(data["status"], search.SOLVED)
        self.assertEqual(data["path"], [3, 0, 1, 2, 4])
        self.assertEqual(data["stats"]["expansions"],
                         result.stats.expansions)
        self.assertEqual(data["stats"]["visit_budget"], 1)


class DiamondTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph(testlib.diamond_world())
        self.lbg = lbgs.build_lbg(self.graph, weights=LENGTH_ONLY)
        self.config = search.PlannerConfig(weights=LENGTH_ONLY)
        self.truth = oracle.oracle_enumerate(self.graph, diamond_query(),
                                             config=self.config)

    def testOptimal(self):
        result = search.plan_ixg_star(self.graph, self.lbg, diamond_query(),
                                      self.config)
        self.assertRelativelyClose(result.cost, self.truth.cost)
        self.assertEqual(result.path, self.truth.path)

    def testIxgNeverBeatsOracle(self):
        result = search.plan_ixg(self.graph, self.lbg, diamond_query(),
                                 self.config)
        self.assertTrue(result)
        self.assertTrue(result.cost >= self.truth.cost - 1e-5)

    def testEpsilonBound(self):
        for epsilon in (1.5, 2.0, 5.0):
            config = self.config.copy(epsilon=epsilon)
            result = search.plan_ixg_star(self.graph, self.lbg,
                                          diamond_query(), config)
            self.assertTrue(result.cost <=
                            epsilon * self.truth.cost * (1 + 1e-5))
            self.assertTrue(1.0 - 1e-6 <= result.stats.certificate <=
                            epsilon + 1e-6)

    def testEager(self):
        result = search.plan_ixg_star(self.graph, self.lbg, diamond_query(),
                                      self.config.copy(lazy=False))
        self.assertRelativelyClose(result.cost, self.truth.cost)

    def testBatch(self):
        config = self.config.copy(batch_size=3, workers=2)
        result = search.plan_ixg_star(self.graph, self.lbg, diamond_query(),
                                      config)
        self.assertRelativelyClose(result.cost, self.truth.cost)

    def testNoUpperBound(self):
        config = self.config.copy(use_upper_bound=False)
        result = search.plan_ixg_star(self.graph, self.lbg, diamond_query(),
                                      config)
        self.assertRelativelyClose(result.cost, self.truth.cost)
        self.assertEqual(result.stats.ub_optimized_edges, 0)
        self.assertEqual(result.stats.upper_bound, search.INFINITY)

    def testPaperUpperBound(self):
        config = self.config.copy(epsilon=2.0,
                                  upper_bound_mode=search.UPPER_BOUND_PAPER)
        with self.assertLogs("ixg.search", level="WARNING"):
            result = search.plan_ixg_star(self.graph, self.lbg,
                                          diamond_query(), config)
        self.assertTrue(result.cost <= 4.0 * self.truth.cost * (1 + 1e-5))

    def testNoHeuristic(self):
        result = search.plan_ixg_star(self.graph, None, diamond_query(),
                                      self.config)
        self.assertRelativelyClose(result.cost, self.truth.cost)


class MarkovTest(testlib.IxgTestCase):
    """The cheapest trajectory into X is not the prefix of the cheapest
    trajectory through X, which fools a CLOSED set."""

    def setUp(self):
        self.graph = gcs.build_graph(testlib.markov_world())

    def testIxgCommitsToTheWrongPrefix(self):
        result = search.plan_ixg(self.graph, None, testlib.markov_query(),
                                 markov_config())
        self.assertTrue(result)
        # Through A: straight to the corner (2, 0.5), then up to the goal.
        expected = math.hypot(2, 0.5) + math.hypot(0.5, 8.5)
        self.assertRelativelyClose(result.cost, expected)
        self.assertEqual(result.path, (4, 0, 2, 1, 5))

    def testIxgStarFindsTheDetour(self):
        ixg = search.plan_ixg(self.graph, None, testlib.markov_query(),
                              markov_config())
        ixg_star = search.plan_ixg_star(self.graph, None,
                                        testlib.markov_query(),
                                        markov_config())
        truth = oracle.oracle_enumerate(self.graph, testlib.markov_query(),
                                        config=markov_config())

        self.assertEqual(ixg_star.path, (4, 0, 3, 1, 5))
        self.assertTrue(ixg_star.cost < ixg.cost - 0.5)
        self.assertRelativelyClose(ixg_star.cost, truth.cost)

    def testScaledWeightsExpandInTheSameOrder(self):
        weights = traj.CostWeights(a=1, b=0.5)
        runs = []
        for scale in (1.0, 0.5, 3.0):
            scaled = weights.scaled(scale)
            lbg = lbgs.build_lbg(self.graph, weights=scaled)
            config = search.PlannerConfig(order=1, weights=scaled, epsilon=2)
            runs.append((scale, search.plan_ixg_star(
                self.graph, lbg, testlib.markov_query(), config)))

        _, base = runs[0]
        self.assertTrue(base)
        self.assertTrue(base.stats.expansion_log)
        for scale, result in runs[1:]:
            self.assertEqual(result.stats.expansion_log,
                             base.stats.expansion_log)
            self.assertEqual(result.path, base.path)
            self.assertRelativelyClose(result.cost, scale * base.cost)


class StalledSolverTest(testlib.IxgTestCase):
    """The 'stalling' backend gives up on every route through B."""

    def setUp(self):
        self.graph = gcs.build_graph(testlib.markov_world())
        self.query = testlib.markov_query()
        self.through_a = math.hypot(2, 0.5) + math.hypot(0.5, 8.5)

    def testIxgStarDropsStalledPaths(self):
        config = markov_config(backend="stalling")
        with self.assertLogs("ixg.search", level="WARNING"):
            result = search.plan_ixg_star(self.graph, None, self.query,
                                          config)

        self.assertTrue(result)
        self.assertEqual(result.path, (4, 0, 2, 1, 5))
        self.assertRelativelyClose(result.cost, self.through_a)
        self.assertTrue(result.stats.stalled >= 1)
        self.assertEqual(exportable.todict(result.stats)["stalled"],
                         result.stats.stalled)

    def testOracleDropsStalledPaths(self):
        result = oracle.oracle_enumerate(
            self.graph, self.query, config=markov_config(backend="stalling"))
        self.assertEqual(result.status, search.SOLVED)
        self.assertNotIn(3, result.path)
        self.assertRelativelyClose(result.cost, self.through_a)
        self.assertTrue(result.stats.stalled >= 1)

    def testEverythingStalls(self):
        config = markov_config(backend="always_stalling")
        runs = (lambda: search.plan_ixg(self.graph, None, self.query, config),
                lambda: search.plan_ixg_star(self.graph, None, self.query,
                                             config),
                lambda: oracle.oracle_enumerate(self.graph, self.query,
                                                config=config))
        for run in runs:
            with self.assertLogs("ixg.search", level="WARNING"):
                result = run()
            self.assertFalse(result)
            self.assertEqual(result.status, search.SOLVER_STALLED)
            self.assertTrue(result.stats.stalled > 0)
            self.assertIsNone(result.trajectory)


class RevisitTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph(worlds.generate_revisit_world())
        self.query = worlds.revisit_query()

    def testNeedsCycles(self):
        config = revisit_config()
        self.assertEqual(
            search.plan_ixg(self.graph, None, self.query, config).status,
            search.INFEASIBLE)
        self.assertEqual(
            search.plan_ixg_star(self.graph, None, self.query, config).status,
            search.INFEASIBLE)

    def testCycles(self):
        config = revisit_config(allow_cycles=True, max_visits_per_vertex=2)
        result = search.plan_ixg_star(self.graph, None, self.query, config)
        self.assertTrue(result)
        sets = [v for v in result.path if v < 4]
        self.assertEqual(sets.count(0), 2)
        self.assertValid(result.trajectory,
                         gcs.wire_query(self.graph, self.query),
                         velocity_set=config.velocity_set, query=self.query)

    def testEscalation(self):
        config = revisit_config(allow_cycles=True, max_visits_per_vertex=1,
                                escalate_cycles=True)
        result = search.plan_ixg_star(self.graph, None, self.query, config)
        self.assertTrue(result)
        self.assertEqual(result.stats.visit_budget, 2)

        capped = config.copy(max_visits_cap=1)
        self.assertEqual(
            search.plan_ixg_star(self.graph, None, self.query, capped).status,
            search.INFEASIBLE)
