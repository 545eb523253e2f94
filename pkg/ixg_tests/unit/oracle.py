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

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import oracle
from ixg import search
from ixg import trajectory as traj
from ixg import worlds

from ixg_tests import testlib


LENGTH_ONLY = traj.CostWeights(a=1, b=0)


class EnumeratePathsTest(testlib.IxgTestCase):
    def testDiamond(self):
        graph = gcs.build_graph(testlib.diamond_world())
        paths = oracle.enumerate_paths(graph, 0, [4])
        self.assertEqual(sorted(paths), [(0, 1, 4), (0, 2, 3, 4)])

    def testVisits(self):
        graph = gcs.build_graph(testlib.chain_world())
        self.assertEqual(oracle.enumerate_paths(graph, 0, [2]), [(0, 1, 2)])

        # A second visit allows bouncing between neighbors.
        paths = oracle.enumerate_paths(graph, 0, [2], max_visits=2)
        self.assertIn((0, 1, 0, 1, 2), paths)
        self.assertIn((0, 1, 2), paths)
        for path in paths:
            for v in set(path):
                self.assertTrue(path.count(v) <= 2)

    def testSkip(self):
        graph = gcs.build_graph(testlib.diamond_world())
        self.assertEqual(oracle.enumerate_paths(graph, 0, [4], skip=[1]),
                         [(0, 2, 3, 4)])

    def testCap(self):
        graph = gcs.build_graph(worlds.generate_maze(3, 3, seed=0))
        with self.assertRaises(errors.IxgOracleTooLargeError,
                               lambda e: e.cap == 3):
            oracle.enumerate_paths(graph, 0, [8], max_visits=3, path_cap=3)

        with self.assertRaises(errors.IxgArgumentError):
            oracle.enumerate_paths(graph, 0, [8], max_visits=0)


class OracleEnumerateTest(testlib.IxgTestCase):
    def testSingleRoute(self):
        graph = gcs.build_graph(testlib.chain_world())
        config = search.PlannerConfig(weights=LENGTH_ONLY)
        result = oracle.oracle_enumerate(
            graph, gcs.Query([0.5, 0.5], [4.5, 0.5]), config=config)
        self.assertTrue(result)
        self.assertEqual(result.algorithm, "oracle")
        self.assertEqual(result.path, (3, 0, 1, 2, 4))
        self.assertAlmostEqual(result.cost, 4.0, places=4)
        self.assertEqual(result.stats.expansions, 1)

    def testDiamond(self):
        graph = gcs.build_graph(testlib.diamond_world())
        config = search.PlannerConfig(weights=LENGTH_ONLY)
        query = gcs.Query([0.5, 0.5], [2.5, 4.5])
        result = oracle.oracle_enumerate(graph, query, config=config)
        self.assertEqual(result.stats.expansions, 2)

        wired = gcs.wire_query(graph, query)
        costs = []
        for path in oracle.enumerate_paths(wired, wired.start_id,
                                           [wired.goal_id],
                                           skip=[wired.start_id]):
            _, g = search.start_context(
                wired, None, None, config).evaluate(path, None)
            costs.append(g)
        self.assertAlmostEqual(result.cost, min(costs), places=6)

    def testRevisit(self):
        graph = gcs.build_graph(worlds.generate_revisit_world())
        config = search.PlannerConfig(
            order=3, continuity=1,
            velocity_set=geometry.VelocitySet(worlds.REVISIT_VMAX, dim=2))
        query = worlds.revisit_query()

        once = oracle.oracle_enumerate(graph, query, max_visits=1,
                                       config=config)
        self.assertEqual(once.status, search.INFEASIBLE)

        twice = oracle.oracle_enumerate(graph, query, max_visits=2,
                                        config=config)
        self.assertTrue(twice)
        self.assertEqual(twice.stats.visit_budget, 2)

        ixg_star = search.plan_ixg_star(
            graph, None, query,
            config.copy(allow_cycles=True, max_visits_per_vertex=2))
        self.assertRelativelyClose(ixg_star.cost, twice.cost, rel=1e-3)

    def testMemo(self):
        graph = gcs.build_graph(testlib.diamond_world())
        wired = gcs.wire_query(graph, gcs.Query([0.5, 0.5], [2.5, 4.5]))
        memo = {}
        first = oracle.oracle_enumerate(wired, None, memo=memo)
        self.assertEqual(len(memo), 2)
        second = oracle.oracle_enumerate(wired, None, memo=memo)
        self.assertEqual(second.stats.optimized_edges, 0)
        self.assertEqual(first.cost, second.cost)

    def testTooLarge(self):
        graph = gcs.build_graph(testlib.diamond_world())
        with self.assertRaises(errors.IxgOracleTooLargeError):
            oracle.oracle_enumerate(graph, gcs.Query([0.5, 0.5], [2.5, 4.5]),
                                    path_cap=1)


class PairOracleTest(testlib.IxgTestCase):
    def testLowerBound(self):
        graph = gcs.build_graph(testlib.diamond_world())
        config = search.PlannerConfig(weights=LENGTH_ONLY)
        lbg = lbgs.build_lbg(graph, weights=LENGTH_ONLY)
        for source in graph.set_ids:
            for target in graph.set_ids:
                bound = lbgs.pair_lower_bound(lbg, source, target)
                truth = oracle.pair_oracle(graph, source, target,
                                           config=config)
                if source == target:
                    self.assertEqual(truth, 0.0)
                    continue
                self.assertTrue(bound <= truth + 1e-6,
                                "%d -> %d: %r > %r" % (source, target,
                                                       bound, truth))

    def testChain(self):
        graph = gcs.build_graph(testlib.chain_world())
        config = search.PlannerConfig(weights=LENGTH_ONLY)
        # A and C are 1 apart across B.
        self.assertAlmostEqual(oracle.pair_oracle(graph, 0, 2, config=config),
                               1.0, places=4)
        self.assertAlmostEqual(oracle.pair_oracle(graph, 0, 1, config=config),
                               0.0, places=4)

    def testStalledPath(self):
        # S to X through B stalls; through A it's 1 across A.
        graph = gcs.build_graph(testlib.markov_world())
        config = search.PlannerConfig(weights=LENGTH_ONLY, backend="stalling")
        with self.assertLogs("ixg.oracle", level="WARNING"):
            cost = oracle.pair_oracle(graph, 0, 1, config=config)
        self.assertAlmostEqual(cost, 1.0, places=4)
